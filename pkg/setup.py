"""Build script: compiles the optional value-kernel extension when Cython is around.

The package is fully functional without the extension; `mbcheck.values` falls back
to the pure-Python kernel at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/mbcheck/values/_ops_cy.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
