# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for immutable model values.

Same representation and surface as `_ops_pure`; see that module's docstring for
the value encoding. Keep the two in lockstep.
"""

from mbcheck.errors import ModelEvalError

BOOL = "b"
INT = "i"
ATOM = "a"
OID = "o"
SEQ = "q"
SET = "s"
BAG = "g"
MAP = "m"

TRUE = (BOOL, True)
FALSE = (BOOL, False)
EMPTY_SEQ = (SEQ, ())

cdef dict _INT_CACHE = {i: (INT, i) for i in range(-16, 65)}

cdef str _BOOL = BOOL
cdef str _INT = INT
cdef str _ATOM = ATOM
cdef str _OID = OID
cdef str _SEQ = SEQ
cdef str _SET = SET
cdef str _BAG = BAG
cdef str _MAP = MAP
cdef tuple _TRUE = TRUE
cdef tuple _FALSE = FALSE
cdef tuple _EMPTY_SEQ = EMPTY_SEQ


# --- constructors ---------------------------------------------------------


def boolean(x):
    return _TRUE if x else _FALSE


def integer(x):
    v = _INT_CACHE.get(x)
    if v is not None:
        return v
    return (_INT, int(x))


def atom(x):
    """Opaque element value; equality and hashing are the payload's own."""
    hash(x)  # not storable otherwise
    return (_ATOM, x)


def object_id(token):
    if token < 0:
        raise ModelEvalError("object token must be >= 0")
    return (_OID, token)


def sequence(items):
    return (_SEQ, tuple(items))


def mset(items):
    return (_SET, frozenset(items))


def bag_of(items):
    cdef dict counts = {}
    for v in items:
        counts[v] = counts.get(v, 0) + 1
    return (_BAG, frozenset(counts.items()))


def bag_from_counts(pairs):
    cdef dict counts = {}
    for v, n in pairs:
        if n <= 0:
            raise ModelEvalError("bag multiplicity must be positive")
        counts[v] = counts.get(v, 0) + n
    return (_BAG, frozenset(counts.items()))


def mmap(pairs):
    return (_MAP, frozenset(dict(pairs).items()))


# --- variant access -------------------------------------------------------


def kind(tuple v):
    return v[0]


def as_bool(tuple v):
    if v[0] is not _BOOL and v[0] != _BOOL:
        raise ModelEvalError("not a boolean value: %r" % (v,))
    return v[1]


def as_int(tuple v):
    if v[0] is not _INT and v[0] != _INT:
        raise ModelEvalError("not an integer value: %r" % (v,))
    return v[1]


def oid_token(tuple v):
    if v[0] is not _OID and v[0] != _OID:
        raise ModelEvalError("not an object id: %r" % (v,))
    return v[1]


# --- sequences ------------------------------------------------------------


def seq_count(tuple s):
    return len(<tuple> s[1])


def seq_is_empty(tuple s):
    return not (<tuple> s[1])


def seq_item(tuple s, i):
    cdef tuple items = <tuple> s[1]
    cdef Py_ssize_t n = len(items)
    cdef Py_ssize_t pos = i
    if pos < 1 or pos > n:
        raise ModelEvalError("sequence position %d outside 1..%d" % (pos, n))
    return items[pos - 1]


def seq_last(tuple s):
    cdef tuple items = <tuple> s[1]
    if not items:
        raise ModelEvalError("last of empty sequence")
    return items[len(items) - 1]


def seq_has(tuple s, v):
    return v in (<tuple> s[1])


def seq_items(tuple s):
    return s[1]


def seq_front(tuple s, i):
    cdef tuple items = <tuple> s[1]
    cdef Py_ssize_t pos = i
    if pos <= 0:
        return _EMPTY_SEQ
    if pos >= len(items):
        return s
    return (_SEQ, items[:pos])


def seq_tail(tuple s, i):
    cdef tuple items = <tuple> s[1]
    cdef Py_ssize_t pos = i
    if pos <= 1:
        return s
    if pos > len(items):
        return _EMPTY_SEQ
    return (_SEQ, items[pos - 1:])


def seq_concat(tuple a, tuple b):
    if not (<tuple> a[1]):
        return b
    if not (<tuple> b[1]):
        return a
    return (_SEQ, (<tuple> a[1]) + (<tuple> b[1]))


def seq_extended(tuple s, v):
    return (_SEQ, (<tuple> s[1]) + (v,))


def seq_replaced_at(tuple s, i, v):
    cdef tuple items = <tuple> s[1]
    cdef Py_ssize_t n = len(items)
    cdef Py_ssize_t pos = i
    if pos < 1 or pos > n:
        raise ModelEvalError("sequence position %d outside 1..%d" % (pos, n))
    return (_SEQ, items[: pos - 1] + (v,) + items[pos:])


def seq_removed_at(tuple s, i):
    cdef tuple items = <tuple> s[1]
    cdef Py_ssize_t n = len(items)
    cdef Py_ssize_t pos = i
    if pos < 1 or pos > n:
        raise ModelEvalError("sequence position %d outside 1..%d" % (pos, n))
    return (_SEQ, items[: pos - 1] + items[pos:])


def seq_domain(tuple s):
    cdef Py_ssize_t n = len(<tuple> s[1])
    cdef Py_ssize_t i
    cdef list out = []
    for i in range(1, n + 1):
        v = _INT_CACHE.get(i)
        out.append(v if v is not None else (_INT, i))
    return (_SET, frozenset(out))


def seq_to_bag(tuple s):
    cdef dict counts = {}
    for v in <tuple> s[1]:
        counts[v] = counts.get(v, 0) + 1
    return (_BAG, frozenset(counts.items()))


def seq_to_set(tuple s):
    return (_SET, frozenset(<tuple> s[1]))


# --- sets -----------------------------------------------------------------


def set_count(tuple s):
    return len(<frozenset> s[1])


def set_has(tuple s, v):
    return v in (<frozenset> s[1])


def set_extended(tuple s, v):
    cdef frozenset items = <frozenset> s[1]
    if v in items:
        return s
    return (_SET, items | {v})


def set_removed(tuple s, v):
    cdef frozenset items = <frozenset> s[1]
    if v not in items:
        return s
    return (_SET, items - {v})


# --- bags -----------------------------------------------------------------


def bag_count(tuple b):
    cdef Py_ssize_t total = 0
    for _, n in <frozenset> b[1]:
        total += <Py_ssize_t> n
    return total


def bag_occurrences(tuple b, v):
    for item, n in <frozenset> b[1]:
        if item == v:
            return n
    return 0


# --- maps -----------------------------------------------------------------


def map_count(tuple m):
    return len(<frozenset> m[1])


def map_domain(tuple m):
    return (_SET, frozenset([k for k, _ in <frozenset> m[1]]))


def map_has(tuple m, k):
    for key, _ in <frozenset> m[1]:
        if key == k:
            return True
    return False


def map_item(tuple m, k):
    for key, v in <frozenset> m[1]:
        if key == k:
            return v
    raise ModelEvalError("key %r not in map domain" % (k,))


def map_updated(tuple m, k, v):
    cdef dict d = dict(<frozenset> m[1])
    d[k] = v
    return (_MAP, frozenset(d.items()))


def map_removed(tuple m, k):
    cdef dict d = dict(<frozenset> m[1])
    d.pop(k, None)
    return (_MAP, frozenset(d.items()))
