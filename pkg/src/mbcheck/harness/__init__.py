from mbcheck.harness.session import FaultRecord, SessionConfig, SessionResult, run_session
from mbcheck.harness.reports import read_report, render_report, write_report
from mbcheck.harness.compare import compare_reports

__all__ = [
    "FaultRecord",
    "SessionConfig",
    "SessionResult",
    "run_session",
    "read_report",
    "render_report",
    "write_report",
    "compare_reports",
]
