import re

_ACCEPTANCE = {}
_CRITERION_RE = re.compile(r"test_criterion_(\d+)[a-z]?_?(.*)")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _CRITERION_RE.search(report.nodeid)
    if not m:
        return
    number = int(m.group(1))
    label = m.group(2).strip("_") or "criterion"
    if hasattr(report, "wasxfail"):
        status = "KNOWN DEFECT (pinned)" if report.skipped or report.passed else "XPASS?!"
    else:
        status = "PASS" if report.passed else "FAIL"
    _ACCEPTANCE.setdefault(number, []).append((label, status))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tw = terminalreporter
    tw.ensure_newline()
    tw.section("acceptance criteria", sep="-")
    for number in sorted(_ACCEPTANCE):
        parts = _ACCEPTANCE[number]
        overall = "PASS"
        if any(s == "FAIL" for _, s in parts):
            overall = "FAIL"
        detail = "; ".join(f"{label}: {status}" for label, status in parts)
        tw.line(f"criterion {number:2d}: {overall}  ({detail})")
