import re
from collections import defaultdict


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    del exitstatus, config
    buckets = defaultdict(lambda: {"passed": 0, "failed": 0})
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            match = re.search(r"test_acceptance\.py::test_(c\d+)", report.nodeid)
            if not match:
                continue
            key = match.group(1)
            buckets[key]["failed" if status != "passed" else "passed"] += 1
    if not buckets:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for key in sorted(buckets, key=lambda k: int(k[1:])):
        counts = buckets[key]
        verdict = "PASS" if counts["failed"] == 0 else "FAIL"
        terminalreporter.write_line(
            f"criterion {key[1:]:>2s}: {verdict}  "
            f"({counts['passed']} passed, {counts['failed']} failed)"
        )
