import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, passed, elapsed, detail in sorted(acceptance.RESULTS):
        status = "PASS" if passed else "FAIL"
        line = f"criterion {num} {status} ({elapsed:.2f}s) {title}"
        if detail:
            line += f": {detail}"
        terminalreporter.write_line(line)
