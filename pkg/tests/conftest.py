import sys


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(results, key=lambda t: int(t[2:])):
        terminalreporter.write_line(results[tag])
