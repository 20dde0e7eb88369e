import criteria_log


def pytest_terminal_summary(terminalreporter):
    if not criteria_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(criteria_log.RESULTS, key=lambda k: int(k)):
        terminalreporter.write_line(criteria_log.RESULTS[key])
