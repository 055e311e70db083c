def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance pass/fail lines after capture ends."""
    try:
        from test_acceptance import REPORT_LINES
    except ImportError:
        return
    if REPORT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in REPORT_LINES:
            terminalreporter.write_line(line)
