import helpers


def pytest_terminal_summary(terminalreporter):
    if getattr(helpers, "ACCEPTANCE_LINES", None):
        terminalreporter.section("acceptance criteria")
        for line in helpers.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
