"""Shared pytest plumbing: the acceptance suite reports one line per criterion."""

acceptance_log: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_log:
        terminalreporter.write_line(line)
