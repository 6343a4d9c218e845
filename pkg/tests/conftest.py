# collects the acceptance verdict lines so the terminal summary shows them
# even when output capture is active
VERDICT_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if VERDICT_LINES:
        terminalreporter.section("acceptance verdicts")
        for line in VERDICT_LINES:
            terminalreporter.write_line(line)
