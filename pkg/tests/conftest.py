"""Echo the acceptance scoreboard into the terminal summary."""

import sys


def pytest_terminal_summary(terminalreporter):
    mod = (sys.modules.get("tests.test_acceptance")
           or sys.modules.get("test_acceptance"))
    lines = getattr(mod, "RESULT_LINES", ())
    if not lines:
        return
    terminalreporter.section("acceptance scoreboard")
    for line in lines:
        terminalreporter.write_line(line)
