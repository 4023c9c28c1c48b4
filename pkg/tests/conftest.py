"""Shared pytest plumbing.

The acceptance tests record one pass/fail line per criterion; those lines
are echoed in the terminal summary so they remain visible under output
capture.
"""

ACCEPTANCE_LINES = []


def record_criterion(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    line = "criterion %2d (%s): %s%s" % (
        number, name, status, (" — " + detail) if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
