"""Shared pytest wiring.

Collects the one-line acceptance verdicts emitted by test_acceptance.py
and replays them in the terminal summary so the pass/fail line for every
criterion is always visible, even when capture hides per-test stdout.
"""

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
