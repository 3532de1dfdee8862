import sys

from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def pytest_terminal_summary(terminalreporter):
    # surface the per-criterion summary lines collected by test_acceptance
    for name in ("tests.test_acceptance", "test_acceptance"):
        module = sys.modules.get(name)
        lines = getattr(module, "CRITERION_LINES", None) if module else None
        if lines:
            terminalreporter.section("acceptance criteria")
            for line in lines:
                terminalreporter.write_line(line)
            break
