import pytest

_acceptance: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and (report.when == "call" or report.failed):
        label = getattr(item.function, "criterion", item.name)
        if report.failed:
            _acceptance[label] = "FAIL"
        elif report.when == "call":
            _acceptance.setdefault(label, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{_acceptance[label]}  {label}")
