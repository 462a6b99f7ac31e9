import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.TITLES):
        if number in module.RESULTS:
            passed, detail = module.RESULTS[number]
            status = "PASS" if passed else "FAIL"
        else:
            status, detail = "FAIL", "not run"
        terminalreporter.write_line(f"[{status}] criterion {number}: {module.TITLES[number]} ({detail})")
