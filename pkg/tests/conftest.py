import os
from collections import OrderedDict

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# criterion number -> list of (check name, passed, detail)
ACCEPTANCE = OrderedDict()


@pytest.fixture
def record():
    def _record(criterion: int, check: str, passed: bool, detail: str = "") -> bool:
        ACCEPTANCE.setdefault(criterion, []).append((check, bool(passed), detail))
        status = "PASS" if passed else "FAIL"
        print(f"criterion {criterion} [{check}]: {status} {detail}".rstrip())
        return bool(passed)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        checks = ACCEPTANCE[criterion]
        ok = all(passed for _, passed, _ in checks)
        parts = "; ".join(f"{name}={'ok' if passed else 'FAILED'}"
                          + (f" ({detail})" if detail else "") for name, passed, detail in checks)
        tr.write_line(f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {parts}")
