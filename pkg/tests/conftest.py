import contextlib
import os

import pytest
from hypothesis import HealthCheck, settings

# derandomized so that repeated runs are byte-for-byte reproducible
settings.register_profile(
    "repro",
    derandomize=True,
    deadline=None,
    max_examples=int(os.environ.get("ORDALIB_HYPOTHESIS_EXAMPLES", "60")),
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")


_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Context manager factory that records a PASS or FAIL line for one acceptance criterion."""
    results = request.config.stash.setdefault(_ACCEPTANCE, {})

    @contextlib.contextmanager
    def check(number: int, title: str):
        try:
            yield
        except BaseException:
            results[number] = f"FAIL criterion {number}: {title}"
            print(results[number])
            raise
        if not results.get(number, "").startswith("FAIL"):
            results[number] = f"PASS criterion {number}: {title}"
        print(f"PASS criterion {number}: {title}")

    return check


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_ACCEPTANCE, {})
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
