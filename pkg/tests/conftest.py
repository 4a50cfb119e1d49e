import os
import sys
import time

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def words(max_len=8, max_index=4, positive=False):
    letter = st.integers(1, max_index)
    if not positive:
        letter = st.builds(lambda i, s: i * s, letter, st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_len).map(tuple)


ACCEPTANCE: dict[int, tuple[str, float, str]] = {}


@pytest.fixture
def criterion(request):
    """Time an acceptance criterion and record PASS/FAIL for the summary."""

    class Recorder:
        def __init__(self):
            self.number = None

        def __call__(self, number, title, limit):
            self.number, self.title, self.limit = number, title, limit
            self.start = time.perf_counter()
            return self

        def finish(self):
            elapsed = time.perf_counter() - self.start
            assert elapsed < self.limit, f"took {elapsed:.1f}s, limit {self.limit}s"
            return elapsed

    rec = Recorder()
    yield rec
    if rec.number is not None:
        failed = getattr(request.node, "rep_call", None)
        status = "PASS" if failed is not None and failed.passed else "FAIL"
        elapsed = time.perf_counter() - rec.start
        ACCEPTANCE[rec.number] = (status, elapsed, rec.title)


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, elapsed, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  ({elapsed:6.2f}s)  {title}")
