import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from leibniz_lm.exactlin import GF, QQ

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

GF7 = GF(7)
FIELDS = [QQ, GF7]

_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")


@pytest.fixture(params=FIELDS, ids=lambda F: F.name)
def field(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marks = [m.args[0] for m in item.iter_markers("criterion")]
    if not marks:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        if hasattr(rep, "wasxfail"):
            state = "xfail" if rep.skipped else "xpass"
        else:
            state = rep.outcome
        for n in marks:
            _outcomes.setdefault(n, []).append((item.nodeid, state))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_outcomes):
        states = [s for _, s in _outcomes[n]]
        ok = all(s == "passed" for s in states)
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({states.count('passed')}/{len(states)} tests passed"
        known = [nid for nid, s in _outcomes[n] if s == "xfail"]
        if known:
            line += f", {len(known)} known failure(s): " + ", ".join(nid.split("::")[-1] for nid in known)
        tr.write_line(line + ")")
