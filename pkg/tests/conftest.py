import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

# brute-force oracles are slow by design; timing is not what these tests measure
settings.register_profile("psilab", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("psilab")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
