"""Shared hypothesis strategies and numeric assertion helpers.

Coordinates are drawn from a moderate box so that relative and absolute
tolerances mean the same thing; resultants used in exp/log tests are kept
away from zero and away from the angle-pi branch cut separately, in the
tests that care.
"""

import math
import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from screwalg import Frame, Point, Screw, Twist, Vec3

settings.register_profile(
    "fast",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.register_profile(
    "thorough",
    max_examples=400,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))


coords = st.floats(min_value=-4.0, max_value=4.0, allow_nan=False, allow_infinity=False)
small_params = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)

vec3s = st.builds(Vec3, coords, coords, coords)
points = st.builds(Point, coords, coords, coords)
nonzero_vec3s = vec3s.filter(lambda v: v.norm() > 1e-2)
unit_vec3s = nonzero_vec3s.map(lambda v: v.normalized())

screws = st.builds(Screw, vec3s, vec3s)
# Resultant bounded away from zero: these have a line axis and a finite pitch.
line_screws = st.builds(Screw, nonzero_vec3s, vec3s)
twists = st.builds(Twist, screws)


def _quat_to_frame(q: tuple, origin: Point) -> Frame:
    n = math.sqrt(sum(c * c for c in q))
    w, x, y, z = (c / n for c in q)
    e1 = Vec3(1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y + z * w), 2.0 * (x * z - y * w))
    e2 = Vec3(2.0 * (x * y - z * w), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z + x * w))
    e3 = Vec3(2.0 * (x * z + y * w), 2.0 * (y * z - x * w), 1.0 - 2.0 * (x * x + y * y))
    return Frame(origin, e1, e2, e3)


quaternions = st.tuples(coords, coords, coords, coords).filter(
    lambda q: sum(c * c for c in q) > 1e-2
)
frames = st.builds(_quat_to_frame, quaternions, points)


def assert_vec_close(a: Vec3, b: Vec3, tol: float = 1e-12, label: str = ""):
    scale = max(1.0, a.norm(), b.norm())
    err = (a - b).norm()
    assert err <= tol * scale, f"{label or 'vectors'}: {a} vs {b}, err {err:.3e} > {tol:.0e}*{scale:.2f}"


def assert_screw_close(s1: Screw, s2: Screw, tol: float = 1e-12, label: str = ""):
    assert_vec_close(s1.resultant, s2.resultant, tol, f"{label} resultant")
    assert_vec_close(s1.moment_at_origin, s2.moment_at_origin, tol, f"{label} moment")


def assert_scalar_close(a: float, b: float, tol: float = 1e-12, label: str = ""):
    scale = max(1.0, abs(a), abs(b))
    assert abs(a - b) <= tol * scale, f"{label or 'scalars'}: {a} vs {b} beyond {tol:.0e}"


# -- acceptance-criteria reporting -------------------------------------------
# test_acceptance records one line per criterion through the fixture below;
# the terminal-summary hook prints the collected table after the test run so
# the verdicts are visible even when every test passes.

_ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


@pytest.fixture
def record_criterion():
    def _record(number: int, name: str, ok: bool, detail: str = ""):
        _ACCEPTANCE_RESULTS.append((number, name, bool(ok), detail))

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(_ACCEPTANCE_RESULTS):
        verdict = "PASS" if ok else "FAIL"
        line = f"criterion {number:2d} {verdict}  {name}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
