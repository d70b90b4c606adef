import math

import pytest
from hypothesis import given

from conftest import assert_scalar_close, assert_vec_close, coords, points, vec3s
from screwalg import ORIGIN, Mat3, Point, Vec3


@given(vec3s, vec3s)
def test_dot_symmetric(u, v):
    assert_scalar_close(u.dot(v), v.dot(u))


@given(vec3s, vec3s)
def test_cross_antisymmetric(u, v):
    assert_vec_close(u.cross(v), -(v.cross(u)))


@given(vec3s, vec3s)
def test_cross_orthogonal_to_factors(u, v):
    w = u.cross(v)
    assert abs(w.dot(u)) <= 1e-12 * max(1.0, u.norm() ** 2 * v.norm())
    assert abs(w.dot(v)) <= 1e-12 * max(1.0, v.norm() ** 2 * u.norm())


@given(vec3s, vec3s, vec3s)
def test_scalar_triple_product_cyclic(u, v, w):
    assert_scalar_close(u.dot(v.cross(w)), w.dot(u.cross(v)), tol=1e-12)


def test_norm_examples():
    assert Vec3(3.0, 4.0, 0.0).norm() == 5.0
    assert Vec3.zero().norm() == 0.0
    with pytest.raises(ValueError):
        Vec3.zero().normalized()


@given(points, vec3s)
def test_point_displacement_round_trip(p, d):
    assert_vec_close((p + d) - p, d)


def test_points_do_not_add():
    with pytest.raises(TypeError):
        Point(1.0, 0.0, 0.0) + Point(0.0, 1.0, 0.0)  # type: ignore[operator]


def test_nonfinite_rejected():
    with pytest.raises(ValueError):
        Vec3(float("nan"), 0.0, 0.0)
    with pytest.raises(ValueError):
        Point(0.0, float("inf"), 0.0)
    with pytest.raises(ValueError):
        Mat3(*([0.0] * 8), float("-inf"))


@given(vec3s, vec3s)
def test_cross_matrix_is_cross_product(v, u):
    assert_vec_close(Mat3.cross_matrix(v).matvec(u), v.cross(u))


@given(vec3s, vec3s, vec3s)
def test_outer_matvec(u, v, w):
    assert_vec_close(Mat3.outer(u, v).matvec(w), u * v.dot(w), tol=1e-12)


@given(vec3s, vec3s, vec3s)
def test_from_rows_columns_agree(r0, r1, r2):
    assert Mat3.from_rows(r0, r1, r2) == Mat3.from_columns(r0, r1, r2).transpose()


@given(vec3s, vec3s, vec3s, vec3s)
def test_matmul_matches_composed_matvec(a0, a1, a2, w):
    a = Mat3.from_rows(a0, a1, a2)
    b = Mat3.from_columns(a1, a2, a0)
    assert_vec_close(a.matmul(b).matvec(w), a.matvec(b.matvec(w)), tol=1e-12)


def test_identity_and_trace():
    assert Mat3.identity().matvec(Vec3(1.0, 2.0, 3.0)) == Vec3(1.0, 2.0, 3.0)
    assert Mat3.identity().trace() == 3.0
    assert Mat3.identity().det() == 1.0
    assert Mat3.identity().orthonormality_defect() == 0.0


@given(vec3s)
def test_cross_matrix_antisymmetric_zero_trace(v):
    k = Mat3.cross_matrix(v)
    assert k.trace() == 0.0
    assert (k + k.transpose()).max_abs() == 0.0


def test_row_column_access():
    m = Mat3(1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0)
    assert m.row(1) == Vec3(4.0, 5.0, 6.0)
    assert m.column(2) == Vec3(3.0, 6.0, 9.0)
    assert m.flat() == (1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0)


def test_origin_is_zero_point():
    assert ORIGIN.components() == (0.0, 0.0, 0.0)
    assert math.isclose((Point(1.0, 1.0, 1.0) - ORIGIN).norm(), math.sqrt(3.0))
