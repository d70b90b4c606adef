"""Finite rigid motions and their correspondence with screws.

A screw, read as a velocity field, integrates to a one-parameter family of
rigid maps: rotation about the screw axis at the rate of the resultant,
drifting along the axis at the rate of the vector invariant.  ``exp_screw``
computes that flow in closed form; ``chasles`` inverts it, decomposing any
rigid map into a rotation about a line plus a slide along it.

The rotation part of a ``RigidMap`` is stored as a full 3x3 matrix and
validated on construction; it is never silently re-normalized, so numerical
drift surfaces as an error instead of a wrong answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidRotationError
from .screw import DegenerateAxis, LineAxis, Screw, ScrewAxis
from .vecmath import ORIGIN, Mat3, Point, Vec3

__all__ = ["RigidMap", "ChaslesDecomposition", "rodrigues", "exp_screw", "chasles"]

_ROTATION_TOL = 1e-10
# Below this rotation angle a rigid map is treated as a pure translation.
_ANGLE_EPS = 1e-8
# Within this of a half turn, extract the axis from the symmetric part of R.
_NEAR_PI = 1e-6


def rodrigues(axis: Vec3, angle: float) -> Mat3:
    """Rotation by ``angle`` about the unit vector ``axis``:
    R = I + sin(t) K + (1 - cos(t)) K^2 with K the cross matrix of the axis."""
    k = Mat3.cross_matrix(axis)
    k2 = k.matmul(k)
    return Mat3.identity() + math.sin(angle) * k + (1.0 - math.cos(angle)) * k2


@dataclass(frozen=True, slots=True)
class RigidMap:
    """Orientation-preserving isometry P -> O + R (P - O) + translation,
    with O the global origin."""

    rotation: Mat3
    translation: Vec3

    def __post_init__(self):
        if self.rotation.orthonormality_defect() > _ROTATION_TOL:
            raise InvalidRotationError(
                f"rotation block is not orthonormal within {_ROTATION_TOL}"
            )
        if abs(self.rotation.det() - 1.0) > _ROTATION_TOL:
            raise InvalidRotationError("rotation block must have determinant +1")

    @staticmethod
    def identity() -> "RigidMap":
        return RigidMap(Mat3.identity(), Vec3.zero())

    def apply(self, p: Point) -> Point:
        moved = self.rotation.matvec(p - ORIGIN) + self.translation
        return ORIGIN + moved

    def apply_vector(self, v: Vec3) -> Vec3:
        return self.rotation.matvec(v)

    def compose(self, first: "RigidMap") -> "RigidMap":
        """self after first: (self.compose(first))(P) == self(first(P))."""
        return RigidMap(
            self.rotation.matmul(first.rotation),
            self.rotation.matvec(first.translation) + self.translation,
        )

    def inverse(self) -> "RigidMap":
        rt = self.rotation.transpose()
        return RigidMap(rt, -rt.matvec(self.translation))

    def isclose(self, other: "RigidMap", rel: float = 1e-12, abs_: float = 1e-12) -> bool:
        return self.rotation.isclose(other.rotation, rel, abs_) and \
            self.translation.isclose(other.translation, rel, abs_)


@dataclass(frozen=True, slots=True)
class ChaslesDecomposition:
    """Any rigid map is a rotation by ``angle`` about ``axis`` followed by a
    slide of ``slide`` along it; a map with no rotation is the edge case, and
    then ``pure_translation`` carries the displacement instead."""

    axis: ScrewAxis
    angle: float
    slide: float
    pure_translation: Vec3 | None = None

    def to_screw(self) -> Screw:
        """The screw whose unit-parameter flow is the decomposed map."""
        if self.pure_translation is not None:
            return Screw.from_free_vector(self.pure_translation)
        assert isinstance(self.axis, LineAxis)
        u = self.axis.direction
        return Screw.from_free_vector(u * self.slide) + Screw.from_applied_vector(
            self.axis.point, u * self.angle
        )

    def to_rigid_map(self) -> RigidMap:
        return exp_screw(self.to_screw(), 1.0)


def _exp_coeffs(theta: float) -> tuple[float, float]:
    """f1 = (1 - cos t) / t and f2 = 1 - sin t / t, series-guarded near 0."""
    if abs(theta) < 1e-4:
        t2 = theta * theta
        f1 = theta * (0.5 - t2 / 24.0 + t2 * t2 / 720.0)
        f2 = t2 * (1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0)
        return f1, f2
    return (1.0 - math.cos(theta)) / theta, 1.0 - math.sin(theta) / theta


def exp_screw(s: Screw, t: float = 1.0) -> RigidMap:
    """Flow of the screw field for parameter t.

    Rotation by |resultant| t about the screw axis composed with a slide of
    (pitch / 2 pi) |resultant| t along it; for a zero-resultant screw, a pure
    translation by t times the constant field value.  Obeys the group law
    exp(s, t1 + t2) = exp(s, t2) o exp(s, t1).
    """
    w = s.resultant
    omega = w.norm()
    if omega == 0.0:
        return RigidMap(Mat3.identity(), s.moment_at_origin * t)
    u = w / omega
    theta = omega * t
    rot = rodrigues(u, theta)
    # translation = integral of the rotating field at the origin:
    # t (I + f1(theta) K + f2(theta) K^2) applied to the origin value.
    f1, f2 = _exp_coeffs(theta)
    m = s.moment_at_origin
    um = u.cross(m)
    uum = u.cross(um)
    trans = (m + f1 * um + f2 * uum) * t
    return RigidMap(rot, trans)


def _axis_from_symmetric_part(r: Mat3, cos_theta: float) -> Vec3:
    # Near a half turn (R + R^T)/2 - cos(theta) I = (1 - cos(theta)) u u^T;
    # its largest-diagonal column is parallel to the axis.
    m = 0.5 * (r + r.transpose()) - cos_theta * Mat3.identity()
    diag = (m.xx, m.yy, m.zz)
    j = max(range(3), key=lambda i: diag[i])
    u = m.column(j).normalized()
    # Orient consistently with the (possibly tiny) antisymmetric part.
    w = Vec3(r.zy - r.yz, r.xz - r.zx, r.yx - r.xy)
    if w.norm() > 1e-12 and w.dot(u) < 0.0:
        u = -u
    return u


def chasles(g: RigidMap) -> ChaslesDecomposition:
    """Decompose a rigid map into rotation about a line plus slide along it.

    The angle is taken in [0, pi].  Maps with angle below 1e-8 come back as
    pure translations; at a half turn the axis direction is recovered from
    the symmetric part of the rotation (its sign is not determined there,
    and either choice reproduces the map).
    """
    r = g.rotation
    cos_theta = max(-1.0, min(1.0, (r.trace() - 1.0) / 2.0))
    theta = math.acos(cos_theta)

    if theta < _ANGLE_EPS:
        return ChaslesDecomposition(
            axis=DegenerateAxis(),
            angle=0.0,
            slide=0.0,
            pure_translation=g.translation,
        )

    if math.pi - theta < _NEAR_PI:
        u = _axis_from_symmetric_part(r, cos_theta)
    else:
        w = Vec3(r.zy - r.yz, r.xz - r.zx, r.yx - r.xy)
        u = w / (2.0 * math.sin(theta))
        u = u.normalized()

    # Invert the translation integral V(1): on the axis direction V is the
    # identity, in the perpendicular plane it is a scaled rotation, giving
    #   V^-1 = I - (t/2) K + (1 - (t/2) cot(t/2)) K^2.
    half = 0.5 * theta
    c2 = 1.0 - half * (math.cos(half) / math.sin(half))
    tv = g.translation
    utv = u.cross(tv)
    uutv = u.cross(utv)
    origin_value = tv - half * utv + c2 * uutv

    s = Screw(u * theta, origin_value)
    axis = s.axis()
    assert isinstance(axis, LineAxis)
    slide = s.vector_invariant().dot(axis.direction)
    return ChaslesDecomposition(axis=axis, angle=theta, slide=slide)
