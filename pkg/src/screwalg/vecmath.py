"""Small fixed-size linear algebra used everywhere else.

Vectors, points and 3x3 matrices are immutable value objects built on plain
floats.  They stay cheap inside tight loops and hashable inside dataclasses;
numpy enters only where a real matrix factorization is needed (see
``dynamics`` and ``sim``).

A ``Point`` is a location in the affine space, a ``Vec3`` a displacement of
it.  Point - Point = Vec3, Point + Vec3 = Point; points cannot be added.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["Vec3", "Point", "Mat3", "ORIGIN"]


def _require_finite(name: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{name} components must be finite, got {values}")


@dataclass(frozen=True, slots=True)
class Vec3:
    """Free vector with components in the fixed global basis."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        _require_finite("Vec3", self.x, self.y, self.z)

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, k: float) -> "Vec3":
        return Vec3(self.x * k, self.y * k, self.z * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> "Vec3":
        return Vec3(self.x / k, self.y / k, self.z / k)

    def dot(self, other: "Vec3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def normalized(self) -> "Vec3":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return self / n

    def is_zero(self) -> bool:
        return self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def isclose(self, other: "Vec3", rel: float = 1e-12, abs_: float = 1e-12) -> bool:
        return all(
            math.isclose(a, b, rel_tol=rel, abs_tol=abs_)
            for a, b in zip(self.components(), other.components())
        )

    def components(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    @staticmethod
    def zero() -> "Vec3":
        return Vec3(0.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class Point:
    """Location in affine space, held as coordinates relative to the global origin."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        _require_finite("Point", self.x, self.y, self.z)

    def __sub__(self, other: "Point") -> Vec3:
        if not isinstance(other, Point):
            return NotImplemented
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __add__(self, d: Vec3) -> "Point":
        if not isinstance(d, Vec3):
            return NotImplemented
        return Point(self.x + d.x, self.y + d.y, self.z + d.z)

    def to_vec(self) -> Vec3:
        """Displacement from the global origin to this point."""
        return Vec3(self.x, self.y, self.z)

    def isclose(self, other: "Point", rel: float = 1e-12, abs_: float = 1e-12) -> bool:
        return (self - other).norm() <= max(
            abs_, rel * max(self.to_vec().norm(), other.to_vec().norm())
        )

    def components(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


ORIGIN = Point(0.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class Mat3:
    """Row-major 3x3 matrix of floats."""

    xx: float
    xy: float
    xz: float
    yx: float
    yy: float
    yz: float
    zx: float
    zy: float
    zz: float

    def __post_init__(self):
        _require_finite("Mat3", *self.flat())

    @staticmethod
    def identity() -> "Mat3":
        return Mat3(1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0)

    @staticmethod
    def zero() -> "Mat3":
        return Mat3(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    @staticmethod
    def from_rows(r0: Vec3, r1: Vec3, r2: Vec3) -> "Mat3":
        return Mat3(r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z)

    @staticmethod
    def from_columns(c0: Vec3, c1: Vec3, c2: Vec3) -> "Mat3":
        return Mat3(c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z)

    @staticmethod
    def outer(u: Vec3, v: Vec3) -> "Mat3":
        return Mat3(
            u.x * v.x, u.x * v.y, u.x * v.z,
            u.y * v.x, u.y * v.y, u.y * v.z,
            u.z * v.x, u.z * v.y, u.z * v.z,
        )

    @staticmethod
    def cross_matrix(v: Vec3) -> "Mat3":
        """Matrix C with C @ u == v x u."""
        return Mat3(0.0, -v.z, v.y, v.z, 0.0, -v.x, -v.y, v.x, 0.0)

    def row(self, i: int) -> Vec3:
        f = self.flat()
        return Vec3(f[3 * i], f[3 * i + 1], f[3 * i + 2])

    def column(self, j: int) -> Vec3:
        f = self.flat()
        return Vec3(f[j], f[3 + j], f[6 + j])

    def flat(self) -> tuple[float, ...]:
        return (
            self.xx, self.xy, self.xz,
            self.yx, self.yy, self.yz,
            self.zx, self.zy, self.zz,
        )

    def __add__(self, o: "Mat3") -> "Mat3":
        return Mat3(*(a + b for a, b in zip(self.flat(), o.flat())))

    def __sub__(self, o: "Mat3") -> "Mat3":
        return Mat3(*(a - b for a, b in zip(self.flat(), o.flat())))

    def __mul__(self, k: float) -> "Mat3":
        return Mat3(*(a * k for a in self.flat()))

    __rmul__ = __mul__

    def matvec(self, v: Vec3) -> Vec3:
        return Vec3(
            self.xx * v.x + self.xy * v.y + self.xz * v.z,
            self.yx * v.x + self.yy * v.y + self.yz * v.z,
            self.zx * v.x + self.zy * v.y + self.zz * v.z,
        )

    def matmul(self, o: "Mat3") -> "Mat3":
        return Mat3.from_columns(
            self.matvec(o.column(0)), self.matvec(o.column(1)), self.matvec(o.column(2))
        )

    def transpose(self) -> "Mat3":
        return Mat3(
            self.xx, self.yx, self.zx,
            self.xy, self.yy, self.zy,
            self.xz, self.yz, self.zz,
        )

    def trace(self) -> float:
        return self.xx + self.yy + self.zz

    def det(self) -> float:
        return self.row(0).dot(self.row(1).cross(self.row(2)))

    def max_abs(self) -> float:
        return max(abs(a) for a in self.flat())

    def isclose(self, o: "Mat3", rel: float = 1e-12, abs_: float = 1e-12) -> bool:
        return all(
            math.isclose(a, b, rel_tol=rel, abs_tol=abs_)
            for a, b in zip(self.flat(), o.flat())
        )

    def orthonormality_defect(self) -> float:
        """max |R^T R - I|, zero for an exact rotation."""
        return (self.transpose().matmul(self) - Mat3.identity()).max_abs()
