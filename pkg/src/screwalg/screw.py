"""Screws: vector fields on space whose values at two points differ by a cross
product with a fixed vector.

A screw is a map ``s`` from points to vectors satisfying

    s(P) = s(Q) + resultant x (P - Q)        for all points P, Q,

for a single vector ``resultant`` (written ``s.resultant``).  Angular-velocity
fields of rigid bodies, force systems (resultant + moment field) and momentum
fields all have this shape, which is why one algebra serves kinematics,
statics and dynamics alike.

Storage is canonical: the resultant together with the field value at the
global origin.  Every constructor normalizes to that form, so two screws
built at different base points compare equal when they are the same field.

Conventions that matter:

* The *scalar invariant* ``s(P) . resultant`` does not depend on P.
* The *vector invariant* is the component of the field value parallel to the
  resultant (the whole field value when the resultant vanishes).  It is the
  field's value on the axis.
* The *axis* is the locus of minimum field magnitude: a line when the
  resultant is nonzero, everywhere (degenerate) when it vanishes.
* The *pitch* uses the full-turn normalization: a screw of pitch p advances
  by p along its axis per complete revolution, so the vector invariant is
  (p / 2 pi) times the resultant.  Beware: much of the robotics literature
  omits the 2 pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroScrewError
from .vecmath import ORIGIN, Point, Vec3

__all__ = [
    "Screw",
    "LineAxis",
    "DegenerateAxis",
    "ScrewAxis",
    "FinitePitch",
    "InfinitePitch",
    "ZeroScrewPitch",
    "Pitch",
    "evaluate",
    "screw_axis",
]

# Below this, a resultant is considered zero when classifying the axis and
# pitch.  Relative to the moment so that large couples do not get mistaken
# for small rotations, with an absolute floor of 1 so that tiny screws are
# still classified sensibly.
_RESULTANT_EPS = 1e-9

# Absolute floor below which a moment is treated as zero when deciding
# whether a screw is the zero screw.
_MOMENT_EPS = 1e-12


@dataclass(frozen=True, slots=True)
class LineAxis:
    """Axis of a screw with nonzero resultant: a line, stored as a point on it
    plus a unit direction."""

    point: Point
    direction: Vec3


@dataclass(frozen=True, slots=True)
class DegenerateAxis:
    """Axis of a zero-resultant screw: the minimum locus is all of space."""


ScrewAxis = LineAxis | DegenerateAxis


@dataclass(frozen=True, slots=True)
class FinitePitch:
    value: float


@dataclass(frozen=True, slots=True)
class InfinitePitch:
    """Pitch of a free screw: translation with no rotation."""


@dataclass(frozen=True, slots=True)
class ZeroScrewPitch:
    """The zero screw has no well-defined pitch; callers must handle this case."""


Pitch = FinitePitch | InfinitePitch | ZeroScrewPitch


@dataclass(frozen=True, slots=True)
class Screw:
    """A screw field, stored as (resultant, field value at the global origin).

    ``==`` is exact and is meant for representation round-trips; use
    :meth:`isclose` for numerical comparison.
    """

    resultant: Vec3
    moment_at_origin: Vec3

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Screw":
        return Screw(Vec3.zero(), Vec3.zero())

    @staticmethod
    def from_free_vector(v: Vec3) -> "Screw":
        """Constant field equal to v everywhere (zero resultant)."""
        return Screw(Vec3.zero(), v)

    @staticmethod
    def from_applied_vector(point: Point, vector: Vec3) -> "Screw":
        """Field of a vector applied along the line through ``point``:
        s(P) = vector x (P - point).  Vanishes on its own axis."""
        return Screw(vector, vector.cross(ORIGIN - point))

    @staticmethod
    def from_motor(point: Point, resultant: Vec3, value_at_point: Vec3) -> "Screw":
        """Reconstruct the screw whose field takes ``value_at_point`` at
        ``point``.  Inverse of reading (resultant, value_at(point))."""
        return Screw(
            resultant, value_at_point + resultant.cross(ORIGIN - point)
        )

    # -- the field ---------------------------------------------------------

    def value_at(self, point: Point) -> Vec3:
        """Field value at a point: s(P) = s(O) + resultant x (P - O)."""
        return self.moment_at_origin + self.resultant.cross(point - ORIGIN)

    # -- vector-space structure --------------------------------------------

    def __add__(self, other: "Screw") -> "Screw":
        return Screw(
            self.resultant + other.resultant,
            self.moment_at_origin + other.moment_at_origin,
        )

    def __sub__(self, other: "Screw") -> "Screw":
        return Screw(
            self.resultant - other.resultant,
            self.moment_at_origin - other.moment_at_origin,
        )

    def __neg__(self) -> "Screw":
        return Screw(-self.resultant, -self.moment_at_origin)

    def __mul__(self, k: float) -> "Screw":
        return Screw(self.resultant * k, self.moment_at_origin * k)

    __rmul__ = __mul__

    def isclose(self, other: "Screw", rel: float = 1e-12, abs_: float = 1e-12) -> bool:
        return self.resultant.isclose(
            other.resultant, rel, abs_
        ) and self.moment_at_origin.isclose(other.moment_at_origin, rel, abs_)

    # -- invariants ----------------------------------------------------------

    def scalar_invariant(self) -> float:
        """s(P) . resultant, the same number at every P."""
        return self.moment_at_origin.dot(self.resultant)

    def vector_invariant(self) -> Vec3:
        """Component of the field value along the resultant; equals the field
        value on the axis.  For a zero-resultant screw this is the constant
        field value itself."""
        w2 = self.resultant.dot(self.resultant)
        if self._resultant_negligible():
            return self.moment_at_origin
        return self.resultant * (self.scalar_invariant() / w2)

    def amplitude(self) -> float:
        """Magnitude of the resultant (unsigned)."""
        return self.resultant.norm()

    def is_zero(self) -> bool:
        return self.is_free() and self.moment_at_origin.norm() <= _MOMENT_EPS

    def is_free(self) -> bool:
        """True when the resultant is negligible, i.e. the field is constant
        (a couple, for wrenches; a pure translation, for twists)."""
        return self._resultant_negligible()

    def _resultant_negligible(self) -> bool:
        return self.resultant.norm() <= _RESULTANT_EPS * max(
            1.0, self.moment_at_origin.norm()
        )

    # -- axis and pitch ------------------------------------------------------

    def axis(self) -> ScrewAxis:
        """Locus of minimum field magnitude.

        For nonzero resultant w this is the line through
        A + w x s(A) / (w . w) with direction w (A any base point); the field
        there reduces to the vector invariant.  For negligible resultant every
        point realizes the minimum and the axis degenerates to all of space.
        """
        if self._resultant_negligible():
            return DegenerateAxis()
        w = self.resultant
        w2 = w.dot(w)
        q = ORIGIN + w.cross(self.moment_at_origin) / w2
        return LineAxis(point=q, direction=w.normalized())

    def pitch(self) -> Pitch:
        """Axis advance per full revolution: 2 pi (s(P) . w) / (w . w).

        Free screws (zero resultant, nonzero field) translate without
        rotating and get ``InfinitePitch``; the zero screw gets the explicit
        ``ZeroScrewPitch`` marker rather than a sentinel number.
        """
        if self._resultant_negligible():
            if self.is_zero():
                return ZeroScrewPitch()
            return InfinitePitch()
        w2 = self.resultant.dot(self.resultant)
        return FinitePitch(2.0 * math.pi * self.scalar_invariant() / w2)

    def axis_point(self) -> Point:
        """A point on the (line) axis; raises for degenerate-axis screws."""
        ax = self.axis()
        if isinstance(ax, DegenerateAxis):
            raise ZeroScrewError("degenerate axis: every point is on it")
        return ax.point


def evaluate(s: Screw, point: Point) -> Vec3:
    """Free-function form of :meth:`Screw.value_at`."""
    return s.value_at(point)


def screw_axis(s: Screw) -> ScrewAxis:
    """Free-function form of :meth:`Screw.axis`."""
    return s.axis()
