"""Momentum-based rigid-body time stepping with screw diagnostics.

The state carries momenta rather than velocities: the linear momentum and the
angular momentum about the (moving) center of mass.  Both obey exact update
rules under a constant wrench, because the moment about the center is the
only thing that drives the angular momentum there; all integration error
lives in the orientation and center updates.  With a zero wrench the momenta
are therefore conserved to the last bit.

Each step also evaluates a set of screw-level diagnostics on the trajectory:
kinetic energy, power, a symmetric finite-difference estimate of
omega . (dI_C/dt)(omega) (identically zero along exact motion), and the
residual of the body-relative balance law d + [k, l] against a direct
finite-difference derivative of the momentum screw at body-dragged poles.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .dynamics import (
    InertiaOperator,
    MomentumScrew,
    Wrench,
    kinetic_energy,
    moving_frame_derivative,
    power,
)
from .errors import SingularInertiaError
from .kinematics import Twist
from .rigid import rodrigues
from .vecmath import Mat3, Point, Vec3

__all__ = [
    "BodyState",
    "SimConfig",
    "StepDiagnostics",
    "Trajectory",
    "step",
    "run",
    "state_twist",
    "state_momentum",
    "state_kinetic_energy",
    "world_inertia_matrix",
]

log = logging.getLogger(__name__)

_SINGULAR_RTOL = 1e-12
_ORTHO_DRIFT_TOL = 1e-8
# Fixed body-frame marker used by the balance-law diagnostic; any point off
# the center works, the residual is evaluated at both.
_MARKER_OFFSET = Vec3(1.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class BodyState:
    """Instantaneous state of one rigid body.

    ``orientation`` maps body axes to world axes; ``body`` is the inertia
    operator in body axes (its ``center`` field is ignored here, the world
    center of mass is ``center``).  ``angular_momentum_at_c`` is the world
    angular momentum about the center of mass.
    """

    orientation: Mat3
    center: Point
    linear_momentum: Vec3
    angular_momentum_at_c: Vec3
    body: InertiaOperator


@dataclass(frozen=True, slots=True)
class SimConfig:
    dt: float
    steps: int
    integrator: str = "midpoint"
    wrench: Wrench | None = None

    def __post_init__(self):
        if not self.dt > 0.0:
            raise ValueError("dt must be positive")
        if self.steps < 1:
            raise ValueError("steps must be at least 1")
        if self.integrator not in ("midpoint", "euler"):
            raise ValueError("integrator must be 'midpoint' or 'euler'")


@dataclass(frozen=True, slots=True)
class StepDiagnostics:
    time: float
    kinetic_energy: float
    power: float
    omega_idot_omega: float
    balance_residual: float


@dataclass(frozen=True, slots=True)
class Trajectory:
    states: tuple[BodyState, ...]
    diagnostics: tuple[StepDiagnostics, ...]
    renormalizations: int


@lru_cache(maxsize=16)
def _inverse_moment(body: InertiaOperator) -> Mat3:
    """Inverse of the body moment matrix via symmetric eigendecomposition,
    rejecting (near-)singular inertias."""
    m = np.array(body.moment_matrix.flat(), dtype=float).reshape(3, 3)
    evals, evecs = np.linalg.eigh(m)
    if evals[0] < _SINGULAR_RTOL * max(evals[-1], 0.0) or evals[-1] <= 0.0:
        raise SingularInertiaError(
            f"inertia principal values {tuple(evals)} are not invertible"
        )
    inv = evecs @ np.diag(1.0 / evals) @ evecs.T
    return Mat3(*(float(x) for x in inv.ravel()))


def world_inertia_matrix(state: BodyState) -> Mat3:
    """Moment matrix about the center in world axes: R I_body R^T."""
    r = state.orientation
    return r.matmul(state.body.moment_matrix).matmul(r.transpose())


def _angular_velocity(state: BodyState) -> Vec3:
    r = state.orientation
    inv = _inverse_moment(state.body)
    body_l = r.transpose().matvec(state.angular_momentum_at_c)
    return r.matvec(inv.matvec(body_l))


def state_twist(state: BodyState) -> Twist:
    return Twist.from_motor(
        state.center,
        _angular_velocity(state),
        state.linear_momentum / state.body.total_mass,
    )


def state_momentum(state: BodyState) -> MomentumScrew:
    return MomentumScrew.from_motor(
        state.center, state.linear_momentum, state.angular_momentum_at_c
    )


def state_kinetic_energy(state: BodyState) -> float:
    return kinetic_energy(state_twist(state), state_momentum(state))


def _rotate(orientation: Mat3, omega: Vec3, dt: float) -> Mat3:
    speed = omega.norm()
    if speed == 0.0:
        return orientation
    return rodrigues(omega / speed, speed * dt).matmul(orientation)


def _advance(
    state: BodyState, force: Vec3, moment_at_c: Vec3, v: Vec3, omega: Vec3, dt: float
) -> BodyState:
    return BodyState(
        orientation=_rotate(state.orientation, omega, dt),
        center=state.center + v * dt,
        linear_momentum=state.linear_momentum + force * dt,
        angular_momentum_at_c=state.angular_momentum_at_c + moment_at_c * dt,
        body=state.body,
    )


def _derivatives(state: BodyState, wrench: Wrench) -> tuple[Vec3, Vec3, Vec3, Vec3]:
    force = wrench.force
    moment_at_c = wrench.moment_at(state.center)
    v = state.linear_momentum / state.body.total_mass
    omega = _angular_velocity(state)
    return force, moment_at_c, v, omega


def _renormalize(r: Mat3) -> Mat3:
    arr = np.array(r.flat(), dtype=float).reshape(3, 3)
    u, _, vt = np.linalg.svd(arr)
    return Mat3(*(float(x) for x in (u @ vt).ravel()))


def _step_impl(
    state: BodyState, wrench: Wrench, dt: float, integrator: str
) -> tuple[BodyState, bool]:
    if integrator == "euler":
        new = _advance(state, *_derivatives(state, wrench), dt)
    else:
        half = _advance(state, *_derivatives(state, wrench), dt / 2.0)
        new = _advance(state, *_derivatives(half, wrench), dt)

    renormalized = False
    if new.orientation.orthonormality_defect() > _ORTHO_DRIFT_TOL:
        log.warning("orientation drifted off SO(3); applying polar projection")
        new = BodyState(
            orientation=_renormalize(new.orientation),
            center=new.center,
            linear_momentum=new.linear_momentum,
            angular_momentum_at_c=new.angular_momentum_at_c,
            body=new.body,
        )
        renormalized = True
    return new, renormalized


def step(
    state: BodyState,
    wrench: Wrench | None,
    dt: float,
    integrator: str = "midpoint",
) -> BodyState:
    """Advance one step of ``dt`` under ``wrench`` (None means unforced) with
    the chosen integrator: explicit midpoint by default, explicit Euler on
    request."""
    if not dt > 0.0:
        raise ValueError("dt must be positive")
    if integrator not in ("midpoint", "euler"):
        raise ValueError("integrator must be 'midpoint' or 'euler'")
    applied = wrench if wrench is not None else Wrench.zero()
    new, _ = _step_impl(state, applied, dt, integrator)
    return new


def _diagnostics(
    before: BodyState, after: BodyState, t: float, dt: float, wrench: Wrench
) -> StepDiagnostics:
    k0 = state_twist(before)
    l0 = state_momentum(before)
    k1 = state_twist(after)
    l1 = state_momentum(after)

    # Symmetric estimate of omega . (dI_C/dt) (omega) across the step; the
    # lemma makes the exact value zero, so this should vanish at O(dt^2).
    omega_mid = 0.5 * (k0.angular_velocity + k1.angular_velocity)
    di = world_inertia_matrix(after) - world_inertia_matrix(before)
    omega_idot = omega_mid.dot(di.matvec(omega_mid)) / dt

    # Residual of the body-relative balance law d + [k, l] against a forward
    # difference of the momentum field taken at body-dragged poles (the
    # center and one marker point), O(dt) along an exact trajectory.
    rhs = moving_frame_derivative(l0, k0, wrench)
    omega0 = k0.angular_velocity
    res_lin = (
        (after.linear_momentum - before.linear_momentum) / dt
        - omega0.cross(before.linear_momentum)
        - rhs.resultant
    )
    residual = res_lin.norm()
    marker0 = before.center + before.orientation.matvec(_MARKER_OFFSET)
    marker1 = after.center + after.orientation.matvec(_MARKER_OFFSET)
    for p0, p1 in ((before.center, after.center), (marker0, marker1)):
        fd = (l1.angular_momentum_at(p1) - l0.angular_momentum_at(p0)) / dt
        res = fd - omega0.cross(l0.angular_momentum_at(p0)) - rhs.value_at(p0)
        residual = max(residual, res.norm())

    return StepDiagnostics(
        time=t,
        kinetic_energy=state_kinetic_energy(before),
        power=power(k0, wrench),
        omega_idot_omega=omega_idot,
        balance_residual=residual,
    )


def run(config: SimConfig, initial: BodyState) -> Trajectory:
    """Integrate for config.steps steps.  Returns the full state sequence
    (steps + 1 entries) plus per-step diagnostics.  Bitwise deterministic for
    identical inputs."""
    wrench = config.wrench if config.wrench is not None else Wrench.zero()
    states = [initial]
    diags = []
    renorms = 0
    state = initial
    for n in range(config.steps):
        new, renormed = _step_impl(state, wrench, config.dt, config.integrator)
        renorms += int(renormed)
        diags.append(_diagnostics(state, new, n * config.dt, config.dt, wrench))
        states.append(new)
        state = new
    return Trajectory(tuple(states), tuple(diags), renorms)
