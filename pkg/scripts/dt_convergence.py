#!/usr/bin/env python3
"""Step-size convergence study for the momentum stepper.

Fixes a tumbling body under a constant wrench, integrates the same time
window at a sequence of halved steps, and prints the observed orders:

* kinetic-energy error at the final time (first order for euler, second
  for midpoint -- both measured against a much finer reference run);
* the worst per-step balance residual, which is a forward difference and
  should fall off linearly in dt for either integrator.

    python3 scripts/dt_convergence.py
    python3 scripts/dt_convergence.py --levels 6 --base-dt 4e-3
"""

import argparse
import math

from screwalg import (
    BodyState,
    MassDistribution,
    Mat3,
    Particle,
    Point,
    SimConfig,
    Vec3,
    Wrench,
    inertia_of,
    run,
    state_kinetic_energy,
)


def make_state() -> BodyState:
    parts = (
        Particle(1.0, Point(1.0, 0.0, 0.0)),
        Particle(1.0, Point(-1.0, 0.0, 0.0)),
        Particle(2.0, Point(0.0, 1.5, 0.0)),
        Particle(1.5, Point(0.0, -0.5, 1.0)),
    )
    body = inertia_of(MassDistribution(parts))
    return BodyState(
        orientation=Mat3.identity(),
        center=Point(0.1, -0.2, 0.3),
        linear_momentum=Vec3(0.5, 0.0, -0.25),
        angular_momentum_at_c=body.moment_matrix.matvec(Vec3(0.6, -0.4, 0.8)),
        body=body,
    )


WRENCH = Wrench.from_motor(Point(0.0, 0.0, 0.0), Vec3(0.4, -0.2, 0.1), Vec3(0.1, 0.3, -0.2))


def final_energy(state: BodyState, integrator: str, dt: float, steps: int) -> float:
    traj = run(SimConfig(dt=dt, steps=steps, integrator=integrator, wrench=WRENCH), state)
    return state_kinetic_energy(traj.states[-1])


def worst_residual(state: BodyState, integrator: str, dt: float, steps: int) -> float:
    traj = run(SimConfig(dt=dt, steps=steps, integrator=integrator, wrench=WRENCH), state)
    return max(d.balance_residual for d in traj.diagnostics)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--base-dt", type=float, default=2e-3)
    ap.add_argument("--base-steps", type=int, default=250)
    ap.add_argument("--levels", type=int, default=4)
    args = ap.parse_args()

    state = make_state()
    window = args.base_dt * args.base_steps
    print(f"time window {window:g}, base dt {args.base_dt:g}, {args.levels} halvings")

    # reference energy from a run 64x finer than the finest level
    ref_factor = 2 ** (args.levels - 1) * 64
    reference = final_energy(state, "midpoint", args.base_dt / ref_factor, args.base_steps * ref_factor)

    for integrator in ("euler", "midpoint"):
        print(f"\n{integrator}:")
        print("  dt           T error      order    residual     order")
        prev_err = prev_res = None
        for level in range(args.levels):
            dt = args.base_dt / 2**level
            steps = args.base_steps * 2**level
            err = abs(final_energy(state, integrator, dt, steps) - reference)
            res = worst_residual(state, integrator, dt, steps)
            err_order = "" if prev_err is None else f"{math.log2(prev_err / err):.2f}"
            res_order = "" if prev_res is None else f"{math.log2(prev_res / res):.2f}"
            print(f"  {dt:<12.4g} {err:<12.3e} {err_order:<8} {res:<12.3e} {res_order}")
            prev_err, prev_res = err, res


if __name__ == "__main__":
    main()
