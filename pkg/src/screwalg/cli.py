"""Command-line front end.

    screwalg reduce     scene.json   invariants, axis and two-vector reduction
    screwalg compose    scene.json   screw sum of the scene's twists
    screwalg exp        scene.json --t 0.5   rigid map of the twist's flow
    screwalg log        scene.json   rotation-plus-slide decomposition
    screwalg reciprocal scene.json   zero-power subspace of the scene's screws
    screwalg simulate   scene.json   momentum time stepping with diagnostics
    screwalg selfcheck               built-in algebra identities

Output is human-oriented text (6 significant digits) by default; ``--json``
switches to a stable machine-readable document with 12 significant digits.
Exit codes: 0 on success, 2 for malformed input, 3 for domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .dynamics import (
    inertia_of,
    momentum_screw,
    reciprocal_subspace,
    wrench_of,
)
from .errors import SceneError, ScrewAlgError
from .kinematics import MotionChain, compose_chain
from .lie import Frame, basis_screws, commutator, killing_form, klein_product, to_dual, to_frame, pairing, ad
from .reduction import central_axis_report, decompose_two_applied
from .rigid import chasles, exp_screw
from .scene import Scene, parse_scene
from .screw import DegenerateAxis, FinitePitch, InfinitePitch, LineAxis, Screw, ZeroScrewPitch
from .sim import BodyState, SimConfig, run
from .vecmath import Mat3, Vec3

__all__ = ["main"]

MACHINE_DIGITS = 12
HUMAN_DIGITS = 6


def _round_sig(x: float, digits: int) -> float:
    x = x + 0.0  # normalize -0.0
    return float(f"{x:.{digits}g}")


def _machine_ready(doc, digits: int = MACHINE_DIGITS):
    if isinstance(doc, float):
        return _round_sig(doc, digits)
    if isinstance(doc, dict):
        return {k: _machine_ready(v, digits) for k, v in doc.items()}
    if isinstance(doc, (list, tuple)):
        return [_machine_ready(v, digits) for v in doc]
    return doc


def _fmt(x: float) -> str:
    return f"{x + 0.0:.{HUMAN_DIGITS}g}"


def _fmt_vec(v) -> str:
    return "[" + ", ".join(_fmt(c) for c in v.components()) + "]"


def _vec_doc(v) -> list:
    return list(v.components())


def _axis_doc(axis) -> dict:
    if isinstance(axis, DegenerateAxis):
        return {"kind": "degenerate"}
    return {
        "kind": "line",
        "point": _vec_doc(axis.point),
        "direction": _vec_doc(axis.direction),
    }


def _axis_text(axis) -> str:
    if isinstance(axis, DegenerateAxis):
        return "degenerate (every point)"
    return f"line through {_fmt_vec(axis.point)} direction {_fmt_vec(axis.direction)}"


def _pitch_doc(pitch) -> dict:
    if isinstance(pitch, FinitePitch):
        return {"kind": "finite", "value": pitch.value}
    if isinstance(pitch, InfinitePitch):
        return {"kind": "infinite"}
    return {"kind": "zero-screw"}


def _pitch_text(pitch) -> str:
    if isinstance(pitch, FinitePitch):
        return _fmt(pitch.value)
    if isinstance(pitch, InfinitePitch):
        return "infinite (free screw)"
    return "undefined (zero screw)"


def _screw_doc(s: Screw) -> dict:
    return {
        "resultant": _vec_doc(s.resultant),
        "moment_at_origin": _vec_doc(s.moment_at_origin),
    }


class _InputError(Exception):
    """Scene is valid JSON but unusable for the requested subcommand."""


def _need(scene: Scene, section: str):
    value = getattr(scene, section)
    if value is None:
        raise _InputError(f"this subcommand needs a '{section}' section in the scene")
    return value


# -- subcommand handlers: each returns (machine_doc, human_lines) ------------


def _cmd_reduce(scene: Scene, args) -> tuple[dict, list[str]]:
    forces = _need(scene, "forces")
    report = central_axis_report(forces)
    pair = decompose_two_applied(wrench_of(forces).screw)
    doc = {
        "resultant": _vec_doc(report.resultant),
        "amplitude": report.amplitude,
        "scalar_invariant": report.scalar_invariant,
        "vector_invariant": _vec_doc(report.vector_invariant),
        "pitch": _pitch_doc(report.pitch),
        "axis": _axis_doc(report.axis),
        "two_vector_reduction": [
            {"point": _vec_doc(pair.point1), "vector": _vec_doc(pair.vector1)},
            {"point": _vec_doc(pair.point2), "vector": _vec_doc(pair.vector2)},
        ],
    }
    lines = [
        f"resultant:        {_fmt_vec(report.resultant)}",
        f"amplitude:        {_fmt(report.amplitude)}",
        f"scalar invariant: {_fmt(report.scalar_invariant)}",
        f"vector invariant: {_fmt_vec(report.vector_invariant)}",
        f"pitch:            {_pitch_text(report.pitch)}",
        f"axis:             {_axis_text(report.axis)}",
        "two-vector reduction:",
        f"  at {_fmt_vec(pair.point1)} apply {_fmt_vec(pair.vector1)}",
        f"  at {_fmt_vec(pair.point2)} apply {_fmt_vec(pair.vector2)}",
    ]
    return doc, lines


def _cmd_compose(scene: Scene, args) -> tuple[dict, list[str]]:
    twists = _need(scene, "twists")
    total = compose_chain(MotionChain(twists))
    s = total.screw
    speed = s.vector_invariant().norm()
    doc = {
        "angular_velocity": _vec_doc(s.resultant),
        "amplitude": s.amplitude(),
        "vector_invariant": _vec_doc(s.vector_invariant()),
        "axis_speed": speed,
        "pitch": _pitch_doc(s.pitch()),
        "axis": _axis_doc(s.axis()),
    }
    lines = [
        f"angular velocity: {_fmt_vec(s.resultant)}",
        f"amplitude:        {_fmt(s.amplitude())}",
        f"vector invariant: {_fmt_vec(s.vector_invariant())} (speed {_fmt(speed)})",
        f"pitch:            {_pitch_text(s.pitch())}",
        f"axis:             {_axis_text(s.axis())}",
    ]
    return doc, lines


def _cmd_exp(scene: Scene, args) -> tuple[dict, list[str]]:
    twists = _need(scene, "twists")
    if len(twists) != 1:
        raise _InputError("exp needs exactly one twist in the scene")
    g = exp_screw(twists[0].screw, args.t)
    doc = {
        "t": args.t,
        "rigid_map": {
            "rotation": [float(x) for x in g.rotation.flat()],
            "translation": _vec_doc(g.translation),
        },
    }
    r = g.rotation
    lines = [
        f"flow parameter t: {_fmt(args.t)}",
        "rotation (rows):",
        f"  {_fmt_vec(r.row(0))}",
        f"  {_fmt_vec(r.row(1))}",
        f"  {_fmt_vec(r.row(2))}",
        f"translation:      {_fmt_vec(g.translation)}",
    ]
    return doc, lines


def _cmd_log(scene: Scene, args) -> tuple[dict, list[str]]:
    g = _need(scene, "rigid_map")
    dec = chasles(g)
    s = dec.to_screw()
    doc = {
        "angle": dec.angle,
        "slide": dec.slide,
        "axis": _axis_doc(dec.axis),
        "pure_translation": (
            _vec_doc(dec.pure_translation) if dec.pure_translation is not None else None
        ),
        "screw": _screw_doc(s),
    }
    lines = [
        f"angle: {_fmt(dec.angle)}",
        f"slide: {_fmt(dec.slide)}",
        f"axis:  {_axis_text(dec.axis)}",
    ]
    if dec.pure_translation is not None:
        lines.append(f"pure translation: {_fmt_vec(dec.pure_translation)}")
    lines.append(
        f"screw: resultant {_fmt_vec(s.resultant)}, moment at origin {_fmt_vec(s.moment_at_origin)}"
    )
    return doc, lines


def _cmd_reciprocal(scene: Scene, args) -> tuple[dict, list[str]]:
    twists = _need(scene, "twists")
    basis = reciprocal_subspace([tw.screw for tw in twists], Frame.standard())
    doc = {
        "dimension": len(basis),
        "basis": [_screw_doc(z) for z in basis],
    }
    lines = [f"reciprocal subspace dimension: {len(basis)}"]
    for i, z in enumerate(basis):
        lines.append(
            f"  z{i + 1}: resultant {_fmt_vec(z.resultant)}, moment at origin {_fmt_vec(z.moment_at_origin)}"
        )
    return doc, lines


def _cmd_simulate(scene: Scene, args) -> tuple[dict, list[str]]:
    masses = _need(scene, "masses")
    spec = _need(scene, "sim")
    inertia = inertia_of(masses)
    center = inertia.center
    if any(p.velocity is not None for p in masses.particles):
        l0 = momentum_screw(masses)
        linear = l0.linear_momentum
        angular = l0.angular_momentum_at(center)
    else:
        linear = Vec3.zero()
        angular = Vec3.zero()
    state = BodyState(
        orientation=Mat3.identity(),
        center=center,
        linear_momentum=linear,
        angular_momentum_at_c=angular,
        body=inertia,
    )
    config = SimConfig(
        dt=spec.dt, steps=spec.steps, integrator=spec.integrator, wrench=spec.wrench
    )
    traj = run(config, state)
    final = traj.states[-1]
    doc = {
        "steps": spec.steps,
        "dt": spec.dt,
        "integrator": spec.integrator,
        "diagnostics": [
            {
                "time": d.time,
                "kinetic_energy": d.kinetic_energy,
                "power": d.power,
                "omega_idot_omega": d.omega_idot_omega,
                "balance_residual": d.balance_residual,
            }
            for d in traj.diagnostics
        ],
        "final": {
            "center": _vec_doc(final.center),
            "linear_momentum": _vec_doc(final.linear_momentum),
            "angular_momentum_at_c": _vec_doc(final.angular_momentum_at_c),
            "orientation": [float(x) for x in final.orientation.flat()],
        },
        "renormalizations": traj.renormalizations,
    }
    lines = ["step    time          T             power         w.dI(w)       residual"]
    for n, d in enumerate(traj.diagnostics):
        lines.append(
            f"{n:<7d} {_fmt(d.time):<13} {_fmt(d.kinetic_energy):<13} "
            f"{_fmt(d.power):<13} {_fmt(d.omega_idot_omega):<13} {_fmt(d.balance_residual)}"
        )
    lines.append(f"final center:   {_fmt_vec(final.center)}")
    lines.append(f"final momentum: {_fmt_vec(final.linear_momentum)}")
    lines.append(f"renormalizations: {traj.renormalizations}")
    return doc, lines


def _selfcheck_checks() -> list[tuple[str, bool]]:
    frame = Frame.standard()
    f1, f2, f3, m1, m2, m3 = basis_screws(frame)
    checks: list[tuple[str, bool]] = []

    # Pairing table of the basis screws.
    ok = True
    fs, ms = (f1, f2, f3), (m1, m2, m3)
    for i in range(3):
        for j in range(3):
            want = 1.0 if i == j else 0.0
            ok &= abs(klein_product(fs[i], ms[j]) - want) < 1e-14
            ok &= abs(klein_product(fs[i], fs[j])) < 1e-14
            ok &= abs(klein_product(ms[i], ms[j])) < 1e-14
    checks.append(("pairing table", ok))

    # Commutation relations.
    eps = {(0, 1): 2, (1, 2): 0, (2, 0): 1}
    ok = True
    for (i, j), k in eps.items():
        ok &= commutator(ms[i], ms[j]).isclose(Screw.zero(), abs_=1e-14)
        ok &= commutator(fs[i], ms[j]).isclose(-1.0 * ms[k], abs_=1e-14)
        ok &= commutator(fs[i], fs[j]).isclose(-1.0 * fs[k], abs_=1e-14)
    checks.append(("commutation table", ok))

    # Jacobi identity and Killing form on a fixed triple.
    x = Screw(Vec3(0.3, -1.2, 0.7), Vec3(1.0, 0.4, -0.2))
    y = Screw(Vec3(-0.8, 0.5, 1.1), Vec3(0.6, -1.3, 0.9))
    z = Screw(Vec3(1.4, 0.2, -0.5), Vec3(-0.7, 0.8, 0.3))
    jac = (
        commutator(x, commutator(y, z))
        + commutator(y, commutator(z, x))
        + commutator(z, commutator(x, y))
    )
    checks.append(("jacobi identity", jac.isclose(Screw.zero(), abs_=1e-12)))

    trace = float(np.trace(ad(x, frame) @ ad(y, frame)))
    checks.append(("killing form", abs(trace - killing_form(x, y)) < 1e-9))

    inv = abs(
        klein_product(commutator(z, x), y) + klein_product(x, commutator(z, y))
    )
    checks.append(("pairing invariance", inv < 1e-12))

    dual_ok = abs(pairing(to_dual(x, frame), to_frame(y, frame)) - klein_product(x, y)) < 1e-12
    checks.append(("dual pairing", dual_ok))

    g = exp_screw(x, 1.0)
    back = chasles(g).to_screw()
    checks.append(("flow round trip", back.isclose(x, rel=1e-9, abs_=1e-9)))
    return checks


def _cmd_selfcheck(args) -> tuple[dict, list[str]]:
    checks = _selfcheck_checks()
    doc = {
        "checks": [{"name": name, "ok": ok} for name, ok in checks],
        "all_ok": all(ok for _, ok in checks),
    }
    lines = [("ok " if ok else "FAIL ") + name for name, ok in checks]
    return doc, lines


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="screwalg", description="screw-algebra computations on scene files"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, needs_scene: bool = True):
        p = sub.add_parser(name)
        if needs_scene:
            p.add_argument("scene", help="path to a scene JSON file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    add("reduce")
    add("compose")
    p_exp = add("exp")
    p_exp.add_argument("--t", type=float, default=1.0, help="flow parameter")
    add("log")
    add("reciprocal")
    add("simulate")
    add("selfcheck", needs_scene=False)
    return parser


_HANDLERS = {
    "reduce": _cmd_reduce,
    "compose": _cmd_compose,
    "exp": _cmd_exp,
    "log": _cmd_log,
    "reciprocal": _cmd_reciprocal,
    "simulate": _cmd_simulate,
}


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "selfcheck":
            doc, lines = _cmd_selfcheck(args)
        else:
            try:
                with open(args.scene, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as e:
                print(f"input error: cannot read scene: {e}", file=err)
                return 2
            scene = parse_scene(text)
            doc, lines = _HANDLERS[args.command](scene, args)
    except SceneError as e:
        print(f"scene error at {e.where}: {e.message}", file=err)
        return 2
    except _InputError as e:
        print(f"input error: {e}", file=err)
        return 2
    except ScrewAlgError as e:
        print(f"domain error ({type(e).__name__}): {e}", file=err)
        return 3

    if args.json:
        json.dump(_machine_ready(doc), out, indent=2)
        out.write("\n")
    else:
        for line in lines:
            print(line, file=out)

    if args.command == "selfcheck" and not doc["all_ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
