"""End-to-end tests of the command-line tool: exit codes, output documents,
and the exp/log round trip through actual CLI invocations."""

import io
import json
import subprocess
import sys

import pytest

from screwalg import Screw, Vec3, exp_screw
from screwalg.cli import main

SINGLE_FORCE = {
    "version": 1,
    "forces": [{"point": [1.0, 0.0, 0.0], "vector": [0.0, 0.0, 2.0]}],
}

ROTATION_COUPLE = {
    "version": 1,
    "twists": [
        {"omega": [0.0, 0.0, 3.0], "moment_at_origin": [0.0, 0.0, 0.0]},
        {"omega": [0.0, 0.0, -3.0], "v_at": [[2.0, 0.0, 0.0], [0.0, 0.0, 0.0]]},
    ],
}

SCREW_MOTION = {
    "version": 1,
    "twists": [{"omega": [0.0, 0.0, 1.0], "moment_at_origin": [0.3, 0.0, 0.5]}],
}

REVOLUTE = {
    "version": 1,
    "twists": [{"omega": [0.0, 0.0, 1.0], "moment_at_origin": [0.0, 0.0, 0.0]}],
}

TUMBLE = {
    "version": 1,
    "masses": [
        {"m": 1.0, "position": [1.0, 0.0, 0.0], "velocity": [0.0, 0.5, 0.0]},
        {"m": 1.0, "position": [-1.0, 0.0, 0.0], "velocity": [0.0, -0.5, 0.0]},
        {"m": 2.0, "position": [0.0, 1.0, 0.0], "velocity": [0.0, 0.0, 0.3]},
        {"m": 1.0, "position": [0.0, 0.0, 1.5], "velocity": [0.2, 0.0, 0.0]},
    ],
    "sim": {"dt": 0.001, "steps": 5},
}


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def scene_file(tmp_path, doc, name="scene.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


# -- reduce -------------------------------------------------------------------


def test_reduce_human_output(tmp_path):
    code, out, err = run_cli("reduce", scene_file(tmp_path, SINGLE_FORCE))
    assert code == 0 and err == ""
    assert "resultant:        [0, 0, 2]" in out
    assert "scalar invariant: 0" in out
    assert "two-vector reduction:" in out
    assert "axis:             line through" in out


def test_reduce_json_output(tmp_path):
    code, out, err = run_cli("reduce", scene_file(tmp_path, SINGLE_FORCE), "--json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["resultant"] == [0.0, 0.0, 2.0]
    assert doc["amplitude"] == 2.0
    assert doc["pitch"] == {"kind": "finite", "value": 0.0}
    assert doc["axis"]["kind"] == "line"
    # the axis of a single applied force passes through its application point
    assert doc["axis"]["point"] == [1.0, 0.0, 0.0]
    legs = doc["two_vector_reduction"]
    assert len(legs) == 2
    total = [a + b for a, b in zip(legs[0]["vector"], legs[1]["vector"])]
    assert total == [0.0, 0.0, 2.0]


def test_reduce_of_cancelling_forces_is_a_domain_error(tmp_path):
    doc = {
        "version": 1,
        "forces": [
            {"point": [1.0, 0.0, 0.0], "vector": [0.0, 0.0, 2.0]},
            {"point": [1.0, 0.0, 0.0], "vector": [0.0, 0.0, -2.0]},
        ],
    }
    code, out, err = run_cli("reduce", scene_file(tmp_path, doc))
    assert code == 3
    assert "domain error (ZeroScrewError)" in err


# -- compose ------------------------------------------------------------------


def test_compose_couple_human(tmp_path):
    code, out, err = run_cli("compose", scene_file(tmp_path, ROTATION_COUPLE))
    assert code == 0
    assert "angular velocity: [0, 0, 0]" in out
    assert "speed 6" in out
    assert "pitch:            infinite (free screw)" in out
    assert "degenerate" in out


def test_compose_couple_json(tmp_path):
    code, out, _ = run_cli("compose", scene_file(tmp_path, ROTATION_COUPLE), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["angular_velocity"] == [0.0, 0.0, 0.0]
    assert doc["axis_speed"] == 6.0
    assert doc["vector_invariant"] == [0.0, 6.0, 0.0]
    assert doc["pitch"] == {"kind": "infinite"}
    assert doc["axis"] == {"kind": "degenerate"}


# -- exp / log ----------------------------------------------------------------


def test_exp_json_matches_library(tmp_path):
    code, out, _ = run_cli("exp", scene_file(tmp_path, SCREW_MOTION), "--t", "0.5", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["t"] == 0.5
    g = exp_screw(Screw(Vec3(0.0, 0.0, 1.0), Vec3(0.3, 0.0, 0.5)), 0.5)
    for got, want in zip(doc["rigid_map"]["rotation"], g.rotation.flat()):
        assert abs(got - want) <= 1e-11
    for got, want in zip(doc["rigid_map"]["translation"], g.translation.components()):
        assert abs(got - want) <= 1e-11


def test_exp_needs_exactly_one_twist(tmp_path):
    code, _, err = run_cli("exp", scene_file(tmp_path, ROTATION_COUPLE))
    assert code == 2
    assert "exactly one twist" in err


def test_exp_log_round_trip_through_the_cli(tmp_path):
    code, out, _ = run_cli("exp", scene_file(tmp_path, SCREW_MOTION), "--json")
    assert code == 0
    rigid_map = json.loads(out)["rigid_map"]
    log_scene = scene_file(tmp_path, {"version": 1, "rigid_map": rigid_map}, "log.json")
    code, out, _ = run_cli("log", log_scene, "--json")
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["angle"] - 1.0) <= 1e-9
    got = doc["screw"]
    for got_c, want_c in zip(got["resultant"], [0.0, 0.0, 1.0]):
        assert abs(got_c - want_c) <= 1e-9
    for got_c, want_c in zip(got["moment_at_origin"], [0.3, 0.0, 0.5]):
        assert abs(got_c - want_c) <= 1e-9


def test_log_human_output(tmp_path):
    doc = {
        "version": 1,
        "rigid_map": {
            "rotation": [0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0],
            "translation": [0.0, 0.0, 0.75],
        },
    }
    code, out, err = run_cli("log", scene_file(tmp_path, doc))
    assert code == 0 and err == ""
    assert "angle: 1.5708" in out  # quarter turn
    assert "slide: 0.75" in out


def test_log_of_pure_translation(tmp_path):
    doc = {
        "version": 1,
        "rigid_map": {
            "rotation": [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0],
            "translation": [0.25, -0.5, 1.0],
        },
    }
    code, out, _ = run_cli("log", scene_file(tmp_path, doc), "--json")
    assert code == 0
    parsed = json.loads(out)
    assert parsed["angle"] == 0.0
    assert parsed["axis"] == {"kind": "degenerate"}
    assert parsed["pure_translation"] == [0.25, -0.5, 1.0]


# -- reciprocal ---------------------------------------------------------------


def test_reciprocal_of_a_revolute_joint(tmp_path):
    code, out, _ = run_cli("reciprocal", scene_file(tmp_path, REVOLUTE))
    assert code == 0
    assert "reciprocal subspace dimension: 5" in out
    code, out, _ = run_cli("reciprocal", scene_file(tmp_path, REVOLUTE), "--json")
    doc = json.loads(out)
    assert doc["dimension"] == 5
    assert len(doc["basis"]) == 5


# -- simulate -----------------------------------------------------------------


def test_simulate_structure(tmp_path):
    code, out, err = run_cli("simulate", scene_file(tmp_path, TUMBLE), "--json")
    assert code == 0, err
    doc = json.loads(out)
    assert doc["steps"] == 5
    assert len(doc["diagnostics"]) == 5
    assert doc["renormalizations"] == 0
    assert set(doc["final"]) == {
        "center",
        "linear_momentum",
        "angular_momentum_at_c",
        "orientation",
    }
    assert len(doc["final"]["orientation"]) == 9


def test_simulate_human_has_a_table(tmp_path):
    code, out, _ = run_cli("simulate", scene_file(tmp_path, TUMBLE))
    assert code == 0
    assert out.splitlines()[0].startswith("step    time")
    assert "final center:" in out
    assert "renormalizations: 0" in out


def test_simulate_mixed_velocities_is_a_domain_error(tmp_path):
    doc = {
        "version": 1,
        "masses": [
            {"m": 1.0, "position": [1.0, 0.0, 0.0], "velocity": [0.0, 1.0, 0.0]},
            {"m": 1.0, "position": [0.0, 1.0, 0.0]},
        ],
        "sim": {"dt": 0.001, "steps": 2},
    }
    code, _, err = run_cli("simulate", scene_file(tmp_path, doc))
    assert code == 3
    assert "MissingVelocitiesError" in err


def test_simulate_collinear_body_is_a_domain_error(tmp_path):
    doc = {
        "version": 1,
        "masses": [
            {"m": 1.0, "position": [1.0, 0.0, 0.0], "velocity": [0.0, 1.0, 0.0]},
            {"m": 1.0, "position": [-1.0, 0.0, 0.0], "velocity": [0.0, -1.0, 0.0]},
        ],
        "sim": {"dt": 0.001, "steps": 2},
    }
    code, _, err = run_cli("simulate", scene_file(tmp_path, doc))
    assert code == 3
    assert "SingularInertiaError" in err


# -- error paths --------------------------------------------------------------


def test_missing_file_is_an_input_error(tmp_path):
    code, _, err = run_cli("reduce", str(tmp_path / "nope.json"))
    assert code == 2
    assert "cannot read scene" in err


def test_malformed_json_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"version": 1,\n  "forces": }')
    code, _, err = run_cli("reduce", str(p))
    assert code == 2
    assert "scene error at $" in err
    assert "line 2" in err


def test_missing_section_is_an_input_error(tmp_path):
    code, _, err = run_cli("reduce", scene_file(tmp_path, REVOLUTE))
    assert code == 2
    assert "needs a 'forces' section" in err


def test_unknown_scene_key_reports_its_path(tmp_path):
    code, _, err = run_cli("reduce", scene_file(tmp_path, {"version": 1, "forcez": []}))
    assert code == 2
    assert "scene error at $" in err
    assert "forcez" in err


def test_unknown_subcommand_exits_via_argparse():
    with pytest.raises(SystemExit):
        run_cli("frobnicate")


# -- selfcheck and stability --------------------------------------------------


def test_selfcheck_passes():
    code, out, err = run_cli("selfcheck")
    assert code == 0 and err == ""
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 7
    assert all(l.startswith("ok ") for l in lines)


def test_selfcheck_json():
    code, out, _ = run_cli("selfcheck", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_ok"] is True
    assert len(doc["checks"]) == 7
    assert all(c["ok"] for c in doc["checks"])


def test_json_output_is_byte_stable(tmp_path):
    path = scene_file(tmp_path, SINGLE_FORCE)
    _, first, _ = run_cli("reduce", path, "--json")
    _, second, _ = run_cli("reduce", path, "--json")
    assert first == second
    assert first.endswith("\n")


def test_module_entry_point(tmp_path):
    path = scene_file(tmp_path, SINGLE_FORCE)
    proc = subprocess.run(
        [sys.executable, "-m", "screwalg.cli", "reduce", path, "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["amplitude"] == 2.0
