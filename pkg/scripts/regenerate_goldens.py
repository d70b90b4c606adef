#!/usr/bin/env python3
"""Regenerate the golden CLI outputs under tests/goldens/.

Each golden is the byte-exact machine-mode output of one subcommand on one
fixture scene from tests/scenes/.  Rerun this after any deliberate change to
the output format, review the diff, and commit the result; the acceptance
suite compares against these files byte for byte.
"""

import io
import sys
from pathlib import Path

from screwalg.cli import main

ROOT = Path(__file__).resolve().parent.parent
SCENES = ROOT / "tests" / "scenes"
GOLDENS = ROOT / "tests" / "goldens"

CASES = [
    ("reduce", "single_force"),
    ("reduce", "three_forces"),
    ("compose", "rotation_couple"),
    ("exp", "screw_motion"),
    ("log", "screw_motion"),
    ("reciprocal", "revolute_joint"),
]


def render(command: str, scene_name: str) -> str:
    out = io.StringIO()
    code = main([command, str(SCENES / f"{scene_name}.json"), "--json"], stdout=out)
    if code != 0:
        raise SystemExit(f"{command} on {scene_name} exited with {code}")
    return out.getvalue()


def regenerate() -> None:
    GOLDENS.mkdir(parents=True, exist_ok=True)
    for command, scene_name in CASES:
        text = render(command, scene_name)
        target = GOLDENS / f"{command}_{scene_name}.json"
        target.write_text(text, encoding="utf-8")
        print(f"wrote {target.relative_to(ROOT)} ({len(text)} bytes)")


if __name__ == "__main__":
    sys.exit(regenerate())
