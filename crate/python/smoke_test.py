#!/usr/bin/env python3
"""Smoke test for the fhg_py extension module.

Builds the cdylib with cargo (unless FHG_PY_SKIP_BUILD is set), loads it,
and exercises the main surface: gadgets, exact utilities, stability
verdicts, solvers, deviation walks and text round-trips.

Run from the repository root:

    python3 python/smoke_test.py
"""

import os
import shutil
import subprocess
import sys
import sysconfig
import tempfile
from fractions import Fraction

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def build_and_import():
    if not os.environ.get("FHG_PY_SKIP_BUILD"):
        subprocess.run(
            ["cargo", "build", "--release", "-p", "fhg-py"],
            cwd=REPO,
            check=True,
        )
    lib = os.path.join(REPO, "target", "release", "libfhg_py.so")
    if not os.path.exists(lib):  # e.g. macOS
        lib = os.path.join(REPO, "target", "release", "libfhg_py.dylib")
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    stage = tempfile.mkdtemp(prefix="fhg-py-")
    shutil.copy(lib, os.path.join(stage, "fhg_py" + suffix))
    sys.path.insert(0, stage)
    import fhg_py

    return fhg_py


def main():
    fhg = build_and_import()

    # Gadget catalogue and exact utilities.
    game, certified = fhg.gadget("two-triangles-6")
    assert game.players == 6 and game.is_simple and game.is_symmetric
    assert game.utility(0, [0, 1, 2]) == Fraction(2, 3)
    assert game.utility(0, [0, 1, 2, 3, 4, 5]) == Fraction(1, 2)
    assert certified is not None

    # The certified split is the unique core-stable partition.
    verdict, cert = game.is_core_stable(certified)
    assert verdict == "stable", verdict
    stable = game.stable_partitions("core")
    assert len(stable) == 1 and stable[0] == certified

    # The grand coalition is blocked by a triangle.
    verdict, cert = game.is_core_stable(fhg.Partition.grand(6))
    assert verdict == "unstable"
    assert sorted(cert["coalition"]) == [0, 1, 2]
    player, before, after = cert["deltas"][0]
    assert before == Fraction(1, 2) and after == Fraction(2, 3)

    # Strict core of the 5-cycle is empty.
    c5, _ = fhg.gadget("c5")
    assert c5.girth() == 5
    assert c5.stable_partitions("strict-core") == []

    # Solvers.
    pairing = c5.solve("degree2")
    assert c5.is_core_stable(pairing)[0] == "stable"
    k410 = fhg.bakers_millers_graph([4, 10])
    finest = fhg.bakers_millers_finest([4, 10])
    assert len(finest.coalitions) == 2
    assert k410.is_strict_core_stable(finest)[0] == "stable"

    # A weighted digraph with an empty core.
    digraph, _ = fhg.gadget("digraph-5")
    assert not digraph.is_symmetric
    assert fhg.core_nonempty(digraph) is None
    assert digraph.utility(0, [0, 1]) == Fraction(1, 2)

    # Deviation walk reaches the unique stable partition.
    walk = game.deviation_walk(fhg.Partition.grand(6), max_steps=50)
    assert walk["end"] == "converged" and walk["partition"] == certified

    # Text round-trip, including subsidies.
    text = game.serialize()
    assert fhg.Game.parse(text).serialize() == text
    sg = fhg.Game.parse("fhg 2 undirected simple\n1 2\nsubsidy 1 4\n")
    verdict, cert = sg.is_core_stable(fhg.Partition.grand(2))
    assert verdict == "unstable" and cert["coalition"] == [0]

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
