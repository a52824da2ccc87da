"""Smoke test for the `paretoplace` extension module.

Build the module, put it on the path as paretoplace.so, then run:

    cargo build -p paretoplace-python --release --features extension-module
    cp target/release/libparetoplace.so python/paretoplace.so
    python3 python/smoke_test.py
"""

import json
import math
import sys

import paretoplace as pp


def close(a, b, tol):
    return abs(a - b) <= tol


def main():
    pose = pp.UserPose()
    assert close(pose.arm_length, 0.65, 1e-12)

    try:
        pp.UserPose(arm_length=-1.0)
    except ValueError as e:
        assert "arm_length" in str(e)
    else:
        raise AssertionError("negative arm length accepted")

    # Directly below the shoulder: arm at rest, neck looking straight down-ish.
    below = pp.evaluate((0.2, 1.45 - 0.65, 0.0), pose)
    assert close(below.objectives[1], 0.0, 1e-9), below
    assert below.is_feasible

    front = pp.nsga3_run(pose, seed=42, generations=200)
    oracle = pp.brute_force_front(pose, resolution=48)
    assert len(front) >= 10
    assert all(c.reach_violation <= 1e-9 for c in front)
    score = pp.igd(front, oracle)
    assert score <= 0.05, score

    knee = [[0.0, 1.0], [0.3, 0.3], [1.0, 0.0]]
    assert close(pp.tradeoff_mu(knee, 1), 7.0 / 3.0, 1e-9)
    reduced = pp.reduce_front(knee, k=3)
    assert [r.is_knee for r in reduced].count(True) == 1

    sa = pp.anneal_weighted_sum([0.5, 0.5], pose)
    assert close(sa.objectives[0], math.pi / 2, 0.02), sa
    assert sa.objectives[1] <= 0.02, sa

    session = pp.Session(pose, generations=60)
    first = session.adapt()
    assert len(first) == 5 and session.round == 1
    bounds = dict(session.select(session.auto_pick))
    second = session.adapt()
    for r in second:
        neck, arm = r.candidate.objectives
        assert neck <= bounds["neck_angle"] + 1e-9
        assert arm <= bounds["arm_angle"] + 1e-9
    try:
        session.select(first[0].id)
    except KeyError:
        pass
    else:
        raise AssertionError("stale selection accepted")

    restored = pp.Session.from_json(session.to_json())
    assert restored.round == 2
    assert json.loads(restored.to_json()) == json.loads(session.to_json())

    print(f"ok: nsga3 {len(front)} points, igd {score:.4f}, sa {sa.objectives}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
