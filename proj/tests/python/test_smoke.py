"""Smoke tests for the _vkcgs python module and the CLI."""

import json
import os
import subprocess
import tempfile

import pytest

import vkcgs


def test_moment_curve_and_invariants():
    k5 = vkcgs.moment_curve_configuration(2, 5)
    assert k5["dim"] == 2
    assert k5["points"][4] == ["5", "25"]
    assert vkcgs.is_general_position(k5)
    assert vkcgs.van_kampen_number(k5, skeleton_dim=1) == 1
    assert len(vkcgs.van_kampen_witnesses(k5, skeleton_dim=1)) == 5

    k6 = vkcgs.moment_curve_configuration(3, 6)
    assert vkcgs.cgs_number(k6) == 1
    assert len(vkcgs.cgs_linked_pairs(k6)) == 1

    line = vkcgs.moment_curve_configuration(1, 4)
    parity, count = vkcgs.mixed_pair_parity(line)
    assert parity == 0
    assert count >= 1
    assert vkcgs.linking_number_mod2(line, [0, 2], [1, 3]) == 1


def test_rational_coordinates_are_exact():
    cfg = {"dim": 1, "points": [["1/3"], ["2/3"], [1]]}
    assert vkcgs.is_general_position(cfg)
    assert vkcgs.van_kampen_number(cfg) == 1
    assert vkcgs.faces_intersect(cfg, [1], [0, 2])
    assert not vkcgs.faces_intersect(cfg, [0], [1, 2])


def test_sampling_is_deterministic():
    a = vkcgs.sample_configuration(2, 5, seed=42)
    b = vkcgs.sample_configuration(2, 5, seed=42)
    assert a == b
    assert vkcgs.is_general_position(a)


def test_cone_and_link():
    base = vkcgs.moment_curve_configuration(2, 5)
    cone = vkcgs.cone_configuration(base, seed=99)
    assert cone["result"]["dim"] == 3
    assert cone["apex_index"] == 5
    assert vkcgs.is_general_position(cone["result"])

    link = vkcgs.link_configuration(base, center=0)
    assert link["dim"] == 2
    assert len(link["vectors"]) == 4
    assert vkcgs.is_generic_spherical(link)

    k6 = vkcgs.moment_curve_configuration(3, 6)
    for center in range(6):
        sph = vkcgs.link_configuration(k6, center=center)
        assert vkcgs.spherical_van_kampen(sph, skeleton_dim=2) == 1


def test_run_verification_report():
    report = vkcgs.run_verification("tr-plus", dim=2, trials=25, seed=7)
    assert report["aggregatePass"] is True
    assert report["summary"]["trialsPassed"] == 25
    assert report["failures"] == []

    again = vkcgs.run_verification("tr-plus", dim=2, trials=25, seed=7, workers=3)
    assert report == again

    with pytest.raises(Exception):
        vkcgs.run_verification("footnote-even", dim=2, trials=5, seed=1)


@pytest.mark.skipif("VKCGS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_end_to_end():
    cli = os.environ["VKCGS_CLI"]

    fixture = subprocess.run(
        [cli, "fixture", "--name", "moment-curve", "--dim", "3", "--points", "6"],
        check=True, capture_output=True, text=True)
    cfg = json.loads(fixture.stdout)
    assert cfg["dim"] == 3

    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
        handle.write(fixture.stdout)
        path = handle.name
    try:
        compute = subprocess.run(
            [cli, "compute", "--input", path, "--invariant", "c"],
            check=True, capture_output=True, text=True)
        result = json.loads(compute.stdout)
        assert result["c"] == 1
        assert len(result["linkedPairs"]) == 1
    finally:
        os.unlink(path)

    verify = subprocess.run(
        [cli, "verify", "--statement", "radon-unique", "--dim", "2",
         "--trials", "20", "--seed", "5"],
        capture_output=True, text=True)
    assert verify.returncode == 0
    report = json.loads(verify.stdout)
    assert report["aggregatePass"] is True

    bad = subprocess.run([cli, "verify", "--statement", "bogus", "--dim", "2",
                          "--trials", "1", "--seed", "1"],
                         capture_output=True, text=True)
    assert bad.returncode == 2
