"""Smoke tests for the Python module and the command-line tool.

The C++ test suite carries the detailed checks; here we verify that the
bindings expose the operations faithfully and that the CLI's JSON output
matches the published schemas.
"""

import json
import math
import os
import subprocess

import jsonschema
import pytest

import sperner


def data_file(name):
    return os.path.join(os.environ["SPERNER_TEST_DATA_DIR"], name)


# ---------------------------------------------------------------- module ---


def test_version():
    assert sperner.__version__ == "0.1.0"


def test_lattice_basics():
    lat = sperner.Lattice(3, 5)
    assert len(lat) == 21 and lat.size == 21
    assert lat.k == 3 and lat.q == 5
    pts = lat.points()
    assert pts[0] == [5, 0, 0] and pts[-1] == [0, 0, 5]
    for r, p in enumerate(pts):
        assert lat.rank(p) == r and lat.unrank(r) == p and lat.contains(p)
    assert not lat.contains([5, 0, 1])
    assert len(sperner.enumerate_cells(3, 5)) == 15
    assert sperner.cell_vertices([0, 0, 4]) == [[1, 0, 4], [0, 1, 4], [0, 0, 5]]
    assert sperner.admissible_colors([0, 3, 2]) == [2, 3]
    assert len(sperner.enumerate_down_cells(5)) == 10
    assert sperner.down_cell_vertices([1, 1, 1]) == [[2, 2, 1], [2, 1, 2], [1, 2, 2]]


def test_labeling_and_stats():
    lab = sperner.first_choice(3, 5)
    assert sperner.is_admissible(lab)
    s = sperner.compute_stats(lab)
    assert (s.cells, s.mono, s.nonmono) == (15, 10, 5)
    assert s.bound == 5 and s.meets_bound
    assert list(s.per_color_mono) == [10, 0, 0]
    assert sperner.verify_mono_packing(lab) == 10
    pairs = sperner.mono_packing_witness(lab)
    assert len(pairs) == 10
    images = {tuple(img) for _, img in pairs}
    assert len(images) == 10  # pairwise distinct

    lab4 = sperner.top_coordinate(4, 16)
    assert sperner.compute_stats(lab4).max_colors_per_cell <= 4
    with pytest.raises(Exception):
        sperner.top_coordinate(3, 5)


def test_fixture_and_rainbow():
    lab = sperner.load_labeling(data_file("k3q5_one_rainbow.txt"))
    rc = sperner.find_rainbow_cells(lab)
    assert rc.up == [] and rc.down == [[1, 1, 1]]
    s = sperner.compute_stats(lab)
    assert list(s.per_color_mono) == [3, 3, 3]


def test_io_roundtrip(tmp_path):
    lab = sperner.random_admissible(4, 4, seed=3)
    text = sperner.labeling_to_string(lab)
    again = sperner.labeling_from_string(text)
    assert again.colors() == lab.colors()
    path = str(tmp_path / "lab.txt")
    sperner.save_labeling(lab, path)
    assert sperner.labeling_to_string(sperner.load_labeling(path)) == text


def test_search():
    res = sperner.exhaustive_search(sperner.Objective.min_nonmono, 3, 2)
    assert res.proven_optimal and res.optimum == 2 and res.bound == 2
    assert res.search_space_log2 == 3.0
    assert sperner.compute_stats(res.best).nonmono == 2

    opts = sperner.HeuristicOptions()
    opts.steps_per_restart = 0
    opts.restarts = 1
    heur = sperner.heuristic_search(sperner.Objective.min_nonmono, 3, 5, opts)
    assert not heur.proven_optimal and heur.optimum == 5  # warm start already tight


def test_geometry():
    assert math.isclose(sperner.simplex_volume(3), math.sqrt(3) / 2, rel_tol=1e-12)
    assert math.isclose(
        sperner.separating_set_content_exact(3), math.sqrt(1.5), rel_tol=1e-12
    )
    spec = sperner.VoronoiSpec([0.5, 0.3, 0.2])
    a = sperner.classify([1.0, 0.0, 0.0], spec)
    assert a.part == 1 and math.isclose(a.gap, 0.7, rel_tol=1e-12)
    assert sperner.is_sperner_admissible_partition(spec)

    rep = sperner.mc_minkowski_content(
        sperner.VoronoiSpec(sperner.barycenter(3)), 0.01, 65536, seed=1, workers=2
    )
    assert rep.hits > 0 and abs(rep.sigmas_off) <= 4
    assert rep.content_estimate == rep.neighborhood_volume / 0.02

    shrink = sperner.ShrunkPartition(sperner.VoronoiSpec(sperner.barycenter(3)), 0.01)
    v = shrink.verify(20000, seed=4)
    assert v.ok and v.disjoint_violations == 0 and v.containment_violations == 0

    demo = sperner.square_demo()
    assert math.isclose(demo.voronoi_length, 2.0, rel_tol=1e-12)
    assert math.isclose(demo.diagonal_infimum, math.sqrt(2), rel_tol=1e-12)


def test_svg():
    svg = sperner.render_labeling_svg(sperner.first_choice(3, 5))
    assert svg.count('<circle class="vertex') == 21
    assert svg.count('class="cell up') == 15
    assert sperner.render_voronoi_svg(sperner.VoronoiSpec([1 / 3] * 3)).count(
        'class="cut cut-'
    ) == 3


# ------------------------------------------------------------------- CLI ---


def run_cli(*args):
    proc = subprocess.run(
        [os.environ["SPERNER_CLI"], *args], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def validate(payload, schema_name):
    schema_path = os.path.join(os.environ["SPERNER_SCHEMA_DIR"], schema_name)
    with open(schema_path, encoding="utf-8") as f:
        jsonschema.validate(payload, json.load(f))


def test_cli_schemas(tmp_path):
    stats = json.loads(
        run_cli("label", "--strategy", "first-choice", "--k", "3", "--q", "5",
                "--stats")
    )
    validate(stats, "stats.schema.json")
    assert stats["nonmono"] == 5 and stats["meets_bound"]

    vb = json.loads(
        run_cli("verify-bound", "--strategy", "random", "--k", "4", "--q", "4",
                "--seed", "9")
    )
    validate(vb, "verify-bound.schema.json")
    assert vb["ok"] and vb["mono_cells_checked"] == vb["mono"]

    witness = str(tmp_path / "witness.txt")
    search = json.loads(
        run_cli("search", "--k", "3", "--q", "3", "--objective", "min-nonmono",
                "--out", witness)
    )
    validate(search, "search.schema.json")
    assert search["optimum"] == 3 and search["proven_optimal"]
    assert sperner.compute_stats(sperner.load_labeling(witness)).nonmono == 3

    measure = json.loads(
        run_cli("measure", "--k", "3", "--eps", "0.01", "--samples", "65536",
                "--seed", "5")
    )
    validate(measure, "measure.schema.json")
    assert measure["exact"] == pytest.approx(math.sqrt(1.5), rel=1e-9)

    demo = json.loads(run_cli("square-demo"))
    validate(demo, "square-demo.schema.json")

    enum = json.loads(run_cli("enumerate", "--k", "3", "--q", "2", "--cells"))
    validate(enum, "enumerate.schema.json")
    assert enum["count"] == 3 and enum["items"][0] == [1, 0, 0]


def test_cli_matches_module():
    out = run_cli("label", "--strategy", "random", "--k", "3", "--q", "4",
                  "--seed", "12")
    lab = sperner.labeling_from_string(out)
    assert lab.colors() == sperner.random_admissible(3, 4, seed=12).colors()
