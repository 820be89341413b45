import pytest

import jointslab as jl


def test_grid_joints():
    c = jl.grid(3, 2, 101)
    assert len(c) == 12
    assert c.dim == 3
    assert c.characteristic == 101
    assert jl.joint_count(c) == 8
    report = jl.joints(c)
    assert report["summary"]["joint_count"] == 8
    assert all(rec["multiplicity"] == 6 for rec in report["joints"])


def test_collection_round_trip():
    c = jl.generic_star(3, 6, 101, 42)
    again = jl.LineCollection.from_json(c.to_json())
    assert again.to_json() == c.to_json()
    base, direction = c.line(0)
    assert len(base) == 3 and len(direction) == 3


def test_bounds():
    assert jl.dstar(3, 25) == 4
    assert jl.dstar(3, 100) == 7
    assert jl.theorem1_bound(12, 3) == 84
    assert jl.theorem2_bound(12, 3, 27) == 84
    c = jl.grid(3, 2, 101)
    assert jl.joint_count(c) <= jl.theorem1_bound(len(c), c.dim)


def test_multiplicity_and_peel():
    star = jl.generic_star(3, 6, 101, 42)
    assert jl.multiplicity(star, [0, 0, 0]) == 120
    trace = jl.peel(jl.grid(3, 2, 101))
    sizes = [len(step["extracted"]) for step in trace["steps"]]
    assert sum(sizes) == 8
    assert max(sizes) <= trace["part_bound"]


def test_choose_on_star():
    star = jl.generic_star(3, 6, 101, 42)
    out = jl.choose(star, 120)
    assert out["chosen_lines"] == [0, 1, 2, 3]
    assert out["violations"] == []


def test_choose_rejects_degenerate_input():
    plane = jl.plane_with_verticals(3)
    assert not jl.is_generic(plane)
    assert jl.genericity_witness(plane) is not None
    with pytest.raises(jl.GenericityError) as exc:
        jl.choose(plane, 1)
    witness = exc.value.witness
    assert len(witness["lines"]) == 3
    assert len(witness["point"]) == 3


def test_pencil_greedy_takes_axis_only():
    pencil = jl.axis_with_planar_pencil(4, 0)
    out = jl.choose(pencil, 36, require_generic=False)
    assert out["chosen_lines"] == [0]
    assert len(out["violations"]) == 1


def test_vanishing_polynomial():
    points = [[a, b, 0] for a in range(5) for b in range(5)]
    degree, poly = jl.minimal_vanishing_polynomial(5, points)
    assert degree == 1
    assert [t["exps"] for t in poly["terms"]] == [[0, 0, 1]]
    assert jl.evaluate(5, poly, [1, 4, 0]) == "0"
    grads = jl.gradient(5, poly)
    assert len(grads) == 3
    assert jl.vanishing_polynomial(5, points, 0) is None


def test_sampling_reproducible():
    star = jl.generic_star(3, 8, 101, 2)
    a_report, a_csv = jl.sample_survival(star, 336, 50, 9)
    b_report, b_csv = jl.sample_survival(star, 336, 50, 9)
    assert a_report == b_report
    assert a_csv == b_csv
    assert a_csv.startswith("trial,kept_lines,survivors\n")


def test_slope_partition():
    out = jl.slope_partition(11, 3)
    assert len(out["blocks"]) == 3
    counts = [len(entry["lines"]) for entry in out["choices"]]
    assert set(counts) <= {3, 4}


def test_input_errors_surface_as_library_errors():
    with pytest.raises(jl.Error):
        jl.grid(3, 200, 101)
    with pytest.raises(jl.Error):
        jl.plane_with_verticals(4)
