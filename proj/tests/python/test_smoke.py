import pytest

import gfan3


def binary_ideal(d):
    return [[(1, 1, (d - i, i, 0))] for i in range(d + 1)]


def test_basics():
    assert len(gfan3.monomial_basis(3)) == 10
    assert gfan3.monomial_basis(3)[0] == (3, 0, 0)
    assert gfan3.monomial_basis(3)[-1] == (0, 0, 3)
    assert gfan3.det([["1", "0", "1"], ["1", "1", "0"], ["1", "0", "0"]]) == "-1"
    assert gfan3.det([["1/2", "1/3"], ["1/4", "1/5"]]) == "1/60"
    assert gfan3.witness_change() == [["1", "0", "1"], ["1", "1", "0"],
                                      ["1", "0", "0"]]


def test_family_and_weights():
    fam = gfan3.family_ideal(3)
    assert len(fam) == 4
    assert fam[0] == [(1, 1, (0, 3, 0))]
    assert gfan3.index_set_J(7, 2)[:2] == [(6, 0, 1), (5, 1, 1)]
    ol = gfan3.omega_lambda(7, 2)
    assert ol["omega"] == (-5, -2, 7)
    assert ol["lambda"] == -20
    sep = gfan3.check_separation(7, 2)
    assert sep["pass"] and not sep["violations"]
    with pytest.raises(ValueError):
        gfan3.index_set_J(6, 2)


def test_appendix_reduction():
    ch = gfan3.appendix_reduction(3, 1)
    assert ch["detB"] == "3"
    assert ch["detE"] == "-1"
    assert ch["absDetEOne"] is True
    assert ch["chainConsistent"] is False
    assert [s["name"] for s in ch["stages"]] == [
        "B", "laplace", "replace_columns", "scale", "round_1", "rescale"]
    ok = gfan3.appendix_reduction(4, 0)
    assert ok["chainConsistent"] is True


def test_fan_components():
    fam = gfan3.family_ideal(3)
    mono = gfan3.fan_component(fam, 3)
    assert mono["count"] == 1
    assert mono["vertices"][0]["m"] == (3, 6, 3)

    gen = gfan3.generic_fan(fam, 3)
    assert gen["agreement"] is True
    assert gen["count"] == 9
    assert gfan3.gin_lower_bound(fam, 3) == 9
    assert gfan3.gin_lower_bound(binary_ideal(3), 3) == 3

    degenerate = [[(1, 1, (3, 0, 0))]] * 4
    with pytest.raises(gfan3.PreconditionError):
        gfan3.gin_lower_bound(degenerate, 3)


def test_family_bound_report():
    rep = gfan3.family_bound_report(4)
    assert rep["agreement"] is True
    assert rep["count"] >= rep["bound"]
    assert rep["located_distinct"] is True
    assert rep["located_strict"] is True


def test_refine_range():
    out = gfan3.refine_range(binary_ideal(3), 3, 5)
    assert out["agreement"] is True
    assert out["cumulative"] == [3, 3, 3]
    assert len(out["directions"]) == 3


def test_brute_hull_matches_component():
    # same ideal, same degree: exhaustive minors and the sweep agree
    mixed = [[(1, 1, (2, 0, 0)), (1, 1, (0, 2, 0))], [(1, 1, (1, 1, 0))]]
    comp = gfan3.fan_component(mixed, 2)
    hull = gfan3.brute_hull(mixed, 2)
    assert comp["count"] == 2
    assert sorted(hull) == sorted(v["m"] for v in comp["vertices"])

    fam = gfan3.family_ideal(4)
    assert gfan3.brute_hull(fam, 4) == [(6, 10, 4)]  # single monomial basis
    with pytest.raises(RuntimeError):
        gfan3.brute_hull(fam, 4, limit=3)


def test_random_experiment():
    rep = gfan3.random_experiment(4, 2)
    assert rep["bound"] == 2
    assert rep["pass_count"] == 2
    ideal = gfan3.random_ideal(4, trial=1)
    assert len(ideal) == 5
    assert gfan3.random_ideal(4, trial=1) == ideal
