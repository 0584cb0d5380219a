import json

import pytest

import munarini


def test_strings():
    assert munarini.enumerate_pell_strings(1, 3) == ["0", "1", "2"]
    assert len(munarini.enumerate_pell_strings(3, 3)) == 33
    assert munarini.encode_psi("12", 3) == "100010"
    assert munarini.decode_psi("001000", 3) == "33"
    assert munarini.weight("33", 3) == 1
    assert munarini.is_pell_string([2, 2, 0], 2)
    assert not munarini.is_pell_string([2, 0, 2], 2)
    with pytest.raises(munarini.InputError):
        munarini.decode_psi("001010", 3)


def test_graphs():
    g = munarini.build("munarini", 2, 3)
    assert (g.order, g.size) == (10, 13)
    assert g.max_degree() == 5
    assert munarini.build("genpell", 2, 3).max_degree() == 4
    assert munarini.graph_from_json(g.to_json()) == g
    assert json.loads(g.to_json())["family"] == "munarini"
    assert g.to_dot().startswith("graph ")
    with pytest.raises(munarini.UnsupportedParameter):
        munarini.build("genpell", 1, 1)


def test_structure():
    m = munarini.build("munarini", 3, 3)
    p = munarini.build("genpell", 3, 3)
    assert munarini.is_isometric(m)
    assert munarini.is_daisy_cube(m)
    assert munarini.is_median_closed(p)
    assert not munarini.is_daisy_cube(p)
    assert munarini.cube_census(p) == munarini.cube_poly(3, 3)
    assert munarini.maximal_cube_census(p) == munarini.maximal_cube_poly(3, 3)


def test_polynomials():
    assert munarini.weight_poly(2, 3) == [1, 5, 4]
    assert munarini.cube_poly(2, 3) == [10, 13, 4]
    assert munarini.maximal_cube_poly(3, 2) == [0, 0, 2, 1]
    assert munarini.distance_cube_poly(2, 3)[(1, 1)] == 8
    assert munarini.cube_number_series(2, 4) == [1, 3, 11, 39, 139]
    assert munarini.count_edges(3, 3) == 64
    # Arbitrary precision survives the boundary.
    assert munarini.fib_k(100, 1) == 354224848179261915075
    with pytest.raises(munarini.UnsupportedParameter):
        munarini.maximal_cube_poly(3, 1)


def test_verify_and_cli():
    checks, failures = munarini.verify("all", 3, 3)
    assert checks > 0 and failures == []
    code, out, _ = munarini.run_cli(["poly", "qnum", "-k", "2", "-N", "4"])
    assert (code, out) == (0, "1 3 11 39 139\n")
    code, _, err = munarini.run_cli(["gen", "--family", "genpell", "-n", "1", "-k", "1"])
    assert code == 2 and err
