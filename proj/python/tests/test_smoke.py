import pytest

import fqreduce


def poly_mul(q, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return out


def test_factor_routes_agree():
    # x (x + 1) (x^2 + x + 1)^2 over F_2
    f = poly_mul(2, poly_mul(2, [0, 1], [1, 1]), poly_mul(2, [1, 1, 1], [1, 1, 1]))
    expect = [([0, 1], 1), ([1, 1], 1), ([1, 1, 1], 2)]
    for via in ("reference", "frobminpoly", "factordegree"):
        assert fqreduce.factor(2, f, via=via) == expect


def test_random_instance_product():
    f = fqreduce.random_squarefree(97, 60, seed=3)
    prod = [1]
    for g, mult in fqreduce.factor(97, f, via="frobminpoly"):
        for _ in range(mult):
            prod = poly_mul(97, prod, g)
    assert prod == f


def test_oracles():
    f = [0, 1, 0, 0, 1]  # x (x + 1) (x^2 + x + 1) over F_2
    assert fqreduce.frob_minpoly(2, f) == [1, 0, 1]
    assert fqreduce.frob_minpoly(2, f, oracle="reference") == [1, 0, 1]
    assert fqreduce.largest_factor_degree(2, f) == 2
    assert fqreduce.largest_factor_degree(2, f, which="vandermonde") == 2
    assert fqreduce.smallest_factor_degree(2, f) == 1
    assert fqreduce.carlitz_charpoly(2, [0, 1, 1]) == [0, 1, 1]


def test_text_and_cli():
    assert fqreduce.format_poly(2, [1, 1, 1]) == "q=2 f=1,1,1"
    assert fqreduce.parse_poly(" q=7 f=3,0,1 ") == (7, [3, 0, 1])
    code, out, err = fqreduce.run_cli(["factor"], "q=2 f=1,1,1\n")
    assert (code, out, err) == (0, "q=2 f=1,1,1\n", "")
    code, _, err = fqreduce.run_cli(["moore-det", "--m", "1"], "q=2 f=0,1,0,1,0,1")
    assert code == 2 and err


def test_errors():
    with pytest.raises(fqreduce.FqreduceError):
        fqreduce.factor(4, [1, 1])
    with pytest.raises(ValueError):
        fqreduce.largest_factor_degree(2, [0, 1, 0, 1, 0, 1])
