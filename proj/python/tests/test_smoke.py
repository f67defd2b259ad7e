import itertools

import numpy as np
import pytest

import grcodes as gc


def brute_distance(gen):
    k = gen.shape[0]
    best = gen.shape[1]
    for msg in itertools.product([0, 1], repeat=k):
        if any(msg):
            w = int(((np.array(msg) @ gen) % 2).sum())
            best = min(best, w) if w else best
    return best


def test_group_and_element():
    g = gc.Group("D6")
    assert g.order == 6
    assert g.word(g.mul(3, 1)) == "a*b"
    u = gc.Element("1 + g + g^3", "C7")
    assert u.coefficients == [1, 1, 0, 1, 0, 0, 0]
    assert (u + u).is_zero()
    assert gc.Element("1+g^2+g^5+g^9+g^12", "C14").transpose() == gc.Element("1+g^2+g^5+g^9+g^12", "C14")


def test_rg_matrix_is_multiplicative():
    u = gc.Element("1 + a + a*b^2", "D8")
    v = gc.Element("b + a*b", "D8")
    assert np.array_equal(gc.rg_matrix(u * v), (gc.rg_matrix(u) @ gc.rg_matrix(v)) % 2)


def test_classify():
    c = gc.classify(gc.Element("1+g^2+g^5+g^9+g^12", "C14"))
    assert c["kind"] == "unit"
    assert c["inverse"] == gc.Element("1+g^2+g^5+g^9+g^12", "C14")
    assert gc.classify(gc.Element("2", "C1", "z"))["kind"] == "neither"


def test_hamming_and_dual():
    u = gc.Element("1 + g + g^3", "C7")
    code = gc.zero_divisor_code(u, gc.greedy_basis(u))
    assert (code.n, code.k) == (7, 4)
    assert code.distance() == 3 == brute_distance(code.generator)
    assert not ((code.generator @ code.check.T) % 2).any()
    d = gc.dual(code)
    assert d.k == 3 and d.distance() == 4


def test_selfdual_and_unit_codes():
    u, code = gc.selfdual_family()
    assert code.distance() == 4
    assert gc.is_self_dual(u)
    u14 = gc.orthogonal_unit(7, [2])
    basis, dist, exhaustive = gc.best_basis(u14, 7, budget=3432)
    assert dist == 4 and exhaustive
    assert gc.unit_code(u14, basis).distance() == 4


def test_constructions():
    _, _, c24 = gc.dihedral_double(gc.Element("1+g^2+g^3+g^9+g^10+g^11", "C12"))
    assert (c24.n, c24.k, c24.distance()) == (24, 11, 8)
    check, code = gc.qc_ldpc("C5", "C3xC2", 2, seed=1)
    assert check.shape == (10, 30)
    assert (check.sum(axis=0) == 2).all() and (check.sum(axis=1) == 6).all()
    v, inv, _ = gc.ldpc_unit_example(100)
    assert (v * inv).is_one()


def test_errors():
    with pytest.raises(gc.ParseError):
        gc.Element("1 + q", "C7")
    with pytest.raises(gc.PreconditionError):
        gc.euclid_inverse(gc.Element("1 + g", "C4"))
    with pytest.raises(gc.Error):
        gc.check_code(gc.Element("1", "C3"))


def test_min_distance_matches_brute_force():
    rng = np.random.default_rng(0)
    for _ in range(20):
        gen = rng.integers(0, 2, size=(6, 12))
        if not gen.any():
            continue
        assert gc.min_distance(gen) == brute_distance(gen)


def test_verify_claims():
    claims = gc.verify_claims()
    assert all(c["pass"] or c["erratum"] for c in claims)
