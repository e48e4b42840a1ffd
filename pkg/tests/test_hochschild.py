import random
from fractions import Fraction
from math import comb

import pytest

from homalg.hochschild import (UNIT, BarChain, KoszulChain, NotInImage, connes_B,
                               connes_B_literal, cycle_delta, cycle_pi, hh_dims, hochschild_b,
                               koszul_b, koszul_complex, koszul_euler, koszul_resolution_exactness,
                               lift_to_koszul, normalized_bar_dims, literal_q_pi_report, q_embed,
                               resolution_euler, resolution_identities, resolution_matrices)
from homalg.linalg import NotAComplex, Subspace
from homalg.ncalg import QuadraticAlgebra, sklyanin_params


def random_bar_chain(a, rng, n, max_weight=4, terms=3):
    out = {}
    for _ in range(terms):
        degs = [rng.randint(0, 2) for _ in range(n + 1)]
        while sum(degs) > max_weight:
            degs[rng.randrange(n + 1)] = 0
        out[tuple((d, rng.randrange(a.dim(d))) for d in degs)] = rng.randint(-3, 3)
    return BarChain(a, n + 1, out)


def random_koszul_chain(kc, rng):
    m = rng.randint(1, kc.length)
    d = rng.randint(m, m + 2)
    a = kc.algebra
    terms = {(rng.randrange(a.dim(d - m)), rng.randrange(kc.dim(m))): rng.randint(-3, 3)
             for _ in range(3)}
    return KoszulChain(kc, m, d, terms)


def test_connes_B_small_cases(algebra):
    a0, a1 = (1, 0), (1, 2)
    c0 = BarChain(algebra, 1, {(a0,): 1})
    assert connes_B(c0) == BarChain(algebra, 2, {(UNIT, a0): 1, (a0, UNIT): 1})
    c1 = BarChain(algebra, 2, {(a0, a1): 1})
    # (1 - t) s N worked out by hand
    want = {(UNIT, a0, a1): 1, (UNIT, a1, a0): -1, (a1, UNIT, a0): -1, (a0, UNIT, a1): 1}
    assert connes_B(c1) == BarChain(algebra, 3, want)


@pytest.mark.parametrize("B", [connes_B, connes_B_literal])
def test_operator_identities(algebra, B):
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(0, 2)
        c = random_bar_chain(algebra, rng, n)
        assert not B(B(c))
        lhs = hochschild_b(B(c))
        if n >= 2:
            assert not hochschild_b(hochschild_b(c))
        if n >= 1:
            lhs = lhs + B(hochschild_b(c))
        assert not lhs


def test_two_B_conventions_differ(algebra):
    c = BarChain(algebra, 2, {((1, 0), (1, 2)): 1})
    assert connes_B(c) != connes_B_literal(c)


def test_bar_chain_validation(algebra):
    with pytest.raises(ValueError):
        BarChain(algebra, 2, {((1, 0),): 1})
    with pytest.raises(ValueError):
        hochschild_b(BarChain(algebra, 1, {((1, 0),): 1}))
    c = BarChain(algebra, 2, {((1, 0), (0, 0)): 1})
    assert not c.is_normalized() and c.weights() == {1}


def test_koszul_complex_shape(algebra):
    kc = koszul_complex(algebra)
    assert [kc.dim(m) for m in range(kc.length + 1)] == [1, 4, 6, 4, 1]
    assert kc.chain_dim(2, 5) == 6 * comb(6, 3)


def test_koszul_b_is_transported_bar_boundary(algebra):
    kc = koszul_complex(algebra)
    rng = random.Random(5)
    for _ in range(20):
        k = random_koszul_chain(kc, rng)
        bk = koszul_b(k, check=True)
        assert q_embed(bk) == hochschild_b(q_embed(k))
        if k.m >= 2:
            assert not koszul_b(bk)


def test_lift_rejects_non_koszul_chains(algebra):
    kc = koszul_complex(algebra)
    with pytest.raises(NotInImage):
        lift_to_koszul(kc, BarChain(algebra, 2, {((1, 0), (2, 0)): 1}))
    with pytest.raises(NotInImage):
        lift_to_koszul(kc, BarChain(algebra, 3, {((0, 0), (1, 0), (1, 0)): 1}))


@pytest.fixture(scope="module")
def hh6(params):
    return hh_dims(params, 6)


def test_hh_against_normalized_bar(algebra, hh6):
    for d in range(5):
        bar = normalized_bar_dims(algebra, d)
        assert [hh6[i, d] for i in range(5)] == (bar + [0] * 5)[:5]


def test_hh_euler(hh6):
    for d in range(7):
        assert sum((-1) ** i * hh6[i, d] for i in range(5)) == koszul_euler(d)


def test_hh_frozen(hh6):
    assert hh6.row(0) == [1, 4, 4, 8, 7, 12, 10]
    assert hh6.row(3) == [0, 0, 0, 0, 1, 0, 2]


def test_hkr_for_polynomial_ring():
    # commutative polynomial ring: HH_i = polynomial i-forms
    g = 4
    vecs = [{i * g + j: 1, j * g + i: -1} for i in range(g) for j in range(i + 1, g)]
    a = QuadraticAlgebra(g, Subspace(g * g, vecs))
    table = hh_dims(a, 4)
    for i in range(5):
        for d in range(5):
            want = comb(4, i) * comb(d - i + 3, 3) if d >= i else 0
            assert table[i, d] == want


def test_resolution_identities(params):
    assert resolution_identities(params) == {"M.x": True, "N.M": True, "t.N": True}
    lit = resolution_identities(params, literal=True)
    assert lit["t.N"] and not lit["M.x"] and not lit["N.M"]
    r = resolution_matrices(params)
    assert (len(r.x), len(r.M), len(r.N), len(r.t)) == (4, 6, 4, 1)


def test_resolution_exactness(params):
    assert koszul_resolution_exactness(params, 5)
    detail = koszul_resolution_exactness(params, 4, detail=True)
    assert set(detail) == {(d, pos) for d in range(5) for pos in range(-1, 5)}
    # the literal M does not compose to zero with x
    with pytest.raises(NotAComplex):
        koszul_resolution_exactness(params, 3, literal=True)
    for d in range(8):
        assert resolution_euler(d) == 0


@pytest.mark.parametrize("alphas", [(Fraction(1, 2), Fraction(1, 3)), (Fraction(2), Fraction(-5))])
def test_resolution_other_parameters(alphas):
    p = sklyanin_params(*alphas)
    assert all(resolution_identities(p).values())


def test_distinguished_cycles(params):
    delta, pi = cycle_delta(params), cycle_pi(params)
    assert not koszul_b(delta, check=True)
    assert not koszul_b(pi, check=True)
    assert not hochschild_b(q_embed(pi))
    assert pi.terms and pi.weight == 4 and pi.m == 3


def test_literal_q_pi_is_not_a_cycle(params):
    rep = literal_q_pi_report(params)
    assert rep == {"is_cycle": False, "ratio": None, "match": False}
