from fractions import Fraction
from functools import lru_cache
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from homalg.linalg import Subspace, rank
from homalg.ncalg import (NCPoly, ParameterError, QuadraticAlgebra, SklyaninParams, graded_dim,
                          koszul_dual_dim, koszul_subspace, placement_vectors, sklyanin_algebra,
                          sklyanin_params, sklyanin_relation_polys, tensor_quotient_dim,
                          word_index)


def commutative(g=4):
    vecs = []
    for i in range(g):
        for j in range(i + 1, g):
            vecs.append({i * g + j: 1, j * g + i: -1})
    return QuadraticAlgebra(g, Subspace(g * g, vecs))


def exterior(g=4):
    vecs = [{i * g + i: 1} for i in range(g)]
    for i in range(g):
        for j in range(i + 1, g):
            vecs.append({i * g + j: 1, j * g + i: 1})
    return QuadraticAlgebra(g, Subspace(g * g, vecs))


ALPHAS = [(Fraction(1, 4), Fraction(1, 9)), (Fraction(1, 2), Fraction(1, 3)), (Fraction(-3, 10), Fraction(2, 5))]


def test_params_lie_on_surface():
    for a1, a2 in ALPHAS:
        p = sklyanin_params(a1, a2)
        assert sum(p.alphas) + p.alpha1 * p.alpha2 * p.alpha3 == 0
        assert p.is_generic()
    with pytest.raises(ParameterError):
        sklyanin_params(1, -1)
    with pytest.raises(ParameterError):
        sklyanin_params(0, Fraction(1, 2))
    assert not sklyanin_params(0, Fraction(1, 2), guard=False).is_generic()
    with pytest.raises(ParameterError):
        SklyaninParams(1, 1, 1)


def test_relation_polys():
    p = sklyanin_params(*ALPHAS[0])
    rels = sklyanin_relation_polys(p)
    assert list(rels) == [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)]
    S = [NCPoly.gen(i) for i in range(4)]
    f23 = S[2] * S[3] - S[3] * S[2] - S[0] * S[1] - S[1] * S[0]
    assert rels[2, 3] == f23


@pytest.mark.parametrize("alphas", ALPHAS)
def test_flatness(alphas):
    a = sklyanin_algebra(*alphas)
    assert [graded_dim(a, n) for n in range(7)] == [comb(n + 3, 3) for n in range(7)]


def test_incremental_matches_direct_quotient(algebra):
    for n in range(5):
        assert graded_dim(algebra, n) == tensor_quotient_dim(algebra, n)


def test_reference_algebras():
    assert [graded_dim(commutative(), n) for n in range(5)] == [comb(n + 3, 3) for n in range(5)]
    assert [graded_dim(exterior(), n) for n in range(6)] == [1, 4, 6, 4, 1, 0]
    free = QuadraticAlgebra(2, Subspace(4))
    assert [graded_dim(free, n) for n in range(5)] == [1, 2, 4, 8, 16]


def test_koszul_dual(algebra):
    assert [koszul_dual_dim(algebra, m) for m in range(7)] == [1, 4, 6, 4, 1, 0, 0]
    assert [koszul_subspace(algebra, m).dim for m in range(6)] == [1, 4, 6, 4, 1, 0]
    dual = commutative().koszul_dual()
    assert [graded_dim(dual, n) for n in range(6)] == [1, 4, 6, 4, 1, 0]


def test_basis_words_independent_mod_relations(algebra):
    g = 4
    for n in (2, 3, 4):
        plac = placement_vectors(algebra, n)
        words = [{word_index(w, g): 1} for w in algebra.graded_basis(n).words]
        assert rank(plac + words) == rank(plac) + len(words)


words4 = st.lists(st.integers(0, 3), min_size=0, max_size=4).map(tuple)
words3 = st.lists(st.integers(0, 3), min_size=0, max_size=3).map(tuple)


@lru_cache(maxsize=None)
def cached_algebra(k):
    return sklyanin_algebra(*ALPHAS[k])


@lru_cache(maxsize=None)
def placements(n):
    plac = placement_vectors(cached_algebra(0), n)
    return plac, rank(plac)


@settings(max_examples=60, deadline=None)
@given(words4)
def test_reduction_agrees_with_direct_quotient(w):
    # w - sum_j c_j b_j must lie in the span of all relation placements
    a = cached_algebra(0)
    n = len(w)
    coords = a.word_coordinates(w)
    basis = a.graded_basis(n).words
    diff = {word_index(w, 4): Fraction(1)}
    for j, c in coords.items():
        k = word_index(basis[j], 4)
        diff[k] = diff.get(k, 0) - c
    diff = {k: v for k, v in diff.items() if v}
    if diff:
        plac, r = placements(n)
        assert rank(plac + [diff]) == r


@settings(max_examples=40, deadline=None)
@given(words3, words3, words3)
def test_associativity(u, v, w):
    a = cached_algebra(1)
    cu, cv, cw = (a.word_coordinates(x) for x in (u, v, w))
    left = a.multiply(a.multiply(cu, len(u), cv, len(v)), len(u) + len(v), cw, len(w))
    right = a.multiply(cu, len(u), a.multiply(cv, len(v), cw, len(w)), len(v) + len(w))
    assert left == right
    assert left == a.word_coordinates(u + v + w)


def test_relations_vanish(algebra, params):
    for f in sklyanin_relation_polys(params).values():
        assert algebra.reduce(f) == (2, {})
    S = [NCPoly.gen(i) for i in range(4)]
    n, c = algebra.reduce(S[0] * S[1])
    assert n == 2 and c
    with pytest.raises(ValueError):
        algebra.reduce(S[0] + S[0] * S[1])


def test_json_round_trip(algebra):
    b = QuadraticAlgebra.from_json(algebra.to_json())
    assert [b.dim(n) for n in range(4)] == [algebra.dim(n) for n in range(4)]
    assert b.relations == algebra.relations


def test_bad_relations():
    with pytest.raises(ValueError):
        QuadraticAlgebra(2, Subspace(9))
