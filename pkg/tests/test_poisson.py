import itertools
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from homalg.poisson import (CommPoly, DiffForm, NonHomogeneous, NotACycle, PoissonStructure,
                            VariableMismatch, boundary_matrix, brylinski_boundary, chain_dim,
                            complete_intersection_check, de_rham_d, extend_bracket,
                            generator_span_check, jacobi_check, jacobian_bracket,
                            jacobian_structure, poisson_homology_dims, quotient_dims,
                            sklyanin_casimirs, sklyanin_structure, variables)

X = sympy.symbols("x0:4")


def to_sympy(p):
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator)
                            * sympy.prod(x ** e for x, e in zip(X, exp))
                            for exp, c in p.terms.items()))


def contract(ps, w):
    """Interior product with the bivector, the independent half of the oracle."""
    out = DiffForm(w.num_vars, w.degree - 2)
    for idx, f in w.components.items():
        for a, b in itertools.combinations(range(len(idx)), 2):
            rest = idx[:a] + idx[a + 1:b] + idx[b + 1:]
            sign = 1 if (a + b) % 2 else -1
            out = out + DiffForm(w.num_vars, w.degree - 2, {rest: f * ps.bracket(idx[a], idx[b]) * sign})
    return out


polys = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 4).filter(lambda e: sum(e) <= 3),
    st.integers(-3, 3), max_size=4).map(lambda t: CommPoly(4, t))


@st.composite
def forms(draw):
    k = draw(st.integers(1, 4))
    comps = {}
    for idx in itertools.combinations(range(4), k):
        if draw(st.booleans()):
            comps[idx] = draw(polys)
    return DiffForm(4, k, comps)


@pytest.mark.parametrize("J", [(1, 2, 5), (-3, 0, 7), (Fraction(1, 2), 4, -2)])
def test_sklyanin_is_jacobian_bracket(J):
    # Jacobian determinant computed independently with sympy
    p1, p2 = sklyanin_casimirs(*J)
    ps = sklyanin_structure(*J)
    P1, P2 = to_sympy(p1), to_sympy(p2)
    for i, j in itertools.combinations(range(4), 2):
        fs = [X[i], X[j], P1, P2]
        det = sympy.Matrix([[sympy.diff(f, x) for x in X] for f in fs]).det()
        assert sympy.expand(det / 2 - to_sympy(ps.bracket(i, j))) == 0
        assert jacobian_bracket([p1, p2], Fraction(1, 2), variables(4)[i], variables(4)[j]) == ps.bracket(i, j)


def test_bracket_values():
    x0, x1, x2, x3 = variables(4)
    ps = sklyanin_structure(1, 2, 5)
    assert ps.bracket(1, 2) == x0 * x3 * -2
    assert ps.bracket(2, 1) == x0 * x3 * 2
    # beta_1 = J2 - J3 = -3
    assert ps.bracket(0, 1) == x2 * x3 * 6
    assert ps.is_homogeneous_quadratic()


@pytest.mark.parametrize("J", [(1, 2, 5), (2, -7, 3)])
def test_jacobi_and_casimirs(J):
    ps = sklyanin_structure(*J)
    assert jacobi_check(ps)
    for c in sklyanin_casimirs(*J):
        for x in variables(4):
            assert not extend_bracket(ps, c, x)


def test_jacobi_detects_failure():
    x0, x1, x2 = variables(3)
    ps = PoissonStructure(3, {(0, 1): x2, (1, 2): x0 * x0, (0, 2): x1 * x0})
    assert not jacobi_check(ps)


@settings(max_examples=40, deadline=None)
@given(forms())
def test_boundary_equals_contraction_commutator(w):
    ps = sklyanin_structure(1, 2, 5)
    lhs = brylinski_boundary(ps, w)
    rhs = contract(ps, de_rham_d(w)) if w.degree < 4 else DiffForm(4, w.degree - 1)
    if w.degree >= 2:
        rhs = rhs - de_rham_d(contract(ps, w))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(forms())
def test_boundary_squares_to_zero(w):
    ps = sklyanin_structure(2, -1, 3)
    if w.degree >= 2:
        assert not brylinski_boundary(ps, brylinski_boundary(ps, w))


@settings(max_examples=30, deadline=None)
@given(polys)
def test_de_rham_d_is_gradient(f):
    df = de_rham_d(DiffForm.function(f))
    for i in range(4):
        got = df.components.get((i,), CommPoly(4))
        assert to_sympy(got) == sympy.diff(to_sympy(f), X[i])
    assert not de_rham_d(df)


def test_form_sign_normalisation():
    x0 = variables(4)[0]
    assert DiffForm.basis_form(4, (2, 1)) == DiffForm.basis_form(4, (1, 2)) * -1
    assert not DiffForm.basis_form(4, (1, 1))
    w = DiffForm.decomposable(x0, [variables(4)[1], variables(4)[2]])
    assert w == DiffForm(4, 2, {(1, 2): x0})
    assert w.weight == 3
    with pytest.raises(VariableMismatch):
        DiffForm(4, 1, {(0,): CommPoly.var(3, 0)})


def test_boundary_matrix_shape():
    ps = sklyanin_structure(1, 2, 5)
    m = boundary_matrix(ps, 2, 4)
    assert m.shape == (chain_dim(4, 1, 4), chain_dim(4, 2, 4))
    assert (boundary_matrix(ps, 1, 4) @ m).is_zero()


@pytest.fixture(scope="module")
def table125():
    return poisson_homology_dims(sklyanin_structure(1, 2, 5), 6)


def test_dims_frozen(table125):
    # Taylor coefficients of the closed-form series, checked by hand
    assert table125.row(0) == [1, 4, 4, 8, 7, 12, 10]
    assert table125.row(1) == [0, 4, 4, 12, 9, 20, 14]
    assert table125.row(2) == [0, 0, 0, 4, 2, 8, 4]
    assert table125.row(3) == [0, 0, 0, 0, 1, 0, 2]
    assert table125.row(4) == [0, 0, 0, 0, 1, 0, 2]


def test_euler_characteristic(table125):
    for d in range(7):
        chi = sum((-1) ** i * table125[i, d] for i in range(5))
        assert chi == sum((-1) ** k * chain_dim(4, k, d) for k in range(5))


def test_parallel_matches_serial(table125):
    par = poisson_homology_dims(sklyanin_structure(1, 2, 5), 4, workers=2)
    assert all(par[k] == table125[k] for k in par.dims)


def test_degenerate_J_differs(table125):
    deg = poisson_homology_dims(sklyanin_structure(1, 1, 1), 4)
    assert any(deg[k] != table125[k] for k in deg.dims)


def test_non_homogeneous_rejected():
    x0, x1, x2, x3 = variables(4)
    ps = PoissonStructure(4, {(0, 1): x2 + x3 * x3})
    with pytest.raises(NonHomogeneous):
        poisson_homology_dims(ps, 2)


def test_generator_spans():
    x0, x1, x2, x3 = variables(4)
    ps = sklyanin_structure(1, 2, 5)
    cas = sklyanin_casimirs(1, 2, 5)
    one = CommPoly.const(4, 1)
    assert generator_span_check(ps, 0, [one, x1, x2, x3, x0, x1 * x1, x3 * x3], cas, 6)
    # dropping a generator must be detected
    assert not generator_span_check(ps, 0, [one, x1, x2, x3, x0, x1 * x1], cas, 6)
    delta = DiffForm.basis_form(4, (1, 2, 3, 0))
    assert generator_span_check(ps, 4, [delta], cas, 6)


def test_non_cycle_generator_raises():
    ps = sklyanin_structure(1, 2, 5)
    w = DiffForm.decomposable(variables(4)[0], [variables(4)[1]])
    with pytest.raises(NotACycle):
        generator_span_check(ps, 1, [w], sklyanin_casimirs(1, 2, 5), 3)


def test_complete_intersection():
    x0, x1, x2, x3 = variables(4)
    assert complete_intersection_check(*sklyanin_casimirs(1, 2, 5))
    assert complete_intersection_check(x0 * x0, x1 * x1)
    assert not complete_intersection_check(x0 * x0, x0 * x1)
    # two generic quadrics: 1, 4, 8, 12, 16, ...
    assert quotient_dims(list(sklyanin_casimirs(1, 2, 5)), 5) == [1, 4, 8, 12, 16, 20]
    with pytest.raises(NonHomogeneous):
        complete_intersection_check(x0, x1 * x1)


def test_chain_dim():
    assert chain_dim(4, 2, 5) == comb(4, 2) * comb(6, 3)
    assert chain_dim(4, 3, 2) == 0
