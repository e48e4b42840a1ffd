"""Polynomial Poisson algebras, differential forms and Poisson homology.

Variables are indexed ``0..n-1``.  A differential ``k``-form is stored in the
canonical basis ``dx_I = dx_{i_1} ^ ... ^ dx_{i_k}`` with ``i_1 < ... < i_k``.
Weight counts polynomial degree plus form degree, so ``x_i`` and ``dx_i`` both
have weight one and a homogeneous quadratic bracket makes the Brylinski
boundary weight preserving.
"""

from __future__ import annotations

import itertools
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from math import comb

from .linalg import SparseMatrix, homology_dim, rank
from .tables import HomologyTable


class VariableMismatch(ValueError):
    pass


class NonHomogeneous(ValueError):
    pass


class NotACycle(ValueError):
    def __init__(self, generator, index):
        super().__init__(f"generator #{index} is not a cycle: {generator!r}")
        self.generator = generator
        self.index = index


# ---------------------------------------------------------------------------
# commutative polynomials


class CommPoly:
    """Polynomial in ``num_vars`` commuting variables with Fraction coefficients."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms=None):
        self.num_vars = num_vars
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != num_vars:
                raise VariableMismatch(f"exponent {e} has wrong length for {num_vars} variables")
            if c:
                clean[tuple(e)] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean

    @classmethod
    def var(cls, n, i, power=1):
        e = [0] * n
        e[i] = power
        return cls(n, {tuple(e): 1})

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls(len(exp), {tuple(exp): coeff})

    def _coerce(self, other):
        if isinstance(other, CommPoly):
            if other.num_vars != self.num_vars:
                raise VariableMismatch(f"{self.num_vars} vs {other.num_vars} variables")
            return other
        return CommPoly.const(self.num_vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return CommPoly(self.num_vars, t)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, CommPoly):
            c = Fraction(other)
            return CommPoly(self.num_vars, {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        t = defaultdict(Fraction)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                t[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return CommPoly(self.num_vars, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = CommPoly.const(self.num_vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def diff(self, i):
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * e[i]
        return CommPoly(self.num_vars, t)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, CommPoly):
            return self.num_vars == other.num_vars and self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def degrees(self):
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, degree=None):
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (degree is None or degree in ds)

    @property
    def degree(self):
        return max(self.degrees(), default=-1)

    def __call__(self, *values):
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                t *= Fraction(v) ** k
            total += t
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def variables(n):
    return [CommPoly.var(n, i) for i in range(n)]


# ---------------------------------------------------------------------------
# differential forms


def _insert_sign(l, rest):
    """Sign and sorted tuple for ``dx_l ^ dx_rest`` (``rest`` sorted), or None."""
    if l in rest:
        return None
    pos = sum(1 for j in rest if j < l)
    return (-1 if pos % 2 else 1), tuple(sorted(rest + (l,)))


def _sort_sign(idx):
    """Sign of the permutation sorting ``idx`` and the sorted tuple; None on repeats."""
    if len(set(idx)) != len(idx):
        return None
    inv = sum(1 for a, b in itertools.combinations(idx, 2) if a > b)
    return (-1 if inv % 2 else 1), tuple(sorted(idx))


class DiffForm:
    """Polynomial differential form of a fixed degree."""

    __slots__ = ("num_vars", "degree", "components")

    def __init__(self, num_vars: int, degree: int, components=None):
        if degree < 0:
            raise ValueError(f"negative form degree {degree}")
        self.num_vars = num_vars
        self.degree = degree
        comps = {}
        for idx, f in (components or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(f"index tuple {idx} does not have length {degree}")
            if not isinstance(f, CommPoly):
                f = CommPoly.const(num_vars, f)
            if f.num_vars != num_vars:
                raise VariableMismatch("component in the wrong number of variables")
            s = _sort_sign(idx)
            if s is None:
                continue
            sign, key = s
            if key in comps:
                comps[key] = comps[key] + f * sign
            else:
                comps[key] = f * sign if sign < 0 else f
        self.components = {k: v for k, v in comps.items() if v}

    @classmethod
    def function(cls, f: CommPoly):
        return cls(f.num_vars, 0, {(): f})

    @classmethod
    def basis_form(cls, n, idx, coeff=None):
        coeff = CommPoly.const(n, 1) if coeff is None else coeff
        return cls(n, len(idx), {tuple(idx): coeff})

    @classmethod
    def exact(cls, f: CommPoly):
        """The 1-form ``df``."""
        return cls(f.num_vars, 1, {(i,): f.diff(i) for i in range(f.num_vars)})

    @classmethod
    def decomposable(cls, f0: CommPoly, fs):
        """``f0 dF_1 ^ ... ^ dF_k``, normalised to the canonical basis."""
        w = cls.function(f0)
        for f in fs:
            w = w.wedge(cls.exact(f))
        return w

    def _check(self, other):
        if other.num_vars != self.num_vars:
            raise VariableMismatch("forms in different numbers of variables")

    def __add__(self, other):
        self._check(other)
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degrees")
        comps = dict(self.components)
        for k, f in other.components.items():
            comps[k] = comps[k] + f if k in comps else f
        return DiffForm(self.num_vars, self.degree, comps)

    def __neg__(self):
        return DiffForm(self.num_vars, self.degree, {k: -f for k, f in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        """Multiply by a scalar or a polynomial."""
        return DiffForm(self.num_vars, self.degree, {k: f * c for k, f in self.components.items()})

    __rmul__ = __mul__

    def wedge(self, other: "DiffForm"):
        self._check(other)
        deg = self.degree + other.degree
        if deg > self.num_vars:
            return DiffForm(self.num_vars, min(deg, self.num_vars))
        acc = {}
        for i1, f1 in self.components.items():
            for i2, f2 in other.components.items():
                s = _sort_sign(i1 + i2)
                if s is None:
                    continue
                sign, key = s
                term = f1 * f2 * sign
                acc[key] = acc[key] + term if key in acc else term
        return DiffForm(self.num_vars, deg, acc)

    __xor__ = wedge

    def __bool__(self):
        return bool(self.components)

    def __eq__(self, other):
        return (isinstance(other, DiffForm) and self.num_vars == other.num_vars
                and self.degree == other.degree and self.components == other.components)

    def weights(self):
        return {d + self.degree for f in self.components.values() for d in f.degrees()}

    @property
    def weight(self):
        ws = self.weights()
        if len(ws) > 1:
            raise NonHomogeneous(f"form is not weight homogeneous (weights {sorted(ws)})")
        return ws.pop() if ws else None

    def __repr__(self):
        if not self.components:
            return "0"
        parts = []
        for k in sorted(self.components):
            d = "^".join(f"dx{i}" for i in k)
            parts.append(f"({self.components[k]})" + (f"*{d}" if d else ""))
        return " + ".join(parts)


def de_rham_d(w: DiffForm) -> DiffForm:
    n = w.num_vars
    if w.degree >= n:
        return DiffForm(n, w.degree + 1)
    acc = {}
    for idx, f in w.components.items():
        for l in range(n):
            s = _insert_sign(l, idx)
            if s is None:
                continue
            df = f.diff(l)
            if not df:
                continue
            sign, key = s
            term = df * sign
            acc[key] = acc[key] + term if key in acc else term
    return DiffForm(n, w.degree + 1, acc)


# ---------------------------------------------------------------------------
# Poisson structures


class PoissonStructure:
    """Bracket on ``K[x_0..x_{n-1}]`` given by ``{x_i, x_j}`` for ``i < j``."""

    def __init__(self, num_vars: int, table=None):
        self.num_vars = num_vars
        t = {}
        for (i, j), f in (table or {}).items():
            if not isinstance(f, CommPoly):
                f = CommPoly.const(num_vars, f)
            if f.num_vars != num_vars:
                raise VariableMismatch("bracket entry in the wrong number of variables")
            if i == j:
                if f:
                    raise ValueError("{x_i, x_i} must vanish")
                continue
            if i > j:
                i, j, f = j, i, -f
            if f:
                t[i, j] = f
        self.table = t
        self._dtable = {}

    @classmethod
    def zero(cls, n):
        return cls(n)

    def bracket(self, i, j) -> CommPoly:
        """``{x_i, x_j}``."""
        if i == j:
            return CommPoly(self.num_vars)
        if i < j:
            return self.table.get((i, j), CommPoly(self.num_vars))
        return -self.table.get((j, i), CommPoly(self.num_vars))

    def _bracket_diff(self, i, j, l):
        key = (i, j, l)
        d = self._dtable.get(key)
        if d is None:
            d = self._dtable[key] = self.bracket(i, j).diff(l)
        return d

    def with_var(self, f: CommPoly, i) -> CommPoly:
        """``{f, x_i}``."""
        out = CommPoly(self.num_vars)
        for l in range(self.num_vars):
            if l == i:
                continue
            df = f.diff(l)
            if df:
                out = out + df * self.bracket(l, i)
        return out

    def is_homogeneous_quadratic(self):
        return all(f.is_homogeneous(2) for f in self.table.values())

    def __repr__(self):
        body = ", ".join(f"{{x{i},x{j}}}={f}" for (i, j), f in sorted(self.table.items()))
        return f"PoissonStructure({self.num_vars}; {body})"


def _check_vars(n, *polys):
    for p in polys:
        if p.num_vars != n:
            raise VariableMismatch(f"expected polynomials in {n} variables, got {p.num_vars}")


def _det(mat):
    """Leibniz determinant of a small square matrix of CommPolys."""
    n = len(mat)
    nv = mat[0][0].num_vars
    total = CommPoly(nv)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = CommPoly.const(nv, -1 if inv % 2 else 1)
        for r, c in enumerate(perm):
            entry = mat[r][c]
            if not entry:
                term = None
                break
            term = term * entry
        if term is not None:
            total = total + term
    return total


def jacobian_bracket(casimirs, lam, f, g) -> CommPoly:
    """``lam * df ^ dg ^ dP_1 ^ ... ^ dP_{n-2} / dx_0 ^ ... ^ dx_{n-1}``."""
    n = f.num_vars
    if n < 3:
        raise ValueError("Jacobian Poisson structures need at least three variables")
    if len(casimirs) != n - 2:
        raise VariableMismatch(f"need {n - 2} Casimirs in {n} variables, got {len(casimirs)}")
    if not isinstance(lam, CommPoly):
        lam = CommPoly.const(n, lam)
    _check_vars(n, g, lam, *casimirs)
    rows = [[p.diff(i) for i in range(n)] for p in (f, g, *casimirs)]
    return lam * _det(rows)


def jacobian_structure(casimirs, lam) -> PoissonStructure:
    n = casimirs[0].num_vars
    xs = variables(n)
    return PoissonStructure(n, {(i, j): jacobian_bracket(casimirs, lam, xs[i], xs[j])
                                for i, j in itertools.combinations(range(n), 2)})


def sklyanin_casimirs(J1, J2, J3):
    """The two quadrics ``x1^2+x2^2+x3^2`` and ``x0^2+J1 x1^2+J2 x2^2+J3 x3^2``."""
    x0, x1, x2, x3 = variables(4)
    p1 = x1 * x1 + x2 * x2 + x3 * x3
    p2 = x0 * x0 + x1 * x1 * J1 + x2 * x2 * J2 + x3 * x3 * J3
    return p1, p2


def sklyanin_structure(J1, J2, J3) -> PoissonStructure:
    """4-variable Sklyanin bracket, ``beta_i = J_j - J_k`` for (i, j, k) cyclic.

    ``{x0, xi} = -2 beta_i xj xk`` and ``{xj, xk} = -2 x0 xi``.
    """
    J = {1: Fraction(J1), 2: Fraction(J2), 3: Fraction(J3)}
    xs = variables(4)
    table = {}
    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        beta = J[j] - J[k]
        table[0, i] = xs[j] * xs[k] * (-2 * beta)
        table[j, k] = xs[0] * xs[i] * -2
    return PoissonStructure(4, table)


def extend_bracket(ps: PoissonStructure, f: CommPoly, g: CommPoly) -> CommPoly:
    """Biderivation extension ``sum_{i,j} d_i f d_j g {x_i, x_j}``."""
    _check_vars(ps.num_vars, f, g)
    n = ps.num_vars
    df = [f.diff(i) for i in range(n)]
    dg = [g.diff(j) for j in range(n)]
    out = CommPoly(n)
    for (i, j), b in ps.table.items():
        c = df[i] * dg[j] - df[j] * dg[i]
        if c:
            out = out + c * b
    return out


def jacobi_check(ps: PoissonStructure) -> bool:
    n = ps.num_vars
    for i, j, k in itertools.combinations(range(n), 3):
        jac = (ps.with_var(ps.bracket(j, k), i) + ps.with_var(ps.bracket(k, i), j)
               + ps.with_var(ps.bracket(i, j), k))
        if jac:
            return False
    return True


# ---------------------------------------------------------------------------
# Brylinski boundary


def brylinski_boundary(ps: PoissonStructure, w: DiffForm) -> DiffForm:
    """Poisson boundary ``Omega^k -> Omega^{k-1}``, applied componentwise.

    On ``f dx_{i_1} ^ ... ^ dx_{i_k}``::

        sum_a (-1)^(a+1) {f, x_{i_a}} dx_I\\{i_a}
          + sum_{a<b} (-1)^(a+b) f d{x_{i_a}, x_{i_b}} ^ dx_I\\{i_a, i_b}
    """
    if w.num_vars != ps.num_vars:
        raise VariableMismatch("form and structure have different numbers of variables")
    if w.degree < 1:
        raise ValueError("the Poisson boundary is defined on forms of degree >= 1")
    n = ps.num_vars
    acc = defaultdict(lambda: CommPoly(n))
    for idx, f in w.components.items():
        k = len(idx)
        for a in range(k):
            rest = idx[:a] + idx[a + 1:]
            t = ps.with_var(f, idx[a])
            if t:
                acc[rest] = acc[rest] + (t if a % 2 == 0 else -t)
        for a, b in itertools.combinations(range(k), 2):
            rest = idx[:a] + idx[a + 1:b] + idx[b + 1:]
            sign = -1 if (a + b) % 2 else 1
            for l in range(n):
                s = _insert_sign(l, rest)
                if s is None:
                    continue
                db = ps._bracket_diff(idx[a], idx[b], l)
                if not db:
                    continue
                acc[s[1]] = acc[s[1]] + f * db * (sign * s[0])
    return DiffForm(n, w.degree - 1, acc)


# ---------------------------------------------------------------------------
# weight-graded chain complex


@lru_cache(maxsize=None)
def monomials(n, degree):
    """Exponent vectors of total ``degree`` in ``n`` variables, lex descending."""
    if degree < 0:
        return ()
    out = []
    for combo in itertools.combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def chain_basis(n, k, d):
    """Basis of weight-``d`` ``k``-forms: (exponent, index) pairs, monomial-lex order."""
    basis = [(e, idx) for e in monomials(n, d - k)
             for idx in itertools.combinations(range(n), k)]
    return tuple(basis), {b: i for i, b in enumerate(basis)}


def form_coordinates(w: DiffForm, d):
    """Sparse coordinate dict of a weight-``d`` form in :func:`chain_basis`."""
    _, index = chain_basis(w.num_vars, w.degree, d)
    out = {}
    for idx, f in w.components.items():
        for e, c in f.terms.items():
            try:
                out[index[e, idx]] = c
            except KeyError:
                raise NonHomogeneous(f"form has a component outside weight {d}") from None
    return out


def boundary_matrix(ps: PoissonStructure, k, d) -> SparseMatrix:
    """Matrix of the boundary from weight-``d`` k-forms to (k-1)-forms."""
    n = ps.num_vars
    src, _ = chain_basis(n, k, d)
    tgt, tindex = chain_basis(n, k - 1, d)
    cols = {}
    for j, (e, idx) in enumerate(src):
        img = brylinski_boundary(ps, DiffForm(n, k, {idx: CommPoly.monomial(e)}))
        for ridx, f in img.components.items():
            for re, c in f.terms.items():
                cols.setdefault(tindex[re, ridx], {})[j] = c
    return SparseMatrix(len(tgt), len(src), cols)


def _require_homogeneous(ps):
    if not ps.is_homogeneous_quadratic():
        raise NonHomogeneous("bracket table entries must be homogeneous quadratic")


def _weight_row(ps, d):
    n = ps.num_vars
    ranks = [0] * (n + 2)
    dims = [len(chain_basis(n, k, d)[0]) if d >= k else 0 for k in range(n + 1)]
    for k in range(1, n + 1):
        if dims[k] and dims[k - 1]:
            ranks[k] = rank(boundary_matrix(ps, k, d))
    return [dims[i] - ranks[i] - ranks[i + 1] for i in range(n + 1)]


def _workers(workers):
    if workers is None:
        workers = int(os.environ.get("HOMALG_THREADS", "1") or 1)
    return max(1, workers)


def poisson_homology_dims(ps: PoissonStructure, max_weight: int, workers=None) -> HomologyTable:
    """dim PH_i in each weight ``0..max_weight``."""
    _require_homogeneous(ps)
    n = ps.num_vars
    weights = range(max_weight + 1)
    workers = _workers(workers)
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            rows = list(ex.map(_weight_row, [ps] * len(weights), weights))
    else:
        rows = [_weight_row(ps, d) for d in weights]
    table = HomologyTable("poisson", max_index=n)
    for d, row in zip(weights, rows):
        for i, v in enumerate(row):
            table[i, d] = v
    return table


def chain_dim(n, k, d):
    return comb(n, k) * comb(d - k + n - 1, n - 1) if d >= k else 0


# ---------------------------------------------------------------------------
# generator checks


def _monomials_in(casimirs, weight):
    """Products of Casimir powers of total ``weight``."""
    degs = []
    for p in casimirs:
        if not p.is_homogeneous() or not p:
            raise NonHomogeneous("Casimirs must be nonzero homogeneous polynomials")
        degs.append(p.degree)
    n = casimirs[0].num_vars
    out = []

    def rec(i, remaining, acc):
        if i == len(casimirs):
            if remaining == 0:
                out.append(acc)
            return
        power = CommPoly.const(n, 1)
        while remaining >= 0:
            rec(i + 1, remaining, acc * power)
            power = power * casimirs[i]
            remaining -= degs[i]

    if weight >= 0:
        rec(0, weight, CommPoly.const(n, 1))
    return out


def generator_span_check(ps, i, generators, casimirs, max_weight) -> bool:
    """True iff ``K[casimirs] . generators`` spans PH_i in every weight <= max_weight."""
    _require_homogeneous(ps)
    n = ps.num_vars
    gens = []
    for pos, g in enumerate(generators):
        if isinstance(g, CommPoly):
            g = DiffForm.function(g)
        if g.degree != i:
            raise ValueError(f"generator #{pos} has form degree {g.degree}, expected {i}")
        if i >= 1 and brylinski_boundary(ps, g):
            raise NotACycle(g, pos)
        gens.append((g, g.weight))
    for d in range(max_weight + 1):
        if d < i:
            continue
        src, _ = chain_basis(n, i, d)
        ker_dim = len(src) - (rank(boundary_matrix(ps, i, d)) if i >= 1 and d >= i else 0)
        rows = []
        if i < n and d >= i + 1:
            rows.extend(r for _, r in boundary_matrix(ps, i + 1, d).rows())
        image_rank = rank(rows) if rows else 0
        for g, wg in gens:
            if wg is None:
                continue
            for m in _monomials_in(casimirs, d - wg):
                v = form_coordinates(g * m, d)
                if v:
                    rows.append(v)
        if rank(rows) - image_rank < ker_dim - image_rank:
            return False
    return True


# ---------------------------------------------------------------------------
# complete intersections


def quotient_dims(polys, upto):
    """Dimensions of the graded pieces of ``R / (polys)`` in degrees ``0..upto``."""
    n = polys[0].num_vars
    out = []
    for deg in range(upto + 1):
        mons = monomials(n, deg)
        index = {e: i for i, e in enumerate(mons)}
        rows = []
        for p in polys:
            pd = p.degree
            for e in monomials(n, deg - pd):
                rows.append({index[tuple(a + b for a, b in zip(e, pe))]: c
                             for pe, c in p.terms.items()})
        out.append(len(mons) - (rank(rows) if rows else 0))
    return out


def complete_intersection_check(P1: CommPoly, P2: CommPoly, test_degree=8) -> bool:
    """Hilbert-series test that two quadrics in four variables form a regular sequence."""
    from .series import RationalSeries, expand

    for p in (P1, P2):
        if p.num_vars != 4:
            raise VariableMismatch("expected polynomials in four variables")
        if not p or not p.is_homogeneous(2):
            raise NonHomogeneous("expected homogeneous quadratic polynomials")
    target = expand(RationalSeries([1, 0, -2, 0, 1], [1, -4, 6, -4, 1]), test_degree)
    return quotient_dims([P1, P2], test_degree) == target
