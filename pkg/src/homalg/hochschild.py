"""Hochschild homology of quadratic algebras via the bar and Koszul complexes.

Bar chains are sums of pure tensors ``a_0 (x) ... (x) a_n`` whose factors are
basis elements of the graded pieces, written ``(degree, index)``; the unit is
``(0, 0)``.  Koszul chains live in ``A_{d-m} (x) (A^!_m)^*`` and are keyed by
``(basis index in A_{d-m}, basis index in (A^!_m)^*)``.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .linalg import SparseMatrix, homology_dim, rank
from .ncalg import (NCPoly, QuadraticAlgebra, SklyaninParams, index_word, koszul_subspace,
                    sklyanin_relation_polys, sklyanin_relations, word_index)
from .tables import HomologyTable

UNIT = (0, 0)


class NotInImage(ArithmeticError):
    """A bar chain that should lie in the image of the Koszul complex does not."""


def _clean(d):
    return {k: v for k, v in d.items() if v}


# ---------------------------------------------------------------------------
# bar complex


class BarChain:
    """Element of ``A^{(x)(n+1)}``; ``terms`` maps factor tuples to coefficients."""

    __slots__ = ("algebra", "length", "terms")

    def __init__(self, algebra: QuadraticAlgebra, length: int, terms=None):
        self.algebra = algebra
        self.length = length
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(tuple(f) for f in key)
            if len(key) != length:
                raise ValueError(f"tensor {key} does not have {length} factors")
            if c:
                clean[key] = Fraction(c)
        self.terms = clean

    @property
    def degree(self):
        """Hochschild degree ``n`` (one less than the number of factors)."""
        return self.length - 1

    def weights(self):
        return {sum(f[0] for f in key) for key in self.terms}

    def is_normalized(self):
        return all(f[0] >= 1 for key in self.terms for f in key[1:])

    def __add__(self, other):
        if other.length != self.length:
            raise ValueError("cannot add bar chains of different lengths")
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return BarChain(self.algebra, self.length, t)

    def __neg__(self):
        return BarChain(self.algebra, self.length, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = Fraction(c)
        return BarChain(self.algebra, self.length, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, BarChain) and other.length == self.length
                and other.terms == self.terms)

    def __repr__(self):
        return f"BarChain(length={self.length}, terms={len(self.terms)})"

    @classmethod
    def from_elements(cls, algebra, factors, coeff=1):
        """Pure tensor of homogeneous elements given as ``(degree, coords)`` pairs."""
        terms = {(): Fraction(coeff)}
        for deg, coords in factors:
            nxt = defaultdict(Fraction)
            for key, c in terms.items():
                for j, x in coords.items():
                    nxt[key + ((deg, j),)] += c * x
            terms = nxt
        return cls(algebra, len(factors), terms)


_products = {}


def basis_product(a: QuadraticAlgebra, f, g):
    """Product of two basis elements ``(deg, idx)``, as coordinates."""
    if f[0] == 0:
        return g[0], {g[1]: Fraction(1)}
    if g[0] == 0:
        return f[0], {f[1]: Fraction(1)}
    key = (id(a), f, g)
    hit = _products.get(key)
    if hit is None:
        hit = a.multiply({f[1]: Fraction(1)}, f[0], {g[1]: Fraction(1)}, g[0])
        _products[key] = hit
    return f[0] + g[0], hit


def hochschild_b(c: BarChain) -> BarChain:
    """``b(a_0..a_n) = sum_i (-1)^i a_0..a_i a_{i+1}..a_n + (-1)^n a_n a_0 .. a_{n-1}``."""
    n = c.degree
    if n < 1:
        raise ValueError("b is defined on chains of degree >= 1")
    a = c.algebra
    out = defaultdict(Fraction)
    for key, coef in c.terms.items():
        for i in range(n):
            deg, prod = basis_product(a, key[i], key[i + 1])
            s = -coef if i % 2 else coef
            head, tail = key[:i], key[i + 2:]
            for j, x in prod.items():
                out[head + ((deg, j),) + tail] += s * x
        deg, prod = basis_product(a, key[n], key[0])
        s = -coef if n % 2 else coef
        mid = key[1:n]
        for j, x in prod.items():
            out[((deg, j),) + mid] += s * x
    return BarChain(a, n, _clean(out))


def connes_B(c: BarChain) -> BarChain:
    """Connes' operator ``C_n -> C_{n+1}``.

    ``B(a_0..a_n) = sum_i (-1)^{ni} 1 (x) a_i..a_n a_0..a_{i-1}
                   + sum_i (-1)^{n(i+1)} a_{i-1} (x) 1 (x) a_i..a_n a_0..a_{i-2}``
    i.e. ``(1 - t) s N`` with the signed cyclic operator ``t``.
    """
    n = c.degree
    out = defaultdict(Fraction)
    for key, coef in c.terms.items():
        for i in range(n + 1):
            rot = key[i:] + key[:i]
            s = -coef if (n * i) % 2 else coef
            out[(UNIT,) + rot] += s
            # -t(1, c_0..c_n) = (-1)^n (c_n, 1, c_0..c_{n-1})
            sign = -s if n % 2 else s
            out[(rot[-1], UNIT) + rot[:-1]] += sign
    return BarChain(c.algebra, n + 2, _clean(out))


def connes_B_literal(c: BarChain) -> BarChain:
    """The two-sum formula with the unit appended at the end of the second sum."""
    n = c.degree
    out = defaultdict(Fraction)
    for key, coef in c.terms.items():
        for i in range(n + 1):
            rot = key[i:] + key[:i]
            s = -coef if (n * i) % 2 else coef
            out[(UNIT,) + rot] += s
            out[rot + (UNIT,)] += s if n % 2 == 0 else -s
    return BarChain(c.algebra, n + 2, _clean(out))


# ---------------------------------------------------------------------------
# Koszul complex


class KoszulComplex:
    """``K_m(A) = A (x) (A^!_m)^*`` with the boundary transported from the bar complex.

    The subspace bases are reduced echelon (pivot on the largest word), so the
    coordinate of a vector along basis element ``s`` is its entry at the
    pivot word of ``s``.
    """

    def __init__(self, algebra: QuadraticAlgebra, top=None):
        self.algebra = algebra
        g = algebra.num_gens
        self.subspaces = []
        m = 0
        while top is None or m <= top:
            s = koszul_subspace(algebra, m)
            if not s.dim:
                break
            self.subspaces.append(s)
            m += 1
        self.length = len(self.subspaces) - 1
        self.vectors = [s.sparse_basis() for s in self.subspaces]
        self.pivots = []
        for vecs in self.vectors:
            pv = [max(v) for v in vecs]
            self.pivots.append(pv)
        # left[m][s][r]: coords in K_{m-1} of (zeta_r (x) id) e_s; right likewise on the last factor
        self.left = [None]
        self.right = [None]
        for m in range(1, self.length + 1):
            lrow, rrow = [], []
            for v in self.vectors[m]:
                lp = [defaultdict(Fraction) for _ in range(g)]
                rp = [defaultdict(Fraction) for _ in range(g)]
                for w, c in v.items():
                    first, rest = divmod(w, g ** (m - 1))
                    lp[first][rest] += c
                    head, last = divmod(w, g)
                    rp[last][head] += c
                lrow.append([self.coordinates(m - 1, _clean(x)) for x in lp])
                rrow.append([self.coordinates(m - 1, _clean(x)) for x in rp])
            self.left.append(lrow)
            self.right.append(rrow)

    def dim(self, m):
        return len(self.vectors[m]) if 0 <= m <= self.length else 0

    def chain_dim(self, m, d):
        if not 0 <= m <= self.length or d < m:
            return 0
        return self.algebra.dim(d - m) * self.dim(m)

    def coordinates(self, m, vec):
        """Coordinates of ``vec`` (sparse, in ``V^{(x)m}``) on the basis of ``(A^!_m)^*``."""
        if not 0 <= m <= self.length:
            if vec:
                raise NotInImage(f"nonzero tensor outside the Koszul range m={m}")
            return {}
        coords = {}
        rest = dict(vec)
        for s, (p, v) in enumerate(zip(self.pivots[m], self.vectors[m])):
            c = rest.get(p)
            if c:
                coords[s] = c / v[p]
        check = defaultdict(Fraction, vec)
        for s, c in coords.items():
            for w, x in self.vectors[m][s].items():
                check[w] -= c * x
        if any(check.values()):
            raise NotInImage(f"tensor is not in (A^!_{m})^*")
        return coords

    def boundary_of_basis(self, m, d, j, s):
        """``b(a_j (x) e_s)`` as ``{(j', s'): coeff}`` in weight ``d``."""
        a = self.algebra
        g = a.num_gens
        out = defaultdict(Fraction)
        n = d - m
        sign = -1 if m % 2 else 1
        word = a._words(n)[j]
        for r in range(g):
            lc = self.left[m][s][r]
            if lc:
                for k, x in a.right_multiply({j: Fraction(1)}, n, r).items():
                    for s2, y in lc.items():
                        out[k, s2] += x * y
            rc = self.right[m][s][r]
            if rc:
                for k, x in a.word_coordinates((r,) + word).items():
                    for s2, y in rc.items():
                        out[k, s2] += sign * x * y
        return _clean(out)

    def boundary_matrix(self, m, d) -> SparseMatrix:
        """Matrix of ``b: K_m -> K_{m-1}`` in weight ``d`` (columns = source basis)."""
        src = self.chain_dim(m, d)
        tgt = self.chain_dim(m - 1, d)
        dm1 = self.dim(m - 1)
        dm = self.dim(m)
        rows = defaultdict(dict)
        if src and tgt:
            for j in range(self.algebra.dim(d - m)):
                for s in range(dm):
                    col = j * dm + s
                    for (k, s2), x in self.boundary_of_basis(m, d, j, s).items():
                        rows[k * dm1 + s2][col] = x
        return SparseMatrix(tgt, src, rows)


@dataclass
class KoszulChain:
    complex: KoszulComplex
    m: int
    weight: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.m <= 4 or self.weight < self.m:
            raise ValueError(f"no Koszul chains with m={self.m}, weight={self.weight}")
        self.terms = {k: Fraction(v) for k, v in self.terms.items() if v}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, KoszulChain) and (self.m, self.weight) == (other.m, other.weight)
                and self.terms == other.terms)

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return KoszulChain(self.complex, self.m, self.weight, t)

    def __mul__(self, c):
        return KoszulChain(self.complex, self.m, self.weight,
                           {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def vector(self):
        dm = self.complex.dim(self.m)
        return {j * dm + s: c for (j, s), c in self.terms.items()}


def q_embed(k: KoszulChain) -> BarChain:
    """Inclusion ``A (x) (A^!_m)^* -> A (x) V^{(x)m} -> A^{(x)(m+1)}``."""
    kc = k.complex
    g = kc.algebra.num_gens
    n = k.weight - k.m
    out = defaultdict(Fraction)
    for (j, s), c in k.terms.items():
        for w, x in kc.vectors[k.m][s].items():
            letters = index_word(w, k.m, g)
            out[((n, j),) + tuple((1, l) for l in letters)] += c * x
    return BarChain(kc.algebra, k.m + 1, _clean(out))


def lift_to_koszul(kc: KoszulComplex, c: BarChain) -> KoszulChain:
    """Inverse of :func:`q_embed` on its image; raises :class:`NotInImage` otherwise."""
    m = c.degree
    g = kc.algebra.num_gens
    groups = defaultdict(dict)
    weights = c.weights()
    if len(weights) > 1:
        raise NotInImage("bar chain is not weight homogeneous")
    for key, coef in c.terms.items():
        if any(f[0] != 1 for f in key[1:]):
            raise NotInImage("tensor factors beyond the first must be generators")
        groups[key[0]][word_index([f[1] for f in key[1:]], g)] = coef
    if not groups:
        return KoszulChain(kc, m, m)
    weight = weights.pop()
    terms = {}
    for (deg, j), vec in groups.items():
        for s, x in kc.coordinates(m, vec).items():
            terms[j, s] = x
    return KoszulChain(kc, m, weight, terms)


def koszul_b(k: KoszulChain, check=False) -> KoszulChain:
    """Boundary on the Koszul complex.

    ``b(a (x) f) = sum (a v) (x) g + (-1)^m sum (w a) (x) h`` where ``f = sum v (x) g``
    peels the first tensor factor and ``f = sum h (x) w`` the last.  With
    ``check=True`` the result is compared with ``b`` of the image in the bar
    complex.
    """
    if k.m < 1:
        raise ValueError("b is defined on Koszul chains with m >= 1")
    kc = k.complex
    out = defaultdict(Fraction)
    for (j, s), c in k.terms.items():
        for key, x in kc.boundary_of_basis(k.m, k.weight, j, s).items():
            out[key] += c * x
    res = KoszulChain(kc, k.m - 1, k.weight, _clean(out))
    if check:
        lifted = lift_to_koszul(kc, hochschild_b(q_embed(k)))
        if lifted.terms != res.terms:
            raise NotInImage("Koszul boundary disagrees with the bar boundary")
    return res


# ---------------------------------------------------------------------------
# homology tables


_complexes = {}


def koszul_complex(a: QuadraticAlgebra) -> KoszulComplex:
    kc = _complexes.get(id(a))
    if kc is None or kc.algebra is not a:
        kc = _complexes[id(a)] = KoszulComplex(a)
    return kc


def _as_algebra(p):
    if isinstance(p, QuadraticAlgebra):
        return p
    return sklyanin_relations(p)


def _hh_row(a, d):
    kc = koszul_complex(a)
    L = kc.length
    ranks = [0] * (L + 2)
    for m in range(1, L + 1):
        if kc.chain_dim(m, d) and kc.chain_dim(m - 1, d):
            ranks[m] = rank(kc.boundary_matrix(m, d))
    return [kc.chain_dim(i, d) - ranks[i] - ranks[i + 1] for i in range(L + 1)]


def hh_dims(p, max_weight: int, workers=None) -> HomologyTable:
    """dim HH_i(A) in weights ``0..max_weight`` from the Koszul complex."""
    a = _as_algebra(p)
    kc = koszul_complex(a)
    a.dim(max_weight)
    if workers is None:
        workers = int(os.environ.get("HOMALG_THREADS", "1") or 1)
    weights = list(range(max_weight + 1))
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            rows = list(ex.map(_hh_row, [a] * len(weights), weights))
    else:
        rows = [_hh_row(a, d) for d in weights]
    table = HomologyTable("hochschild", max_index=max(kc.length, 4))
    for d, row in zip(weights, rows):
        for i in range(table.max_index + 1):
            table[i, d] = row[i] if i < len(row) else 0
    return table


def koszul_euler(d, n=4):
    """``sum_m (-1)^m C(n,m) C(d-m+n-1, n-1)`` (chain-level Euler characteristic)."""
    return sum((-1) ** m * comb(n, m) * comb(d - m + n - 1, n - 1) for m in range(min(n, d) + 1))


def normalized_bar_basis(a: QuadraticAlgebra, n, d):
    """Basis tuples of ``A (x) A_+^{(x)n}`` in weight ``d``."""
    out = []

    def rec(pos, remaining, acc):
        if pos == n + 1:
            if remaining == 0:
                out.append(tuple(acc))
            return
        lo = 0 if pos == 0 else 1
        for deg in range(lo, remaining + 1):
            for j in range(a.dim(deg)):
                rec(pos + 1, remaining - deg, acc + [(deg, j)])

    rec(0, d, [])
    return out


def normalized_bar_dims(a: QuadraticAlgebra, d):
    """Hochschild homology in weight ``d`` straight from the normalized bar complex."""
    bases = [normalized_bar_basis(a, n, d) for n in range(d + 2)]
    index = [{key: i for i, key in enumerate(b)} for b in bases]
    ranks = [0] * (d + 3)
    for n in range(1, d + 2):
        if not bases[n] or not bases[n - 1]:
            continue
        rows = []
        for key in bases[n]:
            img = hochschild_b(BarChain(a, n + 1, {key: 1}))
            rows.append({index[n - 1][k]: c for k, c in img.terms.items()})
        ranks[n] = rank(rows)
    return [len(bases[n]) - ranks[n] - ranks[n + 1] for n in range(d + 1)]


# ---------------------------------------------------------------------------
# the explicit free resolution


@dataclass
class ResolutionMatrices:
    """Matrices of the Koszul resolution as right multiplications.

    ``0 -> A --t--> A^4 --N--> A^6 --M--> A^4 --x--> A``, entries linear NCPolys.
    """
    x: list
    M: list
    N: list
    t: list


def resolution_matrices(p: SklyaninParams, literal=False) -> ResolutionMatrices:
    """Explicit resolution matrices for the Sklyanin relations.

    ``x``, ``N`` and ``t`` are the standard ones.  The columns of ``N`` refer
    to the relation basis

        k1 (f01 - f23), k2 (f02 - f31), f03 - f12,
        k1 (f01 + f23), k2 (f02 + f31), f03 + f12,

    with ``k1 = (1 - a3)/(1 + a1)`` and ``k2 = (1 + a3)/(1 - a2)``, so the rows
    of ``M`` are those relations written as ``row . x``.  ``literal=True``
    instead returns the literal ``M`` with rows f01, -f23, f02, -f31, f03, -f12
    (third row carrying ``-alpha3 S3`` where f02 needs ``-alpha2 S3``), for
    which ``M.x`` and ``N.M`` do not vanish.
    """
    a1, a2, a3 = p.alphas
    S0, S1, S2, S3 = (NCPoly.gen(i) for i in range(4))
    Z = NCPoly()
    x = [[S0], [S1], [S2], [S3]]
    if literal:
        M = [
            [-S1, S0, -a1 * S3, -a1 * S2],
            [S1, S0, S3, -S2],
            [-S2, -a3 * S3, S0, -a2 * S1],
            [S2, -S3, S0, S1],
            [-S3, -a3 * S2, -a3 * S1, S0],
            [S3, S2, -S1, S0],
        ]
    else:
        k1 = (1 - a3) / (1 + a1)
        k2 = (1 + a3) / (1 - a2)
        M = [
            [Z, 2 * k1 * S0, k1 * (1 - a1) * S3, -k1 * (1 + a1) * S2],
            [Z, -k2 * (1 + a2) * S3, 2 * k2 * S0, k2 * (1 - a2) * S1],
            [Z, (1 - a3) * S2, -(1 + a3) * S1, 2 * S0],
            [-2 * k1 * S1, Z, -k1 * (1 + a1) * S3, k1 * (1 - a1) * S2],
            [-2 * k2 * S2, k2 * (1 - a2) * S3, Z, -k2 * (1 + a2) * S1],
            [-2 * S3, -(1 + a3) * S2, (1 - a3) * S1, Z],
        ]
    h = Fraction(1, 2)
    N = [
        [S1, S2, S3, Z, Z, Z],
        [Z, h * (1 - a2) * S3, -h * (1 + a3) * S2, S0, h * (1 + a2) * S3, -h * (1 - a3) * S2],
        [-h * (1 + a1) * S3, Z, h * (1 - a3) * S1, -h * (1 - a1) * S3, S0, h * (1 + a3) * S1],
        [h * (1 - a1) * S2, -h * (1 + a2) * S1, Z, h * (1 + a1) * S2, -h * (1 - a2) * S1, S0],
    ]
    t = [[S0, S1, S2, S3]]
    return ResolutionMatrices(x, M, N, t)


def matrix_product(P, Q):
    """Product of NCPoly matrices in the tensor algebra (no reduction)."""
    if len(P[0]) != len(Q):
        raise ValueError("incompatible matrix shapes")
    return [[sum((P[i][k] * Q[k][j] for k in range(len(Q))), NCPoly())
             for j in range(len(Q[0]))] for i in range(len(P))]


def vanishes_in(a: QuadraticAlgebra, P):
    """True iff every entry of the NCPoly matrix ``P`` is zero in ``a``."""
    for row in P:
        for e in row:
            if e and a.reduce(e)[1]:
                return False
    return True


def resolution_identities(p: SklyaninParams, literal=False):
    a = sklyanin_relations(p)
    r = resolution_matrices(p, literal=literal)
    return {
        "M.x": vanishes_in(a, matrix_product(r.M, r.x)),
        "N.M": vanishes_in(a, matrix_product(r.N, r.M)),
        "t.N": vanishes_in(a, matrix_product(r.t, r.N)),
    }


def _right_mult_matrix(a, mat, d_src):
    """Matrix (column convention) of ``(a_r) -> (sum_r a_r mat[r][c])_c`` on ``A_{d_src}^rows``."""
    nr, nc = len(mat), len(mat[0])
    ds = a.dim(d_src)
    dt = a.dim(d_src + 1)
    rows = defaultdict(dict)
    for r in range(nr):
        for c in range(nc):
            for w, coef in mat[r][c].terms.items():
                (letter,) = w
                for j in range(ds):
                    for k, y in a.right_multiply({j: Fraction(1)}, d_src, letter).items():
                        key = c * dt + k
                        rows[key][r * ds + j] = rows[key].get(r * ds + j, 0) + coef * y
    return SparseMatrix(nc * dt, nr * ds, rows)


def koszul_resolution_exactness(p: SklyaninParams, max_weight: int, literal=False,
                                detail=False):
    """Exactness of ``0 -> A(-4) -> A(-3)^4 -> A(-2)^6 -> A(-1)^4 -> A -> k -> 0``.

    Returns a bool, or with ``detail=True`` a dict ``{(d, position): homology}``
    where position -1 is ``k`` and position ``m`` is the free module of rank
    ``C(4, m)``.
    """
    a = sklyanin_relations(p)
    r = resolution_matrices(p, literal=literal)
    mats = [None, r.x, r.M, r.N, r.t]
    ranks_of = [1, 4, 6, 4, 1]
    out = {}
    for d in range(max_weight + 1):
        dims = [a.dim(d - m) * ranks_of[m] if d >= m else 0 for m in range(5)]
        maps = {}
        for m in range(1, 5):
            if dims[m] and dims[m - 1]:
                maps[m] = _right_mult_matrix(a, mats[m], d - m)
            else:
                maps[m] = SparseMatrix(dims[m - 1], dims[m])
        eps = SparseMatrix(1 if d == 0 else 0, dims[0], {0: {0: 1}} if d == 0 else None)
        out[d, -1] = homology_dim(eps, SparseMatrix(0, eps.nrows))
        out[d, 0] = homology_dim(maps[1], eps)
        for m in range(1, 5):
            d_in = maps[m + 1] if m < 4 else SparseMatrix(dims[4], 0)
            out[d, m] = homology_dim(d_in, maps[m])
    if detail:
        return out
    return all(v == 0 for v in out.values())


def resolution_euler(d):
    """``sum_j (-1)^j dim(stage j)_d`` over ``k, A, A^4, A^6, A^4, A`` (binomial identity)."""
    total = 1 if d == 0 else 0
    for m in range(5):
        if d >= m:
            total -= (-1) ** m * comb(4, m) * comb(d - m + 3, 3)
    return total


# ---------------------------------------------------------------------------
# distinguished cycles


def cycle_delta(p) -> KoszulChain:
    """``1 (x) omega`` in ``K_4``, omega spanning ``(A^!_4)^*``."""
    kc = koszul_complex(_as_algebra(p))
    return KoszulChain(kc, 4, 4, {(0, 0): 1})


def cycle_pi(p) -> KoszulChain:
    """``sum_r S_r (x) (zeta_r . omega)``: the image of ``1`` under ``. t``, in ``K_3``."""
    kc = koszul_complex(_as_algebra(p))
    terms = defaultdict(Fraction)
    for r in range(kc.algebra.num_gens):
        for s, c in kc.left[4][0][r].items():
            terms[r, s] += c
    return KoszulChain(kc, 3, 4, _clean(terms))


def literal_q_pi(p) -> BarChain:
    """``3 (S2 S3 f01 + S3 S1 f02 + S1 S2 f03 + S0 S1 f23)`` in ``A^{(x)4}``."""
    a = _as_algebra(p)
    params = p if isinstance(p, SklyaninParams) else None
    if params is None:
        raise TypeError("literal_q_pi needs SklyaninParams")
    rels = sklyanin_relation_polys(params)
    out = defaultdict(Fraction)
    for (u, v), name in (((2, 3), (0, 1)), ((3, 1), (0, 2)), ((1, 2), (0, 3)), ((0, 1), (2, 3))):
        for w, c in rels[name].terms.items():
            out[((1, u), (1, v), (1, w[0]), (1, w[1]))] += 3 * c
    return BarChain(a, 4, _clean(out))


def literal_q_pi_report(p):
    """Compare :func:`literal_q_pi` with ``q_embed(cycle_pi(p))``.

    Returns ``is_cycle`` (whether the literal chain is a Hochschild cycle),
    ``ratio`` (the scalar ``c`` with literal = c q(Pi), or None) and ``match``
    (literal equals q(Pi) exactly).
    """
    lit = literal_q_pi(p)
    ours = q_embed(cycle_pi(p))
    ratio = None
    if ours.terms and set(lit.terms) == set(ours.terms):
        k = next(iter(ours.terms))
        c = lit.terms[k] / ours.terms[k]
        if all(lit.terms[key] == c * v for key, v in ours.terms.items()):
            ratio = c
    return {
        "is_cycle": not hochschild_b(lit),
        "ratio": ratio,
        "match": lit == ours,
    }
