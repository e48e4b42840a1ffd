"""Quadratic algebras ``T(V)/(W)`` by exact linear algebra in each degree.

Words in the generators are tuples of ints.  Degree-``n`` tensors are
indexed by the base-``g`` value of the word, so numeric order is lexicographic
word order.

Each graded piece is built from the previous one:
``A_n = (A_{n-1} (x) V) / image(A_{n-2} (x) W)``.  The basis of ``A_n`` is the
set of lexicographically greedy words: a word is kept when it is not a
combination of smaller words modulo the relations.  Those words are closed
under taking prefixes, so they are all of the form (basis word of
``A_{n-1}``) + letter, and one reduced echelon form per degree (pivots sought
from the largest word down) yields the rewriting of every other candidate.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Subspace, intersect, kernel_basis, rank, rref, SparseMatrix


class ParameterError(ValueError):
    pass


# ---------------------------------------------------------------------------
# tensor words and noncommutative polynomials


def word_index(word, g):
    i = 0
    for a in word:
        i = i * g + a
    return i


def index_word(i, n, g):
    w = []
    for _ in range(n):
        i, r = divmod(i, g)
        w.append(r)
    return tuple(reversed(w))


class NCPoly:
    """Element of the tensor algebra: ``{word: coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(w): Fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def gen(cls, i):
        return cls({(i,): 1})

    @classmethod
    def scalar(cls, c):
        return cls({(): c})

    def __add__(self, other):
        if not isinstance(other, NCPoly):
            other = NCPoly.scalar(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, 0) + c
        return NCPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            c = Fraction(other)
            return NCPoly({w: v * c for w, v in self.terms.items()})
        t = defaultdict(Fraction)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                t[w1 + w2] += c1 * c2
        return NCPoly(t)

    def __rmul__(self, c):
        return self * c

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def degrees(self):
        return {len(w) for w in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def vector(self, g):
        """Sparse coordinates in ``V^{(x)n}`` of a homogeneous element."""
        if not self.is_homogeneous():
            raise ValueError("element is not homogeneous")
        return {word_index(w, g): c for w, c in self.terms.items()}

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*" + ("".join(f"S{a}" for a in w) or "1")
                          for w, c in sorted(self.terms.items()))


# ---------------------------------------------------------------------------
# quadratic algebras


class GradedBasis:
    """Chosen basis of one graded piece, with the reduction map to it."""

    def __init__(self, algebra, degree):
        self.algebra = algebra
        self.degree = degree
        self.words = algebra._words(degree)

    @property
    def representative_words(self):
        return list(self.words)

    def __len__(self):
        return len(self.words)

    def coordinates(self, tensor):
        """Coordinates of a degree-``n`` tensor (NCPoly, word dict or index dict)."""
        a = self.algebra
        if isinstance(tensor, NCPoly):
            items = tensor.terms.items()
        else:
            items = ((index_word(w, self.degree, a.num_gens) if isinstance(w, int) else w, c)
                     for w, c in tensor.items())
        out = defaultdict(Fraction)
        for w, c in items:
            if len(w) != self.degree:
                raise ValueError(f"word {w} does not have degree {self.degree}")
            for j, x in a.word_coordinates(w).items():
                out[j] += c * x
        return {j: x for j, x in out.items() if x}

    coordinate_map = coordinates

    def projection_matrix(self):
        """Dense reduction matrix ``A_n x 4^n`` (only sensible for small n)."""
        g = self.algebra.num_gens
        cols = {}
        for idx in range(g ** self.degree):
            for j, x in self.algebra.word_coordinates(index_word(idx, self.degree, g)).items():
                cols.setdefault(j, {})[idx] = x
        return SparseMatrix(len(self.words), g ** self.degree, cols)


class QuadraticAlgebra:
    """``T(V)/(W)`` with ``dim V = num_gens`` and ``W`` a subspace of ``V (x) V``.

    Graded pieces, multiplication tables and word reductions are computed
    lazily and cached on the instance; once computed they never change.
    """

    def __init__(self, num_gens: int, relations: Subspace, names=None):
        if relations.ambient_dim != num_gens ** 2:
            raise ValueError(f"relations must live in a {num_gens ** 2}-dimensional space")
        for v in relations.basis:
            if not any(v):
                raise ValueError("relation vectors must be nonzero")
        self.num_gens = num_gens
        self.relations = relations
        self.names = names
        g = num_gens
        self._rel_terms = [[(a, b, v[a * g + b]) for a in range(g) for b in range(g) if v[a * g + b]]
                           for v in relations.basis]
        self._basis = {0: ((),), 1: tuple((i,) for i in range(g))}
        # _rmul[n][j][letter] -> coords in A_n of (basis word j of A_{n-1}) * letter
        self._rmul = {1: [[{i: Fraction(1)} for i in range(g)]]}
        self._word_cache = {(): {0: Fraction(1)}}

    # -- construction ------------------------------------------------------

    def _build(self, n):
        if n in self._basis:
            return
        self._build(n - 1)
        g = self.num_gens
        prev = self._rmul[n - 1]
        dim_prev = len(self._basis[n - 1])
        rows = []
        for i in range(len(self._basis[n - 2])):
            for terms in self._rel_terms:
                row = defaultdict(Fraction)
                for a, b, c in terms:
                    for j, x in prev[i][a].items():
                        row[j * g + b] += c * x
                rows.append({k: v for k, v in row.items() if v})
        ncols = dim_prev * g
        piv = rref(rows, order=range(ncols - 1, -1, -1)) if rows else []
        pivot_rows = {c: r for c, r in piv}
        free = [c for c in range(ncols) if c not in pivot_rows]
        new_index = {c: k for k, c in enumerate(free)}
        table = [[None] * g for _ in range(dim_prev)]
        for c in range(ncols):
            j, letter = divmod(c, g)
            if c in new_index:
                table[j][letter] = {new_index[c]: Fraction(1)}
            else:
                r = pivot_rows[c]
                table[j][letter] = {new_index[f]: -x for f, x in r.items() if f != c}
        words_prev = self._basis[n - 1]
        self._basis[n] = tuple(words_prev[c // g] + (c % g,) for c in free)
        self._rmul[n] = table

    def _words(self, n):
        self._build(n)
        return self._basis[n]

    def graded_basis(self, n) -> GradedBasis:
        return GradedBasis(self, n)

    def dim(self, n):
        return len(self._words(n))

    # -- arithmetic in chosen bases ------------------------------------------

    def right_multiply(self, x, m, letter):
        """``x * S_letter`` for ``x`` given by coordinates in ``A_m``."""
        self._build(m + 1)
        table = self._rmul[m + 1]
        out = defaultdict(Fraction)
        for j, c in x.items():
            for k, y in table[j][letter].items():
                out[k] += c * y
        return {k: v for k, v in out.items() if v}

    def word_coordinates(self, word):
        """Coordinates in ``A_{len(word)}`` of a word in the generators."""
        word = tuple(word)
        hit = self._word_cache.get(word)
        if hit is None:
            hit = self.right_multiply(self.word_coordinates(word[:-1]), len(word) - 1, word[-1])
            self._word_cache[word] = hit
        return hit

    def multiply(self, u, m, v, n):
        """Product of ``u`` in ``A_m`` and ``v`` in ``A_n``, both as coordinate dicts."""
        words = self._words(n)
        out = defaultdict(Fraction)
        for j, c in v.items():
            x = u
            deg = m
            for letter in words[j]:
                x = self.right_multiply(x, deg, letter)
                deg += 1
            for k, y in x.items():
                out[k] += c * y
        return {k: v for k, v in out.items() if v}

    def left_multiply_word(self, prefix, j, n):
        """Coordinates of ``prefix * (basis word j of A_n)``."""
        return self.word_coordinates(tuple(prefix) + self._words(n)[j])

    def reduce(self, p: NCPoly):
        """Coordinates of a homogeneous tensor-algebra element in ``A_n``."""
        degs = p.degrees()
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        n = degs.pop() if degs else 0
        return n, GradedBasis(self, n).coordinates(p)

    # -- Koszul duality ----------------------------------------------------

    def relation_matrix(self):
        return self.relations.as_matrix()

    def koszul_dual(self) -> "QuadraticAlgebra":
        """``T(V*)/(W^perp)`` for the factorwise pairing of ``V*^2`` with ``V^2``."""
        perp = kernel_basis(self.relation_matrix())
        return QuadraticAlgebra(self.num_gens, perp)

    def to_json(self):
        return json.dumps({"num_gens": self.num_gens,
                           "relations": [[str(x) for x in v] for v in self.relations.basis]})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        g = data["num_gens"]
        rels = [[Fraction(x) for x in v] for v in data["relations"]]
        return cls(g, Subspace(g * g, rels))

    def __repr__(self):
        return f"QuadraticAlgebra(gens={self.num_gens}, relations={self.relations.dim})"


def graded_dim(a: QuadraticAlgebra, n: int) -> int:
    return a.dim(n)


def graded_basis(a: QuadraticAlgebra, n: int) -> GradedBasis:
    return a.graded_basis(n)


def multiply(a: QuadraticAlgebra, u, m, v, n):
    return a.multiply(u, m, v, n)


def placement_vectors(a: QuadraticAlgebra, n):
    """Spanning vectors of ``sum_{i+j+2=n} V^i (x) W (x) V^j`` inside ``V^{(x)n}``."""
    g = a.num_gens
    rels = [{word_index((p, q), g): c for p, q, c in terms} for terms in a._rel_terms]
    out = []
    for i in range(n - 1):
        j = n - 2 - i
        for left in range(g ** i):
            for rel in rels:
                for right in range(g ** j):
                    out.append({(left * g * g + k) * g ** j + right: c for k, c in rel.items()})
    return out


def tensor_quotient_dim(a: QuadraticAlgebra, n: int) -> int:
    """``4^n`` minus the rank of all relation placements (direct, for small n)."""
    if n < 2:
        return a.num_gens ** n
    return a.num_gens ** n - rank(placement_vectors(a, n))


def koszul_dual_dim(a: QuadraticAlgebra, m: int) -> int:
    return graded_dim(a.koszul_dual(), m)


def koszul_subspace(a: QuadraticAlgebra, m: int) -> Subspace:
    """``(A^!_m)^* = intersection of V^i (x) W (x) V^j`` over ``i + j + 2 = m``."""
    g = a.num_gens
    if m < 2:
        return Subspace.full(g ** m)
    rels = [{word_index((p, q), g): c for p, q, c in terms} for terms in a._rel_terms]
    result = None
    for i in range(m - 1):
        j = m - 2 - i
        vecs = [{(left * g * g + k) * g ** j + right: c for k, c in rel.items()}
                for left in range(g ** i) for rel in rels for right in range(g ** j)]
        piece = Subspace(g ** m, vecs)
        result = piece if result is None else intersect(result, piece)
        if not result.dim:
            break
    return _reduced_basis(result)


def _reduced_basis(s: Subspace) -> Subspace:
    """Same subspace with its reduced echelon basis (pivots on the largest words)."""
    if not s.dim:
        return s
    piv = rref(s.sparse_basis(), order=range(s.ambient_dim - 1, -1, -1))
    return Subspace(s.ambient_dim, [r for _, r in piv])


# ---------------------------------------------------------------------------
# Sklyanin algebras


CYCLIC = ((1, 2, 3), (2, 3, 1), (3, 1, 2))


@dataclass(frozen=True)
class SklyaninParams:
    alpha1: Fraction
    alpha2: Fraction
    alpha3: Fraction

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "alpha3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        a1, a2, a3 = self.alphas
        if a1 + a2 + a3 + a1 * a2 * a3 != 0:
            raise ParameterError("alpha1 + alpha2 + alpha3 + alpha1*alpha2*alpha3 must vanish")

    @property
    def alphas(self):
        return (self.alpha1, self.alpha2, self.alpha3)

    def alpha(self, i):
        return self.alphas[i - 1]

    def is_generic(self):
        return all(a not in (0, 1, -1) for a in self.alphas)

    def __str__(self):
        return f"alpha=({self.alpha1}, {self.alpha2}, {self.alpha3})"


def sklyanin_params(alpha1, alpha2, guard=True) -> SklyaninParams:
    """Complete ``(alpha1, alpha2)`` to a triple on the Sklyanin surface."""
    a1, a2 = Fraction(alpha1), Fraction(alpha2)
    den = 1 + a1 * a2
    if den == 0:
        raise ParameterError("1 + alpha1*alpha2 = 0: alpha3 is undefined")
    p = SklyaninParams(a1, a2, -(a1 + a2) / den)
    if guard and not p.is_generic():
        raise ParameterError(f"non-generic parameters {p} (some alpha_i in {{0, 1, -1}})")
    return p


def sklyanin_relation_polys(p: SklyaninParams):
    """The six relations, ordered f01, f02, f03, f23, f31, f12."""
    S = [NCPoly.gen(i) for i in range(4)]
    out = {}
    for i, j, k in CYCLIC:
        out[0, i] = S[0] * S[i] - S[i] * S[0] - (S[j] * S[k] + S[k] * S[j]) * p.alpha(i)
    for i, j, k in CYCLIC:
        out[j, k] = S[j] * S[k] - S[k] * S[j] - (S[0] * S[i] + S[i] * S[0])
    return out


def sklyanin_relations(p: SklyaninParams) -> QuadraticAlgebra:
    rels = sklyanin_relation_polys(p)
    vecs = [r.vector(4) for r in rels.values()]
    basis = Subspace(16, vecs)
    if rank(vecs) != 6:
        raise ParameterError(f"relations are linearly dependent at {p}")
    return QuadraticAlgebra(4, basis, names=list(rels))


def sklyanin_algebra(alpha1, alpha2, guard=True) -> QuadraticAlgebra:
    return sklyanin_relations(sklyanin_params(alpha1, alpha2, guard=guard))
