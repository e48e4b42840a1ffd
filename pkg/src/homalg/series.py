"""Rational generating functions in one variable and table comparison.

Polynomials are coefficient lists, constant term first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm


def _trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_divmod(a, b):
    a = [Fraction(x) for x in _trim(a)]
    b = _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / lead
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a = _trim(a)
    return _trim(q), a


def _poly_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    return a


def _primitive(p):
    """Scale a rational polynomial to a primitive integer one; returns (poly, scale)."""
    den = 1
    for x in p:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in p]
    g = gcd(*ints) if ints else 1
    return [x // g for x in ints], Fraction(g, den)


class RationalSeries:
    """``numerator / denominator`` with integer polynomials, kept in lowest terms.

    The denominator has a nonzero (positive) constant term, so the quotient
    has a Taylor expansion at ``t = 0``.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=(1,)):
        num = _trim([Fraction(x) for x in numerator])
        den = _trim([Fraction(x) for x in denominator])
        if not den or den[0] == 0:
            raise ZeroDivisionError("denominator must have a nonzero constant term")
        if not num:
            den = [Fraction(1)]
        else:
            g = _poly_gcd(num, den)
            if len(g) > 1:
                num = _poly_divmod(num, g)[0]
                den = _poly_divmod(den, g)[0]
        # clear denominators jointly, then make den(0) > 0 and the pair primitive
        scale = 1
        for x in num + den:
            scale = lcm(scale, x.denominator)
        num = [int(x * scale) for x in num]
        den = [int(x * scale) for x in den]
        if den[0] < 0:
            num = [-x for x in num]
            den = [-x for x in den]
        g = gcd(*num, *den)
        self.numerator = tuple(x // g for x in num)
        self.denominator = tuple(x // g for x in den)

    @classmethod
    def polynomial(cls, coeffs):
        return cls(coeffs, [1])

    def __add__(self, other):
        if not isinstance(other, RationalSeries):
            other = RationalSeries([other])
        num = _poly_add(_poly_mul(self.numerator, other.denominator),
                        _poly_mul(other.numerator, self.denominator))
        return RationalSeries(num, _poly_mul(self.denominator, other.denominator))

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries([-x for x in self.numerator], self.denominator)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RationalSeries):
            other = RationalSeries([other])
        return RationalSeries(_poly_mul(self.numerator, other.numerator),
                              _poly_mul(self.denominator, other.denominator))

    __rmul__ = __mul__

    def __eq__(self, other):
        # cross-multiplication of reduced fractions
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return (_poly_mul(self.numerator, other.denominator)
                == _poly_mul(other.numerator, self.denominator))

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return f"RationalSeries({_fmt(self.numerator)} / {_fmt(self.denominator)})"


def _fmt(p):
    if not p:
        return "0"
    terms = []
    for k, c in enumerate(p):
        if not c:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if mono and c == 1:
            terms.append(mono)
        elif mono and c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}{'*' + mono if mono else ''}")
    return "(" + " + ".join(terms).replace("+ -", "- ") + ")"


def expand(s: RationalSeries, n: int):
    """Taylor coefficients ``c_0 .. c_n`` at ``t = 0``.

    Integral coefficients come back as ``int``; others as ``Fraction``.
    """
    num, den = s.numerator, s.denominator
    if not den or den[0] == 0:
        raise ZeroDivisionError("denominator vanishes at t = 0")
    q0 = den[0]
    out = []
    for k in range(n + 1):
        acc = Fraction(num[k] if k < len(num) else 0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        c = acc / q0
        out.append(int(c) if c.denominator == 1 else c)
    return out


# (1 - t^2)^2
_FREE_DEN = (1, 0, -2, 0, 1)

_NUMERATORS = {
    0: (1, 4, 2),
    1: (0, 4, 4, 4, 1),
    2: (0, 0, 0, 4, 2),
    3: (0, 0, 0, 0, 1),
    4: (0, 0, 0, 0, 1),
}

# degrees of the free generators over the two-variable central ring
THEOREM_DEGREES = {
    0: (0, 1, 1, 1, 1, 2, 2),
    1: (1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 4),
    2: (3, 3, 3, 3, 4, 4),
    3: (4,),
    4: (4,),
}


def paper_series(which) -> RationalSeries:
    """Closed-form Poincare series, ``which`` in ``PH0..PH4`` or ``HH0..HH4``.

    The Poisson and Hochschild lists coincide term by term.
    """
    name = str(which).upper()
    if len(name) != 3 or name[:2] not in ("PH", "HH") or not name[2].isdigit():
        raise ValueError(f"unknown series {which!r}")
    i = int(name[2])
    if i not in _NUMERATORS:
        raise ValueError(f"unknown series {which!r}")
    return RationalSeries(_NUMERATORS[i], _FREE_DEN)


def generator_series(degrees) -> RationalSeries:
    """Hilbert series of a free module over ``K[u, v]`` (u, v of weight 2)."""
    top = max(degrees, default=0)
    num = [0] * (top + 1)
    for d in degrees:
        num[d] += 1
    return RationalSeries(num, _FREE_DEN)


# ---------------------------------------------------------------------------
# comparison reports


class TableIncomplete(ValueError):
    pass


@dataclass
class Cell:
    i: int
    d: int
    expected: int
    computed: int

    @property
    def match(self):
        return self.expected == self.computed


@dataclass
class ComparisonReport:
    side: str
    cells: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.match for c in self.cells)

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    def failures(self):
        return [c for c in self.cells if not c.match]

    def records(self):
        return [{"side": self.side, "i": c.i, "d": c.d, "dim": c.computed,
                 "expected": c.expected, "match": c.match} for c in self.cells]

    def to_dict(self):
        return {"side": self.side, "tables": self.records(), "verdict": self.verdict}

    def to_json(self):
        return json.dumps(self.to_dict())

    def render(self):
        lines = [f"{self.side}: computed vs closed-form series"]
        by_i = {}
        for c in self.cells:
            by_i.setdefault(c.i, []).append(c)
        for i in sorted(by_i):
            row = by_i[i]
            got = " ".join(f"{c.computed:>3}" for c in row)
            exp = " ".join(f"{c.expected:>3}" for c in row)
            bad = [c.d for c in row if not c.match]
            status = "ok" if not bad else "MISMATCH at d=" + ",".join(map(str, bad))
            lines.append(f"  i={i} computed: {got}")
            lines.append(f"      expected: {exp}   {status}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)

    __str__ = render


def compare(table, n: int) -> ComparisonReport:
    """Check ``table[i, d]`` against the closed-form series for ``d <= n``."""
    prefix = "HH" if table.side == "hochschild" else "PH"
    report = ComparisonReport(table.side)
    for i in range(5):
        expected = expand(paper_series(f"{prefix}{i}"), n)
        for d in range(n + 1):
            if (i, d) not in table:
                raise TableIncomplete(f"table has no entry for i={i}, d={d}")
            report.cells.append(Cell(i, d, expected[d], table[i, d]))
    return report
