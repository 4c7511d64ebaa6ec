"""Graded supercommutative function algebra on a chart.

Elements are finite sums of canonical graded monomials with exact
polynomial coefficients.  Canonicalization (Koszul signs, annihilation
of odd squares, merging) happens at construction; all operations are
pure and return new values.
"""

from __future__ import annotations

from fractions import Fraction

from .chart import ChartError, ChartSpec
from .kernel import element_mul, mono_partial
from .poly import Poly

INHOMOGENEOUS = "inhomogeneous"


class GradedElement:
    """Map from canonical graded monomial to nonzero Poly coefficient."""

    __slots__ = ("chart", "terms")

    def __init__(self, chart: ChartSpec, terms=None):
        self.chart = chart
        self.terms: dict[tuple, Poly] = {}
        if terms:
            for mono, poly in dict(terms).items():
                if poly:
                    self.terms[tuple(mono)] = poly

    # constructors ----------------------------------------------------
    @classmethod
    def zero(cls, chart: ChartSpec) -> "GradedElement":
        return cls(chart)

    @classmethod
    def from_poly(cls, chart: ChartSpec, poly: Poly) -> "GradedElement":
        return cls(chart, {(): poly})

    @classmethod
    def scalar(cls, chart: ChartSpec, c) -> "GradedElement":
        return cls.from_poly(chart, Poly.const(chart.d, c))

    @classmethod
    def generator(cls, chart: ChartSpec, name: str) -> "GradedElement":
        """The generator as an element; accepts x, psi, zeta, chi, p names."""
        if name.startswith("x"):
            mu = int(name[1:])
            return cls.from_poly(chart, Poly.var(chart.d, mu))
        sid = chart.sid_of_name(name)
        return cls(chart, {((sid, 1),): Poly.const(chart.d, 1)})

    @classmethod
    def monomial(cls, chart: ChartSpec, mono, coeff: Poly | None = None) -> "GradedElement":
        """Element with a single canonical monomial (already sorted)."""
        if coeff is None:
            coeff = Poly.const(chart.d, 1)
        return cls(chart, {tuple(mono): coeff})

    # normalization of raw generator words ---------------------------
    @classmethod
    def normalize(cls, chart: ChartSpec, raw) -> "GradedElement":
        """Canonicalize a list of (generator name sequence, coefficient).

        Coefficients may be Poly, int, Fraction or str (parsed rationals).
        Odd transpositions accumulate Koszul signs; repeated odd
        generators annihilate the word; like terms merge.
        """
        out = cls.zero(chart)
        for word, coeff in raw:
            if not isinstance(coeff, Poly):
                coeff = Poly.const(chart.d, coeff)
            term = cls.from_poly(chart, coeff)
            for name in word:
                term = term * cls.generator(chart, name)
            out = out + term
        return out

    # arithmetic ------------------------------------------------------
    def _check(self, other: "GradedElement"):
        if self.chart != other.chart:
            raise ChartError(f"chart mismatch: {self.chart} vs {other.chart}")

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._check(other)
        out = dict(self.terms)
        for mono, poly in other.terms.items():
            cur = out.get(mono)
            s = poly if cur is None else cur + poly
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return GradedElement(self.chart, out)

    def __neg__(self) -> "GradedElement":
        return GradedElement(self.chart, {m: -p for m, p in self.terms.items()})

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Poly):
            return self.scale_poly(other)
        self._check(other)
        raw = element_mul(
            {m: p.terms for m, p in self.terms.items()},
            {m: p.terms for m, p in other.terms.items()},
            self.chart.parity)
        return GradedElement(self.chart,
                             {m: Poly._raw(self.chart.d, t) for m, t in raw.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self.__mul__(other)  # scalars and Polys are even
        return NotImplemented

    def scale(self, c) -> "GradedElement":
        return GradedElement(self.chart, {m: p * c for m, p in self.terms.items()})

    def scale_poly(self, q: Poly) -> "GradedElement":
        return GradedElement(self.chart, {m: p * q for m, p in self.terms.items()})

    # degree bookkeeping ---------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def euler_degree(self):
        """Common total degree, 0 for zero, or INHOMOGENEOUS."""
        if not self.terms:
            return 0
        degs = {self.chart.mono_degree(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return INHOMOGENEOUS

    def component(self, n: int) -> "GradedElement":
        return GradedElement(
            self.chart,
            {m: p for m, p in self.terms.items() if self.chart.mono_degree(m) == n})

    def max_degree(self) -> int:
        return max((self.chart.mono_degree(m) for m in self.terms), default=0)

    # graded derivatives ----------------------------------------------
    def x_partial(self, mu: int) -> "GradedElement":
        return GradedElement(self.chart,
                             {m: p.partial(mu) for m, p in self.terms.items()})

    def super_partial(self, sid: int, from_right: bool) -> "GradedElement":
        out: dict[tuple, Poly] = {}
        parity = self.chart.parity
        for mono, poly in self.terms.items():
            coeff, reduced = mono_partial(mono, sid, parity, from_right)
            if not coeff:
                continue
            add = poly * coeff
            cur = out.get(reduced)
            s = add if cur is None else cur + add
            if s:
                out[reduced] = s
            else:
                out.pop(reduced, None)
        return GradedElement(self.chart, out)

    # structure -------------------------------------------------------
    def coefficient(self, mono) -> Poly:
        return self.terms.get(tuple(mono), Poly.zero(self.chart.d))

    def monomials(self):
        return sorted(self.terms, key=self._mono_key)

    def _mono_key(self, mono):
        return (self.chart.mono_degree(mono), mono)

    def top_monomials(self, count: int = 3):
        """The leading monomials in canonical order, for witness reports."""
        return sorted(self.terms, key=self._mono_key, reverse=True)[:count]

    def __eq__(self, other):
        return (isinstance(other, GradedElement)
                and self.chart == other.chart and self.terms == other.terms)

    def __hash__(self):
        return hash((self.chart, frozenset((m, p) for m, p in self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # rendering -------------------------------------------------------
    def render_mono(self, mono) -> str:
        bits = []
        for sid, e in mono:
            name = self.chart.generator(sid).name
            bits.append(name + (f"^{e}" if e > 1 else ""))
        return "*".join(bits) if bits else "1"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in self.monomials():
            poly = self.terms[mono]
            ms = self.render_mono(mono)
            ps = str(poly)
            if ms == "1":
                parts.append(ps)
            elif ps == "1":
                parts.append(ms)
            elif ps == "-1":
                parts.append(f"-{ms}")
            elif ("+" in ps) or (" - " in ps):
                parts.append(f"({ps})*{ms}")
            else:
                parts.append(f"{ps}*{ms}")
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"GradedElement({self})"


def monomial_basis(chart: ChartSpec, n: int) -> list[tuple]:
    """All x-free canonical monomials of total degree n, in canonical order."""
    out: list[tuple] = []
    degrees = chart.degrees
    parity = chart.parity
    K = len(degrees)

    def rec(sid: int, rem: int, acc: list):
        if rem == 0:
            out.append(tuple(acc))
            return
        if sid >= K:
            return
        rec(sid + 1, rem, acc)
        deg = degrees[sid]
        top = 1 if parity[sid] else rem // deg
        for e in range(1, top + 1):
            if deg * e <= rem:
                acc.append((sid, e))
                rec(sid + 1, rem - deg * e, acc)
                acc.pop()

    rec(0, n, [])
    return sorted(out)


def gmul(f: GradedElement, g: GradedElement) -> GradedElement:
    """Graded-commutative product."""
    return f * g


def euler_degree(f: GradedElement):
    return f.euler_degree()


def component(f: GradedElement, n: int) -> GradedElement:
    return f.component(n)
