"""Graded coordinate charts for T*[p]T[1]R^d, optionally times R[3].

A chart fixes the generator families, their degrees and parities, the
canonical generator order (x-block, psi-block, zeta, chi-block, p-block,
ascending by index) and the constant Darboux pairing table of the
degree-(-p) Poisson bracket.

Sign conventions (documented choices, validated by the test suite):

* (p_mu, x^mu) = +1 and (x^mu, p_mu) = -1, the orientation for which
  Q = (Theta, -) acts as psi^mu d/dx^mu on p- and chi-independent
  functions.
* (psi^mu, chi_mu) = +1 always; graded symmetry of a degree-(-p)
  bracket then forces (chi_mu, psi^mu) = (-1)^p.
* (zeta, zeta) = +1 on the m5 chart.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class ChartError(ValueError):
    """Invalid chart construction or mismatched-chart operation."""


@dataclass(frozen=True)
class Generator:
    name: str
    family: str  # 'x' | 'psi' | 'zeta' | 'chi' | 'p'
    index: int   # 1-based within family; 0 for zeta
    degree: int

    @property
    def parity(self) -> int:
        return self.degree % 2


class ChartSpec:
    """Immutable description of one graded Darboux chart.

    The x generators live in polynomial coefficients; the remaining
    ("super") generators label graded monomials and are numbered by a
    super id (sid) in canonical order.
    """

    def __init__(self, kind: str, d: int, p: int):
        if d < 1:
            raise ChartError(f"base dimension d must be >= 1, got {d}")
        if p < 2:
            raise ChartError(f"symplectic degree p must be >= 2, got {p}")
        if kind not in ("vinogradov", "m5"):
            raise ChartError(f"unknown chart kind {kind!r}")
        if kind == "m5" and p != 6:
            raise ChartError("m5 chart has fixed symplectic degree p=6")
        self.kind = kind
        self.d = d
        self.p = p

        supers: list[Generator] = []
        for mu in range(1, d + 1):
            supers.append(Generator(f"psi{mu}", "psi", mu, 1))
        if kind == "m5":
            supers.append(Generator("zeta", "zeta", 0, 3))
        for mu in range(1, d + 1):
            supers.append(Generator(f"chi{mu}", "chi", mu, p - 1))
        for mu in range(1, d + 1):
            supers.append(Generator(f"p{mu}", "p", mu, p))
        self.supers = tuple(supers)
        self.xs = tuple(Generator(f"x{mu}", "x", mu, 0) for mu in range(1, d + 1))
        self.parity = tuple(g.parity for g in supers)
        self.degrees = tuple(g.degree for g in supers)
        self._sid = {g.name: i for i, g in enumerate(supers)}
        self._by_family = {}
        for i, g in enumerate(supers):
            self._by_family[(g.family, g.index)] = i

        # Pairing table over tagged generator ids: ('x', mu) or ('s', sid).
        one = Fraction(1)
        chi_psi = one if p % 2 == 0 else -one
        pairs: dict[tuple, Fraction] = {}
        for mu in range(1, d + 1):
            sp = self.sid("p", mu)
            spsi = self.sid("psi", mu)
            schi = self.sid("chi", mu)
            pairs[(("s", sp), ("x", mu))] = one
            pairs[(("x", mu), ("s", sp))] = -one
            pairs[(("s", spsi), ("s", schi))] = one
            pairs[(("s", schi), ("s", spsi))] = chi_psi
        if kind == "m5":
            sz = self.sid("zeta", 0)
            pairs[(("s", sz), ("s", sz))] = one
        self.pairs = pairs

    def sid(self, family: str, index: int) -> int:
        return self._by_family[(family, index)]

    def sid_of_name(self, name: str) -> int:
        try:
            return self._sid[name]
        except KeyError:
            raise ChartError(f"unknown generator {name!r}") from None

    def generator(self, sid: int) -> Generator:
        return self.supers[sid]

    @property
    def families(self):
        fams = [("x", self.d, 0), ("psi", self.d, 1)]
        if self.kind == "m5":
            fams.append(("zeta", 1, 3))
        fams.extend([("chi", self.d, self.p - 1), ("p", self.d, self.p)])
        return fams

    def mono_degree(self, mono) -> int:
        return sum(e * self.degrees[g] for g, e in mono)

    def __eq__(self, other):
        return (isinstance(other, ChartSpec)
                and (self.kind, self.d, self.p) == (other.kind, other.d, other.p))

    def __hash__(self):
        return hash((self.kind, self.d, self.p))

    def __repr__(self):
        if self.kind == "m5":
            return f"ChartSpec(m5, d={self.d})"
        return f"ChartSpec(vinogradov, d={self.d}, p={self.p})"


def make_chart(kind: str, d: int, p: int | None = None) -> ChartSpec:
    """Build a chart: make_chart('vinogradov', d, p) or make_chart('m5', d)."""
    if kind == "m5":
        if p not in (None, 6):
            raise ChartError("m5 chart has fixed symplectic degree p=6")
        return ChartSpec("m5", d, 6)
    if kind == "vinogradov":
        if p is None:
            raise ChartError("vinogradov chart needs a symplectic degree p")
        return ChartSpec("vinogradov", d, p)
    raise ChartError(f"unknown chart kind {kind!r}")
