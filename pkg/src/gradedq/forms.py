"""Independent exterior-calculus oracle on polynomial forms over R^d.

Differential forms are stored on strictly increasing index tuples only;
antisymmetry is resolved at construction with inversion-count signs,
the same normalization the graded engine uses, so cross-checks are
coefficient-exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly


class FormError(ValueError):
    pass


def sort_indices(indices):
    """Sort an index tuple, returning (sign, sorted tuple); sign 0 on repeats."""
    idx = list(indices)
    sign = 1
    # insertion sort with transposition counting; fine at rank <= 8
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return 0, None
    return sign, tuple(idx)


class DiffForm:
    """Rank-r form with Poly coefficients on sorted index tuples (1-based)."""

    __slots__ = ("d", "rank", "terms")

    def __init__(self, d: int, rank: int, terms=None):
        if rank < 0:
            raise FormError("rank must be non-negative")
        self.d = d
        self.rank = rank
        self.terms: dict[tuple, Poly] = {}
        if terms:
            for idx, poly in dict(terms).items():
                self.add_term(idx, poly)

    @classmethod
    def zero(cls, d: int, rank: int) -> "DiffForm":
        return cls(d, rank)

    @classmethod
    def from_poly(cls, d: int, poly: Poly) -> "DiffForm":
        f = cls(d, 0)
        if poly:
            f.terms[()] = poly
        return f

    @classmethod
    def basis(cls, d: int, indices, coeff=None) -> "DiffForm":
        """coeff * dx^{i1} ^ ... ^ dx^{ir} with arbitrary index order."""
        f = cls(d, len(indices))
        if coeff is None:
            coeff = Poly.const(d, 1)
        elif not isinstance(coeff, Poly):
            coeff = Poly.const(d, coeff)
        f.add_term(indices, coeff)
        return f

    def add_term(self, indices, poly: Poly):
        """Accumulate one (possibly unsorted) component.  Mutates self; used
        only during construction."""
        if len(indices) != self.rank:
            raise FormError(f"index tuple {tuple(indices)} has length "
                            f"{len(indices)}, expected rank {self.rank}")
        if any(not 1 <= i <= self.d for i in indices):
            raise FormError(f"index out of range 1..{self.d} in {tuple(indices)}")
        sign, idx = sort_indices(indices)
        if sign == 0 or poly.is_zero():
            return
        add = poly if sign > 0 else -poly
        cur = self.terms.get(idx)
        s = add if cur is None else cur + add
        if s:
            self.terms[idx] = s
        else:
            self.terms.pop(idx, None)

    # arithmetic ------------------------------------------------------
    def _check(self, other: "DiffForm", same_rank=True):
        if self.d != other.d:
            raise FormError(f"dimension mismatch: {self.d} vs {other.d}")
        if same_rank and self.rank != other.rank:
            raise FormError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "DiffForm") -> "DiffForm":
        self._check(other)
        out = DiffForm(self.d, self.rank)
        out.terms = dict(self.terms)
        for idx, poly in other.terms.items():
            cur = out.terms.get(idx)
            s = poly if cur is None else cur + poly
            if s:
                out.terms[idx] = s
            else:
                out.terms.pop(idx, None)
        return out

    def __neg__(self) -> "DiffForm":
        out = DiffForm(self.d, self.rank)
        out.terms = {i: -p for i, p in self.terms.items()}
        return out

    def __sub__(self, other: "DiffForm") -> "DiffForm":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            out = DiffForm(self.d, self.rank)
            for i, p in self.terms.items():
                q = p * other
                if q:
                    out.terms[i] = q
            return out
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, DiffForm) and self.d == other.d
                and self.rank == other.rank and self.terms == other.terms)

    def __hash__(self):
        return hash((self.d, self.rank, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for idx in sorted(self.terms):
            poly = self.terms[idx]
            base = "dx" + "".join(str(i) for i in idx) if idx else ""
            ps = str(poly)
            if not base:
                parts.append(ps)
            elif ps == "1":
                parts.append(base)
            elif ps == "-1":
                parts.append(f"-{base}")
            elif ("+" in ps) or (" - " in ps):
                parts.append(f"({ps})*{base}")
            else:
                parts.append(f"{ps}*{base}")
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"DiffForm({self})"


# ---------------------------------------------------------------------
# exterior calculus
# ---------------------------------------------------------------------

def ext_d(omega: DiffForm) -> DiffForm:
    """Exterior derivative; d of a rank-r form has rank r+1 and d(d(.)) = 0."""
    out = DiffForm(omega.d, omega.rank + 1)
    for idx, poly in omega.terms.items():
        for mu in range(1, omega.d + 1):
            dp = poly.partial(mu)
            if dp:
                out.add_term((mu,) + idx, dp)
    return out


def wedge(omega: DiffForm, tau: DiffForm) -> DiffForm:
    omega._check(tau, same_rank=False)
    out = DiffForm(omega.d, omega.rank + tau.rank)
    for i1, p1 in omega.terms.items():
        for i2, p2 in tau.terms.items():
            out.add_term(i1 + i2, p1 * p2)
    return out


def interior(v, omega: DiffForm) -> DiffForm:
    """Interior product with a vector field (tuple of d Polys)."""
    if omega.rank == 0:
        return DiffForm(omega.d, 0)
    out = DiffForm(omega.d, omega.rank - 1)
    for idx, poly in omega.terms.items():
        for pos, i in enumerate(idx):
            comp = v[i - 1]
            if comp.is_zero():
                continue
            coeff = poly * comp
            if pos % 2:
                coeff = -coeff
            out.add_term(idx[:pos] + idx[pos + 1:], coeff)
    return out


def lie_deriv(v, omega: DiffForm) -> DiffForm:
    """Lie derivative along a vector field via the Cartan magic formula."""
    if omega.rank == 0:  # the d(iota) term is vacuous on functions
        return interior(v, ext_d(omega))
    return ext_d(interior(v, omega)) + interior(v, ext_d(omega))


def vec_lie_bracket(v, w, d: int):
    """[v, w]^mu = v^nu d_nu w^mu - w^nu d_nu v^mu."""
    out = []
    for mu in range(1, d + 1):
        acc = Poly.zero(d)
        for nu in range(1, d + 1):
            acc = acc + v[nu - 1] * w[mu - 1].partial(nu) \
                      - w[nu - 1] * v[mu - 1].partial(nu)
        out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------
# sections of generalised tangent bundles and classical Dorfman formulas
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class Section:
    """(v, lambda[, sigma]): vector field plus form components."""

    v: tuple            # d Polys
    lam: DiffForm       # rank p-1 (vinogradov), rank 2 (m5)
    sigma: DiffForm | None = None   # rank 5, m5 only

    @property
    def d(self) -> int:
        return self.lam.d

    @classmethod
    def zero(cls, d: int, lam_rank: int, with_sigma: bool = False) -> "Section":
        sigma = DiffForm.zero(d, 5) if with_sigma else None
        return cls(tuple(Poly.zero(d) for _ in range(d)),
                   DiffForm.zero(d, lam_rank), sigma)

    def __add__(self, other: "Section") -> "Section":
        sigma = None
        if (self.sigma is None) != (other.sigma is None):
            raise FormError("section shape mismatch")
        if self.sigma is not None:
            sigma = self.sigma + other.sigma
        return Section(tuple(a + b for a, b in zip(self.v, other.v)),
                       self.lam + other.lam, sigma)

    def __neg__(self) -> "Section":
        return Section(tuple(-a for a in self.v), -self.lam,
                       None if self.sigma is None else -self.sigma)

    def __sub__(self, other: "Section") -> "Section":
        return self + (-other)

    def scale(self, f) -> "Section":
        return Section(tuple(a * f for a in self.v), self.lam * f,
                       None if self.sigma is None else self.sigma * f)

    def __eq__(self, other):
        return (isinstance(other, Section) and self.v == other.v
                and self.lam == other.lam and self.sigma == other.sigma)

    def __str__(self):
        vs = "(" + ", ".join(str(c) for c in self.v) + ")"
        out = f"v={vs}, lambda={self.lam}"
        if self.sigma is not None:
            out += f", sigma={self.sigma}"
        return out


def classical_dorfman(kind: str, A: Section, B: Section) -> Section:
    """Textbook generalised Lie derivative, componentwise.

    kind 'vinogradov': (Lie_v v', Lie_v lam' - i_{v'} d lam).
    kind 'm5': additionally the 5-form slot
               Lie_v sigma' - i_{v'} d sigma - lam' ^ d lam.
    """
    d = A.d
    if A.lam.rank != B.lam.rank:
        raise FormError("section rank mismatch")
    v = vec_lie_bracket(A.v, B.v, d)
    lam = lie_deriv(A.v, B.lam) - interior(B.v, ext_d(A.lam))
    if kind == "m5":
        if A.sigma is None or B.sigma is None:
            raise FormError("m5 sections need a sigma component")
        sigma = (lie_deriv(A.v, B.sigma) - interior(B.v, ext_d(A.sigma))
                 - wedge(B.lam, ext_d(A.lam)))
        return Section(v, lam, sigma)
    if A.sigma is not None or B.sigma is not None:
        raise FormError(f"sections with sigma need kind 'm5', got {kind!r}")
    return Section(v, lam)


# ---------------------------------------------------------------------
# Poincare lemma via the radial homotopy operator
# ---------------------------------------------------------------------

def homotopy(omega: DiffForm) -> DiffForm:
    """Radial homotopy operator K centred at the origin.

    On a monomial component c x^alpha dx^{i1..ir} of x-degree k:
        K = sum_j (-1)^{j-1} c x^{i_j} x^alpha / (k + r) dx^{I minus i_j}.
    Satisfies dK + Kd = id on forms of rank >= 1.
    """
    if omega.rank == 0:
        return DiffForm(omega.d, 0)
    out = DiffForm(omega.d, omega.rank - 1)
    r = omega.rank
    for idx, poly in omega.terms.items():
        for exp, c in poly.terms.items():
            k = sum(exp)
            scale = Fraction(c, k + r)
            mono = Poly(omega.d, {exp: scale})
            for pos, i in enumerate(idx):
                coeff = mono * Poly.var(omega.d, i)
                if pos % 2:
                    coeff = -coeff
                out.add_term(idx[:pos] + idx[pos + 1:], coeff)
    return out


def poincare_primitive(omega: DiffForm) -> DiffForm:
    """A primitive kappa with d(kappa) = omega, for closed omega of rank >= 1."""
    if omega.rank < 1:
        raise FormError("primitive requires rank >= 1")
    if not ext_d(omega).is_zero():
        raise FormError("form is not closed; no primitive exists")
    return homotopy(omega)
