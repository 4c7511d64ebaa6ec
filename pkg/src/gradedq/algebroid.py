"""Generalised-tangent-bundle sections, derived Dorfman brackets, and
axiom verification suites.

Sections are degree-(p-1) functions.  The derived bracket is the
double Poisson contraction ((Theta, A), B) times a chart-level sign:
+1 for even p, -1 for odd p.  The sign, together with the 5-form slot
embedding constant, is the convention knob that makes the untwisted
derived bracket reproduce the classical Dorfman/Vinogradov formulas
verbatim; both are pinned by the oracle cross-check tests.
"""

from __future__ import annotations

import warnings

from .chart import ChartError, ChartSpec
from .element import GradedElement, monomial_basis
from .forms import (DiffForm, FormError, Section, classical_dorfman, ext_d,
                    vec_lie_bracket)
from .npq import Hamiltonian, embed_form, extract_form, theta_vinogradov
from .poly import Poly
from .randomgen import as_rng, random_poly, random_section
from .reports import CheckReport, SuiteReport, witnesses_of

# 5-form slot embedding constant for m5 sections; -1 reproduces the
# -lambda' ^ d lambda term of the exceptional Dorfman bracket given the
# (zeta, zeta) = +1 pairing.
SIGMA_EMBED = -1


class SectionError(ValueError):
    pass


def derived_sign(chart: ChartSpec) -> int:
    return 1 if chart.p % 2 == 0 else -1


def lambda_rank(chart: ChartSpec) -> int:
    return 2 if chart.kind == "m5" else chart.p - 1


# ---------------------------------------------------------------------
# encode / decode
# ---------------------------------------------------------------------

def encode_section(chart: ChartSpec, s: Section) -> GradedElement:
    """Degree-(p-1) element: v -> chi-terms, lambda -> psi-terms
    (zeta*psi*psi for m5), sigma -> psi^5-terms."""
    if s.d != chart.d:
        raise SectionError(f"section on R^{s.d}, chart on R^{chart.d}")
    if s.lam.rank != lambda_rank(chart):
        raise SectionError(f"lambda must have rank {lambda_rank(chart)}, "
                           f"got {s.lam.rank}")
    out = GradedElement.zero(chart)
    for mu in range(1, chart.d + 1):
        comp = s.v[mu - 1]
        if comp:
            out = out + GradedElement.monomial(chart, ((chart.sid("chi", mu), 1),), comp)
    lam_embedded = embed_form(chart, s.lam)
    if chart.kind == "m5":
        if s.sigma is None:
            raise SectionError("m5 sections need a sigma component")
        if s.sigma.rank != 5:
            raise SectionError(f"sigma must have rank 5, got {s.sigma.rank}")
        zeta = GradedElement.generator(chart, "zeta")
        out = out + lam_embedded * zeta
        out = out + embed_form(chart, s.sigma).scale(SIGMA_EMBED)
    else:
        if s.sigma is not None:
            raise SectionError("sigma component only exists on the m5 chart")
        out = out + lam_embedded
    return out


def decode_section(chart: ChartSpec, A: GradedElement) -> Section:
    """Exact inverse of encode_section; rejects stray monomials."""
    p = chart.p
    deg = A.euler_degree()
    if not A.is_zero() and deg != p - 1:
        raise SectionError(f"sections are homogeneous of degree p-1={p - 1}, "
                           f"got degree {deg}")
    d = chart.d
    v = [Poly.zero(d) for _ in range(d)]
    lam = DiffForm(d, lambda_rank(chart))
    sigma = DiffForm(d, 5) if chart.kind == "m5" else None
    for mono, poly in A.terms.items():
        families = [(chart.generator(sid), e) for sid, e in mono]
        fams = [g.family for g, _ in families]
        if fams == ["chi"] and families[0][1] == 1:
            v[families[0][0].index - 1] = poly
        elif all(f == "psi" for f in fams) and chart.kind != "m5" \
                and len(fams) == p - 1:
            lam.add_term(tuple(g.index for g, _ in families), poly)
        elif chart.kind == "m5" and fams == ["psi", "psi", "zeta"]:
            lam.add_term(tuple(g.index for g, _ in families[:2]), poly)
        elif chart.kind == "m5" and fams == ["psi"] * 5:
            sigma.add_term(tuple(g.index for g, _ in families),
                           poly * SIGMA_EMBED)
        else:
            raise SectionError(
                f"monomial {A.render_mono(mono)} is not in the section basis")
    return Section(tuple(v), lam, sigma)


# ---------------------------------------------------------------------
# derived operations
# ---------------------------------------------------------------------

def _check_section_degree(chart: ChartSpec, A: GradedElement, name: str):
    if A.chart != chart:
        raise ChartError(f"chart mismatch on {name}: {A.chart} vs {chart}")
    if not A.is_zero() and A.euler_degree() != chart.p - 1:
        raise SectionError(f"{name} must be homogeneous of degree p-1="
                           f"{chart.p - 1}, got {A.euler_degree()}")


def dorfman(theta: Hamiltonian, A: GradedElement, B: GradedElement) -> GradedElement:
    """Derived Dorfman bracket L_A B on degree-(p-1) elements."""
    from .symplectic import poisson
    chart = theta.chart
    _check_section_degree(chart, A, "A")
    _check_section_degree(chart, B, "B")
    return poisson(poisson(theta.element, A), B).scale(derived_sign(chart))


def anchor(theta: Hamiltonian, A: GradedElement, f: Poly) -> Poly:
    """rho(A).f = v^mu d_mu f; twists never contribute at degree 0."""
    from .symplectic import poisson
    chart = theta.chart
    _check_section_degree(chart, A, "A")
    if f.d != chart.d:
        raise SectionError(f"function on R^{f.d}, chart on R^{chart.d}")
    fe = GradedElement.from_poly(chart, f)
    out = poisson(poisson(theta.element, A), fe).scale(derived_sign(chart))
    if out.is_zero():
        return Poly.zero(chart.d)
    if list(out.terms) != [()]:
        raise SectionError("anchor output is not a degree-0 function")
    return out.terms[()]


def pairing(A: GradedElement, B: GradedElement) -> GradedElement:
    """(A, B) via the Poisson bracket; the O(d,d) metric eta for p=2."""
    from .symplectic import poisson
    _check_section_degree(A.chart, A, "A")
    _check_section_degree(A.chart, B, "B")
    return poisson(A, B)


def rho_star(chart: ChartSpec, lam: DiffForm) -> GradedElement:
    """The psi-embedding of a 1-form; eta(rho*(lam), A) = lam(rho(A))."""
    if chart.p != 2 or chart.kind != "vinogradov":
        raise ChartError("rho_star is defined on p=2 vinogradov charts")
    if lam.rank != 1:
        raise FormError(f"rho_star takes a 1-form, got rank {lam.rank}")
    return embed_form(chart, lam)


# ---------------------------------------------------------------------
# module ranks
# ---------------------------------------------------------------------

def module_basis(chart: ChartSpec, n: int) -> list[tuple]:
    """x-free generator monomials of total degree n (0 <= n <= p)."""
    if n < 0 or n > chart.p:
        raise ChartError(f"module interpretation only exists for 0 <= n <= p="
                         f"{chart.p}, got {n}")
    if n == chart.p:
        warnings.warn("degree n = p sits at the top of the Darboux degree "
                      "bound; the C(M)-module interpretation below p does "
                      "not apply", stacklevel=2)
    return monomial_basis(chart, n)


def module_rank(chart: ChartSpec, n: int) -> int:
    return len(module_basis(chart, n))


# ---------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------

def _lie_on_poly(v, f: Poly) -> Poly:
    out = Poly.zero(f.d)
    for mu in range(1, f.d + 1):
        out = out + v[mu - 1] * f.partial(mu)
    return out


def _scalar_of(chart: ChartSpec, e: GradedElement) -> Poly:
    if e.is_zero():
        return Poly.zero(chart.d)
    if list(e.terms) != [()]:
        raise SectionError("expected a degree-0 element")
    return e.terms[()]


def verify_leibniz(theta: Hamiltonian, trials: int = 100, seed: int = 0,
                   max_degree: int = 2) -> SuiteReport:
    """L_A(L_B C) = L_{L_A B} C + L_B(L_A C) on seeded random triples."""
    chart = theta.chart
    rng = as_rng(seed)
    suite = SuiteReport("leibniz", seed=seed, trials=trials)
    failures = []
    for t in range(trials):
        A = encode_section(chart, random_section(rng, chart, max_degree))
        B = encode_section(chart, random_section(rng, chart, max_degree))
        C = encode_section(chart, random_section(rng, chart, max_degree))
        lhs = dorfman(theta, A, dorfman(theta, B, C))
        rhs = dorfman(theta, dorfman(theta, A, B), C) \
            + dorfman(theta, B, dorfman(theta, A, C))
        diff = lhs - rhs
        if not diff.is_zero():
            failures.append((t, diff))
    report = CheckReport("leibniz identity", passed=not failures,
                         trials=trials, seed=seed)
    if failures:
        t, diff = failures[0]
        report.witnesses = [f"trial {t}"] + witnesses_of(diff)
    suite.checks.append(report)
    return suite


def verify_courant(theta: Hamiltonian, trials: int = 100, seed: int = 0,
                   max_degree: int = 2) -> SuiteReport:
    """All five Courant axioms plus rho o rho* = 0, on a p=2 chart."""
    from fractions import Fraction
    chart = theta.chart
    if chart.p != 2 or chart.kind != "vinogradov":
        raise ChartError("the Courant suite runs on p=2 vinogradov charts")
    rng = as_rng(seed)
    suite = SuiteReport("courant", seed=seed, trials=trials)
    fails: dict[str, list] = {}

    def record(axiom: str, trial: int, diff):
        fails.setdefault(axiom, []).append((trial, diff))

    half = Fraction(1, 2)

    for t in range(trials):
        sA = random_section(rng, chart, max_degree)
        sB = random_section(rng, chart, max_degree)
        sC = random_section(rng, chart, max_degree)
        A = encode_section(chart, sA)
        B = encode_section(chart, sB)
        C = encode_section(chart, sC)
        f = random_poly(rng, chart.d, max_degree)

        # 1. anchored Leibniz: L_A(f B) = f L_A B + (rho(A).f) B
        lhs = dorfman(theta, A, B.scale_poly(f))
        rhs = dorfman(theta, A, B).scale_poly(f) \
            + B.scale_poly(anchor(theta, A, f))
        if not (lhs - rhs).is_zero():
            record("axiom 1 (anchored Leibniz)", t, lhs - rhs)

        # 2. anchor morphism: rho(L_A B) = [rho(A), rho(B)]
        vL = decode_section(chart, dorfman(theta, A, B)).v
        vR = vec_lie_bracket(sA.v, sB.v, chart.d)
        if any(a != b for a, b in zip(vL, vR)):
            record("axiom 2 (anchor morphism)", t,
                   encode_section(chart, Section(
                       tuple(a - b for a, b in zip(vL, vR)),
                       DiffForm.zero(chart.d, 1))))

        # 3. metric invariance: rho(A).eta(B,C) = eta(L_A B, C) + eta(B, L_A C)
        lhs0 = _lie_on_poly(sA.v, _scalar_of(chart, pairing(B, C)))
        rhs0 = _scalar_of(chart, pairing(dorfman(theta, A, B), C)) \
            + _scalar_of(chart, pairing(B, dorfman(theta, A, C)))
        if lhs0 != rhs0:
            record("axiom 3 (metric invariance)", t,
                   GradedElement.from_poly(chart, lhs0 - rhs0))

        # 4. Leibniz identity
        lhs = dorfman(theta, A, dorfman(theta, B, C))
        rhs = dorfman(theta, dorfman(theta, A, B), C) \
            + dorfman(theta, B, dorfman(theta, A, C))
        if not (lhs - rhs).is_zero():
            record("axiom 4 (Leibniz identity)", t, lhs - rhs)

        # 5. L_A A = 1/2 rho*(d eta(A, A))
        eta_AA = _scalar_of(chart, pairing(A, A))
        rhs = rho_star(chart, ext_d(DiffForm.from_poly(chart.d, eta_AA))).scale(half)
        lhs = dorfman(theta, A, A)
        if not (lhs - rhs).is_zero():
            record("axiom 5 (rho* of d eta(A,A))", t, lhs - rhs)

        # chain complex: rho o rho* = 0
        from .forms import DiffForm as _DF
        lam1 = DiffForm(chart.d, 1)
        lam1.add_term((rng.randint(1, chart.d),), random_poly(rng, chart.d, max_degree))
        val = anchor(theta, rho_star(chart, lam1), f)
        if not val.is_zero():
            record("chain complex (rho o rho* = 0)", t,
                   GradedElement.from_poly(chart, val))

    for axiom in ["axiom 1 (anchored Leibniz)", "axiom 2 (anchor morphism)",
                  "axiom 3 (metric invariance)", "axiom 4 (Leibniz identity)",
                  "axiom 5 (rho* of d eta(A,A))", "chain complex (rho o rho* = 0)"]:
        report = CheckReport(axiom, passed=axiom not in fails,
                             trials=trials, seed=seed)
        if axiom in fails:
            t, diff = fails[axiom][0]
            report.witnesses = [f"trial {t}"] + witnesses_of(diff)
        suite.checks.append(report)
    return suite
