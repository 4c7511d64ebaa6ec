"""Seeded random data for the verification harness.

All randomness is injected from the caller (a random.Random instance or
a seed); the library operations themselves are deterministic.  Defaults
follow the harness policy: polynomial coefficients of total x-degree at
most 2 with integer numerators in [-3, 3].
"""

from __future__ import annotations

import random

from .chart import ChartSpec
from .element import GradedElement, monomial_basis
from .forms import DiffForm, Section
from .poly import Poly

MAX_COEFF_DEGREE = 2
COEFF_RANGE = 3


def as_rng(seed_or_rng) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def random_poly(rng: random.Random, d: int, max_degree: int = MAX_COEFF_DEGREE,
                terms: int = 2, allow_zero: bool = False) -> Poly:
    acc = {}
    for _ in range(rng.randint(1, terms)):
        exp = [0] * d
        for _ in range(rng.randint(0, max_degree)):
            exp[rng.randrange(d)] += 1
        c = rng.randint(-COEFF_RANGE, COEFF_RANGE)
        key = tuple(exp)
        acc[key] = acc.get(key, 0) + c
    poly = Poly(d, {e: c for e, c in acc.items() if c})
    if poly.is_zero() and not allow_zero:
        mu = rng.randrange(d)
        exp = [0] * d
        exp[mu] = 1
        poly = Poly(d, {tuple(exp): 1})
    return poly


def random_form(rng: random.Random, d: int, rank: int,
                max_degree: int = MAX_COEFF_DEGREE, components: int = 2) -> DiffForm:
    out = DiffForm(d, rank)
    if rank > d:
        return out
    indices = list(range(1, d + 1))
    for _ in range(components):
        idx = tuple(sorted(rng.sample(indices, rank)))
        out.add_term(idx, random_poly(rng, d, max_degree))
    return out


def random_vector(rng: random.Random, d: int,
                  max_degree: int = MAX_COEFF_DEGREE) -> tuple:
    return tuple(random_poly(rng, d, max_degree, allow_zero=True) for _ in range(d))


def random_section(rng: random.Random, chart: ChartSpec,
                   max_degree: int = MAX_COEFF_DEGREE) -> Section:
    d = chart.d
    if chart.kind == "m5":
        return Section(random_vector(rng, d, max_degree),
                       random_form(rng, d, 2, max_degree),
                       random_form(rng, d, 5, max_degree))
    return Section(random_vector(rng, d, max_degree),
                   random_form(rng, d, chart.p - 1, max_degree))


def random_homogeneous(rng: random.Random, chart: ChartSpec, n: int,
                       max_degree: int = MAX_COEFF_DEGREE,
                       terms: int = 2) -> GradedElement:
    """Random homogeneous element of degree n (zero only if no monomials exist)."""
    basis = monomial_basis(chart, n)
    if not basis:
        return GradedElement.zero(chart)
    picks = rng.sample(basis, min(len(basis), rng.randint(1, terms)))
    out = GradedElement.zero(chart)
    for mono in picks:
        out = out + GradedElement.monomial(chart, mono, random_poly(rng, chart.d, max_degree))
    return out
