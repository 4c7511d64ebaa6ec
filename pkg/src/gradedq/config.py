"""Configuration ingestion for the CLI.

The config is a single JSON document.  Forms are arrays of
{"indices": [ascending ints], "coeff": "polynomial expression"};
polynomial expressions use the grammar of poly.parse_poly (rationals,
x1..xd, + - * ^, parentheses); matrices are row-major arrays of
rational strings.  Every diagnostic names the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .chart import ChartError, ChartSpec, make_chart
from .forms import DiffForm, Section
from .npq import Hamiltonian, theta_m5, theta_vinogradov
from .poly import Poly, PolyError, parse_poly


class ConfigError(ValueError):
    """Invalid configuration; message carries the field location."""

    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


@dataclass
class Config:
    chart: ChartSpec
    theta: Hamiltonian
    sections: dict[str, Section] = field(default_factory=dict)
    matrices: dict[str, tuple] = field(default_factory=dict)
    trials: int = 100
    seed: int | None = None
    max_coeff_degree: int = 2
    raw: dict = field(default_factory=dict)


def _expect(obj, key, where, kind=None, default=None, required=True):
    if key not in obj:
        if not required:
            return default
        raise ConfigError(f"{where}.{key}", "missing required field")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        names = kind.__name__ if not isinstance(kind, tuple) else \
            "/".join(k.__name__ for k in kind)
        raise ConfigError(f"{where}.{key}", f"expected {names}, "
                          f"got {type(val).__name__}")
    return val


def _parse_form(entries, d: int, rank: int, where: str) -> DiffForm:
    if not isinstance(entries, list):
        raise ConfigError(where, f"expected a list of form terms, "
                          f"got {type(entries).__name__}")
    form = DiffForm(d, rank)
    for k, entry in enumerate(entries):
        loc = f"{where}[{k}]"
        if not isinstance(entry, dict):
            raise ConfigError(loc, "form terms are objects with "
                              "'indices' and 'coeff'")
        indices = _expect(entry, "indices", loc, list)
        if len(indices) != rank:
            raise ConfigError(f"{loc}.indices",
                              f"expected {rank} indices, got {len(indices)}")
        if any(not isinstance(i, int) for i in indices):
            raise ConfigError(f"{loc}.indices", "indices must be integers")
        coeff = _expect(entry, "coeff", loc, (str, int))
        try:
            poly = parse_poly(str(coeff), d)
        except PolyError as exc:
            raise ConfigError(f"{loc}.coeff", str(exc)) from None
        try:
            form.add_term(tuple(indices), poly)
        except ValueError as exc:
            raise ConfigError(f"{loc}.indices", str(exc)) from None
    return form


def _parse_section(obj, chart: ChartSpec, where: str) -> Section:
    from .algebroid import lambda_rank
    if not isinstance(obj, dict):
        raise ConfigError(where, "sections are objects with 'v', 'lambda', 'sigma'")
    d = chart.d
    v_raw = obj.get("v", [])
    if not isinstance(v_raw, list) or (v_raw and len(v_raw) != d):
        raise ConfigError(f"{where}.v", f"expected {d} component expressions")
    v = []
    for mu, expr in enumerate(v_raw or ["0"] * d):
        try:
            v.append(parse_poly(str(expr), d) if str(expr) != "0" else Poly.zero(d))
        except PolyError as exc:
            raise ConfigError(f"{where}.v[{mu}]", str(exc)) from None
    if not v:
        v = [Poly.zero(d) for _ in range(d)]
    lam = _parse_form(obj.get("lambda", []), d, lambda_rank(chart), f"{where}.lambda")
    sigma = None
    if chart.kind == "m5":
        sigma = _parse_form(obj.get("sigma", []), d, 5, f"{where}.sigma")
    elif "sigma" in obj:
        raise ConfigError(f"{where}.sigma", "sigma only exists on the m5 chart")
    return Section(tuple(v), lam, sigma)


def _parse_matrix(rows, where: str) -> tuple:
    if not isinstance(rows, list) or not rows:
        raise ConfigError(where, "expected a non-empty row-major array")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ConfigError(f"{where}[{i}]", "expected a row array")
        vals = []
        for j, cell in enumerate(row):
            try:
                vals.append(Fraction(str(cell)))
            except (ValueError, ZeroDivisionError) as exc:
                raise ConfigError(f"{where}[{i}][{j}]", str(exc)) from None
        out.append(tuple(vals))
    if any(len(r) != len(out[0]) for r in out):
        raise ConfigError(where, "rows have unequal lengths")
    return tuple(out)


def parse_config(text: str) -> Config:
    """Parse and validate a config document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"line {exc.lineno}", f"JSON syntax error: {exc.msg}") \
            from None
    if not isinstance(doc, dict):
        raise ConfigError("<root>", "config must be a JSON object")

    chart_obj = _expect(doc, "chart", "<root>", dict)
    kind = _expect(chart_obj, "kind", "chart", str)
    d = _expect(chart_obj, "d", "chart", int)
    p = _expect(chart_obj, "p", "chart", int, required=(kind == "vinogradov"))
    try:
        chart = make_chart(kind, d, p)
    except ChartError as exc:
        raise ConfigError("chart", str(exc)) from None

    theta_obj = _expect(doc, "theta", "<root>", dict, required=False,
                        default={"type": kind})
    ttype = _expect(theta_obj, "type", "theta", str, required=False, default=kind)
    try:
        if ttype == "vinogradov":
            beta = _parse_form(theta_obj.get("beta", []), d, chart.p + 1,
                               "theta.beta")
            theta = theta_vinogradov(chart, beta)
        elif ttype == "m5":
            F4 = _parse_form(theta_obj.get("F4", []), d, 4, "theta.F4")
            F7 = _parse_form(theta_obj.get("F7", []), d, 7, "theta.F7")
            theta = theta_m5(chart, F4, F7)
        else:
            raise ConfigError("theta.type",
                              f"expected 'vinogradov' or 'm5', got {ttype!r}")
    except (ValueError,) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError("theta", str(exc)) from None

    sections = {}
    for name, obj in (_expect(doc, "sections", "<root>", dict,
                              required=False, default={}) or {}).items():
        sections[name] = _parse_section(obj, chart, f"sections.{name}")

    matrices = {}
    for name, rows in (_expect(doc, "matrices", "<root>", dict,
                               required=False, default={}) or {}).items():
        matrices[name] = _parse_matrix(rows, f"matrices.{name}")

    harness = _expect(doc, "harness", "<root>", dict, required=False, default={}) or {}
    trials = _expect(harness, "trials", "harness", int, required=False, default=100)
    seed = _expect(harness, "seed", "harness", int, required=False, default=None)
    max_deg = _expect(harness, "max_coeff_degree", "harness", int,
                      required=False, default=2)

    return Config(chart=chart, theta=theta, sections=sections, matrices=matrices,
                  trials=trials, seed=seed, max_coeff_degree=max_deg, raw=doc)


def render_config(config: Config) -> str:
    """Canonical text form; parse(render(parse(text))) == parse(text)."""
    return json.dumps(config.raw, sort_keys=True, indent=2) + "\n"
