"""Command-line interface.

Every command reads one JSON config (chart, theta, sections, matrices,
harness) and writes a deterministic report, human text by default or a
machine-readable document with --json.  Exit codes: 0 all checks pass,
1 a verified violation, 2 input error.  The seed is resolved as
--seed, then the config's harness.seed, then the GB_SEED environment
variable, then 0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from fractions import Fraction

from . import genmetric as gm
from .algebroid import (SectionError, decode_section, dorfman, encode_section,
                        module_basis, module_rank, verify_courant,
                        verify_leibniz)
from .chart import ChartError
from .config import Config, ConfigError, parse_config
from .element import GradedElement
from .forms import DiffForm, FormError, ext_d, poincare_primitive, wedge
from .npq import HamiltonianError, master_equation, q_square_check
from .poly import PolyError
from .reports import CheckReport, SuiteReport, witnesses_of

PASS, FAIL, INPUT_ERROR = 0, 1, 2

_INPUT_ERRORS = (ConfigError, ChartError, FormError, SectionError,
                 HamiltonianError, PolyError, gm.MatrixError, KeyError)


def _resolve_seed(args, config: Config) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    if config.seed is not None:
        return config.seed
    env = os.environ.get("GB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ConfigError("GB_SEED", f"not an integer: {env!r}") from None
    return 0


def _resolve_max_degree(args, config: Config) -> int:
    if getattr(args, "max_coeff_degree", None) is not None:
        return args.max_coeff_degree
    return config.max_coeff_degree


def _suite_result(command: str, suite: SuiteReport) -> tuple[dict, str, int]:
    payload = {"command": command, **suite.to_dict()}
    return payload, suite.render(), PASS if suite.passed else FAIL


def _render_form(form: DiffForm) -> str:
    return str(form)


def _form_terms(form: DiffForm) -> list[dict]:
    return [{"indices": list(idx), "coeff": str(form.terms[idx])}
            for idx in sorted(form.terms)]


def _render_matrix(m) -> list[str]:
    return ["  [" + ", ".join(str(Fraction(c)) for c in row) + "]" for row in m]


def _matrix_json(m) -> list[list[str]]:
    return [[str(Fraction(c)) for c in row] for row in m]


def _named_matrix(config: Config, name: str):
    if name not in config.matrices:
        raise ConfigError(f"matrices.{name}", "missing required matrix")
    return config.matrices[name]


def _named_section(config: Config, name: str) -> GradedElement:
    if name not in config.sections:
        known = ", ".join(sorted(config.sections)) or "none defined"
        raise ConfigError(f"sections.{name}",
                          f"unknown section (available: {known})")
    return encode_section(config.chart, config.sections[name])


# ---------------------------------------------------------------------
# command handlers: each returns (json payload, human text, exit code)
# ---------------------------------------------------------------------

def cmd_check_master(config: Config, args) -> tuple[dict, str, int]:
    bracket, ok = master_equation(config.theta)
    report = CheckReport("master equation", passed=ok,
                         witnesses=[] if ok else witnesses_of(bracket))
    payload = {"command": "check-master", "status": report.status,
               "checks": [report.to_dict()]}
    return payload, report.render(), PASS if ok else FAIL


def cmd_q_square(config: Config, args) -> tuple[dict, str, int]:
    suite = q_square_check(config.theta, samples=args.samples,
                           seed=_resolve_seed(args, config),
                           max_degree=_resolve_max_degree(args, config))
    return _suite_result("q-square", suite)


def cmd_bracket(config: Config, args) -> tuple[dict, str, int]:
    chart = config.chart
    A = _named_section(config, args.A)
    B = _named_section(config, args.B)
    result = decode_section(chart, dorfman(config.theta, A, B))
    lines = [f"L_{args.A} {args.B} = {result}"]
    payload = {
        "command": "bracket", "A": args.A, "B": args.B,
        "result": {
            "v": [str(c) for c in result.v],
            "lambda": _form_terms(result.lam),
        },
        "rendered": str(result),
    }
    if result.sigma is not None:
        payload["result"]["sigma"] = _form_terms(result.sigma)
    return payload, "\n".join(lines), PASS


def cmd_axioms(config: Config, args) -> tuple[dict, str, int]:
    seed = _resolve_seed(args, config)
    trials = args.trials if args.trials is not None else config.trials
    max_degree = _resolve_max_degree(args, config)
    if args.suite == "courant":
        suite = verify_courant(config.theta, trials=trials, seed=seed,
                               max_degree=max_degree)
    else:
        suite = verify_leibniz(config.theta, trials=trials, seed=seed,
                               max_degree=max_degree)
    return _suite_result("axioms", suite)


def cmd_rank(config: Config, args) -> tuple[dict, str, int]:
    chart = config.chart
    ns = [args.n] if args.n is not None else list(range(chart.p + 1))
    lines, rows = [], []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for n in ns:
            basis = module_basis(chart, n)
            lines.append(f"n={n}: {len(basis)}")
            row = {"n": n, "rank": len(basis)}
            if args.n is not None:
                zero = GradedElement.zero(chart)
                names = [zero.render_mono(m) if m else "1" for m in basis]
                lines.extend(f"  {name}" for name in names)
                row["basis"] = names
            rows.append(row)
    payload = {"command": "rank", "chart": {"kind": chart.kind, "d": chart.d,
                                            "p": chart.p}, "ranks": rows}
    return payload, "\n".join(lines), PASS


def cmd_classify(config: Config, args) -> tuple[dict, str, int]:
    chart = config.chart
    theta = config.theta
    checks: list[CheckReport] = []
    primitives: dict[str, DiffForm] = {}
    if theta.twist[0] == "beta":
        beta = theta.twist[1]
        closed = ext_d(beta).is_zero()
        checks.append(CheckReport("twist closure (d beta = 0)", closed,
                                  [] if closed else [str(ext_d(beta))]))
        if closed and not beta.is_zero():
            primitives["beta"] = poincare_primitive(beta)
    else:
        _, F4, F7 = theta.twist
        dF4 = ext_d(F4)
        closed4 = dF4.is_zero()
        checks.append(CheckReport("twist closure (d F4 = 0)", closed4,
                                  [] if closed4 else [str(dF4)]))
        bianchi = ext_d(F7) + wedge(F4, F4) * Fraction(1, 2)
        ok7 = bianchi.is_zero()
        checks.append(CheckReport("Bianchi identity (d F7 + 1/2 F4^F4 = 0)",
                                  ok7, [] if ok7 else [str(bianchi)]))
        if closed4 and not F4.is_zero():
            primitives["F4"] = poincare_primitive(F4)
    passed = all(c.passed for c in checks)
    lines = [c.render() for c in checks]
    for name, prim in primitives.items():
        lines.append(f"primitive of {name} (exact class is trivial on R^{chart.d}): "
                     f"{prim}")
    lines.append(f"classify: {'PASS' if passed else 'FAIL'}")
    payload = {"command": "classify",
               "status": "PASS" if passed else "FAIL",
               "checks": [c.to_dict() for c in checks],
               "primitives": {k: _form_terms(v) for k, v in primitives.items()}}
    return payload, "\n".join(lines), PASS if passed else FAIL


def cmd_genmetric(config: Config, args) -> tuple[dict, str, int]:
    action = args.action
    payload: dict = {"command": "genmetric", "action": action}
    lines: list[str] = []
    if action == "build":
        bg = gm.Background(_named_matrix(config, "g"), _named_matrix(config, "b"))
        H = gm.build_gen_metric(bg)
        lines.append("H =")
        lines.extend(_render_matrix(H.H))
        payload["H"] = _matrix_json(H.H)
    elif action == "act":
        bg = gm.Background(_named_matrix(config, "g"), _named_matrix(config, "b"))
        H = gm.build_gen_metric(bg)
        O = _named_matrix(config, "O")
        Hp = gm.act(O, H)
        lines.append("H' = O^t H O =")
        lines.extend(_render_matrix(Hp.H))
        payload["H"] = _matrix_json(Hp.H)
        try:
            bgp = gm.extract(Hp)
        except gm.MatrixError:
            bgp = None
        if bgp is not None:
            lines.append("g' =")
            lines.extend(_render_matrix(bgp.g))
            lines.append("b' =")
            lines.extend(_render_matrix(bgp.b))
            payload["g"] = _matrix_json(bgp.g)
            payload["b"] = _matrix_json(bgp.b)
    else:  # extract
        H = gm.GenMetric(_named_matrix(config, "H"))
        bg = gm.extract(H)
        lines.append("g =")
        lines.extend(_render_matrix(bg.g))
        lines.append("b =")
        lines.extend(_render_matrix(bg.b))
        payload["g"] = _matrix_json(bg.g)
        payload["b"] = _matrix_json(bg.b)
    return payload, "\n".join(lines), PASS


# ---------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedq",
        description="Exact verification of graded-symplectic algebroid structures.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("config", help="path to the JSON config file")
    common.add_argument("--json", action="store_true",
                        help="emit a machine-readable JSON report")
    common.add_argument("--max-coeff-degree", type=int, default=None,
                        metavar="D", dest="max_coeff_degree",
                        help="cap on random polynomial coefficient degree")
    common.add_argument("--seed", type=int, default=None,
                        help="harness seed (fallback: config, then GB_SEED)")

    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("check-master", parents=[common],
                   help="verify (Theta, Theta) = 0")

    q2 = sub.add_parser("q-square", parents=[common],
                        help="probe Q^2 = 0 on generators and random elements")
    q2.add_argument("--samples", type=int, default=8)

    br = sub.add_parser("bracket", parents=[common],
                        help="derived Dorfman bracket of two named sections")
    br.add_argument("--A", required=True, metavar="NAME")
    br.add_argument("--B", required=True, metavar="NAME")

    ax = sub.add_parser("axioms", parents=[common],
                        help="run an axiom verification suite")
    ax.add_argument("--suite", required=True, choices=["courant", "leibniz"])
    ax.add_argument("--trials", type=int, default=None)

    rk = sub.add_parser("rank", parents=[common],
                        help="section-module ranks (and basis with --n)")
    rk.add_argument("--n", type=int, default=None)

    sub.add_parser("classify", parents=[common],
                   help="twist closure and Poincare primitive")

    gme = sub.add_parser("genmetric", help="generalised-metric toolkit")
    gme.add_argument("action", choices=["build", "act", "extract"])
    gme.add_argument("config", help="path to the JSON config file")
    gme.add_argument("--json", action="store_true",
                     help="emit a machine-readable JSON report")
    gme.add_argument("--max-coeff-degree", type=int, default=None,
                     metavar="D", dest="max_coeff_degree")
    gme.add_argument("--seed", type=int, default=None)

    return parser


_HANDLERS = {
    "check-master": cmd_check_master,
    "q-square": cmd_q_square,
    "bracket": cmd_bracket,
    "axioms": cmd_axioms,
    "rank": cmd_rank,
    "classify": cmd_classify,
    "genmetric": cmd_genmetric,
}


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage, matching the input-error code
        return INPUT_ERROR if exc.code else PASS
    try:
        with open(args.config, encoding="utf-8") as fh:
            config = parse_config(fh.read())
        payload, text, code = _HANDLERS[args.command](config, args)
    except _INPUT_ERRORS as exc:
        message = str(exc)
        if args.json:
            print(json.dumps({"command": args.command, "status": "ERROR",
                              "error": message}, sort_keys=True, indent=2))
        else:
            print(f"error: {message}", file=sys.stderr)
        return INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    payload["exit_code"] = code
    _emit(args, payload, text)
    return code


if __name__ == "__main__":
    sys.exit(main())
