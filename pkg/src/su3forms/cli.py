"""Command-line entry point: `su3 <command>` batch runs with text reports.

Reports are deterministic (no timestamps) and carry a versioned header so
they can be compared byte-for-byte as golden files.  Exit codes: 0 for any
completed verdict (including obstructed=false and Inconclusive), 2 for input
errors, 3 for budget exhaustion.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .errors import ParseError, ResourceBudgetExceeded, Su3Error
from .exterior import format_form, parse_form
from .groebner import (
    Budget,
    DEFAULT_BUDGET_MIB,
    DEFAULT_BUDGET_SECONDS,
    format_poly,
    groebner_basis,
    parse_order,
    parse_poly,
)
from .hitchin import validate
from .liealg import (
    CATALOG_NAMES,
    CATALOG_PARAMS,
    MetricMatrix,
    catalog,
    format_algebra,
    jensen_metric,
    parse_algebra,
)
from .obstruction import DEFAULT_SEED, obstruction_scan, obstruction_test
from .scalars import MIN_DPS, format_scalar, parse_scalar
from .systems import nonexistence_pipeline, thm32_pipeline
from .torsion import classify

REPORT_HEADER = "su3forms report v1"

FLAG_ORDER = (
    "stable2",
    "stable3",
    "lambda_negative",
    "compatible",
    "normalized",
    "metric_positive",
)


# -- shared input plumbing ---------------------------------------------------


def _load_algebra(spec):
    """`catalog:name[,p=v,...]` or a path to an algebra file."""
    if spec.startswith("catalog:"):
        body = spec[len("catalog:") :]
        if not body:
            raise ParseError("empty catalog algebra name")
        parts = body.split(",")
        params = {}
        for chunk in parts[1:]:
            if "=" not in chunk:
                raise ParseError("bad algebra parameter %r (need p=value)" % chunk)
            key, value = chunk.split("=", 1)
            params[key.strip()] = parse_scalar(value.strip())
        return catalog(parts[0].strip(), params)
    with open(spec, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def _load_metric(spec):
    """`identity`, `jensen`, or `file:<path>` with 6 rows of 6 scalars."""
    if spec == "identity":
        return MetricMatrix.identity()
    if spec == "jensen":
        return jensen_metric()
    if spec.startswith("file:"):
        rows = []
        with open(spec[len("file:") :], "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                rows.append([parse_scalar(tok) for tok in line.split()])
        if len(rows) != 6 or any(len(r) != 6 for r in rows):
            raise ParseError("metric file needs 6 rows of 6 scalars")
        return MetricMatrix(rows)
    raise ParseError("bad --metric %r (identity, jensen, or file:<path>)" % spec)


def _load_ideal_file(path):
    """Polynomial system file: a `vars:` line, then one polynomial per line."""
    variables = None
    polys = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("vars:"):
                if variables is not None:
                    raise ParseError("duplicate vars: line")
                names = line[len("vars:") :].replace(",", " ").split()
                if not names:
                    raise ParseError("empty vars: line")
                variables = tuple(names)
                continue
            if variables is None:
                raise ParseError("polynomial before the vars: line")
            polys.append(parse_poly(line, variables))
    if variables is None:
        raise ParseError("missing vars: line in %s" % path)
    if not polys:
        raise ParseError("no polynomials in %s" % path)
    return variables, polys


def _check_precision(dps):
    if dps < MIN_DPS:
        raise ParseError("--precision must be at least %d digits" % MIN_DPS)
    return dps


def _budget(args):
    minutes = getattr(args, "budget_min", None)
    mib = getattr(args, "budget_mib", None)
    minutes = DEFAULT_BUDGET_SECONDS / 60.0 if minutes is None else minutes
    mib = DEFAULT_BUDGET_MIB if mib is None else mib
    if minutes <= 0 or mib <= 0:
        raise ParseError("budgets must be positive")
    return Budget(minutes * 60.0, mib).start()


def _emit(lines, out):
    text = "\n".join([REPORT_HEADER] + lines) + "\n"
    sys.stdout.write(text)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _rational_algebra(alg):
    return all(
        isinstance(c, (int, Fraction))
        for diff in alg.differentials
        for c in diff.coeffs.values()
    )


# -- commands ----------------------------------------------------------------


def _cmd_validate(args):
    dps = _check_precision(args.precision)
    omega = parse_form(args.omega, degree=2)
    psi = parse_form(args.psi, degree=3)
    s = validate(omega, psi, dps=dps)
    lines = [
        "command: validate",
        "precision: %d" % dps,
        "omega: %s" % format_form(omega),
        "psi_plus: %s" % format_form(psi),
    ]
    for name in FLAG_ORDER:
        lines.append("flag %s: %s" % (name, "true" if s.flags[name] else "false"))
    lines.append("valid: %s" % ("true" if s.is_valid else "false"))
    if s.flags["stable3"]:
        lines.append("lambda: %s" % format_scalar(s.lam))
    _emit(lines, args.out)
    return 0


def _cmd_classify(args):
    dps = _check_precision(args.precision)
    alg = _load_algebra(args.algebra)
    omega = parse_form(args.omega, degree=2)
    psi = parse_form(args.psi, degree=3)
    s = validate(omega, psi, dps=dps)
    lines = [
        "command: classify",
        "algebra: %s" % alg.name,
        "precision: %d" % dps,
        "omega: %s" % format_form(omega),
        "psi_plus: %s" % format_form(psi),
        "valid: %s" % ("true" if s.is_valid else "false"),
    ]
    if not s.is_valid:
        bad = [n for n in FLAG_ORDER if not s.flags[n]]
        lines.append("class: none (failed flags: %s)" % ", ".join(bad))
        _emit(lines, args.out)
        return 0
    td = classify(s, alg)
    lines.append("class: %s" % td.torsion_class)
    lines.append("quasi_kahler: %s" % ("true" if td.quasi_kahler else "false"))
    if td.w1 is not None:
        lines.append("w1: %s" % format_scalar(td.w1))
    if td.w2 is not None:
        lines.append("w2: %s" % format_form(td.w2))
    if td.w3 is not None:
        lines.append("w3: %s" % format_form(td.w3))
    if td.coupled_constant is not None:
        lines.append("coupled_constant: %s" % format_scalar(td.coupled_constant))
    if td.double_constant is not None:
        lines.append("double_constant: %s" % format_scalar(td.double_constant))
    _emit(lines, args.out)
    return 0


def _cmd_obstruct(args):
    alg = _load_algebra(args.algebra)
    lines = ["command: obstruct", "algebra: %s" % alg.name]
    if not _rational_algebra(alg):
        alg, _, _ = alg.rationalize()
        lines.append("note: algebra rationalized to rational structure constants")

    def body(report):
        return [
            ln for ln in report.render().splitlines() if not ln.startswith("algebra:")
        ]

    if args.alpha is not None:
        alpha = parse_form(args.alpha, degree=1)
        report = obstruction_test(alg, alpha, seed=args.seed)
        lines.extend(body(report))
        _emit(lines, args.out)
        return 0
    report = obstruction_scan(alg, seed=args.seed)
    lines.append("scan: default candidate covectors")
    if report is None:
        lines.append("obstructed: false")
        lines.append("note: no candidate covector obstructs this algebra")
    else:
        lines.extend(body(report))
    _emit(lines, args.out)
    return 0


def _cmd_groebner(args):
    order = parse_order(args.order)
    variables, polys = _load_ideal_file(args.system)
    budget = _budget(args)
    gb = groebner_basis(polys, order, budget)
    lines = [
        "command: groebner",
        "variables: %s" % " ".join(variables),
        "order: %s" % order.token(),
        "generators: %d" % len(polys),
        "basis size: %d" % len(gb),
    ]
    for i, g in enumerate(gb, 1):
        lines.append("g%d: %s" % (i, format_poly(g, order)))
    _emit(lines, args.out)
    return 0


def _emit_ideal_file(path, report):
    polys = report.nonzero_polys()
    if not polys:
        raise ParseError("no nonzero equations to emit")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("vars: %s\n" % " ".join(polys[0].variables))
        for name, p in report.equations:
            if p.is_zero():
                continue
            fh.write("# %s\n%s\n" % (name, format_poly(p)))


def _cmd_pipeline(args):
    budget = _budget(args)
    if args.target == "thm32":
        rep1, rep2 = thm32_pipeline(budget)
        lines = ["command: pipeline thm32", "== case 1 =="]
        lines.extend(rep1.render().splitlines())
        lines.append("== case 2 ==")
        lines.extend(rep2.render().splitlines())
        _emit(lines, args.out)
        return 0
    if args.algebra is None:
        raise ParseError("pipeline nonexist needs --algebra")
    alg = _load_algebra(args.algebra)
    report = nonexistence_pipeline(alg, args.mode, budget)
    if args.emit_ideal:
        _emit_ideal_file(args.emit_ideal, report)
    lines = [
        "command: pipeline nonexist",
        "algebra: %s" % alg.name,
        "mode: %s" % args.mode,
    ]
    lines.extend(report.render().splitlines())
    _emit(lines, args.out)
    return 0


def _cmd_catalog(args):
    lines = ["command: catalog", "algebras: %d" % len(CATALOG_NAMES)]
    for name in CATALOG_NAMES:
        alg = catalog(name)
        lines.append("")
        lines.append("name: %s" % name)
        lines.append("parameters: %s" % CATALOG_PARAMS[name])
        if alg.params:
            sample = ", ".join(
                "%s=%s" % (k, format_scalar(v)) for k, v in alg.params.items()
            )
            lines.append("sample: %s" % sample)
        lines.extend(format_algebra(alg).strip().splitlines()[2:])
    _emit(lines, args.out)
    return 0


def _cmd_einstein(args):
    _check_precision(args.precision)
    alg = _load_algebra(args.algebra)
    metric = _load_metric(args.metric)
    is_einstein, mu = alg.einstein_constant(metric, tol=Fraction(1, 10**30))
    lines = [
        "command: einstein",
        "algebra: %s" % alg.name,
        "metric: %s" % args.metric,
        "einstein: %s" % ("true" if is_einstein else "false"),
        "mu: %s" % (format_scalar(mu) if mu is not None else "none"),
    ]
    ric = alg.ricci(metric.rows)
    lines.append("ricci:")
    for row in ric:
        lines.append("  " + " ".join(format_scalar(x) for x in row))
    _emit(lines, args.out)
    return 0


# -- argument parsing ----------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="su3",
        description="Exact SU(3)-structure toolkit for six-dimensional Lie algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, algebra=False, forms=False, precision=False, budget=False):
        if algebra:
            p.add_argument(
                "--algebra",
                required=algebra == "required",
                help="catalog:name[,p=v,...] or a path to an algebra file",
            )
        if forms:
            p.add_argument(
                "--omega", required=True, help="2-form text, e.g. 'e^{1,2} + e^{3,4}'"
            )
            p.add_argument(
                "--psi", required=True, help="3-form text, e.g. 'e^{1,3,5} - e^{2,4,6}'"
            )
        if precision:
            p.add_argument(
                "--precision",
                type=int,
                default=64,
                help="working decimal digits for float paths (min %d)" % MIN_DPS,
            )
        if budget:
            p.add_argument("--budget-min", type=float, default=None, help="time budget in minutes")
            p.add_argument("--budget-mib", type=float, default=None, help="memory budget in MiB")
        p.add_argument("--out", default=None, help="also write the report to this file")

    p = sub.add_parser("validate", help="check the SU(3)-structure flags of (omega, psi_plus)")
    common(p, forms=True, precision=True)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("classify", help="torsion class of (omega, psi_plus) on an algebra")
    common(p, algebra="required", forms=True, precision=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("obstruct", help="half-flat obstruction test or covector scan")
    common(p, algebra="required")
    p.add_argument("--alpha", default=None, help="1-form text; omit to scan defaults")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="counterexample search seed")
    p.set_defaults(func=_cmd_obstruct)

    p = sub.add_parser("groebner", help="reduced Groebner basis of a polynomial system file")
    p.add_argument("system", help="file with a vars: line and one polynomial per line")
    p.add_argument("--order", default="grevlex", help="grevlex, lex, or block:<k>")
    common(p, budget=True)
    p.set_defaults(func=_cmd_groebner)

    p = sub.add_parser("pipeline", help="classification and nonexistence pipelines")
    p.add_argument("target", choices=("thm32", "nonexist"))
    common(p, algebra=True, budget=True)
    p.add_argument("--mode", choices=("coupled", "halfflat"), default="coupled")
    p.add_argument("--emit-ideal", default=None, help="write the generated system to this file")
    p.set_defaults(func=_cmd_pipeline)

    p = sub.add_parser("catalog", help="list the built-in algebras and parameter ranges")
    common(p)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("einstein", help="Einstein constant of a catalog metric")
    common(p, algebra="required", precision=True)
    p.add_argument(
        "--metric",
        default="identity",
        help="identity, jensen, or file:<path> with 6 rows of 6 scalars",
    )
    p.set_defaults(func=_cmd_einstein)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceBudgetExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (Su3Error, OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
