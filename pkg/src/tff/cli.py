"""Command line: ``tff kostant``, ``tff eval``, ``tff validate`` and ``tff oracle``.

Exit codes: 0 success, 1 bad input / validation failure / oracle mismatch,
2 a resource cap was hit.  Payload goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .dataset import load_dataset, parse_dataset
from .errors import DatasetError, NeedsExtension, ResourceError
from .lefschetz import evaluate_dataset, stratum_breakdown, validate_dataset
from .nilcoh import WeightProfile, table_csv, table_json, table_rows
from .rootdata import build_root_datum, weight_from_fundamental


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; 2 is reserved for resource errors here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _group(args):
    try:
        return build_root_datum(args.type.upper(), args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _lambda(rd, text):
    lam = _int_list(text)
    if len(lam) != rd.rank:
        raise UsageError(f"--lambda needs {rd.rank} fundamental coordinates, got {len(lam)}")
    if any(x < 0 for x in lam):
        raise UsageError("--lambda must be dominant (nonnegative coordinates)")
    return lam


def _levi(rd, text):
    try:
        return rd.check_subset(_int_list(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_kostant(args) -> int:
    rd = _group(args)
    levi = _levi(rd, args.levi)
    lam = weight_from_fundamental(rd, _lambda(rd, args.lam))
    try:
        nu = WeightProfile.parse(args.nu)
        nu.root_coords(rd) if not nu.is_infinite else None
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --nu: {exc}") from None
    rows = table_rows(rd, levi, lam, nu)
    if args.format == "json":
        sys.stdout.write(table_json(rd, levi, lam, nu, rows))
    else:
        sys.stdout.write(table_csv(rows))
    return 0


def _print_diagnostics(diags) -> None:
    for d in diags:
        print(str(d), file=sys.stderr)


def _load(path):
    """The dataset at ``path``, or None after reporting why it cannot be loaded."""
    try:
        return load_dataset(path)
    except DatasetError as exc:
        _print_diagnostics(exc.diagnostics or [str(exc)])
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
    return None


def cmd_eval(args) -> int:
    ds = _load(args.path)
    if ds is None:
        return 1
    diags = validate_dataset(ds)
    _print_diagnostics(diags)
    if any(d.level == "error" for d in diags):
        return 1
    try:
        if args.explain:
            formula = "alternate" if args.formula == "alternate" else "main"
            if args.formula == "auto-infinite" and ds.nu.is_infinite:
                print("# per-stratum breakdown uses the truncation formula", file=sys.stderr)
            for levi, v in stratum_breakdown(ds, formula):
                print(f"L(P={{{','.join(map(str, sorted(levi)))}}}) = {v}  ~ {v.float_str()}")
        value = evaluate_dataset(ds, args.formula)
    except DatasetError as exc:
        _print_diagnostics(exc.diagnostics or [str(exc)])
        return 1
    except NeedsExtension as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(str(value))
    print(f"float: {value.float_str()}")
    return 0


def cmd_validate(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return 1
    ds, diags = parse_dataset(raw)
    if ds is not None:
        diags = validate_dataset(ds)
    _print_diagnostics(diags)
    errors = sum(d.level == "error" for d in diags)
    warnings = len(diags) - errors
    print(f"{errors} error(s), {warnings} warning(s)")
    return 1 if errors else 0


def cmd_oracle_ce(args) -> int:
    from .oracle.ce import run_ce_check

    rd = _group(args)
    levi = _levi(rd, args.levi)
    lam = _lambda(rd, args.lam)
    try:
        report, ok, diff = run_ce_check(rd, levi, lam)
    except NotImplementedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    dims = ",".join(str(d) for d in report.dimensions)
    if ok:
        print(f"MATCH ({dims})")
    else:
        print(f"MISMATCH ({dims}): {diff}")
    if args.report:
        sys.stdout.write(report.to_csv())
    return 0 if ok else 1


def cmd_oracle_forms(args) -> int:
    from .oracle.forms import reduced_forms

    try:
        forms = reduced_forms(args.disc)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print("a,b,c")
    for a, b, c in forms:
        print(f"{a},{b},{c}")
    return 0


def cmd_oracle_classes(args) -> int:
    from .oracle.forms import count_elliptic_classes, elliptic_traces

    try:
        traces = elliptic_traces(args.p)
        counts = [(t, count_elliptic_classes(args.p, t, args.box_limit)) for t in traces]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print("t,discriminant,count")
    for t, n in counts:
        print(f"{t},{t * t - 4 * args.p},{n}")
    return 0


def cmd_oracle_gl2(args) -> int:
    from .dataset import dumps_dataset
    from .oracle.gl2 import build_gl2_dataset

    try:
        nu = WeightProfile.parse(args.nu)
        ds = build_gl2_dataset(args.p, lambda _label: args.chi_c, lam=args.lam, nu=nu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(dumps_dataset(ds))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tff", description="Fixed-point contributions to Lefschetz numbers of Hecke correspondences.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    k = sub.add_parser("kostant", help="Kostant modules of H^*(n_P, E) with their quadrants")
    k.add_argument("type")
    k.add_argument("rank", type=int)
    k.add_argument("--levi", default="", help="comma-separated simple roots generating the Levi (default: Borel)")
    k.add_argument("--lambda", dest="lam", default=None, help="highest weight in fundamental coordinates")
    k.add_argument("--nu", default="middle", help="middle, plus-inf, minus-inf or root-basis rationals")
    k.add_argument("--format", choices=("csv", "json"), default="csv")
    k.set_defaults(func=cmd_kostant)

    e = sub.add_parser("eval", help="evaluate the Lefschetz number of a dataset file")
    e.add_argument("path")
    e.add_argument("--formula", choices=("main", "alternate", "auto-infinite"), default="main")
    e.add_argument("--explain", action="store_true", help="also print the per-stratum breakdown")
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("validate", help="lint a dataset file")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)

    o = sub.add_parser("oracle", help="brute-force cross-checks")
    osub = o.add_subparsers(dest="oracle", required=True, parser_class=_Parser)
    ce = osub.add_parser("ce", help="Chevalley-Eilenberg cohomology compared with Kostant's theorem")
    ce.add_argument("type")
    ce.add_argument("rank", type=int)
    ce.add_argument("--levi", default="")
    ce.add_argument("--lambda", dest="lam", default=None)
    ce.add_argument("--report", action="store_true", help="print the graded report as CSV")
    ce.set_defaults(func=cmd_oracle_ce)
    f = osub.add_parser("forms", help="reduced binary quadratic forms of a negative discriminant")
    f.add_argument("disc", type=int)
    f.set_defaults(func=cmd_oracle_forms)
    c = osub.add_parser("classes", help="GL2(Z)-classes of elliptic matrices of determinant p, per trace")
    c.add_argument("p", type=int)
    c.add_argument("--box-limit", type=int, default=4096)
    c.set_defaults(func=cmd_oracle_classes)
    g = osub.add_parser("gl2", help="emit the GL2 dataset at p with a uniform chi_c")
    g.add_argument("p", type=int)
    g.add_argument("--chi-c", type=int, default=1)
    g.add_argument("--lambda", dest="lam", type=int, default=0)
    g.add_argument("--nu", default="middle")
    g.set_defaults(func=cmd_oracle_gl2)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "lam", "") is None:
        rank = getattr(args, "rank", 1)
        args.lam = ",".join(["0"] * rank)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
