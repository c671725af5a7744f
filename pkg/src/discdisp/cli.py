"""Command-line interface: ``discdisp <command> [options]``.

Verdicts are data: a failing order check still exits 0.  Malformed input
exits 2; a broken internal invariant (catalog mismatch, sweep cell inside
the theoretical region that fails numerically) exits 3.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .dist import APPROX, EPS_CDF, EXACT, DiscreteDist, to_approx, variance
from .errors import BadParam, DiscDispError
from .io import dist_to_json, dumps, load_dist, num_to_json, read_counts_csv
from .measures import LEFT, MID, MeasureSpec, parse_specs
from .orders import ORDERS, compare
from .relations import rel_and, rel_join, rel_or

EXIT_INPUT = 2
EXIT_INVARIANT = 3

DEFAULT_MEASURES = "sd,gmd,mad,mdmad,iqnr:0.25:0.75,ienr:0.25:0.75"


class InvariantBreach(RuntimeError):
    pass


# ----------------------------------------------------------------------
# helpers


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _fraction(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _load(path: str, args) -> DiscreteDist:
    """Distribution JSON, or a ``value,count`` CSV when the suffix is .csv."""
    p = Path(path)
    d = read_counts_csv(p) if p.suffix.lower() == ".csv" else load_dist(p)
    if args.mode == APPROX and d.exact:
        d = to_approx(d, args.eps)
    elif args.mode == EXACT and not d.exact:
        raise BadParam(f"{path}: approx-mode distribution cannot be made exact")
    return d


def _num(v):
    """JSON value: exact rationals as strings, floats as numbers."""
    return num_to_json(v)


def _text_num(v) -> str:
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{float(v):.6g} ({v})"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def _emit(args, payload, *, csv_rows=None, text=None) -> None:
    fmt = args.format
    if fmt == "csv" and csv_rows is None:
        fmt = "json"
    if fmt == "json":
        out = dumps(payload) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows)
        out = buf.getvalue()
    else:
        out = (text if text is not None else dumps(payload)) + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _witness_text(w) -> str:
    if w.rhs is None:
        return f"{w.condition}: {w.detail} at level {_text_num(w.point)}"
    where = f" at {w.indices}" if w.indices else f" at {_text_num(w.point)}"
    return f"condition {w.condition}{where}: {_text_num(w.lhs)} > {_text_num(w.rhs)}"


def _measure_values(d: DiscreteDist, specs) -> dict:
    out = {}
    for s in specs:
        out[s.name] = s(d)
        if s.kind == "sd":
            var = variance(d)
            if s.unbiased:
                var = var * d.sample_size / (d.sample_size - 1)
            out["variance"] = var
    return out


def _specs(args, d: DiscreteDist | None = None) -> list:
    specs = parse_specs(args.spec, args.quantile)
    unbiased = args.unbiased == "yes" or (
        args.unbiased == "auto" and d is not None and d.sample_size is not None and d.sample_size >= 2)
    return [MeasureSpec(s.kind, s.alpha, s.beta, s.quantile_variant, unbiased) for s in specs]


# ----------------------------------------------------------------------
# commands


def cmd_ingest(args) -> int:
    d = read_counts_csv(args.csv, label=args.label)
    if args.mode == APPROX:
        d = to_approx(d, args.eps)
    obj = dist_to_json(d)
    _emit(args, obj, csv_rows=[["value", "prob"], *obj["atoms"]],
          text="\n".join(f"{x}\t{p}" for x, p in obj["atoms"]))
    return 0


def cmd_relations(args) -> int:
    F, G = _load(args.F, args), _load(args.G, args)
    builders = {"join": rel_join, "and": rel_and, "or": rel_or}
    kinds = list(builders) if args.kind == "all" else [args.kind]
    rels = {k: builders[k](F, G) for k in kinds}
    payload = {k: [list(p) for p in r.sorted()] for k, r in rels.items()}
    rows = [["relation", "a", "b"]] + [[k, a, b] for k, r in rels.items() for a, b in r.sorted()]
    text = "\n".join(f"{k}: {{{', '.join(f'({a}, {b})' for a, b in r.sorted())}}}" for k, r in rels.items())
    _emit(args, payload, csv_rows=rows, text=text)
    return 0


def cmd_compare(args) -> int:
    F, G = _load(args.F, args), _load(args.G, args)
    orders = [o.strip() for o in args.orders.split(",") if o.strip()]
    verdicts = compare(F, G, orders)
    payload = {"F": F.label or args.F, "G": G.label or args.G,
               "orders": {o: v.to_json() for o, v in verdicts.items()}}
    rows = [["order", "holds", "approximate", "condition", "indices", "lhs", "rhs"]]
    lines = [f"F = {payload['F']}", f"G = {payload['G']}"]
    for o, v in verdicts.items():
        w = v.witness
        rows.append([o, int(v.holds), int(v.approximate), w.condition if w else "",
                     " ".join(map(str, w.indices)) if w else "",
                     _num(w.lhs) if w else "", _num(w.rhs) if w else ""])
        status = "holds" if v.holds else "fails"
        extra = f"  [{_witness_text(w)}]" if w else ""
        approx = " (approximate)" if v.approximate else ""
        lines.append(f"{o:>5}: {status}{approx}{extra}")
    if args.measures:
        specs = parse_specs(args.measures, args.quantile)
        any_holds = any(v.holds for o, v in verdicts.items() if o in ("disp", "and", "or"))
        table = {}
        rows.append([])
        rows.append(["measure", "F", "G", "reversed"])
        for s in specs:
            vf, vg = s(F), s(G)
            reversed_ = bool(any_holds and vf > vg)
            table[s.name] = {"F": _num(vf), "G": _num(vg), "reversed": reversed_}
            rows.append([s.name, _num(vf), _num(vg), int(reversed_)])
            flag = "  <-- reversed although F is less dispersed" if reversed_ else ""
            lines.append(f"{s.name:>16}: F = {_text_num(vf)}, G = {_text_num(vg)}{flag}")
        payload["measures"] = table
    _emit(args, payload, csv_rows=rows, text="\n".join(lines))
    return 0


def cmd_measures(args) -> int:
    rows, results = None, []
    for path in args.files:
        d = _load(path, args)
        specs = _specs(args, d)
        vals = _measure_values(d, specs)
        results.append({"file": path, "label": d.label, "unbiased": specs[0].unbiased if specs else False,
                        **{k: _num(v) for k, v in vals.items()}})
        if rows is None:
            rows = [["file", *vals]]
        rows.append([path, *(_num(v) for v in vals.values())])
    text = "\n".join(
        f"{r['file']}: " + ", ".join(f"{k} = {_text_num(Fraction(v) if isinstance(v, str) else v)}"
                                     for k, v in r.items() if k not in ("file", "label", "unbiased"))
        for r in results)
    _emit(args, results[0] if len(results) == 1 else results, csv_rows=rows, text=text)
    return 0


def cmd_sweep(args) -> int:
    from .experiments.geometric import geom_sweep

    tail = args.tail_eps if args.tail_eps is not None else Fraction(1, 10**9)
    grid = geom_sweep(args.step, tail, args.mode or EXACT, workers=args.workers,
                      sensitivity_eps=args.sensitivity_eps)
    meta = grid.metadata()
    if args.svg:
        Path(args.svg).write_text(grid.to_svg())
    if args.out:
        Path(args.out).write_text(grid.to_csv())
    sys.stdout.write(dumps(meta) + "\n")
    if grid.violations:
        raise InvariantBreach(f"{len(grid.violations)} cells in the theoretical region fail numerically")
    return 0


def cmd_curves(args) -> int:
    from .experiments.curves import measure_curves

    params = None
    if args.params:
        params = [Fraction(p) for p in args.params.split(",")]
        if args.family == "uniform":
            params = [int(p) for p in params]
    tail = args.tail_eps if args.tail_eps is not None else Fraction(1, 10**9)
    table = measure_curves(args.family, params, args.spec, quantile_variant=args.quantile,
                           tail_eps=tail, mode=args.mode or EXACT)
    text = table.to_csv()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_catalog(args) -> int:
    from .experiments.catalog import catalog

    cases = catalog(verify=False)
    if args.name:
        cases = [c for c in cases if c.name == args.name]
        if not cases:
            raise BadParam(f"no catalog case named {args.name!r}")
    report, lines, failed = [], [], 0
    for c in cases:
        checks = []
        for label, expected, actual, ok in c.results():
            checks.append({"check": label, "expected": _jsonable(expected),
                           "actual": _jsonable(actual), "ok": ok})
            failed += not ok
        report.append({"name": c.name, "description": c.description,
                       "F": dist_to_json(c.F), "G": dist_to_json(c.G), "checks": checks})
        status = "ok" if all(ch["ok"] for ch in checks) else "MISMATCH"
        lines.append(f"{c.name}: {status} ({len(checks)} checks) - {c.description}")
    _emit(args, report, text="\n".join(lines))
    if args.verify and failed:
        raise InvariantBreach(f"{failed} catalog checks failed")
    return 0


def _jsonable(v):
    if isinstance(v, (set, frozenset)):
        return [list(p) for p in sorted(v)]
    return _num(v)


def cmd_audit(args) -> int:
    from .experiments.audit import preservation_audit
    from .experiments.sampling import HALF_GRID, LATTICE

    spec = MeasureSpec.parse(args.measure, args.quantile)
    res = preservation_audit(spec, args.budget, args.seed, order=args.order,
                             config=LATTICE if args.lattice else HALF_GRID,
                             include_catalog=args.include_catalog)
    payload = {**res.summary(), "violation_list": [v.to_json() for v in res.violations[: args.show]]}
    verdict = "inconclusive" if res.inconclusive else ("violations found" if res.violations else "no violations")
    text = (f"{res.measure} over ⪯{'∧' if args.order == 'and' else '∨'}: {verdict}; "
            f"{res.ordered_pairs} ordered pairs in {res.draws} draws, {len(res.violations)} violations")
    _emit(args, payload, text=text)
    return 0


def cmd_transitivity(args) -> int:
    from .experiments.audit import transitivity_search
    from .experiments.sampling import HALF_GRID, LATTICE

    res = transitivity_search(args.order, args.budget, args.seed,
                              config=LATTICE if args.lattice else HALF_GRID)
    summary = res.summary()
    if res.witness:
        text = f"witness after {res.triples} chained triples:\n" + "\n".join(
            f"  {k} = {{{', '.join(f'{x}: {p}' for x, p in d.atoms)}}}" for k, d in zip("FGH", res.witness))
    else:
        text = f"no witness in {res.triples} chained triples"
    _emit(args, summary, text=text)
    return 0


# ----------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("global options")
    g.add_argument("--mode", choices=(EXACT, APPROX), default=None,
                   help="numeric mode; approx converts exact inputs to floats (default: keep input mode)")
    g.add_argument("--eps", type=_positive_float, default=EPS_CDF,
                   help="cdf comparison tolerance in approx mode (default: %(default)g)")
    g.add_argument("--tail-eps", type=_fraction, default=None,
                   help="tail mass left after truncating geometric laws (default: 1e-9)")
    g.add_argument("--quantile", choices=(LEFT, MID), default=LEFT,
                   help="quantile definition for median/iqnr/mdmad (default: left)")
    g.add_argument("--format", choices=("json", "csv", "text"), default="json",
                   help="output format (default: json)")
    g.add_argument("--seed", default="0", help="seed for randomized commands (default: 0)")
    g.add_argument("--out", help="write the main output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="discdisp", description="Discrete dispersive orders and dispersion measures.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("ingest", parents=[common], help="sample-count CSV to distribution JSON")
    s.add_argument("csv", help="CSV with header 'value,count'")
    s.add_argument("--label", default=None)
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("relations", parents=[common], help="interval relations between two distributions")
    s.add_argument("F")
    s.add_argument("G")
    s.add_argument("--kind", choices=("join", "and", "or", "all"), default="all")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("compare", parents=[common], help="order verdicts for F against G")
    s.add_argument("F", help="distribution JSON (or value,count CSV)")
    s.add_argument("G")
    s.add_argument("--orders", default="disp,and,or",
                   help=f"comma list from {','.join(ORDERS)} (default: %(default)s)")
    s.add_argument("--measures", default=None, help="also evaluate these measures, e.g. iqnr:0.25:0.75")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("measures", parents=[common], help="dispersion measures of one or more distributions")
    s.add_argument("files", nargs="+")
    s.add_argument("--spec", default=DEFAULT_MEASURES, help="comma list kind[:alpha:beta] (default: %(default)s)")
    s.add_argument("--unbiased", choices=("auto", "yes", "no"), default="auto",
                   help="N/(N-1) correction for sd and gmd; auto applies it to sample-based inputs")
    s.set_defaults(func=cmd_measures)

    s = sub.add_parser("sweep", parents=[common], help="geometric parameter sweep (CSV + SVG heatmap)")
    s.add_argument("family", choices=("geometric",))
    s.add_argument("--step", type=_fraction, default=Fraction(1, 100))
    s.add_argument("--svg", default=None, help="write the two-panel heatmap here")
    s.add_argument("--workers", type=_positive_int, default=1)
    s.add_argument("--sensitivity-eps", type=_fraction, default=None,
                   help="repeat the numeric pass at this tail mass and report flipped cells")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("curves", parents=[common], help="measure curves over a distribution family")
    s.add_argument("family", choices=("uniform", "geometric"))
    s.add_argument("--spec", default=DEFAULT_MEASURES)
    s.add_argument("--params", default=None, help="comma list of n (uniform) or pi (geometric)")
    s.set_defaults(func=cmd_curves)

    s = sub.add_parser("catalog", parents=[common], help="worked examples and counterexamples")
    s.add_argument("--verify", action="store_true", help="exit 3 if any expectation fails")
    s.add_argument("--name", default=None, help="only this case")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("audit", parents=[common], help="randomized measure preservation audit")
    s.add_argument("--measure", required=True, help="kind[:alpha:beta]")
    s.add_argument("--budget", type=_positive_int, default=1000, help="ordered pairs to examine")
    s.add_argument("--order", choices=("and", "or"), default="and")
    s.add_argument("--lattice", action="store_true", help="draw lattice distributions only")
    s.add_argument("--include-catalog", action="store_true", help="check catalog pairs first")
    s.add_argument("--show", type=int, default=5, help="violations to print in full")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("transitivity", parents=[common], help="search for a non-transitivity witness")
    s.add_argument("--order", choices=("and", "or"), default="and")
    s.add_argument("--budget", type=_positive_int, default=100_000, help="chained triples to examine")
    s.add_argument("--lattice", action="store_true", help="draw lattice distributions only")
    s.set_defaults(func=cmd_transitivity)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantBreach as exc:
        print(f"discdisp: invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (DiscDispError, OSError) as exc:
        print(f"discdisp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
