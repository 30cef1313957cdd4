"""Command-line surface.

Subcommands: ``eval`` tabulates survival/MRL/intensity curves, ``classify``
prints ageing-class verdicts, ``compare`` runs stochastic-order checks on a
pair of spec files, ``reproduce`` replays the worked-example corpus, and
``plotdata`` emits plot-ready CSV.

Grids are written ``min:max:step`` or ``min:max/n`` with an optional
``:log`` suffix on the second form.  All numbers print with 12 significant
digits; every output format renders the same strings, so values round-trip
bit-equal between table, CSV and JSON.

Exit codes: 0 success (a failing order verdict is still a successful run),
1 the corpus replay found mismatches, 2 usage or spec error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus as corpus_mod
from . import orders as orders_mod
from .ageing import Convention, hazard_ai, profile
from .classify import Grid, classify_hazard_ai, classify_mrl, classify_mrla, classify_mrlai
from .distributions import load_spec, load_spec_file, build
from .errors import ToolkitError

_CONVENTIONS = {
    "zero": Convention.ZERO,
    "support": Convention.SUPPORT_START,
    "formal": Convention.FORMAL,
}

_ORDER_NAMES = ("mrlai", "ratio", "lr", "icx", "vrl", "mrl")


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _parse_grid(text: str):
    """Parse ``min:max:step`` or ``min:max/n[:log]`` into (lo, hi, n, spacing)."""
    spacing = "linear"
    body = text
    if text.endswith(":log"):
        spacing, body = "log", text[: -len(":log")]
    try:
        if "/" in body:
            rng, n = body.rsplit("/", 1)
            lo, hi = (float(v) for v in rng.split(":"))
            n = int(n)
        else:
            lo, hi, step = (float(v) for v in body.split(":"))
            if step <= 0:
                raise ValueError("step must be positive")
            n = int(round((hi - lo) / step)) + 1
            hi = lo + step * (n - 1)
        if n < 2 or not lo < hi:
            raise ValueError("need min < max and at least 2 points")
        return lo, hi, n, spacing
    except (ValueError, TypeError) as exc:
        raise SystemExit(f"error: bad grid {text!r}: {exc}")


def _grid_points(parsed):
    lo, hi, n, spacing = parsed
    if spacing == "log":
        if lo <= 0:
            raise SystemExit("error: log spacing needs min > 0")
        import math

        la, lb = math.log(lo), math.log(hi)
        return [math.exp(la + (lb - la) * i / (n - 1)) for i in range(n)]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _load_one_spec(path_or_json: str):
    text = path_or_json.strip()
    if text.startswith("{"):
        return load_spec(text)
    return load_spec_file(path_or_json)


def _emit_rows(header, rows, fmt, out):
    cells = [[_fmt(v) for v in row] for row in rows]
    if fmt == "csv":
        out.write(",".join(header) + "\n")
        for row in cells:
            out.write(",".join(row) + "\n")
    elif fmt == "json":
        out.write(
            json.dumps([dict(zip(header, row)) for row in cells], indent=2) + "\n"
        )
    else:
        widths = [
            max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
            for i, h in enumerate(header)
        ]
        out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for row in cells:
            out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _open_output(args):
    if args.output:
        return open(args.output, "w", encoding="utf-8"), True
    return sys.stdout, False


def cmd_eval(args) -> int:
    dist = build(_load_one_spec(args.spec))
    conv = _CONVENTIONS[args.conv]
    ts = _grid_points(_parse_grid(args.grid))
    prof = profile(dist, ts, conv, with_hazard_ai=dist.has_density)
    header = ["t", "survival", "mu", "mu_avg", "L"]
    rows = [
        [t, dist.survival(t), mu, avg, L]
        for t, mu, avg, L in zip(prof.grid, prof.mu, prof.mu_avg, prof.L)
    ]
    if prof.hazard_ai is not None:
        header.append("hazard_ai")
        for row, ai in zip(rows, prof.hazard_ai):
            row.append(ai)
    out, close = _open_output(args)
    try:
        _emit_rows(header, rows, args.format, out)
    finally:
        if close:
            out.close()
    return 0


def cmd_classify(args) -> int:
    dist = build(_load_one_spec(args.spec))
    conv = _CONVENTIONS[args.conv]
    lo, hi, n, spacing = _parse_grid(args.grid)
    grid = Grid(lo, hi, n, spacing)
    rows = [
        ["mrl", str(classify_mrl(dist, grid))],
        ["mrl_average", str(classify_mrla(dist, grid, conv))],
        ["mrlai", str(classify_mrlai(dist, grid, conv))],
    ]
    if dist.has_density:
        rows.append(["hazard_ai", str(classify_hazard_ai(dist, grid))])
    out, close = _open_output(args)
    try:
        _emit_rows(["quantity", "verdict"], rows, args.format, out)
    finally:
        if close:
            out.close()
    return 0


def cmd_compare(args) -> int:
    X = build(_load_one_spec(args.spec_x))
    Y = build(_load_one_spec(args.spec_y))
    conv = _CONVENTIONS[args.conv]
    lo, hi, n, spacing = _parse_grid(args.grid)
    ts = _grid_points((lo, hi, n, spacing))
    wanted = [o.strip() for o in args.orders.split(",") if o.strip()]
    bad = [o for o in wanted if o not in _ORDER_NAMES]
    if bad:
        raise SystemExit(f"error: unknown order(s) {bad}; choose from {_ORDER_NAMES}")
    funcs = {
        "mrlai": lambda: orders_mod.mrlai_order(X, Y, ts, conv),
        "ratio": lambda: orders_mod.ratio_test(X, Y, ts, conv),
        "lr": lambda: orders_mod.lr_order(X, Y, ts),
        "icx": lambda: orders_mod.icx_order(X, Y, ts, conv),
        "vrl": lambda: orders_mod.vrl_order(X, Y, ts, conv),
        "mrl": lambda: orders_mod.mrl_order(X, Y, ts, conv),
    }
    rows = []
    for name in wanted:
        v = funcs[name]()
        witness = ""
        if v.witness is not None:
            witness = f"t={_fmt(v.witness.t)}: {_fmt(v.witness.lhs)} vs {_fmt(v.witness.rhs)}"
        rows.append([name, v.relation.value, v.decided_by, witness])
    shortcut = orders_mod.sufficient_conditions(X, Y, Grid(lo, hi, max(16, n), spacing), conv)
    if shortcut is not None:
        rows.append(["shortcut", shortcut.relation.value, shortcut.decided_by, shortcut.note])
    out, close = _open_output(args)
    try:
        _emit_rows(["order", "relation", "decided_by", "witness"], rows, args.format, out)
    finally:
        if close:
            out.close()
    return 0


def cmd_reproduce(args) -> int:
    if args.dump_corpus:
        with open(args.dump_corpus, "w", encoding="utf-8") as fh:
            json.dump(corpus_mod.corpus_to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    ids = corpus_mod.list_cases(args.filter)
    if not ids:
        print(f"warning: no corpus cases match {args.filter!r}", file=sys.stderr)
        return 0
    reports = [corpus_mod.run_case(i, tol_scale=args.tol_scale) for i in ids]
    out, close = _open_output(args)
    try:
        if args.format == "json":
            out.write(json.dumps(corpus_mod.report_to_dict(reports), indent=2) + "\n")
        else:
            header = ["case", "check", "computed", "expected", "status"]
            rows = []
            for rep in reports:
                for r in rep.results:
                    rows.append(
                        [rep.case_id, r.label, _fmt(r.computed), _fmt(r.expected), r.status]
                    )
            _emit_rows(header, rows, args.format, out)
            mismatches = sum(r.mismatches for r in reports)
            disputed = sum(r.disputed for r in reports)
            out.write(
                f"# {len(reports)} cases, {sum(len(r.results) for r in reports)} checks, "
                f"{mismatches} mismatches, {disputed} disputed-as-expected\n"
            )
    finally:
        if close:
            out.close()
    return 1 if any(r.mismatches for r in reports) else 0


def cmd_plotdata(args) -> int:
    conv = _CONVENTIONS[args.conv]
    ts = _grid_points(_parse_grid(args.grid))
    specs = args.spec
    rows = []
    multi = len(specs) > 1
    for label_idx, spec_text in enumerate(specs):
        dist = build(_load_one_spec(spec_text))
        series = dist.lineage if multi else None
        if args.quantity == "survival":
            vals = [dist.survival(t) for t in ts]
        elif args.quantity == "hazard_ai":
            vals = [hazard_ai(dist, t) for t in ts]
        else:
            prof = profile(dist, ts, conv)
            vals = {"mu": prof.mu, "mu_avg": prof.mu_avg, "L": prof.L}[args.quantity]
        for t, v in zip(ts, vals):
            rows.append([series, t, v] if multi else [t, v])
    header = ["series", "t", args.quantity] if multi else ["t", args.quantity]
    out, close = _open_output(args)
    try:
        _emit_rows(header, rows, "csv", out)
    finally:
        if close:
            out.close()
    return 0


def _add_common(p, with_conv=True):
    if with_conv:
        p.add_argument(
            "--conv",
            choices=sorted(_CONVENTIONS),
            default="zero",
            help="integration convention for the running MRL average",
        )
    p.add_argument("--grid", default="0.1:10/64", help="grid: min:max:step or min:max/n[:log]")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--output", "-o", default=None, help="write to file instead of stdout")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mrlai",
        description="Mean-residual-life ageing intensity toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="tabulate survival, MRL, running average and intensity")
    p.add_argument("spec", help="spec file path or inline JSON")
    _add_common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("classify", help="ageing-class verdicts on a grid")
    p.add_argument("spec", help="spec file path or inline JSON")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("compare", help="stochastic-order checks for a pair")
    p.add_argument("spec_x", help="left spec (file or inline JSON)")
    p.add_argument("spec_y", help="right spec (file or inline JSON)")
    p.add_argument(
        "--orders",
        default="mrlai,ratio",
        help=f"comma-separated subset of {','.join(_ORDER_NAMES)}",
    )
    _add_common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("reproduce", help="replay the worked-example corpus")
    p.add_argument("--filter", default=None, help="fnmatch pattern on case ids, e.g. 'ex3.*'")
    p.add_argument("--tol-scale", type=float, default=1.0, help="multiply every check tolerance")
    p.add_argument(
        "--dump-corpus",
        default=None,
        metavar="FILE",
        help="also write the corpus itself (specs and expected values) as versioned JSON",
    )
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("plotdata", help="CSV of t versus a quantity for external plotting")
    p.add_argument("spec", nargs="+", help="one or more specs (file or inline JSON)")
    p.add_argument(
        "--quantity",
        choices=("survival", "mu", "mu_avg", "L", "hazard_ai"),
        default="L",
    )
    _add_common(p)
    p.set_defaults(func=cmd_plotdata)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        return int(exc.code or 0)
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
