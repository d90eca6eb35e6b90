"""Command-line front end.

Commands: gram, canonical, dual-canonical, seed, mutate, ic-table, verify.
Outputs are deterministic: stable ordering, canonical scalar rendering,
byte-identical across repeated runs and across --jobs settings.  Exit
codes: 0 ok, 2 invalid input, 3 internal certification failure, 4 resource
bound exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__, aalg, cluster, ictables, pbw, verify as verify_mod
from .errors import QCellError, ResourceBound
from .qring import render_scalar
from .rootdata import QWeight

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CERTIFICATION = 3
EXIT_RESOURCE = 4


def _meta(n: int) -> dict:
    return {
        "version": __version__,
        "braid_convention": pbw.root_table(2 * n).convention_tag,
    }


def _check_degree(w: QWeight, ceiling: int) -> None:
    if w.degree() > ceiling:
        raise ResourceBound(
            f"weight degree {w.degree()} exceeds ceiling {ceiling}; "
            "raise --max-degree to proceed")


def _emit(payload: dict, fmt: str, out_path: str | None,
          csv_rows=None, csv_header=None, text=None) -> str:
    stamp = (f"# qcell {payload.get('version', __version__)} "
             f"convention={payload.get('braid_convention', '-')}\n")
    if fmt == "json":
        body = json.dumps(payload, sort_keys=True, indent=2,
                          separators=(",", ": ")) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(csv_header)
        for row in csv_rows:
            writer.writerow(row)
        body = stamp + buf.getvalue()
    else:
        body = text if text is not None else json.dumps(payload, sort_keys=True,
                                                        indent=2) + "\n"
        body = stamp + body
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return body


def _figure_path(args) -> str | None:
    if getattr(args, "no_figure", False):
        return None
    if getattr(args, "figure", None):
        return args.figure
    if args.out:
        base = args.out.rsplit(".", 1)[0]
        return base + ".png"
    return None


def cmd_gram(args) -> int:
    w = QWeight(args.beta[0], args.beta[1])
    _check_degree(w, args.max_degree)
    table = ictables.gram_table(args.n, w)
    table.update(_meta(args.n))
    rows = [[_fmt_a(e["a"]), _fmt_a(e["b"]), e["value"]]
            for e in table["entries"]]
    text = "\n".join(f"({r[0]}, {r[1]}) = {r[2]}" for r in rows) + "\n"
    _emit(table, args.format, args.out, rows, ["a", "b", "value"], text)
    fig = _figure_path(args)
    if fig:
        from . import report
        report.gram_figure(table, fig)
    return EXIT_OK


def _fmt_a(a) -> str:
    return " ".join(map(str, a))


def cmd_canonical(args) -> int:
    w = QWeight(args.beta[0], args.beta[1])
    _check_degree(w, args.max_degree)
    rows = pbw.canonical_coords(args.n, w)
    m = pbw.bar_matrix(args.n, w)
    payload = {
        "n": args.n,
        "weight": [w.d0, w.d1],
        "solver_order": [list(a) for a in m.order],
        "basis": [{"a": list(a),
                   "coords": [{"b": list(b), "c": render_scalar(c)}
                              for b, c in sorted(rows[a].items())]}
                  for a in sorted(rows)],
    }
    payload.update(_meta(args.n))
    csv_rows = [[_fmt_a(a), _fmt_a(b), render_scalar(c)]
                for a in sorted(rows) for b, c in sorted(rows[a].items())]
    text = "\n".join(f"C({r[0]}): E({r[1]}) * {r[2]}" for r in csv_rows) + "\n"
    _emit(payload, args.format, args.out, csv_rows, ["a", "b", "coeff"], text)
    return EXIT_OK


def cmd_dual_canonical(args) -> int:
    w = QWeight(args.beta[0], args.beta[1])
    _check_degree(w, args.max_degree)
    rows, order, _ = aalg.dual_canonical_data(args.n, w)
    payload = {
        "n": args.n,
        "weight": [w.d0, w.d1],
        "solver_order": [list(a) for a in order],
        "basis": [{"a": list(a),
                   "coords": [{"ap": list(b), "p": render_scalar(c)}
                              for b, c in sorted(rows[a].items())]}
                  for a in sorted(rows)],
    }
    payload.update(_meta(args.n))
    csv_rows = [[_fmt_a(a), _fmt_a(b), render_scalar(c)]
                for a in sorted(rows) for b, c in sorted(rows[a].items())]
    text = "\n".join(f"Bt({r[0]}): Et({r[1]}) * {r[2]}" for r in csv_rows) + "\n"
    _emit(payload, args.format, args.out, csv_rows, ["a", "ap", "p"], text)
    return EXIT_OK


def _seed_payload(seed: cluster.QuantumSeed) -> dict:
    return {
        "n": seed.n,
        "history": list(seed.history),
        "btilde": seed.exchange.btilde,
        "lambda": seed.exchange.lam,
        "cluster_variables": [
            {"index": i + 1,
             "realization": x.to_json(),
             "torus_terms": [{"exps": list(c), "coeff": render_scalar(v)}
                             for c, v in sorted(t.terms.items())]}
            for i, (x, t) in enumerate(zip(seed.realization, seed.torus_vars))],
        "laurent_report": cluster.verify_laurent(seed),
        "minor_hypothesis_used": any(
            aalg.minor_is_hypothesis(1 if (k + 1) % 2 else 2, k + 1)
            for k in range(2 * seed.n)),
    }


def cmd_seed(args) -> int:
    seed = cluster.initial_seed(args.n)
    payload = _seed_payload(seed)
    payload.update(_meta(args.n))
    csv_rows = [[v["index"], json.dumps(v["realization"], sort_keys=True)]
                for v in payload["cluster_variables"]]
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    _emit(payload, args.format, args.out, csv_rows,
          ["index", "realization"], text)
    return EXIT_OK


def cmd_mutate(args) -> int:
    seed = cluster.initial_seed(args.n)
    for k in args.seq:
        if not (1 <= k <= 2 * args.n - 2):
            raise ValueError(f"index {k} is not mutable for n={args.n}")
        seed = cluster.mutate(seed, k)
    payload = _seed_payload(seed)
    payload.update(_meta(args.n))
    csv_rows = [[v["index"], json.dumps(v["realization"], sort_keys=True)]
                for v in payload["cluster_variables"]]
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    _emit(payload, args.format, args.out, csv_rows,
          ["index", "realization"], text)
    return EXIT_OK


def cmd_ic_table(args) -> int:
    w = QWeight(args.beta[0], args.beta[1])
    _check_degree(w, args.max_degree)
    table = _assemble_ic_table(args.n, w, args.jobs)
    table.update(_meta(args.n))
    csv_rows = []
    for row in table["rows"]:
        for c in row["coeffs"]:
            csv_rows.append([_fmt_a(row["a"]), _fmt_a(row["lambda"]),
                             row["delta"], _fmt_a(c["ap"]), c["p"]])
    text_lines = []
    for row in table["rows"]:
        text_lines.append(f"a = {_fmt_a(row['a'])}   lambda = "
                          f"{_fmt_a(row['lambda'])}   delta = {row['delta']}")
        for c in row["coeffs"]:
            text_lines.append(f"    Et({_fmt_a(c['ap'])}) * {c['p']}")
    _emit(table, args.format, args.out, csv_rows,
          ["a", "lambda", "delta", "ap", "p"], "\n".join(text_lines) + "\n")
    fig = _figure_path(args)
    if fig:
        from . import report
        report.ic_table_figure(table, fig)
    return EXIT_OK


def _assemble_ic_table(n: int, w: QWeight, jobs: int) -> dict:
    return ictables.ic_table(n, w, jobs=jobs)


def cmd_verify(args) -> int:
    report_data = verify_mod.run_suite(args.n, args.degree)
    report_data["version"] = __version__
    lines = [f"qcell verify  n={args.n}  degree<={args.degree}  "
             f"convention={report_data['braid_convention']}"]
    for c in report_data["checks"]:
        status = "PASS" if c["passed"] else "FAIL"
        detail = f"  [{c['detail']}]" if c["detail"] else ""
        lines.append(f"  {status}  {c['name']}{detail}")
    lines.append("all checks passed" if report_data["all_passed"]
                 else "FAILURES PRESENT")
    text = "\n".join(lines) + "\n"
    csv_rows = [[c["name"], int(c["passed"]), c["detail"]]
                for c in report_data["checks"]]
    _emit(report_data, args.format, args.out, csv_rows,
          ["check", "passed", "detail"], text)
    fig = _figure_path(args)
    if fig:
        from . import report
        report.verify_figure(report_data, fig)
    return EXIT_OK if report_data["all_passed"] else EXIT_CERTIFICATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qcell",
        description="dual canonical basis engine for quantum unipotent cells")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, beta=False, jobs=False, figure=False):
        sp.add_argument("--n", type=int, required=True, help="rank parameter")
        sp.add_argument("--max-degree", type=int, default=12,
                        help="weight degree ceiling (default 12)")
        sp.add_argument("--format", choices=("json", "csv", "text"),
                        default="json")
        sp.add_argument("--out", help="output path (default stdout)")
        if figure:
            sp.add_argument("--figure", help="write a PNG figure to this path")
            sp.add_argument("--no-figure", action="store_true",
                            help="suppress the default figure next to --out")
        if beta:
            sp.add_argument("--beta", type=int, nargs=2, required=True,
                            metavar=("D0", "D1"),
                            help="weight coefficients of (alpha_0, alpha_1)")
        if jobs:
            sp.add_argument("--jobs", type=int, default=1,
                            help="worker threads for row assembly")

    sp = sub.add_parser("gram", help="PBW Gram matrix at one weight")
    common(sp, beta=True, figure=True)
    sp.set_defaults(fn=cmd_gram)

    sp = sub.add_parser("canonical", help="canonical basis in PBW coordinates")
    common(sp, beta=True)
    sp.set_defaults(fn=cmd_canonical)

    sp = sub.add_parser("dual-canonical",
                        help="rescaled dual canonical basis at one weight")
    common(sp, beta=True)
    sp.set_defaults(fn=cmd_dual_canonical)

    sp = sub.add_parser("seed", help="initial quantum seed dump")
    common(sp)
    sp.set_defaults(fn=cmd_seed)

    sp = sub.add_parser("mutate", help="apply a mutation sequence to the seed")
    common(sp)
    sp.add_argument("--seq", type=int, nargs="+", required=True,
                    help="mutable indices to mutate at, in order")
    sp.set_defaults(fn=cmd_mutate)

    sp = sub.add_parser("ic-table", help="IC expansion table at one weight")
    common(sp, beta=True, jobs=True, figure=True)
    sp.set_defaults(fn=cmd_ic_table)

    sp = sub.add_parser("verify", help="run the invariant suite")
    common(sp, figure=True)
    sp.add_argument("--degree", type=int, default=6,
                    help="degree bound for the suite (default 6)")
    sp.set_defaults(fn=cmd_verify)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else 0
    try:
        if getattr(args, "beta", None) is not None:
            w = QWeight(args.beta[0], args.beta[1])
            if not (w.d0 >= 0 and w.d1 >= 0):
                raise ValueError("beta must lie in the positive root cone")
        if args.n < 1:
            raise ValueError("n must be >= 1")
        aalg.MAX_RULE_DEGREE = max(aalg.MAX_RULE_DEGREE,
                                   getattr(args, "max_degree", 12))
        return args.fn(args)
    except ResourceBound as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except QCellError as exc:
        print(f"certification failure: {type(exc).__name__}: {exc}",
              file=sys.stderr)
        return EXIT_CERTIFICATION
    except (ValueError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
