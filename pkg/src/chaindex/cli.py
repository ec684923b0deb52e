"""Command-line front door.

Subcommands:

* ``indices`` -- exact invariant bundle for one chain (JSON or CSV).
* ``verify``  -- run the full claim matrix over a range of sizes.
* ``table``   -- reproduce one of the three printed reference tables.
* ``bench``   -- time closed forms against the brute-force oracles.

Mismatches found by ``verify``/``table`` are findings, not failures: the
exit status stays 0.  Nonzero exits mean usage or computation errors.
``CHAINDEX_THREADS`` caps how many sizes ``verify`` runs in parallel.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bench, formulas, oracles, verify
from .graphs import build_crossed_chain, build_plain_chain


def _write_output(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _size_list(value: str) -> list[int]:
    try:
        sizes = [int(part) for part in value.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError("expected a comma-separated integer list") from exc
    if not sizes or any(n < 1 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def _cmd_indices(args) -> int:
    builder = build_crossed_chain if args.kind == "crossed" else build_plain_chain
    g = builder(args.n)
    bundle = oracles.index_bundle(g)
    payload = {"kind": args.kind, **bundle.to_json_dict()}
    if args.kind == "crossed":
        payload["closed_form"] = {
            "kf": str(formulas.kirchhoff_closed(args.n)),
            "kf_star": str(formulas.degree_kirchhoff_closed(args.n)),
            "tau": str(formulas.spanning_trees_closed(args.n)),
            "wiener_claim": str(formulas.wiener_claim(args.n)),
            "gutman_claim": str(formulas.gutman_claim(args.n)),
        }
    if args.format == "json":
        text = json.dumps(payload, indent=2)
    else:
        flat = dict(payload)
        closed = flat.pop("closed_form", {})
        flat.update({f"closed_{k}": v for k, v in closed.items()})
        text = ",".join(flat) + "\n" + ",".join(str(v) for v in flat.values())
    _write_output(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    if args.start > args.stop:
        raise ValueError("--from must not exceed --to")
    report = verify.run_verification(args.start, args.stop)
    text = report.to_json() if args.format == "json" else report.to_csv()
    _write_output(text, args.out)
    return 0


_TABLES = {
    1: ("kf", formulas.TABLE_KF, formulas.kirchhoff_closed, 15),
    2: ("kf_star", formulas.TABLE_KF_STAR, formulas.degree_kirchhoff_closed, 15),
    3: ("tau", formulas.TABLE_TREES, formulas.spanning_trees_closed, 8),
}


def _cmd_table(args) -> int:
    name, printed_table, closed, default_max = _TABLES[args.which]
    n_max = args.stop if args.stop is not None else default_max
    rows = []
    for n in range(1, n_max + 1):
        exact = Fraction(closed(n))
        if args.which == 3:
            rendered = str(exact.numerator)
        else:
            rendered = formulas.format_2dec(exact)
        printed = printed_table.get(n, "")
        if not printed:
            status = ""
        elif rendered == printed:
            status = verify.MATCH
        elif abs(exact - Fraction(printed)) <= verify.TABLE_TOLERANCE:
            status = verify.ROUNDING_MATCH
        else:
            status = verify.MISMATCH
        rows.append({
            "n": n,
            "exact": str(exact),
            "rendered": rendered,
            "printed": printed,
            "status": status,
        })
    if args.format == "json":
        text = json.dumps({"table": name, "rows": rows}, indent=2)
    else:
        lines = ["n,exact,rendered,printed,status"]
        lines.extend(
            f"{r['n']},{r['exact']},{r['rendered']},{r['printed']},{r['status']}"
            for r in rows
        )
        text = "\n".join(lines) + "\n"
    _write_output(text, args.out)
    return 0


def _cmd_bench(args) -> int:
    rows = bench.run_bench(args.sizes, oracle_limit=args.oracle_limit)
    text = bench.rows_to_json(rows) if args.format == "json" else bench.rows_to_csv(rows)
    _write_output(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaindex",
        description="Exact invariants of octagonal-quadrilateral chain networks, "
                    "with verification of the published closed forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_indices = sub.add_parser("indices", help="exact invariant bundle for one chain")
    p_indices.add_argument("--n", type=_positive, required=True, help="chain parameter")
    p_indices.add_argument("--kind", choices=("crossed", "plain"), default="crossed")
    p_indices.add_argument("--format", choices=("json", "csv"), default="json")
    p_indices.add_argument("--out", help="write output to a file instead of stdout")
    p_indices.set_defaults(handler=_cmd_indices)

    p_verify = sub.add_parser("verify", help="run the claim-by-claim verification matrix")
    p_verify.add_argument("--from", dest="start", type=_positive, default=1)
    p_verify.add_argument("--to", dest="stop", type=_positive, default=6)
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.add_argument("--out")
    p_verify.set_defaults(handler=_cmd_verify)

    p_table = sub.add_parser("table", help="reproduce a printed reference table")
    p_table.add_argument("which", type=int, choices=(1, 2, 3),
                         help="1: Kirchhoff, 2: degree-Kirchhoff, 3: spanning trees")
    p_table.add_argument("--to", dest="stop", type=_positive, default=None,
                         help="last row (default: the printed range)")
    p_table.add_argument("--format", choices=("json", "csv"), default="csv")
    p_table.add_argument("--out")
    p_table.set_defaults(handler=_cmd_table)

    p_bench = sub.add_parser("bench", help="time closed forms vs the exact oracles")
    p_bench.add_argument("--n", dest="sizes", type=_size_list, default=[1, 5, 10, 20],
                         help="comma-separated chain sizes")
    p_bench.add_argument("--oracle-limit", type=_positive, default=24,
                         help="largest size at which the oracle bundle runs")
    p_bench.add_argument("--format", choices=("json", "csv"), default="json")
    p_bench.add_argument("--out")
    p_bench.set_defaults(handler=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"chaindex: error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
