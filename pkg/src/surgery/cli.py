"""Command-line front end.

Exit codes: 0 pass, 1 fail (or error), 2 inconclusive pass.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys

from . import chains
from .adjacency import integral_adjacency_check, necessary_conditions
from .checks import CHECKS, run_checks
from .corpus import resolve
from .enumeration import enumerate_pair_solutions, enumerate_triple_obstructions
from .homology import h1
from .links import load_link, sublink


def _order(g) -> str:
    return "infinite" if g.rank else str(g.order)


def cmd_h1(args, out) -> int:
    link, _ = load_link(resolve(args.link))
    targets = [tuple(range(link.n))]
    if args.sublinks:
        targets = [
            c
            for k in range(1, link.n + 1)
            for c in itertools.combinations(range(link.n), k)
        ]
    rows = []
    for idx in targets:
        g = h1(sublink(link, idx))
        rows.append((idx, g))
    if args.json:
        payload = [{"components": list(idx), "h1": g.to_dict(), "order": _order(g)} for idx, g in rows]
        out.write(json.dumps(payload if args.sublinks else payload[0], indent=2) + "\n")
        return 0
    for idx, g in rows:
        prefix = f"[{','.join(link.label(i) for i in idx)}] " if args.sublinks else ""
        out.write(f"{prefix}H1 = {g} (order {_order(g)})\n")
    return 0


def cmd_check(args, out) -> int:
    link, doc = load_link(resolve(args.link))
    if args.integral:
        report = integral_adjacency_check(link)
    else:
        hs = args.homology_sphere or bool(doc.get("homology_sphere", False))
        report = necessary_conditions(link, homology_sphere=hs)
    out.write((report.to_json() if args.json else str(report)) + "\n")
    return report.verdict.exit_code


def cmd_chain(args, out) -> int:
    chain = chains.ChainPresentation.parse(args.coeffs)
    if args.lens:
        lens = chains.chain_to_lens(chain)
        text = str(lens) if lens.p < 2 else f"{lens} = -{lens.mirror()}"
        payload = {"p": lens.p, "q": lens.q, "text": text}
    elif args.dual:
        duals = chains.blow_down_sequence_oracle(chain)
        text = ",".join(str(s) for s in duals)
        payload = {"dual_slopes": [str(s) for s in duals]}
    else:
        reduced, script = chains.reduce_chain(chain)
        text = str(reduced) or "(empty: S^3)"
        text += " (irreducible)" if not script else f" (via: {'; '.join(script)})"
        payload = {"chain": str(reduced), "moves": script}
    out.write((json.dumps(payload) if args.json else text) + "\n")
    return 0


def _write_rows(rows, header, fmt, out):
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        out.write(buf.getvalue())
    else:
        for row in rows:
            out.write(json.dumps(dict(zip(header, row))) + "\n")


def cmd_enumerate(args, out) -> int:
    if args.kind == "pairs":
        rows = enumerate_pair_solutions(args.bound_l, args.bound_q)
        _write_rows(rows, ["lk", "q1", "q2"], args.format, out)
    else:
        rows = [
            (*o.linking, *(str(s) for s in o.slopes), "inf" if o.order == float("inf") else o.order)
            for o in enumerate_triple_obstructions(args.bound_q)
        ]
        _write_rows(rows, ["lk12", "lk13", "lk23", "s1", "s2", "s3", "order"], args.format, out)
    return 0


def cmd_verify(args, out) -> int:
    if args.list:
        out.write("".join(f"{name}\n" for name in CHECKS))
        return 0
    results = run_checks()
    for r in results:
        out.write(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}\n")
    passed = sum(r.ok for r in results)
    out.write(f"{passed}/{len(results)} reference checks pass\n")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="surgery", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("h1", help="first homology of a surgered link")
    p.add_argument("link", help="JSON link spec (path or corpus name)")
    p.add_argument("--sublinks", action="store_true", help="every nonempty sublink too")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("check", help="adjacency conditions on a dual link")
    p.add_argument("link")
    p.add_argument("--integral", action="store_true", help="integral-slope characterization")
    p.add_argument(
        "--homology-sphere", action="store_true", help="require the full surgery to be a homology sphere"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("chain", help="linear chain calculus")
    p.add_argument("coeffs", help="comma separated slopes, e.g. 1/2,1,1/2")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--reduce", action="store_true", help="shorten by blow-downs (default)")
    mode.add_argument("--lens", action="store_true", help="identify the lens space")
    mode.add_argument("--dual", action="store_true", help="dual slopes of a presentation of S^3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("enumerate", help="bounded brute-force searches")
    p.add_argument("kind", choices=["pairs", "triples"])
    p.add_argument("--bound-l", type=int, default=10)
    p.add_argument("--bound-q", type=int, default=10)
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="recompute the reference example values")
    p.add_argument("--list", action="store_true", help="list check names only")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # keep exit code 2 for inconclusive verdicts, not usage errors
        return 1 if exc.code else 0
    try:
        return args.func(args, out)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
