"""Command-line front end.

Subcommands: classify, hilbert, gb, crossvalidate, witness, enumerate.
Exit codes: 0 success/agreement, 1 usage or parse error, 2 mathematical
discrepancy (engine vs structural classifier mismatch, violated component
conditions, truncated completion in a sweep, or a failed witness check).
JSON output is schema-stable and byte-deterministic for fixed inputs and
flags; wall-clock timings are only emitted behind --timings.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .automaton import build_automaton, hilbert_prefix
from .graphs import enumerate_graphs, parse_graph
from .groebner import buchberger
from .growth import find_free_pair_violation, free_pair_window_bound, search_free_pair
from .ncpoly import format_word, parse_word
from .presentation import build_presentation
from .report import analyze, cross_validate

__all__ = ["main"]

OK, USAGE_ERROR, DISCREPANCY = 0, 1, 2
DEFAULT_HILBERT_CAP = 200


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _write_json(path: str, payload: dict) -> None:
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _add_engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--degree-bound", type=int, default=None, metavar="N",
                   help="completion degree bound (default 2n + 8)")
    p.add_argument("--t", default="symbolic", metavar="MODE",
                   help="'symbolic' (default) or a rational in (0,1) such as 1/2")


def _t_mode(raw: str):
    return "symbolic" if raw == "symbolic" else raw


def _cmd_classify(args) -> int:
    g = parse_graph(args.graph)
    report = analyze(
        g,
        method=args.method,
        degree_bound=args.degree_bound,
        t_mode=_t_mode(args.t),
        max_degree=args.max_degree,
    )
    print(f"graph:    {g}")
    print(f"pruned:   {report.pruned}  (removed leaves: {list(report.removed_leaves) or 'none'})")
    print(f"nu:       {report.nu}")
    v = report.theorem
    print(f"theorem:  {v.coarse}  branch {v.branch}")
    if v.witness is not None:
        print(f"          witness {v.witness_pattern} via {dict(v.witness.mapping)}")
    if report.groebner is not None:
        res = report.groebner
        print(f"groebner: basis {res.basis_size()}, obstructions {len(res.obstructions)}, "
              f"degree bound {res.degree_bound}, complete {res.complete}")
        growth = report.growth
        extra = ""
        if growth.coarse == "finite":
            extra = f", dimension {growth.dimension} (unital; {growth.dimension - 1} without the empty word)"
        elif growth.coarse == "polynomial":
            extra = f", gk degree {growth.gk_degree}"
        caveat = " [upper bound only]" if growth.upper_bound_only else ""
        print(f"growth:   {growth.coarse}{extra}{caveat}")
        print(f"hilbert:  {report.hilbert}")
        if report.free_pair is not None:
            fp = report.free_pair
            print(f"free pair: {format_word(fp.q1)} | {format_word(fp.q2)} "
                  f"(window bound {fp.window_bound})")
    if report.discrepancies:
        print("DISCREPANCIES:")
        for d in report.discrepancies:
            print(f"  - {d}")
    else:
        print("no discrepancies")
    if args.json:
        _write_json(args.json, report.to_json_dict(include_timings=args.timings))
    return DISCREPANCY if report.discrepancy else OK


def _cmd_hilbert(args) -> int:
    g = parse_graph(args.graph)
    if args.max_degree > args.cap:
        raise SystemExit(_usage_error(f"max degree {args.max_degree} exceeds the cap {args.cap}"))
    pres = build_presentation(g, _t_mode(args.t))
    result = buchberger(pres, args.degree_bound)
    aut = build_automaton(result.obstructions, pres.alphabet_size())
    prefix = hilbert_prefix(aut, args.max_degree)
    cumulative = 0
    print(f"graph: {g}   (complete basis: {result.complete})")
    if not result.complete:
        print("warning: completion truncated; every count is an upper bound only")
    print(f"{'degree':>6}  {'words':>12}  {'cumulative':>12}")
    for degree, count in enumerate(prefix):
        cumulative += count
        print(f"{degree:>6}  {count:>12}  {cumulative:>12}")
    if args.json:
        _write_json(args.json, {
            "graph": g.to_json_dict(),
            "t": "symbolic" if args.t == "symbolic" else f"t={args.t}",
            "complete": result.complete,
            "prefix": prefix,
            "cumulative": _cumsum(prefix),
        })
    return OK


def _cumsum(seq):
    out, acc = [], 0
    for x in seq:
        acc += x
        out.append(acc)
    return out


def _cmd_gb(args) -> int:
    g = parse_graph(args.graph)
    pres = build_presentation(g, _t_mode(args.t))
    result = buchberger(pres, args.degree_bound)
    obs = sorted(result.obstructions, key=lambda w: (len(w), w))
    print(f"graph: {g}")
    print(f"basis size: {result.basis_size()}   complete: {result.complete}   "
          f"degree bound: {result.degree_bound}")
    print(f"obstructions ({len(obs)}):")
    for w in obs:
        print(f"  {format_word(w)}")
    if args.dump:
        print("basis elements:")
        for p in result.basis:
            print(f"  {p.format()}")
    if args.json:
        payload = result.to_json_dict()
        payload["graph"] = g.to_json_dict()
        if args.dump:
            payload["basis"] = [p.format() for p in result.basis]
        _write_json(args.json, payload)
    return OK


def _cmd_crossvalidate(args) -> int:
    if args.max_leaves > 6 and not args.allow_large:
        raise SystemExit(_usage_error(
            f"max leaves {args.max_leaves} needs --allow-large (sweeps beyond 6 are expensive)"))
    if args.max_leaves > 7:
        raise SystemExit(_usage_error("enumeration of classes is available up to 7 leaves"))
    sweep = cross_validate(args.max_leaves, degree_bound=args.degree_bound, t_mode=_t_mode(args.t))
    print(f"classes up to {args.max_leaves} leaves: {len(sweep.rows)} "
          f"({sweep.engine_runs} distinct pruned classes run through the engine)")
    matrix = sweep.agreement_matrix()
    labels = ("finite", "polynomial", "exponential")
    corner = "theorem / engine"
    print(f"{corner:>18}  " + "  ".join(f"{l:>12}" for l in labels))
    for a in labels:
        print(f"{a:>18}  " + "  ".join(f"{matrix[a][b]:>12}" for b in labels))
    print(f"all complete: {sweep.all_complete}   all agree: {sweep.all_agree}")
    for row in sweep.disagreements():
        print(f"DISAGREEMENT: {row.graph} theorem={row.theorem.coarse} "
              f"engine={row.engine_growth.coarse} gk={row.engine_growth.gk_degree} "
              f"complete={row.complete} nu_violations={row.nu_violations}")
    if args.json:
        _write_json(args.json, sweep.to_json_dict())
    return OK if sweep.all_agree and sweep.all_complete else DISCREPANCY


def _cmd_witness(args) -> int:
    g = parse_graph(args.graph)
    pres = build_presentation(g, _t_mode(args.t))
    result = buchberger(pres, args.degree_bound)
    if not result.complete:
        print("warning: completion truncated; obstruction set is partial")
    if args.check:
        q1, q2 = (parse_word(w) for w in args.check)
        violation = find_free_pair_violation(q1, q2, result.obstructions)
        if violation is None:
            bound = free_pair_window_bound(q1, q2, result.obstructions)
            print(f"verified: all block concatenations of {format_word(q1)} and "
                  f"{format_word(q2)} are normal (window bound {bound})")
            if args.json:
                _write_json(args.json, {
                    "graph": g.to_json_dict(), "verified": True,
                    "q1": list(q1), "q2": list(q2),
                    "window_bound": bound,
                })
            return OK
        choice, word, pos, obstruction = violation
        seq = " ".join("q1" if c == 0 else "q2" for c in choice)
        print(f"NOT free: block sequence [{seq}] spells {format_word(word)}")
        print(f"  obstruction {format_word(obstruction)} occurs at position {pos}")
        if args.json:
            _write_json(args.json, {
                "graph": g.to_json_dict(), "verified": False,
                "q1": list(q1), "q2": list(q2),
                "violating_blocks": list(choice),
                "violating_word": list(word),
                "position": pos,
                "obstruction": list(obstruction),
            })
        return DISCREPANCY
    aut = build_automaton(result.obstructions, pres.alphabet_size())
    cert = search_free_pair(aut, args.max_block_len)
    if cert is None:
        print("none")
        if args.json:
            _write_json(args.json, {"graph": g.to_json_dict(), "certificate": None})
        return OK
    q1_ix = ",".join(map(str, cert.q1))
    q2_ix = ",".join(map(str, cert.q2))
    print(f"free pair: q1 = {format_word(cert.q1)}   q2 = {format_word(cert.q2)} "
          f"(window bound {cert.window_bound})")
    print(f"  as index sequences: {q1_ix}   {q2_ix}")
    if args.json:
        _write_json(args.json, {"graph": g.to_json_dict(), "certificate": cert.to_json_dict()})
    return OK


def _cmd_enumerate(args) -> int:
    graphs = enumerate_graphs(args.n)
    print(f"{len(graphs)} isomorphism classes on {args.n} leaves:")
    for g in graphs:
        print(f"  {g}")
    if args.json:
        _write_json(args.json, {
            "n": args.n,
            "class_count": len(graphs),
            "classes": [g.to_json_dict() for g in graphs],
        })
    return OK


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return USAGE_ERROR


def _build_parser() -> _Parser:
    parser = _Parser(prog="tlstar", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify growth by both methods and reconcile")
    p.add_argument("graph", help="graph text, e.g. \"K(5; 1-2,2-3,4-5)\"")
    p.add_argument("--method", choices=("both", "theorem", "groebner"), default="both")
    p.add_argument("--max-degree", type=int, default=12, metavar="N",
                   help="length of the reported normal-word count prefix")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings in JSON")
    _add_engine_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("hilbert", help="normal-word counts per degree")
    p.add_argument("graph")
    p.add_argument("max_degree", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_HILBERT_CAP,
                   help=f"safety cap on max_degree (default {DEFAULT_HILBERT_CAP})")
    p.add_argument("--json", metavar="PATH")
    _add_engine_flags(p)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("gb", help="compute the Groebner basis and obstruction set")
    p.add_argument("graph")
    p.add_argument("--dump", action="store_true", help="print every basis element")
    p.add_argument("--json", metavar="PATH")
    _add_engine_flags(p)
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("crossvalidate", help="sweep all classes and compare classifiers")
    p.add_argument("--max-leaves", type=int, default=6)
    p.add_argument("--allow-large", action="store_true",
                   help="permit sweeps beyond 6 leaves (up to 7)")
    p.add_argument("--json", metavar="PATH")
    _add_engine_flags(p)
    p.set_defaults(func=_cmd_crossvalidate)

    p = sub.add_parser("witness", help="search for or verify a free pair of words")
    p.add_argument("graph")
    p.add_argument("--max-block-len", type=int, default=12)
    p.add_argument("--check", nargs=2, metavar=("Q1", "Q2"),
                   help="verify this pair (comma-separated indices, e.g. 0,1,2,0,4,5)")
    p.add_argument("--json", metavar="PATH")
    _add_engine_flags(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("enumerate", help="list isomorphism classes of dashed configurations")
    p.add_argument("n", type=int)
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
