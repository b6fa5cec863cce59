"""Command-line entry point.

Exit codes: 0 all checks pass, 1 a check failed (witnesses printed),
2 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import io
from .coloring import (DEFAULT_EFFORT, CHROMATIC_BUDGET, choice_number_bounds, choosable,
                       chromatic_exact, multipartite, verify_witness)
from .construction import InvalidK, build_construction, expected_counts
from .field import FieldError
from .graph import BudgetExceeded, GraphError, complete_bipartite, cycle_graph, power, star_graph
from .plane import plane_check, plane_for_order
from .report import VerificationReport, dump_reports
from .verify import (Disconnected, KNotOddOrTooSmall, random_suite, verify_construction,
                     verify_counts, verify_fk_bound, verify_lemma1, verify_lemma2,
                     verify_upper_chain)

DEFAULT_SEED = 0xC0FFEE


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(reports: list[VerificationReport], args, meta: dict) -> int:
    timing = getattr(args, "timing", False)
    if args.format == "json":
        text = dump_reports(reports, meta, timing)
    else:
        text = "\n".join(r.to_text(timing) for r in reports) + "\n"
        ok = all(r.passed for r in reports)
        text += f"{'ALL PASS' if ok else 'FAILURES'}: {sum(r.passed for r in reports)}/" \
                f"{len(reports)} checks passed (seed={meta.get('seed')})\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.passed for r in reports) else 1


def _config(args, **extra) -> dict:
    cfg = {k: v for k, v in vars(args).items() if k not in ("func", "timing")}
    cfg.update(extra)
    return {"config": cfg, "seed": getattr(args, "seed", DEFAULT_SEED)}


# -- subcommands --------------------------------------------------------------

def cmd_plane(args) -> int:
    plane = plane_for_order(args.q)
    if args.dump:
        Path(args.dump).write_text(io.format_plane(plane))
    return _emit(plane_check(plane), args, _config(args))


def cmd_build(args) -> int:
    G = build_construction(args.q, args.k)
    prefix = args.out or f"G_q{args.q}_k{args.k}"
    paths = io.write_construction(G, prefix)
    exp = expected_counts(args.q, args.k)
    print(f"n={G.n} k={G.k}")
    print(f"vertices {G.graph.n} (n^3 k + n = {exp['vertices']})")
    print(f"edges {G.graph.m}")
    print(f"parts {len(G.parts)} (k n^2 + 1 = {exp['parts']}), "
          f"sizes {sorted({len(p.vertices) for p in G.parts})}")
    print(f"max degree {G.graph.max_degree()}")
    for p in paths:
        print(f"wrote {p}")
    ok = (G.graph.n == exp["vertices"] and len(G.parts) == exp["parts"]
          and all(len(p.vertices) == G.n for p in G.parts))
    return 0 if ok else 1


def _read_graph(path):
    return io.parse_graph(Path(path).read_text())


def cmd_power(args) -> int:
    g = _read_graph(args.input)
    text = io.format_graph(power(g, args.k, workers=args.threads))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _construction_from_args(args):
    if args.graph and args.parts:
        return io.read_construction(args.graph, args.parts, args.labels, args.k)
    if args.q is not None and args.k is not None:
        return build_construction(args.q, args.k)
    raise UsageError("give --q and --k, or --graph and --parts")


def cmd_verify(args) -> int:
    which = args.which
    reports = []
    if which in ("upper", "fk") and args.graph and not args.parts:
        g = _read_graph(args.graph)
        if args.k is None:
            raise UsageError("--k is required")
        gid = Path(args.graph).name
        if which == "upper":
            reports.append(verify_upper_chain(g, args.k, gid))
        else:
            reports.append(verify_fk_bound(g, args.k, gid))
        return _emit(reports, args, _config(args))

    G = _construction_from_args(args)
    tag = f"G(n={G.n},k={G.k})"
    if which == "all":
        reports = verify_construction(G)
    elif which == "lemma1":
        reports = [verify_lemma1(G, cross_check=args.cross_check)]
    elif which == "lemma2":
        reports = [verify_lemma2(G, cross_check=args.cross_check)]
    elif which == "counts":
        reports = [verify_counts(G, power(G.graph, 4 * G.k, workers=args.threads))]
    elif which == "upper":
        reports = [verify_upper_chain(G.graph, kk, tag) for kk in args.odd_k]
    elif which == "fk":
        reports = [verify_fk_bound(G.graph, G.k, tag)]
    return _emit(reports, args, _config(args))


def cmd_color(args) -> int:
    g = _read_graph(args.input)
    print(chromatic_exact(g, args.budget))
    return 0


def cmd_choose(args) -> int:
    g = _read_graph(args.input)
    witness_path = args.witness or f"{args.input}.lists"
    if args.t is None:
        b = choice_number_bounds(g, args.effort)
        print(f"lower {b.lower} upper {b.upper} {'exact' if b.exact else 'not-exact'}")
        if b.witness is not None:
            Path(witness_path).write_text(io.format_lists(b.witness))
            print(f"witness written to {witness_path}")
        return 0
    res = choosable(g, args.t, args.effort)
    print(res.verdict)
    print(json.dumps(res.certificate, sort_keys=True))
    if res.witness is not None:
        Path(witness_path).write_text(io.format_lists(res.witness))
        print(f"witness written to {witness_path}")
    return 0


def cmd_verify_witness(args) -> int:
    g = _read_graph(args.graph)
    lists = io.parse_lists(Path(args.lists).read_text())
    if verify_witness(g, lists):
        print("verified: no proper colouring from these lists")
        return 0
    print("NOT a witness: a proper colouring from these lists exists")
    return 1


def cmd_report(args) -> int:
    reports: list[VerificationReport] = []
    for q in args.q_list:
        reports.extend(plane_check(plane_for_order(q)))
    for q in args.q_list:
        for k in args.k_list:
            reports.extend(verify_construction(build_construction(q, k)))
    reports.append(verify_upper_chain(cycle_graph(7), 3, "C7"))
    reports.append(verify_upper_chain(star_graph(4), 3, "K1,4"))
    reports.extend(random_suite(args.fuzz, args.seed))
    reports.extend(choosability_exhibits(args.effort))
    return _emit(reports, args, _config(args))


def choosability_exhibits(effort: int = DEFAULT_EFFORT) -> list[VerificationReport]:
    """The chi_l > chi gap on K_{2,4}, plus the C_4 and K_{3,3} reference cases."""
    out = []
    for name, g, want in (("K2,4", complete_bipartite(2, 4), (3, 3, True)),
                          ("C4", cycle_graph(4), (2, 2, True)),
                          ("K3,3", complete_bipartite(3, 3), (3, 4, False)),
                          ("K2*2", multipartite(2, 2), (2, 2, True))):
        chi = chromatic_exact(g)
        b = choice_number_bounds(g, effort)
        bad = []
        if b.as_tuple() != want:
            bad.append({"got": list(b.as_tuple()), "want": list(want)})
        if b.witness is not None and not verify_witness(g, b.witness):
            bad.append({"witness": [list(l) for l in b.witness], "reason": "colourable"})
        out.append(VerificationReport.make(
            "choice_bounds", {"graph": name, "effort": effort}, bad,
            values={"chi": chi, "lower": b.lower, "upper": b.upper, "exact": b.exact}))
    return out


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="powerchoice", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")
            p.add_argument("--timing", action="store_true",
                           help="include elapsed times (makes output run-dependent)")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        p.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)

    p = sub.add_parser("plane", help="build AG(2,q) and check the plane axioms")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--dump", help="write the plane's lines to this file")
    p.add_argument("--out", help="write the report here instead of stdout")
    common(p)
    p.set_defaults(func=cmd_plane)

    p = sub.add_parser("build", help="build G for (q, k) and write graph/parts/labels")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="output prefix (default G_q<q>_k<k>)")
    common(p, fmt=False)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("power", help="k-th power of a graph file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    common(p, fmt=False)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("verify", help="run the lemma, count and bound checks")
    p.add_argument("which", choices=("lemma1", "lemma2", "counts", "upper", "fk", "all"))
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--graph")
    p.add_argument("--parts")
    p.add_argument("--labels")
    p.add_argument("--odd-k", type=_int_list, default=[3, 5],
                   help="odd powers for 'upper' on a construction graph")
    p.add_argument("--cross-check", action="store_true",
                   help="also materialise G^{4k} and compare")
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("color", help="exact chromatic number")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--budget", type=int, default=CHROMATIC_BUDGET)
    common(p, fmt=False)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("choose", help="choosability verdict or choice-number bounds")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--t", type=int, help="list size; omit for bounds on the choice number")
    p.add_argument("--effort", type=int, default=DEFAULT_EFFORT)
    p.add_argument("--witness", help="witness output path (default <in>.lists)")
    common(p, fmt=False)
    p.set_defaults(func=cmd_choose)

    p = sub.add_parser("verify-witness", help="re-check a bad list assignment by brute force")
    p.add_argument("--graph", required=True)
    p.add_argument("--lists", required=True)
    common(p, fmt=False)
    p.set_defaults(func=cmd_verify_witness)

    p = sub.add_parser("report", help="consolidated run over a (q, k) grid plus fuzz suites")
    p.add_argument("--q-list", type=_int_list, default=[2, 3])
    p.add_argument("--k-list", type=_int_list, default=[2, 3])
    p.add_argument("--fuzz", type=int, default=20, help="number of seeded random graphs")
    p.add_argument("--effort", type=int, default=DEFAULT_EFFORT)
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, io.FormatError, OSError, FieldError, InvalidK, GraphError,
            KNotOddOrTooSmall, Disconnected, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
