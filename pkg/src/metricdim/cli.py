"""``metricdim`` command line.

Exit codes: 0 success, 1 a theorem/refutation check failed, 2 usage error,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import families as fam
from .graph import (
    DisconnectedGraphError,
    GraphError,
    all_pairs_distances,
    complete_graph,
    cycle_graph,
    path_graph,
)
from .io import parse_label_list, read_graph, write_graph
from .resolving import default_threads, is_resolving_set, metric_dimension_exact, witness_pair

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

FAMILY_ALIASES = {"grid-corona": fam.GRID, "kn-pm-corona": fam.COMPLETE}
BUILDERS = ("grid-corona", "kn-pm-corona", "path", "cycle", "complete")


class UsageError(Exception):
    pass


def int_range(text: str) -> range:
    """``"3..6"`` -> range(3, 7); a bare ``"4"`` is a one-element range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _check_cap(order: int) -> None:
    cap = fam.size_cap()
    if order > cap:
        raise fam.SizeCapExceeded(f"instance has {order} vertices, cap is {cap} (set METRICDIM_SIZE_CAP)")


def _table(header: Sequence[str], rows: list[Sequence]) -> str:
    cells = [list(map(str, header))] + [[("-" if c is None else str(c)) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    out = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    out.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(out)


def cmd_build(args) -> int:
    kind = args.family
    if kind in FAMILY_ALIASES:
        if args.m is None:
            raise UsageError(f"--m is required for {kind}")
        g = fam.family_instance(FAMILY_ALIASES[kind], args.n, args.m).graph
    else:
        g = {"path": path_graph, "cycle": cycle_graph, "complete": complete_graph}[kind](args.n)
    label_file = write_graph(g, args.out)
    _emit(
        args,
        {"out": str(args.out), "labels": str(label_file), "order": g.order, "edges": g.num_edges()},
        f"wrote {args.out} ({g.order} vertices, {g.num_edges()} edges) and {label_file}",
    )
    return EXIT_OK


def cmd_dim(args) -> int:
    g = read_graph(args.inp)
    _check_cap(g.order)
    labels = [str(lab) for lab in g.labels]

    on_fail = None
    if args.verbose:
        def on_fail(s, pair):
            names = ", ".join(labels[v] for v in s)
            print(f"fail {{{names}}}: {labels[pair[0]]} ~ {labels[pair[1]]}", file=sys.stderr)

    cert = metric_dimension_exact(g, threads=args.threads, on_fail=on_fail)
    _emit(args, cert.to_dict(labels, args.timing), cert.to_text(labels, args.timing))
    return EXIT_OK


def cmd_check_set(args) -> int:
    g = read_graph(args.inp)
    s = [g.vertex(lab) for lab in parse_label_list(args.set)]
    dm = all_pairs_distances(g)
    ok = is_resolving_set(dm, s)
    pair = witness_pair(dm, s)
    names = [str(g.label(v)) for v in s]
    payload = {"set": names, "resolving": ok, "witness_pair": None}
    text = f"set {{{', '.join(names)}}}: {'resolving' if ok else 'NOT resolving'}"
    if pair is not None:
        a, b = (str(g.label(v)) for v in pair)
        rep = [int(dm[pair[0], t]) for t in s]
        payload["witness_pair"] = [a, b]
        payload["shared_representation"] = rep
        text += f"\nwitness pair: {a} and {b} share r = ({', '.join(map(str, rep))})"
    _emit(args, payload, text)
    return EXIT_OK


def _theorem_cells(family: str, ns, ms) -> list[tuple[int, int]]:
    cells = [(n, m) for n in ns for m in ms]
    for n, m in cells:
        if not fam.in_theorem_range(family, n, m):
            raise UsageError(f"({n},{m}) is outside the theorem range n >= 3, m >= 2")
        _check_cap(2 * n * m)
    return cells


def cmd_verify(args) -> int:
    family = fam.GRID if args.theorem == 3 else fam.COMPLETE
    cells = _theorem_cells(family, range(args.n_min, args.n_max + 1), range(args.m_min, args.m_max + 1))
    if not cells:
        raise UsageError("empty (n, m) range")
    reports = [fam.verify_theorem(family, n, m, threads=args.threads) for n, m in cells]
    rows = [
        (
            f"{family}", r.instance.n, r.instance.m, r.claimed_dim, r.exact.dim,
            "ok" if r.construction_resolves else "FAIL",
            None if r.formula_matches_bfs is None else ("ok" if r.formula_matches_bfs else "FAIL"),
            "pass" if r.passed else "FAIL",
        )
        for r in reports
    ]
    all_ok = all(r.passed for r in reports)
    text = _table(("family", "n", "m", "claimed", "exact", "construction-ok", "formula-ok", "result"), rows)
    text += f"\nTheorem {args.theorem}: {sum(r.passed for r in reports)}/{len(reports)} instances pass"
    _emit(args, {"theorem": args.theorem, "passed": all_ok, "cells": [r.to_dict() for r in reports]}, text)
    return EXIT_OK if all_ok else EXIT_MISMATCH


def cmd_refute(args) -> int:
    for n in args.n:
        if n < 3:
            raise UsageError("refute needs n >= 3")
        _check_cap(4 * n)
    reports = [r for n in args.n for r in fam.refute_old_theorems(n, threads=args.threads)]
    rows = [
        (r.instance.family, r.instance.n, r.instance.m, r.old_claim, r.true_dim,
         r.to_dict()["exhausted_size"], r.to_dict()["failing_subsets"], r.status)
        for r in reports
    ]
    text = _table(("family", "n", "m", "old", "exact", "exhausted", "failing", "status"), rows)
    all_ok = all(r.passed for r in reports)
    _emit(args, {"passed": all_ok, "reports": [r.to_dict() for r in reports]}, text)
    return EXIT_OK if all_ok else EXIT_MISMATCH


def cmd_sweep(args) -> int:
    family = FAMILY_ALIASES[args.family]
    thm = 3 if family == fam.GRID else 4
    cells = [(n, m) for n in args.n for m in args.m]
    for n, m in cells:
        if n < 1 or m < 1:
            raise UsageError("sweep needs n, m >= 1")
        _check_cap(2 * n * m)
    out, rows, mismatch = [], [], False
    for n, m in cells:
        cert = metric_dimension_exact(fam.family_instance(family, n, m).graph, threads=args.threads)
        in_range = fam.in_theorem_range(family, n, m)
        claimed = fam.claimed_dim(family, n, m) if in_range else None
        if in_range and claimed != cert.dim:
            mismatch = True
        note = "" if in_range else f"outside Thm {thm} range"
        out.append({"n": n, "m": m, "exact": cert.dim, "claimed": claimed, "in_range": in_range, "note": note})
        rows.append((n, m, cert.dim, claimed, note or ("ok" if claimed == cert.dim else "MISMATCH")))
    text = _table(("n", "m", "exact", "claimed", "note"), rows)
    _emit(args, {"family": args.family, "cells": out}, text)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="metricdim", description="Exact metric dimension of corona product graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--threads", type=int, default=default_threads(), help="solver worker threads")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="write a graph as edge list + labels")
    b.add_argument("--family", choices=BUILDERS, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--m", type=int)
    b.add_argument("--out", required=True)
    b.set_defaults(func=cmd_build)

    d = sub.add_parser("dim", parents=[common], help="exact metric dimension certificate")
    d.add_argument("--in", dest="inp", required=True)
    d.add_argument("--verbose", action="store_true", help="stream every failing subset to stderr")
    d.add_argument("--timing", action="store_true", help="include solver wall time")
    d.set_defaults(func=cmd_dim)

    c = sub.add_parser("check-set", parents=[common], help="is a landmark set resolving?")
    c.add_argument("--in", dest="inp", required=True)
    c.add_argument("--set", required=True, help='e.g. "v(1,1),v(1,2),v(3,2)"')
    c.set_defaults(func=cmd_check_set)

    v = sub.add_parser("verify", parents=[common], help="check Theorem 3 or 4 over a parameter box")
    v.add_argument("--theorem", type=int, choices=(3, 4), required=True)
    v.add_argument("--n-min", type=int, default=3)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--m-min", type=int, default=2)
    v.add_argument("--m-max", type=int, required=True)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("refute", parents=[common], help="check the earlier m = 2 claims")
    r.add_argument("--n", type=int_range, required=True, help="N or A..B")
    r.set_defaults(func=cmd_refute)

    s = sub.add_parser("sweep", parents=[common], help="exact dims over an (n, m) box")
    s.add_argument("--family", choices=sorted(FAMILY_ALIASES), required=True)
    s.add_argument("--n", type=int_range, required=True)
    s.add_argument("--m", type=int_range, required=True)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("metricdim: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except fam.SizeCapExceeded as exc:
        print(f"metricdim: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, fam.TheoremRangeError, DisconnectedGraphError, GraphError, ValueError, OSError) as exc:
        print(f"metricdim: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
