"""``tutte`` command line."""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import antimatroid as am
from .bipoly import i_profile
from .constructions import contract, delete, dual, free_coextension, free_extension, truncate
from .errors import ParseError, TutteError
from .fixtures import run_fixtures
from .identities import (
    IdentityReport,
    brylawski_check,
    brylawski_clauses,
    expected_profile,
    i_k_trace,
    table4_identities,
)
from .io import load_spec, rank_table_json
from .ranked import is_antimatroid, is_greedoid, is_matroid
from .realizability import SearchBudget, find_matroids_with_tutte, is_greedoid_basis_family
from .tutte import compute, tutte_expansion


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False, default=str))
    else:
        print(text)


def _structure(spec, what):
    if spec.ranked is None:
        raise ParseError(f"{what} needs a structure, not a {spec.kind}")
    return spec.ranked


def _pivot_order(args, G):
    if args.seed is None:
        return None
    order = list(G.labels)
    random.Random(args.seed).shuffle(order)
    return order


def _budget(args):
    return SearchBudget(node_limit=args.budget) if args.budget else SearchBudget()


# -- commands ---------------------------------------------------------------


def cmd_compute(args) -> int:
    spec = load_spec(args.file)
    if spec.is_poly:
        _emit(args, {"tutte": spec.poly.to_json()}, f"T = {spec.poly}")
        return 0
    G = spec.ranked
    res = compute(G, cross_check=args.cross_check, order=_pivot_order(args, G))
    payload = res.to_json(emit_s=args.emit_s_poly)
    lines = [f"T = {res.tutte}"]
    if args.emit_s_poly:
        lines.append(f"S = {res.s_poly.render(('u', 'v'))}")
    if args.emit_rank_table:
        payload["rank_table"] = rank_table_json(G)
        lines.append(json.dumps(payload["rank_table"]))
    if res.cross_checked:
        lines.append("expansion and recursion agree")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_classify(args) -> int:
    G = _structure(load_spec(args.file), "classify")
    verdicts = {
        "ranked": G.axioms(),
        "greedoid": is_greedoid(G),
        "matroid": is_matroid(G),
        "antimatroid": is_antimatroid(G),
    }
    flags = {k: bool(v) for k, v in verdicts.items()}
    flags["isthmus_free"] = not G.isthmuses()
    witnesses = {k: v.witness for k, v in verdicts.items() if not v}
    payload = {**flags, "witnesses": witnesses, "isthmuses": G.isthmuses()}
    lines = [f"{k:13s} {'yes' if v else 'no'}" + (f"   {witnesses[k]}" if k in witnesses else "") for k, v in flags.items()]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_identities(args) -> int:
    spec = load_spec(args.file)
    if spec.is_poly:
        p = spec.poly
        n = args.n if args.n is not None else spec.extra.get("n")
        r = args.r if args.r is not None else spec.extra.get("r")
        if n is None or r is None:
            raise ParseError("a bare polynomial needs n and r (fields or --n/--r)")
        got = i_profile(p, n)
        want = expected_profile(n, r)
        rep = IdentityReport(n, r, got, want, got == want)
        if args.brylawski:
            rep.brylawski = brylawski_clauses(p, n, r)
    else:
        G = spec.ranked
        p = tutte_expansion(G)
        n, r = G.n, G.rS
        got = i_profile(p, n)
        rep = IdentityReport(n, r, got, expected_profile(n, r), got == expected_profile(n, r))
        if args.brylawski:
            rep.brylawski = brylawski_check(G) if is_matroid(G) else brylawski_clauses(p, n, r)
    ok = rep.pass_
    payload = rep.to_json()
    lines = [f"n = {n}, r = {r}", "k   I_k   expected"]
    lines += [f"{k:<3d} {v:<5d} {w}" for k, (v, w) in enumerate(zip(rep.i_values, rep.expected))]
    lines.append("simplified relations:")
    for k, parts, total in table4_identities(p):
        lines.append(f"  I_{k}: " + " ".join(f"{lab}={v}" for lab, v in parts) + f"  -> {total}")
    if args.trace_check:
        trace = {k: i_k_trace(p, k, n, max(r, p.dx)) for k in range(n + 1)}
        agree = all(trace[k] == rep.i_values[k] for k in trace)
        payload["trace_check"] = agree
        lines.append(f"trace form agrees: {agree}")
        ok = ok and agree
    if rep.brylawski is not None:
        for c in "123456":
            lines.append(f"clause ({c}): {'pass' if rep.brylawski[c]['pass'] else 'FAIL'}")
        if "warning" in rep.brylawski:
            lines.append(rep.brylawski["warning"])
        ok = ok and all(rep.brylawski[c]["pass"] for c in "123456")
    lines.append("PASS" if ok else "FAIL")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def cmd_convex(args) -> int:
    spec = load_spec(args.file)
    G = _structure(spec, "convex")
    CF = spec.convex if spec.convex is not None else am.convex_family(G)
    at = am.a_table(CF)
    payload = {"n": G.n, "convex_sets": len(CF.convex), "f": list(at.f)}
    lines = [f"{len(CF.convex)} convex sets on {G.n} elements", f"f = {list(at.f)}"]
    ok = True
    if args.a_table:
        payload["a_table"] = [list(r) for r in at.a]
        lines.append("a[i][j] (rows i = size, columns j = interior):")
        lines += [f"  {i}: {list(row)}" for i, row in enumerate(at.a)]
    if args.identities:
        fi = am.family_identities(at, G.n)
        agree = am.tutte_via_convex(CF) == tutte_expansion(G)
        payload["identities"] = {**fi, "general": {str(k): v for k, v in fi["general"].items()}, "convex_expansion": agree}
        lines.append(f"k=0 sum {fi['k0']}, b10 {fi['k1'][0]}, b01 {fi['k1'][1]}, k=2 sum {fi['k2']}")
        lines.append(f"convex expansion agrees with subset expansion: {agree}")
        ok = fi["pass"] and agree
        if spec.source is not None and spec.kind in ("tree_pruning", "poset", "chordal", "points"):
            pred = am.family_beta(spec.source)
            got = {"f_sum": am.f_sum(at), "unique_interior_sum": am.b01_by_points(CF)}
            theorem = got["f_sum"] == pred["f_sum"] and got["unique_interior_sum"] == pred["unique_interior_sum"]
            payload["family"] = {"prediction": pred, "observed": got, "pass": theorem}
            lines.append(
                f"{pred['invariant']} = {pred['value']}: sum (-1)^i i f_i = {got['f_sum']} (predicted {pred['f_sum']}), "
                f"unique-interior sum = {got['unique_interior_sum']} (predicted {pred['unique_interior_sum']})"
            )
            ok = ok and theorem
        lines.append("PASS" if ok else "FAIL")
    if args.unique_interior is not None:
        sets = am.unique_interior_sets(CF, args.unique_interior)
        total = sum((-1) ** bin(C).count("1") for C in sets)
        payload["unique_interior"] = {"element": args.unique_interior, "sets": [list(G.ground.subset(C)) for C in sets], "signed_sum": total}
        lines.append(f"convex sets with unique interior point {args.unique_interior}:")
        lines += [f"  {G.ground.fmt(C)}" for C in sets]
        lines.append(f"signed sum {total}")
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


class _OrderedOp(argparse.Action):
    """Collect minor operations in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        ops = list(getattr(namespace, "ops", None) or [])
        ops.append((self.dest, values))
        namespace.ops = ops


def cmd_minors(args) -> int:
    G = _structure(load_spec(args.file), "minors")
    steps = []
    for op, arg in args.ops or []:
        if op == "delete":
            G = delete(G, arg)
        elif op == "contract":
            G = contract(G, arg)
        elif op == "dual":
            G = dual(G)
        elif op == "truncate":
            G = truncate(G)
        elif op == "extend":
            G = free_extension(G, arg)
        elif op == "coextend":
            G = free_coextension(G, arg)
        steps.append(op if arg is None else f"{op} {arg}")
    table = rank_table_json(G)
    t = tutte_expansion(G) if G.axioms() else None
    payload = {"steps": steps, "rank_table": table, "tutte": t.to_json() if t is not None else None}
    lines = [" -> ".join(steps) or "(no operations)", json.dumps(table)]
    lines.append(f"T = {t}" if t is not None else "result violates R1/R2; no Tutte polynomial")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_search(args) -> int:
    spec = load_spec(args.file)
    budget = _budget(args)
    if args.what == "basis-realizable":
        if spec.kind != "basis_family":
            raise ParseError("basis-realizable needs a basis_family file")
        res = is_greedoid_basis_family(spec.extra["ground"], spec.extra["bases"], budget)
        lines = ["realizable" if res.realizable else "NOT realizable"]
        if res.witness is not None:
            lines.append("witness feasible family: " + ", ".join("{" + ",".join(s) + "}" for s in res.witness.as_labels()))
        else:
            lines.append(f"{res.dead_ends} dead ends; first ones:")
            lines += [f"  {t['violation']}" for t in res.trace[:8]]
        _emit(args, res.to_json(), "\n".join(lines))
        return 0
    if spec.is_poly:
        p = spec.poly
        n = args.n if args.n is not None else spec.extra.get("n")
        if n is None:
            raise ParseError("matroid-equal on a polynomial needs --n")
    else:
        p = tutte_expansion(spec.ranked)
        n = args.n if args.n is not None else spec.ranked.n
    found = find_matroids_with_tutte(p, n, budget)
    payload = {"tutte": p.to_json(), "n": n, "count": len(found), "matroids": [rank_table_json(M) for M in found]}
    lines = [f"T = {p}", f"{len(found)} labeled matroid(s) on {n} elements"]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_fixtures(args) -> int:
    rows_out = []
    all_ok = True
    lines = []
    for fx, rows, ok in run_fixtures(args.filter):
        all_ok &= ok
        rows_out.append({"name": fx.name, "pass": ok, "failures": [{"claim": c, "detail": d} for c, o, d in rows if not o]})
        lines.append(f"{'PASS' if ok else 'FAIL'}  {fx.name:20s} {fx.about}")
        lines += [f"      {c}: {d}" for c, o, d in rows if not o]
    if not rows_out:
        lines.append("no fixture matches")
    _emit(args, {"fixtures": rows_out, "pass": all_ok}, "\n".join(lines))
    return 0 if all_ok else 1


# -- parser -------------------------------------------------------------------


def _common(sub_default=False):
    p = argparse.ArgumentParser(add_help=False)
    d = argparse.SUPPRESS if sub_default else None
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS if sub_default else False, help="machine-readable output")
    p.add_argument("--cross-check", action="store_true", default=argparse.SUPPRESS if sub_default else False, help="run both Tutte engines")
    p.add_argument("--seed", type=int, default=d, help="seed for the recursion pivot order")
    p.add_argument("--budget", type=int, default=d, help="node limit for searches")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tutte", description="Tutte polynomials of ranked sets", parents=[_common()])
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_common(sub_default=True)]

    p = sub.add_parser("compute", parents=common, help="Tutte polynomial of a structure")
    p.add_argument("file")
    p.add_argument("--emit-s-poly", action="store_true")
    p.add_argument("--emit-rank-table", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", parents=common, help="ranked / greedoid / matroid / antimatroid")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("identities", parents=common, help="I_k values and matroid clauses")
    p.add_argument("file")
    p.add_argument("--brylawski", action="store_true")
    p.add_argument("--trace-check", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("convex", parents=common, help="convex sets of an antimatroid")
    p.add_argument("file")
    p.add_argument("--a-table", action="store_true")
    p.add_argument("--identities", action="store_true")
    p.add_argument("--unique-interior", metavar="ELEM")
    p.set_defaults(func=cmd_convex)

    p = sub.add_parser("minors", parents=common, help="apply minor operations left to right")
    p.add_argument("file")
    for name in ("delete", "contract", "extend", "coextend"):
        p.add_argument(f"--{name}", dest=name, metavar="ELEM", action=_OrderedOp)
    for name in ("dual", "truncate"):
        p.add_argument(f"--{name}", dest=name, nargs=0, action=_OrderedOp)
    p.set_defaults(func=cmd_minors, ops=None)

    p = sub.add_parser("search", parents=common, help="exhaustive searches")
    p.add_argument("what", choices=["basis-realizable", "matroid-equal"])
    p.add_argument("file")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("fixtures", parents=common, help="check the built-in worked examples")
    p.add_argument("--filter")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "minors":
        # nargs=0 actions store [] instead of None
        args.ops = [(op, v if v != [] else None) for op, v in (args.ops or [])]
    try:
        return args.func(args)
    except TutteError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
