"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 a resource cap was hit.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from .adjoint import AdjointModel
from .config import Limits
from .engine import CoxeterGroup
from .errors import GraphSyntaxError, ResourceCapExceeded, ValidationError
from .graph import load_graph
from .quandle import conjugacy_classes, reflection_orbits, reflections, w_abelianization
from .report import FAIL, SKIPPED
from .rootsys import build_root_system
from .verify import SUITE, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _dump(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _pretty(rows: list[tuple[str, str]]) -> None:
    width = max((len(k) for k, _ in rows), default=0)
    for k, v in rows:
        print(f"{k:<{width}}  {v}", file=sys.stderr)


def _group(args) -> CoxeterGroup:
    limits = Limits.from_env(max_elements=args.max_elements, max_roots=args.max_roots,
                             word_budget=args.word_budget)
    return CoxeterGroup(load_graph(args.graph), engine=args.engine, limits=limits)


def cmd_info(args) -> int:
    g = _group(args)
    M = g.matrix
    abw = w_abelianization(M)
    out = {"graph": M.to_json(), "engine": g.engine.name, "c": g.odd.count,
           "W_Ab": abw.describe(), "Ad_Ab_rank": g.odd.count,
           "class_representatives": [M.labels[i] for i in g.odd.representatives]}
    code = EXIT_OK
    if not g.finite:
        out.update(order="infinite", reflections="infinite", roots="infinite")
    else:
        try:
            out["order"] = g.order()
        except ResourceCapExceeded as exc:
            out["order"] = f"cap exceeded: {exc}"
            code = EXIT_CAP
        try:
            out["reflections"] = len(reflection_orbits(g))
            out["roots"] = len(g.root_closure())
        except ResourceCapExceeded as exc:
            out.setdefault("reflections", f"cap exceeded: {exc}")
            out.setdefault("roots", f"cap exceeded: {exc}")
            code = EXIT_CAP
    _dump(out)
    if args.pretty:
        _pretty([(k, str(v)) for k, v in out.items() if k != "graph"])
    return code


def cmd_verify(args) -> int:
    g = _group(args)
    only = None
    if args.checks:
        only = {c.strip() for c in args.checks.split(",") if c.strip()}
        unknown = only - set(SUITE)
        if unknown:
            print(f"unknown checks: {', '.join(sorted(unknown))}; "
                  f"available: {', '.join(SUITE)}", file=sys.stderr)
            return EXIT_INPUT
    results, timings = run_suite(g, only, seed=args.seed)
    report = {"graph": g.matrix.to_json(), "checks": [r.as_dict() for r in results]}
    if args.timings:
        report["timings"] = timings
    _dump(report)
    if args.pretty:
        _pretty([(r.name, f"{r.status:<7} {r.detail}") for r in results])
    if any(r.status == FAIL for r in results):
        return EXIT_FAIL
    if any(r.status == SKIPPED and r.detail.startswith("resource cap") for r in results):
        return EXIT_CAP
    return EXIT_OK


def cmd_quandle(args) -> int:
    g = _group(args)
    q = reflections(g)
    if args.classes:
        _dump({
            "items": [{"index": i, "word": g.format(x.element), "class": x.class_index}
                      for i, x in enumerate(q.items)],
            "classes": conjugacy_classes(q),
        })
        return EXIT_OK
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["x\\y"] + list(range(len(q))))
    for i in range(len(q)):
        w.writerow([i] + q.op[i].tolist())
    return EXIT_OK


def cmd_roots(args) -> int:
    g = _group(args)
    rs = build_root_system(g)
    rows = []
    for a in range(len(rs)):
        r = rs.project_p(a)
        rows.append({
            "index": a,
            "coords": [round(float(x), 6) + 0.0 for x in rs.coords[a]],
            "sign": rs.sign(a),
            "reflection": g.format(r.element),
            "class": r.class_index,
        })
    _dump(rows)
    return EXIT_OK


def cmd_cocycle(args) -> int:
    g = _group(args)
    model = AdjointModel(g)
    pairs_arg = args.pairs
    if pairs_arg == "all":
        table = g.enumerate()
        pairs = ((a, b) for a in table.elements for b in table.elements)
    elif pairs_arg.startswith("sample:"):
        try:
            count = int(pairs_arg.split(":", 1)[1])
        except ValueError:
            print(f"bad --pairs value {pairs_arg!r}", file=sys.stderr)
            return EXIT_INPUT
        rng = random.Random(args.seed)
        if g.finite:
            elems = g.enumerate().elements
            pairs = [(rng.choice(elems), rng.choice(elems)) for _ in range(count)]
        else:
            def rand():
                return g.element([rng.randrange(g.n) for _ in range(rng.randint(0, 8))])
            pairs = [(rand(), rand()) for _ in range(count)]
    else:
        print(f"--pairs must be 'all' or 'sample:N', got {pairs_arg!r}", file=sys.stderr)
        return EXIT_INPUT
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["w1", "w2"] + [f"c{k}" for k in range(model.rank)])
    for a, b in pairs:
        w.writerow([g.format(a), g.format(b)] + list(model.cocycle_c(a, b)))
    return EXIT_OK


def cmd_adjoint(args) -> int:
    g = _group(args)
    model = AdjointModel(g)
    out = model.identity
    factors = []
    for token in args.factors:
        inverse = token.endswith("^-1")
        word = token[:-3] if inverse else token
        x = g.parse(word)
        if not model.is_reflection(x):
            print(f"{word!r} is not a reflection", file=sys.stderr)
            return EXIT_INPUT
        e = model.embed_generator(x)
        if inverse:
            e = model.ad_inv(e)
        factors.append({"reflection": g.format(x), "inverse": inverse, "v": list(e.v)})
        out = model.ad_mul(out, e)
    _dump({"factors": factors, "v": list(out.v), "w": g.format(out.w),
           "ab": list(model.ab(out))})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("graph", help="catalog name (A3, I2(5), tilde-A2, ...), inline JSON, "
                                      "'coxeter <name>' or a path to a JSON file")
    common.add_argument("--engine", choices=["auto", "word", "perm"], default="auto")
    common.add_argument("--max-elements", type=int, default=None)
    common.add_argument("--max-roots", type=int, default=None)
    common.add_argument("--word-budget", type=int, default=None)
    common.add_argument("--pretty", action="store_true", help="human-readable table on stderr")

    parser = argparse.ArgumentParser(prog="coxq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="orders and class counts")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--checks", help=f"comma-separated subset of: {', '.join(SUITE)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true", help="include per-check milliseconds")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("quandle", parents=[common], help="quandle operation table as CSV")
    p.add_argument("--classes", action="store_true", help="emit items and classes as JSON instead")
    p.set_defaults(func=cmd_quandle)

    p = sub.add_parser("roots", parents=[common], help="root table as JSON")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("cocycle", parents=[common], help="cocycle values as CSV")
    p.add_argument("--pairs", default="all", help="'all' or 'sample:N'")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_cocycle)

    p = sub.add_parser("adjoint", parents=[common],
                       help="multiply generators e_x given by reflection words ('s1 s2 s1', 's2^-1')")
    p.add_argument("factors", nargs="*")
    p.set_defaults(func=cmd_adjoint)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphSyntaxError, ValidationError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
