"""Command-line front end: ``pmdkit <command> ...``.

Every command prints one JSON document on standard output.  Exit codes:
0 success, 1 negative verification or recognition, 2 budget exhausted,
3 usage error.  Vertex indices in JSON are 0-based; ``labels`` and the
``*_labelled`` fields give the 1-based names.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__
from .covers import (
    kappa_cycle_closed_form,
    kappa_npb_rho_restricted,
    kappa_search,
    recognize_complete_multipartite,
    recognize_npb,
    rho,
    tau_n_cover,
)
from .errors import BudgetExceeded, NoCover, PmdError
from .graphs import FamilySpec, Graph, generate_family, multiply, parse_family
from .grids import CW, CmCn, PmCn, TreeProduct, construct_grid
from .io import (
    decomposition_from_json,
    decomposition_to_json,
    display_labels,
    format_edge_list,
    graph_from_json,
    graph_to_json,
    latin_to_json,
    multigraph_from_json,
    parse_edge_list,
    to_dot,
)
from .latin import MultisetPartition, build_glr, cyclic_latin_rectangle, glr_by_edge_coloring, verify_glr
from .positivity import AlternatingWalk
from .products import forest_bound_1, forest_bound_2, product_pmd_basic, tree_box_construction
from .solver import BUDGET_ENV, Budget, Decomposition, greedy_pmd, pmd_decide, pmd_exact, pmd_lower_bound, q4_staged_verification, verify_pmd

EXIT_OK, EXIT_NEGATIVE, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# ---------------------------------------------------------------- helpers


def _emit(doc: dict, out) -> None:
    json.dump(doc, out, indent=2, default=str)
    out.write("\n")


def _load_graph(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        doc = json.loads(text)
        return graph_from_json(doc["graph"] if "graph" in doc and "n" not in doc else doc)
    return parse_edge_list(text)


def _graph_arg(args) -> Graph:
    if getattr(args, "family", None):
        return generate_family(parse_family(args.family))
    if getattr(args, "graph", None):
        return _load_graph(args.graph)
    raise UsageError("give --family or --graph")


def _budget(args) -> Budget:
    if args.budget is not None:
        return Budget(seconds=args.budget)
    return Budget.default()


def _labelled(g: Graph, parts) -> list[list[list[str]]]:
    lab = display_labels(g)
    return [[[lab[u], lab[v]] for u, v in p] for p in parts]


def _decomposition_doc(d: Decomposition) -> dict:
    g = d.graph
    if g.labels is None:
        g = Graph(g.n, g.edges, tuple(display_labels(g)))
        d = Decomposition(g, d.parts, d.certificates)
    doc = decomposition_to_json(d)
    doc["parts_labelled"] = _labelled(d.graph, d.parts)
    return doc


def _with_dot(doc: dict, args, g: Graph, parts=None) -> dict:
    if getattr(args, "dot", False):
        doc["dot"] = to_dot(g, parts)
    return doc


# --------------------------------------------------------------- commands


def cmd_gen(args, out) -> int:
    g = _graph_arg(args)
    if args.format == "edgelist":
        out.write(format_edge_list(g))
        return EXIT_OK
    doc = graph_to_json(g)
    doc.setdefault("labels", display_labels(g))
    _emit(_with_dot(doc, args, g), out)
    return EXIT_OK


def cmd_pmd(args, out) -> int:
    g = _graph_arg(args)
    budget = _budget(args)
    if args.decide is not None:
        res = pmd_decide(g, args.decide, budget, jobs=args.jobs)
        doc = {"p": args.decide, "status": res.status, "lower_bound": res.lower}
        if res.decomposition is not None:
            doc["decomposition"] = _decomposition_doc(res.decomposition)
        _emit(_with_dot(doc, args, g, res.decomposition.parts if res.decomposition else None), out)
        return {"found": EXIT_OK, "impossible": EXIT_NEGATIVE, "budget": EXIT_BUDGET}.get(res.status, EXIT_NEGATIVE)
    if args.greedy:
        d = greedy_pmd(g)
        doc = {"upper_bound": d.size, "lower_bound": pmd_lower_bound(g)}
    else:
        value, d = pmd_exact(g, budget, jobs=args.jobs)
        doc = {"pmd": value, "lower_bound": pmd_lower_bound(g)}
    if args.certificates:
        d = d.with_certificates()
    doc["decomposition"] = _decomposition_doc(d)
    _emit(_with_dot(doc, args, g, d.parts), out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = _load_graph(args.graph_file)
    with open(args.decomposition_file) as fh:
        d = decomposition_from_json(json.load(fh), graph=g)
    rep = verify_pmd(g, d)
    lab = display_labels(g)
    doc: dict = {"ok": rep.ok, "parts": d.size, "problems": list(rep.problems)}
    k = rep.first_failure
    if k is not None:
        doc["failing_part"] = k + 1
        wit = rep.parts[k].witness
        if isinstance(wit, AlternatingWalk):
            doc["walk"] = list(wit.vertices)
            doc["walk_labelled"] = [lab[v] for v in wit.vertices]
    _emit(doc, out)
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def _factor_pair(args) -> tuple[Graph, Graph]:
    if not (args.g1 and args.g2):
        raise UsageError("this construction needs --g1 and --g2")
    return generate_family(parse_family(args.g1)), generate_family(parse_family(args.g2))


def cmd_construct(args, out) -> int:
    name = args.name.lower()
    if name.startswith("grid:"):
        kind = name.split(":", 1)[1]
        if kind == "tree":
            d = _tree_product(args)
        else:
            if args.m is None or args.n is None:
                raise UsageError("grid constructions need --m and --n")
            cls = {"pmcn": PmCn, "cmcn": CmCn, "cw": CW}.get(kind)
            if cls is None:
                raise UsageError(f"unknown grid {kind!r}; use pmcn, cmcn, cw or tree")
            d = construct_grid(cls(args.m, args.n))
    elif name == "tree":
        d = _tree_product(args)
    elif name in ("basic", "treebox", "forest1", "forest2"):
        g1, g2 = _factor_pair(args)
        fn = {"basic": product_pmd_basic, "treebox": tree_box_construction, "forest1": forest_bound_1, "forest2": forest_bound_2}[name]
        d = fn(g1, g2)
    else:
        raise UsageError(f"unknown construction {args.name!r}")
    rep = verify_pmd(d.graph, d)
    doc = {"name": args.name, "parts": d.size, "verified": rep.ok, "decomposition": _decomposition_doc(d)}
    _emit(_with_dot(doc, args, d.graph, d.parts), out)
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def _tree_product(args) -> Decomposition:
    if not args.family:
        raise UsageError("tree products need --family, e.g. 'path:3 x star:2'")
    spec = parse_family(args.family)
    factors = spec.args if spec.kind == "product" else (spec,)
    return construct_grid(TreeProduct(tuple(generate_family(f) for f in factors)))


def cmd_kappa(args, out) -> int:
    if args.closed_form:
        if args.m is None:
            raise UsageError("--closed-form needs --m (the cycle length)")
        _emit({"m": args.m, "n": args.n, "p": args.p, "kappa": kappa_cycle_closed_form(args.m, args.n, args.p)}, out)
        return EXIT_OK
    g = _graph_arg(args)
    try:
        res = kappa_search(g, args.n, args.p, _budget(args))
    except NoCover as exc:
        _emit({"n": args.n, "p": args.p, "kappa": "inf", "reason": str(exc)}, out)
        return EXIT_OK
    doc = {
        "n": args.n,
        "p": args.p,
        "kappa": res.value,
        "families_checked": res.families_checked,
        "family": [[list(e) for e in m] for m in res.family],
        "family_labelled": _labelled(g, res.family),
        "cover": res.cover.to_json(),
    }
    _emit(doc, out)
    return EXIT_OK


def cmd_rho(args, out) -> int:
    if args.npb:
        spec = parse_family(args.family or "")
        if spec.kind != "npb":
            raise UsageError("--npb needs an npb:... family")
        _emit({"n": args.mult, "rho": kappa_npb_rho_restricted(spec.args[0], args.mult)}, out)
        return EXIT_OK
    if args.multigraph:
        with open(args.multigraph) as fh:
            mg = multigraph_from_json(json.load(fh))
    else:
        mg = multiply(_graph_arg(args), args.mult)
    _emit({"mode": args.mode, "rho": rho(mg, args.mode, _budget(args))}, out)
    return EXIT_OK


def cmd_recognize(args, out) -> int:
    g = _graph_arg(args)
    lab = display_labels(g)
    if args.kind == "npb":
        r = recognize_npb(g)
        if r.is_npb:
            doc = {"npb": True, "depth": r.family.depth, "part_size": r.family.part_size, "owner": list(r.owner)}
        else:
            e, f = r.witness
            doc = {"npb": False, "witness": [list(e), list(f)], "witness_labelled": [[lab[x] for x in e], [lab[x] for x in f]]}
        _emit(doc, out)
        return EXIT_OK if r.is_npb else EXIT_NEGATIVE
    r = recognize_complete_multipartite(g)
    if r.is_multipartite:
        doc = {"multipartite": True, "sizes": list(r.sizes), "parts_labelled": [[lab[v] for v in p] for p in r.parts]}
    else:
        v, e = r.witness
        doc = {"multipartite": False, "witness": {"vertex": v, "edge": list(e)}, "witness_labelled": {"vertex": lab[v], "edge": [lab[x] for x in e]}}
    _emit(doc, out)
    return EXIT_OK if r.is_multipartite else EXIT_NEGATIVE


def _parse_parts(text: str) -> list[list[int]]:
    try:
        return [[int(x) for x in blk.split(",") if x.strip()] for blk in text.split(";") if blk.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse parts {text!r}") from exc


def cmd_latin(args, out) -> int:
    if args.cyclic:
        rows = cyclic_latin_rectangle(args.m, args.n)
        ok = verify_glr(rows)
    else:
        if not args.parts:
            raise UsageError("give --parts '1,2;2,3;...' or --cyclic")
        part = MultisetPartition.of(args.m, args.n, _parse_parts(args.parts))
        rows = build_glr(part) if args.m <= args.n else glr_by_edge_coloring(part)
        ok = verify_glr(rows, part)
    doc = latin_to_json(rows)
    doc["verified"] = ok
    _emit(doc, out)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_q4(args, out) -> int:
    rep = q4_staged_verification(exhaustive=not args.fast)
    doc = {
        "ok": rep.ok,
        "configurations": [
            {"first_part": [list(e) for e in c.m1], "positive": c.is_positive, "matchings_of_size_7": c.matchings_of_size_7, "positive_of_size_7": c.positive_of_size_7}
            for c in rep.configs
        ],
    }
    _emit(doc, out)
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def cmd_cover(args, out) -> int:
    g = _graph_arg(args)
    with open(args.pmd) as fh:
        d = decomposition_from_json(json.load(fh), graph=g)
    try:
        sol = tau_n_cover(g, d.parts, args.n, _budget(args))
    except NoCover as exc:
        _emit({"n": args.n, "tau": "inf", "reason": str(exc)}, out)
        return EXIT_NEGATIVE
    doc = sol.to_json()
    doc["tau"] = sol.size
    doc["n"] = args.n
    _emit(doc, out)
    return EXIT_OK


def cmd_reproduce(args, out) -> int:
    from .reproduce import DEFAULT_ROW_SECONDS, reproduce_tables

    crit = [int(x) for x in args.criteria.split(",")] if args.criteria else None
    seconds = args.budget if args.budget is not None else float(os.environ.get(BUDGET_ENV, DEFAULT_ROW_SECONDS))
    rep = reproduce_tables(seconds, crit)
    if args.table:
        for r in rep.rows:
            out.write(f"{r.status.upper():6} [{r.criterion:2}] {r.key}: expected {r.expected}, computed {r.computed} ({r.seconds}s)\n")
        out.write(f"{rep.passed} passed, {rep.failed} not passed\n")
    else:
        _emit(rep.to_json(), out)
    if any(r.status == "budget" for r in rep.rows):
        return EXIT_BUDGET
    return EXIT_OK if rep.failed == 0 else EXIT_NEGATIVE


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pmdkit", description="Positive matching decompositions: compute, construct, verify.")
    p.add_argument("--version", action="version", version=f"pmdkit {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=float, default=None, help=f"seconds (default: ${BUDGET_ENV} or unlimited)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for the exact solver")
    common.add_argument("--dot", action="store_true", help="add a DOT rendering to the output")
    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("--family", help="family descriptor, e.g. cycle:6, pmcn:3,7, 'path:3 x cycle:4'")
    src.add_argument("--graph", help="graph file (JSON or 'u v' edge list)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", parents=[common, src], help="generate a graph")
    s.add_argument("--format", choices=("json", "edgelist"), default="json")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("pmd", parents=[common, src], help="compute pmd")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact minimum (default)")
    mode.add_argument("--greedy", action="store_true", help="greedy upper bound only")
    mode.add_argument("--decide", type=int, metavar="P", help="decide whether P parts suffice")
    s.add_argument("--certificates", action="store_true", help="attach rational weight certificates")
    s.set_defaults(func=cmd_pmd)

    s = sub.add_parser("verify", parents=[common], help="verify a decomposition")
    s.add_argument("graph_file")
    s.add_argument("decomposition_file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", parents=[common], help="explicit constructions")
    s.add_argument("name", help="grid:pmcn | grid:cmcn | grid:cw | grid:tree | tree | basic | treebox | forest1 | forest2")
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--family", help="tree factors for tree products, e.g. 'path:3 x star:2'")
    s.add_argument("--g1", help="first factor for product constructions")
    s.add_argument("--g2", help="second factor for product constructions")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("kappa", parents=[common, src], help="least AFE cover size over p-part pmds")
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--closed-form", action="store_true", help="closed form for the cycle C_m")
    s.add_argument("--m", type=int)
    s.set_defaults(func=cmd_kappa)

    s = sub.add_parser("rho", parents=[common, src], help="least number of forests covering mult*G")
    s.add_argument("--mult", type=int, default=1)
    s.add_argument("--mode", choices=("formula", "oracle"), default="formula")
    s.add_argument("--multigraph", help="multigraph JSON file")
    s.add_argument("--npb", action="store_true", help="restricted maximum for an npb:... family")
    s.set_defaults(func=cmd_rho)

    s = sub.add_parser("recognize", parents=[common, src], help="NPB or complete multipartite recognition")
    s.add_argument("--kind", choices=("npb", "multipartite"), default="npb")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("latin", parents=[common], help="generalized Latin rectangles")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--parts", help="1-based rows per symbol, e.g. '1,2;2,3;1;3'")
    s.add_argument("--cyclic", action="store_true")
    s.set_defaults(func=cmd_latin)

    s = sub.add_parser("q4", parents=[common], help="staged check for Q_4")
    s.add_argument("--fast", action="store_true", help="enumerate positive matchings only")
    s.set_defaults(func=cmd_q4)

    s = sub.add_parser("cover", parents=[common, src], help="minimum AFE cover of a given pmd")
    s.add_argument("--pmd", required=True, help="decomposition JSON")
    s.add_argument("--n", type=int, default=1)
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("reproduce", parents=[common], help="run the reproduction checks")
    s.add_argument("--criteria", help="comma-separated check numbers (default: all)")
    s.add_argument("--table", action="store_true", help="plain-text table instead of JSON")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        _emit({"error": "budget", "message": str(exc), "lower": exc.lower, "upper": exc.upper}, out)
        return EXIT_BUDGET
    except (UsageError, ValueError, PmdError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"pmdkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
