"""Command-line interface.

Exit codes: 0 success, 1 negative verdict (not chordal, not equal, check
failed), 2 usage or input error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import gamma as gm
from . import invariants as inv
from . import purebraid as pb
from . import trees as tr
from .errors import ChordalBraidError, InvariantViolation, NotChordal
from .graph import Graph, chordless_cycle, find_peo, is_chordal, parse_edge_list, peo_with_suffix
from .selftest import SUITES, run_all

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(arg: str) -> str:
    if os.path.exists(arg):
        with open(arg) as fh:
            return fh.read()
    return arg


def load_graph(arg: str) -> Graph:
    """Graph from a JSON / edge-list file, or an inline JSON object."""
    text = _read(arg)
    if text.lstrip().startswith("{"):
        return Graph.from_json(json.loads(text))
    if not os.path.exists(arg) and "\n" not in text and " " not in text.strip():
        raise UsageError(f"no such graph file: {arg}")
    return parse_edge_list(text)


def load_tree(arg: str) -> tr.RootedTree:
    text = _read(arg).strip()
    if text.startswith("{"):
        return tr.RootedTree.from_json(json.loads(text))
    return tr.parse_newick(text)


def _labels(g_or_set, text: str) -> list:
    by_name = {str(v): v for v in g_or_set}
    out = []
    for tok in text.replace(",", " ").split():
        if tok not in by_name:
            raise UsageError(f"unknown label {tok!r}")
        out.append(by_name[tok])
    return out


def _index_set(args) -> tuple:
    if args.index_set:
        labels = [t for t in args.index_set.replace(",", " ").split()]
        return tuple(int(t) if t.lstrip("-").isdigit() else t for t in labels)
    if args.strands:
        return tuple(range(1, args.strands + 1))
    raise UsageError("give --strands N or --index-set a,b,c")


class Output:
    def __init__(self, pretty: bool, stream=None):
        self.pretty = pretty
        self.stream = stream or sys.stdout

    def emit(self, data: dict, text: str):
        if self.pretty:
            print(text, file=self.stream)
        else:
            print(json.dumps(data, default=str), file=self.stream)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_chordal(args, out: Output) -> int:
    g = load_graph(args.graph)
    if is_chordal(g):
        peo = list(find_peo(g))
        out.emit({"chordal": True, "peo": peo}, "chordal; PEO: " + " ".join(map(str, peo)))
        return EXIT_OK
    cycle = chordless_cycle(g)
    out.emit(
        {"chordal": False, "chordless_cycle": cycle},
        "not chordal; chordless cycle: " + " ".join(map(str, cycle or [])),
    )
    return EXIT_NO


def cmd_peo(args, out: Output) -> int:
    g = load_graph(args.graph)
    try:
        peo = peo_with_suffix(g, _labels(g, args.suffix)) if args.suffix else find_peo(g)
    except NotChordal as exc:
        out.emit({"chordal": False, "error": str(exc)}, f"not chordal: {exc}")
        return EXIT_NO
    out.emit({"peo": list(peo)}, " ".join(map(str, peo)))
    return EXIT_OK


def cmd_cliques(args, out: Output) -> int:
    g = load_graph(args.graph)
    if not is_chordal(g):
        out.emit({"chordal": False}, "not chordal")
        return EXIT_NO
    if args.dot:
        print(g.clique_diagram_dot(), end="", file=out.stream)
        return EXIT_OK
    cl = [list(s) for s in g.maximal_simplices]
    out.emit({"maximal_simplices": cl}, "\n".join("{" + ", ".join(map(str, s)) + "}" for s in cl))
    return EXIT_OK


def cmd_braid(args, out: Output) -> int:
    I = _index_set(args)
    words = [pb.BraidWord.parse(I, w) for w in args.words]
    if args.action == "nf":
        if len(words) != 1:
            raise UsageError("braid nf takes one word")
        c = pb.comb(words[0], max_steps=args.max_steps)
        out.emit({"strands": list(I), "combed": c.to_json(), "word": str(pb.uncomb(c))}, str(c))
        return EXIT_OK
    if args.action == "eq":
        if len(words) != 2:
            raise UsageError("braid eq takes two words")
        verdict = pb.equal(*words)
        if args.oracle and pb.comb_equal(*words) != verdict:
            raise InvariantViolation("combing and the Artin action disagree")
        out.emit({"equal": verdict}, "equal" if verdict else "not equal")
        return EXIT_OK if verdict else EXIT_NO
    # forget
    if len(words) != 1 or not args.keep:
        raise UsageError("braid forget takes one word and --keep")
    r = pb.forget(words[0], _labels(I, args.keep))
    out.emit({"strands": list(r.index_set), "word": r.to_json(), "text": str(r)}, str(r))
    return EXIT_OK


def cmd_gamma(args, out: Output) -> int:
    g = load_graph(args.graph)
    if not is_chordal(g):
        out.emit({"chordal": False}, "not chordal")
        return EXIT_NO
    elems = [gm.from_edge_word(g, w) for w in args.words]
    if args.action == "nf":
        if len(elems) != 1:
            raise UsageError("gamma nf takes one edge word")
        peo = _labels(g, args.peo) if args.peo else None
        nf = gm.normal_form(elems[0], peo)
        out.emit(nf.to_json() | {"text": str(nf)}, str(nf))
        return EXIT_OK
    if args.action == "eq":
        if len(elems) != 2:
            raise UsageError("gamma eq takes two edge words")
        verdict = gm.equal(*elems)
        if args.oracle and gm.normal_form_equal(*elems) != verdict:
            raise InvariantViolation("normal forms and componentwise equality disagree")
        out.emit({"equal": verdict}, "equal" if verdict else "not equal")
        return EXIT_OK if verdict else EXIT_NO
    if args.action == "project":
        if len(elems) != 1 or not args.simplex:
            raise UsageError("gamma project takes one edge word and --simplex")
        w = gm.project(elems[0], _labels(g, args.simplex))
        out.emit({"simplex": list(w.index_set), "word": w.to_json(), "text": str(w)}, str(w))
        return EXIT_OK
    # pullback-check
    if len(elems) != 1:
        raise UsageError("gamma pullback-check takes one edge word")
    vs = _labels(g, args.vertex) if args.vertex else [v for v in g.vertices if g.is_simplicial(v)]
    results = {str(v): gm.verify_pullback_square(g, v, elems[0]) for v in vs}
    out.emit({"pullback": results}, "\n".join(f"{v}: {'ok' if r else 'FAILED'}" for v, r in results.items()))
    return EXIT_OK if all(results.values()) else EXIT_NO


def cmd_tree(args, out: Output) -> int:
    t = load_tree(args.tree)
    if args.action == "profile":
        prof = tr.semidirect_profile(t) if len(t.vertices) > 1 else ()
        heights = {str(v): tr.height(t, v) for v in t.vertices}
        text = " x ".join(f"F_{h}^{c}" for h, c in prof) or "trivial"
        out.emit({"profile": [list(p) for p in prof], "heights": heights}, text)
        return EXIT_OK
    g = tr.comparability_graph(t)
    if args.dot:
        print(g.to_dot(), end="", file=out.stream)
        return EXIT_OK
    out.emit(g.to_json(), g.to_edge_list().rstrip())
    return EXIT_OK


def cmd_invariants(args, out: Output) -> int:
    g = load_graph(args.graph)
    if not is_chordal(g):
        out.emit({"chordal": False}, "not chordal")
        return EXIT_NO
    ex = inv.exponents(g)
    chi = inv.chromatic_polynomial(g)
    poin = inv.poincare_polynomial(g)
    regions = inv.region_count(g)
    data = {
        "peo": list(ex.peo),
        "exponents": list(ex.exps),
        "chromatic": chi.to_json(),
        "poincare": poin.to_json(),
        "regions": regions,
    }
    lines = [
        f"exponents: {list(ex.exps)}",
        f"chromatic: {chi}",
        f"poincare: {poin}",
        f"regions: {regions}",
    ]
    if args.oracle:
        colorings = [inv.brute_force_coloring_count(g, q) for q in range(6)]
        orient = inv.brute_force_acyclic_orientations(g)
        data["oracle"] = {"colorings_q0_5": colorings, "acyclic_orientations": orient}
        lines.append(f"oracle colorings q=0..5: {colorings}; acyclic orientations: {orient}")
        if colorings != [chi(q) for q in range(6)] or orient != regions:
            raise InvariantViolation("closed forms disagree with brute force")
    out.emit(data, "\n".join(lines))
    return EXIT_OK


def cmd_selftest(args, out: Output) -> int:
    echo = (lambda line: print(line, file=out.stream)) if out.pretty else None
    only = args.suite or None
    results = run_all(seed=args.seed, cases=args.cases, only=only, echo=echo)
    if not out.pretty:
        print(json.dumps({"seed": args.seed, "suites": [r.to_json() for r in results]}), file=out.stream)
    return EXIT_OK if all(r.ok for r in results) else EXIT_INTERNAL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")

    p = argparse.ArgumentParser(
        prog="chordal-braids",
        description="Chordal graphs, pure braid groups and their limits.",
        parents=[common],
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chordal", parents=[common], help="test chordality, print a PEO certificate")
    s.add_argument("graph")
    s.set_defaults(func=cmd_chordal)

    s = sub.add_parser("peo", parents=[common], help="perfect elimination ordering")
    s.add_argument("graph")
    s.add_argument("--suffix", help="simplex (comma-separated) to place last")
    s.set_defaults(func=cmd_peo)

    s = sub.add_parser("cliques", parents=[common], help="maximal simplices")
    s.add_argument("graph")
    s.add_argument("--dot", action="store_true", help="DOT of the clique intersection diagram")
    s.set_defaults(func=cmd_cliques)

    s = sub.add_parser("braid", parents=[common], help="pure braid words")
    s.add_argument("action", choices=["nf", "eq", "forget"])
    s.add_argument("words", nargs="+")
    s.add_argument("--strands", type=int)
    s.add_argument("--index-set")
    s.add_argument("--keep", help="strands kept by forget")
    s.add_argument("--oracle", action="store_true", help="cross-check with combing")
    s.add_argument("--max-steps", type=int, default=None)
    s.set_defaults(func=cmd_braid)

    s = sub.add_parser("gamma", parents=[common], help="elements of the limit group")
    s.add_argument("action", choices=["nf", "eq", "project", "pullback-check"])
    s.add_argument("graph")
    s.add_argument("words", nargs="+", help="edge words such as 'E[a,b] E[b,c]^-1'")
    s.add_argument("--peo")
    s.add_argument("--simplex")
    s.add_argument("--vertex")
    s.add_argument("--oracle", action="store_true", help="cross-check with normal forms")
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser("tree", parents=[common], help="rooted trees")
    s.add_argument("action", choices=["profile", "graph"])
    s.add_argument("tree", help="tree JSON file/object or Newick text")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_tree)

    s = sub.add_parser("invariants", parents=[common], help="exponents and counting invariants")
    s.add_argument("graph")
    s.add_argument("--oracle", action="store_true", help="also run the brute-force counts")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("selftest", parents=[common], help="randomized cross-check suites")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int, default=None)
    s.add_argument("--suite", action="append", choices=sorted(SUITES))
    s.set_defaults(func=cmd_selftest)
    return p


def run(argv=None, stream=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    out = Output(args.pretty, stream)
    try:
        return args.func(args, out)
    except InvariantViolation as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, ChordalBraidError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
