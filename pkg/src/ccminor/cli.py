"""Command-line entry point.

Graphs travel as plain edge lists, structured results as JSON.  Exit codes:
0 success, 1 honest failure or negative answer, 2 usage or input error,
3 a constructive step that should never fail did.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import gen, io
from .classes import K_CAP, classify
from .decompose import TemplateSpec, tutte_decomposition
from .duality import dual, planar_embed
from .errors import GraphError, TheoremViolation
from .extract import extract_bond, extract_from_3connected, extract_large_3connected, extract_template
from .extract.template import BIG_LABEL
from .isomorph import is_cc_minor
from .multigraph import Multigraph

OK, NO, USAGE, BUG = 0, 1, 2, 3

FAMILIES = ("fan", "fantype", "bond", "cycle", "wheel", "ladder", "vk", "k3k", "template", "random")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_graph(path: str) -> Multigraph:
    if path == "-":
        return io.loads(sys.stdin.read())
    try:
        with open(path) as fp:
            return io.read(fp)
    except OSError as ex:
        raise UsageError(f"cannot read {path}: {ex.strerror}")


def _graph_dot(g: Multigraph, name: str = "g") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in sorted(g.vertices)]
    lines += [f'  {a} -- {b} [label="{e}"];' for e, (a, b) in g.edges.items()]
    return "\n".join(lines + ["}"]) + "\n"


def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _cmd_extract(a, out) -> int:
    g = _read_graph(a.input)
    edges = _ints(a.edges) if a.edges else []
    n = a.r if a.r is not None else a.t
    if a.goal == "template":
        res = extract_template(g, n if n is not None else 1, big_label_threshold=a.big_label)
    elif a.goal == "fan":
        if n is None:
            raise UsageError("--goal fan needs -t")
        res = extract_large_3connected(g, n)
    elif a.goal == "bond":
        res = extract_bond(g, edges[0] if edges else min(g.edges, default=0))
    else:
        if len(edges) != 2:
            raise UsageError("--goal 3con needs --edges e,f")
        res = extract_from_3connected(g, *edges)
    out.write(res.to_dot() if a.emit == "dot" else res.dumps() + "\n")
    return OK if res.ok else NO


def _cmd_check(a, out) -> int:
    h = _read_graph(a.minor)
    g = _read_graph(a.input)
    tr = is_cc_minor(g, h)
    if tr is None:
        out.write("absent\n")
        return NO
    out.write(tr.dumps() + "\n")
    return OK


def _cmd_decompose(a, out) -> int:
    td = tutte_decomposition(_read_graph(a.input))
    out.write(td.to_dot() if a.emit == "dot" else json.dumps(td.to_json(), sort_keys=True) + "\n")
    return OK


def _cmd_dual(a, out) -> int:
    g = _read_graph(a.input)
    emb = planar_embed(g)
    if emb is None:
        out.write("not planar\n")
        return NO
    gd, corr = dual(g, emb)
    if a.emit == "dot":
        out.write(_graph_dot(gd, "dual"))
        return OK
    out.write(io.dumps(gd))
    for e, d in sorted(corr.items()):
        out.write(f"# primal {e} dual {d}\n")
    return OK


def _cmd_classify(a, out) -> int:
    v = classify(_read_graph(a.input), a.kmax)
    out.write(v.dumps() + "\n")
    return OK


def _family(a) -> Multigraph:
    need = lambda: a.n if a.n is not None else _missing("--n")
    if a.family == "fan":
        return gen.fan(need())
    if a.family == "fantype":
        return gen.fan_type(_ints(a.ts or _missing("--ts")))
    if a.family == "bond":
        return gen.bond(need())
    if a.family == "cycle":
        return gen.cycle(need())
    if a.family == "wheel":
        return gen.wheel(need())
    if a.family == "ladder":
        return gen.ladder(need())
    if a.family == "vk":
        return gen.vk(need())
    if a.family == "k3k":
        return gen.k3k(need())
    if a.family == "template":
        parts = (a.parts or _missing("--parts")).split(",")
        return gen.generate(gen.Template(TemplateSpec(tuple(p.strip() for p in parts))))
    return gen.random_2connected(need(), a.m if a.m is not None else 2 * need(), seed=a.seed)


def _missing(flag: str):
    raise UsageError(f"this family needs {flag}")


def _cmd_gen(a, out) -> int:
    g = _family(a)
    out.write(_graph_dot(g) if a.emit == "dot" else io.dumps(g))
    return OK


def _cmd_verify(a, out) -> int:
    from .verify import SUITES, run_suite

    names = sorted(SUITES) if a.suite == "all" else [a.suite]
    ok = True
    for name in names:
        res = run_suite(name, jobs=a.jobs, limit=a.limit)
        out.write(res.line() + "\n")
        for f in res.failures[:5]:
            out.write(f"  {f}\n")
        out.flush()
        ok = ok and res.ok
    return OK if ok else NO


def build_parser() -> argparse.ArgumentParser:
    from .verify import SUITES

    p = _Parser(prog="ccminor", description="Cycle-contraction minors of multigraphs.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def cmd(name, fn, help, graph=True, emit=False):
        s = sub.add_parser(name, help=help)
        if graph:
            s.add_argument("input", nargs="?", default="-", help="edge-list file, or - for stdin")
        if emit:
            s.add_argument("--emit", choices=("json", "dot"), default="json")
        s.set_defaults(fn=fn)
        return s

    s = cmd("extract", _cmd_extract, "find an unavoidable cc-minor", emit=True)
    s.add_argument("--goal", choices=("template", "fan", "bond", "3con"), required=True)
    s.add_argument("--r", "-r", type=int, dest="r")
    s.add_argument("-t", type=int, dest="t")
    s.add_argument("--edges", help="marked edge ids, e.g. 0,5")
    s.add_argument("--big-label", type=int, default=BIG_LABEL, help="edge count of a large 3-connected label")

    s = cmd("check", _cmd_check, "is H a cc-minor of G")
    s.add_argument("--minor", required=True, help="edge-list file for H")

    cmd("decompose", _cmd_decompose, "Tutte tree decomposition of a 2-connected graph", emit=True)
    cmd("dual", _cmd_dual, "planar dual with edge correspondence", emit=True)

    s = cmd("classify", _cmd_classify, "largest F_k class with an obstruction")
    s.add_argument("--kmax", type=int, default=K_CAP)

    s = cmd("gen", _cmd_gen, "emit a named graph family", graph=False, emit=True)
    s.add_argument("--family", choices=FAMILIES, required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int, help="edge count for random")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--ts", help="spoke multiplicities for fantype, e.g. 1,2,1")
    s.add_argument("--parts", help="template parts, e.g. K3,K4,B3")

    s = cmd("verify", _cmd_verify, "run an exhaustive verification sweep", graph=False)
    s.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--limit", type=int, help="check only the first N items")
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        a = build_parser().parse_args(argv)
        return a.fn(a, out)
    except UsageError as ex:
        print(f"ccminor: {ex}", file=sys.stderr)
        return USAGE
    except GraphError as ex:
        print(f"ccminor: {ex}", file=sys.stderr)
        return USAGE
    except TheoremViolation as ex:
        print(f"ccminor: theorem violation: {ex}", file=sys.stderr)
        return BUG


if __name__ == "__main__":
    sys.exit(main())
