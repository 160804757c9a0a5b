"""Command-line front end.

Subcommands: invariants, decide, product, classify, greedy, enumerate,
verify.  Graph inputs are one of: a graph6 literal, a path to a .g6 file
(every line is processed), or ``named:FAMILY:PARAM`` (see
:mod:`domlab.catalog`).

Exit codes: 0 success / theorem holds; 1 counterexample found or a failed
``--assert``; 2 usage or input error.

Configuration precedence: command-line flags, then ``DOMLAB_*`` environment
variables, then the key=value config file at ``~/.domlab.conf`` (override
the path with ``DOMLAB_CONFIG``).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from .catalog import named_graph
from .classify import (
    classify_small_triangle_free,
    corona_decomposition,
    pc_partition,
    universal_vertices,
)
from .domination import (
    domination_profile,
    greedy_maximal_independent,
    greedy_minimal_dominating,
    is_well_covered,
    is_well_dominated,
)
from .enumeration import DEFAULT_BUDGET, enumerate_connected
from .graph6 import Graph6Error, load_graph6_file, parse_graph6, to_graph6
from .graphs import Graph, girth, is_connected, is_triangle_free, set_of
from .isomorphism import are_isomorphic
from .products import PRODUCT_KINDS, product
from .theorems import THEOREMS
from .verify import COUNTEREXAMPLE_CAP, CorpusSpec, PairCorpusSpec, verify_corpus

CONFIG_ENV = "DOMLAB_CONFIG"
DEFAULT_CONFIG = "~/.domlab.conf"


class CliError(Exception):
    """Input or usage problem: exits with status 2."""


def _load_config() -> dict[str, str]:
    path = Path(os.environ.get(CONFIG_ENV, DEFAULT_CONFIG)).expanduser()
    if not path.is_file():
        return {}
    out = {}
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or "=" not in line:
            continue
        key, _, val = line.partition("=")
        out[key.strip()] = val.strip()
    return out


def _setting(flag_value, env_name: str, config_key: str):
    if flag_value is not None:
        return flag_value
    if env_name in os.environ:
        return os.environ[env_name]
    return _load_config().get(config_key)


def load_graphs(arg: str) -> list[Graph]:
    """Resolve one graph argument to a list of graphs."""
    if arg.startswith("named:"):
        return [named_graph(arg[len("named:"):])]
    path = Path(arg)
    if path.is_file():
        return load_graph6_file(path)
    return [parse_graph6(arg)]


def _identify(g: Graph) -> str | None:
    # Match against same-order named families for friendlier output.
    from .catalog import complete_graph, cycle_graph, path_graph, special_graph

    candidates: list[tuple[str, Graph]] = [
        (f"named:complete:{g.n}", complete_graph(g.n)),
        (f"named:path:{g.n}", path_graph(g.n)),
    ]
    if g.n >= 3:
        candidates.append((f"named:cycle:{g.n}", cycle_graph(g.n)))
    for name in ("P10", "H1", "H2", "H3", "H4"):
        special = special_graph(name)
        if special.n == g.n:
            candidates.append((f"named:special:{name}", special))
    for spec, other in candidates:
        if are_isomorphic(g, other):
            return spec
    return None


def _emit(obj, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        _print_human(obj)


def _print_human(obj, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        for key in obj:
            val = obj[key]
            if isinstance(val, (dict, list)) and val and not _is_flat(val):
                print(f"{pad}{key}:")
                _print_human(val, indent + 1)
            else:
                print(f"{pad}{key}: {_flat(val)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                _print_human(item, indent)
                print()
            else:
                print(f"{pad}{_flat(item)}")
    else:
        print(f"{pad}{obj}")


def _is_flat(val) -> bool:
    if isinstance(val, list):
        return all(not isinstance(x, (dict, list)) for x in val)
    return False


def _flat(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(str(x) for x in val) + "]"
    if isinstance(val, bool):
        return "true" if val else "false"
    return str(val)


def _graph_summary(g: Graph) -> dict:
    gir = girth(g)
    info = {
        "graph6": to_graph6(g),
        "order": g.n,
        "size": g.edge_count,
        "connected": is_connected(g),
        "girth": None if gir == float("inf") else int(gir),
        "triangle_free": is_triangle_free(g),
    }
    info.update(domination_profile(g).to_dict())
    return info


# -- subcommands --------------------------------------------------------------


def _cmd_invariants(args) -> int:
    rows = [_graph_summary(g) for g in load_graphs(args.graph)]
    _emit(rows if len(rows) > 1 else rows[0], args.json)
    return 0


_DECIDERS = {
    "well-dominated": is_well_dominated,
    "well-covered": is_well_covered,
    "connected": is_connected,
    "triangle-free": is_triangle_free,
    "corona": lambda g: corona_decomposition(g) is not None,
    "pc-member": lambda g: pc_partition(g) is not None,
}


def _cmd_decide(args) -> int:
    decider = _DECIDERS[args.property]
    rows = []
    all_true = True
    for g in load_graphs(args.graph):
        value = decider(g)
        all_true &= value
        rows.append({"graph6": to_graph6(g), args.property: value})
    _emit(rows if len(rows) > 1 else rows[0], args.json)
    if getattr(args, "assert_") and not all_true:
        return 1
    return 0


def _cmd_product(args) -> int:
    gs = load_graphs(args.left)
    hs = load_graphs(args.right)
    if len(gs) != 1 or len(hs) != 1:
        raise CliError("product takes exactly one graph per factor argument")
    p = product(args.kind, gs[0], hs[0])
    if args.emit == "dot":
        print(_to_dot(p.graph))
        return 0
    info = {
        "kind": args.kind,
        "graph6": to_graph6(p.graph),
        "order": p.graph.n,
        "size": p.graph.edge_count,
        "isomorphic_to": _identify(p.graph),
    }
    if args.emit == "graph6" and not args.json:
        print(info["graph6"])
        if info["isomorphic_to"]:
            print(f"# isomorphic to {info['isomorphic_to']}", file=sys.stderr)
        return 0
    _emit(info, args.json)
    return 0


def _to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    seen = 0
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
        seen |= 1 << u | 1 << v
    for v in range(g.n):
        if not seen >> v & 1:
            lines.append(f"  {v};")
    lines.append("}")
    return "\n".join(lines)


def _cmd_classify(args) -> int:
    rows = []
    for g in load_graphs(args.graph):
        dec = corona_decomposition(g)
        pc = pc_partition(g)
        row = {
            "graph6": to_graph6(g),
            "small_triangle_free_tag": classify_small_triangle_free(g),
            "universal_vertices": list(set_of(universal_vertices(g))),
            "corona": None,
            "pc_partition": None,
        }
        if dec is not None:
            row["corona"] = {
                "core_graph6": to_graph6(dec.core),
                "core_vertices": list(dec.core_vertices),
                "matching": [list(p) for p in dec.matching],
                "ambiguous": dec.ambiguous,
            }
        if pc is not None:
            row["pc_partition"] = {
                "pendant_side": list(set_of(pc.p_mask)),
                "cycle_side": list(set_of(pc.c_mask)),
                "pendant_matching": [list(p) for p in pc.pendant_matching],
                "basic_cycles": [list(c) for c in pc.basic_cycles],
                "ambiguous": pc.ambiguous,
            }
        rows.append(row)
    _emit(rows if len(rows) > 1 else rows[0], args.json)
    return 0


def _cmd_greedy(args) -> int:
    rows = []
    for g in load_graphs(args.graph):
        if args.ordering is not None:
            try:
                order = [int(tok) for tok in args.ordering.split(",")]
            except ValueError:
                raise CliError("--ordering must be a comma-separated vertex list") from None
        else:
            order = list(range(g.n))
            if args.seed is not None:
                random.Random(args.seed).shuffle(order)
        if args.mode == "dominating":
            result = greedy_minimal_dominating(g, order)
        else:
            result = greedy_maximal_independent(g, order)
        rows.append({
            "graph6": to_graph6(g),
            "mode": args.mode,
            "ordering": order,
            "result": list(set_of(result)),
            "size": result.bit_count(),
        })
    _emit(rows if len(rows) > 1 else rows[0], args.json)
    return 0


def _cmd_enumerate(args) -> int:
    cache_dir = _setting(args.cache_dir, "DOMLAB_CACHE_DIR", "cache_dir")
    lines = []
    for g in enumerate_connected(
        args.order,
        triangle_free=args.triangle_free,
        budget=args.budget,
        cache_dir=cache_dir,
    ):
        lines.append(to_graph6(g))
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.output:
        Path(args.output).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        rows = [{"id": tid, "arity": e.arity, "summary": e.summary}
                for tid, e in sorted(THEOREMS.items())]
        _emit(rows, args.json)
        return 0
    if args.theorem is None:
        raise CliError("verify needs a theorem id (or --list)")
    tid = args.theorem
    if tid not in THEOREMS:
        raise CliError(f"unknown theorem id {tid!r}; see verify --list")
    from .verify import DEFAULT_CORPORA

    default = DEFAULT_CORPORA[tid]
    base = default.left if isinstance(default, PairCorpusSpec) else default
    single = CorpusSpec(
        min_order=args.min_order if args.min_order is not None else base.min_order,
        max_order=args.max_order if args.max_order is not None else base.max_order,
        triangle_free=base.triangle_free or args.triangle_free,
        path=args.corpus,
        budget=args.budget,
    )
    if THEOREMS[tid].arity == 2:
        cap = args.product_cap if args.product_cap is not None else default.product_cap
        corpus = PairCorpusSpec(single, single, product_cap=cap)
    else:
        corpus = single
    workers = _setting(args.workers, "DOMLAB_WORKERS", "workers")
    workers = int(workers) if workers is not None else (os.cpu_count() or 1)
    cache_dir = _setting(args.cache_dir, "DOMLAB_CACHE_DIR", "cache_dir")
    report = verify_corpus(tid, corpus, workers=workers, cache_dir=cache_dir, cap=args.cap)
    payload = report.to_dict()
    payload["schema"] = "domlab-report-v1"
    _emit(payload, args.json)
    return 1 if report.counterexample_count else 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domlab",
        description="Domination invariants, graph products, and exhaustive "
                    "verification of structural theorems on small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("invariants", help="domination profile and structure of a graph")
    p.add_argument("graph", help="graph6 literal, .g6 file, or named:FAMILY:PARAM")
    add_json(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("decide", help="decide a graph property")
    p.add_argument("property", choices=sorted(_DECIDERS))
    p.add_argument("graph")
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit 1 when the property fails")
    add_json(p)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("product", help="build a graph product")
    p.add_argument("kind", choices=PRODUCT_KINDS)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--emit", choices=("graph6", "dot"), default=None)
    add_json(p)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("classify", help="corona / pendant-5-cycle structure and family tag")
    p.add_argument("graph")
    add_json(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("greedy", help="run a greedy dominating/independent procedure")
    p.add_argument("graph")
    p.add_argument("--mode", choices=("dominating", "independent"), default="dominating")
    p.add_argument("--seed", type=int, default=None, help="shuffle the ordering with this seed")
    p.add_argument("--ordering", default=None, help="explicit comma-separated vertex ordering")
    add_json(p)
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("enumerate", help="list connected graphs of one order in graph6")
    p.add_argument("order", type=int)
    p.add_argument("--triangle-free", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--output", default=None, help="write to a file instead of stdout")
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="sweep a theorem over a corpus")
    p.add_argument("theorem", nargs="?", default=None)
    p.add_argument("--list", action="store_true", help="list the theorem table")
    p.add_argument("--min-order", type=int, default=None)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--triangle-free", action="store_true", default=False)
    p.add_argument("--corpus", default=None,
                   help="read instances from a .g6 file (pair theorems draw "
                        "both factors from it)")
    p.add_argument("--product-cap", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--cap", type=int, default=COUNTEREXAMPLE_CAP,
                   help="max counterexample certificates kept in the report")
    add_json(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, Graph6Error, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
