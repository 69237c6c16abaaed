"""Command line interface: compile, query, serve."""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path as FilePath

from .clustering import hcluster, load_hierarchy, save_hierarchy
from .errors import CompiledHierarchyError, SchemaError
from .expressions import path_expr
from .graph import derive_graph
from .reduction import reduce_graph
from .relevance import RelevanceConfig, badness, coerce_c_weight
from .schema import load_schema, schema_hash
from .search import list_more, release_order, start_state

C_WEIGHT_ENV = "SCHEMAPATH_C_WEIGHT"


def default_compiled_path(schema_path: str | FilePath) -> FilePath:
    return FilePath(schema_path).with_suffix(".compiled.json")


def _env_c_weight() -> str:
    return os.environ.get(C_WEIGHT_ENV, "0.5")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schemapath",
        description="Ranked point-to-point path queries over conceptual schemas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compile = sub.add_parser(
        "compile", help="pre-compile the clustering hierarchy for a schema")
    p_compile.add_argument("schema", help="schema document (JSON)")
    p_compile.add_argument("out", nargs="?", default=None,
                           help="output path (default: <schema>.compiled.json)")

    p_query = sub.add_parser(
        "query", help="list ranked acyclic paths between two points")
    p_query.add_argument("schema", help="schema document (JSON)")
    p_query.add_argument("start", help="first point (type name)")
    p_query.add_argument("goal", help="second point (type name)")
    p_query.add_argument("--more", type=int, default=0, metavar="N",
                         help="extra MORE rounds after the initial listing")
    p_query.add_argument("--c-weight", default=None, metavar="W",
                         help="relevance blend in [0,1] (default: "
                              f"${C_WEIGHT_ENV} or 0.5)")
    p_query.add_argument("--compiled", default=None, metavar="PATH",
                         help="compiled hierarchy file (default: "
                              "<schema>.compiled.json, recompiled if stale)")

    p_serve = sub.add_parser("serve", help="run the HTTP query service")
    p_serve.add_argument("schema", help="schema document (JSON)")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--c-weight", default=None, metavar="W")
    p_serve.add_argument("--session-ttl", type=float, default=1800.0,
                         help="idle session eviction in seconds")
    return parser


def _load(schema_file: str):
    try:
        source = FilePath(schema_file).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {schema_file}: {exc}", file=sys.stderr)
        raise SystemExit(1)
    from .schema import parse_schema

    return parse_schema(source)


def cmd_compile(args: argparse.Namespace) -> int:
    schema = _load(args.schema)
    graph = derive_graph(schema)
    if not graph.is_connected():
        print("error: schema graph not connected", file=sys.stderr)
        return 2
    hierarchy = hcluster(graph)
    out = FilePath(args.out) if args.out else default_compiled_path(args.schema)
    save_hierarchy(hierarchy, schema_hash(schema), out)
    print("levels: " + " -> ".join(str(n) for n in hierarchy.level_sizes))
    print(f"stored hypernodes: {hierarchy.total_stored}")
    print(f"wrote {out}")
    return 0


def cmd_query(args: argparse.Namespace) -> int:
    schema = _load(args.schema)
    graph = derive_graph(schema)
    if not graph.is_connected():
        print("error: schema graph not connected", file=sys.stderr)
        return 2

    compiled_path = (FilePath(args.compiled) if args.compiled
                     else default_compiled_path(args.schema))
    digest = schema_hash(schema)
    try:
        hierarchy = load_hierarchy(compiled_path, graph, digest)
    except (OSError, CompiledHierarchyError):
        hierarchy = hcluster(graph)

    cfg = RelevanceConfig.for_schema(
        schema, coerce_c_weight(args.c_weight or _env_c_weight()))
    search_graph = reduce_graph(hierarchy, args.start, args.goal, graph)
    state = list_more(start_state(args.start, args.goal, search_graph),
                      cfg, search_graph)
    rounds = max(args.more, 0)
    for _ in range(rounds):
        if state.exhausted:
            break
        state = list_more(state, cfg, search_graph)

    for path in release_order(state.released, cfg):
        print(f"{badness(path, cfg)}  {path_expr(path, schema).render()}")
    if state.exhausted:
        print("exhausted")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(
        args.schema,
        default_c_weight=coerce_c_weight(args.c_weight or _env_c_weight()),
        session_ttl=args.session_ttl,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"compile": cmd_compile, "query": cmd_query, "serve": cmd_serve}
    try:
        return handlers[args.command](args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
