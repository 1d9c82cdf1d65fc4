"""Command-line surface for the spider labeling constructions.

Subcommands: spider doubling | spider short | spider three-long | attach |
amalgamate | path | oracle | verify | export. Results are emitted as the
canonical JSON tree document or DOT. Exit codes: 0 success, 2 validation
(including provable infeasibility), 3 resource budget, 4 internal
theorem-contradiction.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .attach import attach_path
from .compose import AmalgamationInput, amalgamate, label_three_long_legs
from .doubling import check_doubling, label_doubling_spider
from .errors import (
    ConstructionInvariantError,
    ResourceBudgetError,
    ValidationError,
)
from .model import AlphaLabeling, Labeling, alpha_index, is_graceful, path_tree
from .oracle import find_graceful, count_graceful
from .paths import (
    DEFAULT_NODE_BUDGET,
    PathCache,
    alpha_path_end_label,
    alpha_path_zero_at,
    default_cache,
    graceful_path_zero_at,
    zigzag_alpha_path,
)
from .short_legs import ShortLegSpec, label_short_leg_spider
from .treedoc import dumps_document, from_document, load_document, to_document, to_dot


def _parse_legs(text: str) -> list[int]:
    try:
        legs = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValidationError(f"cannot parse leg lengths from {text!r}")
    if not legs:
        raise ValidationError("no leg lengths given")
    return legs


def _parse_fixed(items: list[str]) -> dict[int, int]:
    fixed = {}
    for item in items:
        try:
            v, lab = item.split("=")
            fixed[int(v)] = int(lab)
        except ValueError:
            raise ValidationError(f"--fix expects v=label, got {item!r}")
    return fixed


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                        help="search node budget")
    common.add_argument("--cache", help="path provider cache file")
    common.add_argument("--format", choices=["json", "dot"], default="json",
                        help="output format")
    common.add_argument("--trace", action="store_true",
                        help="include the construction trace in the output")

    parser = argparse.ArgumentParser(prog="graceful-spiders")
    sub = parser.add_subparsers(dest="command", required=True)

    spider = sub.add_parser("spider", help="label a spider")
    ssub = spider.add_subparsers(dest="variant", required=True)
    p = ssub.add_parser("doubling", parents=[common])
    p.add_argument("--legs", required=True, help="comma-separated leg lengths")
    p = ssub.add_parser("short", parents=[common])
    p.add_argument("--long", dest="long_leg", type=int, required=True)
    p.add_argument("--two", type=int, default=0)
    p.add_argument("--one", type=int, default=0)
    p = ssub.add_parser("three-long", parents=[common])
    p.add_argument("--legs", required=True)

    p = sub.add_parser("attach", parents=[common])
    p.add_argument("--graph", required=True, help="labeled tree document")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--path-len", type=int, required=True,
                   help="vertex count n of the attached path")

    p = sub.add_parser("amalgamate", parents=[common])
    p.add_argument("--alpha", required=True, help="alpha-labeled G document")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--graceful", required=True, help="gracefully labeled H document")
    p.add_argument("--v", type=int, required=True)

    p = sub.add_parser("path", parents=[common])
    p.add_argument("kind", choices=["zigzag", "graceful", "alpha"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--position", type=int, help="position of the 0 label")
    p.add_argument("--end-label", type=int, help="label of the first endpoint")
    p.add_argument("--index", type=int, help="required alpha index")

    p = sub.add_parser("oracle", parents=[common])
    p.add_argument("--graph", required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--fix", action="append", default=[], help="v=label")
    p.add_argument("--alpha", action="store_true", dest="alpha_only",
                   help="restrict to alpha-labelings")

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--graph", required=True)

    p = sub.add_parser("export", parents=[common])
    p.add_argument("--graph", required=True)

    return parser


def _emit(args, tree, labeling=None, spider=None, extra: Optional[dict] = None):
    if args.format == "dot":
        sys.stdout.write(to_dot(tree, labeling))
        return
    doc = to_document(tree, labeling, spider)
    if extra:
        doc.update(extra)
    sys.stdout.write(dumps_document(doc))


def _trace_doc(trace) -> list[dict]:
    return [
        {"operation": s.operation, "params": s.params, "edge_count": s.edge_count}
        for s in trace.steps
    ]


def _cache(args) -> Optional[PathCache]:
    return PathCache(args.cache) if args.cache else default_cache()


def run(argv: list[str]) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _dispatch(args)
        return 0
    except ConstructionInvariantError as exc:
        _error("internal", exc)
        return 4
    except ResourceBudgetError as exc:
        _error("resource", exc)
        return 3
    except ValidationError as exc:
        _error("validation", exc)
        return 2


def _error(kind: str, exc: Exception):
    sys.stdout.write(
        json.dumps({"error": {"type": kind, "message": str(exc)}}, indent=2) + "\n"
    )


def _dispatch(args):
    cache = _cache(args)
    if args.command == "spider":
        if args.variant == "doubling":
            legs = _parse_legs(args.legs)
            check_doubling(legs)
            sp, lab, trace = label_doubling_spider(legs, budget=args.budget, cache=cache)
            extra = {"trace": _trace_doc(trace)} if args.trace else None
            _emit(args, sp.tree, lab, sp, extra)
        elif args.variant == "short":
            spec = ShortLegSpec(args.long_leg, args.two, args.one)
            sp, lab = label_short_leg_spider(spec, budget=args.budget, cache=cache)
            _emit(args, sp.tree, lab, sp)
        else:
            legs = _parse_legs(args.legs)
            sp, lab = label_three_long_legs(legs, budget=args.budget, cache=cache)
            _emit(args, sp.tree, lab, sp)
    elif args.command == "attach":
        tree, labeling, _ = from_document(load_document(args.graph))
        if labeling is None:
            raise ValidationError("attach requires a labeled graph document")
        result = attach_path(tree, labeling, args.vertex, args.path_len,
                             budget=args.budget, cache=cache)
        _emit(args, result.tree, result.labeling,
              extra={"shift": result.shift, "bridge_label": result.bridge_label,
                     "path_ids": list(result.path_ids)})
    elif args.command == "amalgamate":
        g_tree, g_lab, _ = from_document(load_document(args.alpha))
        h_tree, h_lab, _ = from_document(load_document(args.graceful))
        if g_lab is None or h_lab is None:
            raise ValidationError("amalgamate requires labeled documents")
        idx = alpha_index(g_tree, g_lab)
        if idx is None:
            raise ValidationError("G's labeling is not an alpha-labeling")
        tree, lab = amalgamate(
            AmalgamationInput(AlphaLabeling(g_tree, g_lab, idx), args.u,
                              h_tree, h_lab, args.v)
        )
        _emit(args, tree, lab)
    elif args.command == "path":
        _path_cmd(args, cache)
    elif args.command == "oracle":
        tree, _, _ = from_document(load_document(args.graph))
        fixed = _parse_fixed(args.fix)
        if args.count:
            report = count_graceful(tree, budget=args.budget,
                                    alpha_constrained=args.alpha_only, fixed=fixed)
        else:
            report = find_graceful(tree, fixed=fixed, budget=args.budget,
                                   alpha_constrained=args.alpha_only)
        out = {
            "found": None if report.found is None else
            {str(v): report.found[v] for v in sorted(report.found.values)},
            "count": report.count,
            "nodes_explored": report.nodes_explored,
            "exhausted": report.exhausted,
        }
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
    elif args.command == "verify":
        tree, labeling, _ = from_document(load_document(args.graph))
        if labeling is None:
            raise ValidationError("verify requires a labeled document")
        graceful = is_graceful(tree, labeling)
        idx = alpha_index(tree, labeling) if graceful else None
        sys.stdout.write(
            json.dumps({"graceful": graceful, "alpha_index": idx}, indent=2) + "\n"
        )
        if not graceful:
            raise ValidationError("labeling is not graceful")
    elif args.command == "export":
        tree, labeling, spider = from_document(load_document(args.graph))
        _emit(args, tree, labeling, spider)


def _path_cmd(args, cache):
    if args.kind == "zigzag":
        al = zigzag_alpha_path(args.n)
        _emit(args, al.tree, al.labeling, extra={"alpha": al.alpha})
        return
    if args.kind == "graceful":
        if args.position is None:
            raise ValidationError("path graceful requires --position")
        lab = graceful_path_zero_at(args.n, args.position,
                                    budget=args.budget, cache=cache)
        _emit(args, path_tree(args.n), lab)
        return
    if (args.position is None) == (args.end_label is None):
        raise ValidationError("path alpha requires exactly one of --position / --end-label")
    if args.position is not None:
        al = alpha_path_zero_at(args.n, args.position, budget=args.budget, cache=cache)
    else:
        al = alpha_path_end_label(args.n, args.end_label, args.index,
                                  budget=args.budget, cache=cache)
    _emit(args, al.tree, al.labeling, extra={"alpha": al.alpha})


def entrypoint():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
