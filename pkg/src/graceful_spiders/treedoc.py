"""The JSON tree document and DOT export.

The document is the interchange unit for every CLI subcommand:
{"n": int, "edges": [[a,b],...], "labels": {"0": int, ...}?, "center": int?,
"legs": [[v1,...],...]?}. Emission is canonical (fixed key order, sorted
edges, labels keyed by ascending vertex id) so export -> import -> export
round-trips byte-identically.
"""

from __future__ import annotations

import json
from typing import Optional

from .errors import ValidationError
from .model import Labeling, Spider, Tree


def to_document(
    tree: Tree,
    labeling: Optional[Labeling] = None,
    spider: Optional[Spider] = None,
) -> dict:
    doc: dict = {"n": tree.n, "edges": [[a, b] for a, b in tree.edges]}
    if labeling is not None:
        doc["labels"] = {str(v): labeling[v] for v in sorted(labeling.values)}
    if spider is not None:
        doc["center"] = spider.center
        doc["legs"] = [list(leg) for leg in spider.legs]
    return doc


def from_document(doc: dict) -> tuple[Tree, Optional[Labeling], Optional[Spider]]:
    try:
        n = int(doc["n"])
        edges = [(int(a), int(b)) for a, b in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed tree document: {exc}") from exc
    tree = Tree(n, edges)
    labeling = None
    if "labels" in doc and doc["labels"] is not None:
        try:
            labeling = Labeling({int(v): int(x) for v, x in doc["labels"].items()})
        except (AttributeError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed labels: {exc}") from exc
    spider = None
    if "center" in doc and "legs" in doc:
        spider = Spider(
            tree, int(doc["center"]), tuple(tuple(map(int, leg)) for leg in doc["legs"])
        )
    return tree, labeling, spider


def dumps_document(doc: dict) -> str:
    ordered: dict = {"n": doc["n"], "edges": doc["edges"]}
    for key in ("labels", "center", "legs"):
        if key in doc:
            ordered[key] = doc[key]
    if "labels" in ordered:
        ordered["labels"] = {
            str(k): ordered["labels"][k]
            for k in sorted(ordered["labels"], key=lambda s: int(s))
        }
    for key, value in doc.items():
        if key not in ordered:
            ordered[key] = value
    return json.dumps(ordered, indent=2) + "\n"


def load_document(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc


def to_dot(tree: Tree, labeling: Optional[Labeling] = None) -> str:
    """DOT rendering with vertex labels as node text and edge differences
    as edge text."""
    lines = ["graph G {", "  node [shape=circle];"]
    for v in range(tree.n):
        text = str(labeling[v]) if labeling is not None else str(v)
        lines.append(f'  v{v} [label="{text}"];')
    for a, b in tree.edges:
        if labeling is not None:
            diff = abs(labeling[a] - labeling[b])
            lines.append(f'  v{a} -- v{b} [label="{diff}"];')
        else:
            lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
