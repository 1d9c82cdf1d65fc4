"""Graft a labeled path onto a gracefully labeled graph and relabel.

Given a graceful labeling f of a tree G and a vertex u with
f(u) + floor(n/2) + 1 <= n and n not congruent to 1 mod 4, joining u to the
first endpoint of an n-vertex path yields a graceful tree. The path is
labeled by an alpha-labeling g with index floor(n/2) - 1 and endpoint label
f(u) + floor(n/2); the combined labeling shifts G up by floor(n/2) and the
high part of the path up by m + 1, so the bridge edge lands on label m + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ConstructionInvariantError, ValidationError
from .model import Labeling, Tree, is_graceful
from .paths import DEFAULT_NODE_BUDGET, PathCache, alpha_path_end_label


@dataclass(frozen=True)
class AttachResult:
    tree: Tree
    labeling: Labeling
    shift: int
    bridge_label: int
    path_ids: tuple[int, ...]
    """Ids of the attached path's vertices, in path order; path_ids[0] is the
    endpoint v joined to u."""


def attach_path(
    t: Tree,
    f: Labeling,
    u: int,
    n: int,
    budget: int = DEFAULT_NODE_BUDGET,
    cache: Optional[PathCache] = None,
) -> AttachResult:
    """Attach an n-vertex path at u and return the graceful relabeling.

    Path vertices get the ids t.n .. t.n+n-1 in path order. All documented
    postconditions (gracefulness, the shift by floor(n/2) on old vertices,
    bridge label m+1) are asserted; their failure raises
    ConstructionInvariantError, since the construction guarantees them.
    """
    if not 0 <= u < t.n:
        raise ValidationError(f"vertex {u} not in the host tree")
    if not is_graceful(t, f):
        raise ValidationError("host labeling is not graceful")
    if n < 2:
        raise ValidationError(f"precondition failed: n >= 2 (got n={n})")
    if n % 4 == 1:
        raise ValidationError(f"precondition failed: n != 1 (mod 4) (got n={n})")
    shift = n // 2
    if f[u] + shift + 1 > n:
        raise ValidationError(
            f"precondition failed: f(u) + floor(n/2) + 1 <= n "
            f"({f[u]} + {shift} + 1 > {n})"
        )

    m = t.m
    g = alpha_path_end_label(n, f[u] + shift, shift - 1, budget=budget, cache=cache)

    path_ids = tuple(range(t.n, t.n + n))
    edges = list(t.edges)
    edges.append((u, path_ids[0]))
    edges.extend((path_ids[j], path_ids[j + 1]) for j in range(n - 1))
    joined = Tree(t.n + n, edges)

    h = {w: f[w] + shift for w in range(t.n)}
    for j, w in enumerate(path_ids):
        gx = g[j]
        h[w] = gx if gx <= shift - 1 else gx + m + 1
    labeling = Labeling(h)

    if not is_graceful(joined, labeling):
        raise ConstructionInvariantError(
            "attach_path produced a non-graceful labeling; this contradicts the "
            "attachment guarantee"
        )
    if abs(labeling[u] - labeling[path_ids[0]]) != m + 1:
        raise ConstructionInvariantError(
            f"bridge edge label is {abs(labeling[u] - labeling[path_ids[0]])}, "
            f"expected {m + 1}"
        )
    return AttachResult(joined, labeling, shift, m + 1, path_ids)
