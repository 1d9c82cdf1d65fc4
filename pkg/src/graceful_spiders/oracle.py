"""Brute-force graceful-labeling search over arbitrary small trees.

This is the independent ground truth the constructions are checked against:
backtracking over vertex labels in a DFS preorder from the highest-degree
vertex, descending into heavier subtrees first. Every newly labeled vertex
touches a labeled neighbor, so the used-label / used-edge-difference bitmask
prunes fire immediately, and long internal paths -- where the conflicts live
-- are explored before the interchangeable leaves. Budget exhaustion is
reported, never raised; only a fully explored space counts as a definitive
answer.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import ValidationError
from .model import Labeling, Tree

DEFAULT_ORACLE_BUDGET = 10**8


@dataclass(frozen=True)
class SearchReport:
    found: Optional[Labeling]
    count: Optional[int]
    nodes_explored: int
    elapsed: float
    exhausted: bool


def _search_order(t: Tree) -> list[int]:
    """DFS preorder from the highest-degree vertex (smallest id on ties),
    visiting children by descending subtree size so leaves come last."""
    adj = t.adjacency()
    start = min(range(t.n), key=lambda v: (-len(adj[v]), v))
    # Subtree sizes via a reverse-BFS accumulation.
    parent = {start: None}
    bfs = _bfs(adj, start)
    for v in bfs:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
    size = [1] * t.n
    for v in reversed(bfs):
        if parent[v] is not None:
            size[parent[v]] += size[v]
    order = []
    stack = [start]
    seen = {start}
    while stack:
        v = stack.pop()
        order.append(v)
        children = [w for w in adj[v] if w not in seen]
        seen.update(children)
        for w in sorted(children, key=lambda w: (size[w], -w)):
            stack.append(w)
    return order


def _bfs(adj: dict[int, list[int]], start: int) -> list[int]:
    order = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in sorted(adj[v]):
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def _class_pools(t: Tree, alpha_constrained: bool) -> list[Optional[list[list[int]]]]:
    """Label pools per vertex: unconstrained, or one layout per choice of
    which bipartition class is the low class of an alpha-labeling."""
    m = t.m
    if not alpha_constrained:
        return [None]
    color = [-1] * t.n
    color[0] = 0
    adj = t.adjacency()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if color[w] == -1:
                color[w] = 1 - color[v]
                queue.append(w)
    layouts = []
    for low_color in (0, 1):
        n_low = sum(1 for c in color if c == low_color)
        alpha = n_low - 1
        layouts.append(
            [
                list(range(0, alpha + 1))
                if color[v] == low_color
                else list(range(alpha + 1, m + 1))
                for v in range(t.n)
            ]
        )
    return layouts


def find_graceful(
    t: Tree,
    fixed: Optional[Mapping[int, int]] = None,
    budget: int = DEFAULT_ORACLE_BUDGET,
    alpha_constrained: bool = False,
) -> SearchReport:
    """First graceful labeling of t respecting the fixed assignments.

    A report without a witness is definitive infeasibility only when
    `exhausted` is set; otherwise the budget ran out first. With
    alpha_constrained, only alpha-labelings are searched (both choices of
    low bipartition class).
    """
    return _run(t, fixed or {}, budget, alpha_constrained, count_all=False)


def count_graceful(
    t: Tree,
    budget: int = DEFAULT_ORACLE_BUDGET,
    alpha_constrained: bool = False,
    fixed: Optional[Mapping[int, int]] = None,
) -> SearchReport:
    """Count all graceful labelings of t; the count is complete only when
    `exhausted` is set."""
    return _run(t, fixed or {}, budget, alpha_constrained, count_all=True)


def _run(
    t: Tree,
    fixed: Mapping[int, int],
    budget: int,
    alpha_constrained: bool,
    count_all: bool,
) -> SearchReport:
    m = t.m
    for v, lab in fixed.items():
        if not 0 <= v < t.n:
            raise ValidationError(f"fixed vertex {v} not in the tree")
        if not 0 <= lab <= m:
            raise ValidationError(f"fixed label {lab} outside [0, {m}]")
    if len(set(fixed.values())) != len(fixed):
        raise ValidationError("fixed labels must be injective")

    start_time = time.monotonic()
    order = _search_order(t)
    adj = t.adjacency()
    pred = []  # labeled neighbors of order[i] among order[:i]
    placed: set[int] = set()
    for v in order:
        pred.append([w for w in adj[v] if w in placed])
        placed.add(v)

    # Unfixed leaf siblings are interchangeable, so a witness search may
    # demand increasing labels along each sibling group without losing
    # completeness. Counting must see every labeling, so it skips this.
    sym_prev = [-1] * t.n
    if not count_all:
        last_leaf: dict[int, int] = {}  # parent -> previous unfixed leaf
        for v in order:
            if len(adj[v]) == 1 and v not in fixed and v != order[0]:
                parent = adj[v][0]
                if parent in last_leaf:
                    sym_prev[v] = last_leaf[parent]
                last_leaf[parent] = v

    nodes = 0
    count = 0
    witness: Optional[dict[int, int]] = None
    ran_out = False

    for pools in _class_pools(t, alpha_constrained):
        labels: dict[int, int] = {}

        def rec(i: int, used: int, diffs: int) -> bool:
            """Returns True to stop the whole search (witness found or
            budget exhausted)."""
            nonlocal nodes, count, witness, ran_out
            if i == t.n:
                count += 1
                if not count_all:
                    witness = dict(labels)
                    return True
                return False
            v = order[i]
            if v in fixed:
                pool = [fixed[v]]
            elif pools is None:
                pool = range(m + 1)
            else:
                pool = pools[v]
            for lab in pool:
                if nodes >= budget:
                    ran_out = True
                    return True
                nodes += 1
                bit = 1 << lab
                if used & bit:
                    continue
                if sym_prev[v] >= 0 and lab < labels[sym_prev[v]]:
                    continue
                new_diffs = 0
                ok = True
                for w in pred[i]:
                    d = abs(lab - labels[w])
                    dbit = 1 << d
                    if d == 0 or (diffs | new_diffs) & dbit:
                        ok = False
                        break
                    new_diffs |= dbit
                if not ok:
                    continue
                labels[v] = lab
                if rec(i + 1, used | bit, diffs | new_diffs):
                    return True
                del labels[v]
            return False

        if rec(0, 0, 0):
            break

    elapsed = time.monotonic() - start_time
    found = Labeling(witness) if witness is not None else None
    return SearchReport(
        found=found,
        count=count if count_all else None,
        nodes_explored=nodes,
        elapsed=elapsed,
        exhausted=not ran_out,
    )
