"""Graceful labelings of spiders whose sorted leg lengths grow by doubling.

A spider with legs ell_1 <= ... <= ell_s is labeled by iterated path
attachment when ell_{i+1} >= 2*ell_i + 2 for i in [2, s-1] and
ell_2 >= 2*ell_1 + 2 (or + 4 when ell_2 = 1 mod 4). The base tree S_1 is the
first leg, center at an endpoint labeled 0, plus one pre-labeled leaf y_i for
every later leg whose length is 1 mod 4 (those lengths cannot be attached
directly, since attachment requires a vertex count != 1 mod 4; extending a
leaf by ell_i - 1 vertices sidesteps the residue). Each remaining leg is then
grafted with attach_path, whose precondition is guaranteed to hold at every
step -- a failure is reported as an internal contradiction, not user error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .attach import attach_path
from .errors import ConstructionInvariantError, ValidationError
from .model import (
    ConstructionTrace,
    Labeling,
    Spider,
    Tree,
    build_spider,
    is_graceful,
)
from .paths import DEFAULT_NODE_BUDGET, PathCache, graceful_path_zero_at


@dataclass(frozen=True)
class AttachStep:
    """One planned attachment: leg index i, attach point kind ('x' for the
    center, 'y' for the leg's pre-labeled leaf), attached vertex count."""

    leg_index: int
    attach_at: str
    vertex_count: int


@dataclass(frozen=True)
class DoublingPlan:
    sorted_lengths: tuple[int, ...]
    k_indices: tuple[int, ...]
    base_leg: int
    base_leaves: tuple[int, ...]
    steps: tuple[AttachStep, ...] = field(default=())


def check_doubling(leg_lengths: list[int]) -> DoublingPlan:
    """Validate the doubling growth conditions and lay out the plan.

    Lengths are sorted ascending first; the conditions are stated (and only
    satisfiable) in that order. Raises a validation error naming the first
    violated inequality.
    """
    if not leg_lengths:
        raise ValidationError("leg length list must be non-empty")
    if any(ell < 1 for ell in leg_lengths):
        raise ValidationError("leg lengths must be positive")
    lengths = tuple(sorted(leg_lengths))
    s = len(lengths)
    if s >= 2:
        bound = 2 * lengths[0] + (4 if lengths[1] % 4 == 1 else 2)
        if lengths[1] < bound:
            raise ValidationError(
                f"doubling condition failed at i=2: ell_2 = {lengths[1]} < {bound}"
                + (" (ell_2 = 1 mod 4 requires 2*ell_1 + 4)" if lengths[1] % 4 == 1 else "")
            )
    for i in range(2, s):  # 1-based i in [2, s-1]: compare ell_{i+1} with ell_i
        if lengths[i] < 2 * lengths[i - 1] + 2:
            raise ValidationError(
                f"doubling condition failed at i={i}: ell_{i + 1} = {lengths[i]} < "
                f"2*{lengths[i - 1]} + 2 = {2 * lengths[i - 1] + 2}"
            )
    k_indices = tuple(i for i in range(2, s + 1) if lengths[i - 1] % 4 == 1)
    steps = tuple(
        AttachStep(i, "y", lengths[i - 1] - 1)
        if i in k_indices
        else AttachStep(i, "x", lengths[i - 1])
        for i in range(2, s + 1)
    )
    return DoublingPlan(lengths, k_indices, lengths[0], k_indices, steps)


def label_doubling_spider(
    leg_lengths: list[int],
    budget: int = DEFAULT_NODE_BUDGET,
    cache: Optional[PathCache] = None,
) -> tuple[Spider, Labeling, ConstructionTrace]:
    """Graceful labeling of the doubling spider, on the canonical numbering
    of build_spider(sorted lengths).

    Two or fewer legs make the spider a path, labeled directly with the
    center at 0; otherwise the iterated attachment runs, asserting the
    attachment precondition and the center-label recurrence at every step.
    """
    plan = check_doubling(leg_lengths)
    lengths = plan.sorted_lengths
    s = len(lengths)
    spider = build_spider(list(lengths))
    trace = ConstructionTrace()

    if s <= 2:
        # The spider is a path; its center sits at position ell_1 from the
        # first leg's leaf (position 0 when s = 1).
        n = sum(lengths) + 1
        pos = lengths[0] if s == 2 else 0
        path_lab = graceful_path_zero_at(n, pos, budget=budget, cache=cache)
        # Path order: leg-1 leaf .. center .. leg-2 leaf; canonical ids walk
        # leg 1 outward from the center, then leg 2.
        values = {0: path_lab[pos]}
        for d in range(1, lengths[0] + 1):
            values[d] = path_lab[pos - d] if s == 2 else path_lab[d]
        if s == 2:
            for d in range(1, lengths[1] + 1):
                values[lengths[0] + d] = path_lab[pos + d]
        lab = Labeling(values)
        trace.record("path_base", {"n": n, "zero_position": pos}, n - 1)
        _certify(spider, lab, trace)
        return spider, lab, trace

    # Base S_1: the first leg as a path with the center x at an endpoint
    # labeled 0 (zigzag), plus a leaf y_i labeled ell_1 + j for the j-th
    # residue-1 leg. Working ids: 0 = x, 1..ell_1 the leg, then the leaves.
    ell1 = lengths[0]
    base_path = graceful_path_zero_at(ell1 + 1, 0, budget=budget, cache=cache)
    n_work = ell1 + 1
    edges = [(v, v + 1) for v in range(ell1)]
    values = {v: base_path[v] for v in range(ell1 + 1)}
    legs_work: dict[int, list[int]] = {1: list(range(1, ell1 + 1))}
    y_of: dict[int, int] = {}
    for j, k in enumerate(plan.k_indices, start=1):
        y = n_work
        n_work += 1
        edges.append((0, y))
        values[y] = ell1 + j
        y_of[k] = y
        legs_work[k] = [y]
    tree = Tree(n_work, edges)
    lab = Labeling(values)
    trace.record(
        "base",
        {"leg": ell1, "leaves": {k: values[y] for k, y in y_of.items()}},
        tree.m,
    )
    if not is_graceful(tree, lab):
        raise ConstructionInvariantError(
            "base spider S_1 is not graceful; this contradicts Theorem 3", trace
        )

    center = 0
    for step in plan.steps:
        i = step.leg_index
        at = center if step.attach_at == "x" else y_of[i]
        before = lab[center]
        try:
            result = attach_path(tree, lab, at, step.vertex_count, budget=budget, cache=cache)
        except ValidationError as exc:
            raise ConstructionInvariantError(
                f"attachment step i={i} violated a Theorem 2 precondition "
                f"({exc}); this contradicts Theorem 3",
                trace,
            ) from exc
        tree, lab = result.tree, result.labeling
        if step.attach_at == "x":
            legs_work[i] = list(result.path_ids)
        else:
            legs_work[i] = [y_of[i]] + list(result.path_ids)
        if lab[center] - before != result.shift:
            raise ConstructionInvariantError(
                f"center label moved by {lab[center] - before}, expected the "
                f"shift {result.shift}, at step i={i}",
                trace,
            )
        trace.record(
            "attach",
            {
                "leg_index": i,
                "attach_at": step.attach_at,
                "vertex_count": step.vertex_count,
                "shift": result.shift,
                "bridge_label": result.bridge_label,
            },
            tree.m,
        )

    # Remap working ids onto the canonical spider numbering: center 0, legs
    # consecutive outward in sorted order.
    mapping = {center: 0}
    next_id = 1
    for i in range(1, s + 1):
        for w in legs_work[i]:
            mapping[w] = next_id
            next_id += 1
    final = Labeling({mapping[w]: lab[w] for w in range(tree.n)})
    _certify(spider, final, trace)
    return spider, final, trace


def _certify(spider: Spider, lab: Labeling, trace: ConstructionTrace):
    if not is_graceful(spider.tree, lab):
        raise ConstructionInvariantError(
            "doubling construction produced a non-graceful labeling; this "
            "contradicts Theorem 3",
            trace,
        )
