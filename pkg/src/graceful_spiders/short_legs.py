"""Closed-form graceful labelings for spiders with one leg of arbitrary
length and every other leg of length at most two; the center always ends up
labeled 0, which is what makes these spiders a useful base for further path
attachment.

Vertex naming convention (mirrored by the canonical spider numbering): the
center is x0 = vertex 0; each length-2 leg i in [1, s] is x0-u_i-v_i with
u_i = 2i-1 and v_i = 2i; the distinguished leg runs x1..x_ell with
x_i = 2s + i; any length-1 legs are appended after that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ConstructionInvariantError, ValidationError
from .model import Labeling, Spider, Tree, build_spider, is_graceful
from .paths import DEFAULT_NODE_BUDGET, PathCache, graceful_path_zero_at


@dataclass(frozen=True)
class ShortLegSpec:
    """Leg profile: one distinguished leg of length ell, s legs of length 2,
    t legs of length 1."""

    ell: int
    s: int
    t: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValidationError("distinguished leg length must be >= 1")
        if self.s < 0 or self.t < 0:
            raise ValidationError("leg counts must be non-negative")

    @property
    def m_prime(self) -> int:
        """Edge count of the reduced spider (length-1 legs stripped)."""
        return 2 * self.s + self.ell

    @property
    def m(self) -> int:
        return self.m_prime + self.t


def role_labels(ell: int, s: int) -> tuple[int, list[int], list[int], list[int]]:
    """Evaluate the closed-form labeling for the (2 x s, ell) spider.

    Returns (center label, x labels for x1..x_ell, u labels, v labels).
    The formulas split on the parity of ell; m = 2s + ell.
    """
    m = 2 * s + ell
    if ell % 2 == 1:
        u = [m - (2 * i - 1) for i in range(1, s + 1)]
        v = [2 * i - 1 for i in range(1, s + 1)]
        x = []
        for i in range(1, ell + 1):
            r = i % 4
            if r == 0:
                x.append(i // 2)
            elif r == 1:
                x.append(m - (i - 1) // 2)
            elif r == 2:
                x.append(2 * s - 1 + (i + 2) // 2)
            else:
                x.append(m - (2 * s - 1) - (i + 1) // 2)
    else:
        u = [m - 2 * (i - 1) for i in range(1, s + 1)]
        v = [2 * i - 1 for i in range(1, s + 1)]
        x = []
        for i in range(1, ell + 1):
            r = i % 4
            if r == 0:
                x.append(i // 2)
            elif r == 1:
                x.append(m - 2 * s - (i - 1) // 2)
            elif r == 2:
                x.append(2 * s - 1 + (i + 2) // 2)
            else:
                x.append(m - 1 - (i - 3) // 2)
    return 0, x, u, v


def formula_spider(ell: int, s: int) -> Spider:
    """The canonical spider the closed-form labeling applies to."""
    return build_spider([2] * s + [ell])


def short_leg_formula(ell: int, s: int, allow_s1_experiment: bool = False) -> Labeling:
    """Closed-form graceful labeling of the (2 x s, ell) spider, center 0.

    Proven for s >= 2. With allow_s1_experiment the formulas are also
    evaluated at s = 1 and certified at runtime; that regime is an
    experiment, not a contract, and the default construction path never
    uses it.
    """
    if ell < 1:
        raise ValidationError("ell must be >= 1")
    if s < 2 and not (allow_s1_experiment and s == 1):
        raise ValidationError(
            "closed-form labeling requires s >= 2; use label_short_leg_spider "
            "for smaller spiders"
        )
    center, x, u, v = role_labels(ell, s)
    values = {0: center}
    for i in range(1, s + 1):
        values[2 * i - 1] = u[i - 1]
        values[2 * i] = v[i - 1]
    for i in range(1, ell + 1):
        values[2 * s + i] = x[i - 1]
    lab = Labeling(values)
    if not is_graceful(formula_spider(ell, s).tree, lab):
        raise ConstructionInvariantError(
            f"closed-form labeling failed the graceful check for ell={ell}, s={s}"
        )
    return lab


def extend_with_leaves(
    t: Tree, f: Labeling, center: int, t_count: int
) -> tuple[Tree, Labeling]:
    """Add t_count leaves at a 0-labeled center, labeled m'+1 .. m'+t_count.

    Preserves gracefulness and the center label.
    """
    if t_count < 0:
        raise ValidationError("leaf count must be non-negative")
    if not is_graceful(t, f):
        raise ValidationError("labeling must be graceful before extending")
    if f[center] != 0:
        raise ValidationError(f"center must be labeled 0, got {f[center]}")
    if t_count == 0:
        return t, f
    m_prime = t.m
    new_ids = range(t.n, t.n + t_count)
    extended = Tree(t.n + t_count, list(t.edges) + [(center, w) for w in new_ids])
    values = dict(f.values)
    for i, w in enumerate(new_ids, start=1):
        values[w] = m_prime + i
    lab = Labeling(values)
    if not is_graceful(extended, lab):
        raise ConstructionInvariantError("leaf extension broke gracefulness")
    return extended, lab


def label_short_leg_spider(
    spec: ShortLegSpec,
    budget: int = DEFAULT_NODE_BUDGET,
    cache: Optional[PathCache] = None,
) -> tuple[Spider, Labeling]:
    """Graceful labeling, center 0, of the spider with legs
    (ell, 2 x s, 1 x t), on the canonical numbering of `short_leg_spider`.

    s >= 2 uses the closed-form labeling; s <= 1 makes the reduced spider a
    path, labeled by the zero-at-position provider (center at an endpoint
    when s = 0, at the distance-2 interior vertex when s = 1). Length-1 legs
    are appended as labeled leaves afterward.
    """
    spider = short_leg_spider(spec)
    if spec.s >= 2:
        lab = short_leg_formula(spec.ell, spec.s)
        tree = formula_spider(spec.ell, spec.s).tree
    elif spec.s == 1:
        # reduced spider is the path v1-u1-x0-x1-..-x_ell; ids 2,1,0,3,4,...
        n = spec.ell + 3
        seq = graceful_path_zero_at(n, 2, budget=budget, cache=cache)
        values = {2: seq[0], 1: seq[1], 0: seq[2]}
        for i in range(1, spec.ell + 1):
            values[2 + i] = seq[2 + i]
        lab = Labeling(values)
        tree = build_spider([2, spec.ell]).tree
    else:
        n = spec.ell + 1
        seq = graceful_path_zero_at(n, 0, budget=budget, cache=cache)
        lab = Labeling({i: seq[i] for i in range(n)})
        tree = build_spider([spec.ell]).tree
    tree, lab = extend_with_leaves(tree, lab, 0, spec.t)
    if tree.edges != spider.tree.edges:
        raise ConstructionInvariantError("assembled tree does not match the spider")
    return spider, lab


def short_leg_spider(spec: ShortLegSpec) -> Spider:
    """Canonical spider for a ShortLegSpec: legs ordered 2-legs, distinguished
    leg, then 1-legs, matching the role numbering in this module."""
    lengths = [2] * spec.s + [spec.ell] + [1] * spec.t
    return build_spider(lengths)
