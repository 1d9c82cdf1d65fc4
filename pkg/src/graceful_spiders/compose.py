"""Amalgamation of an alpha-labeled graph with a graceful one, and its
application: graceful labelings of spiders with up to three legs of length
three or more.

The amalgamation identifies a vertex u of G (labeled 0 or alpha in an
alpha-labeling) with a 0-labeled vertex v of a graceful H. Shifting H's
labels up by alpha and G's upper-class labels up by |E(H)| interleaves the
two edge-label ranges into [1, |E(G)|+|E(H)|]. A spider with three long legs
splits into the path through its two longest legs (alpha-labeled with the
center at 0) and the remaining short-legged spider (Theorem 4, center 0);
one amalgamation at the center glues them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ConstructionInvariantError, ValidationError
from .model import (
    AlphaLabeling,
    Labeling,
    Spider,
    Tree,
    alpha_flip,
    build_spider,
    is_graceful,
)
from .paths import DEFAULT_NODE_BUDGET, PathCache, alpha_path_zero_at
from .short_legs import ShortLegSpec, label_short_leg_spider


@dataclass(frozen=True)
class AmalgamationInput:
    """G with an alpha-labeling and attachment vertex u (labeled 0 or alpha);
    H with a graceful labeling and attachment vertex v labeled 0."""

    g: AlphaLabeling
    u: int
    h_tree: Tree
    h_labeling: Labeling
    v: int


def amalgamate(inp: AmalgamationInput) -> tuple[Tree, Labeling]:
    """Identify u of G with v of H and return the graceful labeling.

    When u carries 0 rather than alpha, the flip is applied first. Result
    vertex ids: G keeps its ids (the identified vertex is u); an H vertex w
    becomes g.n + w when w < v and g.n + w - 1 when w > v.
    """
    g, u = inp.g, inp.u
    if not 0 <= u < g.tree.n:
        raise ValidationError(f"vertex {u} not in G")
    if not 0 <= inp.v < inp.h_tree.n:
        raise ValidationError(f"vertex {inp.v} not in H")
    if g[u] not in (0, g.alpha):
        raise ValidationError(
            f"u must be labeled 0 or alpha={g.alpha}, got {g[u]}"
        )
    if not is_graceful(inp.h_tree, inp.h_labeling):
        raise ValidationError("H's labeling is not graceful")
    if inp.h_labeling[inp.v] != 0:
        raise ValidationError(f"v must be labeled 0, got {inp.h_labeling[inp.v]}")
    if g[u] == 0 and g.alpha != 0:
        g = alpha_flip(g)
    alpha = g.alpha
    e_h = inp.h_tree.m
    n_g = g.tree.n

    def h_id(w: int) -> int:
        if w == inp.v:
            return u
        return n_g + w if w < inp.v else n_g + w - 1

    edges = list(g.tree.edges)
    edges.extend((h_id(a), h_id(b)) for a, b in inp.h_tree.edges)
    tree = Tree(n_g + inp.h_tree.n - 1, edges)
    values = {
        w: (x if x <= alpha else x + e_h) for w, x in g.labeling.values.items()
    }
    for w in range(inp.h_tree.n):
        if w != inp.v:
            values[h_id(w)] = inp.h_labeling[w] + alpha
    lab = Labeling(values)
    if lab[u] != alpha:
        raise ConstructionInvariantError(
            f"identified vertex carries {lab[u]}, expected alpha={alpha}"
        )
    if not is_graceful(tree, lab):
        raise ConstructionInvariantError(
            "amalgamation produced a non-graceful labeling; this contradicts "
            "Lemma 1"
        )
    return tree, lab


def label_three_long_legs(
    leg_lengths: list[int],
    budget: int = DEFAULT_NODE_BUDGET,
    cache: Optional[PathCache] = None,
) -> tuple[Spider, Labeling]:
    """Graceful labeling of a spider with at most three legs of length >= 3.

    With at most one long leg the short-leg construction already applies and
    is delegated to. Otherwise the two longest legs (ties by position in the
    input) become the path G through the center, alpha-labeled with the
    center at 0; the rest of the spider is labeled by the short-leg
    construction and amalgamated at the center.
    """
    if not leg_lengths:
        raise ValidationError("leg length list must be non-empty")
    if any(ell < 1 for ell in leg_lengths):
        raise ValidationError("leg lengths must be positive")
    long_count = sum(1 for ell in leg_lengths if ell >= 3)
    if long_count > 3:
        raise ValidationError(
            f"at most three legs of length >= 3 are supported, got {long_count}"
        )
    if long_count <= 1:
        return label_short_leg_spider(
            _short_spec(leg_lengths), budget=budget, cache=cache
        )

    ordered = sorted(
        range(len(leg_lengths)), key=lambda i: (-leg_lengths[i], i)
    )
    ell1 = leg_lengths[ordered[0]]
    ell2 = leg_lengths[ordered[1]]
    rest = [leg_lengths[i] for i in ordered[2:]]

    n_path = ell1 + ell2 + 1
    assert n_path >= 7  # both legs >= 3, so Lemma 2(b)'s P_5 exception is moot
    g = alpha_path_zero_at(n_path, ell1, budget=budget, cache=cache)

    if rest:
        spec = _short_spec(rest)
        star, star_lab = label_short_leg_spider(spec, budget=budget, cache=cache)
        h_tree, h_labeling = star.tree, star_lab
        star_legs = star.legs
    else:
        h_tree, h_labeling = Tree(1, []), Labeling({0: 0})
        star_legs = ()

    tree, lab = amalgamate(AmalgamationInput(g, ell1, h_tree, h_labeling, 0))

    # Rebuild on the canonical spider numbering: legs ordered L1, L2, then
    # the short spider's own leg order. The amalgamated ids follow the
    # documented conventions: path positions for G, n_path + w - 1 for star
    # vertex w > 0.
    spec_lengths = [ell1, ell2] + (
        [len(l) for l in star_legs] if rest else []
    )
    spider = build_spider(spec_lengths)
    mapping = {ell1: 0}
    next_id = 1
    for d in range(1, ell1 + 1):
        mapping[ell1 - d] = next_id
        next_id += 1
    for d in range(1, ell2 + 1):
        mapping[ell1 + d] = next_id
        next_id += 1
    for leg in star_legs:
        for w in leg:
            mapping[n_path + w - 1] = next_id
            next_id += 1
    final = Labeling({mapping[w]: lab[w] for w in range(tree.n)})
    if not is_graceful(spider.tree, final):
        raise ConstructionInvariantError(
            "three-long-leg construction produced a non-graceful labeling; "
            "this contradicts Theorem 5"
        )
    return spider, final


def _short_spec(leg_lengths: list[int]) -> ShortLegSpec:
    """Express a leg multiset with at most one length >= 3 as a ShortLegSpec.

    The distinguished leg is the longest one; remaining legs must have
    length at most 2.
    """
    lengths = sorted(leg_lengths, reverse=True)
    ell = lengths[0]
    others = lengths[1:]
    if others and others[0] > 2:
        raise ValidationError("more than one leg of length >= 3")
    s = sum(1 for x in others if x == 2)
    t = sum(1 for x in others if x == 1)
    return ShortLegSpec(ell, s, t)
