import pytest

from graceful_spiders.compose import (
    AmalgamationInput,
    amalgamate,
    label_three_long_legs,
)
from graceful_spiders.errors import ValidationError
from graceful_spiders.model import (
    AlphaLabeling,
    Labeling,
    Tree,
    is_graceful,
    path_tree,
)
from graceful_spiders.paths import alpha_path_zero_at
from graceful_spiders.short_legs import ShortLegSpec, label_short_leg_spider


def p3_alpha():
    return AlphaLabeling(path_tree(3), Labeling.from_sequence([0, 2, 1]), 1)


class TestAmalgamate:
    def test_p3_p2_example(self):
        tree, lab = amalgamate(
            AmalgamationInput(p3_alpha(), 0, path_tree(2), Labeling.from_sequence([0, 1]), 0)
        )
        assert tree.m == 3
        assert lab[0] == 1  # identified vertex gets alpha
        assert [lab[v] for v in range(tree.n)] == [1, 3, 0, 2]
        assert is_graceful(tree, lab)

    def test_single_vertex_h(self):
        tree, lab = amalgamate(
            AmalgamationInput(p3_alpha(), 0, Tree(1, []), Labeling({0: 0}), 0)
        )
        assert tree.m == 2 and is_graceful(tree, lab)

    def test_alpha_zero_case(self):
        g = AlphaLabeling(path_tree(2), Labeling.from_sequence([0, 1]), 0)
        tree, lab = amalgamate(
            AmalgamationInput(g, 0, path_tree(2), Labeling.from_sequence([0, 1]), 0)
        )
        assert tree.n == 3 and is_graceful(tree, lab)

    def test_u_at_alpha_no_flip_needed(self):
        g = AlphaLabeling(path_tree(3), Labeling.from_sequence([1, 2, 0]), 1)
        tree, lab = amalgamate(
            AmalgamationInput(g, 0, path_tree(2), Labeling.from_sequence([0, 1]), 0)
        )
        assert lab[0] == 1 and is_graceful(tree, lab)

    def test_u_label_hypothesis(self):
        with pytest.raises(ValidationError, match="0 or alpha"):
            amalgamate(
                AmalgamationInput(p3_alpha(), 1, path_tree(2), Labeling.from_sequence([0, 1]), 0)
            )

    def test_v_label_hypothesis(self):
        with pytest.raises(ValidationError, match="labeled 0"):
            amalgamate(
                AmalgamationInput(p3_alpha(), 0, path_tree(2), Labeling.from_sequence([0, 1]), 1)
            )

    def test_h_graceful_hypothesis(self):
        with pytest.raises(ValidationError, match="graceful"):
            amalgamate(
                AmalgamationInput(p3_alpha(), 0, path_tree(3), Labeling.from_sequence([0, 1, 2]), 0)
            )

    def test_edge_label_partition(self, mem_cache):
        g = alpha_path_zero_at(9, 4, cache=mem_cache)
        star, star_lab = label_short_leg_spider(ShortLegSpec(2, 2, 1), cache=mem_cache)
        e_h = star.tree.m
        tree, lab = amalgamate(AmalgamationInput(g, 4, star.tree, star_lab, 0))
        assert tree.m == g.tree.m + e_h
        h_ids = {4} | set(range(g.tree.n, tree.n))
        h_diffs = sorted(
            abs(lab[a] - lab[b]) for a, b in tree.edges if a in h_ids and b in h_ids
        )
        g_diffs = sorted(
            abs(lab[a] - lab[b]) for a, b in tree.edges if not (a in h_ids and b in h_ids)
        )
        assert h_diffs == list(range(1, e_h + 1))
        assert g_diffs == list(range(e_h + 1, tree.m + 1))


class TestThreeLongLegs:
    @pytest.mark.parametrize(
        "legs,m",
        [
            ([3, 3, 2, 2, 1], 11),
            ([5, 1, 1, 1], 8),
            ([4, 3, 3, 2, 2], 14),
            ([3, 3], 6),
            ([10, 9, 8], 27),
            ([6, 5], 11),
        ],
    )
    def test_graceful(self, legs, m, mem_cache):
        sp, lab = label_three_long_legs(legs, cache=mem_cache)
        assert sp.tree.m == m
        assert is_graceful(sp.tree, lab)

    def test_leg_multiset_preserved(self, mem_cache):
        sp, _ = label_three_long_legs([4, 3, 3, 2, 2], cache=mem_cache)
        assert sorted(len(leg) for leg in sp.legs) == [2, 2, 3, 3, 4]

    def test_too_many_long_legs(self, mem_cache):
        with pytest.raises(ValidationError, match="three"):
            label_three_long_legs([3, 3, 3, 3], cache=mem_cache)

    def test_bad_input(self, mem_cache):
        with pytest.raises(ValidationError):
            label_three_long_legs([], cache=mem_cache)
        with pytest.raises(ValidationError):
            label_three_long_legs([3, 0], cache=mem_cache)
