import pytest

from graceful_spiders.attach import attach_path
from graceful_spiders.errors import ValidationError
from graceful_spiders.model import Labeling, Tree, alpha_index, is_graceful, path_tree

from conftest import figure1_instance


class TestFigure1:
    def test_semi_golden(self, mem_cache):
        tree, f, u = figure1_instance()
        result = attach_path(tree, f, u, 7, cache=mem_cache)
        m = tree.m
        g_side = {result.labeling[w] for w in range(tree.n)}
        assert g_side == {3, 9, 8, 4, 6, 7, 5}
        assert result.bridge_label == m + 1 == 7
        diffs = sorted(
            abs(result.labeling[a] - result.labeling[b]) for a, b in result.tree.edges
        )
        assert diffs == list(range(1, 14))
        path_labels = {result.labeling[w] for w in result.path_ids}
        assert path_labels == {0, 1, 2, 10, 11, 12, 13}
        # The attached path carries an index-2 alpha-labeling with endpoint 6
        # before the relabeling.
        assert result.labeling[result.path_ids[0]] - (m + 1) == 6


class TestSmallCases:
    def test_single_vertex_base(self, mem_cache):
        result = attach_path(Tree(1, []), Labeling({0: 0}), 0, 2, cache=mem_cache)
        assert [result.labeling[v] for v in range(3)] == [1, 2, 0]
        assert sorted(abs(result.labeling[a] - result.labeling[b]) for a, b in result.tree.edges) == [1, 2]

    def test_p2_attach_4(self, mem_cache):
        result = attach_path(path_tree(2), Labeling.from_sequence([0, 1]), 0, 4, cache=mem_cache)
        assert {result.labeling[0], result.labeling[1]} == {2, 3}
        assert is_graceful(result.tree, result.labeling)


class TestPreconditions:
    def test_n_mod_4(self, mem_cache):
        with pytest.raises(ValidationError, match="mod 4"):
            attach_path(Tree(1, []), Labeling({0: 0}), 0, 5, cache=mem_cache)

    def test_n_too_small(self, mem_cache):
        with pytest.raises(ValidationError, match="n >= 2"):
            attach_path(Tree(1, []), Labeling({0: 0}), 0, 1, cache=mem_cache)

    def test_inequality(self, mem_cache):
        # f(u) = 1 with n = 2: 1 + 1 + 1 > 2.
        with pytest.raises(ValidationError, match="floor"):
            attach_path(path_tree(2), Labeling.from_sequence([0, 1]), 1, 2, cache=mem_cache)

    def test_vertex_range(self, mem_cache):
        with pytest.raises(ValidationError):
            attach_path(path_tree(2), Labeling.from_sequence([0, 1]), 5, 4, cache=mem_cache)

    def test_non_graceful_host(self, mem_cache):
        t = path_tree(3)
        with pytest.raises(ValidationError):
            attach_path(t, Labeling.from_sequence([0, 1, 2]), 0, 4, cache=mem_cache)


class TestPostconditions:
    def test_shift_and_partitions(self, mem_cache):
        tree, f, u = figure1_instance()
        for n in (4, 7, 8, 11):
            if f[u] + n // 2 + 1 > n:
                continue
            result = attach_path(tree, f, u, n, cache=mem_cache)
            m = tree.m
            shift = n // 2
            assert result.shift == shift
            for w in range(tree.n):
                assert result.labeling[w] - f[w] == shift
            assert {result.labeling[w] for w in range(tree.n)} == set(range(shift, m + shift + 1))
            path_labels = {result.labeling[w] for w in result.path_ids}
            assert path_labels == set(range(0, shift)) | set(range(m + shift + 1, m + n + 1))
            g_internal = sorted(
                abs(result.labeling[a] - result.labeling[b])
                for a, b in tree.edges
            )
            assert g_internal == list(range(1, m + 1))
            path_internal = sorted(
                abs(result.labeling[result.path_ids[i]] - result.labeling[result.path_ids[i + 1]])
                for i in range(n - 1)
            )
            assert path_internal == list(range(m + 2, m + n + 1))

    def test_path_side_is_alpha(self, mem_cache):
        tree, f, u = figure1_instance()
        result = attach_path(tree, f, u, 8, cache=mem_cache)
        n = 8
        shift = n // 2
        raw = [result.labeling[w] for w in result.path_ids]
        g = [x if x < shift else x - (tree.m + 1) for x in raw]
        assert alpha_index(path_tree(n), Labeling.from_sequence(g)) == shift - 1
