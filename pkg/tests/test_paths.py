import pytest

from graceful_spiders.errors import (
    InfeasibleError,
    ResourceBudgetError,
    ValidationError,
)
from graceful_spiders.model import alpha_index, is_graceful, path_tree
from graceful_spiders.paths import (
    PathCache,
    alpha_path_end_label,
    alpha_path_zero_at,
    enumerate_alpha_paths,
    graceful_path_zero_at,
    zigzag_alpha_path,
)

# Frozen by exhaustive enumeration (enumerate_alpha_paths); regression
# constants for the provider's search space.
ALPHA_PATH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 4, 5: 4, 6: 8, 7: 16, 8: 8, 9: 20, 10: 56, 11: 72, 12: 128}


class TestZigzag:
    def test_example_n4(self):
        al = zigzag_alpha_path(4)
        assert al.labeling.as_sequence(4) == [0, 3, 1, 2]
        assert al.alpha == 1

    def test_trivial(self):
        assert zigzag_alpha_path(1).labeling.as_sequence(1) == [0]
        assert zigzag_alpha_path(2).labeling.as_sequence(2) == [0, 1]

    def test_invalid_n(self):
        with pytest.raises(ValidationError):
            zigzag_alpha_path(0)

    def test_always_alpha(self):
        for n in range(1, 30):
            al = zigzag_alpha_path(n)
            assert is_graceful(al.tree, al.labeling)


class TestGracefulZeroAt:
    def test_endpoint_examples(self, mem_cache):
        assert graceful_path_zero_at(7, 0, cache=mem_cache).as_sequence(7) == [0, 6, 1, 5, 2, 4, 3]
        assert graceful_path_zero_at(1, 0, cache=mem_cache).as_sequence(1) == [0]

    def test_far_endpoint_reversed(self, mem_cache):
        seq = graceful_path_zero_at(7, 6, cache=mem_cache).as_sequence(7)
        assert seq == [3, 4, 2, 5, 1, 6, 0]

    def test_interior_position(self, mem_cache):
        lab = graceful_path_zero_at(6, 2, cache=mem_cache)
        assert lab[2] == 0 and is_graceful(path_tree(6), lab)

    def test_p5_central_exception_still_graceful(self, mem_cache):
        lab = graceful_path_zero_at(5, 2, cache=mem_cache)
        assert lab[2] == 0 and is_graceful(path_tree(5), lab)
        assert alpha_index(path_tree(5), lab) is None

    def test_position_range(self, mem_cache):
        with pytest.raises(ValidationError):
            graceful_path_zero_at(5, 5, cache=mem_cache)


class TestAlphaZeroAt:
    def test_p5_central_infeasible(self, mem_cache):
        with pytest.raises(InfeasibleError):
            alpha_path_zero_at(5, 2, cache=mem_cache)

    def test_trivial(self, mem_cache):
        assert alpha_path_zero_at(2, 0, cache=mem_cache).labeling.as_sequence(2) == [0, 1]

    def test_example_7_2(self, mem_cache):
        al = alpha_path_zero_at(7, 2, cache=mem_cache)
        assert al.labeling[2] == 0
        assert alpha_index(al.tree, al.labeling) == al.alpha

    def test_all_positions_up_to_20(self, mem_cache):
        for n in range(1, 21):
            for pos in range(n):
                if (n, pos) == (5, 2):
                    continue
                al = alpha_path_zero_at(n, pos, cache=mem_cache)
                assert al.labeling[pos] == 0
                assert alpha_index(al.tree, al.labeling) == al.alpha

    def test_deterministic(self, mem_cache):
        a = alpha_path_zero_at(15, 6, cache=mem_cache).labeling.as_sequence(15)
        b = alpha_path_zero_at(15, 6, cache=PathCache(None)).labeling.as_sequence(15)
        assert a == b

    def test_budget_exhaustion_is_resource_error(self, mem_cache):
        # (9, 4) has equal even arms, the one shape served by search.
        with pytest.raises(ResourceBudgetError):
            alpha_path_zero_at(9, 4, budget=1, cache=PathCache(None))


class TestAlphaEndLabel:
    def test_figure1_path_golden(self, mem_cache):
        al = alpha_path_end_label(7, 6, 2, cache=mem_cache)
        assert al.labeling.as_sequence(7) == [6, 0, 5, 1, 4, 2, 3]
        assert al.alpha == 2

    def test_trivial(self, mem_cache):
        assert alpha_path_end_label(2, 1, 0, cache=mem_cache).labeling.as_sequence(2) == [1, 0]

    def test_lemma2c_exception(self, mem_cache):
        with pytest.raises(InfeasibleError):
            alpha_path_end_label(5, 1, cache=mem_cache)
        with pytest.raises(InfeasibleError):
            alpha_path_end_label(5, 3, cache=mem_cache)
        with pytest.raises(InfeasibleError):
            alpha_path_end_label(9, 2, cache=mem_cache)

    def test_validation(self, mem_cache):
        with pytest.raises(ValidationError):
            alpha_path_end_label(1, 0, cache=mem_cache)
        with pytest.raises(ValidationError):
            alpha_path_end_label(6, 6, cache=mem_cache)

    def test_impossible_index(self, mem_cache):
        with pytest.raises(InfeasibleError):
            alpha_path_end_label(8, 2, required_index=1, cache=mem_cache)

    def test_exhaustive_against_enumeration(self, mem_cache):
        for n in range(2, 11):
            feasible = set()
            for al in enumerate_alpha_paths(n):
                feasible.add((al.labeling[0], al.alpha))
            hi, lo = (n + 1) // 2 - 1, n // 2 - 1
            for e in range(n):
                for idx in (None, hi, lo):
                    want = any(
                        (e, i) in feasible for i in ((hi, lo) if idx is None else (idx,))
                    )
                    try:
                        al = alpha_path_end_label(n, e, idx, cache=mem_cache)
                        got = True
                        assert al.labeling[0] == e
                        assert idx is None or al.alpha == idx
                        assert alpha_index(al.tree, al.labeling) == al.alpha
                    except InfeasibleError:
                        got = False
                    assert got == want, (n, e, idx)

    def test_deterministic(self, mem_cache):
        a = alpha_path_end_label(20, 13, cache=mem_cache).labeling.as_sequence(20)
        b = alpha_path_end_label(20, 13, cache=PathCache(None)).labeling.as_sequence(20)
        assert a == b


class TestEnumerate:
    def test_frozen_counts(self):
        for n, want in ALPHA_PATH_COUNTS.items():
            assert sum(1 for _ in enumerate_alpha_paths(n)) == want

    def test_n2_exact(self):
        seqs = [al.labeling.as_sequence(2) for al in enumerate_alpha_paths(2)]
        assert seqs == [[0, 1], [1, 0]]

    def test_lexicographic(self):
        seqs = [tuple(al.labeling.as_sequence(6)) for al in enumerate_alpha_paths(6)]
        assert seqs == sorted(seqs)

    def test_p5_endpoint_exceptions(self):
        ends = {al.labeling[0] for al in enumerate_alpha_paths(5)}
        assert ends == {0, 2, 4}

    def test_bound(self):
        with pytest.raises(ResourceBudgetError):
            next(enumerate_alpha_paths(15))


class TestCache:
    def test_disk_roundtrip(self, tmp_path):
        path = str(tmp_path / "cache.json")
        c1 = PathCache(path)
        alpha_path_zero_at(9, 4, cache=c1)  # search-served, worth caching
        c2 = PathCache(path)
        assert c2.get("alpha_zero:9:4") is not None

    def test_corrupt_file_ignored(self, tmp_path):
        path = tmp_path / "cache.json"
        path.write_text("{not json")
        c = PathCache(str(path))
        assert c.get("anything") is None

    def test_wrong_version_ignored(self, tmp_path):
        path = tmp_path / "cache.json"
        path.write_text('{"format": "graceful-spiders-path-cache", "version": 99, "entries": {"k": [1]}}')
        assert PathCache(str(path)).get("k") is None
