import pytest

from graceful_spiders.doubling import check_doubling, label_doubling_spider
from graceful_spiders.errors import ValidationError
from graceful_spiders.model import build_spider, is_graceful


class TestCheckDoubling:
    def test_valid_plan(self):
        plan = check_doubling([1, 6, 14])
        assert plan.sorted_lengths == (1, 6, 14)
        assert plan.k_indices == ()

    def test_sorts_input(self):
        assert check_doubling([14, 1, 6]).sorted_lengths == (1, 6, 14)

    def test_residue_one_bound(self):
        with pytest.raises(ValidationError, match="ell_2 = 5 < 6"):
            check_doubling([1, 5, 12])

    def test_plain_bound(self):
        with pytest.raises(ValidationError, match="i=2"):
            check_doubling([2, 5])

    def test_later_bound(self):
        with pytest.raises(ValidationError, match="ell_3 = 13"):
            check_doubling([1, 6, 13])

    def test_single_leg(self):
        assert check_doubling([3]).sorted_lengths == (3,)

    def test_k_indices(self):
        assert check_doubling([1, 9, 20]).k_indices == (2,)
        assert check_doubling([1, 9, 21]).k_indices == (2, 3)

    def test_k_steps_attach_reduced_count(self):
        plan = check_doubling([1, 9, 20])
        step = plan.steps[0]
        assert step.attach_at == "y" and step.vertex_count == 8

    def test_rejects_bad_input(self):
        with pytest.raises(ValidationError):
            check_doubling([])
        with pytest.raises(ValidationError):
            check_doubling([0, 6])


class TestLabelDoubling:
    @pytest.mark.parametrize(
        "legs",
        [[1, 6, 14], [1, 9, 20], [2, 6], [3], [1], [1, 6, 14, 30], [2, 8, 18], [1, 9, 21]],
    )
    def test_graceful_on_canonical_spider(self, legs, mem_cache):
        sp, lab, trace = label_doubling_spider(legs, cache=mem_cache)
        assert is_graceful(sp.tree, lab)
        assert sp.tree.edges == build_spider(sorted(legs)).tree.edges
        assert sp.tree.m == sum(legs)

    def test_path_case_center_zero(self, mem_cache):
        sp, lab, _ = label_doubling_spider([2, 6], cache=mem_cache)
        assert lab[sp.center] == 0

    def test_trace_records_steps(self, mem_cache):
        _, _, trace = label_doubling_spider([1, 6, 14], cache=mem_cache)
        assert [s.operation for s in trace.steps] == ["base", "attach", "attach"]
        assert trace.steps[-1].edge_count == 21

    def test_y_attachment_branch(self, mem_cache):
        _, _, trace = label_doubling_spider([1, 9, 20], cache=mem_cache)
        attach_steps = [s for s in trace.steps if s.operation == "attach"]
        assert attach_steps[0].params["attach_at"] == "y"
        assert attach_steps[0].params["vertex_count"] == 8
        assert attach_steps[1].params["attach_at"] == "x"

    def test_invariant_one_shift_bound(self, mem_cache):
        # Invariant (1): base labels grow by exactly the per-step shifts,
        # each of which is at most ell_j / 2.
        legs = [1, 6, 14, 30]
        sp, lab, trace = label_doubling_spider(legs, cache=mem_cache)
        shifts = [s.params["shift"] for s in trace.steps if s.operation == "attach"]
        assert all(2 * sh <= ell for sh, ell in zip(shifts, sorted(legs)[1:]))
        assert lab[sp.center] == sum(shifts)

    def test_invalid_legs_rejected(self, mem_cache):
        with pytest.raises(ValidationError):
            label_doubling_spider([1, 5, 12], cache=mem_cache)
