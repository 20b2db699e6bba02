import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rskforge import (
    CycleType,
    DisplacementRecord,
    IntSequence,
    InvalidInputError,
    Permutation,
    Shape,
    Tableau,
    cycle_type,
    functional_graph_kind,
    is_tail_monotone,
    lds_length,
    lis_length,
    rsk_insert,
    rsk_insertions,
    rsk_shape,
    rsk_tableau,
    shape_add,
)
from rskforge.core import format_ints, parse_permutation, parse_sequence, parse_shape

from util import brute_lds, brute_lis

distinct_seqs = st.lists(st.integers(1, 500), unique=True, min_size=1, max_size=40)


class TestTypes:
    def test_int_sequence_accepts_empty(self):
        assert len(IntSequence()) == 0

    @pytest.mark.parametrize("bad", [[0, 1], [-3], [2, 2], [1, 1, 2]])
    def test_int_sequence_rejects(self, bad):
        with pytest.raises(InvalidInputError):
            IntSequence(bad)

    def test_permutation_requires_full_range(self):
        Permutation([2, 1, 3])
        for bad in ([], [2, 3], [1, 2, 4], [0, 1]):
            with pytest.raises(InvalidInputError):
                Permutation(bad)

    def test_permutation_is_int_sequence(self):
        p = Permutation([3, 1, 2])
        assert isinstance(p, IntSequence)
        assert p == (3, 1, 2)

    def test_shape_rejects_increasing_or_nonpositive(self):
        Shape([3, 2, 2, 1])
        assert Shape().parts == ()
        with pytest.raises(InvalidInputError):
            Shape([1, 2])
        with pytest.raises(InvalidInputError):
            Shape([2, 0])

    def test_shape_accessors(self):
        s = Shape([3, 2, 2])
        assert (s.n, s.rows, s.cols) == (7, 3, 3)
        assert s.conjugate() == (3, 3, 1)
        assert s.conjugate().conjugate() == s

    def test_cycle_type_invariants(self):
        assert CycleType([3, 1]).n == 4
        with pytest.raises(InvalidInputError):
            CycleType([1, 3])
        with pytest.raises(InvalidInputError):
            CycleType([])

    def test_tableau_validation(self):
        t = Tableau([[1, 3, 6], [2, 4], [5]])
        assert t.shape == (3, 2, 1)
        assert t.is_standard
        with pytest.raises(InvalidInputError):
            Tableau([[3, 1]])  # row decreasing
        with pytest.raises(InvalidInputError):
            Tableau([[1, 2], [1]])  # duplicate cell
        with pytest.raises(InvalidInputError):
            Tableau([[2, 3], [1]])  # column not increasing
        with pytest.raises(InvalidInputError):
            Tableau([[1], [2, 3]])  # row lengths increase

    def test_non_standard_tableau(self):
        assert not Tableau([[2, 5], [7]]).is_standard

    def test_displacement_record_invariants(self):
        r = DisplacementRecord([2, 2, 1], [4, 5])
        assert r.depth == 3
        with pytest.raises(InvalidInputError):
            DisplacementRecord([2, 2, 1], [5, 4])  # not increasing
        with pytest.raises(InvalidInputError):
            DisplacementRecord([2, 1], [])  # wrong arity
        with pytest.raises(InvalidInputError):
            DisplacementRecord([], [])

    def test_types_are_immutable(self):
        with pytest.raises(AttributeError):
            Shape([2, 1]).parts = (3,)
        with pytest.raises(AttributeError):
            Permutation([1]).values = (2,)


class TestInsert:
    def test_append_to_first_row(self):
        t, rec = rsk_insert(Tableau([[1, 4], [2, 5]]), 6)
        assert t == [[1, 4, 6], [2, 5]]
        assert rec == DisplacementRecord([3], [])

    def test_bump_chain(self):
        t, rec = rsk_insert(Tableau([[1, 4, 6], [2, 5]]), 3)
        assert t == [[1, 3, 6], [2, 4], [5]]
        assert rec.columns == (2, 2, 1)
        assert rec.displaced == (4, 5)

    def test_insert_into_empty(self):
        t, rec = rsk_insert(Tableau(), 1)
        assert t == [[1]]
        assert rec.columns == (1,)

    def test_rejects_present_value(self):
        with pytest.raises(InvalidInputError):
            rsk_insert(Tableau([[1, 4], [2, 5]]), 4)

    def test_rejects_nonpositive(self):
        with pytest.raises(InvalidInputError):
            rsk_insert(Tableau(), 0)

    @given(distinct_seqs)
    def test_insertion_preserves_validity_and_cells(self, vals):
        t = Tableau()
        seen = set()
        for x in vals:
            t, rec = rsk_insert(t, x)  # Tableau() revalidates every step
            seen.add(x)
            assert set(t.cells()) == seen
            assert all(a < b for a, b in zip(rec.displaced, rec.displaced[1:]))

    @given(distinct_seqs)
    def test_bulk_matches_stepwise(self, vals):
        t = Tableau()
        recs = []
        for x in vals:
            t, rec = rsk_insert(t, x)
            recs.append(rec)
        bulk_t, bulk_recs = rsk_insertions(vals)
        assert bulk_t == t
        assert bulk_recs == recs


class TestTableauOfSequence:
    def test_worked_example(self):
        assert rsk_tableau([2, 5, 1, 4, 6, 3]) == [[1, 3, 6], [2, 4], [5]]

    def test_identity_gives_single_row(self):
        assert rsk_tableau(range(1, 8)) == [list(range(1, 8))]

    def test_two_column_example(self):
        assert rsk_tableau([4, 1, 5, 3, 2]) == [[1, 2], [3, 5], [4]]

    def test_rejects_empty_and_duplicates(self):
        with pytest.raises(InvalidInputError):
            rsk_tableau([])
        with pytest.raises(InvalidInputError):
            rsk_tableau([1, 1])

    def test_permutation_yields_standard(self):
        assert rsk_tableau([3, 1, 4, 2, 5]).is_standard

    def test_shape_examples(self):
        assert rsk_shape([2, 5, 1, 4, 6, 3]) == (3, 2, 1)
        assert rsk_shape(range(9, 0, -1)) == (1,) * 9
        assert rsk_shape([5, 3, 1, 7, 6, 4, 2]) == (2, 2, 2, 1)

    @given(distinct_seqs)
    def test_shape_matches_tableau(self, vals):
        assert rsk_shape(vals) == rsk_tableau(vals).shape


class TestSubsequenceOracles:
    def test_frozen_values(self):
        # computed by exhaustive subsequence enumeration
        assert lis_length([2, 5, 1, 4, 6, 3]) == 3
        assert lds_length([2, 5, 1, 4, 6, 3]) == 3
        assert lis_length([1, 2, 3]) == 3
        assert lds_length([4, 1, 7, 3, 2, 8, 6, 5]) == 3

    def test_against_brute_force(self):
        rng = random.Random(7)
        for _ in range(120):
            n = rng.randrange(1, 11)
            vals = rng.sample(range(1, 60), n)
            assert lis_length(vals) == brute_lis(vals)
            assert lds_length(vals) == brute_lds(vals)

    def test_rejects_empty(self):
        with pytest.raises(InvalidInputError):
            lis_length([])
        with pytest.raises(InvalidInputError):
            lds_length([])

    def test_schensted_exhaustive_small(self):
        for n in range(1, 6):
            for p in permutations(range(1, n + 1)):
                shape = rsk_shape(p)
                assert shape.parts[0] == lis_length(p)
                assert len(shape.parts) == lds_length(p)


class TestCycleType:
    def test_examples(self):
        assert cycle_type([2, 3, 4, 6, 7, 5, 1]) == (7,)
        assert cycle_type(range(1, 6)) == (1,) * 5
        assert cycle_type([5, 2, 1, 7, 6, 4, 3]) == (6, 1)

    @given(st.permutations(list(range(1, 9))))
    def test_parts_sum_to_n(self, vals):
        ct = cycle_type(vals)
        assert ct.n == len(vals)
        assert all(a >= b for a, b in zip(ct.lengths, ct.lengths[1:]))


class TestShapeAdd:
    def test_examples(self):
        assert shape_add([3, 2, 1], [1, 1]) == (4, 3, 1)
        assert shape_add([2, 1, 1], [1, 1]) == (3, 2, 1)

    def test_empty_is_identity(self):
        g = Shape([4, 2])
        assert shape_add(g, Shape()) == g
        assert shape_add(Shape(), g) == g

    def test_rejects_non_partition_sum(self):
        # reachable only through raw sequences; two partitions always sum
        # to a partition
        with pytest.raises(InvalidInputError):
            shape_add([2, 2], [0, 1])

    @given(
        st.lists(st.integers(1, 9), min_size=0, max_size=6),
        st.lists(st.integers(1, 9), min_size=0, max_size=6),
    )
    def test_partition_inputs_always_valid(self, a, b):
        sa, sb = Shape(sorted(a, reverse=True)), Shape(sorted(b, reverse=True))
        out = shape_add(sa, sb)
        assert out.n == sa.n + sb.n


class TestTailMonotone:
    def test_examples(self):
        assert is_tail_monotone([4, 1, 2, 7, 3, 8, 6, 5], 5, 3)
        assert is_tail_monotone([1, 2, 3], 2, 1)
        assert not is_tail_monotone([2, 1, 3, 4], 2, 2)

    def test_rejects_size_mismatch(self):
        with pytest.raises(InvalidInputError):
            is_tail_monotone([2, 1, 3], 1, 1)

    def test_tail_must_start_with_max(self):
        # descending tail but p_{n+1} != n+k
        assert not is_tail_monotone([3, 4, 2, 1], 2, 2)

    def test_at_most_one_large_head_value(self):
        assert not is_tail_monotone([5, 6, 1, 2, 7, 4, 3], 4, 3)


class TestFunctionalGraphKind:
    def test_descending_gap_sequence_is_path(self):
        assert functional_graph_kind([7, 6, 5, 3, 2, 1], 2, 6) == "path"

    def test_identity_segment_is_other(self):
        assert functional_graph_kind([1, 2, 3], 1, 3) == "other"

    def test_self_loop_plus_path(self):
        assert functional_graph_kind([5, 7, 6, 4, 3, 2, 1], 2, 7) == "self-loop-plus-path"

    def test_shifted_path(self):
        # positions 4..6 of (5,3,1,7,6,4,2): chain 5 -> 6 -> 4 -> 7
        assert functional_graph_kind([5, 3, 1, 7, 6, 4, 2], 4, 6) == "shifted-path"

    def test_cycle(self):
        assert functional_graph_kind([2, 3, 1], 1, 3) == "cycle"

    def test_empty_range_is_degenerate_path(self):
        assert functional_graph_kind([2], 2, 1) == "path"

    def test_invalid_range(self):
        with pytest.raises(InvalidInputError):
            functional_graph_kind([2, 1], 1, 3)
        with pytest.raises(InvalidInputError):
            functional_graph_kind([2, 1], 0, 1)

    def test_two_components_is_other(self):
        # 1 -> 3 and 2 -> 4: two disjoint chains
        assert functional_graph_kind([3, 4, 1, 2], 1, 2) == "other"

    def test_single_edge_is_path(self):
        assert functional_graph_kind([2, 1, 4, 3], 1, 1) == "path"


class TestSerialization:
    def test_parse_and_format_round_trip(self):
        p = parse_permutation("2,5,1,4,6,3")
        assert p == (2, 5, 1, 4, 6, 3)
        assert format_ints(p.values) == "2,5,1,4,6,3"
        assert parse_shape("3,2,1") == Shape([3, 2, 1])
        assert parse_sequence("") == IntSequence()

    def test_parse_rejects_junk(self):
        with pytest.raises(InvalidInputError):
            parse_permutation("2,x,1")
        with pytest.raises(InvalidInputError):
            parse_shape("1,3")

    def test_tableau_to_lists(self):
        assert rsk_tableau([2, 5, 1, 4, 6, 3]).to_lists() == [[1, 3, 6], [2, 4], [5]]


@settings(max_examples=60)
@given(st.permutations(list(range(1, 13))))
def test_schensted_random_permutations(vals):
    shape = rsk_shape(vals)
    assert shape.parts[0] == lis_length(vals)
    assert len(shape.parts) == lds_length(vals)
