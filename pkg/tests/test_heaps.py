import itertools
import random

import pytest
from support import K9_WORD, fc_elements, oracle_fc_reduced, random_word

from tlfactor import (
    RankMismatch,
    Word,
    apply_commutation,
    commutation_class,
    heap_dump,
    heap_equals,
    heap_from_word,
    heap_is_fc_reduced,
    render_heap,
    word_from_heap,
)


def heap_of(rank, *letters):
    return heap_from_word(Word(rank, letters))


class TestHeapFromWord:
    def test_hasse_diagram_of_six_letter_example(self):
        # s2 s1 s3 s2 s4 s5: the fourth letter sits below s1 and s3, and the
        # second s2 is not covered by the first (transitivity prunes it).
        heap = heap_of(5, 2, 1, 3, 2, 4, 5)
        assert heap.covers == frozenset({(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (4, 5)})
        assert heap.levels == (0, 1, 1, 2, 2, 3)

    def test_canonical_rows_of_nine_letter_example(self):
        heap = heap_from_word(Word.parse(K9_WORD, rank=8))
        rows = {}
        for column, level in zip(heap.columns, heap.levels):
            rows.setdefault(level, set()).add(column)
        assert rows == {0: {4, 7}, 1: {3, 5, 8}, 2: {2, 6}, 3: {1, 7}}

    def test_empty_word(self):
        heap = heap_of(3)
        assert len(heap) == 0
        assert heap.covers == frozenset()

    def test_entry_counts_match_letter_multiplicities(self):
        rng = random.Random(3)
        for _ in range(100):
            word = random_word(rng, 6, rng.randint(0, 12))
            heap = heap_from_word(word)
            assert len(heap) == len(word)
            assert sorted(heap.columns) == sorted(word.letters)

    def test_invariant_under_commutation(self):
        rng = random.Random(5)
        for _ in range(200):
            word = random_word(rng, 6, rng.randint(2, 10))
            positions = [
                pos
                for pos in range(1, len(word))
                if abs(word.letters[pos - 1] - word.letters[pos]) >= 2
            ]
            if not positions:
                continue
            other = apply_commutation(word, rng.choice(positions))
            assert heap_equals(heap_from_word(other), heap_from_word(word))

    def test_levels_equal_longest_cover_path(self):
        rng = random.Random(9)
        for _ in range(200):
            word = random_word(rng, 5, rng.randint(0, 10))
            heap = heap_from_word(word)
            parents = {v: [] for v in range(len(heap))}
            for above, below in heap.covers:
                parents[below].append(above)
            depth = {}
            for v in range(len(heap)):  # word order is a topological order
                depth[v] = max((depth[u] + 1 for u in parents[v]), default=0)
            assert tuple(depth[v] for v in range(len(heap))) == heap.levels


class TestHeapEquals:
    def test_same_commutation_class(self):
        assert heap_equals(heap_of(4, 2, 1, 3, 4, 2), heap_of(4, 2, 3, 4, 1, 2))

    def test_different_classes_of_one_element(self):
        # Both words represent the same non-FC group element but lie in
        # different commutation classes, hence have different heaps.
        assert not heap_equals(heap_of(5, 1, 2, 3, 4, 5, 2), heap_of(5, 1, 3, 2, 3, 4, 5))

    def test_reflexive(self):
        heap = heap_of(4, 2, 1, 3, 4, 2)
        assert heap_equals(heap, heap)

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            heap_equals(heap_of(3, 1), heap_of(4, 1))


class TestFCReducedCriterion:
    def test_fc_example(self):
        assert heap_is_fc_reduced(heap_of(4, 2, 1, 3, 4, 2))

    def test_braid_word_fails(self):
        assert not heap_is_fc_reduced(heap_of(2, 1, 2, 1))

    def test_square_fails(self):
        assert not heap_is_fc_reduced(heap_of(1, 1, 1))

    def test_boundary_column_counts_as_missing(self):
        # Two s_3 entries at rank 3: column 4 does not exist, so the pair
        # can never be separated on the right.
        assert not heap_is_fc_reduced(heap_of(3, 3, 2, 3))
        # The same shape one column to the left, with both neighbours, is fine.
        assert heap_is_fc_reduced(heap_of(4, 3, 2, 4, 3))

    def test_agrees_with_oracle_on_short_words(self):
        for length in range(7):
            for letters in itertools.product((1, 2, 3), repeat=length):
                word = Word(3, letters)
                assert heap_is_fc_reduced(heap_from_word(word)) == oracle_fc_reduced(word)


class TestWordFromHeap:
    def test_nine_letter_example_reads_back(self):
        word = Word.parse(K9_WORD, rank=8)
        assert word_from_heap(heap_from_word(word)) == word

    def test_seven_box_example_normal_form(self):
        word = Word.parse("2 6 1 3 2 4 3 5 4", rank=6)
        assert word_from_heap(heap_from_word(word)).to_text() == "2 6 1 3 2 4 3 5 4"

    def test_empty(self):
        assert word_from_heap(heap_of(3)) == Word(3)

    def test_round_trip_fixes_heap(self):
        rng = random.Random(13)
        for _ in range(200):
            word = random_word(rng, 6, rng.randint(0, 12))
            heap = heap_from_word(word)
            assert heap_equals(heap_from_word(word_from_heap(heap)), heap)

    def test_reading_stays_in_commutation_class_for_fc_words(self):
        for word in fc_elements(4):
            for member in commutation_class(word):
                reading = word_from_heap(heap_from_word(member))
                assert reading in commutation_class(member)


class TestRendering:
    def test_single_block(self):
        assert render_heap(heap_of(1, 1)) == "[s1]"

    def test_three_row_grid(self):
        expected = "  [s2]\n[s1][s3]\n  [s2]"
        assert render_heap(heap_of(3, 2, 1, 3, 2)) == expected

    def test_empty_heap_renders_nothing(self):
        assert render_heap(heap_of(3)) == ""

    def test_two_digit_generators_do_not_collide(self):
        grid = render_heap(heap_of(12, 10, 12))
        assert "[s10]" in grid and "[s12]" in grid

    def test_dump_lines_sorted(self):
        assert heap_dump(heap_of(4, 2, 1, 3, 2)) == "0 2\n1 1\n1 3\n2 2"
