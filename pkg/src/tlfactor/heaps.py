"""Heaps of words: the labelled poset that captures a commutation class.

The heap of a word s_{x_1} ... s_{x_m} has one entry per letter, placed in
column x_i, with an earlier letter lying *above* a later one whenever their
generators are equal or adjacent (|x_i - x_j| <= 1).  Two words have equal
heaps exactly when they are related by commutations, so a fully commutative
element has a single, well-defined heap.

Heaps are stored in canonical form: every entry is placed as high as
possible, i.e. level(v) = 0 for entries with nothing above them and
1 + max(level of entries above) otherwise.  Reading the levels top to
bottom, columns ascending within a level, gives the Cartier-Foata normal
form of the commutation class.  The canonical (column, level) multiset
determines the heap completely: entries in equal or adjacent columns are
always comparable, their order agrees with the level order, and those
relations generate the whole poset.

Only the transitive reduction (the cover relation) is stored; the full
order is recomputed on demand.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field

from .errors import RankMismatch
from .words import Word


@dataclass(frozen=True)
class Heap:
    """Canonical heap of a word.

    ``columns[i]`` is the column of entry ``i`` (entries are numbered in
    word order), ``covers`` holds (above, below) pairs of the transitive
    reduction, and ``levels[i]`` is the canonical level of entry ``i``
    (0 = top row).
    """

    rank: int
    columns: tuple[int, ...]
    covers: frozenset[tuple[int, int]] = field(default_factory=frozenset)
    levels: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.columns)

    def canonical_form(self) -> tuple[tuple[int, int], ...]:
        """Sorted (column, level) pairs; equal heaps have equal forms."""
        return tuple(sorted(zip(self.columns, self.levels)))


def heap_from_word(word: Word) -> Heap:
    """Build the canonical heap of ``word`` (any word, reduced or not).

    Entry j lies below entry i when i precedes j in the word and their
    columns differ by at most one, extended transitively.  Levels and the
    cover relation are computed in one left-to-right pass: the latest
    earlier entry in each of the three neighbouring columns dominates all
    others, so it suffices to inspect at most three candidates per letter.
    Ancestor sets are kept as integer bitsets to prune covers implied by
    transitivity.
    """
    cols = word.letters
    levels: list[int] = []
    ancestors: list[int] = []
    last_in_col: dict[int, int] = {}
    covers: list[tuple[int, int]] = []
    for v, c in enumerate(cols):
        cands = [last_in_col[cc] for cc in (c - 1, c, c + 1) if cc in last_in_col]
        level = 0
        bits = 0
        for u in cands:
            level = max(level, levels[u] + 1)
            bits |= ancestors[u] | (1 << u)
        for u in cands:
            # u covers v unless another candidate lies strictly between them.
            if not any(z != u and (ancestors[z] >> u) & 1 for z in cands):
                covers.append((u, v))
        levels.append(level)
        ancestors.append(bits)
        last_in_col[c] = v
    return Heap(word.rank, cols, frozenset(covers), tuple(levels))


def heap_equals(first: Heap, second: Heap) -> bool:
    """Column- and order-preserving equality, via canonical forms."""
    if first.rank != second.rank:
        raise RankMismatch(f"heap ranks differ: {first.rank} != {second.rank}")
    return first.canonical_form() == second.canonical_form()


def heap_is_fc_reduced(heap: Heap) -> bool:
    """Local criterion for "this is the heap of a reduced FC word".

    For every pair of entries that are consecutive in the same column i,
    the entries strictly between them must include at least one in column
    i-1 and at least one in column i+1; a missing boundary column counts as
    failure.  With no separating neighbour on either side the two
    occurrences of s_i could be commuted together and cancelled (not
    reduced); with exactly one separating entry a braid pattern
    s_i s_{i+-1} s_i surfaces in some member of the commutation class (not
    FC).  Entries in equal or adjacent columns are totally ordered by
    level, so "strictly between" reduces to a level-interval test.
    """
    by_col: dict[int, list[int]] = {}
    for c, level in zip(heap.columns, heap.levels):
        by_col.setdefault(c, []).append(level)
    for lvls in by_col.values():
        lvls.sort()
    for c, lvls in by_col.items():
        for upper, lower in zip(lvls, lvls[1:]):
            for neighbour in (c - 1, c + 1):
                nl = by_col.get(neighbour)
                if not nl:
                    return False
                i = bisect_right(nl, upper)
                if i == len(nl) or nl[i] >= lower:
                    return False
    return True


def word_from_heap(heap: Heap) -> Word:
    """Cartier-Foata reading: levels top to bottom, columns ascending.

    Entries sharing a level commute pairwise, so the reading is a
    well-defined representative of the heap's commutation class, and
    ``heap_from_word(word_from_heap(h))`` equals ``h``.
    """
    order = sorted(zip(heap.levels, heap.columns))
    return Word(heap.rank, tuple(c for _, c in order))


def render_heap(heap: Heap) -> str:
    """Monospace grid, one row per level, block ``[s_i]`` centred at column 2i.

    The two-character unit matches the half-overlap of lattice-point
    pictures for single-digit generators; it widens just enough to keep
    blocks disjoint when subscripts run to more digits.
    """
    if not heap.columns:
        return ""
    blocks = {c: f"[s{c}]" for c in set(heap.columns)}
    unit = (max(len(b) for b in blocks.values()) + 1) // 2
    height = max(heap.levels) + 1
    rows: list[list[str]] = [[] for _ in range(height)]
    for c, level in sorted(zip(heap.columns, heap.levels)):
        text = blocks[c]
        start = unit * c - len(text) // 2
        row = rows[level]
        if len(row) < start + len(text):
            row.extend(" " * (start + len(text) - len(row)))
        row[start : start + len(text)] = text
    return "\n".join("".join(row).rstrip() for row in rows)


def heap_dump(heap: Heap) -> str:
    """Machine-readable dump: one ``level column`` line per entry, sorted."""
    return "\n".join(f"{level} {c}" for level, c in sorted(zip(heap.levels, heap.columns)))
