"""Shared oracles, generators, and frozen worked examples for the tests.

The oracles here are deliberately independent of the code paths they check:
FC-ness is decided by brute-force closure over rewriting moves, never by
the heap criterion, and the worked-example diagrams are written out chord
by chord rather than built from words.
"""

from __future__ import annotations

import itertools
import random

from tlfactor import (
    Diagram,
    Word,
    commutation_class,
    heap_from_word,
    heap_is_fc_reduced,
    is_reduced_oracle,
    word_from_heap,
)

N, S = "N", "S"

# Loop-free 9-box diagram whose factorization is s4 s7 s3 s5 s8 s2 s6 s1 s7.
K9_DIAGRAM = Diagram(
    9,
    (
        ((N, 3), (N, 6)),
        ((N, 4), (N, 5)),
        ((N, 7), (N, 8)),
        ((N, 1), (S, 3)),
        ((N, 2), (S, 4)),
        ((N, 9), (S, 5)),
        ((S, 1), (S, 2)),
        ((S, 6), (S, 9)),
        ((S, 7), (S, 8)),
    ),
)
K9_WORD = "4 7 3 5 8 2 6 1 7"

# Loop-free 7-box diagram whose factorization is s2 s6 s1 s3 s2 s4 s3 s5 s4.
K7_DIAGRAM = Diagram(
    7,
    (
        ((S, 2), (S, 7)),
        ((N, 1), (N, 4)),
        ((N, 2), (N, 3)),
        ((S, 3), (S, 6)),
        ((S, 4), (S, 5)),
        ((N, 5), (S, 1)),
        ((N, 6), (N, 7)),
    ),
)
K7_WORD = "2 6 1 3 2 4 3 5 4"

# Three stacked rank-5 diagrams whose product is delta^3 times TRIPLE_RESULT.
TRIPLE_TOP = Diagram(
    5,
    (((N, 1), (N, 2)), ((N, 4), (N, 5)), ((N, 3), (S, 5)), ((S, 1), (S, 4)), ((S, 2), (S, 3))),
)
TRIPLE_MIDDLE = Diagram(
    5,
    (((N, 1), (N, 4)), ((N, 2), (N, 3)), ((N, 5), (S, 5)), ((S, 1), (S, 2)), ((S, 3), (S, 4))),
)
TRIPLE_BOTTOM = Diagram(
    5,
    (((N, 1), (N, 4)), ((N, 2), (N, 3)), ((N, 5), (S, 3)), ((S, 1), (S, 2)), ((S, 4), (S, 5))),
)
TRIPLE_RESULT = Diagram(
    5,
    (((N, 1), (N, 2)), ((N, 4), (N, 5)), ((N, 3), (S, 3)), ((S, 1), (S, 2)), ((S, 4), (S, 5))),
)


def random_word(rng: random.Random, rank: int, length: int) -> Word:
    return Word(rank, tuple(rng.randint(1, rank) for _ in range(length)))


def braid_pattern_somewhere(letters: tuple[int, ...]) -> bool:
    return any(
        letters[i] == letters[i + 2] and abs(letters[i] - letters[i + 1]) == 1
        for i in range(len(letters) - 2)
    )


def oracle_fc_reduced(word: Word, budget: int = 10**6) -> bool:
    """Dual-route FC-reduced verdict via the public brute-force oracles."""
    if not is_reduced_oracle(word, budget=budget):
        return False
    members = commutation_class(word, limit=budget)
    return not any(braid_pattern_somewhere(m.letters) for m in members)


def fc_elements(n: int) -> list[Word]:
    """One canonical word per FC element of rank n, generated word-side.

    Grows canonical normal forms a letter at a time, keeping exactly the
    extensions that stay FC-reduced (every FC element arises this way
    because its prefixes are FC).  Independent of the diagram-side
    enumeration that it cross-checks.
    """
    empty = Word(n, ())
    states: dict[tuple, Word] = {heap_from_word(empty).canonical_form(): empty}
    frontier = [empty]
    while frontier:
        fresh = []
        for word in frontier:
            for s in range(1, n + 1):
                candidate = Word(n, word.letters + (s,))
                heap = heap_from_word(candidate)
                if not heap_is_fc_reduced(heap):
                    continue
                key = heap.canonical_form()
                if key in states:
                    continue
                canonical = word_from_heap(heap)
                states[key] = canonical
                fresh.append(canonical)
        frontier = fresh
    return list(states.values())


def rectangle_fc_word(n: int, p: int) -> Word:
    """The FC word of the two-block grid: q = n+1-p descending runs.

    Row j (0-based) reads s_{p+j} s_{p+j-1} ... s_{j+1}; the result has
    length p * q and is reduced and fully commutative, so its prefixes are
    too.
    """
    q = n + 1 - p
    letters: list[int] = []
    for j in range(q):
        letters.extend(range(p + j, j, -1))
    return Word(n, tuple(letters))


def shuffle_by_commutations(word: Word, rng: random.Random, moves: int = 200) -> Word:
    """A random member of the commutation class of ``word``."""
    letters = list(word.letters)
    for _ in range(moves):
        if len(letters) < 2:
            break
        i = rng.randrange(len(letters) - 1)
        if abs(letters[i] - letters[i + 1]) >= 2:
            letters[i], letters[i + 1] = letters[i + 1], letters[i]
    return Word(word.rank, tuple(letters))


def exhaustive_fc_agreement(rank: int, max_len: int, cross_check: int = 400, seed: int = 0):
    """Compare the heap criterion with a brute-force oracle on every word.

    Words over 1..rank are grouped into commutation classes by breadth
    first search; a class fails exactly when some member contains two equal
    adjacent letters (a cancellation, so not reduced) or a braid pattern
    (so not FC if reduced) -- braid moves apply somewhere in the closure
    precisely when such a pattern occurs.  The heap criterion is evaluated
    on every individual member.  A sample of classes is additionally
    re-checked through the public oracle functions.  Returns
    (words checked, classes seen).
    """
    rng = random.Random(seed)
    checked = 0
    classes = 0
    sampled: list[tuple[int, ...]] = []
    for length in range(max_len + 1):
        visited: set[tuple[int, ...]] = set()
        for seed_word in itertools.product(range(1, rank + 1), repeat=length):
            if seed_word in visited:
                continue
            classes += 1
            members = [seed_word]
            visited.add(seed_word)
            index = 0
            bad = False
            while index < len(members):
                current = members[index]
                index += 1
                if not bad:
                    for i in range(length - 1):
                        if current[i] == current[i + 1]:
                            bad = True
                            break
                if not bad and braid_pattern_somewhere(current):
                    bad = True
                for i in range(length - 1):
                    a, b = current[i], current[i + 1]
                    if a - b >= 2 or b - a >= 2:
                        swapped = current[:i] + (b, a) + current[i + 2 :]
                        if swapped not in visited:
                            visited.add(swapped)
                            members.append(swapped)
            expected = not bad
            for member in members:
                actual = heap_is_fc_reduced(heap_from_word(Word(rank, member)))
                if actual != expected:
                    raise AssertionError(
                        f"criterion={actual} but oracle={expected} on {member}"
                    )
                checked += 1
            if len(sampled) < cross_check and rng.random() < 0.001:
                sampled.append(seed_word)
    for letters in sampled:
        word = Word(rank, letters)
        assert heap_is_fc_reduced(heap_from_word(word)) == oracle_fc_reduced(word)
    return checked, classes
