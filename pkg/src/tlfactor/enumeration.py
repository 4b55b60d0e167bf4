"""Exhaustive and random generation of loop-free diagrams and FC elements.

Non-crossing perfect matchings of the 2k boundary nodes are produced by the
classic first-point recursion: the first free node pairs with a node at odd
distance, splitting the remainder into independent inside and outside
segments.  There are Catalan(k) such matchings, and factoring each one
yields the Catalan(n+1) fully commutative elements of rank n = k - 1,
exercising the factorization path on every basis diagram.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random
from typing import Iterator

from .diagrams import Diagram, _endpoint_at
from .errors import BudgetExceeded, InvariantViolation
from .factorize import factor
from .heaps import Heap, heap_from_word, heap_is_fc_reduced

#: Largest rank enumerated by default; Catalan growth makes bigger ranks a
#: deliberate choice, not an accident.
DEFAULT_CAP = 14


def catalan(m: int) -> int:
    """The m-th Catalan number binom(2m, m) / (m + 1), exactly."""
    if m < 0:
        raise InvariantViolation(f"Catalan numbers need m >= 0, got {m}")
    return math.comb(2 * m, m) // (m + 1)


def _matchings(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Non-crossing matchings of ``points`` (indices in boundary order)."""
    if not points:
        yield ()
        return
    first = points[0]
    for t in range(1, len(points), 2):
        # Materialize the inside once so the outside recursion runs once per split.
        inner = list(_matchings(points[1:t]))
        for outer in _matchings(points[t + 1 :]):
            for inside in inner:
                yield ((first, points[t]), *inside, *outer)


def enumerate_diagrams(k: int, cap: int = DEFAULT_CAP) -> list[Diagram]:
    """All Catalan(k) loop-free diagrams of rank k, in recursion order."""
    if k < 1:
        raise InvariantViolation(f"rank must be at least 1, got {k}")
    if k > cap:
        raise BudgetExceeded(f"rank {k} exceeds the enumeration cap {cap}")
    out = []
    for matching in _matchings(tuple(range(2 * k))):
        chords = tuple((_endpoint_at(a, k), _endpoint_at(b, k)) for a, b in matching)
        out.append(Diagram(k, chords))
    return out


@dataclass(frozen=True)
class FCCatalog:
    """The fully commutative elements of rank n, one (heap, diagram) pair
    each, ordered by the diagram's canonical serialization."""

    rank: int
    items: tuple[tuple[Heap, Diagram], ...]

    def __len__(self) -> int:
        return len(self.items)

    def heaps(self) -> tuple[Heap, ...]:
        return tuple(h for h, _ in self.items)

    def diagrams(self) -> tuple[Diagram, ...]:
        return tuple(d for _, d in self.items)


def enumerate_fc(n: int, cap: int = DEFAULT_CAP) -> FCCatalog:
    """Catalog of all FC elements of rank n, built by factoring diagrams.

    Every enumerated diagram is factored, the factorization is re-verified
    to be FC-reduced, and the heap keys are checked pairwise distinct, so a
    successful build certifies the element-diagram bijection at this rank.
    """
    if n < 0:
        raise InvariantViolation(f"rank must be nonnegative, got {n}")
    items = []
    seen: set[tuple[tuple[int, int], ...]] = set()
    for diagram in enumerate_diagrams(n + 1, cap=cap):
        word = factor(diagram)
        heap = heap_from_word(word)
        if word.letters and not heap_is_fc_reduced(heap):
            raise InvariantViolation(
                f"factorization {word.to_text()!r} of {diagram.to_json()} is not FC-reduced"
            )
        key = heap.canonical_form()
        if key in seen:
            raise InvariantViolation(f"duplicate heap for {diagram.to_json()}")
        seen.add(key)
        items.append((heap, diagram))
    items.sort(key=lambda pair: pair[1].to_json())
    return FCCatalog(n, tuple(items))


def random_diagram(k: int, rng: Random) -> Diagram:
    """A uniformly random loop-free diagram of rank k.

    The first free node is matched at odd distance t with probability
    proportional to Catalan(inside) * Catalan(outside), then both segments
    are filled recursively, giving the exact uniform distribution.
    """
    if k < 1:
        raise InvariantViolation(f"rank must be at least 1, got {k}")
    cat = [catalan(m) for m in range(k + 1)]
    pairs: list[tuple[int, int]] = []

    def fill(points: list[int]) -> None:
        if not points:
            return
        half = len(points) // 2
        r = rng.randrange(cat[half])
        cumulative = 0
        for t in range(1, len(points), 2):
            weight = cat[(t - 1) // 2] * cat[(len(points) - t - 1) // 2]
            cumulative += weight
            if r < cumulative:
                pairs.append((points[0], points[t]))
                fill(points[1:t])
                fill(points[t + 1 :])
                return
        raise AssertionError("Catalan weights did not cover the draw")

    fill(list(range(2 * k)))
    chords = tuple((_endpoint_at(a, k), _endpoint_at(b, k)) for a, b in pairs)
    return Diagram(k, chords)
