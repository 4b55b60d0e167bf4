"""Words in the generators s_1, ..., s_n of the Coxeter group of type A.

The generators satisfy s_i^2 = e, the commutation s_i s_j = s_j s_i for
|i - j| > 1, and the braid relation s_i s_j s_i = s_j s_i s_j for
|i - j| = 1.  A word is reduced when no shorter word represents the same
group element, and two reduced words represent the same element exactly
when they are connected by commutations and braid moves (Matsumoto's
theorem).  An element is fully commutative (FC) when its reduced words form
a single commutation class, equivalently when no reduced word for it
contains a braid pattern s_i s_j s_i with |i - j| = 1 (Stembridge's
criterion).

This module supplies the rewriting moves, breadth-first closures used as
brute-force oracles, and the FC test.  The oracles take explicit budgets
and fail loudly instead of exhausting memory: commutation classes grow
factorially in the worst case, and they are meant for desk-scale
verification, not bulk enumeration.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    ClassTooLarge,
    NoBraidAtPosition,
    NotReduced,
    OutOfRange,
    ParseError,
    PositionNotCommutable,
    SearchBudgetExceeded,
)

#: Default node budget for the breadth-first oracles.
DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class Word:
    """A word over s_1..s_rank; the empty word denotes the identity.

    Letters are 1-indexed generator subscripts.  The rank is carried
    explicitly rather than inferred from the largest letter: s_5 viewed in
    rank 6 and in rank 5 give diagrams of different size downstream.  Rank 0
    (an empty generating set) is allowed so that the smallest diagrams have
    an identity word.
    """

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.rank < 0:
            raise OutOfRange(f"rank must be nonnegative, got {self.rank}")
        for x in self.letters:
            if not 1 <= x <= self.rank:
                raise OutOfRange(f"letter {x} outside 1..{self.rank}")

    def __len__(self) -> int:
        return len(self.letters)

    @classmethod
    def parse(cls, text: str, rank: int) -> "Word":
        """Parse whitespace-separated generator subscripts, e.g. ``"2 6 1 3"``."""
        try:
            letters = tuple(int(tok) for tok in text.split())
        except ValueError as exc:
            raise ParseError(f"not a word: {text!r}") from exc
        try:
            return cls(rank, letters)
        except OutOfRange as exc:
            raise ParseError(str(exc)) from exc

    def to_text(self) -> str:
        """Inverse of :meth:`parse`: single-space-separated subscripts."""
        return " ".join(str(x) for x in self.letters)


def _check_pos(word: Word, pos: int, window: int) -> None:
    if not 1 <= pos <= len(word) - window + 1:
        raise OutOfRange(
            f"position {pos} invalid for a window of {window} in a word of length {len(word)}"
        )


def apply_commutation(word: Word, pos: int) -> Word:
    """Swap the commuting letters at positions pos and pos+1 (1-indexed).

    The letters must differ by at least 2; adjacent generators do not
    commute.
    """
    _check_pos(word, pos, 2)
    a, b = word.letters[pos - 1], word.letters[pos]
    if abs(a - b) <= 1:
        raise PositionNotCommutable(f"s_{a} and s_{b} do not commute at position {pos}")
    letters = list(word.letters)
    letters[pos - 1], letters[pos] = b, a
    return Word(word.rank, tuple(letters))


def apply_braid(word: Word, pos: int) -> Word:
    """Rewrite the braid pattern i, j, i at positions pos..pos+2 into j, i, j."""
    _check_pos(word, pos, 3)
    a, b, c = word.letters[pos - 1 : pos + 2]
    if not (a == c and abs(a - b) == 1):
        raise NoBraidAtPosition(f"letters {a}, {b}, {c} at position {pos} are not a braid pattern")
    letters = list(word.letters)
    letters[pos - 1 : pos + 2] = (b, a, b)
    return Word(word.rank, tuple(letters))


def _commutation_neighbours(letters: tuple[int, ...]):
    for i in range(len(letters) - 1):
        if abs(letters[i] - letters[i + 1]) >= 2:
            yield letters[:i] + (letters[i + 1], letters[i]) + letters[i + 2 :]


def _braid_neighbours(letters: tuple[int, ...]):
    for i in range(len(letters) - 2):
        a, b, c = letters[i : i + 3]
        if a == c and abs(a - b) == 1:
            yield letters[:i] + (b, a, b) + letters[i + 3 :]


def commutation_class(word: Word, limit: int = DEFAULT_BUDGET) -> set[Word]:
    """All words reachable from ``word`` by commutations, including itself.

    Raises :class:`ClassTooLarge` once more than ``limit`` distinct words
    have been found.
    """
    seen = {word.letters}
    frontier = deque(seen)
    while frontier:
        current = frontier.popleft()
        for nxt in _commutation_neighbours(current):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise ClassTooLarge(f"commutation class exceeds {limit} words")
                frontier.append(nxt)
    return {Word(word.rank, letters) for letters in seen}


def _has_equal_adjacent(letters: tuple[int, ...]) -> bool:
    return any(letters[i] == letters[i + 1] for i in range(len(letters) - 1))


def is_reduced_oracle(word: Word, budget: int = DEFAULT_BUDGET) -> bool:
    """Brute-force reducedness test by closure under commutations and braids.

    A word is non-reduced exactly when some word connected to it by
    commutations and braid moves contains two equal adjacent letters (which
    would cancel).  The closure is explored breadth-first; visiting more
    than ``budget`` words raises :class:`SearchBudgetExceeded`.
    """
    start = word.letters
    if _has_equal_adjacent(start):
        return False
    seen = {start}
    frontier = deque((start,))
    while frontier:
        current = frontier.popleft()
        for nxt in (*_commutation_neighbours(current), *_braid_neighbours(current)):
            if nxt in seen:
                continue
            if _has_equal_adjacent(nxt):
                return False
            seen.add(nxt)
            if len(seen) > budget:
                raise SearchBudgetExceeded(f"reducedness search exceeds {budget} words")
            frontier.append(nxt)
    return True


def is_fc(word: Word, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether ``word`` is a reduced word for a fully commutative element.

    Fast path: the local heap criterion, which certifies "reduced and FC"
    in one pass.  When the criterion fails the word is either reduced but
    not FC (return False) or not reduced at all; the breadth-first oracle
    decides which, and the non-reduced case raises :class:`NotReduced`
    because full commutativity is defined only for reduced words.
    """
    from .heaps import heap_from_word, heap_is_fc_reduced

    if heap_is_fc_reduced(heap_from_word(word)):
        return True
    if is_reduced_oracle(word, budget=budget):
        return False
    raise NotReduced(f"{word.to_text()!r} is not a reduced word")
