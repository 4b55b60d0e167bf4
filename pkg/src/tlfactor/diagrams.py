"""Loop-free Temperley-Lieb diagrams of type A and the algebra over Z[delta].

A diagram of rank k is a perfect non-crossing matching of the 2k nodes of a
rectangular box: k nodes N_1..N_k on the north face and k nodes S_1..S_k on
the south face.  Walking the boundary in the cyclic order
N_1, ..., N_k, S_k, ..., S_1, no two chords may interleave.  Closed loops
are never stored: concatenating two diagrams traces every path through the
glued interface, counts the cycles that stay inside it, and returns the
loop count separately so each loop contributes one factor of delta.

The simple diagrams d_1..d_n (rank k = n + 1) have cups joining nodes i and
i+1 on both faces and vertical chords elsewhere.  They satisfy

    d_i d_i = delta d_i,    d_i d_j = d_j d_i  (|i-j| > 1),
    d_i d_j d_i = d_i       (|i-j| = 1),

and generate all loop-free diagrams: the product d_{x_1} ... d_{x_m} over a
reduced word for a fully commutative element is loop-free, and this
assignment is a bijection between FC elements and loop-free diagrams.

:class:`TLElement` carries finite Z[delta]-linear combinations of diagrams,
with multiplication extended bilinearly and delta^loops absorbed into the
coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (
    CrossingChords,
    IndexOutOfRange,
    NotPerfectMatching,
    ParseError,
    RankMismatch,
)
from .words import Word

NORTH = "N"
SOUTH = "S"


class Endpoint(NamedTuple):
    """A boundary node: face ``"N"`` or ``"S"`` and 1-based position."""

    face: str
    pos: int


Chord = tuple[Endpoint, Endpoint]


def _ep_key(ep: Endpoint) -> tuple[int, int]:
    return (0 if ep.face == NORTH else 1, ep.pos)


def _normalize_chord(a: Endpoint, b: Endpoint) -> Chord:
    return (a, b) if _ep_key(a) <= _ep_key(b) else (b, a)


@dataclass(frozen=True)
class Diagram:
    """A chord matching of the standard k-box, stored in canonical order.

    Within each chord the north endpoint comes first (lower position first
    on equal faces), and chords are sorted by their first endpoint, so
    structural equality and hashing coincide with diagram equality.
    Construction normalizes but does not check the matching or planarity
    invariants; :func:`validate` does.
    """

    k: int
    chords: tuple[Chord, ...]

    def __post_init__(self):
        norm = tuple(
            sorted(
                (_normalize_chord(Endpoint(*a), Endpoint(*b)) for a, b in self.chords),
                key=lambda ch: (_ep_key(ch[0]), _ep_key(ch[1])),
            )
        )
        object.__setattr__(self, "chords", norm)

    @cached_property
    def partners(self) -> dict[Endpoint, Endpoint]:
        """Map from each endpoint to the other end of its chord."""
        out: dict[Endpoint, Endpoint] = {}
        for a, b in self.chords:
            out[a] = b
            out[b] = a
        return out

    def to_json(self) -> str:
        """Canonical one-line JSON; equal diagrams serialize identically."""
        payload = {
            "k": self.k,
            "chords": [[a.face, a.pos, b.face, b.pos] for a, b in self.chords],
        }
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "Diagram":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid diagram JSON: {exc}") from exc
        return cls.from_payload(payload)

    @classmethod
    def from_payload(cls, payload) -> "Diagram":
        if not isinstance(payload, dict) or set(payload) != {"k", "chords"}:
            raise ParseError('diagram JSON must be an object with keys "k" and "chords"')
        k = payload["k"]
        if not isinstance(k, int) or k < 1:
            raise ParseError(f"diagram rank must be a positive integer, got {k!r}")
        chords = []
        for entry in payload["chords"]:
            if (
                not isinstance(entry, list)
                or len(entry) != 4
                or entry[0] not in (NORTH, SOUTH)
                or entry[2] not in (NORTH, SOUTH)
                or not isinstance(entry[1], int)
                or not isinstance(entry[3], int)
            ):
                raise ParseError(f"invalid chord entry {entry!r}")
            chords.append((Endpoint(entry[0], entry[1]), Endpoint(entry[2], entry[3])))
        return cls(k, tuple(chords))


def _boundary_index(ep: Endpoint, k: int) -> int:
    # Cyclic order N_1..N_k, S_k..S_1 mapped to 0..2k-1.
    return ep.pos - 1 if ep.face == NORTH else 2 * k - ep.pos


def _endpoint_at(index: int, k: int) -> Endpoint:
    return Endpoint(NORTH, index + 1) if index < k else Endpoint(SOUTH, 2 * k - index)


def validate(diagram: Diagram) -> None:
    """Check the perfect-matching and non-crossing invariants.

    Raises :class:`NotPerfectMatching` or :class:`CrossingChords` (with the
    offending pair); returns None when the diagram is valid.  The planarity
    test is the linear stack walk around the boundary cycle.
    """
    k = diagram.k
    if len(diagram.chords) != k:
        raise NotPerfectMatching(f"expected {k} chords, found {len(diagram.chords)}")
    partner = [-1] * (2 * k)
    for a, b in diagram.chords:
        for ep in (a, b):
            if not 1 <= ep.pos <= k:
                raise NotPerfectMatching(f"node {ep} outside the {k}-box")
        ia, ib = _boundary_index(a, k), _boundary_index(b, k)
        if ia == ib:
            raise NotPerfectMatching(f"chord joins {a} to itself")
        for i, other in ((ia, ib), (ib, ia)):
            if partner[i] != -1:
                raise NotPerfectMatching(f"node {_endpoint_at(i, k)} used twice")
            partner[i] = other
    stack: list[int] = []
    for i in range(2 * k):
        if partner[i] < i:
            if stack and stack[-1] == partner[i]:
                stack.pop()
            else:
                raise CrossingChords(
                    f"chords interleave: {_offending_pair(diagram)}",
                    pair=_offending_pair(diagram),
                )
        else:
            stack.append(i)


def _offending_pair(diagram: Diagram) -> tuple[Chord, Chord] | None:
    k = diagram.k
    spans = [
        tuple(sorted((_boundary_index(a, k), _boundary_index(b, k))))
        for a, b in diagram.chords
    ]
    for i in range(len(spans)):
        for j in range(i + 1, len(spans)):
            (a1, b1), (a2, b2) = spans[i], spans[j]
            if (a1 < a2 < b1 < b2) or (a2 < a1 < b2 < b1):
                return (diagram.chords[i], diagram.chords[j])
    return None


def identity_diagram(k: int) -> Diagram:
    """The unique diagram with only propagating chords N_i - S_i."""
    if k < 1:
        raise IndexOutOfRange(f"rank must be at least 1, got {k}")
    return Diagram(k, tuple((Endpoint(NORTH, i), Endpoint(SOUTH, i)) for i in range(1, k + 1)))


def simple_diagram(i: int, n: int) -> Diagram:
    """The generator d_i of rank k = n + 1: cups at i, i+1 on both faces."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"simple diagram index {i} outside 1..{n}")
    k = n + 1
    chords = [
        (Endpoint(NORTH, i), Endpoint(NORTH, i + 1)),
        (Endpoint(SOUTH, i), Endpoint(SOUTH, i + 1)),
    ]
    chords.extend(
        (Endpoint(NORTH, j), Endpoint(SOUTH, j)) for j in range(1, k + 1) if j not in (i, i + 1)
    )
    return Diagram(k, tuple(chords))


def multiply(top: Diagram, bottom: Diagram) -> tuple[int, Diagram]:
    """Concatenate ``top`` above ``bottom`` and count the erased loops.

    The south nodes of ``top`` are glued to the north nodes of ``bottom``.
    Paths from the 2k exterior nodes are traced through the interface to
    give the chords of the product; cycles confined to the interface are
    the loops, each worth one factor of delta.
    """
    if top.k != bottom.k:
        raise RankMismatch(f"diagram ranks differ: {top.k} != {bottom.k}")
    k = top.k
    ptop = top.partners
    pbot = bottom.partners
    seen_mid = [False] * (k + 1)

    def walk(in_top: bool, ep: Endpoint) -> Endpoint:
        while True:
            if in_top:
                nxt = ptop[ep]
                if nxt.face == NORTH:
                    return nxt
                seen_mid[nxt.pos] = True
                in_top, ep = False, Endpoint(NORTH, nxt.pos)
            else:
                nxt = pbot[ep]
                if nxt.face == SOUTH:
                    return nxt
                seen_mid[nxt.pos] = True
                in_top, ep = True, Endpoint(SOUTH, nxt.pos)

    chords: list[Chord] = []
    done_north = [False] * (k + 1)
    done_south = [False] * (k + 1)
    for i in range(1, k + 1):
        if done_north[i]:
            continue
        start = Endpoint(NORTH, i)
        end = walk(True, start)
        done_north[i] = True
        if end.face == NORTH:
            done_north[end.pos] = True
        else:
            done_south[end.pos] = True
        chords.append((start, end))
    for i in range(1, k + 1):
        if done_south[i]:
            continue
        start = Endpoint(SOUTH, i)
        end = walk(False, start)
        done_south[i] = True
        done_south[end.pos] = True  # a south start can only reach another south node
        chords.append((start, end))

    loops = 0
    for m in range(1, k + 1):
        if seen_mid[m]:
            continue
        loops += 1
        cur = m
        while True:
            seen_mid[cur] = True
            j = ptop[Endpoint(SOUTH, cur)].pos
            seen_mid[j] = True
            cur = pbot[Endpoint(NORTH, j)].pos
            if cur == m:
                break
    return loops, Diagram(k, tuple(chords))


def diagram_from_word(word: Word) -> tuple[int, Diagram]:
    """Fold the simple diagrams of ``word`` left to right from the identity.

    Returns the accumulated loop count (the power of delta) and the product
    diagram.  For a reduced FC word the loop count is zero and the result
    is the basis diagram indexed by that element.
    """
    k = word.rank + 1
    total = 0
    acc = identity_diagram(k)
    for x in word.letters:
        loops, acc = multiply(acc, simple_diagram(x, word.rank))
        total += loops
    return total, acc


@dataclass(frozen=True)
class DeltaPoly:
    """Integer polynomial in delta, stored densely with no trailing zeros."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_int(cls, value: int) -> "DeltaPoly":
        return cls((value,))

    @classmethod
    def delta(cls, power: int = 1) -> "DeltaPoly":
        return cls((0,) * power + (1,))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "DeltaPoly") -> "DeltaPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return DeltaPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __neg__(self) -> "DeltaPoly":
        return DeltaPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "DeltaPoly") -> "DeltaPoly":
        return self + (-other)

    def __mul__(self, other: "DeltaPoly") -> "DeltaPoly":
        if not self or not other:
            return DeltaPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return DeltaPoly(tuple(out))

    def shifted(self, power: int) -> "DeltaPoly":
        """Multiply by delta**power."""
        if not self or power == 0:
            return self
        return DeltaPoly((0,) * power + self.coeffs)


def _coerce_poly(value) -> DeltaPoly:
    if isinstance(value, DeltaPoly):
        return value
    if isinstance(value, int):
        return DeltaPoly.from_int(value)
    raise TypeError(f"cannot use {value!r} as a delta polynomial")


class TLElement:
    """A finite Z[delta]-linear combination of same-rank diagrams.

    Terms with zero coefficient are dropped, so equality of elements is
    equality of the stored mappings.  Products absorb delta**loops into the
    coefficients, which keeps every element supported on loop-free
    diagrams.
    """

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: dict[Diagram, DeltaPoly] | None = None):
        self.k = k
        clean: dict[Diagram, DeltaPoly] = {}
        for diagram, poly in (terms or {}).items():
            if diagram.k != k:
                raise RankMismatch(f"term of rank {diagram.k} in an element of rank {k}")
            poly = _coerce_poly(poly)
            if poly:
                clean[diagram] = poly
        self.terms = clean

    @classmethod
    def zero(cls, k: int) -> "TLElement":
        return cls(k)

    @classmethod
    def identity(cls, k: int) -> "TLElement":
        return cls.from_diagram(identity_diagram(k))

    @classmethod
    def from_diagram(cls, diagram: Diagram, coeff: DeltaPoly | int = 1) -> "TLElement":
        return cls(diagram.k, {diagram: _coerce_poly(coeff)})

    @classmethod
    def generator(cls, i: int, n: int) -> "TLElement":
        return cls.from_diagram(simple_diagram(i, n))

    def __eq__(self, other) -> bool:
        return isinstance(other, TLElement) and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check_rank(self, other: "TLElement") -> None:
        if self.k != other.k:
            raise RankMismatch(f"element ranks differ: {self.k} != {other.k}")

    def __add__(self, other: "TLElement") -> "TLElement":
        self._check_rank(other)
        terms = dict(self.terms)
        for diagram, poly in other.terms.items():
            terms[diagram] = terms.get(diagram, DeltaPoly()) + poly
        return TLElement(self.k, terms)

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + other.scale(-1)

    def scale(self, factor: DeltaPoly | int) -> "TLElement":
        factor = _coerce_poly(factor)
        return TLElement(self.k, {d: p * factor for d, p in self.terms.items()})

    def __mul__(self, other: "TLElement") -> "TLElement":
        self._check_rank(other)
        terms: dict[Diagram, DeltaPoly] = {}
        for d1, p1 in self.terms.items():
            for d2, p2 in other.terms.items():
                loops, product = multiply(d1, d2)
                contribution = (p1 * p2).shifted(loops)
                terms[product] = terms.get(product, DeltaPoly()) + contribution
        return TLElement(self.k, terms)

    def to_json(self) -> str:
        items = sorted(
            ((d.to_json(), p.coeffs) for d, p in self.terms.items()),
            key=lambda pair: pair[0],
        )
        return json.dumps(
            [{"diagram": json.loads(dj), "coefficients": list(coeffs)} for dj, coeffs in items]
        )

    @classmethod
    def from_json(cls, text: str, k: int | None = None) -> "TLElement":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid element JSON: {exc}") from exc
        if not isinstance(payload, list):
            raise ParseError("element JSON must be a list of terms")
        terms: dict[Diagram, DeltaPoly] = {}
        for entry in payload:
            if not isinstance(entry, dict) or set(entry) != {"diagram", "coefficients"}:
                raise ParseError(f"invalid element term {entry!r}")
            diagram = Diagram.from_payload(entry["diagram"])
            coeffs = entry["coefficients"]
            if not isinstance(coeffs, list) or not all(isinstance(c, int) for c in coeffs):
                raise ParseError(f"invalid coefficient list {coeffs!r}")
            terms[diagram] = DeltaPoly(tuple(coeffs))
            if k is None:
                k = diagram.k
        if k is None:
            raise ParseError("cannot infer the rank of an empty element")
        return cls(k, terms)


def element_product(factors: Iterable[TLElement]) -> TLElement:
    """Left-to-right product of elements (identity for an empty sequence)."""
    result: TLElement | None = None
    for factor in factors:
        result = factor if result is None else result * factor
    if result is None:
        raise ValueError("empty product has no well-defined rank")
    return result
