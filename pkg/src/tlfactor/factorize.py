"""Reduced factorization of a loop-free diagram into simple diagrams.

The k-box is sectioned into columns: column C_i lies between boundary
positions i and i+1, and a chord passes through C_i exactly when its
endpoint positions straddle the gap (min <= i < max).  The number of
chords m_i through a column is always even, so the m_i + 1 regions of the
column alternate labels 0, 1, 0, ... from the north face down, and the
odd-depth regions (the 1-regions) each witness one factor d_i.

No geometry is used.  Planarity forces a unique top-to-bottom order on the
chords through a column: sorted by where each chord comes from on the left
(north endpoints at positions i, i-1, ..., 1, then south endpoints at
positions 1, 2, ..., i), which must agree with the dual order by where it
exits on the right (north i+1..k ascending, then south k..i+1 descending).
The same keys order the chords spanning the boundary line between two
adjacent columns, and every region meets that line in an interval of it;
two regions of adjacent columns are horizontally adjacent exactly when
their intervals share one of the gaps between consecutive crossings.
Horizontally adjacent regions differ in depth by exactly one and carry
opposite labels.  A vertical chord N_j - S_j occupies the whole line and
blocks all adjacency across it.

The directed region graph has the 1-regions as vertices, labelled s_i by
column, with an edge R -> R' when the region directly below R is
horizontally adjacent to R'.  Its longest-path levels are the canonical
levels of the heap of the fully commutative element indexing the diagram,
so reading the levels top to bottom (columns ascending within a level)
recovers a reduced word w with d_w = d, non-recursively.  The number of
occurrences of s_i in any such factorization is m_i / 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .diagrams import NORTH, SOUTH, Diagram, Endpoint, validate
from .errors import InconsistentCrossingOrder, InvariantViolation
from .words import Word

Region = tuple[int, int]  # (column, depth)


class Incidence(Enum):
    """How the chord at a boundary node leaves the separator line."""

    LEFT = "left"
    RIGHT = "right"
    VERTICAL = "vertical"
    NONE = "none"


@dataclass(frozen=True)
class ColumnProfile:
    """Chords through column ``column``, as indices into ``diagram.chords``,
    ordered top to bottom."""

    column: int
    crossings: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.crossings)


@dataclass(frozen=True)
class SeparatorProfile:
    """Chords strictly spanning the vertical line through nodes N_j, S_j,
    ordered top to bottom, plus how the chords at N_j and S_j attach."""

    line: int
    crossings: tuple[int, ...]
    top_incident: Incidence
    bot_incident: Incidence


@dataclass(frozen=True)
class RegionGraph:
    """The labelled directed graph on 1-regions; label((i, p)) = s_i."""

    rank: int
    vertices: tuple[Region, ...]
    edges: tuple[tuple[Region, Region], ...]

    @staticmethod
    def label(vertex: Region) -> int:
        return vertex[0]

    def sources(self) -> tuple[Region, ...]:
        targets = {v for _, v in self.edges}
        return tuple(v for v in self.vertices if v not in targets)


class _ChordData:
    """Per-chord span and ordering keys shared by the column and separator
    computations."""

    __slots__ = ("lo", "hi", "lkey", "rkey", "lo_ep", "hi_ep")

    def __init__(self, a: Endpoint, b: Endpoint):
        if a.pos <= b.pos:
            lo_ep, hi_ep = a, b
        else:
            lo_ep, hi_ep = b, a
        self.lo = lo_ep.pos
        self.hi = hi_ep.pos
        self.lo_ep = lo_ep
        self.hi_ep = hi_ep
        # Left key: north endpoints at i, i-1, ..., 1 come first, then south
        # endpoints at 1, 2, ..., i.  Right key is the mirror image.
        self.lkey = (0, -lo_ep.pos) if lo_ep.face == NORTH else (1, lo_ep.pos)
        self.rkey = (0, hi_ep.pos) if hi_ep.face == NORTH else (1, -hi_ep.pos)


def _chord_table(diagram: Diagram) -> list[_ChordData]:
    return [_ChordData(a, b) for a, b in diagram.chords]


def _column_order(table: list[_ChordData], through: list[int], where: str) -> tuple[int, ...]:
    by_left = sorted(through, key=lambda t: table[t].lkey)
    by_right = sorted(through, key=lambda t: table[t].rkey)
    if by_left != by_right:
        raise InconsistentCrossingOrder(
            f"left- and right-endpoint crossing orders disagree on {where}"
        )
    return tuple(by_left)


def _columns(diagram: Diagram, table: list[_ChordData]) -> list[ColumnProfile]:
    profiles = []
    for i in range(1, diagram.k):
        through = [t for t, cd in enumerate(table) if cd.lo <= i < cd.hi]
        profiles.append(ColumnProfile(i, _column_order(table, through, f"column {i}")))
    return profiles


def column_profiles(diagram: Diagram) -> list[ColumnProfile]:
    """Top-to-bottom chord order for each of the k-1 columns."""
    return _columns(diagram, _chord_table(diagram))


def _incidence(diagram: Diagram, table: list[_ChordData], node: Endpoint, j: int) -> Incidence:
    other = diagram.partners[node]
    if other.pos < j:
        return Incidence.LEFT
    if other.pos > j:
        return Incidence.RIGHT
    return Incidence.VERTICAL  # the chord N_j - S_j


def _separators(diagram: Diagram, table: list[_ChordData]) -> list[SeparatorProfile]:
    profiles = []
    for j in range(2, diagram.k):
        spanning = [t for t, cd in enumerate(table) if cd.lo < j < cd.hi]
        order = _column_order(table, spanning, f"separator {j}")
        profiles.append(
            SeparatorProfile(
                j,
                order,
                _incidence(diagram, table, Endpoint(NORTH, j), j),
                _incidence(diagram, table, Endpoint(SOUTH, j), j),
            )
        )
    return profiles


def separator_profiles(diagram: Diagram) -> list[SeparatorProfile]:
    """Spanning-chord orders and node attachments for lines j = 2..k-1."""
    return _separators(diagram, _chord_table(diagram))


def _attachments(
    table: list[_ChordData],
    column: ColumnProfile,
    cross_index: dict[int, int],
    bottom: int,
    j: int,
    left_side: bool,
) -> list[int]:
    """Scale position of each region boundary of ``column`` on separator j.

    Boundary 0 is the north face (TOP = 0) and boundary m+1 the south face
    (BOT = ``bottom``); boundary t is where the column's t-th chord meets
    the line: its crossing index if it spans the line, else TOP or BOT
    according to the face of its endpoint at position j.
    """
    attach = [0]
    for t in column.crossings:
        idx = cross_index.get(t)
        if idx is None:
            ep = table[t].hi_ep if left_side else table[t].lo_ep
            attach.append(0 if ep.face == NORTH else bottom)
        else:
            attach.append(idx)
    attach.append(bottom)
    if any(a > b for a, b in zip(attach, attach[1:])):
        raise InconsistentCrossingOrder(
            f"column {column.column} crossing order inconsistent with separator {j}"
        )
    return attach


def _adjacency(
    diagram: Diagram, table: list[_ChordData],
    columns: list[ColumnProfile], separators: list[SeparatorProfile],
) -> set[tuple[Region, Region]]:
    pairs: set[tuple[Region, Region]] = set()
    for sep in separators:
        if sep.top_incident is Incidence.VERTICAL:
            continue  # the chord N_j - S_j seals the whole line
        j = sep.line
        cross_index = {t: idx for idx, t in enumerate(sep.crossings, start=1)}
        bottom = len(sep.crossings) + 1
        left = columns[j - 2]
        right = columns[j - 1]
        al = _attachments(table, left, cross_index, bottom, j, left_side=True)
        ar = _attachments(table, right, cross_index, bottom, j, left_side=False)
        p = q = 0
        while p <= left.m and q <= right.m:
            # Adjacent iff the two boundary intervals share a full unit gap.
            if max(al[p], ar[q]) < min(al[p + 1], ar[q + 1]):
                pairs.add(((j - 1, p), (j, q)))
            if al[p + 1] < ar[q + 1]:
                p += 1
            elif al[p + 1] > ar[q + 1]:
                q += 1
            else:
                p += 1
                q += 1
    return pairs


def horizontal_adjacency(diagram: Diagram) -> set[tuple[Region, Region]]:
    """All horizontally adjacent region pairs, lower column first."""
    table = _chord_table(diagram)
    columns = _columns(diagram, table)
    separators = _separators(diagram, table)
    return _adjacency(diagram, table, columns, separators)


def _graph(columns: list[ColumnProfile], adjacency: set[tuple[Region, Region]], rank: int) -> RegionGraph:
    vertices = tuple(
        (col.column, p) for col in columns for p in range(1, col.m, 2)
    )
    edges = []
    for (left_col, p), (right_col, q) in adjacency:
        # R -> R' when the region below R is horizontally adjacent to R'.
        if p % 2 == 0 and q % 2 == 1 and p >= 2:
            edges.append(((left_col, p - 1), (right_col, q)))
        elif p % 2 == 1 and q % 2 == 0 and q >= 2:
            edges.append(((right_col, q - 1), (left_col, p)))
    return RegionGraph(rank, vertices, tuple(sorted(edges)))


def region_graph(diagram: Diagram) -> RegionGraph:
    """The labelled directed graph on the diagram's 1-regions."""
    table = _chord_table(diagram)
    columns = _columns(diagram, table)
    separators = _separators(diagram, table)
    adjacency = _adjacency(diagram, table, columns, separators)
    return _graph(columns, adjacency, diagram.k - 1)


def _levels(graph: RegionGraph) -> dict[Region, int]:
    indegree = {v: 0 for v in graph.vertices}
    successors: dict[Region, list[Region]] = {v: [] for v in graph.vertices}
    for u, v in graph.edges:
        successors[u].append(v)
        indegree[v] += 1
    level = {v: 0 for v in graph.vertices}
    queue = deque(v for v, d in indegree.items() if d == 0)
    processed = 0
    while queue:
        v = queue.popleft()
        processed += 1
        for w in successors[v]:
            level[w] = max(level[w], level[v] + 1)
            indegree[w] -= 1
            if indegree[w] == 0:
                queue.append(w)
    if processed != len(graph.vertices):
        raise InvariantViolation("region graph contains a cycle")
    return level


def factor(diagram: Diagram) -> Word:
    """Reduced word w with d_w = ``diagram``, in Cartier-Foata normal form.

    Validates the diagram, builds the region graph, takes canonical levels
    (longest path from the sources), and reads each level left to right.
    """
    validate(diagram)
    graph = region_graph(diagram)
    level = _levels(graph)
    reading = sorted((level[v], v[0]) for v in graph.vertices)
    return Word(diagram.k - 1, tuple(column for _, column in reading))


def factor_multiplicities(diagram: Diagram) -> tuple[int, ...]:
    """Occurrences of each generator in any factorization: m_i / 2 per column."""
    validate(diagram)
    return tuple(profile.m // 2 for profile in column_profiles(diagram))
