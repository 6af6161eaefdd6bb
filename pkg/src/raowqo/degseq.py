"""Degree-sequence primitives.

Graphicness tests, a deterministic realization builder, exhaustive
realization enumeration, and induced-subgraph extraction. Everything here
is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from raowqo import _kernel
from raowqo.errors import CapExceeded, NotGraphic

ENUM_CAP_DEFAULT = 10


@dataclass(frozen=True)
class DegreeSequence:
    """Multiset of vertex degrees, stored non-increasing.

    Non-graphic contents are representable: graphicness is a question you
    ask (``is_graphic``), not a construction invariant. Entries must be
    non-negative integers; sorting is stable, so equal entries keep their
    input order.
    """

    degrees: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        degs = tuple(sorted((int(d) for d in self.degrees), reverse=True))
        if degs and degs[-1] < 0:
            raise ValueError("degrees must be non-negative")
        object.__setattr__(self, "degrees", degs)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are unordered pairs normalized to (u, v) with u < v; loops and
    out-of-range endpoints are rejected at construction.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError("loops are not allowed")
            if u > v:
                u, v = v, u
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degrees(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for u, v in self.edges:
            counts[u] += 1
            counts[v] += 1
        return tuple(counts)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def is_graphic(seq: DegreeSequence) -> bool:
    """Decide whether a simple graph realizes ``seq`` (Erdős–Gallai).

    Zeros are stripped first (isolated vertices are always realizable) and
    an odd degree sum fails immediately. Total function; the empty sequence
    is graphic (realized by the empty graph).
    """
    degs = [d for d in seq.degrees if d > 0]
    if sum(degs) % 2:
        return False
    m = len(degs)
    if m == 0:
        return True
    if degs[0] > m - 1:
        return False
    prefix = 0
    for k in range(1, m + 1):
        prefix += degs[k - 1]
        tail = sum(d if d < k else k for d in degs[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def graphic_by_size(seq: DegreeSequence) -> bool:
    """Sufficiency-only size test for graphicness.

    True iff every entry is >= 1, the sum is even, and the length is at
    least the square of the largest entry. A true answer guarantees the
    sequence is graphic; false is inconclusive, never a refutation. The
    test addresses positive tuples only, so any zero entry makes it
    inapplicable (callers strip zeros where that is the intent).
    """
    degs = seq.degrees
    if any(d < 1 for d in degs):
        return False
    if sum(degs) % 2:
        return False
    largest = max(degs, default=0)
    return len(degs) >= largest * largest


def havel_hakimi(seq: DegreeSequence) -> Graph:
    """Deterministic realization of a graphic sequence.

    Repeatedly satisfies the vertex with the highest remaining degree
    (ties: lowest index) by connecting it to the vertices with the next
    highest remaining degrees (same tie-break). The result is entry-indexed:
    vertex i has degree seq.degrees[i].

    Raises:
        NotGraphic: if no simple graph realizes the sequence.
    """
    n = len(seq)
    rem = list(seq.degrees)
    edges: set[tuple[int, int]] = set()
    while True:
        v = min(range(n), key=lambda i: (-rem[i], i), default=-1)
        if v < 0 or rem[v] == 0:
            break
        need = rem[v]
        others = sorted(
            (i for i in range(n) if i != v and rem[i] > 0),
            key=lambda i: (-rem[i], i),
        )
        if len(others) < need:
            raise NotGraphic(f"{seq.degrees} fails the greedy reduction")
        rem[v] = 0
        for i in others[:need]:
            rem[i] -= 1
            edges.add((min(v, i), max(v, i)))
    g = Graph(n, frozenset(edges))
    assert g.degrees() == seq.degrees, "greedy construction degree mismatch"
    return g


def enumerate_realizations(seq: DegreeSequence, cap: int = ENUM_CAP_DEFAULT) -> list[Graph]:
    """All graphs on vertices 0..n-1 with deg(i) = seq.degrees[i], exactly.

    Entry-indexed, NOT up to isomorphism: vertex identity is meaningful
    because callers attach per-entry labels. Returned in a canonical order
    (lexicographic by sorted edge list); empty iff the sequence is not
    graphic.

    Raises:
        CapExceeded: if len(seq) > cap (default 10).
    """
    if len(seq) > cap:
        raise CapExceeded(f"{len(seq)} vertices exceeds enumeration cap {cap}")
    raw = _kernel.realizations(seq.degrees)
    return [Graph(len(seq), frozenset(edges)) for edges in sorted(raw)]


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Restrict ``g`` to a vertex subset, preserving adjacency and non-adjacency.

    Returns the re-indexed subgraph together with the map from new index to
    original vertex (ascending original order).
    """
    verts = sorted(set(int(v) for v in vertices))
    if verts and not (0 <= verts[0] and verts[-1] < g.n):
        raise ValueError("subset contains vertices outside the graph")
    index = {v: k for k, v in enumerate(verts)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Graph(len(verts), edges), tuple(verts)


def degree_sequence_of(g: Graph) -> DegreeSequence:
    """Sorted non-increasing degree multiset of a graph."""
    return DegreeSequence(g.degrees())


def graph_to_json(g: Graph) -> dict:
    """Canonical JSON form: {"n": int, "edges": [[u, v], ...]} sorted, u < v."""
    return {"n": g.n, "edges": [[u, v] for u, v in g.sorted_edges()]}


def graph_from_json(obj: object) -> Graph:
    if not isinstance(obj, dict) or set(obj) != {"n", "edges"}:
        raise ValueError('graph JSON must be {"n": ..., "edges": [...]}')
    n = obj["n"]
    edges = obj["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ValueError("graph JSON has malformed fields")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ValueError(f"malformed edge {e!r}")
        pairs.append((e[0], e[1]))
    return Graph(n, frozenset(pairs))
