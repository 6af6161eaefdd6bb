"""The Rao containment order on labelled graphic sequences.

D1 <= D2 holds when some realization of D1 is an induced subgraph of some
realization of D2, with every embedded vertex's label dominated by its
image's label. This module provides the exact brute-force decision (with a
re-checkable witness), a sufficiency-only padding fast path, the
almost-bounded top-vertex reduction, and the good-pair search over a finite
list of sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from raowqo import degseq, orders
from raowqo.degseq import DegreeSequence, Graph
from raowqo.errors import (
    CapExceeded,
    LabelNotDominated,
    NotGraphic,
    OrderMismatch,
    PreconditionViolated,
    ReconstructionDegreeMismatch,
    TooShort,
    TopGraphMismatch,
)

EXACT_CAP_DEFAULT = 8
PADDING_BUDGET_DEFAULT = 1000
GOOD_PAIR_BUDGET_DEFAULT = 10_000


@dataclass(frozen=True)
class LabelledGraphicSequence:
    """Graphic degree multiset with one label per entry.

    Entries are canonically sorted by (degree descending, label
    serialization); semantically this is a multiset of (degree, label)
    pairs. Construction rejects non-graphic degree multisets and labels
    that are ill-typed for the order descriptor.
    """

    order: orders.OrderOracle
    entries: tuple[tuple[int, orders.Label], ...] = ()

    def __post_init__(self) -> None:
        ents = []
        for d, lab in self.entries:
            d = int(d)
            if d < 0:
                raise ValueError("degrees must be non-negative")
            orders.check_label(self.order, lab)
            ents.append((d, lab))
        ents.sort(key=lambda e: (-e[0], orders.label_key(e[1])))
        degs = DegreeSequence(d for d, _ in ents)
        if not degseq.is_graphic(degs):
            raise NotGraphic(f"degree multiset {degs.degrees} is not graphic")
        object.__setattr__(self, "entries", tuple(ents))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.entries)

    @property
    def labels(self) -> tuple[orders.Label, ...]:
        return tuple(lab for _, lab in self.entries)

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(self.degrees)


def unlabelled(degrees: Iterable[int]) -> LabelledGraphicSequence:
    """Degrees with unit labels: the unlabelled order as a special case."""
    return LabelledGraphicSequence(
        orders.UnitOrder(), tuple((int(d), orders.Unit()) for d in degrees)
    )


@dataclass(frozen=True)
class LabelledGraph:
    graph: Graph
    labels: tuple[orders.Label, ...]
    order: orders.OrderOracle

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) != self.graph.n:
            raise ValueError("label count must equal vertex count")
        for lab in self.labels:
            orders.check_label(self.order, lab)


@dataclass(frozen=True)
class EmbeddingWitness:
    """Concrete (g1, g2, phi) certifying d1 <= d2; re-checkable with no trust."""

    d1: LabelledGraphicSequence
    d2: LabelledGraphicSequence
    g1: LabelledGraph
    g2: LabelledGraph
    phi: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "phi", tuple(int(x) for x in self.phi))


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class AlmostBoundedReduction:
    """Output of the top-vertex reduction.

    ``top_graph`` is the induced graph on the N largest-degree vertices
    under their fixed naming (decreasing degree, ties by vertex index);
    ``residual`` re-labels every remaining vertex with (original label,
    subset of top vertices it is adjacent to).
    """

    top_graph: Graph
    top_labels: tuple[orders.Label, ...]
    residual: LabelledGraphicSequence


def _realizes(g: LabelledGraph, d: LabelledGraphicSequence) -> bool:
    # realization = the multiset of (degree, label) pairs matches exactly
    if g.graph.n != len(d):
        return False
    have = sorted(
        (deg, orders.label_key(lab)) for deg, lab in zip(g.graph.degrees(), g.labels)
    )
    want = sorted((deg, orders.label_key(lab)) for deg, lab in d.entries)
    return have == want


def verify_witness(w: EmbeddingWitness) -> VerificationResult:
    """Re-check an embedding witness from scratch.

    Verifies, in order: shared order descriptors; g1 realizes d1 and g2
    realizes d2 (degrees exact, labels exact as multisets); phi is an
    injection into g2; the induced-subgraph condition in both directions;
    and label dominance at every embedded vertex. Never raises — malformed
    witnesses yield ok=False with a reason.
    """

    def fail(reason: str) -> VerificationResult:
        return VerificationResult(False, reason)

    try:
        if w.d1.order != w.d2.order:
            return fail("order mismatch between d1 and d2")
        if w.g1.order != w.d1.order or w.g2.order != w.d2.order:
            return fail("order mismatch between graphs and sequences")
        if not _realizes(w.g1, w.d1):
            return fail("g1 does not realize d1")
        if not _realizes(w.g2, w.d2):
            return fail("g2 does not realize d2")
        n1, n2 = w.g1.graph.n, w.g2.graph.n
        if len(w.phi) != n1:
            return fail("phi has wrong length")
        if any(not 0 <= x < n2 for x in w.phi):
            return fail("phi maps outside g2")
        if len(set(w.phi)) != n1:
            return fail("phi is not injective")
        for x in range(n1):
            for y in range(x + 1, n1):
                if w.g1.graph.has_edge(x, y) != w.g2.graph.has_edge(w.phi[x], w.phi[y]):
                    return fail(f"induced condition violated at ({x}, {y})")
        for x in range(n1):
            if not orders.leq(w.d1.order, w.g1.labels[x], w.g2.labels[w.phi[x]]):
                return fail(f"label not dominated at vertex {x}")
    except Exception as exc:  # malformed fields must yield False, not raise
        return fail(f"malformed witness: {exc}")
    return VerificationResult(True)


def _perfect_matching(
    n_left: int, n_right: int, compatible: Callable[[int, int], bool]
) -> list[int] | None:
    """Match every left node to a distinct compatible right node (augmenting
    paths, deterministic scan order). Returns left->right or None."""
    match_right = [-1] * n_right

    def try_assign(i: int, seen: list[bool]) -> bool:
        for j in range(n_right):
            if not seen[j] and compatible(i, j):
                seen[j] = True
                if match_right[j] < 0 or try_assign(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    for i in range(n_left):
        if not try_assign(i, [False] * n_right):
            return None
    left = [-1] * n_left
    for j, i in enumerate(match_right):
        if i >= 0:
            left[i] = j
    return left


def rao_le_exact(
    d1: LabelledGraphicSequence,
    d2: LabelledGraphicSequence,
    cap: int = EXACT_CAP_DEFAULT,
) -> EmbeddingWitness | None:
    """Exact decision of d1 <= d2 by exhaustive search; None means NOT contained.

    Enumerates every entry-indexed realization of d2, every vertex subset of
    size len(d1), and every degree-and-label-compatible assignment of d1's
    entries to the subset (a bipartite perfect matching: entry (d, q) fits
    vertex w iff w's degree within the induced subgraph is d and q <= label(w)).
    Realizations of d1 need not be enumerated: an induced subgraph whose
    (degree, label) multiset matches d1 IS a realization of d1.

    Raises:
        OrderMismatch: d1 and d2 carry different order descriptors.
        CapExceeded: len(d2) > cap (default 8).
    """
    if d1.order != d2.order:
        raise OrderMismatch("sequences must share an order descriptor")
    if len(d2) > cap:
        raise CapExceeded(f"{len(d2)} entries exceeds exact-decision cap {cap}")
    n1, n2 = len(d1), len(d2)
    # necessary conditions: containment cannot grow length or degree sum
    if n1 > n2 or sum(d1.degrees) > sum(d2.degrees):
        return None
    base = d1.order
    entries1 = d1.entries
    want = sorted(d1.degrees)
    labels2 = d2.labels
    for g2 in degseq.enumerate_realizations(d2.degree_sequence(), cap=cap):
        adj = [0] * n2
        for u, v in g2.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        for subset in combinations(range(n2), n1):
            wmask = 0
            for v in subset:
                wmask |= 1 << v
            subdeg = [(adj[v] & wmask).bit_count() for v in subset]
            if sorted(subdeg) != want:
                continue

            def compatible(i: int, k: int) -> bool:
                return entries1[i][0] == subdeg[k] and orders.leq(
                    base, entries1[i][1], labels2[subset[k]]
                )

            left = _perfect_matching(n1, n1, compatible)
            if left is None:
                continue
            sub, vmap = degseq.induced_subgraph(g2, subset)
            lab1: list[orders.Label] = [orders.Unit()] * n1
            for i, k in enumerate(left):
                lab1[k] = entries1[i][1]
            witness = EmbeddingWitness(
                d1,
                d2,
                LabelledGraph(sub, tuple(lab1), base),
                LabelledGraph(g2, labels2, base),
                vmap,
            )
            check = verify_witness(witness)
            assert check, f"exact search produced a bad witness: {check.reason}"
            return witness
    return None


def _degree_multiset_leftover(
    big: Sequence[int], small: Sequence[int]
) -> list[int] | None:
    """Multiset difference big - small, or None if small is not contained."""
    counts: dict[int, int] = {}
    for d in big:
        counts[d] = counts.get(d, 0) + 1
    for d in small:
        if counts.get(d, 0) == 0:
            return None
        counts[d] -= 1
    out: list[int] = []
    for d, c in counts.items():
        out.extend([d] * c)
    out.sort(reverse=True)
    return out


def rao_le_padding(
    d1: LabelledGraphicSequence,
    d2: LabelledGraphicSequence,
    budget: int = PADDING_BUDGET_DEFAULT,
) -> EmbeddingWitness | None:
    """Sufficiency-only fast path; None means INCONCLUSIVE, never "not contained".

    Looks for a perfect matching of d1's entries onto d2 entries of EQUAL
    degree with dominated labels, such that the leftover entries form a
    graphic multiset. On success the witness is a disjoint union: g1 is a
    deterministic realization of d1, padded with an independent realization
    of the leftover; phi is the identity into the g1 part. The returned
    witness always re-verifies.

    Because matched degrees are equal, the leftover degree multiset is the
    same for every matching (d2's degrees minus d1's), so its graphicness is
    checked once and a single matching suffices; ``budget`` therefore bounds
    work that never materializes in practice and is kept for API stability.
    The leftover sum is automatically even (both sequences are graphic);
    this is asserted, not assumed. Graphicness of the zero-stripped leftover
    is concluded from the size-sufficiency test where it applies, otherwise
    decided exactly.
    """
    if d1.order != d2.order:
        raise OrderMismatch("sequences must share an order descriptor")
    base = d1.order
    n1, n2 = len(d1), len(d2)
    if n1 > n2 or sum(d1.degrees) > sum(d2.degrees):
        return None
    leftover_degs = _degree_multiset_leftover(d2.degrees, d1.degrees)
    if leftover_degs is None:
        return None
    positive = DegreeSequence(d for d in leftover_degs if d > 0)
    assert positive.total % 2 == 0, "leftover parity broken despite graphic inputs"
    if not (degseq.graphic_by_size(positive) or degseq.is_graphic(positive)):
        return None
    entries1, entries2 = d1.entries, d2.entries

    def compatible(i: int, j: int) -> bool:
        return entries1[i][0] == entries2[j][0] and orders.leq(
            base, entries1[i][1], entries2[j][1]
        )

    left = _perfect_matching(n1, n2, compatible)
    if left is None:
        return None
    g1_graph = degseq.havel_hakimi(d1.degree_sequence())
    g1 = LabelledGraph(g1_graph, d1.labels, base)
    matched = set(left)
    leftover_entries = [entries2[j] for j in range(n2) if j not in matched]
    # leftover degrees arrive non-increasing (subsequence of sorted entries),
    # so the havel_hakimi output aligns with leftover_entries by index
    pad = degseq.havel_hakimi(DegreeSequence(d for d, _ in leftover_entries))
    edges = set(g1_graph.edges)
    for u, v in pad.edges:
        edges.add((n1 + u, n1 + v))
    labels_g2 = tuple(entries2[left[i]][1] for i in range(n1)) + tuple(
        lab for _, lab in leftover_entries
    )
    g2 = LabelledGraph(Graph(n2, frozenset(edges)), labels_g2, base)
    witness = EmbeddingWitness(d1, d2, g1, g2, tuple(range(n1)))
    check = verify_witness(witness)
    assert check, f"padding produced a bad witness: {check.reason}"
    return witness


def reduce_almost_bounded(
    d: LabelledGraphicSequence, top_count: int, realization_index: int = 0
) -> AlmostBoundedReduction:
    """Split off the N largest-degree vertices of a deterministic realization.

    Realizes ``d`` (havel_hakimi for realization_index 0; the k-th
    enumerated realization otherwise — a retry knob with no completeness
    claim), names the N largest-degree vertices x_0..x_{N-1} by decreasing
    degree with ties by vertex index, and returns their induced graph, their
    labels, and the residual sequence in which each remaining vertex carries
    (original label, subset of top vertices it is adjacent to) under
    Product(order, PowersetEq(N)).

    Raises:
        TooShort: len(d) < top_count.
    """
    n = len(d)
    if n < top_count:
        raise TooShort(f"{n} entries but {top_count} top vertices requested")
    if top_count < 0:
        raise ValueError("top_count must be non-negative")
    if realization_index == 0:
        g = degseq.havel_hakimi(d.degree_sequence())
    else:
        alts = degseq.enumerate_realizations(d.degree_sequence())
        g = alts[realization_index]  # IndexError surfaces to the caller
    degs = g.degrees()
    top = sorted(range(n), key=lambda v: (-degs[v], v))[:top_count]
    top_set = set(top)
    top_pos = {v: k for k, v in enumerate(top)}
    top_edges = frozenset(
        (min(top_pos[u], top_pos[v]), max(top_pos[u], top_pos[v]))
        for u, v in g.edges
        if u in top_set and v in top_set
    )
    residual_entries = []
    for v in range(n):
        if v in top_set:
            continue
        adj_top = frozenset(k for k, x in enumerate(top) if g.has_edge(v, x))
        residual_entries.append(
            (
                degs[v] - len(adj_top),
                orders.TupleLabel(
                    (d.labels[v], orders.SubsetLabel(adj_top, top_count))
                ),
            )
        )
    residual = LabelledGraphicSequence(
        orders.Product((d.order, orders.PowersetEq(top_count))),
        tuple(residual_entries),
    )
    return AlmostBoundedReduction(
        Graph(top_count, top_edges),
        tuple(d.labels[v] for v in top),
        residual,
    )


def _attach_top(
    top_graph: Graph,
    top_labels: Sequence[orders.Label],
    residual_g: LabelledGraph,
    base: orders.OrderOracle,
) -> LabelledGraph:
    """Rebuild a full labelled graph from a top graph and a residual
    realization whose labels carry (original label, top-adjacency subset)."""
    top_n = top_graph.n
    m = residual_g.graph.n
    edges = set(top_graph.edges)
    labels: list[orders.Label] = list(top_labels)
    for u, v in residual_g.graph.edges:
        edges.add((top_n + u, top_n + v))
    for v in range(m):
        lab = residual_g.labels[v]
        if not isinstance(lab, orders.TupleLabel) or len(lab.items) != 2:
            raise PreconditionViolated("residual labels must be (label, subset) pairs")
        original, subset = lab.items
        if not isinstance(subset, orders.SubsetLabel) or subset.ground != top_n:
            raise PreconditionViolated("residual subset labels must cover the top set")
        for k in subset.members:
            edges.add((k, top_n + v))
        labels.append(original)
    return LabelledGraph(Graph(top_n + m, frozenset(edges)), tuple(labels), base)


def recombine(
    red_i: AlmostBoundedReduction,
    red_j: AlmostBoundedReduction,
    residual_witness: EmbeddingWitness,
    d_i: LabelledGraphicSequence,
    d_j: LabelledGraphicSequence,
) -> EmbeddingWitness:
    """Put the top vertices back: lift a residual containment witness to the
    original sequences.

    Requires identical ordered top graphs, pointwise-dominated top labels,
    and a residual witness for red_i.residual <= red_j.residual. Because
    residual subset labels match under set equality, matched vertices have
    identical top adjacency, so the lifted embedding (identity on top
    vertices, residual phi shifted) is induced; the rebuilt graphs must
    realize d_i and d_j, anything else is an internal error surfaced loudly.

    Raises:
        TopGraphMismatch, LabelNotDominated, OrderMismatch,
        PreconditionViolated: bad inputs.
        ReconstructionDegreeMismatch: rebuilt graph fails to realize its
            sequence (indicates a bug upstream).
    """
    if red_i.top_graph != red_j.top_graph:
        raise TopGraphMismatch("reductions have different ordered top graphs")
    if d_i.order != d_j.order:
        raise OrderMismatch("sequences must share an order descriptor")
    base = d_i.order
    for k, (ti, tj) in enumerate(zip(red_i.top_labels, red_j.top_labels)):
        if not orders.leq(base, ti, tj):
            raise LabelNotDominated(f"top label {k} is not dominated")
    if residual_witness.d1 != red_i.residual or residual_witness.d2 != red_j.residual:
        raise PreconditionViolated("witness does not certify these residuals")
    check = verify_witness(residual_witness)
    if not check:
        raise PreconditionViolated(f"residual witness fails: {check.reason}")
    top_n = red_i.top_graph.n
    h_i = _attach_top(red_i.top_graph, red_i.top_labels, residual_witness.g1, base)
    h_j = _attach_top(red_j.top_graph, red_j.top_labels, residual_witness.g2, base)
    phi = tuple(range(top_n)) + tuple(top_n + x for x in residual_witness.phi)
    if not _realizes(h_i, d_i):
        raise ReconstructionDegreeMismatch("rebuilt g1 does not realize d_i")
    if not _realizes(h_j, d_j):
        raise ReconstructionDegreeMismatch("rebuilt g2 does not realize d_j")
    witness = EmbeddingWitness(d_i, d_j, h_i, h_j, phi)
    check = verify_witness(witness)
    if not check:
        raise ReconstructionDegreeMismatch(f"recombined witness fails: {check.reason}")
    return witness


def good_pair_almost_bounded(
    ds: Sequence[LabelledGraphicSequence],
    top_count: int,
    budget: int = GOOD_PAIR_BUDGET_DEFAULT,
    exact_cap: int = EXACT_CAP_DEFAULT,
    variants: int = 1,
) -> tuple[int, int, EmbeddingWitness] | None:
    """Search a finite list for indices i < j with ds[i] <= ds[j], with witness.

    Every sequence must have at most ``top_count`` entries exceeding
    ``top_count`` (the almost-bounded regime). Each sequence is reduced by
    splitting off its top vertices; sequences are grouped by ordered top
    graph, and within a group pairs with pointwise-dominated top labels are
    tried: the padding fast path on the residuals first, then the exact
    decision when the residual is small enough. A successful residual
    witness is lifted back with ``recombine``.

    The scan runs j ascending then i ascending and returns the earliest
    confirmable pair. ``budget`` caps the number of pair containment
    attempts. ``variants`` > 1 retries the whole scan using alternative
    realizations (where enumerable) — a best-effort knob, no completeness
    claim. None means the search was exhausted honestly: on finite input a
    good pair is not guaranteed to exist.

    Sequences shorter than ``top_count`` cannot be reduced; they are
    bucketed separately and compared directly (padding, then exact).

    Raises:
        PreconditionViolated: some sequence has more than top_count entries
            exceeding top_count.
        OrderMismatch: the sequences do not share an order descriptor.
    """
    ds = list(ds)
    if not ds:
        return None
    base = ds[0].order
    for d in ds:
        if d.order != base:
            raise OrderMismatch("all sequences must share an order descriptor")
        large = sum(1 for deg in d.degrees if deg > top_count)
        if large > top_count:
            raise PreconditionViolated(
                f"{large} entries exceed {top_count} (allowed: {top_count})"
            )
    attempts = 0
    primary: list[AlmostBoundedReduction | None] = []
    for variant in range(max(1, variants)):
        reds: list[AlmostBoundedReduction | None] = []
        for idx, d in enumerate(ds):
            if len(d) < top_count:
                reds.append(None)
                continue
            if variant == 0:
                reds.append(reduce_almost_bounded(d, top_count))
            else:
                try:
                    reds.append(reduce_almost_bounded(d, top_count, variant))
                except (IndexError, CapExceeded):
                    reds.append(primary[idx])
        if variant == 0:
            primary = reds
        elif reds == primary:
            break  # no sequence has another realization to offer
        for j in range(1, len(ds)):
            for i in range(j):
                ri, rj = reds[i], reds[j]
                if ri is None and rj is None:
                    if attempts >= budget:
                        return None
                    attempts += 1
                    w = rao_le_padding(ds[i], ds[j])
                    if w is None and len(ds[j]) <= exact_cap:
                        w = rao_le_exact(ds[i], ds[j], cap=exact_cap)
                    if w is not None:
                        return (i, j, w)
                    continue
                if ri is None or rj is None:
                    continue  # short vs reducible: not comparable here
                if ri.top_graph != rj.top_graph:
                    continue
                if not all(
                    orders.leq(base, ti, tj)
                    for ti, tj in zip(ri.top_labels, rj.top_labels)
                ):
                    continue
                if attempts >= budget:
                    return None
                attempts += 1
                res_w = rao_le_padding(ri.residual, rj.residual)
                if res_w is None and len(rj.residual) <= exact_cap:
                    res_w = rao_le_exact(ri.residual, rj.residual, cap=exact_cap)
                if res_w is not None:
                    witness = recombine(ri, rj, res_w, ds[i], ds[j])
                    return (i, j, witness)
    return None


# ---------------------------------------------------------------------------
# serialization


def sequence_to_json(d: LabelledGraphicSequence) -> dict:
    return {
        "order": orders.order_to_json(d.order),
        "entries": [
            {"d": deg, "label": orders.label_to_json(lab)} for deg, lab in d.entries
        ],
    }


def sequence_from_json(obj: object) -> LabelledGraphicSequence:
    if not isinstance(obj, dict) or set(obj) != {"order", "entries"}:
        raise ValueError('sequence JSON must be {"order": ..., "entries": [...]}')
    order = orders.order_from_json(obj["order"])
    entries = []
    for ent in obj["entries"]:
        if not isinstance(ent, dict) or set(ent) != {"d", "label"}:
            raise ValueError(f"malformed entry {ent!r}")
        entries.append((int(ent["d"]), orders.label_from_json(ent["label"])))
    return LabelledGraphicSequence(order, tuple(entries))


def labelled_graph_to_json(g: LabelledGraph) -> dict:
    return {
        "graph": degseq.graph_to_json(g.graph),
        "labels": [orders.label_to_json(lab) for lab in g.labels],
        "order": orders.order_to_json(g.order),
    }


def labelled_graph_from_json(obj: object) -> LabelledGraph:
    if not isinstance(obj, dict) or set(obj) != {"graph", "labels", "order"}:
        raise ValueError("labelled graph JSON has unexpected shape")
    return LabelledGraph(
        degseq.graph_from_json(obj["graph"]),
        tuple(orders.label_from_json(x) for x in obj["labels"]),
        orders.order_from_json(obj["order"]),
    )


def witness_to_json(w: EmbeddingWitness) -> dict:
    return {
        "d1": sequence_to_json(w.d1),
        "d2": sequence_to_json(w.d2),
        "g1": labelled_graph_to_json(w.g1),
        "g2": labelled_graph_to_json(w.g2),
        "phi": list(w.phi),
    }


def witness_from_json(obj: object) -> EmbeddingWitness:
    if not isinstance(obj, dict) or set(obj) != {"d1", "d2", "g1", "g2", "phi"}:
        raise ValueError("witness JSON has unexpected shape")
    phi = obj["phi"]
    if not isinstance(phi, list) or not all(isinstance(x, int) for x in phi):
        raise ValueError("phi must be a list of vertex indices")
    return EmbeddingWitness(
        sequence_from_json(obj["d1"]),
        sequence_from_json(obj["d2"]),
        labelled_graph_from_json(obj["g1"]),
        labelled_graph_from_json(obj["g2"]),
        tuple(phi),
    )
