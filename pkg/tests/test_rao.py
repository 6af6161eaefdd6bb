"""Containment order: witness verification, exact vs brute force, padding
fast path, reduction, recombination, good-pair search."""

import random

import pytest

import oracles
from raowqo import degseq, orders
from raowqo.degseq import DegreeSequence, Graph, havel_hakimi, induced_subgraph
from raowqo.errors import (
    CapExceeded,
    LabelNotDominated,
    NotGraphic,
    OrderMismatch,
    PreconditionViolated,
    TooShort,
    TopGraphMismatch,
)
from raowqo.rao import (
    EmbeddingWitness,
    LabelledGraph,
    LabelledGraphicSequence,
    good_pair_almost_bounded,
    rao_le_exact,
    rao_le_padding,
    recombine,
    reduce_almost_bounded,
    sequence_from_json,
    sequence_to_json,
    unlabelled,
    verify_witness,
    witness_from_json,
    witness_to_json,
)

TRIANGLE = Graph(3, frozenset({(0, 1), (0, 2), (1, 2)}))
C4 = Graph(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
EDGE = Graph(2, frozenset({(0, 1)}))


def ugraph(g: Graph) -> LabelledGraph:
    return LabelledGraph(g, tuple(orders.Unit() for _ in range(g.n)), orders.UnitOrder())


def identity_witness(d: LabelledGraphicSequence) -> EmbeddingWitness:
    g = LabelledGraph(havel_hakimi(d.degree_sequence()), d.labels, d.order)
    return EmbeddingWitness(d, d, g, g, tuple(range(len(d))))


def random_unlabelled(rng, max_len, max_deg=None) -> LabelledGraphicSequence:
    return unlabelled(oracles.random_graphic_degrees(rng, max_len, max_deg))


# ---------------------------------------------------------------------------
# construction


def test_sequence_construction():
    d = unlabelled([1, 2, 1])
    assert d.degrees == (2, 1, 1)
    with pytest.raises(NotGraphic):
        unlabelled([3, 3, 1, 1])
    with pytest.raises(ValueError):
        unlabelled([-1, 1])
    labelled = LabelledGraphicSequence(
        orders.NatLeq(), ((1, orders.Nat(9)), (1, orders.Nat(1)))
    )
    # ties sorted by label serialization
    assert labelled.labels == (orders.Nat(1), orders.Nat(9))


def test_sequence_json_round_trip():
    d = LabelledGraphicSequence(
        orders.Product((orders.NatLeq(), orders.PowersetEq(2))),
        (
            (2, orders.TupleLabel((orders.Nat(3), orders.SubsetLabel(frozenset({1}), 2)))),
            (1, orders.TupleLabel((orders.Nat(0), orders.SubsetLabel(frozenset(), 2)))),
            (1, orders.TupleLabel((orders.Nat(2), orders.SubsetLabel(frozenset({0, 1}), 2)))),
        ),
    )
    assert sequence_from_json(sequence_to_json(d)) == d
    with pytest.raises(ValueError):
        sequence_from_json({"entries": []})


# ---------------------------------------------------------------------------
# verify_witness


def test_verify_identity_witness():
    for degs in ([2, 2, 2], [1, 1], [], [2, 2, 1, 1]):
        assert verify_witness(identity_witness(unlabelled(degs)))


def test_verify_edge_in_triangle():
    # any 2 triangle vertices induce an edge
    w = EmbeddingWitness(
        unlabelled([1, 1]), unlabelled([2, 2, 2]), ugraph(EDGE), ugraph(TRIANGLE), (1, 2)
    )
    assert verify_witness(w)


def test_verify_rejects_opposite_corners():
    w = EmbeddingWitness(
        unlabelled([1, 1]), unlabelled([2, 2, 2, 2]), ugraph(EDGE), ugraph(C4), (0, 2)
    )
    res = verify_witness(w)
    assert not res and "induced condition" in res.reason


def test_verify_rejects_non_injective_phi():
    w = EmbeddingWitness(
        unlabelled([1, 1]), unlabelled([2, 2, 2]), ugraph(EDGE), ugraph(TRIANGLE), (1, 1)
    )
    res = verify_witness(w)
    assert not res and "not injective" in res.reason


def test_verify_rejects_wrong_realization():
    w = EmbeddingWitness(
        unlabelled([1, 1]), unlabelled([2, 2, 2]), ugraph(EDGE), ugraph(C4), (0, 1)
    )
    res = verify_witness(w)
    assert not res and "realize d2" in res.reason


def test_verify_rejects_undominated_label():
    nat = orders.NatLeq()
    d1 = LabelledGraphicSequence(nat, ((1, orders.Nat(5)), (1, orders.Nat(5))))
    d2 = LabelledGraphicSequence(nat, ((1, orders.Nat(5)), (1, orders.Nat(1))))
    g1 = LabelledGraph(EDGE, (orders.Nat(5), orders.Nat(5)), nat)
    g2 = LabelledGraph(EDGE, (orders.Nat(1), orders.Nat(5)), nat)
    res = verify_witness(EmbeddingWitness(d1, d2, g1, g2, (0, 1)))
    assert not res and "not dominated" in res.reason


def test_verify_rejects_order_mismatch():
    w = EmbeddingWitness(
        unlabelled([1, 1]),
        LabelledGraphicSequence(orders.NatLeq(), ((1, orders.Nat(0)), (1, orders.Nat(0)))),
        ugraph(EDGE),
        LabelledGraph(EDGE, (orders.Nat(0), orders.Nat(0)), orders.NatLeq()),
        (0, 1),
    )
    res = verify_witness(w)
    assert not res and "order mismatch" in res.reason


# ---------------------------------------------------------------------------
# exact decision


def test_exact_examples():
    w = rao_le_exact(unlabelled([1, 1]), unlabelled([2, 2, 2]))
    assert w is not None and verify_witness(w)
    assert rao_le_exact(unlabelled([2, 2, 2]), unlabelled([2, 2, 2, 2])) is None
    for degs in ([2, 2, 2], [3, 2, 2, 2, 1], []):
        w = rao_le_exact(unlabelled(degs), unlabelled(degs))
        assert w is not None and verify_witness(w)


def test_exact_labelled_blocking():
    nat = orders.NatLeq()
    d1 = LabelledGraphicSequence(nat, ((1, orders.Nat(5)), (1, orders.Nat(5))))
    d2 = LabelledGraphicSequence(nat, ((1, orders.Nat(1)), (1, orders.Nat(9))))
    assert rao_le_exact(d1, d2) is None
    d2_ok = LabelledGraphicSequence(nat, ((1, orders.Nat(5)), (1, orders.Nat(9))))
    w = rao_le_exact(d1, d2_ok)
    assert w is not None and verify_witness(w)


def test_exact_cap_and_order_mismatch():
    with pytest.raises(CapExceeded):
        rao_le_exact(unlabelled([1, 1]), unlabelled([1] * 10))
    with pytest.raises(OrderMismatch):
        rao_le_exact(
            unlabelled([1, 1]),
            LabelledGraphicSequence(orders.NatLeq(), ((1, orders.Nat(0)), (1, orders.Nat(0)))),
        )


def test_exact_agrees_with_double_bruteforce():
    rng = random.Random(0xA01)
    checked = 0
    while checked < 120:
        d2 = oracles.random_graphic_degrees(rng, 5)
        n1 = rng.randint(0, len(d2))
        d1 = oracles.random_graphic_degrees(rng, n1)
        got = rao_le_exact(unlabelled(d1), unlabelled(d2))
        want = oracles.contained_double_bruteforce(d1, d2)
        assert (got is not None) == want, (d1, d2)
        if got is not None:
            assert verify_witness(got)
        checked += 1
    # a few length-6 hosts
    for d2, d1 in [((2, 2, 2, 2, 2, 2), (2, 2, 2)), ((3, 3, 2, 2, 1, 1), (1, 1)),
                   ((2, 2, 1, 1, 1, 1), (1, 1, 1, 1))]:
        got = rao_le_exact(unlabelled(d1), unlabelled(d2))
        assert (got is not None) == oracles.contained_double_bruteforce(d1, d2)


def test_exact_necessary_filters():
    rng = random.Random(0xA02)
    for _ in range(100):
        d1 = random_unlabelled(rng, 5)
        d2 = random_unlabelled(rng, 5)
        w = rao_le_exact(d1, d2)
        if w is not None:
            assert len(d1) <= len(d2)
            assert sum(d1.degrees) <= sum(d2.degrees)


def test_exact_transitive_on_witnessed_chains():
    rng = random.Random(0xA03)
    for _ in range(60):
        d3 = random_unlabelled(rng, 5)
        g3 = havel_hakimi(d3.degree_sequence())
        keep2 = [v for v in range(g3.n) if rng.random() < 0.7]
        g2, _ = induced_subgraph(g3, keep2)
        d2 = unlabelled(g2.degrees())
        keep1 = [v for v in range(g2.n) if rng.random() < 0.7]
        g1, _ = induced_subgraph(g2, keep1)
        d1 = unlabelled(g1.degrees())
        assert rao_le_exact(d1, d2) is not None
        assert rao_le_exact(d2, d3) is not None
        w = rao_le_exact(d1, d3)
        assert w is not None and verify_witness(w)


# ---------------------------------------------------------------------------
# padding fast path


def test_padding_examples():
    w = rao_le_padding(unlabelled([1, 1]), unlabelled([1, 1, 1, 1]))
    assert w is not None and verify_witness(w)
    # the witness is two disjoint edges with d1 embedded as the first
    assert w.g2.graph.edges == frozenset({(0, 1), (2, 3)})
    assert w.phi == (0, 1)
    assert rao_le_exact(unlabelled([1, 1]), unlabelled([1, 1, 1, 1])) is not None
    # leftover (2) is a single vertex needing degree 2: not graphic
    assert rao_le_padding(unlabelled([2, 2, 2]), unlabelled([2, 2, 2, 2])) is None
    assert rao_le_exact(unlabelled([2, 2, 2]), unlabelled([2, 2, 2, 2])) is None
    # empty d1 embeds in anything
    w = rao_le_padding(unlabelled([]), unlabelled([2, 2, 1, 1, 0]))
    assert w is not None and verify_witness(w) and w.phi == ()


def test_padding_respects_labels():
    nat = orders.NatLeq()
    d1 = LabelledGraphicSequence(nat, ((1, orders.Nat(5)), (1, orders.Nat(5))))
    # only one host entry dominates Nat(5): no perfect matching
    blocked = LabelledGraphicSequence(
        nat, ((1, orders.Nat(1)), (1, orders.Nat(9)), (1, orders.Nat(1)), (1, orders.Nat(1)))
    )
    open_ = LabelledGraphicSequence(
        nat, ((1, orders.Nat(7)), (1, orders.Nat(9)), (1, orders.Nat(0)), (1, orders.Nat(0)))
    )
    assert rao_le_padding(d1, blocked) is None
    w = rao_le_padding(d1, open_)
    assert w is not None and verify_witness(w)


def test_padding_implies_exact():
    rng = random.Random(0xA04)
    hits = 0
    for _ in range(200):
        d2 = random_unlabelled(rng, 6)
        d1 = random_unlabelled(rng, len(d2))
        w = rao_le_padding(d1, d2)
        if w is not None:
            assert verify_witness(w)
            assert rao_le_exact(d1, d2) is not None
            hits += 1
    assert hits > 10  # the sample must actually exercise the fast path


def test_padding_bounded_tail_always_succeeds():
    # degrees <= N and a graphic bounded tail of length >= N^2 guarantee a witness
    rng = random.Random(0xA05)
    for top in (2, 3):
        for _ in range(15):
            d1 = unlabelled(oracles.random_graphic_degrees(rng, 6, top))
            tail = _bounded_even_tail(rng, top, top * top + rng.randint(0, 4))
            d2 = unlabelled(tuple(d1.degrees) + tail)
            w = rao_le_padding(d1, d2)
            assert w is not None and verify_witness(w)


def _bounded_even_tail(rng, max_deg, length):
    while True:
        tail = tuple(rng.randint(1, max_deg) for _ in range(length))
        if sum(tail) % 2 == 0:
            return tail


# ---------------------------------------------------------------------------
# reduction and recombination


def test_reduce_triangle_one_top():
    red = reduce_almost_bounded(unlabelled([2, 2, 2]), 1)
    assert red.top_graph == Graph(1, frozenset())
    assert red.top_labels == (orders.Unit(),)
    sub = orders.SubsetLabel(frozenset({0}), 1)
    assert red.residual.entries == (
        (1, orders.TupleLabel((orders.Unit(), sub))),
        (1, orders.TupleLabel((orders.Unit(), sub))),
    )


def test_reduce_edge_and_isolated():
    assert reduce_almost_bounded(unlabelled([1, 1]), 2).residual.entries == ()
    red = reduce_almost_bounded(unlabelled([0, 0]), 1)
    assert red.residual.entries == (
        (0, orders.TupleLabel((orders.Unit(), orders.SubsetLabel(frozenset(), 1)))),
    )
    with pytest.raises(TooShort):
        reduce_almost_bounded(unlabelled([1, 1]), 3)


def test_reduce_round_trip_realizes_original():
    rng = random.Random(0xA06)
    for _ in range(60):
        d = random_unlabelled(rng, 8)
        if not len(d):
            continue
        top = rng.randint(0, len(d))
        red = reduce_almost_bounded(d, top)
        w = recombine(red, red, identity_witness(red.residual), d, d)
        assert verify_witness(w)
        # degree accounting identity: the rebuilt graph realizes the original
        assert sorted(w.g1.graph.degrees(), reverse=True) == list(d.degrees)


def test_recombine_rejects_mismatched_top_graphs():
    red_a = reduce_almost_bounded(unlabelled([2, 2, 2]), 2)  # top pair adjacent
    red_b = reduce_almost_bounded(unlabelled([0, 0]), 2)  # top pair not adjacent
    assert red_a.top_graph != red_b.top_graph
    with pytest.raises(TopGraphMismatch):
        recombine(red_a, red_b, identity_witness(red_b.residual),
                  unlabelled([2, 2, 2]), unlabelled([0, 0]))


def test_recombine_rejects_undominated_top_labels():
    nat = orders.NatLeq()
    hi = LabelledGraphicSequence(nat, ((1, orders.Nat(9)), (1, orders.Nat(0))))
    lo = LabelledGraphicSequence(nat, ((1, orders.Nat(0)), (1, orders.Nat(0))))
    red_hi = reduce_almost_bounded(hi, 2)
    red_lo = reduce_almost_bounded(lo, 2)
    assert red_hi.top_graph == red_lo.top_graph
    with pytest.raises(LabelNotDominated):
        recombine(red_hi, red_lo, identity_witness(red_lo.residual), hi, lo)


def test_recombine_rejects_foreign_witness():
    d = unlabelled([2, 2, 2])
    red = reduce_almost_bounded(d, 1)
    with pytest.raises(PreconditionViolated):
        recombine(red, red, identity_witness(unlabelled([1, 1])), d, d)


def test_recombine_lifts_residual_containment():
    # triangle inside a 5-cycle-degree sequence, through a shared single top vertex
    d_i, d_j = unlabelled([2, 2, 2]), unlabelled([2, 2, 2, 2, 2])
    red_i = reduce_almost_bounded(d_i, 1)
    red_j = reduce_almost_bounded(d_j, 1)
    assert red_i.top_graph == red_j.top_graph
    res_w = rao_le_padding(red_i.residual, red_j.residual)
    if res_w is None:
        res_w = rao_le_exact(red_i.residual, red_j.residual)
    if res_w is not None:
        w = recombine(red_i, red_j, res_w, d_i, d_j)
        assert verify_witness(w)
        assert rao_le_exact(d_i, d_j) is not None


# ---------------------------------------------------------------------------
# good pair


def test_good_pair_duplicate():
    d = unlabelled([2, 2, 2])
    got = good_pair_almost_bounded([d, d], 3)
    assert got is not None
    i, j, w = got
    assert (i, j) == (0, 1) and verify_witness(w)


def test_good_pair_triangle_vs_c4_not_found():
    got = good_pair_almost_bounded([unlabelled([2, 2, 2]), unlabelled([2, 2, 2, 2])], 3)
    assert got is None
    assert rao_le_exact(unlabelled([2, 2, 2]), unlabelled([2, 2, 2, 2])) is None


def test_good_pair_precondition():
    with pytest.raises(PreconditionViolated):
        good_pair_almost_bounded([unlabelled([3, 3, 3, 3])], 2)


def test_good_pair_earliest_pair_and_witness():
    rng = random.Random(0xA07)
    seqs = []
    while len(seqs) < 40:
        degs = oracles.random_graphic_degrees(rng, 12, 3)
        if len(degs) >= 4:
            seqs.append(unlabelled(degs))
    got = good_pair_almost_bounded(seqs, 3)
    assert got is not None
    i, j, w = got
    assert i < j
    assert verify_witness(w)
    assert w.d1 == seqs[i] and w.d2 == seqs[j]
    # deterministic: the same scan reports the same earliest pair
    again = good_pair_almost_bounded(seqs, 3)
    assert again is not None and (again[0], again[1]) == (i, j)


def test_good_pair_short_sequences_compare_directly():
    d_small, d_big = unlabelled([1, 1]), unlabelled([1, 1])
    got = good_pair_almost_bounded([d_small, d_big], 3)
    assert got is not None and (got[0], got[1]) == (0, 1)
    assert verify_witness(got[2])


def test_witness_json_round_trip():
    w = rao_le_exact(unlabelled([1, 1]), unlabelled([2, 2, 2]))
    obj = witness_to_json(w)
    back = witness_from_json(obj)
    assert back == w
    assert verify_witness(back)
    with pytest.raises(ValueError):
        witness_from_json({"d1": obj["d1"]})
