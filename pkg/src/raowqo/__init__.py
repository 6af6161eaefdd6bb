"""Containment order on labelled graphic degree sequences.

Graphicness oracles, deterministic and exhaustive realization builders,
decidable label orders with Higman subsequence embedding, and the Rao
containment order with machine-checkable embedding witnesses.
"""

from raowqo.degseq import (
    DegreeSequence,
    Graph,
    degree_sequence_of,
    enumerate_realizations,
    graphic_by_size,
    havel_hakimi,
    induced_subgraph,
    is_graphic,
)
from raowqo.orders import (
    Fin,
    FiniteEq,
    HigmanSeq,
    Nat,
    NatLeq,
    PowersetEq,
    Product,
    SeqLabel,
    SubsetLabel,
    TupleLabel,
    Unit,
    UnitOrder,
    find_good_pair,
    higman_le,
    leq,
)
from raowqo.rao import (
    AlmostBoundedReduction,
    EmbeddingWitness,
    LabelledGraph,
    LabelledGraphicSequence,
    good_pair_almost_bounded,
    rao_le_exact,
    rao_le_padding,
    recombine,
    reduce_almost_bounded,
    unlabelled,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AlmostBoundedReduction",
    "DegreeSequence",
    "EmbeddingWitness",
    "Fin",
    "FiniteEq",
    "Graph",
    "HigmanSeq",
    "LabelledGraph",
    "LabelledGraphicSequence",
    "Nat",
    "NatLeq",
    "PowersetEq",
    "Product",
    "SeqLabel",
    "SubsetLabel",
    "TupleLabel",
    "Unit",
    "UnitOrder",
    "degree_sequence_of",
    "enumerate_realizations",
    "find_good_pair",
    "good_pair_almost_bounded",
    "graphic_by_size",
    "havel_hakimi",
    "higman_le",
    "induced_subgraph",
    "is_graphic",
    "leq",
    "rao_le_exact",
    "rao_le_padding",
    "recombine",
    "reduce_almost_bounded",
    "unlabelled",
    "verify_witness",
]
