"""Decidable label orders and the Higman subsequence-embedding decision.

The label domain is a closed union — exactly the shapes the containment
machinery needs (unit, naturals, finite alphabets, tuples, subsets of a
fixed ground set, finite sequences). Every comparison is decidable,
deterministic, and serializable; no user-supplied orders.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence, Union

from raowqo.errors import TypeMismatch

# ---------------------------------------------------------------------------
# labels


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class Nat:
    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("Nat labels are non-negative")


@dataclass(frozen=True)
class Fin:
    """Element of a finite alphabet {1, ..., modulus}."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if not 1 <= self.value <= self.modulus:
            raise ValueError(f"Fin value {self.value} outside [1, {self.modulus}]")


@dataclass(frozen=True)
class TupleLabel:
    items: tuple["Label", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))


@dataclass(frozen=True)
class SubsetLabel:
    """Subset of a ground set {0, ..., ground-1}, as a frozenset of indices."""

    members: frozenset[int]
    ground: int

    def __post_init__(self) -> None:
        members = frozenset(int(m) for m in self.members)
        if any(not 0 <= m < self.ground for m in members):
            raise ValueError("subset member outside the ground set")
        object.__setattr__(self, "members", members)


@dataclass(frozen=True)
class SeqLabel:
    items: tuple["Label", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))


Label = Union[Unit, Nat, Fin, TupleLabel, SubsetLabel, SeqLabel]

# ---------------------------------------------------------------------------
# order descriptors


@dataclass(frozen=True)
class UnitOrder:
    pass


@dataclass(frozen=True)
class NatLeq:
    pass


@dataclass(frozen=True)
class FiniteEq:
    """Finite alphabet {1..size} under equality."""

    size: int


@dataclass(frozen=True)
class Product:
    """Cartesian product: componentwise comparison, one factor per slot."""

    factors: tuple["OrderOracle", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))


@dataclass(frozen=True)
class PowersetEq:
    """Subsets of a fixed ground set under set equality."""

    ground: int


@dataclass(frozen=True)
class HigmanSeq:
    """Finite sequences over a base order, under subsequence embedding."""

    base: "OrderOracle"


OrderOracle = Union[UnitOrder, NatLeq, FiniteEq, Product, PowersetEq, HigmanSeq]


def check_label(order: OrderOracle, label: Label) -> None:
    """Raise TypeMismatch unless ``label`` is well-typed for ``order``."""
    if isinstance(order, UnitOrder):
        if not isinstance(label, Unit):
            raise TypeMismatch(f"expected Unit label, got {type(label).__name__}")
    elif isinstance(order, NatLeq):
        if not isinstance(label, Nat):
            raise TypeMismatch(f"expected Nat label, got {type(label).__name__}")
    elif isinstance(order, FiniteEq):
        if not isinstance(label, Fin) or label.modulus != order.size:
            raise TypeMismatch(f"expected Fin label over [{order.size}]")
    elif isinstance(order, Product):
        if not isinstance(label, TupleLabel) or len(label.items) != len(order.factors):
            raise TypeMismatch(f"expected {len(order.factors)}-tuple label")
        for factor, item in zip(order.factors, label.items):
            check_label(factor, item)
    elif isinstance(order, PowersetEq):
        if not isinstance(label, SubsetLabel) or label.ground != order.ground:
            raise TypeMismatch(f"expected subset label over ground set of {order.ground}")
    elif isinstance(order, HigmanSeq):
        if not isinstance(label, SeqLabel):
            raise TypeMismatch(f"expected Seq label, got {type(label).__name__}")
        for item in label.items:
            check_label(order.base, item)
    else:
        raise TypeMismatch(f"unknown order descriptor {order!r}")


def leq(order: OrderOracle, a: Label, b: Label) -> bool:
    """Decide a <= b in the denoted order. Reflexive and transitive."""
    check_label(order, a)
    check_label(order, b)
    if isinstance(order, UnitOrder):
        return True
    if isinstance(order, NatLeq):
        return a.value <= b.value
    if isinstance(order, FiniteEq):
        return a.value == b.value
    if isinstance(order, Product):
        return all(
            leq(f, x, y) for f, x, y in zip(order.factors, a.items, b.items)
        )
    if isinstance(order, PowersetEq):
        return a.members == b.members
    if isinstance(order, HigmanSeq):
        return higman_le(a.items, b.items, order.base) is not None
    raise TypeMismatch(f"unknown order descriptor {order!r}")


def higman_le(
    a: Sequence[Label], b: Sequence[Label], base: OrderOracle
) -> tuple[int, ...] | None:
    """Subsequence embedding of ``a`` into ``b`` with elementwise dominance.

    Returns strictly increasing indices i_0 < ... < i_{n-1} into ``b`` with
    base-leq(a[k], b[i_k]) for all k, or None when no embedding exists.
    Greedy leftmost matching: each a[k] takes the earliest usable position;
    complete by the standard exchange argument, since a position's
    compatibility does not depend on the other matches.
    """
    for lab in a:
        check_label(base, lab)
    for lab in b:
        check_label(base, lab)
    picks: list[int] = []
    j = 0
    for lab in a:
        while j < len(b) and not leq(base, lab, b[j]):
            j += 1
        if j >= len(b):
            return None
        picks.append(j)
        j += 1
    return tuple(picks)


def find_good_pair(items: Sequence, le: Callable | OrderOracle) -> tuple[int, int] | None:
    """Earliest (i, j) with i < j and items[i] <= items[j], or None.

    Scans j ascending, then i ascending, so the reported pair has the
    smallest j and, among those, the smallest i. ``le`` is either a binary
    predicate or an order descriptor applied to label items.
    """
    if not callable(le):
        order = le
        le = lambda x, y: leq(order, x, y)  # noqa: E731
    for j in range(1, len(items)):
        for i in range(j):
            if le(items[i], items[j]):
                return (i, j)
    return None


# ---------------------------------------------------------------------------
# serialization: {"t": tag, ...}; order descriptors mirror the label tags


def label_to_json(label: Label) -> dict:
    if isinstance(label, Unit):
        return {"t": "unit"}
    if isinstance(label, Nat):
        return {"t": "nat", "v": label.value}
    if isinstance(label, Fin):
        return {"t": "fin", "v": label.value, "n": label.modulus}
    if isinstance(label, TupleLabel):
        return {"t": "tuple", "v": [label_to_json(x) for x in label.items]}
    if isinstance(label, SubsetLabel):
        return {"t": "subset", "v": sorted(label.members), "n": label.ground}
    if isinstance(label, SeqLabel):
        return {"t": "seq", "v": [label_to_json(x) for x in label.items]}
    raise TypeMismatch(f"unknown label {label!r}")


def label_from_json(obj: object) -> Label:
    if not isinstance(obj, dict) or "t" not in obj:
        raise ValueError(f"label JSON must be a tagged object, got {obj!r}")
    tag = obj["t"]
    try:
        if tag == "unit":
            return Unit()
        if tag == "nat":
            return Nat(int(obj["v"]))
        if tag == "fin":
            return Fin(int(obj["v"]), int(obj["n"]))
        if tag == "tuple":
            return TupleLabel(tuple(label_from_json(x) for x in obj["v"]))
        if tag == "subset":
            return SubsetLabel(frozenset(int(x) for x in obj["v"]), int(obj["n"]))
        if tag == "seq":
            return SeqLabel(tuple(label_from_json(x) for x in obj["v"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed label JSON {obj!r}: {exc}") from None
    raise ValueError(f"unknown label tag {tag!r}")


def order_to_json(order: OrderOracle) -> dict:
    if isinstance(order, UnitOrder):
        return {"t": "unit"}
    if isinstance(order, NatLeq):
        return {"t": "nat"}
    if isinstance(order, FiniteEq):
        return {"t": "fin", "n": order.size}
    if isinstance(order, Product):
        return {"t": "tuple", "v": [order_to_json(f) for f in order.factors]}
    if isinstance(order, PowersetEq):
        return {"t": "subset", "n": order.ground}
    if isinstance(order, HigmanSeq):
        return {"t": "seq", "v": order_to_json(order.base)}
    raise TypeMismatch(f"unknown order descriptor {order!r}")


def order_from_json(obj: object) -> OrderOracle:
    if not isinstance(obj, dict) or "t" not in obj:
        raise ValueError(f"order JSON must be a tagged object, got {obj!r}")
    tag = obj["t"]
    try:
        if tag == "unit":
            return UnitOrder()
        if tag == "nat":
            return NatLeq()
        if tag == "fin":
            return FiniteEq(int(obj["n"]))
        if tag == "tuple":
            return Product(tuple(order_from_json(x) for x in obj["v"]))
        if tag == "subset":
            return PowersetEq(int(obj["n"]))
        if tag == "seq":
            return HigmanSeq(order_from_json(obj["v"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed order JSON {obj!r}: {exc}") from None
    raise ValueError(f"unknown order tag {tag!r}")


def label_key(label: Label) -> str:
    """Canonical serialization, used as a deterministic sort key."""
    return json.dumps(label_to_json(label), sort_keys=True, separators=(",", ":"))
