"""Pure-Python backtracking enumeration of entry-indexed realizations.

Hot path of the whole package; a compiled twin lives in ``_enum_cy.pyx``.
Keep the two in lockstep: identical search order, identical output.

The search assigns, vertex by vertex, the set of higher-indexed neighbours.
After row ``i`` is fixed, the remaining problem is exactly "realize the
residual degrees on vertices i+1..n-1", so an Erdős–Gallai check on the
residual prunes every dead subtree: each surviving node extends to at least
one realization, making the enumeration output-sensitive.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence


def _residual_graphic(rem: list[int], lo: int) -> bool:
    # Erdős–Gallai on rem[lo:]; zeros are harmless to the inequalities.
    deg = sorted(rem[lo:], reverse=True)
    m = len(deg)
    if m == 0:
        return True
    if sum(deg) % 2:
        return False
    if deg[0] > m - 1:
        return False
    prefix = 0
    for k in range(1, m + 1):
        prefix += deg[k - 1]
        tail = sum(d if d < k else k for d in deg[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def realizations(
    degrees: Sequence[int], limit: int | None = None
) -> list[tuple[tuple[int, int], ...]]:
    """All simple graphs on vertices 0..n-1 with deg(i) == degrees[i].

    Each graph is a tuple of (u, v) edges with u < v, sorted; graphs appear
    in depth-first order of the row-by-row search. ``limit`` stops the
    search once that many graphs have been collected.
    """
    n = len(degrees)
    degs = [int(d) for d in degrees]
    if any(d < 0 for d in degs):
        raise ValueError("degrees must be non-negative")
    out: list[tuple[tuple[int, int], ...]] = []
    if limit is not None and limit <= 0:
        return out
    if any(d > n - 1 for d in degs) or sum(degs) % 2:
        return out
    rem = degs[:]
    if not _residual_graphic(rem, 0):
        return out
    rows = [0] * n  # bitmask of higher-indexed neighbours per vertex

    def row(i: int) -> bool:
        if i == n:
            edges = []
            for u in range(n):
                mask = rows[u]
                while mask:
                    low = mask & -mask
                    edges.append((u, low.bit_length() - 1))
                    mask ^= low
            out.append(tuple(edges))
            return limit is not None and len(out) >= limit
        need = rem[i]
        if need == 0:
            rows[i] = 0
            return row(i + 1)
        cands = [j for j in range(i + 1, n) if rem[j] > 0]
        if need > len(cands):
            return False
        for pick in combinations(cands, need):
            for j in pick:
                rem[j] -= 1
            if _residual_graphic(rem, i + 1):
                mask = 0
                for j in pick:
                    mask |= 1 << j
                rows[i] = mask
                if row(i + 1):
                    for j in pick:
                        rem[j] += 1
                    return True
            for j in pick:
                rem[j] += 1
        return False

    row(0)
    return out
