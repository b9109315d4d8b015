"""Deliberately naive cross-checks for the fast counters.

These reimplementations share no traversal or arithmetic code with the
primary paths: cycle counting walks raw vertex sequences and divides
out the symmetry, path counting is a literal triple loop, and the
moment-matrix check is the closed-form product of differences. They
exist to disagree loudly, not to be fast.
"""

from __future__ import annotations

from girthforge.errors import SizeLimitError
from girthforge.gf import Field
from girthforge.graph import BiGraph

NAIVE_VERTEX_CAP = 100
NAIVE_LEN_CAP = 10


def naive_cycle_count(g: BiGraph, length: int) -> int:
    """Count simple cycles by enumerating every closed distinct-vertex
    sequence of the given length and dividing by the 2*length symmetries."""
    n = g.nP + g.nL
    if n > NAIVE_VERTEX_CAP:
        raise SizeLimitError(f"{n} vertices exceeds naive cap {NAIVE_VERTEX_CAP}")
    if length > NAIVE_LEN_CAP:
        raise SizeLimitError(f"length {length} exceeds naive cap {NAIVE_LEN_CAP}")
    if length < 3:
        return 0
    nbrs: dict[int, set[int]] = {v: set() for v in range(n)}
    for p in range(g.nP):
        for l in g.adjP[p]:
            nbrs[p].add(l)
            nbrs[l].add(p)

    total = 0

    def extend(seq: list[int], used: set[int]) -> None:
        nonlocal total
        if len(seq) == length:
            if seq[0] in nbrs[seq[-1]]:
                total += 1
            return
        for w in nbrs[seq[-1]]:
            if w not in used:
                extend(seq + [w], used | {w})

    for v in range(n):
        extend([v], {v})
    assert total % (2 * length) == 0
    return total // (2 * length)


def naive_l4_paths(g: BiGraph, p: int, p2: int) -> int:
    """Length-4 paths between two P vertices by literal chain enumeration."""
    if p == p2:
        return 0
    count = 0
    for l1 in g.adjP[p]:
        for mid in g.adjL[l1 - g.nP]:
            if mid == p or mid == p2:
                continue
            for l2 in g.adjP[mid]:
                if l2 == l1:
                    continue
                if p2 in g.adjL[l2 - g.nP]:
                    count += 1
    return count


def vandermonde_det_formula(
    field: Field, zs: tuple[int, ...], k: int | None = None
) -> int:
    """Product of pairwise differences of zs in GF(q).

    This is the determinant of the square moment matrix on len(zs)
    nodes; it is nonzero exactly when the nodes are distinct, which is
    what makes the full-rank verdict of the elimination path checkable
    without elimination. If k is given, len(zs) must equal it.
    """
    zs = tuple(zs)
    if k is not None and len(zs) != k:
        raise ValueError(f"expected {k} nodes, got {len(zs)}")
    det = 1
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            det = field.mul(det, field.sub(zs[j], zs[i]))
    return det
