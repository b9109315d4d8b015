"""The bipartite point-line incidence graph and its on-disk format.

P-side vertices are the q^k points of GF(q)^k, numbered base-q by their
coordinates. L-side vertices are the q^k canonical moment lines,
numbered by (direction, base) and offset by nP into a shared ID space,
so any int >= nP names a line. Adjacency is kept sorted on both sides,
which makes traversals cheap from either side and every exported
artifact byte-reproducible.

Edge-list file format ``girthforge-v1``::

    girthforge-v1 p=<p> m=<m> k=<k> nP=<nP> nL=<nL> e=<E>
    <P-id> <L-global-id>

one edge per line, ascending lexicographic, LF only, trailing newline.
A bare variant drops the header for third-party tools.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from girthforge.errors import SizeLimitError
from girthforge.gf import Field
from girthforge.moment import MomentLine, Point, enumerate_lines, points_on

FORMAT_V1 = "girthforge-v1"


@dataclass(frozen=True)
class BiGraph:
    """Immutable bipartite graph with sorted dual adjacency.

    adjP[p] holds global L ids (>= nP); adjL[l] holds P ids. meta is
    (p, m, k) for built incidence graphs and None for ad-hoc fixtures.
    """

    nP: int
    nL: int
    adjP: tuple[tuple[int, ...], ...]
    adjL: tuple[tuple[int, ...], ...]
    meta: tuple[int, int, int] | None = None

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjP)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjP[v] if v < self.nP else self.adjL[v - self.nP]

    def edges(self) -> Iterator[tuple[int, int]]:
        """(P-id, L-global-id) pairs in ascending lexicographic order."""
        for p in range(self.nP):
            for l in self.adjP[p]:
                yield p, l


@dataclass(frozen=True)
class GraphStats:
    nP: int
    nL: int
    edges: int
    min_deg: int
    max_deg: int
    is_regular: bool


def point_id(field: Field, pt: Point) -> int:
    v = 0
    for c in reversed(pt):
        v = v * field.q + c
    return v


def id_point(field: Field, k: int, pid: int) -> Point:
    q = field.q
    digits = []
    for _ in range(k):
        digits.append(pid % q)
        pid //= q
    return tuple(digits)


def line_id(field: Field, line: MomentLine) -> int:
    """Local L id in [0, q^k); the global vertex id adds nP = q^k."""
    if line.base[0] != 0:
        raise ValueError(f"non-canonical line base {line.base}")
    q = field.q
    v = 0
    for c in reversed(line.base[1:]):
        v = v * q + c
    return line.z * q ** (len(line.base) - 1) + v


def id_line(field: Field, k: int, lid: int) -> MomentLine:
    q = field.q
    z, rest = divmod(lid, q ** (k - 1))
    digits = []
    for _ in range(k - 1):
        digits.append(rest % q)
        rest //= q
    return MomentLine(z, (0, *digits))


def build(field: Field, k: int) -> BiGraph:
    """Assemble the incidence graph between GF(q)^k and its moment lines."""
    q = field.q
    n = q**k
    if n > 1 << 22:
        raise SizeLimitError(f"q^k = {n} exceeds build cap {1 << 22}")
    adj_p: list[list[int]] = [[] for _ in range(n)]
    adj_l: list[tuple[int, ...]] = []
    for lid, line in enumerate(enumerate_lines(field, k)):
        pids = sorted(point_id(field, pt) for pt in points_on(field, line))
        adj_l.append(tuple(pids))
        for pid in pids:
            adj_p[pid].append(n + lid)
    # lids were visited in ascending order, so each adj_p row is sorted.
    return BiGraph(
        nP=n,
        nL=n,
        adjP=tuple(tuple(row) for row in adj_p),
        adjL=tuple(adj_l),
        meta=(field.p, field.m, k),
    )


def from_edges(
    nP: int,
    nL: int,
    pairs: Iterable[tuple[int, int]],
    meta: tuple[int, int, int] | None = None,
) -> BiGraph:
    """Build a BiGraph from (P-id, local L-id) pairs; duplicates collapse."""
    adj_p: list[set[int]] = [set() for _ in range(nP)]
    adj_l: list[set[int]] = [set() for _ in range(nL)]
    for p, l in pairs:
        if not (0 <= p < nP and 0 <= l < nL):
            raise ValueError(f"edge ({p}, {l}) out of range for {nP}x{nL}")
        adj_p[p].add(nP + l)
        adj_l[l].add(p)
    return BiGraph(
        nP=nP,
        nL=nL,
        adjP=tuple(tuple(sorted(s)) for s in adj_p),
        adjL=tuple(tuple(sorted(s)) for s in adj_l),
        meta=meta,
    )


def stats(g: BiGraph) -> GraphStats:
    degs = [len(a) for a in g.adjP] + [len(a) for a in g.adjL]
    lo = min(degs) if degs else 0
    hi = max(degs) if degs else 0
    return GraphStats(
        nP=g.nP,
        nL=g.nL,
        edges=g.edge_count(),
        min_deg=lo,
        max_deg=hi,
        is_regular=lo == hi,
    )


def validate_bigraph(g: BiGraph) -> BiGraph:
    """Check mirror consistency, sortedness and id ranges; raise on defect."""
    for p, row in enumerate(g.adjP):
        if list(row) != sorted(set(row)):
            raise ValueError(f"adjP[{p}] not strictly sorted")
        for l in row:
            if not g.nP <= l < g.nP + g.nL:
                raise ValueError(f"adjP[{p}] has non-L id {l}")
            if p not in g.adjL[l - g.nP]:
                raise ValueError(f"edge ({p}, {l}) missing from adjL")
    for l, row in enumerate(g.adjL):
        if list(row) != sorted(set(row)):
            raise ValueError(f"adjL[{l}] not strictly sorted")
        for p in row:
            if not 0 <= p < g.nP:
                raise ValueError(f"adjL[{l}] has non-P id {p}")
            if g.nP + l not in g.adjP[p]:
                raise ValueError(f"edge ({p}, {g.nP + l}) missing from adjP")
    return g


def to_text(g: BiGraph, fmt: str = "v1") -> str:
    if fmt not in ("v1", "bare"):
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    if fmt == "v1":
        if g.meta is None:
            raise ValueError("v1 export needs (p, m, k) metadata; use bare")
        p, m, k = g.meta
        lines.append(
            f"{FORMAT_V1} p={p} m={m} k={k} nP={g.nP} nL={g.nL} e={g.edge_count()}"
        )
    lines.extend(f"{p} {l}" for p, l in g.edges())
    return "\n".join(lines) + "\n"


def export(g: BiGraph, sink: IO[str], fmt: str = "v1") -> None:
    """Write the edge list to an open text sink; I/O errors propagate."""
    sink.write(to_text(g, fmt))


def parse(text: str) -> BiGraph:
    """Re-import a v1 export; the result round-trips through to_text."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty input")
    head = lines[0].split()
    if not head or head[0] != FORMAT_V1:
        raise ValueError(f"not a {FORMAT_V1} file")
    kv = {}
    for part in head[1:]:
        key, _, val = part.partition("=")
        kv[key] = int(val)
    nP, nL, e = kv["nP"], kv["nL"], kv["e"]
    pairs = []
    for ln in lines[1:]:
        if not ln:
            continue
        ps, ls = ln.split()
        pairs.append((int(ps), int(ls) - nP))
    if len(pairs) != e:
        raise ValueError(f"header promises {e} edges, found {len(pairs)}")
    return from_edges(nP, nL, pairs, meta=(kv["p"], kv["m"], kv["k"]))
