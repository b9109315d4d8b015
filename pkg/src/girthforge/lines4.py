"""General lines in GF(q)^4 and quadrilateral-free families of them.

A line {x + y*d} is stored projectively canonical: the direction is
scaled so its first nonzero coordinate (the pivot) is 1, and the base
point is shifted along the line so its pivot coordinate is 0. Equal
point sets then compare equal as tuples.

A "C4 of lines" is four distinct lines whose consecutive pairs meet in
four pairwise distinct points; equivalently an 8-cycle in the incidence
graph between the lines and their multi-line points. The detector
builds that graph and asks the cycle enumerator, while the greedy
search keeps an incremental intersection index and only ever inspects
the three-step alternating walks through a candidate line.
"""

from __future__ import annotations

import random
from typing import IO, Iterable, NamedTuple

from girthforge.errors import SizeLimitError
from girthforge.gf import Field
from girthforge.graph import from_edges
from girthforge.moment import Point, moment_vector
from girthforge.verify import iter_cycles

DIM = 4
FAMILY_CAP = 1 << 16
GREEDY_Q_CAP = 4
FAMILY_FORMAT = "girthforge-lines4"


class GenLine(NamedTuple):
    """Canonical line in GF(q)^4: dir pivot is 1, base pivot is 0."""

    dir: Point
    base: Point


class LineC4Witness(NamedTuple):
    """Four distinct lines meeting consecutively in four distinct points."""

    lines: tuple[GenLine, GenLine, GenLine, GenLine]
    points: tuple[Point, Point, Point, Point]


class _SameLine:
    def __repr__(self) -> str:
        return "SAME_LINE"


#: Sentinel returned by intersect() for coincident lines.
SAME_LINE = _SameLine()


def pivot(line: GenLine) -> int:
    return next(i for i, d in enumerate(line.dir) if d)


def canonical_genline(field: Field, x: Point, d: Point) -> GenLine:
    """Canonicalize the line through x with direction d."""
    if len(x) != DIM or len(d) != DIM:
        raise ValueError(f"points must have dimension {DIM}")
    piv = next((i for i, di in enumerate(d) if di), None)
    if piv is None:
        raise ValueError("direction must be nonzero")
    scale = field.inv(d[piv])
    direction = tuple(field.mul(scale, di) for di in d)
    y = x[piv]
    base = tuple(field.sub(xi, field.mul(y, di)) for xi, di in zip(x, direction))
    return GenLine(direction, base)


def points_on_genline(field: Field, line: GenLine) -> list[Point]:
    return [
        tuple(field.add(b, field.mul(y, d)) for b, d in zip(line.base, line.dir))
        for y in field.elements()
    ]


def contains(field: Field, line: GenLine, pt: Point) -> bool:
    # dir[pivot] = 1 and base[pivot] = 0 force the parameter value.
    y = pt[pivot(line)]
    return all(
        pt[i] == field.add(line.base[i], field.mul(y, line.dir[i]))
        for i in range(DIM)
    )


def intersect(field: Field, l1: GenLine, l2: GenLine):
    """None (skew or parallel), a Point, or SAME_LINE.

    Solves base1 + y1*dir1 = base2 + y2*dir2 by elimination on the
    4x2 system over GF(q).
    """
    if l1 == l2:
        return SAME_LINE
    aug = [
        [l1.dir[i], field.neg(l2.dir[i]), field.sub(l2.base[i], l1.base[i])]
        for i in range(DIM)
    ]
    rank = 0
    for col in range(2):
        piv = next((r for r in range(rank, DIM) if aug[r][col]), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = field.inv(aug[rank][col])
        aug[rank] = [field.mul(inv, v) for v in aug[rank]]
        for r in range(DIM):
            if r != rank and aug[r][col]:
                f = aug[r][col]
                aug[r] = [
                    field.sub(a, field.mul(f, b)) for a, b in zip(aug[r], aug[rank])
                ]
        rank += 1
    for r in range(rank, DIM):
        if aug[r][2]:
            return None
    if rank < 2:
        # Dependent directions with a consistent system is the same
        # line, which canonical equality should already have caught.
        return SAME_LINE
    y1 = aug[0][2]
    return tuple(field.add(b, field.mul(y1, d)) for b, d in zip(l1.base, l1.dir))


def all_genlines(field: Field) -> list[GenLine]:
    """Every distinct line of GF(q)^4, canonically sorted.

    There are q^3 * (q^4 - 1) / (q - 1) of them: one canonical
    direction per projective point and q^3 bases per direction.
    """
    q = field.q
    lines = []
    for piv in range(DIM):
        free = DIM - piv - 1
        for dcode in range(q**free):
            rest, digits = dcode, []
            for _ in range(free):
                digits.append(rest % q)
                rest //= q
            direction = (0,) * piv + (1, *digits)
            for bcode in range(q**3):
                rest, bdig = bcode, []
                for _ in range(3):
                    bdig.append(rest % q)
                    rest //= q
                base = tuple(bdig[:piv]) + (0,) + tuple(bdig[piv:])
                lines.append(GenLine(direction, base))
    lines.sort()
    return lines


def moment_seed(field: Field) -> list[GenLine]:
    """The q^4 moment-curve lines of GF(q)^4 re-expressed as GenLines."""
    q = field.q
    seed = []
    for z in range(q):
        direction = moment_vector(field, z, DIM)
        for bcode in range(q**3):
            rest, digits = bcode, []
            for _ in range(3):
                digits.append(rest % q)
                rest //= q
            seed.append(GenLine(direction, (0, *digits)))
    return seed


def validate_line_c4(field: Field, w: LineC4Witness) -> LineC4Witness:
    if len(set(w.lines)) != 4:
        raise ValueError("witness lines not pairwise distinct")
    if len(set(w.points)) != 4:
        raise ValueError("witness points not pairwise distinct")
    for i in range(4):
        for line in (w.lines[i], w.lines[(i + 1) % 4]):
            if not contains(field, line, w.points[i]):
                raise ValueError(f"witness point {w.points[i]} not on {line}")
    return w


def has_line_c4(field: Field, family: Iterable[GenLine]) -> LineC4Witness | None:
    """Find a C4 of lines in the family, or None.

    Builds the incidence graph between the family and every point lying
    on at least two of its lines; a C4 of lines is exactly an 8-cycle
    there.
    """
    fam = sorted(set(family))
    if len(fam) > FAMILY_CAP:
        raise SizeLimitError(f"family of {len(fam)} exceeds cap {FAMILY_CAP}")
    hits: dict[Point, set[int]] = {}
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            r = intersect(field, fam[i], fam[j])
            if r is None or r is SAME_LINE:
                continue
            hits.setdefault(r, set()).update((i, j))
    pts = sorted(hits)
    edges = [(pi, li) for pi, pt in enumerate(pts) for li in sorted(hits[pt])]
    g = from_edges(len(pts), len(fam), edges)
    cycle = next(iter_cycles(g, 8), None)
    if cycle is None:
        return None
    # Cycle alternates point, line, point, line, ... starting on the
    # point side (point IDs sort below line IDs).
    cyc_lines = tuple(fam[cycle[i] - g.nP] for i in (1, 3, 5, 7))
    cyc_points = tuple(pts[cycle[i]] for i in (2, 4, 6, 0))
    return validate_line_c4(field, LineC4Witness(cyc_lines, cyc_points))


class C4FreeFamily:
    """Incrementally grown family with no C4 of lines.

    Keeps the pairwise intersection adjacency of its members so that a
    candidate only costs its own intersections plus the three-step
    alternating walks it would open up.
    """

    def __init__(self, field: Field):
        self.field = field
        self.lines: list[GenLine] = []
        self._adj: list[list[tuple[int, Point]]] = []

    def _intersections(self, cand: GenLine) -> list[tuple[int, Point]]:
        out = []
        for idx, member in enumerate(self.lines):
            r = intersect(self.field, cand, member)
            if r is not None and r is not SAME_LINE:
                out.append((idx, r))
        return out

    def blocked(self, cand: GenLine) -> bool:
        """Would adding cand close a C4 of lines?"""
        if cand in self.lines:
            return False
        hits = self._intersections(cand)
        return self._walk_closes_c4(hits)

    def _walk_closes_c4(self, hits: list[tuple[int, Point]]) -> bool:
        by_line = dict(hits)
        for a, pa in hits:
            for c, x in self._adj[a]:
                if x == pa:
                    continue
                for b, y in self._adj[c]:
                    if b == a or y == x or y == pa:
                        continue
                    pb = by_line.get(b)
                    if pb is not None and pb not in (pa, x, y):
                        return True
        return False

    def try_add(self, cand: GenLine) -> bool:
        """Add cand if the family stays C4-of-lines-free."""
        if cand in self.lines:
            return False
        hits = self._intersections(cand)
        if self._walk_closes_c4(hits):
            return False
        new_idx = len(self.lines)
        self.lines.append(cand)
        self._adj.append(list(hits))
        for idx, pt in hits:
            self._adj[idx].append((new_idx, pt))
        return True


def greedy_c4free(field: Field, seed: int | None = 0) -> list[GenLine]:
    """Greedily grow a maximal C4-of-lines-free family over GF(q)^4.

    Candidates are all lines of the space in a seeded pseudorandom
    order (seed None keeps the canonical sorted order). The result is
    maximal: any skipped line would close a C4 against the members
    accepted before it, and members only accumulate.
    """
    if field.q > GREEDY_Q_CAP:
        raise SizeLimitError(f"greedy search capped at q <= {GREEDY_Q_CAP}")
    order = all_genlines(field)
    if seed is not None:
        random.Random(seed).shuffle(order)
    fam = C4FreeFamily(field)
    for cand in order:
        fam.try_add(cand)
    return fam.lines


def write_family(field: Field, family: Iterable[GenLine], sink: IO[str]) -> None:
    fam = list(family)
    sink.write(f"{FAMILY_FORMAT} p={field.p} m={field.m} n={len(fam)}\n")
    for line in fam:
        d = ",".join(map(str, line.dir))
        b = ",".join(map(str, line.base))
        sink.write(f"dir={d} base={b}\n")


def parse_family(text: str) -> tuple[int, int, list[GenLine]]:
    """Read a family file back as (p, m, lines)."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty input")
    head = lines[0].split()
    if not head or head[0] != FAMILY_FORMAT:
        raise ValueError(f"not a {FAMILY_FORMAT} file")
    kv = {}
    for part in head[1:]:
        key, _, val = part.partition("=")
        kv[key] = int(val)
    fam = []
    for ln in lines[1:]:
        if not ln:
            continue
        dpart, bpart = ln.split()
        direction = tuple(int(v) for v in dpart.removeprefix("dir=").split(","))
        base = tuple(int(v) for v in bpart.removeprefix("base=").split(","))
        fam.append(GenLine(direction, base))
    if len(fam) != kv["n"]:
        raise ValueError(f"header promises {kv['n']} lines, found {len(fam)}")
    return kv["p"], kv["m"], fam
