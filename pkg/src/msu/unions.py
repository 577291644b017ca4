"""Disjoint-union constructions: gluings, anchored unions, and their verifier."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .embed import (
    Comparability,
    compare,
    find_embeddings,
    is_not_shifted,
    is_ultrametric,
)
from .errors import (
    DuplicatePointError,
    EmptyFamilyError,
    EpsilonTooSmallError,
    IndexRangeError,
    InputFormatError,
    InternalCheckError,
    InvalidMetricError,
    IsometricDuplicateError,
    NonpositiveDistanceError,
    NotPseudolinearError,
    NotUltrametricError,
    RadiusTooSmallError,
    SeparatorError,
)
from .between import is_pseudolinear
from .graphs import build_graph, shortest_path_pseudometric
from .scalars import (
    DEFAULT_TOL,
    Number,
    close,
    coerce_entries,
    leq,
    positive,
)
from .spaces import FiniteMetricSpace, validate_space


@dataclass(frozen=True)
class TaggedPoint:
    """A point addressed as (part index, point index within that part)."""

    part: int
    point: int

    def payload(self) -> dict:
        return {"part": self.part, "point": self.point}


@dataclass(frozen=True)
class UnionSpace:
    """A metric space assembled from parts, remembering the partition.

    parts[i] lists the indices of space that came from input part i; the
    restriction of the union metric to each block equals the input metric.
    provenance records the builder name and its parameters.
    """

    space: FiniteMetricSpace
    parts: tuple[tuple[int, ...], ...]
    provenance: dict = field(compare=False)

    def part_count(self) -> int:
        return len(self.parts)

    def part_space(self, i: int) -> FiniteMetricSpace:
        if not 0 <= i < len(self.parts):
            raise IndexRangeError(f"part index {i} out of range")
        return self.space.restrict(self.parts[i])

    def global_index(self, tp: TaggedPoint) -> int:
        if not 0 <= tp.part < len(self.parts):
            raise IndexRangeError(f"part index {tp.part} out of range")
        block = self.parts[tp.part]
        if not 0 <= tp.point < len(block):
            raise IndexRangeError(
                f"point index {tp.point} out of range for part {tp.part}"
            )
        return block[tp.point]

    def payload(self) -> dict:
        return {
            "labels": list(self.space.labels),
            "matrix": [list(row) for row in self.space.matrix],
            "parts": [list(block) for block in self.parts],
            "provenance": self.provenance,
        }


def _union_labels(parts: Sequence[FiniteMetricSpace]) -> list[str]:
    return [f"{i}:{lab}" for i, part in enumerate(parts) for lab in part.labels]


def _blocks(parts: Sequence[FiniteMetricSpace]) -> list[tuple[int, ...]]:
    blocks = []
    base = 0
    for part in parts:
        blocks.append(tuple(range(base, base + part.n)))
        base += part.n
    return blocks


def _assemble(
    parts: Sequence[FiniteMetricSpace],
    cross,
    provenance: dict,
    tol: float,
) -> UnionSpace:
    """Build the union matrix from part metrics and a cross-distance rule.

    cross(i, x, j, y) gives the distance between point x of part i and
    point y of part j for i < j.  The result is validated; the block
    restrictions are part metrics verbatim.
    """
    blocks = _blocks(parts)
    n = sum(part.n for part in parts)
    rows: list[list[Number]] = [[0] * n for _ in range(n)]
    for i, part in enumerate(parts):
        for a in range(part.n):
            for b in range(part.n):
                rows[blocks[i][a]][blocks[i][b]] = part.matrix[a][b]
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for a in range(parts[i].n):
                for b in range(parts[j].n):
                    v = cross(i, a, j, b)
                    rows[blocks[i][a]][blocks[j][b]] = v
                    rows[blocks[j][b]][blocks[i][a]] = v
    space = validate_space(rows, _union_labels(parts), tol=tol)
    union = UnionSpace(space, tuple(blocks), provenance)
    _assert_restrictions(union, parts)
    return union


def _assert_restrictions(
    union: UnionSpace, parts: Sequence[FiniteMetricSpace]
) -> None:
    for i, part in enumerate(parts):
        got = union.part_space(i)
        for a in range(part.n):
            for b in range(part.n):
                if got.matrix[a][b] != part.matrix[a][b]:
                    raise InternalCheckError(
                        f"restriction to part {i} does not match its metric"
                    )


def _common_tol(parts: Sequence[FiniteMetricSpace]) -> float:
    return max([DEFAULT_TOL] + [p.tol for p in parts])


def glue_ultrametric_pair(
    x: FiniteMetricSpace,
    y: FiniteMetricSpace,
    x0: int,
    y0: int,
    r0: Number,
) -> UnionSpace:
    """Join two ultrametric spaces at chosen base points, r0 apart.

    Cross distances follow the max rule d(a,b) = max(d(a,x0), r0, d(y0,b)),
    which keeps the strong triangle inequality; the output is re-verified
    and d(x0,y0) = r0.
    """
    tol = _common_tol([x, y])
    if not is_ultrametric(x):
        raise NotUltrametricError("first space is not ultrametric")
    if not is_ultrametric(y):
        raise NotUltrametricError("second space is not ultrametric")
    if not 0 <= x0 < x.n:
        raise IndexRangeError(f"base point {x0} out of range")
    if not 0 <= y0 < y.n:
        raise IndexRangeError(f"base point {y0} out of range")
    if not positive(r0, tol):
        raise NonpositiveDistanceError(f"joint distance {r0!r} must be positive")

    def cross(i: int, a: int, j: int, b: int) -> Number:
        return max(x.matrix[a][x0], r0, y.matrix[y0][b])

    union = _assemble(
        [x, y],
        cross,
        {"builder": "glue_ultrametric_pair", "x0": x0, "y0": y0, "r0": r0},
        tol,
    )
    if not is_ultrametric(union.space):
        raise InternalCheckError("glued space lost the strong triangle inequality")
    return union


def glue_constant(
    x1: FiniteMetricSpace, x2: FiniteMetricSpace, r0: Number
) -> UnionSpace:
    """Join two spaces with every cross distance equal to r0.

    Requires r0 positive and at least both diameters.
    """
    tol = _common_tol([x1, x2])
    lo = max(x1.diameter(), x2.diameter())
    if not positive(r0, tol) or not leq(lo, r0, tol):
        raise RadiusTooSmallError(
            f"joint distance {r0!r} must be positive and at least {lo!r}"
        )
    return _assemble(
        [x1, x2],
        lambda i, a, j, b: r0,
        {"builder": "glue_constant", "r0": r0},
        tol,
    )


def connectivity_threshold(space: FiniteMetricSpace) -> Number:
    """Smallest e such that the graph with edges {d <= e} is connected."""
    if space.n <= 1:
        return 0
    values = sorted(
        {space.matrix[i][j] for i in range(space.n) for j in range(i + 1, space.n)}
    )
    for v in values:
        if is_epsilon_connected(space, v):
            return v
    raise InternalCheckError("no connectivity threshold found")


def is_epsilon_connected(space: FiniteMetricSpace, eps: Number) -> bool:
    """Connectivity of the graph whose edges are pairs at distance <= eps."""
    n = space.n
    if n <= 1:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(n):
            if not seen[v] and leq(space.matrix[u][v], eps, space.tol):
                seen[v] = True
                stack.append(v)
    return all(seen)


def union_epsilon_connected(
    parts: Sequence[FiniteMetricSpace],
    anchors: Sequence[int],
    eps1: Number,
) -> UnionSpace:
    """Union of parts joined through anchor points at pairwise distance eps1.

    Builds the weighted graph that is complete inside each part (original
    distances) and complete on the anchor set (weight eps1), then takes
    shortest-path distances.  eps1 must strictly exceed every part's
    connectivity threshold; each block restriction is preserved verbatim.
    """
    parts = list(parts)
    if not parts:
        raise EmptyFamilyError("need at least one part")
    for k, part in enumerate(parts):
        if part.n == 0:
            raise InputFormatError(f"part {k} is empty")
    if len(anchors) != len(parts):
        raise InputFormatError(
            f"{len(anchors)} anchors for {len(parts)} parts"
        )
    for k, a in enumerate(anchors):
        if not 0 <= a < parts[k].n:
            raise IndexRangeError(f"anchor {a} out of range for part {k}")

    tol = _common_tol(parts)
    threshold: Number = 0
    for part in parts:
        t = connectivity_threshold(part)
        if t > threshold:
            threshold = t
    if leq(eps1, threshold, tol):
        raise EpsilonTooSmallError(
            f"anchor distance {eps1!r} must exceed the connectivity threshold {threshold!r}"
        )

    labels = _union_labels(parts)
    blocks = _blocks(parts)
    edges: list[tuple[int, int, Number]] = []
    for k, part in enumerate(parts):
        for a in range(part.n):
            for b in range(a + 1, part.n):
                edges.append((blocks[k][a], blocks[k][b], part.matrix[a][b]))
    anchor_ids = [blocks[k][anchors[k]] for k in range(len(parts))]
    for i in range(len(anchor_ids)):
        for j in range(i + 1, len(anchor_ids)):
            edges.append((anchor_ids[i], anchor_ids[j], eps1))

    graph = build_graph(labels, edges, tol=tol)
    rows = shortest_path_pseudometric(graph)

    # Shortest paths realize every in-part distance; pin them bit-exactly.
    weight = {(i, j): w for i, j, w in graph.edges}
    for k, part in enumerate(parts):
        for a in range(part.n):
            for b in range(a + 1, part.n):
                gi, gj = blocks[k][a], blocks[k][b]
                w = weight[(gi, gj) if gi < gj else (gj, gi)]
                if not close(rows[gi][gj], w, tol):
                    raise InternalCheckError(
                        "anchored union failed to realize a part distance"
                    )
                rows[gi][gj] = w
                rows[gj][gi] = w

    try:
        space = validate_space(rows, labels, tol=tol)
    except InvalidMetricError as exc:
        raise InternalCheckError(f"anchored union is not a metric: {exc}") from exc
    union = UnionSpace(
        space,
        tuple(blocks),
        {
            "builder": "union_epsilon_connected",
            "anchors": list(anchors),
            "eps1": eps1,
        },
    )
    _assert_restrictions(union, parts)
    return union


def union_ultrametric_family(
    distances: Sequence[Number],
    separators: Sequence[Number],
    tol: float = DEFAULT_TOL,
) -> UnionSpace:
    """Union of two-point parts, one per requested distance.

    separators is an ascending list starting at 0; the cross distance
    between two parts is the first separator above the larger of their
    two in-part distances.  Each requested distance must fall strictly
    inside a separator gap, and then it is realized by exactly one
    unordered pair of the output.
    """
    values, _ = coerce_entries(list(distances) + list(separators))
    ts = values[: len(distances)]
    seps = values[len(distances) :]
    if not ts:
        raise EmptyFamilyError("need at least one distance")
    if not seps or seps[0] != 0:
        raise SeparatorError("separator list must start at 0")
    for i in range(1, len(seps)):
        if not seps[i - 1] < seps[i]:
            raise SeparatorError("separators must be strictly ascending")
    for i in range(1, len(ts)):
        if not ts[i - 1] < ts[i]:
            raise InputFormatError("distances must be strictly ascending")
    if not positive(ts[0], tol):
        raise InputFormatError(f"distance {ts[0]!r} is not positive")

    def gap_top(t: Number) -> Number:
        k = bisect_left(seps, t)
        if k >= len(seps):
            raise SeparatorError(f"distance {t!r} is above every separator")
        if seps[k] == t:
            raise SeparatorError(f"distance {t!r} equals a separator")
        return seps[k]

    for t in ts:
        gap_top(t)

    parts = [validate_space([[0, t], [t, 0]], tol=tol) for t in ts]

    def cross(i: int, a: int, j: int, b: int) -> Number:
        return gap_top(max(ts[i], ts[j]))

    union = _assemble(
        parts,
        cross,
        {
            "builder": "union_ultrametric_family",
            "distances": list(ts),
            "separators": list(seps),
        },
        tol,
    )
    if not is_ultrametric(union.space):
        raise InternalCheckError("family union lost the strong triangle inequality")
    m = union.space.matrix
    n = union.space.n
    for t in ts:
        hits = sum(
            1 for i in range(n) for j in range(i + 1, n) if close(m[i][j], t, tol)
        )
        if hits != 1:
            raise InternalCheckError(
                f"distance {t!r} realized by {hits} pairs instead of one"
            )
    return union


def union_pl_quadruples(quads: Sequence[FiniteMetricSpace]) -> UnionSpace:
    """Union of pseudo-linear quadruples at cross distance max of diameters.

    Parts must be pairwise non-isometric; within a part the original
    metric survives verbatim.
    """
    quads = list(quads)
    if not quads:
        raise EmptyFamilyError("need at least one quadruple")
    for k, q in enumerate(quads):
        if not is_pseudolinear(q):
            raise NotPseudolinearError(f"part {k} is not pseudo-linear")
    for i in range(len(quads)):
        for j in range(i + 1, len(quads)):
            if find_embeddings(quads[i], quads[j], limit=1):
                raise IsometricDuplicateError(f"parts {i} and {j} are isometric")

    diams = [q.diameter() for q in quads]

    def cross(i: int, a: int, j: int, b: int) -> Number:
        return max(diams[i], diams[j])

    return _assemble(
        quads,
        cross,
        {"builder": "union_pl_quadruples"},
        _common_tol(quads),
    )


@dataclass(frozen=True)
class RealPoint:
    """A point of the line component, at coordinate t."""

    t: Number

    def payload(self) -> dict:
        return {"real": self.t}


@dataclass(frozen=True)
class QuadPoint:
    """A point of the quadruple-union component."""

    at: TaggedPoint

    def payload(self) -> dict:
        return {"quad": self.at.payload()}


MPoint = Union[RealPoint, QuadPoint]


@dataclass(frozen=True)
class BridgeParams:
    """How the line is tied to the quadruple union.

    p is the attachment coordinate on the line, b the attachment point in
    the union, and r > 0 the length of the tie.
    """

    p: Number
    b: TaggedPoint
    r: Number

    def __post_init__(self) -> None:
        if not positive(self.r, DEFAULT_TOL):
            raise NonpositiveDistanceError(f"bridge length {self.r!r} must be positive")


def m_distance(
    a: MPoint, b: MPoint, quads_union: UnionSpace, bridge: BridgeParams
) -> Number:
    """Distance in the line-plus-quadruples space.

    |x - y| on the line, the union metric inside the union, and
    |x - p| + r + d(b_anchor, y) across the two components.
    """
    if isinstance(a, RealPoint) and isinstance(b, RealPoint):
        gap = a.t - b.t
        return -gap if gap < 0 else gap
    if isinstance(a, QuadPoint) and isinstance(b, QuadPoint):
        return quads_union.space.dist(
            quads_union.global_index(a.at), quads_union.global_index(b.at)
        )
    real, quad = (a, b) if isinstance(a, RealPoint) else (b, a)
    gap = real.t - bridge.p
    if gap < 0:
        gap = -gap
    anchor = quads_union.global_index(bridge.b)
    return gap + bridge.r + quads_union.space.dist(
        anchor, quads_union.global_index(quad.at)
    )


def _m_label(pt: MPoint) -> str:
    if isinstance(pt, RealPoint):
        return f"r:{pt.t}"
    return f"q:{pt.at.part}.{pt.at.point}"


def sample_m_space(
    points: Sequence[MPoint],
    quads_union: UnionSpace,
    bridge: BridgeParams,
) -> FiniteMetricSpace:
    """Finite restriction of the line-plus-quadruples space to given points."""
    points = list(points)
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if points[i] == points[j]:
                raise DuplicatePointError(f"point {points[i]!r} repeated")
    n = len(points)
    rows: list[list[Number]] = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = m_distance(points[i], points[j], quads_union, bridge)
            rows[i][j] = v
            rows[j][i] = v
    try:
        return validate_space(rows, [_m_label(p) for p in points])
    except InvalidMetricError as exc:
        raise InternalCheckError(f"sampled distances are not a metric: {exc}") from exc


@dataclass(frozen=True)
class UnionReport:
    """Verifier outcome; failures are structured (kind, indices) entries."""

    passed: bool
    shifted_parts: tuple[int, ...]
    comparable_pairs: tuple[tuple[int, int], ...]
    copy_counts: tuple[int, ...]

    def payload(self) -> dict:
        return {
            "passed": self.passed,
            "shifted_parts": list(self.shifted_parts),
            "comparable_pairs": [list(p) for p in self.comparable_pairs],
            "copy_counts": list(self.copy_counts),
        }


def verify_minimal_union(union: UnionSpace, workers: Optional[int] = None) -> UnionReport:
    """Check the three marks of a minimal universal union.

    (i) every part is not shifted, (ii) parts are pairwise incomparable,
    and (iii) each part has exactly one isometric copy inside the union
    (counting distinct image sets over all embeddings).
    """
    k = union.part_count()
    part_spaces = [union.part_space(i) for i in range(k)]

    shifted = tuple(
        i for i in range(k) if not is_not_shifted(part_spaces[i]).not_shifted
    )
    comparable = tuple(
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if compare(part_spaces[i], part_spaces[j]) is not Comparability.INCOMPARABLE
    )
    counts = []
    for i in range(k):
        maps = find_embeddings(part_spaces[i], union.space, workers=workers)
        counts.append(len({frozenset(pm.image) for pm in maps}))
    passed = not shifted and not comparable and all(c == 1 for c in counts)
    return UnionReport(passed, shifted, comparable, tuple(counts))
