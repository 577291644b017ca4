"""Metric betweenness, collinearity tests, and line realizations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional

from .errors import (
    IndexRangeError,
    InvalidTripleError,
    WrongCardinalityError,
)
from .scalars import DEFAULT_TOL, Number, close, coerce_entries, leq, positive
from .spaces import FiniteMetricSpace


@dataclass(frozen=True)
class LineRealization:
    """Coordinates on the real line, one per point, preserving distances."""

    coords: tuple[Number, ...]

    def payload(self) -> dict:
        return {"coords": list(self.coords)}


@dataclass(frozen=True)
class PLLabeling:
    """Point ordering p0,p1,p2,p3 exhibiting the pseudo-linear equalities.

    d(p0,p1) = d(p2,p3), d(p1,p2) = d(p3,p0), and
    d(p0,p2) = d(p0,p1) + d(p1,p2) = d(p1,p3).
    """

    perm: tuple[int, int, int, int]

    def payload(self) -> dict:
        return {"perm": list(self.perm)}


@dataclass(frozen=True)
class MBStatus:
    """Whether every triple is collinear, with the first failure if not."""

    is_mb: bool
    witness: Optional[tuple[int, int, int]]

    def payload(self) -> dict:
        return {
            "is_mb": self.is_mb,
            "witness": list(self.witness) if self.witness else None,
        }


def _check_triple_indices(space: FiniteMetricSpace, i: int, j: int, k: int) -> None:
    for t in (i, j, k):
        if not 0 <= t < space.n:
            raise IndexRangeError(f"point index {t} out of range")
    if len({i, j, k}) != 3:
        raise IndexRangeError("triple indices must be distinct")


def lies_between(space: FiniteMetricSpace, i: int, j: int, k: int) -> bool:
    """True when the middle argument splits the span: d(i,k) = d(i,j) + d(j,k)."""
    _check_triple_indices(space, i, j, k)
    return space.close(space.dist(i, k), space.dist(i, j) + space.dist(j, k))


def _validated_sides(
    d12: Number, d13: Number, d23: Number, tol: float
) -> list[Number]:
    sides, _ = coerce_entries([d12, d13, d23])
    for v in sides:
        if not positive(v, tol):
            raise InvalidTripleError(f"side {v!r} is not positive")
    a, b, c = sides
    if not (leq(a, b + c, tol) and leq(b, a + c, tol) and leq(c, a + b, tol)):
        raise InvalidTripleError(f"sides {a!r}, {b!r}, {c!r} violate the triangle inequality")
    return sides


def is_mb_triple(
    d12: Number, d13: Number, d23: Number, tol: float = DEFAULT_TOL
) -> bool:
    """True when one point lies between the other two: 2*max = sum."""
    a, b, c = _validated_sides(d12, d13, d23, tol)
    return close(2 * max(a, b, c), a + b + c, tol)


def _det(m: list[list[Number]]) -> Number:
    if len(m) == 1:
        return m[0][0]
    total: Number = 0
    for col, val in enumerate(m[0]):
        if val == 0:
            continue
        minor = [row[:col] + row[col + 1 :] for row in m[1:]]
        term = val * _det(minor)
        total = total - term if col % 2 else total + term
    return total


def cayley_menger(
    d12: Number, d13: Number, d23: Number, tol: float = DEFAULT_TOL
) -> Number:
    """Collinearity determinant of a triple; zero exactly for flat triples.

    Equals -16 times the squared area of the triangle with these sides,
    so it is negative for every non-degenerate triple.  Exact inputs give
    an exact result.
    """
    a, b, c = _validated_sides(d12, d13, d23, tol)
    a2, b2, c2 = a * a, b * b, c * c
    return _det(
        [
            [0, a2, b2, 1],
            [a2, 0, c2, 1],
            [b2, c2, 0, 1],
            [1, 1, 1, 0],
        ]
    )


def _triple_is_collinear(space: FiniteMetricSpace, i: int, j: int, k: int) -> bool:
    a = space.dist(i, j)
    b = space.dist(i, k)
    c = space.dist(j, k)
    return space.close(2 * max(a, b, c), a + b + c)


def is_mb_space(space: FiniteMetricSpace) -> MBStatus:
    """Check that among any three points one lies between the other two.

    Spaces with fewer than three points pass vacuously.  The witness is
    the first violating triple in lexicographic index order, if any.
    """
    for i, j, k in combinations(range(space.n), 3):
        if not _triple_is_collinear(space, i, j, k):
            return MBStatus(False, (i, j, k))
    return MBStatus(True, None)


def pl_labeling(space: FiniteMetricSpace) -> Optional[PLLabeling]:
    """First point ordering (lexicographic) satisfying the PL equalities."""
    if space.n != 4:
        raise WrongCardinalityError(f"need exactly 4 points, got {space.n}")
    d = space.dist
    for p0, p1, p2, p3 in permutations(range(4)):
        if not space.close(d(p0, p1), d(p2, p3)):
            continue
        if not space.close(d(p1, p2), d(p3, p0)):
            continue
        span = d(p0, p1) + d(p1, p2)
        if space.close(d(p0, p2), span) and space.close(d(p1, p3), span):
            return PLLabeling((p0, p1, p2, p3))
    return None


def line_realization(space: FiniteMetricSpace) -> Optional[LineRealization]:
    """Distance-preserving coordinates on the real line, or none.

    The first point is pinned at 0 and the second on the positive side,
    so successful outputs are canonical up to nothing.  Remaining points
    sit at +/- their distance from the first point; the sign choices are
    resolved by backtracking against all previously placed points.
    """
    n = space.n
    if n == 0:
        return LineRealization(())
    coords: list[Number] = [0] * n
    if n >= 2:
        coords[1] = space.dist(0, 1)

    def place(t: int) -> bool:
        if t == n:
            return True
        r = space.dist(0, t)
        for cand in (r, -r):
            ok = True
            for u in range(1, t):
                gap = cand - coords[u]
                if gap < 0:
                    gap = -gap
                if not space.close(gap, space.dist(u, t)):
                    ok = False
                    break
            if ok:
                coords[t] = cand
                if place(t + 1):
                    return True
        return False

    if not place(min(2, n)):
        return None
    # Safety net: the search already checks each pair once.
    for i in range(n):
        for j in range(i + 1, n):
            gap = coords[i] - coords[j]
            if gap < 0:
                gap = -gap
            if not space.close(gap, space.dist(i, j)):
                return None
    return LineRealization(tuple(coords))


def is_pseudolinear(space: FiniteMetricSpace) -> bool:
    """True for 4-point spaces where every triple lines up but the whole does not."""
    if space.n != 4:
        raise WrongCardinalityError(f"need exactly 4 points, got {space.n}")
    if line_realization(space) is not None:
        return False
    for drop in range(4):
        if line_realization(space.delete(drop)) is None:
            return False
    return True
