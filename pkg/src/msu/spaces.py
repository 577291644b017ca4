"""Finite metric spaces: construction and axiom validation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import IndexRangeError, InputFormatError, InvalidMetricError
from .scalars import DEFAULT_TOL, Number, close, coerce_entries, leq, positive

ASYMMETRY = "asymmetry"
NONZERO_DIAGONAL = "nonzero-diagonal"
NONPOSITIVE_DISTANCE = "nonpositive-distance"
TRIANGLE = "triangle"


@dataclass(frozen=True)
class Violation:
    """One failed metric axiom.

    kind "asymmetry": indices (i, j) with d[i][j] != d[j][i].
    kind "nonzero-diagonal": indices (i,).
    kind "nonpositive-distance": indices (i, j) with d[i][j] <= 0, i != j.
    kind "triangle": indices (i, j, k) with d(i,k) > d(i,j) + d(j,k).
    """

    kind: str
    indices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}{self.indices}"

    def payload(self) -> dict:
        return {"kind": self.kind, "indices": list(self.indices)}


def metric_violations(
    matrix: Sequence[Sequence[Number]],
    tol: float = DEFAULT_TOL,
    limit: Optional[int] = None,
) -> list[Violation]:
    """Scan a square matrix for metric-axiom violations.

    Stops early after `limit` findings when given. Triangle checks use the
    upper-triangle entries, so they stay meaningful even when asymmetry is
    also being reported.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise InputFormatError("matrix is not square")
    out: list[Violation] = []

    def full() -> bool:
        return limit is not None and len(out) >= limit

    for i in range(n):
        if not close(matrix[i][i], 0, tol):
            out.append(Violation(NONZERO_DIAGONAL, (i,)))
            if full():
                return out
    for i in range(n):
        for j in range(i + 1, n):
            if not close(matrix[i][j], matrix[j][i], tol):
                out.append(Violation(ASYMMETRY, (i, j)))
                if full():
                    return out
            if not positive(matrix[i][j], tol):
                out.append(Violation(NONPOSITIVE_DISTANCE, (i, j)))
                if full():
                    return out
    for i in range(n):
        for j in range(i + 1, n):
            dij = matrix[i][j]
            for k in range(j + 1, n):
                djk = matrix[j][k]
                dik = matrix[i][k]
                # three unordered conditions: each side at most the sum of the others
                if not leq(dik, dij + djk, tol):
                    out.append(Violation(TRIANGLE, (i, j, k)))
                elif not leq(dij, dik + djk, tol):
                    out.append(Violation(TRIANGLE, (i, k, j)))
                elif not leq(djk, dij + dik, tol):
                    out.append(Violation(TRIANGLE, (j, i, k)))
                else:
                    continue
                if full():
                    return out
    return out


@dataclass(frozen=True)
class FiniteMetricSpace:
    """A finite metric space over string labels.

    `matrix` entries are either all exact (int/Fraction) or all float;
    float-mode comparisons use the absolute-or-relative tolerance `tol`.
    Instances are immutable; build them through validate_space.
    """

    labels: tuple[str, ...]
    matrix: tuple[tuple[Number, ...], ...]
    exact: bool
    tol: float

    @property
    def n(self) -> int:
        return len(self.labels)

    def dist(self, i: int, j: int) -> Number:
        return self.matrix[i][j]

    def close(self, a: Number, b: Number) -> bool:
        return close(a, b, self.tol)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise IndexRangeError(f"no point labeled {label!r}") from None

    def diameter(self) -> Number:
        best: Number = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.matrix[i][j] > best:
                    best = self.matrix[i][j]
        return best

    def restrict(self, indices: Sequence[int]) -> "FiniteMetricSpace":
        """Subspace on the given point indices, order preserved."""
        idx = list(indices)
        if len(set(idx)) != len(idx):
            raise IndexRangeError("restriction indices must be distinct")
        for i in idx:
            if not 0 <= i < self.n:
                raise IndexRangeError(f"point index {i} out of range")
        return FiniteMetricSpace(
            labels=tuple(self.labels[i] for i in idx),
            matrix=tuple(tuple(self.matrix[i][j] for j in idx) for i in idx),
            exact=self.exact,
            tol=self.tol,
        )

    def delete(self, index: int) -> "FiniteMetricSpace":
        """Subspace with one point removed."""
        if not 0 <= index < self.n:
            raise IndexRangeError(f"point index {index} out of range")
        return self.restrict([i for i in range(self.n) if i != index])


def validate_space(
    matrix: Sequence[Sequence[Number]],
    labels: Optional[Sequence[str]] = None,
    tol: float = DEFAULT_TOL,
) -> FiniteMetricSpace:
    """Validate a distance matrix and wrap it as a FiniteMetricSpace.

    Raises InvalidMetricError carrying the full violation list on failure.
    """
    n = len(matrix)
    if labels is None:
        labels = [f"p{i}" for i in range(n)]
    labels = [str(x) for x in labels]
    if len(labels) != n:
        raise InputFormatError(f"{len(labels)} labels for {n} points")
    if len(set(labels)) != n:
        raise InputFormatError("labels must be distinct")

    flat, exact = coerce_entries(v for row in matrix for v in row)
    rows = [tuple(flat[i * n : (i + 1) * n]) for i in range(n)]
    violations = metric_violations(rows, tol=tol)
    if violations:
        raise InvalidMetricError(violations)
    return FiniteMetricSpace(
        labels=tuple(labels), matrix=tuple(rows), exact=exact, tol=tol
    )
