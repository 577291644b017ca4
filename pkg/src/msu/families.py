"""Families of spaces: embeddability order, quotient poset, minimal subclasses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .embed import embeds
from .errors import EmptyFamilyError, InternalCheckError, TransitivityError
from .spaces import FiniteMetricSpace


@dataclass(frozen=True)
class SpaceFamily:
    """An ordered finite family of metric spaces; duplicates are allowed."""

    members: tuple[FiniteMetricSpace, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class EmbedQuasiOrder:
    """relation[i][j] records whether member i embeds into member j."""

    relation: tuple[tuple[bool, ...], ...]

    def payload(self) -> dict:
        return {"relation": [list(row) for row in self.relation]}


@dataclass(frozen=True)
class QuotientPoset:
    """Mutual-embeddability classes with the induced order.

    classes partition the member indices; order[c][d] says class c embeds
    into class d; maximal lists the classes with nothing strictly above.
    """

    classes: tuple[tuple[int, ...], ...]
    order: tuple[tuple[bool, ...], ...]
    maximal: tuple[int, ...]

    def payload(self) -> dict:
        return {
            "classes": [list(c) for c in self.classes],
            "order": [list(row) for row in self.order],
            "maximal": list(self.maximal),
        }


def _is_transitive(r: tuple[tuple[bool, ...], ...]) -> bool:
    n = len(r)
    for i in range(n):
        for j in range(n):
            if not r[i][j]:
                continue
            for k in range(n):
                if r[j][k] and not r[i][k]:
                    return False
    return True


def embed_quasiorder(fam: SpaceFamily) -> EmbedQuasiOrder:
    """Pairwise embeddability matrix over the family, in input order."""
    ms = fam.members
    relation = tuple(
        tuple(embeds(ms[i], ms[j]) for j in range(len(ms))) for i in range(len(ms))
    )
    if not _is_transitive(relation):
        raise InternalCheckError("embeddability relation came out non-transitive")
    return EmbedQuasiOrder(relation)


def quotient_poset(qo: EmbedQuasiOrder) -> QuotientPoset:
    """Collapse mutual embeddability and order the resulting classes."""
    r = qo.relation
    n = len(r)
    for i in range(n):
        if len(r[i]) != n:
            raise TransitivityError("relation matrix is not square")
        if not r[i][i]:
            raise TransitivityError(f"relation is not reflexive at {i}")
    if not _is_transitive(r):
        raise TransitivityError("relation is not transitive")

    assigned = [-1] * n
    classes: list[tuple[int, ...]] = []
    for i in range(n):
        if assigned[i] >= 0:
            continue
        block = tuple(j for j in range(n) if r[i][j] and r[j][i])
        for j in block:
            assigned[j] = len(classes)
        classes.append(block)

    k = len(classes)
    order = tuple(
        tuple(r[classes[c][0]][classes[d][0]] for d in range(k)) for c in range(k)
    )
    for c in range(k):
        for d in range(k):
            if c != d and order[c][d] and order[d][c]:
                raise InternalCheckError("quotient order is not antisymmetric")
    maximal = tuple(
        c for c in range(k) if not any(d != c and order[c][d] for d in range(k))
    )
    return QuotientPoset(tuple(classes), order, maximal)


def maximal_representatives(fam: SpaceFamily) -> list[int]:
    """Smallest input index of each maximal mutual-embeddability class."""
    poset = quotient_poset(embed_quasiorder(fam))
    return sorted(poset.classes[c][0] for c in poset.maximal)


def minimal_universal_subclass(fam: SpaceFamily) -> SpaceFamily:
    """One representative per maximal class; universal and irredundant."""
    if not fam.members:
        raise EmptyFamilyError("family has no members")
    reps = maximal_representatives(fam)
    return SpaceFamily(tuple(fam.members[i] for i in reps))


def is_universal_space(fam: SpaceFamily, target: FiniteMetricSpace) -> bool:
    """True when every family member embeds into the target."""
    return all(embeds(m, target) for m in fam.members)


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of the minimal-universality decision.

    failing_member disproves universality; failing_point is a target
    point whose removal keeps the target universal, disproving minimality.
    """

    minimal: bool
    failing_member: Optional[int]
    failing_point: Optional[int]

    def payload(self) -> dict:
        return {
            "minimal": self.minimal,
            "failing_member": self.failing_member,
            "failing_point": self.failing_point,
        }


def is_minimal_universal_space(
    fam: SpaceFamily, target: FiniteMetricSpace
) -> MinimalityReport:
    """Universal, and no point of the target can be spared."""
    for i, m in enumerate(fam.members):
        if not embeds(m, target):
            return MinimalityReport(False, i, None)
    for y in range(target.n):
        if is_universal_space(fam, target.delete(y)):
            return MinimalityReport(False, None, y)
    return MinimalityReport(True, None, None)


def nonexistence_condition_i(
    fam: SpaceFamily,
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Two non-isometric members that are both universal for the family.

    Finite families never satisfy this; the check exists to confirm that
    on concrete inputs.  Returns the witness pair when it ever holds.
    """
    universal = [
        i for i, m in enumerate(fam.members) if is_universal_space(fam, m)
    ]
    for a in range(len(universal)):
        for b in range(a + 1, len(universal)):
            i, j = universal[a], universal[b]
            if not (embeds(fam.members[i], fam.members[j])
                    and embeds(fam.members[j], fam.members[i])):
                return True, (i, j)
    return False, None
