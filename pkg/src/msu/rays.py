"""Planar ray unions: tripod and two-ray embeddings, witnesses, and the solver."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence, Union

from .between import line_realization
from .errors import (
    AlphaRangeError,
    DegenerateTriangleError,
    InputFormatError,
    InternalCheckError,
    InvalidTripleError,
    OriginNotAllowedError,
    WrongCardinalityError,
)
from .scalars import DEFAULT_TOL, leq
from .spaces import FiniteMetricSpace, validate_space

EPS_GEO = 1e-9
SOLVER_TOL = 1e-6

_TWO_THIRDS_PI = 2 * math.pi / 3


@dataclass(frozen=True)
class Triangle:
    """Side lengths a = d(v1,v2), b = d(v0,v2), c = d(v0,v1).

    Degenerate (collinear) triangles are accepted and flagged; outright
    triangle-inequality violations are rejected.
    """

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        sides = (float(self.a), float(self.b), float(self.c))
        object.__setattr__(self, "a", sides[0])
        object.__setattr__(self, "b", sides[1])
        object.__setattr__(self, "c", sides[2])
        for s in sides:
            if not s > 0:
                raise InvalidTripleError(f"side {s!r} is not positive")
        a, b, c = sides
        if not (leq(a, b + c) and leq(b, a + c) and leq(c, a + b)):
            raise InvalidTripleError(
                f"sides {a}, {b}, {c} violate the triangle inequality"
            )

    def sides(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def is_degenerate(self) -> bool:
        a, b, c = sorted(self.sides())
        return math.isclose(c, a + b, rel_tol=EPS_GEO, abs_tol=EPS_GEO)

    def payload(self) -> dict:
        return {"sides": [self.a, self.b, self.c]}


@dataclass(frozen=True)
class RaySpace:
    """A union of rays from one origin, given by their direction angles."""

    angles: tuple[float, ...]
    include_origin: bool

    def __post_init__(self) -> None:
        for i in range(len(self.angles)):
            for j in range(i + 1, len(self.angles)):
                gap = (self.angles[i] - self.angles[j]) % (2 * math.pi)
                if min(gap, 2 * math.pi - gap) < 1e-12:
                    raise InputFormatError("ray directions must be distinct")

    @staticmethod
    def tripod() -> "RaySpace":
        return RaySpace((0.0, _TWO_THIRDS_PI, 2 * _TWO_THIRDS_PI), True)

    @staticmethod
    def two_rays(alpha: float) -> "RaySpace":
        if not 0 < alpha < math.pi:
            raise AlphaRangeError(f"ray angle {alpha!r} outside (0, pi)")
        return RaySpace((0.0, float(alpha)), False)

    def planar(self, pt: "RayPoint") -> tuple[float, float]:
        theta = self.angles[pt.ray]
        return (pt.t * math.cos(theta), pt.t * math.sin(theta))

    def point_distance(self, p: "RayPoint", q: "RayPoint") -> float:
        if p.ray == q.ray:
            return abs(p.t - q.t)
        px, py = self.planar(p)
        qx, qy = self.planar(q)
        return math.hypot(px - qx, py - qy)


@dataclass(frozen=True)
class RayPoint:
    """A point on ray `ray` at distance t from the origin."""

    ray: int
    t: float

    def payload(self, rays: Optional[RaySpace] = None) -> dict:
        out: dict = {"ray": self.ray, "t": self.t}
        if rays is not None:
            out["xy"] = list(rays.planar(self))
        return out


TriangleLike = Union[Triangle, FiniteMetricSpace]


def _pair_distances(tri: TriangleLike) -> tuple[float, float, float]:
    """Distances (d01, d02, d12) of the three vertices, as floats."""
    if isinstance(tri, Triangle):
        return (tri.c, tri.b, tri.a)
    if tri.n != 3:
        raise WrongCardinalityError(f"need exactly 3 points, got {tri.n}")
    return (
        float(tri.dist(0, 1)),
        float(tri.dist(0, 2)),
        float(tri.dist(1, 2)),
    )


def _dist_of(pair: tuple[float, float, float], i: int, j: int) -> float:
    d01, d02, d12 = pair
    if {i, j} == {0, 1}:
        return d01
    if {i, j} == {0, 2}:
        return d02
    return d12


def _vertex_cos(pair: tuple[float, float, float], v: int) -> float:
    """Cosine of the triangle angle at vertex v."""
    u, w = [x for x in range(3) if x != v]
    p = _dist_of(pair, v, u)
    q = _dist_of(pair, v, w)
    r = _dist_of(pair, u, w)
    return (p * p + q * q - r * r) / (2 * p * q)


def _is_flat(pair: tuple[float, float, float]) -> bool:
    s = sorted(pair)
    return math.isclose(s[2], s[0] + s[1], rel_tol=EPS_GEO, abs_tol=EPS_GEO)


@dataclass(frozen=True)
class FTResult:
    """Fermat point of a triangle: where the total distance to vertices dips.

    location is "interior" (with the three distances to the vertices) or
    "vertex" (the minimizer sits at the vertex whose angle reaches 120
    degrees).  total_cost is the minimal distance sum.
    """

    location: str
    distances: Optional[tuple[float, float, float]]
    vertex: Optional[int]
    total_cost: float

    def payload(self) -> dict:
        return {
            "location": self.location,
            "distances": list(self.distances) if self.distances else None,
            "vertex": self.vertex,
            "total_cost": self.total_cost,
        }


def fermat_torricelli(tri: TriangleLike, eps_geo: float = EPS_GEO) -> FTResult:
    """Minimize the sum of distances to the three vertices.

    Interior case distances satisfy r_i^2 + r_j^2 + r_i r_j = d(i,j)^2,
    the law of cosines at 120 degrees.
    """
    pair = _pair_distances(tri)
    if _is_flat(pair):
        raise DegenerateTriangleError(
            f"vertices with distances {pair} are collinear"
        )
    cosines = [_vertex_cos(pair, v) for v in range(3)]
    wide = [v for v in range(3) if cosines[v] <= -0.5 + 1e-12]
    if wide:
        v = wide[0]
        u, w = [x for x in range(3) if x != v]
        total = _dist_of(pair, v, u) + _dist_of(pair, v, w)
        return FTResult("vertex", None, v, total)

    d01, d02, d12 = pair
    sq = d01 * d01 + d02 * d02 + d12 * d12
    area = _triangle_area(pair)
    t_sq = sq / 2 + 2 * math.sqrt(3.0) * area
    total = math.sqrt(t_sq)
    # Distance from the interior point to vertex v, opposite side length opp.
    opp = {0: d12, 1: d02, 2: d01}
    r = tuple((t_sq + sq - 3 * opp[v] * opp[v]) / (3 * total) for v in range(3))
    for i in range(3):
        for j in range(i + 1, 3):
            want = _dist_of(pair, i, j)
            got = math.sqrt(r[i] * r[i] + r[j] * r[j] + r[i] * r[j])
            if abs(got - want) > 1e-6 * max(1.0, want):
                raise InternalCheckError("interior point distances failed the 120-degree law")
    return FTResult("interior", r, None, total)


def _triangle_area(pair: tuple[float, float, float]) -> float:
    a, b, c = sorted(pair, reverse=True)
    # Numerically stable Heron form; operands ordered a >= b >= c.
    s = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    return math.sqrt(max(s, 0.0)) / 4


def _as_space(pair: tuple[float, float, float]) -> FiniteMetricSpace:
    d01, d02, d12 = pair
    return validate_space(
        [[0.0, d01, d02], [d01, 0.0, d12], [d02, d12, 0.0]], tol=max(DEFAULT_TOL, EPS_GEO)
    )


def _verify_points(
    rays: RaySpace,
    pts: Sequence[RayPoint],
    pair: tuple[float, float, float],
    eps_geo: float,
) -> None:
    for i in range(3):
        for j in range(i + 1, 3):
            want = _dist_of(pair, i, j)
            got = rays.point_distance(pts[i], pts[j])
            if abs(got - want) > eps_geo * max(1.0, want):
                raise InternalCheckError(
                    f"embedding distance {got} drifted from {want}"
                )


def embed_triple_tripod(
    tri: TriangleLike, eps_geo: float = EPS_GEO
) -> list[RayPoint]:
    """Place three points on the tripod, preserving their distances.

    Flat triples go onto a single ray.  A 120-degree-or-wider corner goes
    onto two rays with the wide corner nearest the origin.  Otherwise each
    vertex takes its own ray at its distance from the interior minimizer
    of fermat_torricelli.
    """
    rays = RaySpace.tripod()
    pair = _pair_distances(tri)

    if _is_flat(pair):
        line = line_realization(_as_space(pair))
        if line is None:
            raise InternalCheckError("flat triple failed to line up")
        lo = min(line.coords)
        pts = [RayPoint(0, float(t - lo)) for t in line.coords]
        _verify_points(rays, pts, pair, eps_geo)
        return pts

    cosines = [_vertex_cos(pair, v) for v in range(3)]
    wide = [v for v in range(3) if cosines[v] <= -0.5 + 1e-12]
    if wide:
        v = wide[0]
        g, e = (v + 1) % 3, (v + 2) % 3
        beta = math.acos(max(-1.0, min(1.0, cosines[v])))
        e_len = _dist_of(pair, v, e)
        g_len = _dist_of(pair, v, g)
        t_f = max(0.0, -e_len * (math.cos(beta) + math.sin(beta) / math.sqrt(3.0)))
        s = 2 * e_len * math.sin(beta) / math.sqrt(3.0)
        out: list[Optional[RayPoint]] = [None, None, None]
        out[v] = RayPoint(0, t_f)
        out[g] = RayPoint(0, t_f + g_len)
        out[e] = RayPoint(1, s)
        _verify_points(rays, out, pair, eps_geo)  # type: ignore[arg-type]
        return out  # type: ignore[return-value]

    ft = fermat_torricelli(tri, eps_geo)
    assert ft.distances is not None
    pts = [RayPoint(v, ft.distances[v]) for v in range(3)]
    _verify_points(rays, pts, pair, eps_geo)
    return pts


def embed_triple_two_rays(
    tri: TriangleLike, alpha: float, eps_geo: float = EPS_GEO
) -> Optional[list[RayPoint]]:
    """Place three points on two rays at angle alpha, origin excluded.

    Flat triples take one ray, shifted off the origin.  Otherwise an
    embedding exists exactly when some corner is strictly wider than
    alpha; that corner goes nearest the origin on one ray and the
    opposite vertex onto the other ray.
    """
    rays = RaySpace.two_rays(alpha)
    pair = _pair_distances(tri)

    if _is_flat(pair):
        line = line_realization(_as_space(pair))
        if line is None:
            raise InternalCheckError("flat triple failed to line up")
        lo = min(line.coords)
        pts = [RayPoint(0, float(t - lo) + 0.5) for t in line.coords]
        _verify_points(rays, pts, pair, eps_geo)
        return pts

    order = sorted(range(3), key=lambda v: _vertex_cos(pair, v))
    v = order[0]
    gamma = math.acos(max(-1.0, min(1.0, _vertex_cos(pair, v))))
    u, w = [x for x in range(3) if x != v]
    p_len = _dist_of(pair, v, w)
    q1 = p_len * math.sin(gamma - alpha) / math.sin(alpha)
    if q1 <= 1e-12 * p_len:
        return None
    t_p = p_len * math.sin(gamma) / math.sin(alpha)
    out: list[Optional[RayPoint]] = [None, None, None]
    out[v] = RayPoint(0, q1)
    out[u] = RayPoint(0, q1 + _dist_of(pair, v, u))
    out[w] = RayPoint(1, t_p)
    _verify_points(rays, out, pair, eps_geo)  # type: ignore[arg-type]
    return out  # type: ignore[return-value]


def witness_triangle_tripod(e: RayPoint) -> Triangle:
    """Equilateral triangle through e whose copies all pass through e."""
    if not e.t > 0:
        raise OriginNotAllowedError("witness point must be off the origin")
    side = e.t * math.sqrt(3.0)
    return Triangle(side, side, side)


def witness_triangle_two_rays(z: RayPoint, alpha: float) -> Triangle:
    """Isoceles triangle pinned to z on the two-ray space at angle alpha.

    z1 mirrors z onto the other ray, z2 sits past z1 at the mirror
    distance, so the equal sides meet at z1 and the base angle comes out
    to pi/4 - alpha/4.  The triangle exists for any angle below pi/3;
    it pins the puncture only when the base angle does not exceed alpha,
    i.e. from pi/5 upward.
    """
    if not (0 < alpha < math.pi / 3):
        raise AlphaRangeError(f"angle {alpha!r} outside (0, pi/3)")
    if not z.t > 0:
        raise OriginNotAllowedError("witness point must be off the origin")
    chord = 2 * z.t * math.sin(alpha / 2)
    # Vertices: v0 = z on its ray, v1 = z1, v2 = z2 on the other ray.
    zx, zy = z.t * math.cos(alpha), z.t * math.sin(alpha)
    base = math.hypot(zx - (z.t + chord), zy)
    return Triangle(chord, base, chord)


def _vdc(index: int, base: int) -> float:
    x = 0.0
    f = 1.0 / base
    n = index
    while n:
        x += (n % base) * f
        n //= base
        f /= base
    return x


def _solve3(
    m: list[list[float]], rhs: list[float]
) -> Optional[list[float]]:
    a = [row[:] + [rhs[i]] for i, row in enumerate(m)]
    scale = max(max(abs(v) for v in row[:3]) for row in a)
    if scale == 0:
        return None
    for col in range(3):
        piv = max(range(col, 3), key=lambda r: abs(a[r][col]))
        if abs(a[piv][col]) < 1e-13 * scale:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1.0 / a[col][col]
        for r in range(col + 1, 3):
            f = a[r][col] * inv
            if f:
                for c in range(col, 4):
                    a[r][c] -= f * a[col][c]
    x = [0.0, 0.0, 0.0]
    for r in (2, 1, 0):
        s = a[r][3] - sum(a[r][c] * x[c] for c in range(r + 1, 3))
        x[r] = s / a[r][r]
    return x


def solve_constrained_embedding(
    tri: TriangleLike,
    rays: RaySpace,
    forbidden: Sequence[RayPoint] = (),
    tol: float = SOLVER_TOL,
    eps_geo: float = EPS_GEO,
) -> list[list[RayPoint]]:
    """All found placements of a triangle on a ray union, minus exclusions.

    Every vertex-to-ray assignment is tried; each yields three polynomial
    distance equations solved by damped Newton iteration from 64 fixed
    low-discrepancy starting points.  Roots are kept when the planar
    distances check out, every coordinate is admissible for the origin
    rule, and no image point comes within tol of a forbidden point.
    An empty result is a statement about this search budget, not a proof.
    """
    pair = _pair_distances(tri)
    pairs = [(0, 1, pair[0]), (0, 2, pair[1]), (1, 2, pair[2])]
    diam = max(pair)
    box = 1.5 * diam
    scale_sq = max(1.0, diam * diam)
    k = len(rays.angles)
    cosg = [
        [math.cos(rays.angles[i] - rays.angles[j]) for j in range(k)]
        for i in range(k)
    ]
    fpts = [(rays.planar(f), f) for f in forbidden]

    results: list[list[RayPoint]] = []
    for assign in product(range(k), repeat=3):
        kept: list[tuple[float, float, float]] = []
        for s_idx in range(1, 65):
            start = (
                box * _vdc(s_idx, 2),
                box * _vdc(s_idx, 3),
                box * _vdc(s_idx, 5),
            )
            root = _newton_root(start, assign, pairs, cosg, scale_sq, box)
            if root is None:
                continue
            ts = []
            bad = False
            for t in root:
                if t < -tol:
                    bad = True
                    break
                t = max(t, 0.0)
                if not rays.include_origin and t <= tol:
                    bad = True
                    break
                ts.append(t)
            if bad:
                continue
            pts = [RayPoint(assign[v], ts[v]) for v in range(3)]
            if not _distances_ok(rays, pts, pairs, eps_geo):
                continue
            ppts = [rays.planar(p) for p in pts]
            if any(
                math.hypot(px - fx, py - fy) < tol
                for px, py in ppts
                for (fx, fy), _ in fpts
            ):
                continue
            key = (ts[0], ts[1], ts[2])
            if any(max(abs(key[i] - old[i]) for i in range(3)) <= tol for old in kept):
                continue
            kept.append(key)
        for key in sorted(kept):
            results.append([RayPoint(assign[v], key[v]) for v in range(3)])
    return results


def _distances_ok(
    rays: RaySpace,
    pts: list[RayPoint],
    pairs: list[tuple[int, int, float]],
    eps_geo: float,
) -> bool:
    for i, j, want in pairs:
        got = rays.point_distance(pts[i], pts[j])
        if abs(got - want) > eps_geo * max(1.0, want):
            return False
    return True


def _newton_root(
    start: tuple[float, float, float],
    assign: tuple[int, ...],
    pairs: list[tuple[int, int, float]],
    cosg: list[list[float]],
    scale_sq: float,
    box: float,
) -> Optional[tuple[float, float, float]]:
    t = list(start)
    target = 1e-12 * scale_sq

    def residual(v: list[float]) -> list[float]:
        out = []
        for i, j, d in pairs:
            if assign[i] == assign[j]:
                gap = v[i] - v[j]
                out.append(gap * gap - d * d)
            else:
                cg = cosg[assign[i]][assign[j]]
                out.append(v[i] * v[i] + v[j] * v[j] - 2 * v[i] * v[j] * cg - d * d)
        return out

    f = residual(t)
    phi = f[0] * f[0] + f[1] * f[1] + f[2] * f[2]
    for _ in range(60):
        if max(abs(x) for x in f) <= target:
            return (t[0], t[1], t[2])
        jac = [[0.0, 0.0, 0.0] for _ in range(3)]
        for row, (i, j, _d) in enumerate(pairs):
            if assign[i] == assign[j]:
                gap = 2 * (t[i] - t[j])
                jac[row][i] = gap
                jac[row][j] = -gap
            else:
                cg = cosg[assign[i]][assign[j]]
                jac[row][i] = 2 * t[i] - 2 * t[j] * cg
                jac[row][j] = 2 * t[j] - 2 * t[i] * cg
        step = _solve3(jac, [-x for x in f])
        if step is None:
            return None
        lam = 1.0
        improved = False
        for _half in range(30):
            cand = [t[0] + lam * step[0], t[1] + lam * step[1], t[2] + lam * step[2]]
            fc = residual(cand)
            phic = fc[0] * fc[0] + fc[1] * fc[1] + fc[2] * fc[2]
            if phic < phi:
                t, f, phi = cand, fc, phic
                improved = True
                break
            lam /= 2
        if not improved:
            return None
        if max(abs(x) for x in t) > 1e9 * box:
            return None
    if max(abs(x) for x in f) <= target:
        return (t[0], t[1], t[2])
    return None
