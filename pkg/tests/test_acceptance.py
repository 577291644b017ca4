"""Acceptance suite: one test per release criterion, each with a wall-clock budget.

Every test draws from a seeded generator, checks the library against an
independent oracle or an exact invariant, and asserts its time budget.
Run with -s to see the per-criterion summary lines.
"""

import math
import random
import time
from fractions import Fraction

import msu
from conftest import (
    cycle_weight_oracle,
    quad,
    random_space,
    random_ultrametric,
)

MATRIX_TRIALS = 10_000
SELF_EMBED_TRIALS = 500
TRIPLE_TRIALS = 10_000
QUAD_TRIALS = 10_000
GRAPH_TRIALS = 2_000
UNION_FAMILIES = 100
ULTRA_TRIALS = 100
TRIANGLE_TRIALS = 1_000
COST_SAMPLES = 1_000
PUNCTURE_TRIALS = 50
ANGLE_TRIALS = 20
DISTANCE_TRIALS = 1_000
SUBCLASS_TRIALS = 200
BRIDGE_TRIALS = 500

SOLVER_TOL = 1e-6
REL_ERR = 1e-9


def _finish(num, label, t0, budget):
    elapsed = time.perf_counter() - t0
    print(f"criterion {num:02d} {label}: PASS ({elapsed:.1f}s)")
    assert elapsed < budget, f"{label}: {elapsed:.1f}s over the {budget:.0f}s budget"


def _bounded_ratio_matrix(rng, n):
    # entries in [L, 2L] cannot break the triangle inequality on their own
    scale = rng.randint(2, 9)
    den = rng.choice((1, 1, 1, 1, 2, 3, 4))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = Fraction(rng.randint(scale, 2 * scale), den)
    return rows


def test_criterion_01_validator_flags_every_injected_violation():
    rng = random.Random(101)
    t0 = time.perf_counter()
    for _ in range(MATRIX_TRIALS):
        n = rng.randint(5, 8)
        rows = _bounded_ratio_matrix(rng, n)
        i, j = rng.sample(range(n), 2)
        kind = rng.choice(("asymmetry", "nonzero-diagonal", "triangle"))
        if kind == "asymmetry":
            rows[i][j] = rows[i][j] + 1
        elif kind == "nonzero-diagonal":
            rows[i][i] = Fraction(1)
        else:
            bump = 5 * max(max(r) for r in rows)
            rows[i][j] = rows[j][i] = bump
        kinds = {v.kind for v in msu.metric_violations(rows)}
        assert kind in kinds, (kind, rows)
    _finish(1, "injected axiom violations all detected", t0, 5.0)


def test_criterion_02_self_embeddings_are_bijections():
    rng = random.Random(211)
    t0 = time.perf_counter()
    for _ in range(SELF_EMBED_TRIALS):
        sp = random_space(rng, rng.randint(1, 6))
        n = len(sp.matrix)
        for pmap in msu.self_embeddings(sp):
            assert pmap.is_bijection_onto(n), (sp.matrix, pmap)
    _finish(2, "every self-embedding is a bijection", t0, 15.0)


def test_criterion_03_flatness_determinant_tracks_perimeter_rule():
    rng = random.Random(307)
    t0 = time.perf_counter()
    for _ in range(TRIPLE_TRIALS):
        # sums of three nonnegative offsets always form a metric triple
        x = 0 if rng.random() < 0.3 else rng.randint(1, 20)
        y = rng.randint(1, 20)
        z = rng.randint(1, 20)
        den = rng.randint(1, 4)
        sides = [Fraction(x + y, den), Fraction(x + z, den), Fraction(y + z, den)]
        rng.shuffle(sides)
        a, b, c = sides
        det = msu.cayley_menger(a, b, c)
        flat = 2 * max(a, b, c) == a + b + c
        assert det <= 0
        assert (det == 0) == flat
        assert msu.is_mb_triple(a, b, c) == flat
    _finish(3, "determinant zero exactly on flat triples", t0, 5.0)


def _permuted(matrix, perm):
    n = len(matrix)
    return [[matrix[perm[i]][perm[j]] for j in range(n)] for i in range(n)]


def test_criterion_04_pseudolinear_deciders_agree():
    rng = random.Random(401)
    t0 = time.perf_counter()
    for _ in range(QUAD_TRIALS):
        roll = rng.random()
        if roll < 0.35:
            coords = sorted(rng.sample(range(25), 4))
            rows = [[abs(u - v) for v in coords] for u in coords]
        elif roll < 0.7:
            rows = quad(rng.randint(1, 8), rng.randint(1, 8)).matrix
            rows = [list(r) for r in rows]
        else:
            rows = _bounded_ratio_matrix(rng, 4)
        perm = list(range(4))
        rng.shuffle(perm)
        sp = msu.validate_space(_permuted(rows, perm))
        assert msu.is_pseudolinear(sp) == (msu.pl_labeling(sp) is not None), rows
    _finish(4, "four-point deciders agree", t0, 15.0)


def _random_connected_graph(rng, n):
    labels = [f"v{i}" for i in range(n)]
    edges = []
    present = set()
    for i in range(1, n):
        j = rng.randrange(i)
        edges.append((labels[j], labels[i], rng.choice((0, 1, 2, 3))))
        present.add(frozenset((i, j)))
    for i in range(n):
        for j in range(i + 1, n):
            if frozenset((i, j)) in present or rng.random() >= 0.4:
                continue
            edges.append((labels[i], labels[j], rng.choice((0, 1, 2, 3))))
            present.add(frozenset((i, j)))
    return labels, edges


def test_criterion_05_edge_criterion_matches_cycle_oracle():
    rng = random.Random(503)
    t0 = time.perf_counter()
    for _ in range(GRAPH_TRIALS):
        n = rng.randint(2, 6)
        labels, edges = _random_connected_graph(rng, n)
        report = msu.check_metrizability(msu.build_graph(labels, edges))
        index = {lab: k for k, lab in enumerate(labels)}
        iedges = [(index[u], index[v], w) for u, v, w in edges]
        assert report.pseudometrizable == cycle_weight_oracle(n, iedges), edges
    _finish(5, "metrizability matches the cycle oracle", t0, 30.0)


def test_criterion_06_epsilon_union_keeps_one_copy_per_part():
    rng = random.Random(601)
    t0 = time.perf_counter()
    for _ in range(UNION_FAMILIES):
        count = rng.randint(2, 4)
        parts = []
        while len(parts) < count:
            cand = random_space(rng, rng.randint(2, 4))
            if all(msu.compare(cand, p) == msu.Comparability.INCOMPARABLE for p in parts):
                parts.append(cand)
        diam = max(max(max(row) for row in p.matrix) for p in parts)
        union = msu.union_epsilon_connected(parts, [0] * count, diam + 1)
        for p, part in enumerate(parts):
            for i in range(len(part.matrix)):
                gi = union.global_index(msu.TaggedPoint(p, i))
                for j in range(len(part.matrix)):
                    gj = union.global_index(msu.TaggedPoint(p, j))
                    assert union.space.matrix[gi][gj] == part.matrix[i][j]
        report = msu.verify_minimal_union(union)
        assert report.passed, (report, [p.matrix for p in parts])
    _finish(6, "one isometric copy per incomparable part", t0, 60.0)


def _assert_ultrametric(space):
    m = space.matrix
    n = len(m)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert m[i][j] <= max(m[i][k], m[k][j]), (m, i, j, k)


def test_criterion_07_ultrametric_builders_hold_strong_triangle():
    rng = random.Random(701)
    t0 = time.perf_counter()
    for _ in range(ULTRA_TRIALS):
        x = random_ultrametric(rng, rng.randint(2, 5))
        y = random_ultrametric(rng, rng.randint(2, 5))
        diam = max(max(max(r) for r in x.matrix), max(max(r) for r in y.matrix))
        r0 = diam + Fraction(rng.randint(1, 4), rng.choice((1, 2)))
        glued = msu.glue_ultrametric_pair(x, y, 0, 0, r0)
        _assert_ultrametric(glued.space)
    for _ in range(ULTRA_TRIALS):
        distances = []
        separators = [Fraction(0)]
        cursor = Fraction(0)
        for _ in range(rng.randint(2, 5)):
            t = cursor + Fraction(rng.randint(1, 3), rng.choice((1, 2, 3)))
            cursor = t + Fraction(rng.randint(1, 3), rng.choice((1, 2, 3)))
            distances.append(t)
            separators.append(cursor)
        union = msu.union_ultrametric_family(distances, separators)
        _assert_ultrametric(union.space)
        m = union.space.matrix
        n = len(m)
        for t in distances:
            hits = sum(1 for i in range(n) for j in range(i + 1, n) if m[i][j] == t)
            assert hits == 1, (t, distances, separators)
    _finish(7, "builders stay ultrametric, each target hit once", t0, 10.0)


def test_criterion_08_tripod_embedding_and_corner_cost():
    rng = random.Random(809)
    t0 = time.perf_counter()
    rays = msu.RaySpace.tripod()
    done = 0
    while done < TRIANGLE_TRIALS:
        a, b, c = (rng.uniform(0.1, 10.0) for _ in range(3))
        if a + b <= c or b + c <= a or a + c <= b:
            continue
        done += 1
        tri = msu.Triangle(a, b, c)
        pts = msu.embed_triple_tripod(tri)
        wanted = (tri.c, tri.b, tri.a)
        got = (
            rays.point_distance(pts[0], pts[1]),
            rays.point_distance(pts[0], pts[2]),
            rays.point_distance(pts[1], pts[2]),
        )
        for g, w in zip(got, wanted):
            assert abs(g - w) <= REL_ERR * w, (tri, got, wanted)
        if tri.is_degenerate():
            continue
        ft = msu.fermat_torricelli(tri)
        x2 = (tri.b**2 + tri.c**2 - tri.a**2) / (2 * tri.c)
        y2 = math.sqrt(max(0.0, tri.b**2 - x2**2))
        verts = ((0.0, 0.0), (tri.c, 0.0), (x2, y2))
        for _ in range(COST_SAMPLES):
            q = (rng.uniform(-12.0, 22.0), rng.uniform(-12.0, 12.0))
            cost = sum(math.dist(q, v) for v in verts)
            assert ft.total_cost <= cost + REL_ERR, (tri, q)
    _finish(8, "tripod distances exact, corner cost minimal", t0, 15.0)


def test_criterion_09_puncture_blocks_the_tripod_witness():
    rng = random.Random(907)
    t0 = time.perf_counter()
    rays = msu.RaySpace.tripod()
    for _ in range(PUNCTURE_TRIALS):
        hole = msu.RayPoint(rng.randrange(3), rng.uniform(0.2, 3.0))
        witness = msu.witness_triangle_tripod(hole)
        blocked = msu.solve_constrained_embedding(witness, rays, forbidden=[hole], tol=SOLVER_TOL)
        assert blocked == [], (hole, blocked)
        open_sols = msu.solve_constrained_embedding(witness, rays, forbidden=[], tol=SOLVER_TOL)
        assert open_sols, hole
        for sol in open_sols:
            assert sorted(pt.ray for pt in sol) == [0, 1, 2], (hole, sol)
            assert all(abs(pt.t - hole.t) <= SOLVER_TOL for pt in sol), (hole, sol)
    _finish(9, "witness triangle needs the punctured point", t0, 60.0)


def test_criterion_10_two_ray_angle_thresholds():
    rng = random.Random(1009)
    t0 = time.perf_counter()
    wide = math.pi / 4
    wide_rays = msu.RaySpace.two_rays(wide)
    for _ in range(ANGLE_TRIALS):
        hole = msu.RayPoint(rng.randrange(2), rng.uniform(0.3, 2.5))
        witness = msu.witness_triangle_two_rays(hole, wide)
        sols = msu.solve_constrained_embedding(witness, wide_rays, forbidden=[hole], tol=SOLVER_TOL)
        assert sols == [], (hole, sols)
    narrow = math.pi / 6
    narrow_rays = msu.RaySpace.two_rays(narrow)
    for _ in range(ANGLE_TRIALS):
        hole = msu.RayPoint(rng.randrange(2), rng.uniform(0.3, 2.5))
        witness = msu.witness_triangle_two_rays(hole, narrow)
        sols = msu.solve_constrained_embedding(witness, narrow_rays, forbidden=[hole], tol=SOLVER_TOL)
        assert sols != [], hole
    blunt_rays = msu.RaySpace.two_rays(1.1)
    assert msu.solve_constrained_embedding(msu.Triangle(1, 1, 1), blunt_rays, forbidden=[], tol=SOLVER_TOL) == []
    _finish(10, "two-ray thresholds flip as predicted", t0, 60.0)


def _pairs_at_distance(t):
    """Window scan: every point pair of the negatives-and-naturals space at distance t."""
    found = []
    hi = int(t) + 2
    for n in range(1, hi + 1):
        s = t - n
        if 0 < s < 1:
            found.append((msu.F2Neg(s), msu.F2Nat(n)))
        for m in range(n + 1, hi + 1):
            if m - n == t:
                found.append((msu.F2Nat(n), msu.F2Nat(m)))
    return found


def test_criterion_11_distance_pairs_unique_and_removal_breaks_them():
    rng = random.Random(1103)
    t0 = time.perf_counter()
    done = 0
    while done < DISTANCE_TRIALS:
        den = rng.randint(2, 60)
        t = Fraction(rng.randint(den + 1, 100 * den - 1), den)
        if t.denominator == 1:
            continue
        done += 1
        a, b = msu.f2_embed_distance(t)
        assert msu.f2_point_distance(a, b) == t
        pairs = _pairs_at_distance(t)
        assert pairs in ([(a, b)], [(b, a)]), (t, a, b, pairs)
        for q in (a, b):
            w = msu.f2_removal_witness(q)
            witness_pairs = _pairs_at_distance(w)
            assert witness_pairs, (q, w)
            assert all(q in pr for pr in witness_pairs), (q, w, witness_pairs)
    _finish(11, "pair unique, removal kills its witness distance", t0, 10.0)


def test_criterion_12_minimal_subclass_universal_irredundant_stable():
    rng = random.Random(1201)
    t0 = time.perf_counter()
    for _ in range(SUBCLASS_TRIALS):
        members = [random_space(rng, rng.randint(1, 4)) for _ in range(rng.randint(1, 5))]
        picked = msu.minimal_universal_subclass(msu.SpaceFamily(tuple(members))).members
        for x in members:
            assert any(msu.embeds(x, a) for a in picked)
        for i in range(len(picked)):
            rest = [b for j, b in enumerate(picked) if j != i]
            assert any(not any(msu.embeds(x, b) for b in rest) for x in members)
        for i in range(len(picked)):
            for j in range(i + 1, len(picked)):
                assert msu.compare(picked[i], picked[j]) == msu.Comparability.INCOMPARABLE
        shuffled = list(members)
        rng.shuffle(shuffled)
        again = list(msu.minimal_universal_subclass(msu.SpaceFamily(tuple(shuffled))).members)
        assert len(again) == len(picked)
        for a in picked:
            hit = next(
                (k for k, b in enumerate(again) if msu.compare(a, b) == msu.Comparability.BOTH_EMBED),
                None,
            )
            assert hit is not None, (a.matrix, [b.matrix for b in again])
            again.pop(hit)
    _finish(12, "subclass universal, irredundant, order-stable", t0, 60.0)


def _random_fraction(rng, lo, hi):
    den = rng.choice((1, 2, 3, 4))
    return Fraction(rng.randint(lo * den, hi * den), den)


def test_criterion_13_bridged_samples_metric_with_no_inner_flat_triple():
    rng = random.Random(1301)
    t0 = time.perf_counter()
    for _ in range(BRIDGE_TRIALS):
        first = tuple(sorted((rng.randint(1, 5), rng.randint(1, 5))))
        while True:
            second = tuple(sorted((rng.randint(1, 5), rng.randint(1, 5))))
            if second != first:
                break
        union = msu.union_pl_quadruples([quad(*first), quad(*second)])
        bridge = msu.BridgeParams(
            _random_fraction(rng, -3, 8),
            msu.TaggedPoint(rng.randrange(2), rng.randrange(4)),
            _random_fraction(rng, 1, 4),
        )
        size = rng.randint(3, 6)
        points = []
        while len(points) < size:
            if rng.random() < 0.5:
                cand = msu.RealPoint(_random_fraction(rng, -5, 12))
            else:
                cand = msu.QuadPoint(msu.TaggedPoint(rng.randrange(2), rng.randrange(4)))
            if cand not in points:
                points.append(cand)
        sample = msu.sample_m_space(points, union, bridge)
        assert msu.metric_violations(sample.matrix) == []
        m = sample.matrix
        for i in range(size):
            if not isinstance(points[i], msu.RealPoint):
                continue
            for j in range(i + 1, size):
                if not isinstance(points[j], msu.RealPoint):
                    continue
                lo, hi = sorted((points[i].t, points[j].t))
                if not lo < bridge.p < hi:
                    continue
                for k in range(size):
                    if isinstance(points[k], msu.QuadPoint):
                        assert not msu.is_mb_triple(m[i][j], m[i][k], m[j][k]), (
                            points[i],
                            points[j],
                            points[k],
                            bridge.p,
                        )
    _finish(13, "bridged samples valid, bridge foot never interior", t0, 20.0)
