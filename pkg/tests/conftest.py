"""Shared builders and brute-force oracles for the test suite."""

from fractions import Fraction
from itertools import permutations
import random

import msu


def from_coords(coords):
    return msu.validate_space([[abs(a - b) for b in coords] for a in coords])


def equilateral(n, d=1):
    return msu.validate_space([[0 if i == j else d for j in range(n)] for i in range(n)])


def quad(a, b):
    # Four-cycle with sides a, b, a, b and both diagonals a + b.
    s = a + b
    return msu.validate_space(
        [
            [0, a, s, b],
            [a, 0, b, s],
            [s, b, 0, a],
            [b, s, a, 0],
        ]
    )


def pair(d):
    return msu.validate_space([[0, d], [d, 0]])


def random_int_metric(rng: random.Random, n: int, lo=1, hi=9):
    """Shortest-path closure of a random complete integer-weighted graph."""
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = rng.randint(lo, hi)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                via = m[i][k] + m[k][j]
                if via < m[i][j]:
                    m[i][j] = via
    return m


def random_rational_metric(rng: random.Random, n: int, dens=(1, 2, 3, 4, 5)):
    den = rng.choice(dens)
    m = random_int_metric(rng, n)
    return [[Fraction(v, den) for v in row] for row in m]


def random_space(rng: random.Random, n: int):
    return msu.validate_space(random_rational_metric(rng, n))


def random_two_value(rng: random.Random, n: int):
    # a < b <= 2a keeps every triple valid regardless of the pattern.
    a = rng.randint(1, 5)
    b = rng.randint(a, 2 * a)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = rng.choice((a, b))
    return msu.validate_space(m)


def random_ultrametric_matrix(rng: random.Random, n: int, top=None):
    if top is None:
        top = Fraction(rng.randint(4, 12))
    if n == 1:
        return [[Fraction(0)]]
    k = rng.randint(2, n)
    cuts = sorted(rng.sample(range(1, n), k - 1)) if k > 1 else []
    sizes, prev = [], 0
    for c in cuts + [n]:
        sizes.append(c - prev)
        prev = c
    shrink = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 4))
    blocks = [random_ultrametric_matrix(rng, s, top * rng.choice(shrink)) for s in sizes]
    m = [[top] * n for _ in range(n)]
    at = 0
    for block in blocks:
        bn = len(block)
        for i in range(bn):
            for j in range(bn):
                m[at + i][at + j] = block[i][j]
        at += bn
    return m


def random_ultrametric(rng: random.Random, n: int):
    return msu.validate_space(random_ultrametric_matrix(rng, n))


def brute_embeddings(dom, cod):
    """All distance-preserving injections, by exhaustive enumeration."""
    found = []
    for image in permutations(range(cod.n), dom.n):
        if all(
            cod.close(dom.dist(i, j), cod.dist(image[i], image[j]))
            for i in range(dom.n)
            for j in range(i + 1, dom.n)
        ):
            found.append(image)
    return found


def brute_line_embeddable(space):
    """Exhaustive sign-choice placement on the real line."""
    n = space.n
    if n <= 1:
        return True
    for signs in range(1 << (n - 1)):
        coords = [0]
        for t in range(1, n):
            r = space.dist(0, t)
            coords.append(r if signs >> (t - 1) & 1 else -r)
        if all(
            abs(coords[i] - coords[j]) == space.dist(i, j)
            for i in range(n)
            for j in range(i + 1, n)
        ):
            return True
    return False


def all_simple_cycles(n, edges):
    """Vertex tuples of every simple cycle, smallest vertex first."""
    adj = {i: {} for i in range(n)}
    for i, j, w in edges:
        adj[i][j] = w
        adj[j][i] = w
    cycles = []

    def extend(path, seen):
        head, tail = path[0], path[-1]
        for nxt in adj[tail]:
            if nxt == head and len(path) >= 3:
                if path[1] < path[-1]:  # one orientation per cycle
                    cycles.append(tuple(path))
            elif nxt > head and nxt not in seen:
                extend(path + [nxt], seen | {nxt})

    for s in range(n):
        extend([s], {s})
    return cycles


def cycle_weight_oracle(n, edges):
    """Every edge of every simple cycle carries at most half the cycle weight."""
    lookup = {}
    for i, j, w in edges:
        lookup[(i, j)] = lookup[(j, i)] = w
    for cyc in all_simple_cycles(n, edges):
        ring = list(cyc) + [cyc[0]]
        total = sum(lookup[(ring[t], ring[t + 1])] for t in range(len(cyc)))
        for t in range(len(cyc)):
            if 2 * lookup[(ring[t], ring[t + 1])] > total:
                return False
    return True
