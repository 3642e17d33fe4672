"""Independent test oracles.

Everything here decides the same questions as the library through a
different route: exhaustive box enumeration instead of pruned search,
Fourier-Motzkin elimination instead of double description, Caratheodory
subset solves instead of the simplex, and sympy for the normal forms.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors

from coxkit.linalg import QMatrix, solve_square


def box_enumerate(columns, target, functional):
    """All nonnegative integer solutions of sum a_j col_j = target by brute
    force over the box derived from a caller-supplied positive functional.

    ``functional`` must pair >= 1 with every column, which makes the box
    complete: phi(t) bounds every coordinate.
    """
    cols = [tuple(c) for c in columns]
    t = tuple(target)
    phi_t = sum(f * x for f, x in zip(functional, t))
    if phi_t < 0:
        return []
    bounds = []
    for c in cols:
        w = sum(f * x for f, x in zip(functional, c))
        assert w >= 1, "functional must be positive on every column"
        bounds.append(phi_t // w)
    out = []
    for combo in itertools.product(*[range(b + 1) for b in bounds]):
        vec = tuple(
            sum(a * c[i] for a, c in zip(combo, cols)) for i in range(len(t))
        )
        if vec == t:
            out.append(combo)
    return sorted(out)


def fourier_motzkin_dual(rays, rank, cap=20000):
    """An inequality description of cone(rays) via Fourier-Motzkin elimination.

    Variables are (x, lambda); the lambdas are eliminated from
    x = sum lambda_j r_j, lambda >= 0. Redundant output is fine; the caller
    canonicalizes. Only usable at small rank / ray count.
    """
    k = len(rays)
    width = rank + k
    rows: list[tuple[int, ...]] = []
    for i in range(rank):
        row = [0] * width
        row[i] = 1
        for j, r in enumerate(rays):
            row[rank + j] = -r[i]
        rows.append(tuple(row))
        rows.append(tuple(-x for x in row))
    for j in range(k):
        row = [0] * width
        row[rank + j] = 1
        rows.append(tuple(row))

    def reduce(row):
        g = 0
        for x in row:
            g = gcd(g, abs(x))
        if g > 1:
            row = tuple(x // g for x in row)
        return row

    def gcd(a, b):
        while b:
            a, b = b, a % b
        return a

    for var in range(rank + k - 1, rank - 1, -1):
        pos = [r for r in rows if r[var] > 0]
        neg = [r for r in rows if r[var] < 0]
        zero = [r for r in rows if r[var] == 0]
        new = set(zero)
        for p in pos:
            for n in neg:
                combo = tuple(p[var] * nn - n[var] * pp for pp, nn in zip(p, n))
                assert combo[var] == 0
                if any(combo):
                    new.add(reduce(combo))
        rows = sorted(new)
        if len(rows) > cap:
            raise RuntimeError("Fourier-Motzkin blow-up; shrink the instance")
    return sorted({reduce(r[:rank]) for r in rows if any(r[:rank])})


def zero_in_hull_subsets(vectors):
    """Caratheodory-style oracle for 0 in conv(vectors): some subset of
    affinely independent points, size <= d+1, carries a convex combination
    of zero. Uses exact square solves, not the simplex."""
    vecs = [tuple(v) for v in vectors]
    d = len(vecs[0])
    for size in range(1, d + 2):
        for subset in itertools.combinations(vecs, size):
            cols = [list(v) + [1] for v in subset]  # columns of the (d+1) x s system
            rows = [[cols[j][i] for j in range(size)] for i in range(d + 1)]
            square, kept = [], []
            for i, row in enumerate(rows):
                trial = square + [row]
                if _rank(trial) > len(square):
                    square.append(row)
                    kept.append(i)
                if len(square) == size:
                    break
            if len(square) < size:
                continue  # affinely dependent points; a smaller subset suffices
            rhs = [1 if i == d else 0 for i in kept]
            sol = solve_square(QMatrix(square), rhs)
            if any(x < 0 for x in sol):
                continue
            good = all(
                sum(Fraction(rows[i][j]) * sol[j] for j in range(size))
                == (1 if i == d else 0)
                for i in range(d + 1)
            )
            if good:
                return True
    return False


def _rank(rows):
    if not rows:
        return 0
    return Matrix(rows).rank()


def sympy_invariant_factors(int_rows):
    if not int_rows or not int_rows[0]:
        return ()
    return tuple(int(x) for x in invariant_factors(Matrix(int_rows)))


def sympy_inverse(rows):
    m = Matrix([[Fraction(x) for x in row] for row in rows])
    inv = m.inv()
    return [
        [Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(inv.cols)]
        for i in range(inv.rows)
    ]


def random_unimodular(rng, n, steps=12, bound=2):
    """A random determinant +-1 integer matrix from elementary operations."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-bound, bound)
        for k in range(n):
            m[i][k] += c * m[j][k]
    if rng.random() < 0.5 and n > 1:
        m[0], m[1] = m[1], m[0]
    return m
