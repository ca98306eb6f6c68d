"""Shared fixtures and instance generators for the test suite.

Random instances use seeded random.Random so every run sees the same
instances; hypothesis covers the open-ended corners separately.
"""

from __future__ import annotations

import maxplus as mp

NEG = mp.NEG_INF
POS = mp.POS_INF


def v(*entries):
    return mp.vector(entries)


def ring_ineq_system():
    """The 5x6 cycle-of-delays system whose two solver traces are known
    in closed form: row j says x_j <= -1 + x_{j-1} (row 1 closing the
    ring through x_6, which no inequality constrains from above)."""
    n = 6
    rows_a = []
    rows_b = []
    for j in range(5):
        a = [NEG] * n
        a[(j - 1) % n] = mp.scalar(-1)
        b = [NEG] * n
        b[j] = mp.ZERO
        rows_a.append(a)
        rows_b.append(b)
    return mp.InequalitySystem(mp.matrix(rows_a), mp.matrix(rows_b))


RING_LIMIT = v(-1, -2, -3, -4, -5, 0)

RING_CYCLIC_STEPS = [
    v(-1, 0, 0, 0, 0, 0),
    v(-1, -2, 0, 0, 0, 0),
    v(-1, -2, -3, 0, 0, 0),
    v(-1, -2, -3, -4, 0, 0),
    v(-1, -2, -3, -4, -5, 0),
]

RING_POWER_STEPS = [
    v(-1, -1, -1, -1, -1, 0),
    v(-1, -2, -2, -2, -2, 0),
    v(-1, -2, -3, -3, -3, 0),
    v(-1, -2, -3, -4, -4, 0),
    v(-1, -2, -3, -4, -5, 0),
]


def chain_system():
    """x_1 <= max(0, -1 + x_2), x_2 <= x_1, homogenized with the anchor
    x_3 = 0; from (k, k, 0) the distance to the solution set is k."""
    A = mp.matrix([[NEG, -1, 0], [0, NEG, NEG]])
    B = mp.matrix([[0, NEG, NEG], [NEG, 0, NEG]])
    return mp.InequalitySystem(A, B)


# --- figure examples -------------------------------------------------------

# the span of {(0,0,-inf), (-inf,0,-inf), (-inf,-inf,0)}: all v with
# v_2 >= v_1, the running projection example
EVAX_GENS = mp.GeneratedSemimodule([[0, 0, NEG], [NEG, 0, NEG], [NEG, NEG, 0]])
EVAX_X = v(2, 1, 0)
EVAX_P = v(1, 1, 0)

# h_2 >= h_1 as a single inequality
RULTER_H = mp.HalfSpace([NEG, 0, NEG], [0, NEG, NEG])

# max(h_1, h_3) >= h_2: two best-approximation faces
DISJ_H = mp.HalfSpace([0, NEG, 0], [NEG, 0, NEG])
DISJ_X = v(0, 1, 0)

# h_3 >= max(h_1, h_2): a single face strictly inside a ball face
SUBFACE_H = mp.HalfSpace([NEG, NEG, 0], [0, 0, NEG])
SUBFACE_X = v(1, 2, 0)


# --- random instance generators --------------------------------------------

def rand_entry(rng, lo, hi, p_neg_inf):
    if rng.random() < p_neg_inf:
        return NEG
    return mp.scalar(rng.randint(lo, hi))


def rand_vector(rng, n, lo=-8, hi=8, p_neg_inf=0.0, p_pos_inf=0.0):
    out = []
    for _ in range(n):
        r = rng.random()
        if r < p_neg_inf:
            out.append(NEG)
        elif r < p_neg_inf + p_pos_inf:
            out.append(POS)
        else:
            out.append(mp.scalar(rng.randint(lo, hi)))
    return mp.vector(out)


def planted_system(rng, n_max=6, p_max=6, lo=-8, hi=8):
    """A random system together with a planted finite solution sol and
    a finite start u >= sol, so the greatest solution below u is
    nonbottom with finite distance from u."""
    n = rng.randint(1, n_max)
    p = rng.randint(1, p_max)
    sol = [rng.randint(lo, hi) for _ in range(n)]
    rows_a, rows_b = [], []
    for _ in range(p):
        a = [rand_entry(rng, lo, hi, 0.4) for _ in range(n)]
        av = max((e.value + sol_i for e, sol_i in zip(a, sol) if e.is_finite),
                 default=None)
        b = []
        for i in range(n):
            cap = hi if av is None else min(hi, av - sol[i])
            if av is None or cap < lo or rng.random() < 0.5:
                b.append(NEG)
            else:
                b.append(mp.scalar(rng.randint(lo, cap)))
        rows_a.append(a)
        rows_b.append(b)
    S = mp.InequalitySystem(mp.matrix(rows_a, ncols=n), mp.matrix(rows_b, ncols=n))
    u = mp.vector([s + rng.randint(0, 6) for s in sol])
    return S, u, mp.vector(sol)


def rand_halfspace(rng, n, lo=-2, hi=2, p_neg_inf=0.35):
    a = [rand_entry(rng, lo, hi, p_neg_inf) for _ in range(n)]
    b = [rand_entry(rng, lo, hi, p_neg_inf) for _ in range(n)]
    return mp.HalfSpace(a, b)


def rand_semimodule(rng, n, q, lo=-3, hi=3, p_neg_inf=0.2):
    gens = []
    for _ in range(q):
        g = [rand_entry(rng, lo, hi, p_neg_inf) for _ in range(n)]
        if all(e.is_neg_inf for e in g):
            g[rng.randrange(n)] = mp.scalar(rng.randint(lo, hi))
        gens.append(g)
    return mp.GeneratedSemimodule(gens, n=n)


def semimodule_grid_members(V, G):
    """Every supremum of generators scaled by grid values or -inf:
    the finite sample of V the oracle-style checks quantify over."""
    import itertools
    lambdas = [NEG] + G.scalars()
    seen = set()
    out = []
    for combo in itertools.product(lambdas, repeat=len(V.generators)):
        w = mp.vector([NEG] * V.n)
        for g, lam in zip(V.generators, combo):
            w = mp.vec_oplus(w, mp.vec_scale(g, lam))
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out
