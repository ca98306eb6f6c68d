"""Finitely generated semimodules: projection, distance, separation,
orthogonality, and reduction to the support of the target point."""

import random

import pytest

import maxplus as mp
from maxplus.errors import (DimensionError, InfiniteDistanceError,
                            NoSeparationError, UnsupportedCaseError)
from maxplus.oracle import GridSpec, grid_projection
from helpers import (EVAX_GENS, EVAX_P, EVAX_X, NEG, POS, rand_semimodule,
                     rand_vector, semimodule_grid_members, v)

FIN = mp.ExtendedReal


def test_project_known_values():
    V = mp.GeneratedSemimodule([v(0, 0, 0)])
    assert mp.project_semimodule(V, v(2, 1, 0)) == v(0, 0, 0)
    assert mp.project_semimodule(V, v(3, 3, 3)) == v(3, 3, 3)

    plane = mp.GeneratedSemimodule([v(0, NEG), v(NEG, 0)])
    assert mp.project_semimodule(plane, v(5, 7)) == v(5, 7)

    assert mp.project_semimodule(EVAX_GENS, EVAX_X) == EVAX_P

    empty = mp.GeneratedSemimodule([], n=2)
    assert mp.project_semimodule(empty, v(1, 2)) == v(NEG, NEG)


def test_project_dimension_mismatch():
    with pytest.raises(DimensionError):
        mp.project_semimodule(EVAX_GENS, v(0, 0))


def test_distance_to_known_values():
    V = mp.GeneratedSemimodule([v(0, 0, 0)])
    assert mp.distance_to(V, v(4, 4, 4)) == FIN(0)
    assert mp.distance_to(V, v(2, 1, 0)) == FIN(2)
    assert mp.distance_to(EVAX_GENS, EVAX_X) == FIN(1)
    # no combination can reach the support of x
    W = mp.GeneratedSemimodule([v(0, NEG)])
    assert mp.distance_to(W, v(0, 0)) == POS


def test_membership():
    assert mp.membership(EVAX_GENS, v(NEG, 0, NEG))
    assert mp.membership(EVAX_GENS, v(NEG, NEG, NEG))
    assert mp.membership(EVAX_GENS, EVAX_P)
    assert not mp.membership(EVAX_GENS, EVAX_X)
    V = mp.GeneratedSemimodule([v(0, 0, 0), v(NEG, 0, NEG), v(NEG, NEG, 0)])
    assert mp.project_semimodule(V, v(2, 1, 0)) == v(0, 1, 0)
    assert not mp.membership(V, v(2, 1, 0))


def test_universal_halfspace_evax():
    H = mp.universal_halfspace(EVAX_GENS, EVAX_X)
    assert H.a == v(NEG, -1, 0)
    assert H.b == v(-1, NEG, NEG)
    assert mp.contains(H, EVAX_P)
    assert not mp.contains(H, EVAX_X)
    for g in EVAX_GENS.generators:
        assert mp.contains(H, g)
    assert mp.project(H, EVAX_X) == EVAX_P
    assert mp.distance(H, EVAX_X) == mp.distance_to(EVAX_GENS, EVAX_X)
    apex, _ = mp.apex_and_sectors(mp.canonicalize(H))
    assert apex == EVAX_P


def test_universal_halfspace_errors():
    with pytest.raises(NoSeparationError):
        mp.universal_halfspace(EVAX_GENS, EVAX_P)
    W = mp.GeneratedSemimodule([v(0, NEG)])
    with pytest.raises(UnsupportedCaseError, match="reduce"):
        mp.universal_halfspace(W, v(1, 0))


def test_is_orthogonal():
    V = mp.GeneratedSemimodule([v(0, 0, 0)])
    x = v(2, 1, 0)
    assert mp.is_orthogonal(V, x, v(0, 0, 0))
    assert not mp.is_orthogonal(V, x, v(1, 1, 1))
    assert mp.is_orthogonal(EVAX_GENS, EVAX_X, EVAX_P)


def test_orthogonality_of_projection_random():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.choice((2, 3, 4))
        V = rand_semimodule(rng, n, rng.randint(1, 3))
        x = rand_vector(rng, n, -3, 3)
        assert mp.is_orthogonal(V, x, mp.project_semimodule(V, x))


def test_orthogonality_uniqueness_on_grid():
    rng = random.Random(18)
    G = GridSpec(-4, 4)
    checked = 0
    while checked < 30:
        V = rand_semimodule(rng, 2, rng.randint(1, 2))
        x = rand_vector(rng, 2, -2, 2)
        P = mp.project_semimodule(V, x)
        if mp.membership(V, x) or not all(e.is_finite for e in P):
            continue
        checked += 1
        for m in semimodule_grid_members(V, G):
            assert mp.is_orthogonal(V, x, m) == (m == P)


def test_projection_properties_random():
    rng = random.Random(19)
    for _ in range(200):
        n = rng.choice((2, 3))
        V = rand_semimodule(rng, n, rng.randint(1, 3))
        x = rand_vector(rng, n, -3, 3)
        y = rand_vector(rng, n, -3, 3)
        Px = mp.project_semimodule(V, x)
        assert mp.leq(Px, x)
        assert mp.project_semimodule(V, Px) == Px
        assert mp.membership(V, Px)
        if mp.leq(x, y):
            assert mp.leq(Px, mp.project_semimodule(V, y))


def test_projection_is_best_approximation_on_grid():
    rng = random.Random(20)
    G = GridSpec(-4, 4)
    for _ in range(30):
        V = rand_semimodule(rng, 2, rng.randint(1, 2))
        x = rand_vector(rng, 2, -2, 2)
        d = mp.distance_to(V, x)
        for m in semimodule_grid_members(V, G):
            assert d <= mp.hilbert_distance(x, m)


def test_projection_matches_grid_oracle():
    rng = random.Random(21)
    G = GridSpec(-5, 5)
    for _ in range(40):
        V = rand_semimodule(rng, 2, rng.randint(1, 3))
        x = rand_vector(rng, 2, -2, 2)
        assert mp.project_semimodule(V, x) == grid_projection(V, x, G)


def test_separation_random():
    rng = random.Random(22)
    checked = 0
    while checked < 60:
        n = rng.choice((2, 3))
        V = rand_semimodule(rng, n, rng.randint(1, 3))
        x = rand_vector(rng, n, -3, 3)
        P = mp.project_semimodule(V, x)
        if P == x or not all(e.is_finite for e in P):
            continue
        checked += 1
        H = mp.universal_halfspace(V, x)
        assert not mp.contains(H, x)
        for _ in range(10):
            lam = [FIN(rng.randint(-3, 3)) for _ in V.generators]
            m = v(*([NEG] * n))
            for g, s in zip(V.generators, lam):
                m = mp.vec_oplus(m, mp.vec_scale(g, s))
            assert mp.contains(H, m)
        assert mp.project(H, x) == P
        assert mp.distance(H, x) == mp.distance_to(V, x)


def test_part_containment():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.choice((2, 3))
        V = rand_semimodule(rng, n, rng.randint(1, 3), p_neg_inf=0.4)
        x = rand_vector(rng, n, -3, 3, p_neg_inf=0.3)
        P = mp.project_semimodule(V, x)
        if mp.hilbert_distance(x, P).is_finite:
            assert mp.supports(P)[0] == mp.supports(x)[0]


def test_reduce_problem_identity_on_finite():
    x = v(2, 1, 0)
    x2, V2, I = mp.reduce_problem(EVAX_GENS, x)
    assert x2 == x and I == (0, 1, 2)
    assert V2.generators == EVAX_GENS.generators


def test_reduce_problem_drops_coordinates_and_generators():
    V = mp.GeneratedSemimodule([v(0, NEG)])
    x2, V2, I = mp.reduce_problem(V, v(2, NEG))
    assert x2 == v(2) and I == (0,)
    assert V2.generators == (v(0),)
    assert mp.distance_to(V2, x2) == FIN(0)

    V = mp.GeneratedSemimodule([v(0, 0, 0), v(0, NEG, -1)])
    x2, V2, I = mp.reduce_problem(V, v(3, NEG, 1))
    assert x2 == v(3, 1) and I == (0, 2)
    # the full-support generator can never land in the part of x
    assert V2.generators == (v(0, -1),)
    assert mp.distance_to(V2, x2) == FIN(1)
    assert mp.distance_to(V, v(3, NEG, 1)) == FIN(1)


def test_reduce_problem_errors():
    V = mp.GeneratedSemimodule([v(0, 0, 0)])
    with pytest.raises(InfiniteDistanceError):
        mp.reduce_problem(V, v(2, 1, NEG))
    with pytest.raises(UnsupportedCaseError):
        mp.reduce_problem(V, v(0, 0, POS))
    with pytest.raises(UnsupportedCaseError):
        mp.reduce_problem(V, v(NEG, NEG, NEG))


def test_reduce_problem_preserves_distance_and_projection():
    rng = random.Random(24)
    checked = 0
    while checked < 100:
        n = rng.choice((3, 4))
        V = rand_semimodule(rng, n, rng.randint(1, 3), p_neg_inf=0.4)
        x = rand_vector(rng, n, -3, 3, p_neg_inf=0.35)
        if not any(e.is_finite for e in x):
            continue
        d = mp.distance_to(V, x)
        if not d.is_finite:
            continue
        checked += 1
        x2, V2, I = mp.reduce_problem(V, x)
        assert mp.distance_to(V2, x2) == d
        lifted = mp.lift_point(mp.project_semimodule(V2, x2), I, n)
        assert lifted == mp.project_semimodule(V, x)


def test_lift_point():
    assert mp.lift_point(v(3, 1), (0, 2), 3) == v(3, NEG, 1)
    assert mp.lift_point(v(5), (1,), 2) == v(NEG, 5)


def test_generator_text_round_trip():
    text = mp.format_generators(EVAX_GENS)
    W = mp.parse_generators(text)
    assert W.generators == EVAX_GENS.generators
    assert W.n == 3
