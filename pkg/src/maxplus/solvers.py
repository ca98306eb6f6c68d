"""Iterative solvers for systems of tropical inequalities A x >= B x.

The solution set V is the intersection of the row half-spaces
H_j = {x | A_j x >= B_j x}, a closed subsemimodule, and both solvers
compute the greatest solution below the starting point u, which is the
canonical projection P_V(u).

cyclic_solve projects onto H_1, ..., H_p in a fixed round-robin: one
sweep applies the p row projections in order, each an O(row support)
update through the canonical projection formula.  power_solve iterates
the whole system at once:

    eta_next = B#(A eta) /\\ eta,

where B# is the residuated action of B (greatest preimage); its fixed
points are exactly the solutions of B x <= A x.  A column of B with no
finite entry contributes +inf to B# and is absorbed by the meet, so it
simply never constrains the iterate; no column condition is imposed.

Both produce entrywise non-increasing iterates converging to P_V(u),
and for every k the sandwich P_V(u) <= xi^{pk} <= eta^k holds, sweeps
of the cyclic method tracking below single power steps.  On integer
data the power method reaches its fixed point within n * d(u, V)
steps, d the projective distance; the reports carry this bound
computed post hoc from the limit.

Termination is an exactly unchanged sweep / step, or, given a
tolerance, one whose largest entry change is below it (entries at an
infinity must match exactly).  There is no finite-time test for
"the only solution below u is bottom": iterates then sink forever, so
feasibility() adds a certified cutoff for integer data, pinning any
coordinate that falls below min(u) - n * D_cap to -inf (such a
coordinate is -inf in the limit once D_cap exceeds the largest
coordinate spread a solution can have, and the default cap
(n + p + 2) * (M + 1) for entry magnitude M does).  Pinned indices are
reported so the cutoff is visible in the output.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DimensionError
from .extreal import NEG_INF, POS_INF, ExtendedReal
from .halfspace import HalfSpace, Kind, canonicalize, classify, project_canonical
from .hilbert_metric import hilbert_distance
from .tropical_linalg import (TropicalMatrix, TropicalVector, leq, mat_apply,
                              residuated_apply, vec_meet)

DEFAULT_MAX_ITERS = 100_000


class Status(enum.Enum):
    SOLVED = "Solved"
    BOTTOM_REACHED = "BottomReached"
    ITERATION_CAP_HIT = "IterationCapHit"


class InequalitySystem:
    """The p inequalities A_j x >= B_j x, shapes equal, p = 0 allowed."""

    __slots__ = ("A", "B")

    def __init__(self, A, B):
        if not isinstance(A, TropicalMatrix) or not isinstance(B, TropicalMatrix):
            raise TypeError("InequalitySystem expects two TropicalMatrix operands")
        if A.nrows != B.nrows or A.ncols != B.ncols:
            raise DimensionError(
                f"shape {A.nrows}x{A.ncols} vs {B.nrows}x{B.ncols}")
        self.A = A
        self.B = B

    @property
    def p(self):
        return self.A.nrows

    @property
    def n(self):
        return self.A.ncols

    def row_halfspaces(self):
        return [HalfSpace(a, b) for a, b in zip(self.A.rows, self.B.rows)]


@dataclass(frozen=True)
class IterationTrace:
    """The distinct iterate values in order, starting at the initial
    point; step_kind "cyclic" records row-step values (cycle_length of
    them per sweep), "power" whole steps."""

    points: tuple
    step_kind: str
    cycle_length: int | None = None


@dataclass(frozen=True)
class SolveReport:
    status: Status
    solution: TropicalVector
    iterations: int
    distance_bound_used: ExtendedReal
    trace: IterationTrace | None = None


@dataclass(frozen=True)
class FeasibilityResult:
    """status "FiniteSolution" carries the nonbottom limit as witness;
    "OnlyBottom" means every solution below the start is bottom.
    pinned lists coordinates forced to -inf by the divergence guard."""

    status: str
    witness: TropicalVector | None
    pinned: tuple = ()


def _is_bottom(x):
    return all(e.is_neg_inf for e in x)


def _max_change_ok(prev, cur, tol):
    """Whether the step prev -> cur counts as unchanged under tol
    (None means exact equality)."""
    if tol is None:
        return prev == cur
    for a, b in zip(prev, cur):
        if a.is_finite and b.is_finite:
            if abs(a.value - b.value) > tol:
                return False
        elif a != b:
            return False
    return True


def _bound_from(u, solution):
    """n * d(u, limit), ordinary product: the post-hoc iteration bound
    for integer data.  Infinite whenever the distance is."""
    d = hilbert_distance(u, solution)
    if not d.is_finite:
        return d
    return ExtendedReal(len(u) * d.value)


def _check_start(S, u):
    if S.n != len(u):
        raise DimensionError(f"system in dimension {S.n}, start has {len(u)}")


def _prepare_rows(S):
    """Classify and canonicalize each row once: Everything rows project
    to the identity and are dropped; a BottomOnly row annihilates, so
    signal it by index."""
    prepared = []
    for j, H in enumerate(S.row_halfspaces()):
        kind = classify(H)
        if kind is Kind.EVERYTHING:
            continue
        if kind is Kind.BOTTOM_ONLY:
            return None, j
        prepared.append(canonicalize(H))
    return prepared, None


def cyclic_solve(S, u, max_iters=DEFAULT_MAX_ITERS, tol=None, keep_trace=False):
    """Round-robin projection onto the row half-spaces.

    max_iters caps the number of sweeps; iterations reports the number
    of sweeps that changed the iterate.
    """
    _check_start(S, u)
    points = [u]
    rows, bottom_row = _prepare_rows(S)

    def report(status, x, sweeps):
        bound = _bound_from(u, x) if status is Status.SOLVED else POS_INF
        trace = IterationTrace(tuple(points), "cyclic", S.p) if keep_trace else None
        return SolveReport(status, x, sweeps, bound, trace)

    if bottom_row is not None:
        bot = TropicalVector([NEG_INF] * S.n)
        if points[-1] != bot:
            points.append(bot)
        return report(Status.BOTTOM_REACHED, bot, 0 if _is_bottom(u) else 1)

    x = u
    sweeps = 0
    while True:
        if sweeps >= max_iters:
            return report(Status.ITERATION_CAP_HIT, x, sweeps)
        before = x
        for C in rows:
            nxt = project_canonical(C, x)
            if nxt != x:
                points.append(nxt)
            x = nxt
        if _max_change_ok(before, x, tol):
            return report(Status.SOLVED, x, sweeps)
        sweeps += 1
        if _is_bottom(x):
            return report(Status.BOTTOM_REACHED, x, sweeps)


def power_solve(S, u, max_iters=DEFAULT_MAX_ITERS, tol=None, keep_trace=False):
    """Whole-system fixed-point iteration eta <- B#(A eta) /\\ eta."""
    _check_start(S, u)
    points = [u]

    def report(status, x, steps):
        bound = _bound_from(u, x) if status is Status.SOLVED else POS_INF
        trace = IterationTrace(tuple(points), "power") if keep_trace else None
        return SolveReport(status, x, steps, bound, trace)

    x = u
    steps = 0
    while True:
        if steps >= max_iters:
            return report(Status.ITERATION_CAP_HIT, x, steps)
        nxt = vec_meet(residuated_apply(S.B, mat_apply(S.A, x)), x)
        if _max_change_ok(x, nxt, tol):
            return report(Status.SOLVED, x, steps)
        points.append(nxt)
        x = nxt
        steps += 1
        if _is_bottom(x):
            return report(Status.BOTTOM_REACHED, x, steps)


def sandwich_check(S, u, k_max=None):
    """Verify limit <= xi^{pk} <= eta^k for all k up to k_max (default:
    until both sequences are stationary).  Returns False as soon as an
    inequality fails or the two limits disagree."""
    _check_start(S, u)
    cyc = cyclic_solve(S, u, keep_trace=True)
    pow_ = power_solve(S, u, keep_trace=True)
    if cyc.status is not Status.SOLVED and cyc.status is not Status.BOTTOM_REACHED:
        return False
    if pow_.status is not Status.SOLVED and pow_.status is not Status.BOTTOM_REACHED:
        return False
    if cyc.solution != pow_.solution:
        return False
    limit = cyc.solution
    sweep_ends = _sweep_ends(S, u)
    steps = list(pow_.trace.points)
    if k_max is None:
        k_max = max(len(sweep_ends), len(steps)) - 1
    for k in range(k_max + 1):
        xi_pk = sweep_ends[min(k, len(sweep_ends) - 1)]
        eta_k = steps[min(k, len(steps) - 1)]
        if not (leq(limit, xi_pk) and leq(xi_pk, eta_k)):
            return False
    return True


def _sweep_ends(S, u):
    """The iterates xi^{p k} of the cyclic method, k = 0, 1, ...,
    ending at the first stationary sweep."""
    rows, bottom_row = _prepare_rows(S)
    if bottom_row is not None:
        return [u, TropicalVector([NEG_INF] * S.n)]
    out = [u]
    x = u
    while True:
        before = x
        for C in rows:
            x = project_canonical(C, x)
        out.append(x)
        if x == before or _is_bottom(x):
            return out


def default_divergence_cap(S, u):
    """(n + p + 2) * (M + 1) for M the largest finite entry magnitude
    in the system and the start; ample for the coordinate spread of any
    nonbottom solution on integer data."""
    m = 1
    entries = [e for row in list(S.A.rows) + list(S.B.rows) for e in row]
    entries.extend(u)
    for e in entries:
        if e.is_finite:
            m = max(m, abs(e.value))
    return (S.n + S.p + 2) * (m + 1)


def feasibility(S, u, max_iters=DEFAULT_MAX_ITERS, divergence_cap=None):
    """Whether some nonbottom solution lies below the finite start u.

    Runs the cyclic method with the divergence guard of the module
    docstring; coordinates that sink below min(u) - n * divergence_cap
    are pinned to -inf (they are -inf in the limit), which turns the
    endless descent of infeasible coordinates into a finite
    computation on integer data.
    """
    _check_start(S, u)
    if not all(e.is_finite for e in u):
        raise ValueError("feasibility needs a finite starting point")
    if S.p == 0:
        return FeasibilityResult("FiniteSolution", u)
    rows, bottom_row = _prepare_rows(S)
    if bottom_row is not None:
        return FeasibilityResult("OnlyBottom", None)
    if divergence_cap is None:
        divergence_cap = default_divergence_cap(S, u)
    floor = ExtendedReal(min(e.value for e in u) - S.n * divergence_cap)
    pinned = set()
    x = u
    for _ in range(max_iters):
        before = x
        for C in rows:
            x = project_canonical(C, x)
        sunk = [i for i, e in enumerate(x) if e.is_finite and e < floor]
        if sunk:
            pinned.update(sunk)
            x = TropicalVector(NEG_INF if i in pinned else e
                               for i, e in enumerate(x))
        if _is_bottom(x):
            return FeasibilityResult("OnlyBottom", None, tuple(sorted(pinned)))
        if x == before:
            return FeasibilityResult("FiniteSolution", x, tuple(sorted(pinned)))
    raise RuntimeError(f"no fixed point within {max_iters} sweeps; "
                       "raise max_iters or lower divergence_cap")
