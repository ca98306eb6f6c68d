"""Closed max-plus half-spaces of (R u {-inf})^n and best approximation.

A half-space is the solution set of one tropical linear inequality

    H = {h | max_i (a_i + h_i) >= max_i (b_i + h_i)},

with coefficients a, b in R u {-inf} (no +inf).  Every proper H (one
that is neither everything nor just the bottom vector) has a canonical
form with disjoint coefficient supports: drop a_i where a_i < b_i and
drop b_j where a_j >= b_j; the set does not change.

With canonical coefficients (a', b'), writing I = Supp a', J = Supp b':

  * projection: the greatest element of H below x is
        P_H(x)_k = min( x_k, (a'x) - b'_k )
    (the second term read as a scalar residual, so +inf off J);

  * distance: for x outside H, the projective distance from x to H is
        d(x, H) = (bx) - (a'x)
    as a scalar residual a'x \\ bx, hence +inf exactly when a'x = -inf;

  * apex: the vector -(a' oplus b') entrywise, +inf off I u J.  H is
    the union over i in I of the sectors
        {h | h_i - apex_i >= h_j - apex_j for all j /= i},
    each of which is again a half-space;

  * best approximations: for x in (R u {-inf})^n outside H at finite
    distance, the set of points of H nearest to x is a finite union of
    boxes lying on faces of the distance ball, one per index i
    attaining a'x.  Normalizing the free additive parameter to 0, the
    face with pivot i is

        h_i = -a'_i,
        h_j = -b'_j                    for every j attaining b'x,
        x_k - bx  <=  h_k  <=  P_H(x)_k - a'x   for all other k,

    the whole face then being translated by any finite amount.

Indices are 0-based everywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (ClassificationError, DimensionError,
                     InfiniteDistanceError, ParseError, PointInSetError,
                     UnsupportedCaseError)
from .extreal import (NEG_INF, POS_INF, ExtendedReal, format_scalar,
                      lower_add, negate, scalar_residual)
from .hilbert_metric import hilbert_distance
from .tropical_linalg import (TropicalVector, _parse_count, _parse_entry,
                              _token_lines, residuated_row_preimage,
                              row_apply, vec_meet, vec_oplus)


class Kind(enum.Enum):
    EVERYTHING = "Everything"
    BOTTOM_ONLY = "BottomOnly"
    PROPER = "Proper"


def _check_coefficients(v, what):
    for e in v:
        if e.is_pos_inf:
            raise UnsupportedCaseError(f"{what} coefficients must lie in "
                                       "R u {-inf}, found +inf")
    return v


class HalfSpace:
    """The inequality a.h >= b.h; a and b have equal length and no
    +inf entries."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a = a if isinstance(a, TropicalVector) else TropicalVector(a)
        b = b if isinstance(b, TropicalVector) else TropicalVector(b)
        if len(a) != len(b):
            raise DimensionError(f"coefficient lengths {len(a)} vs {len(b)}")
        self.a = _check_coefficients(a, "left")
        self.b = _check_coefficients(b, "right")

    @property
    def n(self):
        return len(self.a)

    def __eq__(self, other):
        if not isinstance(other, HalfSpace):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __repr__(self):
        return f"HalfSpace({self.a!r}, {self.b!r})"


@dataclass(frozen=True)
class CanonicalHalfSpace:
    """Coefficients with disjoint supports defining the same set.
    I = Supp a_prime, J = Supp b_prime; J is nonempty (proper input)."""

    a_prime: TropicalVector
    b_prime: TropicalVector
    I: frozenset
    J: frozenset

    @property
    def n(self):
        return len(self.a_prime)

    def halfspace(self):
        return HalfSpace(self.a_prime, self.b_prime)


@dataclass(frozen=True)
class Sector:
    """One of the half-spaces whose union over pivots in I rebuilds a
    proper half-space around its apex."""

    pivot: int
    halfspace: HalfSpace


@dataclass(frozen=True)
class FaceBox:
    """One face of the best-approximation set, at parameter zero.

    fixed maps indices to pinned values (the pivot and every index
    attaining b'x); box maps each remaining index to (low, high).
    Members are the vectors obtained by adding one finite constant to
    every pinned value and bound.
    """

    pivot: int
    fixed: dict
    box: dict

    def contains(self, h):
        lam = h[self.pivot]
        if not lam.is_finite:
            return False
        lam = ExtendedReal(lam.value - self.fixed[self.pivot].value)
        for j, v in self.fixed.items():
            if h[j] != lower_add(v, lam):
                return False
        for k, (lo, hi) in self.box.items():
            if not lower_add(lo, lam) <= h[k] <= lower_add(hi, lam):
                return False
        return True


@dataclass(frozen=True)
class BestApproxSet:
    """The distance from x to the half-space and the faces whose union
    is the set of nearest points."""

    base_distance: ExtendedReal
    faces: tuple

    def contains(self, h):
        return any(f.contains(h) for f in self.faces)


def contains(H, h):
    if H.n != len(h):
        raise DimensionError(f"half-space in dimension {H.n}, point has {len(h)}")
    return row_apply(H.a, h) >= row_apply(H.b, h)


def classify(H):
    if all(ai >= bi for ai, bi in zip(H.a, H.b)):
        return Kind.EVERYTHING
    if all(ai < bi for ai, bi in zip(H.a, H.b)):
        return Kind.BOTTOM_ONLY
    return Kind.PROPER


def canonicalize(H):
    kind = classify(H)
    if kind is not Kind.PROPER:
        raise ClassificationError(f"cannot canonicalize a {kind.value} half-space")
    a_prime = []
    b_prime = []
    I, J = set(), set()
    for i, (ai, bi) in enumerate(zip(H.a, H.b)):
        if ai >= bi:
            a_prime.append(ai)
            b_prime.append(NEG_INF)
            if not ai.is_neg_inf:
                I.add(i)
        else:
            a_prime.append(NEG_INF)
            b_prime.append(bi)
            J.add(i)
    return CanonicalHalfSpace(TropicalVector(a_prime), TropicalVector(b_prime),
                              frozenset(I), frozenset(J))


def apex_and_sectors(C):
    """The apex of the canonical half-space and its sector cover.

    apex = -(a' oplus b') entrywise; it is finite iff I u J covers all
    coordinates.  The sector with pivot i in I is the half-space
    h_i - apex_i >= max over j /= i of (h_j - apex_j).
    """
    merged = vec_oplus(C.a_prime, C.b_prime)
    apex = TropicalVector(negate(e) for e in merged)
    sectors = []
    for i in sorted(C.I):
        a_row = [NEG_INF] * C.n
        a_row[i] = merged[i]
        b_row = list(merged)
        b_row[i] = NEG_INF
        sectors.append(Sector(i, HalfSpace(a_row, b_row)))
    return apex, sectors


def project_canonical(C, x):
    """x wedge the greatest preimage of a'x under b'; correct whether
    or not x is already in the set."""
    return vec_meet(x, residuated_row_preimage(C.b_prime, row_apply(C.a_prime, x)))


def project(H, x):
    """The greatest element of H below x."""
    if H.n != len(x):
        raise DimensionError(f"half-space in dimension {H.n}, point has {len(x)}")
    kind = classify(H)
    if kind is Kind.EVERYTHING:
        return x
    if kind is Kind.BOTTOM_ONLY:
        return TropicalVector([NEG_INF] * H.n)
    return project_canonical(canonicalize(H), x)


def distance(H, x):
    """Projective distance from x to H: 0 for members with a finite
    entry, -inf for all-infinite members, (a'x)\\(bx) otherwise."""
    if H.n != len(x):
        raise DimensionError(f"half-space in dimension {H.n}, point has {len(x)}")
    kind = classify(H)
    if kind is Kind.EVERYTHING or contains(H, x):
        return hilbert_distance(x, x)
    if kind is Kind.BOTTOM_ONLY:
        # H = {bottom} and x is not bottom
        return POS_INF
    C = canonicalize(H)
    return scalar_residual(row_apply(C.a_prime, x), row_apply(H.b, x))


def _reject_pos_inf(x):
    for e in x:
        if e.is_pos_inf:
            raise UnsupportedCaseError(
                "best approximation handles points of (R u {-inf})^n only")


def _argmax(row, x, value):
    return [i for i in range(len(x))
            if lower_add(row[i], x[i]) == value]


def _prepared(H, x):
    """Shared validation for the best-approximation operations: returns
    (canonical, a'x, b'x, distance) for x outside H at finite distance."""
    if H.n != len(x):
        raise DimensionError(f"half-space in dimension {H.n}, point has {len(x)}")
    _reject_pos_inf(x)
    kind = classify(H)
    if kind is Kind.EVERYTHING or contains(H, x):
        raise PointInSetError("the point already lies in the half-space")
    if kind is Kind.BOTTOM_ONLY:
        raise InfiniteDistanceError(
            "the half-space is the bottom vector alone; distance is +inf")
    C = canonicalize(H)
    ax = row_apply(C.a_prime, x)
    bx = row_apply(C.b_prime, x)  # = bx for the original b since x is outside
    d = scalar_residual(ax, bx)
    if d.is_pos_inf:
        raise InfiniteDistanceError(
            "a'x = -inf: every point of the half-space is at distance +inf")
    return C, ax, bx, d


def best_approx_set(H, x):
    """All nearest points of H to x, as a union of translated boxes.

    One face per index attaining a'x; see the module docstring for the
    shape of each face.
    """
    C, ax, bx, d = _prepared(H, x)
    P = project_canonical(C, x)
    neg_ax, neg_bx = negate(ax), negate(bx)
    fixed_b = {j: negate(C.b_prime[j]) for j in _argmax(C.b_prime, x, bx)}
    faces = []
    for i in _argmax(C.a_prime, x, ax):
        fixed = dict(fixed_b)
        fixed[i] = negate(C.a_prime[i])
        box = {}
        for k in range(len(x)):
            if k in fixed:
                continue
            box[k] = (lower_add(x[k], neg_bx), lower_add(P[k], neg_ax))
        faces.append(FaceBox(i, fixed, box))
    return BestApproxSet(d, tuple(faces))


def is_best_approx(H, x, h):
    """Whether h minimizes the distance from x to H, by the direct
    two-sided envelope test

        a'h >= b'h > -inf   and   x + (a'h - bx) <= h <= x + (b'h - a'x).
    """
    C, ax, bx, _ = _prepared(H, x)
    if len(h) != len(x):
        raise DimensionError(f"points of lengths {len(x)} vs {len(h)}")
    for e in h:
        if e.is_pos_inf:
            return False
    ah = row_apply(C.a_prime, h)
    bh = row_apply(C.b_prime, h)
    if bh.is_neg_inf or ah < bh:
        return False
    lo_shift = lower_add(ah, negate(bx))
    hi_shift = lower_add(bh, negate(ax))
    for xk, hk in zip(x, h):
        if not lower_add(xk, lo_shift) <= hk <= lower_add(xk, hi_shift):
            return False
    return True


# --- text format -----------------------------------------------------------

def parse_halfspace(text, mode=None):
    """Parse "n" then the a row then the b row."""
    lines = _token_lines(text)
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise ParseError("empty input, expected a dimension line") from None
    if len(toks) != 1:
        raise ParseError(f"dimension line must hold one token, got {len(toks)}",
                         line=lineno, column=toks[1][1])
    n = _parse_count(toks[0][0], toks[0][1], lineno, "a dimension")
    rows = []
    for name in ("a", "b"):
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise ParseError(f"expected the {name} row") from None
        if len(toks) != n:
            raise ParseError(f"expected {n} entries in the {name} row, got "
                             f"{len(toks)}", line=lineno, column=toks[0][1])
        rows.append([_parse_entry(t, c, lineno, mode) for t, c in toks])
    for extra_lineno, extra in lines:
        raise ParseError("trailing tokens after the half-space",
                         line=extra_lineno, column=extra[0][1])
    return HalfSpace(rows[0], rows[1])


def format_halfspace(H):
    lines = [str(H.n),
             " ".join(format_scalar(e) for e in H.a),
             " ".join(format_scalar(e) for e in H.b)]
    return "\n".join(lines) + "\n"
