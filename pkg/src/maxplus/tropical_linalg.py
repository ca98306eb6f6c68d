"""Vectors and matrices over the extended reals with max-plus operations.

A vector is a point of (R u {-inf, +inf})^n.  The semimodule operations
are entrywise max (vec_oplus) and translation by a scalar (vec_scale,
which adds the scalar to every entry with lower addition).  A p x n
matrix acts by

    (A x)_j = max_i ( A[j][i] + x_i )        (lower addition)

and the action is residuated: for each y the set {x | A x <= y} has a
greatest element, computed entrywise by scalar residuals,

    residuated_apply(A, y)_i = min_j ( y_j +' (-A[j][i]) ).

A matrix row whose entries are all -inf sends everything to -inf, and
its residual column is +inf; both operations are total here, no row or
column regularity is assumed.

Storage is dense tuples; the -inf entries are skipped inside the loops
where skipping is sound, so sparse data costs what its finite part
costs (the op counter in extreal only advances on finite additions).

Text formats (whitespace-separated tokens, see extreal.parse_scalar):

    vector:  line "n", then one line of n tokens
    matrix:  line "p n", then p lines of n tokens

format_vector / format_matrix invert the parsers token for token.
"""

from __future__ import annotations

import re

from .errors import DimensionError, ParseError
from .extreal import (NEG_INF, POS_INF, ExtendedReal, format_scalar,
                      lower_add, parse_scalar, scalar, scalar_residual)


class TropicalVector:
    """An immutable point of (R u {-inf, +inf})^n."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(scalar(e) for e in entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, TropicalVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "vector([" + ", ".join(format_scalar(e) for e in self.entries) + "])"


class TropicalMatrix:
    """A p x n matrix; rows are TropicalVectors.  p = 0 is allowed
    (the action then imposes no constraint), so ncols must be passed
    when there is no row to infer it from."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows, ncols=None):
        self.rows = tuple(r if isinstance(r, TropicalVector) else TropicalVector(r)
                          for r in rows)
        if self.rows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise DimensionError(f"ragged rows: widths {sorted(widths)}")
            inferred = widths.pop()
            if ncols is not None and ncols != inferred:
                raise DimensionError(f"ncols {ncols} but rows have width {inferred}")
            self.ncols = inferred
        else:
            if ncols is None:
                raise DimensionError("empty matrix needs an explicit ncols")
            self.ncols = ncols

    @property
    def nrows(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, TropicalMatrix):
            return NotImplemented
        return self.rows == other.rows and self.ncols == other.ncols

    def __repr__(self):
        return f"matrix({list(self.rows)!r}, ncols={self.ncols})"


def vector(entries):
    return TropicalVector(entries)


def matrix(rows, ncols=None):
    return TropicalMatrix(rows, ncols)


def _check_len(x, y):
    if len(x) != len(y):
        raise DimensionError(f"length {len(x)} vs {len(y)}")


def vec_oplus(x, y):
    """Entrywise max."""
    _check_len(x, y)
    return TropicalVector(a if a >= b else b for a, b in zip(x, y))


def vec_meet(x, y):
    """Entrywise min."""
    _check_len(x, y)
    return TropicalVector(a if a <= b else b for a, b in zip(x, y))


def vec_scale(x, lam):
    """Translate every entry by lam (lower addition), the scalar action."""
    lam = scalar(lam)
    return TropicalVector(lower_add(e, lam) for e in x)


def leq(x, y):
    """Entrywise order."""
    _check_len(x, y)
    return all(a <= b for a, b in zip(x, y))


def row_apply(a, x):
    """max_i (a_i + x_i) with lower addition; -inf on empty support."""
    _check_len(a, x)
    best = NEG_INF
    for ai, xi in zip(a, x):
        if ai.is_neg_inf:
            continue
        t = lower_add(ai, xi)
        if t > best:
            best = t
    return best


def mat_apply(A, x):
    """The vector (row_apply(row, x) for each row)."""
    if A.ncols != len(x):
        raise DimensionError(f"matrix has {A.ncols} columns, vector has {len(x)}")
    return TropicalVector(row_apply(r, x) for r in A.rows)


def vec_residual(x, y):
    """The greatest lambda with vec_scale(x, lambda) <= y:

        min_i ( y_i +' (-x_i) ).

    Entries with x_i = -inf impose nothing and are skipped; if every
    entry is skipped or cancels at an infinity the result is +inf.
    """
    _check_len(x, y)
    best = POS_INF
    for xi, yi in zip(x, y):
        if xi.is_neg_inf:
            continue
        t = scalar_residual(xi, yi)
        if t < best:
            best = t
    return best


def residuated_row_preimage(a, t):
    """The greatest x with row_apply(a, x) <= t, entrywise
    scalar_residual(a_i, t)."""
    t = scalar(t)
    return TropicalVector(scalar_residual(ai, t) for ai in a)


def residuated_apply(B, y):
    """The greatest x with mat_apply(B, x) <= y.

    Column i collects min over rows j with B[j][i] > -inf of
    scalar_residual(B[j][i], y_j); an all -inf column yields +inf.
    """
    if B.nrows != len(y):
        raise DimensionError(f"matrix has {B.nrows} rows, vector has {len(y)}")
    out = [POS_INF] * B.ncols
    for row, yj in zip(B.rows, y):
        for i, bij in enumerate(row):
            if bij.is_neg_inf:
                continue
            t = scalar_residual(bij, yj)
            if t < out[i]:
                out[i] = t
    return TropicalVector(out)


def mat_residual(B, Y):
    """The greatest X with B X <= Y, column by column.  Provided for
    completeness; nothing in the solvers needs the matrix form."""
    if B.nrows != Y.nrows:
        raise DimensionError(f"row counts {B.nrows} vs {Y.nrows}")
    cols = []
    for c in range(Y.ncols):
        y = TropicalVector(row[c] for row in Y.rows)
        cols.append(residuated_apply(B, y))
    rows = [[cols[c][j] for c in range(Y.ncols)] for j in range(B.ncols)]
    return TropicalMatrix(rows, ncols=Y.ncols)


# --- text formats ----------------------------------------------------------

_TOKEN = re.compile(r"\S+")


def _token_lines(text):
    """Yield (line_number, [(token, column), ...]) for non-blank lines,
    both numbers 1-based."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(line)]
        if toks:
            yield lineno, toks


def _parse_entry(token, col, lineno, mode):
    try:
        return parse_scalar(token, mode)
    except ValueError as e:
        raise ParseError(str(e), line=lineno, column=col) from None


def _parse_count(token, col, lineno, what):
    if not token.isdigit():
        raise ParseError(f"expected {what}, got {token!r}", line=lineno, column=col)
    return int(token)


def parse_vector(text, mode=None):
    """Parse the "n" + entries format; blank lines are ignored."""
    lines = _token_lines(text)
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise ParseError("empty input, expected a length line") from None
    if len(toks) != 1:
        raise ParseError(f"length line must hold one token, got {len(toks)}",
                         line=lineno, column=toks[1][1])
    n = _parse_count(toks[0][0], toks[0][1], lineno, "a length")
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise ParseError(f"expected {n} entries after the length line") from None
    if len(toks) != n:
        raise ParseError(f"expected {n} entries, got {len(toks)}", line=lineno,
                         column=toks[0][1])
    entries = [_parse_entry(t, c, lineno, mode) for t, c in toks]
    for extra_lineno, extra in lines:
        raise ParseError("trailing tokens after the vector", line=extra_lineno,
                         column=extra[0][1])
    return TropicalVector(entries)


def parse_matrix(text, mode=None):
    """Parse the "p n" + rows format; blank lines are ignored."""
    lines = _token_lines(text)
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise ParseError("empty input, expected a shape line") from None
    if len(toks) != 2:
        raise ParseError(f"shape line must hold two tokens, got {len(toks)}",
                         line=lineno, column=toks[0][1])
    p = _parse_count(toks[0][0], toks[0][1], lineno, "a row count")
    n = _parse_count(toks[1][0], toks[1][1], lineno, "a column count")
    rows = []
    for _ in range(p):
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise ParseError(f"expected {p} rows, got {len(rows)}") from None
        if len(toks) != n:
            raise ParseError(f"expected {n} entries in row, got {len(toks)}",
                             line=lineno, column=toks[0][1])
        rows.append([_parse_entry(t, c, lineno, mode) for t, c in toks])
    for extra_lineno, extra in lines:
        raise ParseError("trailing tokens after the matrix", line=extra_lineno,
                         column=extra[0][1])
    return TropicalMatrix(rows, ncols=n)


def format_vector(x):
    return f"{len(x)}\n" + " ".join(format_scalar(e) for e in x) + "\n"


def format_matrix(A):
    lines = [f"{A.nrows} {A.ncols}"]
    for r in A.rows:
        lines.append(" ".join(format_scalar(e) for e in r))
    return "\n".join(lines) + "\n"
