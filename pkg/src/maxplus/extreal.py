"""Extended-real scalars with the two max-plus addition conventions.

The scalar set is R together with -inf and +inf.  Real addition extends
to the infinities in two inequivalent ways, differing only on the pair
(-inf, +inf):

    lower addition   a  + b :  (-inf) + (+inf) = -inf   (-inf absorbs)
    upper addition   a +' b :  (-inf) + (+inf) = +inf   (+inf absorbs)

Lower addition is the multiplication of the complete max-plus semiring;
upper addition is its order dual and enters through residuation:

    scalar_residual(mu, nu) = nu +' (-mu)

is the largest lambda with mu + lambda <= nu (a Galois connection).
The two are De Morgan duals: -(a +' b) = (-a) + (-b).

Finite payloads are exact (int / Fraction) or float.  Exactness is a
property of the payloads, not of this module: all comparisons here are
exact on tag and value; tolerances exist only in solver termination.

A module-level counter tallies finite+finite additions performed by
lower_add/upper_add; the solver complexity tests read it.  It is a
diagnostic, not synchronized across threads.
"""

from __future__ import annotations

from fractions import Fraction

_NEG, _FIN, _POS = -1, 0, 1

# finite+finite additions since last reset_op_count(); see module docstring
_op_count = 0


class ExtendedReal:
    """A scalar tagged as -inf, finite, or +inf.

    Use the module constants NEG_INF / POS_INF for the infinities and
    scalar() to coerce arbitrary Python numbers or text tokens.  The
    constructor itself accepts only genuinely finite numbers.
    """

    __slots__ = ("tag", "value")

    def __init__(self, value):
        if isinstance(value, float):
            if value != value or value in (float("inf"), float("-inf")):
                raise ValueError(f"not a finite payload: {value!r}")
        elif isinstance(value, Fraction):
            if value.denominator == 1:
                value = int(value)
        elif not isinstance(value, int):
            raise TypeError(f"unsupported payload type: {type(value).__name__}")
        self.tag = _FIN
        self.value = value

    @property
    def is_finite(self):
        return self.tag == _FIN

    @property
    def is_neg_inf(self):
        return self.tag == _NEG

    @property
    def is_pos_inf(self):
        return self.tag == _POS

    def _key(self):
        # tags order -1 < 0 < 1 and finite payloads compare numerically,
        # so (tag, value) is a total order key
        return (self.tag, self.value)

    def __eq__(self, other):
        if not isinstance(other, ExtendedReal):
            return NotImplemented
        return self.tag == other.tag and self.value == other.value

    def __hash__(self):
        return hash((self.tag, self.value))

    def __lt__(self, other):
        return self._key() < other._key()

    def __le__(self, other):
        return self._key() <= other._key()

    def __gt__(self, other):
        return self._key() > other._key()

    def __ge__(self, other):
        return self._key() >= other._key()

    def __repr__(self):
        return f"ExtendedReal({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _make_inf(tag):
    s = object.__new__(ExtendedReal)
    s.tag = tag
    s.value = 0
    return s


NEG_INF = _make_inf(_NEG)
POS_INF = _make_inf(_POS)
ZERO = ExtendedReal(0)


def scalar(v):
    """Coerce a Python number, token string, or ExtendedReal to ExtendedReal.

    Floats that encode infinities map to the constants; strings go
    through parse_scalar.
    """
    if isinstance(v, ExtendedReal):
        return v
    if isinstance(v, str):
        return parse_scalar(v)
    if isinstance(v, float):
        if v == float("inf"):
            return POS_INF
        if v == float("-inf"):
            return NEG_INF
    return ExtendedReal(v)


def lower_add(a, b):
    """a + b with (-inf) + (+inf) = -inf: the max-plus multiplication."""
    if a.tag == _FIN and b.tag == _FIN:
        global _op_count
        _op_count += 1
        return ExtendedReal(a.value + b.value)
    if a.tag == _NEG or b.tag == _NEG:
        return NEG_INF
    return POS_INF


def upper_add(a, b):
    """a +' b with (-inf) +' (+inf) = +inf: the dual addition."""
    if a.tag == _FIN and b.tag == _FIN:
        global _op_count
        _op_count += 1
        return ExtendedReal(a.value + b.value)
    if a.tag == _POS or b.tag == _POS:
        return POS_INF
    return NEG_INF


def negate(a):
    """The opposite scalar; swaps the infinities."""
    if a.tag == _FIN:
        return ExtendedReal(-a.value)
    return NEG_INF if a.tag == _POS else POS_INF


def scalar_residual(mu, nu):
    """The largest lambda with mu + lambda <= nu, i.e. nu +' (-mu).

    Finite iff both arguments are finite; +inf iff mu = -inf or
    nu = +inf.
    """
    return upper_add(nu, negate(mu))


def op_count():
    """Finite additions performed since the last reset (diagnostic)."""
    return _op_count


def reset_op_count():
    global _op_count
    _op_count = 0


# --- text tokens -----------------------------------------------------------

_NEG_TOKENS = frozenset({"-inf", "-Inf", "-INF", "-infinity", "-Infinity"})
_POS_TOKENS = frozenset({"+inf", "inf", "+Inf", "Inf", "+INF", "INF",
                         "+infinity", "infinity", "+Infinity", "Infinity"})


def parse_scalar(token, mode=None):
    """Parse one token: an infinity, a decimal integer, a decimal
    fraction like "2.5", or a ratio like "5/2".

    mode "int" restricts finite tokens to integers (exact backend);
    mode "float" makes finite tokens floats; mode None keeps integers
    exact and everything else float.
    """
    if token in _NEG_TOKENS:
        return NEG_INF
    if token in _POS_TOKENS:
        return POS_INF
    try:
        if mode == "int":
            return ExtendedReal(int(token))
        if "/" in token:
            num = Fraction(token)
            return ExtendedReal(float(num) if mode == "float" else num)
        if mode == "float":
            return ExtendedReal(float(token))
        try:
            return ExtendedReal(int(token))
        except ValueError:
            return ExtendedReal(float(token))
    except (ValueError, ZeroDivisionError):
        kind = "an integer" if mode == "int" else "a numeric"
        raise ValueError(f"not {kind} token: {token!r}") from None


def format_scalar(a):
    """Token for a scalar; inverse of parse_scalar for every backend."""
    if a.tag == _NEG:
        return "-inf"
    if a.tag == _POS:
        return "+inf"
    if isinstance(a.value, Fraction):
        return f"{a.value.numerator}/{a.value.denominator}"
    return repr(a.value)
