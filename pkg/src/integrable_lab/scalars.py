"""Exact rational scalars and t-deformed combinatorial factors.

Every identity in this library is checked over Q, so scalars are
`fractions.Fraction` throughout (arbitrary precision, always in lowest
terms with positive denominator).  The three factors defined here,

    tpoch(a, m, t)  = (1 - a)(1 - a t) ... (1 - a t^(m-1))
    tfact(m, t)     = m!_t = tpoch(t, m, t)
    tbinom(a, b, t) = a!_t / (b!_t (a-b)!_t)

are the building blocks of all state norms, branching coefficients and
Q-matrix entries.
"""

from __future__ import annotations

from fractions import Fraction

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value) -> Fraction:
    """Coerce ints/strings/Fractions to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot coerce {value!r} to an exact scalar")


def parse_scalar(text: str) -> Fraction:
    """Parse the "p/q" or "p" text form, bit-exactly."""
    return Fraction(text.strip())


def format_scalar(value: Fraction) -> str:
    """Emit "p/q" (or "p" when the denominator is 1)."""
    value = as_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def tpoch(a, m: int, t) -> Fraction:
    """t-Pochhammer symbol (a)_m = prod_{j=0}^{m-1} (1 - a t^j); 1 for m = 0."""
    if m < 0:
        raise ValueError("tpoch needs m >= 0")
    a = as_scalar(a)
    t = as_scalar(t)
    result = ONE
    power = ONE
    for _ in range(m):
        result *= ONE - a * power
        power *= t
    return result


def tfact(m: int, t) -> Fraction:
    """t-factorial m!_t = (t)_m."""
    return tpoch(t, m, t)


def tbinom(a: int, b: int, t) -> Fraction:
    """t-binomial coefficient (a choose b)_t; rejects b < 0 or b > a."""
    if not 0 <= b <= a:
        raise ValueError(f"tbinom needs 0 <= b <= a, got a={a}, b={b}")
    t = as_scalar(t)
    return tfact(a, t) / (tfact(b, t) * tfact(a - b, t))
