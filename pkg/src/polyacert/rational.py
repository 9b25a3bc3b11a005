"""Exact rational arithmetic: backend selection and smallest-denominator search.

All certified computations in this package are carried out on exact
rationals; no float ever enters a certified comparison.  The concrete number
type is swappable:

* ``gmpy2.mpq`` -- GMP-backed compiled arithmetic, used by default when
  gmpy2 imports.  The hot loops (Taylor evaluation, bracket refinement)
  spend nearly all their time in big-integer multiplication and gcd, which
  is exactly what GMP accelerates.
* ``fractions.Fraction`` -- pure-Python fallback, always available.

Set ``POLYACERT_BACKEND=gmpy2`` or ``POLYACERT_BACKEND=fractions`` to force a
backend.  Every algorithm here is pure integer logic, so both backends
produce bit-identical results; ``benchmarks/bench_backends.py`` compares
their speed.

Rationals serialize as ``"p/q"`` (or just ``"p"`` for integers) with the
sign on the numerator; :func:`parse_rational` accepts both forms.
"""
from __future__ import annotations

import os
import re
from fractions import Fraction
from math import isqrt

_requested = os.environ.get("POLYACERT_BACKEND", "auto").lower()
if _requested not in {"auto", "gmpy2", "fractions"}:
    raise ImportError(
        f"POLYACERT_BACKEND={_requested!r} not recognised; use 'gmpy2', 'fractions', or 'auto'"
    )

if _requested in {"auto", "gmpy2"}:
    try:
        from gmpy2 import mpq as _mpq

        RATIONAL_BACKEND = "gmpy2"
    except ImportError:
        if _requested == "gmpy2":
            raise
        _mpq = None
        RATIONAL_BACKEND = "fractions"
else:
    _mpq = None
    RATIONAL_BACKEND = "fractions"

if RATIONAL_BACKEND == "gmpy2":
    Q = type(_mpq(1))

    def rational(numerator=0, denominator=None):
        """Build a backend rational; exact for int, str, Fraction, and float inputs."""
        if denominator is None:
            if isinstance(numerator, Q):
                return numerator
            if isinstance(numerator, Fraction):
                return _mpq(numerator.numerator, numerator.denominator)
            return _mpq(numerator)
        return _mpq(numerator, denominator)

else:
    Q = Fraction

    def rational(numerator=0, denominator=None):
        """Build a backend rational; exact for int, str, Fraction, and float inputs."""
        if denominator is None:
            return Fraction(numerator)
        return Fraction(numerator, denominator)


ZERO = rational(0)
ONE = rational(1)

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def as_rational(value) -> Q:
    """Coerce ``value`` to the backend rational type.

    Accepts backend rationals, ints, Fractions, and strings ``"p/q"``/``"p"``.
    Floats are rejected: silently converting a float would smuggle binary
    rounding into a certified path.  Convert floats explicitly with
    :func:`rational` where a guess is genuinely intended.
    """
    if isinstance(value, Q):
        return value
    if isinstance(value, int):
        return rational(value)
    if isinstance(value, Fraction):
        return rational(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError(
            f"refusing implicit float {value!r} in exact context; pass a rational "
            "(int, Fraction, or 'p/q' string), or call rational() explicitly"
        )
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def numer(q) -> int:
    return int(q.numerator)


def denom(q) -> int:
    return int(q.denominator)


def rat_floor(q) -> int:
    """Exact floor of a rational (rounds toward minus infinity)."""
    return numer(q) // denom(q)


def rat_ceil(q) -> int:
    return -((-numer(q)) // denom(q))


def to_float(q) -> float:
    """Nearest double; for guesses and diagnostics only, never for certified tests."""
    return float(q)


def is_integer(q) -> bool:
    return denom(q) == 1


def format_rational(q) -> str:
    """Canonical string form: ``"p/q"``, or ``"p"`` when the denominator is 1."""
    n, d = numer(q), denom(q)
    return str(n) if d == 1 else f"{n}/{d}"


def parse_rational(text: str) -> Q:
    """Parse ``"p"`` or ``"p/q"`` (sign on the numerator) into a rational."""
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return rational(num, den)


def _simplest_positive(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    """Smallest-denominator fraction in [a/b, c/d] with 0 < a/b <= c/d.

    One continued-fraction step per loop iteration: either the interval
    contains an integer (take the smallest, denominator 1 cannot be beaten)
    or recurse on the reciprocal of the fractional parts.  This walks the
    Stern-Brocot tree in big jumps instead of one mediant at a time.
    """
    terms = []
    while True:
        n, r = divmod(a, b)
        ceil_lo = n if r == 0 else n + 1
        if ceil_lo * d <= c:
            terms.append(ceil_lo)
            break
        terms.append(n)
        # reciprocal of the fractional parts swaps and flips the endpoints:
        # [a/b - n, c/d - n] -> [d/(c - n*d), b/r]
        a, b, c, d = d, c - n * d, b, r
    p, q = terms[-1], 1
    for t in reversed(terms[:-1]):
        p, q = t * p + q, p
    return p, q


def simplest_in(lo, hi) -> Q:
    """The rational with the smallest denominator in the closed interval [lo, hi].

    Ties on the denominator are broken by smallest absolute numerator, then
    by smaller value (both can only occur among integers, where the rule
    picks the integer closest to zero).
    """
    lo = as_rational(lo)
    hi = as_rational(hi)
    if lo > hi:
        raise ValueError(f"empty interval: [{lo}, {hi}]")
    if lo <= 0 <= hi:
        return ZERO
    if hi < 0:
        p, q = _simplest_positive(-numer(hi), denom(hi), -numer(lo), denom(lo))
        return rational(-p, q)
    p, q = _simplest_positive(numer(lo), denom(lo), numer(hi), denom(hi))
    return rational(p, q)


def sqrt_guess(q, resolution) -> Q:
    """Exact rational r with r <= sqrt(q) < r + resolution, via integer square roots.

    No floating point is involved, so guesses seeded from here are identical
    on every platform.  ``resolution`` must be a positive rational.
    """
    n, d = numer(q), denom(q)
    if n < 0:
        raise ValueError("negative radicand")
    rn, rd = numer(resolution), denom(resolution)
    if rn <= 0:
        raise ValueError("resolution must be positive")
    # need scale m with 1/(m*d) <= resolution, i.e. m >= rd/(rn*d)
    m = max(1, -((-rd) // (rn * d)))
    return rational(isqrt(n * d * m * m), m * d)
