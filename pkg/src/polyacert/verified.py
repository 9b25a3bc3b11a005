"""Verified rational brackets for sqrt, cos, arccos, and pi.

Every function here returns a :class:`RationalInterval` whose correctness is
established purely by exact rational comparisons:

* square roots are verified by squaring both endpoints;
* cosine is sandwiched between its Taylor polynomials of degree 14 (below)
  and 12 (above), evaluated exactly;
* arccos brackets are verified through the cosine sandwich, using that cos
  is strictly decreasing: ``T12(hi) < x`` forces ``hi > arccos(x)`` and
  ``x < T14(lo)`` forces ``lo < arccos(x)``;
* pi is three times the arccos bracket of 1/2.

Bracket endpoints are picked as the smallest-denominator rationals in
``[guess - 3*eps, guess - eps]`` and ``[guess + eps, guess + 3*eps]`` around a
numeric guess, so certified values stay small and fast to compute.  The guess
is only a hint: if verification fails, eps is divided by 10 and the attempt
repeated (at most 8 times) before giving up.  Square-root guesses come from
exact integer square roots, arccos guesses from the C library's double
``acos``; correctness never depends on either.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, GuessFailedError, NegativeInputError
from .rational import (
    Q,
    ZERO,
    as_rational,
    rational,
    simplest_in,
    sqrt_guess,
    to_float,
)

DEFAULT_EPS = rational(1, 1000)

GUESS_RETRIES = 8

# The alternating Taylor series for cos has terms x^(2k)/(2k)! that decrease
# in magnitude from k=7 onward whenever x^2 <= 15*16, so the degree-12/14
# sandwich is rigorous far beyond the quadrant.  We cap internal evaluations
# at 4 to stay deep inside that regime.
_TAYLOR_SAFE_MAX = rational(4)

# (-1)^k / (2k)! for k = 0..7, exact.
_COS_COEFFS = tuple(
    rational((-1) ** k, math.factorial(2 * k)) for k in range(8)
)


@dataclass(frozen=True)
class RationalInterval:
    """A pair of rationals lo <= hi certified to bracket a real value."""

    lo: Q
    hi: Q

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Q:
        return self.hi - self.lo

    def contains(self, value) -> bool:
        value = as_rational(value)
        return self.lo <= value <= self.hi


def _cos_taylor_pair(x) -> tuple[Q, Q]:
    """(degree-14 value, degree-12 value) of the cos Taylor polynomial at x.

    Requires 0 <= x <= 4 so that the pair brackets cos(x); see module note.
    """
    if x < 0 or x > _TAYLOR_SAFE_MAX:
        raise DomainError(f"Taylor sandwich not validated at x={x}")
    x2 = x * x
    upper = ZERO  # degree 12: k = 0..6
    for coeff in reversed(_COS_COEFFS[:7]):
        upper = upper * x2 + coeff
    # degree 14 appends the k=7 term, which is negative
    pow14 = x2
    for _ in range(6):
        pow14 = pow14 * x2
    return upper + _COS_COEFFS[7] * pow14, upper


def _exact_sqrt(x):
    """The exact rational root when x is a perfect square of a rational, else None.

    Exact roots are taken exactly (a degenerate bracket): they verify by
    squaring like any other endpoint, and stepping strictly below an exact
    root would only waste margin.
    """
    n, d = int(x.numerator), int(x.denominator)
    root_n, root_d = math.isqrt(n), math.isqrt(d)
    if root_n * root_n == n and root_d * root_d == d:
        return rational(root_n, root_d)
    return None


def _bracket_candidates(guess, eps) -> tuple[Q, Q]:
    """Smallest-denominator rationals in the two off-center windows around guess."""
    lo = simplest_in(guess - 3 * eps, guess - eps)
    hi = simplest_in(guess + eps, guess + 3 * eps)
    return lo, hi


def sqrt_bounds(x, eps=DEFAULT_EPS) -> RationalInterval:
    """Rational bracket [r, R] of sqrt(x) with r^2 <= x <= R^2 and R - r <= 6*eps.

    Both endpoint inequalities are verified by exact squaring.  Raises
    NegativeInputError for x < 0.
    """
    x = as_rational(x)
    eps = as_rational(eps)
    if x < 0:
        raise NegativeInputError(f"sqrt of negative value {x}")
    if eps <= 0:
        raise ValueError("eps must be positive")
    exact = _exact_sqrt(x)
    if exact is not None:
        return RationalInterval(exact, exact)
    attempt = eps
    for _ in range(GUESS_RETRIES + 1):
        guess = sqrt_guess(x, attempt / 2**20)
        lo, hi = _bracket_candidates(guess, attempt)
        if lo < 0:
            lo = ZERO
        if lo * lo <= x <= hi * hi:
            return RationalInterval(lo, hi)
        attempt = attempt / 10
    raise GuessFailedError(f"square-root bracket for {x} failed to verify")


@lru_cache(maxsize=None)
def _pi_half_upper_default() -> Q:
    return pi_bounds(DEFAULT_EPS).hi / 2


def cos_bounds(x) -> RationalInterval:
    """Exact Taylor sandwich of cos(x): lo = degree 14, hi = degree 12.

    Domain is (0, pi/2] up to the verified upper bound of pi/2; the sandwich
    is strict there, so lo < cos(x) < hi, and hi - lo = x^14/14!.
    """
    x = as_rational(x)
    if x <= 0 or x > _pi_half_upper_default():
        raise DomainError(f"cos_bounds domain is (0, pi/2-bound], got {x}")
    lower, upper = _cos_taylor_pair(x)
    return RationalInterval(lower, upper)


def arccos_bounds(x, eps=DEFAULT_EPS) -> RationalInterval:
    """Rational bracket of arccos(x) for x in [0, 1], verified via the cos sandwich.

    Conventions: x = 1 uses 0 as the (exact) lower endpoint; x = 0 returns
    half the pi bracket.  Width is at most 6*eps.
    """
    x = as_rational(x)
    eps = as_rational(eps)
    if x < 0 or x > 1:
        raise DomainError(f"arccos_bounds domain is [0, 1], got {x}")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if x == 0:
        # half the pi bracket; pi built at 2*eps/3 keeps the width within 6*eps
        pi = pi_bounds(2 * eps / 3)
        return RationalInterval(pi.lo / 2, pi.hi / 2)

    guess = rational(math.acos(to_float(x)))
    attempt = eps
    for _ in range(GUESS_RETRIES + 1):
        lo, hi = _bracket_candidates(guess, attempt)
        if lo < 0:
            lo = ZERO
        if _verify_arccos(x, lo, hi):
            return RationalInterval(lo, hi)
        attempt = attempt / 10
    raise GuessFailedError(f"arccos bracket for {x} failed to verify")


def _verify_arccos(x, lo, hi) -> bool:
    """Exact check that lo <= arccos(x) <= hi via the Taylor sandwich."""
    if hi <= 0 or hi > _TAYLOR_SAFE_MAX or lo < 0:
        return False
    # upper end: T12(hi) < x gives cos(hi) < x, so hi > arccos(x)
    _, t12_hi = _cos_taylor_pair(hi)
    if not t12_hi < x:
        return False
    if lo == 0:
        return True  # arccos(x) >= 0 always
    # lower end: x < T14(lo) gives x < cos(lo), so lo < arccos(x)
    t14_lo, _ = _cos_taylor_pair(lo)
    return x < t14_lo


_PI_CACHE: dict[tuple[int, int], RationalInterval] = {}


def pi_bounds(eps=DEFAULT_EPS) -> RationalInterval:
    """Verified rational bracket of pi: three times the arccos bracket of 1/2.

    Width is at most 18*eps.  Results are memoised per eps; the cache is
    only ever read or idempotently written, so concurrent use is safe.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    key = (int(eps.numerator), int(eps.denominator))
    cached = _PI_CACHE.get(key)
    if cached is None:
        third = arccos_bounds(rational(1, 2), eps)
        cached = RationalInterval(3 * third.lo, 3 * third.hi)
        _PI_CACHE[key] = cached
    return cached
