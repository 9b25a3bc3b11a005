"""Certification loop for the planar Neumann counting inequality, and its verifier.

The inequality being certified is ``count(lam) > lam^2/4`` on an interval of
spectral parameters.  One step at ``lam`` computes the certified lower count
``p``, the margin ``e = p - lam^2/4``, and, because the count is
non-decreasing in ``lam``, the inequality then persists up to the positive
root of ``x^2/4 = lam^2/4 + e``.  Advancing ``lam`` to a verified rational
lower bound of ``sqrt(lam^2 + 4e)`` therefore chains the steps into a cover
of the whole interval, provided every margin stays positive.

A :class:`Certificate` records each step as exact rationals, together with
the accuracy parameter and the pi bracket in force, so that an independent
party can replay every inequality without floating point.
:func:`verify_certificate` is that independent replay: it re-checks the
margin identity and positivity, re-derives a fresh certified count, checks
the squared step inequality by cross multiplication, and checks the chaining
and final coverage.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import EpsTooCoarseError, StallError, StepFailedError
from .lattice import count_neumann2_certified_lower
from .rational import Q, as_rational, format_rational, parse_rational, rational
from .verified import DEFAULT_EPS, pi_bounds, sqrt_bounds

_DELTA_RETRIES = 6
_MAX_STEPS = 100_000


@dataclass(frozen=True)
class CertificateStep:
    """One certification step: all fields exact rationals (and one integer)."""

    index: int
    lam: Q
    p_lower: int
    e_lower: Q
    delta_lower: Q


@dataclass
class Certificate:
    """Replayable proof object for the counting inequality on [start, target]."""

    eps: Q
    lambda_start: Q
    lambda_target: Q
    pi_lower: Q
    pi_upper: Q
    steps: list[CertificateStep] = field(default_factory=list)
    success: bool = False

    def to_json_dict(self) -> dict:
        return {
            "eps": format_rational(self.eps),
            "lambda_start": format_rational(self.lambda_start),
            "lambda_target": format_rational(self.lambda_target),
            "pi_lower": format_rational(self.pi_lower),
            "pi_upper": format_rational(self.pi_upper),
            "steps": [
                {
                    "index": step.index,
                    "lambda": format_rational(step.lam),
                    "p_lower": step.p_lower,
                    "e_lower": format_rational(step.e_lower),
                    "delta_lower": format_rational(step.delta_lower),
                }
                for step in self.steps
            ],
            "success": self.success,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Certificate":
        steps = [
            CertificateStep(
                index=int(raw["index"]),
                lam=parse_rational(raw["lambda"]),
                p_lower=int(raw["p_lower"]),
                e_lower=parse_rational(raw["e_lower"]),
                delta_lower=parse_rational(raw["delta_lower"]),
            )
            for raw in data["steps"]
        ]
        return cls(
            eps=parse_rational(data["eps"]),
            lambda_start=parse_rational(data["lambda_start"]),
            lambda_target=parse_rational(data["lambda_target"]),
            pi_lower=parse_rational(data["pi_lower"]),
            pi_upper=parse_rational(data["pi_upper"]),
            steps=steps,
            success=bool(data["success"]),
        )

    def dump(self, path) -> None:
        with open(path, "w") as handle:
            json.dump(self.to_json_dict(), handle, indent=2)
            handle.write("\n")

    @classmethod
    def load(cls, path) -> "Certificate":
        with open(path) as handle:
            return cls.from_json_dict(json.load(handle))


def gap_endpoints(eps=DEFAULT_EPS) -> tuple[Q, Q]:
    """Verified rational cover of the interval not settled analytically.

    The analytic results leave open exactly the spectral parameters between
    2*sqrt(3) and 6*pi/(3*pi - 8).  Returns (start, target) with
    start <= 2*sqrt(3) (a verified lower bound of sqrt(12)) and
    target >= 6*pi/(3*pi - 8) (monotone in pi: the upper pi bound in the
    numerator and the lower in the denominator overshoot the true value).
    """
    eps = as_rational(eps)
    start = sqrt_bounds(rational(12), eps).lo
    pi = pi_bounds(eps)
    denominator = 3 * pi.lo - 8
    if denominator <= 0:
        raise EpsTooCoarseError(
            f"pi lower bound {pi.lo} too coarse to separate 3*pi from 8; shrink eps"
        )
    return start, 6 * pi.hi / denominator


def certify(lambda_start, lambda_target, eps=DEFAULT_EPS) -> Certificate:
    """Run the certification loop from lambda_start until past lambda_target.

    Raises StepFailedError (margin not positive) or StallError (step size not
    positive even after shrinking eps) instead of returning an unsound
    certificate; the exception carries the partial certificate for
    inspection.
    """
    lam = as_rational(lambda_start)
    target = as_rational(lambda_target)
    eps = as_rational(eps)
    if not 0 < lam < target:
        raise ValueError(f"need 0 < start < target, got start={lam}, target={target}")
    if eps <= 0:
        raise ValueError("eps must be positive")
    pi = pi_bounds(eps)
    cert = Certificate(
        eps=eps,
        lambda_start=lam,
        lambda_target=target,
        pi_lower=pi.lo,
        pi_upper=pi.hi,
    )
    index = 0
    while lam <= target:
        index += 1
        if index > _MAX_STEPS:
            raise StallError(f"no convergence after {_MAX_STEPS} steps")
        p = count_neumann2_certified_lower(lam, eps).value
        e = p - lam * lam / 4
        if e <= 0:
            raise StepFailedError(lam, e, cert)
        next_lam = None
        attempt = eps
        for _ in range(_DELTA_RETRIES + 1):
            candidate = sqrt_bounds(lam * lam + 4 * e, attempt).lo
            if candidate > lam:
                next_lam = candidate
                break
            attempt = attempt / 10
        if next_lam is None:
            raise StallError(f"step size stayed non-positive at lambda={lam}")
        cert.steps.append(
            CertificateStep(index=index, lam=lam, p_lower=p, e_lower=e, delta_lower=next_lam - lam)
        )
        lam = next_lam
    cert.success = True
    return cert


PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class StepVerification:
    index: int
    checks: dict[str, str]

    @property
    def status(self) -> str:
        results = self.checks.values()
        if FAIL in results:
            return FAIL
        if INCONCLUSIVE in results:
            return INCONCLUSIVE
        return PASS


@dataclass(frozen=True)
class VerificationReport:
    steps: list[StepVerification]
    start_covered: bool
    target_covered: bool

    @property
    def all_passed(self) -> bool:
        return (
            self.start_covered
            and self.target_covered
            and all(step.status == PASS for step in self.steps)
        )

    @property
    def sound(self) -> bool:
        """No outright failures (inconclusive fresh counts tolerated)."""
        return (
            self.start_covered
            and self.target_covered
            and all(step.status != FAIL for step in self.steps)
        )

    def lines(self) -> list[str]:
        out = []
        for step in self.steps:
            detail = ", ".join(f"{name}={result}" for name, result in step.checks.items())
            out.append(f"step {step.index}: {step.status} ({detail})")
        out.append(f"coverage: start={'pass' if self.start_covered else 'fail'}, "
                   f"target={'pass' if self.target_covered else 'fail'}")
        return out


def verify_certificate(cert: Certificate, eps_fresh=None) -> VerificationReport:
    """Independently re-check every step of a certificate.

    Per step: (a) the margin identity e = p - lam^2/4 and e > 0; (b) a fresh
    certified count at eps_fresh confirms the recorded p (a fresh count below
    p is inconclusive, not a failure -- lower bounds are not unique -- and is
    retried once at eps_fresh/10); (c) the step inequality
    (lam + delta)^2 <= lam^2 + 4e by exact cross multiplication, with
    delta > 0; (d) chaining: the next step starts no later than lam + delta.
    The report additionally records whether the chain covers
    [lambda_start, lambda_target].  Failures are report entries, never
    exceptions.
    """
    eps_fresh = as_rational(eps_fresh) if eps_fresh is not None else cert.eps
    reports: list[StepVerification] = []
    for pos, step in enumerate(cert.steps):
        checks: dict[str, str] = {}
        lam = step.lam
        checks["margin_identity"] = PASS if step.e_lower == step.p_lower - lam * lam / 4 else FAIL
        checks["margin_positive"] = PASS if step.e_lower > 0 else FAIL
        fresh = count_neumann2_certified_lower(lam, eps_fresh).value
        if fresh >= step.p_lower:
            checks["count_confirmed"] = PASS
        else:
            fresh = count_neumann2_certified_lower(lam, eps_fresh / 10).value
            checks["count_confirmed"] = PASS if fresh >= step.p_lower else INCONCLUSIVE
        checks["delta_positive"] = PASS if step.delta_lower > 0 else FAIL
        reach = lam + step.delta_lower
        checks["delta_sound"] = (
            PASS if reach * reach <= lam * lam + 4 * step.e_lower else FAIL
        )
        if pos + 1 < len(cert.steps):
            nxt = cert.steps[pos + 1].lam
            checks["chaining"] = PASS if lam < nxt <= reach else FAIL
        reports.append(StepVerification(index=step.index, checks=checks))
    start_covered = bool(cert.steps) and cert.steps[0].lam <= cert.lambda_start
    target_covered = (
        bool(cert.steps)
        and cert.steps[-1].lam + cert.steps[-1].delta_lower > cert.lambda_target
    )
    return VerificationReport(
        steps=reports, start_covered=start_covered, target_covered=target_covered
    )
