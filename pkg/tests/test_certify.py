"""Tests for the certification loop, certificate files, and the verifier."""
import math

import mpmath
import pytest

from polyacert.certify import (
    FAIL,
    PASS,
    Certificate,
    CertificateStep,
    certify,
    gap_endpoints,
    verify_certificate,
)
from polyacert.errors import EpsTooCoarseError, StepFailedError
from polyacert.rational import format_rational, rational, to_float

# the thirteen frozen steps of the default run over [3, 14] at eps = 1/1000
TABLE = [
    ("3", "3/4", "6/13"),
    ("45/13", "1355/676", "223/221"),
    ("76/17", "868/289", "584/493"),
    ("164/29", "3368/841", "995/783"),
    ("187/27", "11687/2916", "29/27"),
    ("8", "3", "43/60"),
    ("523/60", "57671/14400", "227/260"),
    ("374/39", "6098/1521", "719/897"),
    ("239/23", "10591/2116", "339/368"),
    ("181/16", "4103/1024", "11/16"),
    ("12", "6", "24/25"),
    ("324/25", "2506/625", "241/400"),
    ("217/16", "7183/1024", "271/272"),
]


@pytest.fixture(scope="module")
def paper_range_certificate():
    return certify(3, 14, rational(1, 1000))


class TestGapEndpoints:
    def test_start_bounds_two_root_three(self):
        start, _ = gap_endpoints(rational(1, 1000))
        assert 3 < to_float(start)
        assert start * start <= 12  # start <= 2*sqrt(3), verified by squaring

    def test_target_dominates_true_endpoint(self):
        _, target = gap_endpoints(rational(1, 1000))
        assert to_float(target) < 14
        with mpmath.workdps(60):
            true_endpoint = 6 * mpmath.pi / (3 * mpmath.pi - 8)
            assert mpmath.mpf(int(target.numerator)) / int(target.denominator) > true_endpoint

    def test_coarse_eps_rejected(self):
        with pytest.raises(EpsTooCoarseError):
            gap_endpoints(rational(1))


class TestCertify:
    def test_reproduces_frozen_table(self, paper_range_certificate):
        cert = paper_range_certificate
        got = [
            (format_rational(s.lam), format_rational(s.e_lower), format_rational(s.delta_lower))
            for s in cert.steps
        ]
        assert got == TABLE
        final = cert.steps[-1].lam + cert.steps[-1].delta_lower
        assert format_rational(final) == "495/34"
        assert cert.success

    def test_terminates_quickly(self, paper_range_certificate):
        assert len(paper_range_certificate.steps) <= 50

    def test_short_range(self):
        cert = certify(3, 4, rational(1, 1000))
        assert len(cert.steps) <= 3
        assert cert.steps[0].e_lower == rational(3, 4)
        assert cert.steps[0].delta_lower == rational(6, 13)

    def test_precondition(self):
        with pytest.raises(ValueError):
            certify(5, 5, rational(1, 1000))

    def test_coarse_eps_fails_loudly(self):
        with pytest.raises(StepFailedError) as info:
            certify(3, 14, rational(1, 2))
        assert info.value.e_lower <= 0

    def test_deterministic(self, paper_range_certificate):
        again = certify(3, 14, rational(1, 1000))
        assert again.to_json_dict() == paper_range_certificate.to_json_dict()

    def test_step_invariants(self, paper_range_certificate):
        cert = paper_range_certificate
        for step in cert.steps:
            lam = step.lam
            assert step.e_lower == step.p_lower - lam * lam / 4
            assert step.e_lower > 0
            assert step.delta_lower > 0
            reach = lam + step.delta_lower
            assert reach * reach <= lam * lam + 4 * step.e_lower
        for here, there in zip(cert.steps, cert.steps[1:]):
            assert there.lam == here.lam + here.delta_lower

    def test_chain_covers_requested_interval(self, paper_range_certificate):
        cert = paper_range_certificate
        assert cert.steps[0].lam <= cert.lambda_start
        assert cert.steps[-1].lam + cert.steps[-1].delta_lower > cert.lambda_target


class TestSerialization:
    def test_json_round_trip(self, paper_range_certificate, tmp_path):
        path = tmp_path / "cert.json"
        paper_range_certificate.dump(path)
        loaded = Certificate.load(path)
        assert loaded.to_json_dict() == paper_range_certificate.to_json_dict()

    def test_no_floats_in_payload(self, paper_range_certificate):
        payload = paper_range_certificate.to_json_dict()

        def walk(node):
            if isinstance(node, dict):
                for v in node.values():
                    walk(v)
            elif isinstance(node, list):
                for v in node:
                    walk(v)
            else:
                assert not isinstance(node, float), node

        walk(payload)

    def test_verifier_sees_parsed_certificate_identically(
        self, paper_range_certificate, tmp_path
    ):
        path = tmp_path / "cert.json"
        paper_range_certificate.dump(path)
        fresh = verify_certificate(Certificate.load(path))
        direct = verify_certificate(paper_range_certificate)
        assert fresh.all_passed and direct.all_passed
        assert [s.checks for s in fresh.steps] == [s.checks for s in direct.steps]


def _replace_step(cert: Certificate, position: int, **changes) -> Certificate:
    clone = Certificate.from_json_dict(cert.to_json_dict())
    old = clone.steps[position]
    fields = {
        "index": old.index,
        "lam": old.lam,
        "p_lower": old.p_lower,
        "e_lower": old.e_lower,
        "delta_lower": old.delta_lower,
    }
    fields.update(changes)
    clone.steps[position] = CertificateStep(**fields)
    return clone


class TestVerifier:
    def test_fresh_certificate_passes(self, paper_range_certificate):
        report = verify_certificate(paper_range_certificate)
        assert report.all_passed
        assert report.sound
        assert all(step.status == PASS for step in report.steps)

    def test_negative_margin_detected(self, paper_range_certificate):
        bad = _replace_step(paper_range_certificate, 4, e_lower=rational(-1, 4))
        report = verify_certificate(bad)
        assert not report.sound
        checks = report.steps[4].checks
        assert checks["margin_positive"] == FAIL
        assert checks["margin_identity"] == FAIL

    def test_inflated_delta_detected(self, paper_range_certificate):
        old = paper_range_certificate.steps[2]
        bad = _replace_step(
            paper_range_certificate, 2, delta_lower=old.delta_lower + rational(1, 2)
        )
        report = verify_certificate(bad)
        assert not report.sound
        assert report.steps[2].checks["delta_sound"] == FAIL

    def test_broken_chaining_detected(self, paper_range_certificate):
        old = paper_range_certificate.steps[7]
        bad = _replace_step(paper_range_certificate, 7, lam=old.lam + rational(1, 5))
        report = verify_certificate(bad)
        assert not report.sound
        statuses = [s.checks.get("chaining") for s in report.steps]
        assert FAIL in statuses

    def test_missing_coverage_detected(self, paper_range_certificate):
        clone = Certificate.from_json_dict(paper_range_certificate.to_json_dict())
        clone.steps.pop()
        report = verify_certificate(clone)
        assert not report.target_covered
        assert not report.all_passed

    def test_overstated_count_is_inconclusive_not_failed(self, paper_range_certificate):
        old = paper_range_certificate.steps[0]
        bad = _replace_step(
            paper_range_certificate,
            0,
            p_lower=old.p_lower + 1,
            e_lower=old.e_lower + 1,
        )
        report = verify_certificate(bad)
        checks = report.steps[0].checks
        assert checks["count_confirmed"] == "inconclusive"
        assert not report.all_passed

    def test_report_lines_render(self, paper_range_certificate):
        report = verify_certificate(paper_range_certificate)
        lines = report.lines()
        assert len(lines) == len(report.steps) + 1
        assert lines[-1].startswith("coverage:")
