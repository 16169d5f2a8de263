"""Image tests: power-interval criterion vs combined-base table."""

from fractions import Fraction

import pytest

from jointdigits import (
    AttainabilityVerdict,
    ImageReport,
    IndependentBasesError,
    JointTable,
    ResourceLimitError,
    attainable_by_power_criterion,
    ceil_log,
    image_exact,
    image_via_table,
    joint_table,
    leading_digit_tuple,
    pair_dependence,
    power_criterion_holds,
    scan_window,
)

# every dependent pair with root a in 2..5, coprime exponents <= 4,
# bases >= 3, combined base <= 10**6 (the acceptance sweep re-derives this)
DEPENDENT_PAIRS = [
    (4, 8), (8, 16),
    (3, 9), (3, 27), (3, 81), (9, 27), (27, 81),
    (4, 16), (4, 64), (4, 256), (16, 64),
    (5, 25), (5, 125), (5, 625), (25, 125),
]

EXCLUDED_4_8 = {(2, 3), (2, 6), (2, 7), (3, 2), (3, 4), (3, 5)}


def criterion_oracle(a, j1, j2, c_lo=-64, c_hi=64):
    """Oracle: Fraction arithmetic scan over a wide, fixed c window."""
    for c in range(c_lo, c_hi + 1):
        p = Fraction(a) ** c
        if Fraction(j1, j2 + 1) < p < Fraction(j1 + 1, j2):
            return c
    return None


def digit_set_oracle(b, e, j):
    """Oracle: expand the digit-set union directly."""
    out = set()
    for l in range(e):
        out |= set(range(j * b**l, (j + 1) * b**l))
    return out


class TestPowerCriterion:
    def test_matches_fraction_oracle(self):
        for a in (2, 3, 5):
            for j1 in range(1, 10):
                for j2 in range(1, 10):
                    for c in range(-8, 9):
                        expected = (
                            Fraction(j1, j2 + 1) < Fraction(a) ** c < Fraction(j1 + 1, j2)
                        )
                        assert power_criterion_holds(a, c, j1, j2) == expected

    def test_excluded_pair_2_3(self):
        # no power of 2 in the open interval (1/2, 1)
        dep = pair_dependence(4, 8)
        v = attainable_by_power_criterion(dep, 2, 3)
        assert not v.attainable and v.certificate is None

    def test_diagonal_via_c0(self):
        dep = pair_dependence(4, 8)
        v = attainable_by_power_criterion(dep, 1, 1)
        assert v.attainable and v.certificate == 0

    def test_excluded_pair_3_5(self):
        dep = pair_dependence(4, 8)
        assert not attainable_by_power_criterion(dep, 3, 5).attainable

    def test_attainable_2_1(self):
        dep = pair_dependence(4, 8)
        v = attainable_by_power_criterion(dep, 2, 1)
        assert v.attainable and v.certificate == 1

    def test_certificates_match_oracle(self):
        for b1, b2 in DEPENDENT_PAIRS[:8]:
            dep = pair_dependence(b1, b2)
            for j1 in range(1, b1):
                for j2 in range(1, b2):
                    v = attainable_by_power_criterion(dep, j1, j2)
                    oracle_c = criterion_oracle(dep.a, j1, j2)
                    assert v.attainable == (oracle_c is not None)
                    if v.attainable:
                        assert power_criterion_holds(dep.a, v.certificate, j1, j2)

    def test_window_endpoints_provably_fail(self):
        # outside [lo, hi] the power is already past the admissible interval
        for b1, b2 in DEPENDENT_PAIRS:
            dep = pair_dependence(b1, b2)
            lo, hi = scan_window(dep)
            a = dep.a
            for j1 in range(1, b1):
                for j2 in range(1, b2):
                    # a**lo <= j1/(j2+1): cross-multiplied with lo < 0
                    assert (j2 + 1) <= j1 * a**-lo
                    # a**hi >= (j1+1)/j2
                    assert a**hi * j2 >= j1 + 1

    def test_rejects_invalid_digits(self):
        dep = pair_dependence(4, 8)
        with pytest.raises(ValueError):
            attainable_by_power_criterion(dep, 4, 1)
        with pytest.raises(ValueError):
            attainable_by_power_criterion(dep, 1, 8)

    def test_ceil_log(self):
        assert ceil_log(2, 8) == 3
        assert ceil_log(2, 9) == 4
        assert ceil_log(5, 1) == 0
        assert ceil_log(3, 3) == 1


class TestJointTable:
    def test_example_cells(self):
        table = joint_table(pair_dependence(4, 8))
        for D in range(8, 12):
            assert table.cell(D) == (2, 1)
        assert table.cell(1) == (1, 1)
        for D in range(48, 56):
            assert table.cell(D) == (3, 6)
        # the half-open convention puts 32 with (2, 4), not (1, 3)
        assert table.cell(31) == (1, 3)
        assert table.cell(32) == (2, 4)

    def test_full_table_against_digit_set_oracle(self):
        dep = pair_dependence(4, 8)
        table = joint_table(dep)
        sets1 = {j1: digit_set_oracle(4, 3, j1) for j1 in range(1, 4)}
        sets2 = {j2: digit_set_oracle(8, 2, j2) for j2 in range(1, 8)}
        for D in range(1, 64):
            j1, j2 = table.cell(D)
            assert D in sets1[j1] and D in sets2[j2]

    def test_cells_are_total_and_consistent(self):
        for b1, b2 in [(4, 8), (9, 27), (4, 16)]:
            dep = pair_dependence(b1, b2)
            table = joint_table(dep)
            assert len(table.cells) == table.combined_base - 1
            # digits of the integer D itself realize the cell
            for D in range(1, table.combined_base):
                assert leading_digit_tuple(D, (b1, b2)) == table.cell(D)

    def test_member_runs(self):
        table = joint_table(pair_dependence(4, 8))
        assert table.member_runs(2, 1) == [(8, 12)]
        assert table.member_runs(1, 1) == [(1, 2)]
        assert table.member_runs(2, 3) == []
        assert table.members(3, 7) == tuple(range(56, 64))

    def test_resource_cap(self):
        dep = pair_dependence(3, 81)  # combined base 3**4 = 81
        with pytest.raises(ResourceLimitError):
            joint_table(dep, cap=80)

    def test_json_round_trip(self):
        table = joint_table(pair_dependence(4, 8))
        assert JointTable.from_json_dict(table.to_json_dict()) == table


class TestImageExact:
    def test_4_8_exclusions(self):
        report = image_exact(4, 8)
        assert report.excluded == frozenset(EXCLUDED_4_8)
        assert report.counts == (15, 6)

    def test_certificate_soundness(self):
        for b1, b2 in DEPENDENT_PAIRS:
            report = image_exact(b1, b2)
            a = report.dependence.a
            for v in report.verdicts:
                if v.attainable:
                    assert power_criterion_holds(a, v.certificate, *v.pair)

    def test_dual_route_sample(self):
        # the full sweep with timing lives in the acceptance suite;
        # (3, 9) is the smallest pair of the b2 = b1**2 family
        for b1, b2 in [(4, 8), (9, 27), (4, 16), (5, 25), (3, 9), (3, 27)]:
            dep = pair_dependence(b1, b2)
            assert image_via_table(dep) == image_exact(b1, b2).attainable

    def test_small_witness_realization(self):
        for b1, b2 in [(4, 8), (9, 27), (4, 16)]:
            report = image_exact(b1, b2)
            b = report.dependence.combined_base
            realized = set()
            for x in range(1, b):
                realized.add(leading_digit_tuple(x, (b1, b2)))
            assert realized == set(report.attainable)

    def test_diagonal_always_attainable(self):
        for b1, b2 in DEPENDENT_PAIRS:
            report = image_exact(b1, b2)
            assert (1, 1) in report.attainable
            assert report.certificate_for(1, 1) == 0

    def test_independent_raises_without_optin(self):
        with pytest.raises(IndependentBasesError):
            image_exact(3, 10)

    def test_independent_trivial_report(self):
        report = image_exact(3, 10, allow_independent=True)
        assert report.dependence is None
        assert report.counts == (18, 0)
        payload = report.to_json_dict()
        assert all(p["certificate_c"] == "density" for p in payload["pairs"])

    def test_json_round_trip(self):
        for args in [(4, 8), (9, 27)]:
            report = image_exact(*args)
            rebuilt = ImageReport.from_json_dict(report.to_json_dict())
            assert rebuilt.bases == report.bases
            assert rebuilt.dependence == report.dependence
            assert rebuilt.attainable == report.attainable
            assert rebuilt.excluded == report.excluded
        trivial = image_exact(3, 10, allow_independent=True)
        rebuilt = ImageReport.from_json_dict(trivial.to_json_dict())
        assert rebuilt.dependence is None
        assert rebuilt.attainable == trivial.attainable

    def test_verdict_round_trip(self):
        v = attainable_by_power_criterion(pair_dependence(4, 8), 3, 6)
        assert AttainabilityVerdict.from_json_dict(v.to_json_dict()) == v
