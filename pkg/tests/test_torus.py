"""Torus-diagnostic tests: rectangles, measures, orbit sampling."""

import random
from fractions import Fraction

import mpmath
import pytest

from jointdigits import (
    CoverageReport,
    ResourceLimitError,
    classify_parameter,
    frequency_vector,
    image_exact,
    leading_digit_tuple,
    measure_map,
    orbit_sample,
    rectangle_of,
    torus_digit_tuple,
    total_measure,
)
from jointdigits.torus import _context, _endpoints, _rational_iv


def enclosure_contains(iv_value, value, precision=128) -> bool:
    lo, hi = _endpoints(iv_value, precision)
    with mpmath.mp.workprec(precision + 16):
        v = mpmath.mpf(value) if not isinstance(value, Fraction) else (
            mpmath.mpf(value.numerator) / mpmath.mpf(value.denominator)
        )
        return lo <= v <= hi


def enclosure_width(iv_value, precision=128) -> float:
    lo, hi = _endpoints(iv_value, precision)
    return float(hi - lo)


class TestRectangle:
    def test_4_8_diagonal_measure_is_exactly_one_sixth(self):
        # log_4(2) = 1/2 and log_8(2) = 1/3, so the measure is 1/6
        r = rectangle_of((4, 8), (1, 1))
        m = r.measure()
        assert enclosure_contains(m, Fraction(1, 6))
        assert enclosure_width(m) < 2**-100
        assert enclosure_contains(r.lows[0], 0)
        assert enclosure_contains(r.highs[0], Fraction(1, 2))
        assert enclosure_contains(r.highs[1], Fraction(1, 3))

    def test_single_base_rectangle(self):
        r = rectangle_of((10,), (1,))
        with mpmath.mp.workprec(200):
            expected = mpmath.log(2) / mpmath.log(10)
            assert enclosure_contains(r.highs[0], expected)
        assert enclosure_contains(r.lows[0], 0)

    def test_3_10_target_2_9_measure(self):
        r = rectangle_of((3, 10), (2, 9))
        with mpmath.mp.workprec(200):
            expected = (mpmath.log(Fraction(3, 2).numerator) - mpmath.log(2)) * 0 + (
                mpmath.log(3) - mpmath.log(2)
            ) / mpmath.log(3) * ((mpmath.log(10) - mpmath.log(9)) / mpmath.log(10))
        assert enclosure_contains(r.measure(), expected)
        lo, _ = _endpoints(r.measure(), 128)
        assert lo > 0

    def test_contains_classification(self):
        ctx = _context(128)
        r = rectangle_of((4, 8), (1, 1))  # [0, 1/2) x [0, 1/3)
        inside = (_rational_iv(Fraction(1, 5), ctx), _rational_iv(Fraction(1, 10), ctx))
        assert r.contains(inside) == "inside"
        outside = (_rational_iv(Fraction(7, 10), ctx), _rational_iv(Fraction(1, 10), ctx))
        assert r.contains(outside) == "outside"
        at_origin = (ctx.mpf(0), ctx.mpf(0))
        assert r.contains(at_origin) == "inside"  # half-open: low edge in
        straddling = (ctx.mpf([0.4999, 0.5001]), _rational_iv(Fraction(1, 10), ctx))
        assert r.contains(straddling) == "boundary"
        at_high_edge = (
            _rational_iv(Fraction(1, 5), ctx),
            _rational_iv(Fraction(1, 3), ctx),
        )
        assert r.contains(at_high_edge) in ("outside", "boundary")

    def test_dimension_mismatch(self):
        ctx = _context(128)
        r = rectangle_of((4, 8), (1, 1))
        with pytest.raises(ValueError):
            r.contains((ctx.mpf(0),))

    def test_rejects_invalid_digits(self):
        with pytest.raises(ValueError):
            rectangle_of((4, 8), (4, 1))
        with pytest.raises(ValueError):
            rectangle_of((4, 8), (1,))


class TestMeasures:
    @pytest.mark.parametrize("bases", [(4, 8), (3, 10), (5, 7, 11)])
    def test_normalization(self, bases):
        total = total_measure(bases)
        lo, hi = _endpoints(total, 128)
        with mpmath.mp.workprec(200):
            # 1 - 2**-64 rounds to 1.0 in double precision; compare carefully
            tol = mpmath.mpf(2) ** -64
            assert 1 - tol <= lo <= 1 <= hi <= 1 + tol

    def test_measure_map_matches_rectangles(self):
        mm = measure_map((4, 8))
        for tup, m in list(mm.items())[:5]:
            r = rectangle_of((4, 8), tup)
            lo1, hi1 = _endpoints(m, 128)
            lo2, hi2 = _endpoints(r.measure(), 128)
            # same quantity by two computations: enclosures overlap
            assert max(lo1, lo2) <= min(hi1, hi2)

    def test_tuple_cap(self):
        with pytest.raises(ResourceLimitError):
            measure_map((50, 51), cap=100)

    def test_frequency_vector_radius(self):
        fv = frequency_vector((3, 10, 7))
        assert fv.max_radius() < 2**-100
        assert len(fv.omega) == 3


class TestTorusClassification:
    def test_matches_exact_core_on_randoms(self):
        rng = random.Random(2)
        classified = 0
        for _ in range(120):
            x = Fraction(rng.randint(1, 10**9), rng.randint(1, 10**6))
            got = torus_digit_tuple(x, (3, 10))
            if got is not None:
                classified += 1
                assert got == leading_digit_tuple(x, (3, 10))
        assert classified > 100  # ambiguity is the exception, not the rule

    def test_exact_power_is_boundary_ambiguous(self):
        # log_8(8) = 1 exactly: the integer-part split cannot be certified
        assert torus_digit_tuple(8, (8, 10)) is None

    def test_plain_integer(self):
        assert torus_digit_tuple(56, (4, 8)) == (3, 7)

    def test_classify_parameter_origin(self):
        fv = frequency_vector((4, 8, 10))
        assert classify_parameter(Fraction(0), fv) == (1, 1, 1)

    def test_classify_parameter_matches_rectangle(self):
        fv = frequency_vector((3, 10))
        for m in (1, 5, 17):
            t = Fraction(m, 7)
            tup = classify_parameter(t, fv)
            assert tup is not None
            ctx = _context(fv.precision)
            t_iv = ctx.mpf(t.numerator) / ctx.mpf(t.denominator)
            point = []
            for om in fv.omega:
                y = t_iv * om
                lo, _ = _endpoints(y, fv.precision)
                point.append(y - int(mpmath.floor(lo)))
            assert rectangle_of((3, 10), tup).contains(tuple(point)) != "outside"


class TestOrbitSample:
    def test_integer_scan_4_8(self):
        rep = orbit_sample((4, 8), 63)
        assert rep.rectangles_hit == 15
        assert rep.rectangles_total == 21
        assert rep.boundary_ambiguous == 0
        assert sum(rep.hit_counts.values()) == 63

    def test_dependent_pair_obstruction(self):
        excluded = image_exact(4, 8).excluded
        for sampler, n in (
            ("integer-scan", 5000),
            ("geometric", 1500),
            ("low-discrepancy", 1500),
        ):
            rep = orbit_sample((4, 8), n, sampler=sampler)
            assert not (set(rep.hit_counts) & excluded), sampler

    def test_single_sample_hits_all_ones(self):
        rep = orbit_sample((3, 10, 7), 1)
        assert rep.hit_counts == {(1, 1, 1): 1}

    def test_geometric_matches_pointwise(self):
        rep = orbit_sample((3, 10), 40, sampler="geometric", ratio=Fraction(3, 2))
        from collections import Counter

        expected = Counter()
        x = Fraction(1)
        for _ in range(40):
            expected[leading_digit_tuple(x, (3, 10))] += 1
            x *= Fraction(3, 2)
        assert rep.hit_counts == dict(sorted(expected.items()))

    def test_geometric_rejects_unit_ratio(self):
        with pytest.raises(ValueError):
            orbit_sample((3, 10), 10, sampler="geometric", ratio=Fraction(1))

    def test_low_discrepancy_accounting(self):
        rep = orbit_sample((3, 10), 400, sampler="low-discrepancy")
        assert sum(rep.hit_counts.values()) + rep.boundary_ambiguous == 400
        for tup in rep.hit_counts:
            assert len(tup) == 2
            assert 1 <= tup[0] <= 2 and 1 <= tup[1] <= 9
        assert rep.rectangles_hit > 5

    def test_unknown_sampler(self):
        with pytest.raises(ValueError):
            orbit_sample((3, 10), 10, sampler="sobol")

    def test_sample_cap(self):
        with pytest.raises(ResourceLimitError):
            orbit_sample((3, 10), 10**9)
        with pytest.raises(ResourceLimitError):
            orbit_sample((3, 10), 100, sample_cap=99)

    def test_report_shapes(self):
        rep = orbit_sample((3, 10), 1000)
        payload = rep.to_json_dict()
        assert payload["samples"] == 1000
        assert payload["rectangles_total"] == 18
        assert len(payload["cells"]) == 18
        assert all(
            set(c) == {"tuple", "count", "frequency", "measure"}
            for c in payload["cells"]
        )
        rows = rep.to_csv_rows()
        assert rows[0] == ["tuple", "count", "measure"]
        assert len(rows) == 19

    def test_json_round_trip(self):
        rep = orbit_sample((4, 8), 200)
        rebuilt = CoverageReport.from_json_dict(rep.to_json_dict())
        assert rebuilt.hit_counts == rep.hit_counts
        assert rebuilt.samples == rep.samples
        assert rebuilt.rectangles_total == rep.rectangles_total

    def test_deviations_are_reported(self):
        rep = orbit_sample((3, 10), 2000)
        devs = rep.deviations()
        assert len(devs) == 18
        assert all(0 <= v <= 1 for v in devs.values())
        assert rep.max_deviation() == max(devs.values())
