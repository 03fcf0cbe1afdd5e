import json

import pytest

from avoidpair import catalog
from avoidpair.perms import FINITE_PAIR, all_pairs, pattern_pair
from avoidpair.polys import MultiPoly, RationalGF
from avoidpair.verify import (
    VerifyReport,
    all_passed,
    brute_distribution,
    check_counts,
    check_equidistribution_maps,
    check_gf,
    family_monomial,
    run_default_suite,
)

P, Q, Y, Z = (MultiPoly.var(name) for name in "pqyz")

PAIR_231_312 = pattern_pair((2, 3, 1), (3, 1, 2))
PAIR_213_231 = pattern_pair((2, 1, 3), (2, 3, 1))


class TestBruteDistribution:
    def test_layered_class_at_three(self):
        assert brute_distribution(PAIR_231_312, 3, "G") == (
            P**2 * Y + 2 * P * Q * Y * Z + Q**2 * Z
        )

    def test_empty_length_gives_one(self):
        for pair in all_pairs():
            for family in ("F", "G"):
                assert brute_distribution(pair, 0, family) == MultiPoly.one()

    def test_finite_class_vanishes(self):
        assert brute_distribution(FINITE_PAIR, 5, "G") == MultiPoly.zero()

    def test_all_ones_specialization_counts_the_class(self):
        for pair in all_pairs():
            for n in range(8):
                poly = brute_distribution(pair, n, "G")
                for name in ("p", "q", "y", "z"):
                    poly = poly.substitute_one(name)
                assert poly == MultiPoly.const(catalog.class_count(pair, n))

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            family_monomial((1, 2), "H")


class TestCheckGF:
    def test_passes_for_catalogued_forms(self):
        report = check_gf(pattern_pair((1, 2, 3), (1, 3, 2)), "F", 6)
        assert report.passed and report.first_discrepancy is None
        report = check_gf(PAIR_213_231, "G", 7)
        assert report.passed

    @pytest.mark.parametrize(
        "pair,family",
        [
            (PAIR_231_312, "G"),
            (pattern_pair((1, 2, 3), (1, 3, 2)), "F"),
            (pattern_pair((2, 1, 3), (3, 1, 2)), "G"),
        ],
    )
    def test_detects_a_corrupted_coefficient_early(self, pair, family):
        gf = catalog.gf_for(pair, family)
        # flip the sign of the last numerator term
        exps, coeff = gf.num.terms()[-1]
        corrupted = RationalGF(gf.num - MultiPoly({exps: 2 * coeff}), gf.den)
        report = check_gf(pair, family, 6, gf=corrupted)
        assert not report.passed
        assert report.first_discrepancy["n"] <= 6

    def test_report_json_line_shape(self):
        report = check_gf(PAIR_231_312, "G", 4)
        payload = json.loads(report.to_json_line())
        assert payload["status"] == "pass"
        assert payload["pair"] == "231,312"
        assert payload["family"] == "G"
        assert payload["n_range"] == [0, 4]
        assert payload["first_discrepancy"] is None


class TestCheckCounts:
    def test_default_range_passes(self):
        report = check_counts(8)
        assert report.passed

    def test_failure_shape(self):
        report = VerifyReport(
            name="x", pair=None, family=None, n_range=(0, 1), status="fail",
            first_discrepancy={"n": 1},
        )
        assert not report.passed
        assert json.loads(report.to_json_line())["first_discrepancy"] == {"n": 1}


class TestEquidistributionMaps:
    def test_all_five_reports_pass(self):
        reports = check_equidistribution_maps(8)
        assert len(reports) == 5
        assert all_passed(reports)
        names = {report.name for report in reports}
        assert "transfer-swaps-quadruple" in names
        assert "cross-class-equidistribution" in names

    def test_two_element_multisets_by_hand(self):
        # at n = 2 both classes carry the multiset {p y, q z}
        left = brute_distribution(PAIR_231_312, 2, "G")
        right = brute_distribution(PAIR_213_231, 2, "G")
        assert left == right == P * Y + Q * Z


class TestDefaultSuite:
    def test_everything_passes(self):
        reports = run_default_suite()
        # counts + 14 G + 14 F + 5 map reports
        assert len(reports) == 34
        assert all_passed(reports)
        for report in reports:
            assert (report.status == "fail") == (report.first_discrepancy is not None)
