"""Accuracy-table loading, two-digit error matching, and verdicts.

Tables 1 through 4 carry recorded values with explicit tolerances; a few
recorded entries are known not to match recomputation and their rows must
come back as failures, never be silently adjusted.  Table 5 documents a
reconstructed configuration and is judged on its error-decay pattern.
"""

import math
from fractions import Fraction as F

import pytest

from umbralpoly import (
    TABLE_IDS,
    format_sig2,
    format_value,
    load_table,
    round_to_2_significant,
    run_table,
    truncate_to_2_significant,
    two_sig_match,
)


class TestTwoSignificantDigits:
    def test_rounding(self):
        assert round_to_2_significant(0.0876178) == pytest.approx(0.088)
        assert round_to_2_significant(0.197294) == pytest.approx(0.20)
        assert round_to_2_significant(1.84e-9) == pytest.approx(1.8e-9)
        assert round_to_2_significant(-0.0234) == pytest.approx(-0.023)
        assert round_to_2_significant(0.0) == 0.0

    def test_truncation(self):
        assert truncate_to_2_significant(0.0876178) == pytest.approx(0.087)
        assert truncate_to_2_significant(0.197294) == pytest.approx(0.19)
        assert truncate_to_2_significant(-0.0239) == pytest.approx(-0.023)
        # an exactly representable two-digit value must not slip a digit
        assert truncate_to_2_significant(88.0) == pytest.approx(88.0)

    def test_match_accepts_either_convention(self):
        assert two_sig_match(0.0876178, 8.7e-2)   # truncated record
        assert two_sig_match(0.0876178, 8.8e-2)   # rounded record
        assert two_sig_match(0.197294, 1.9e-1)
        assert two_sig_match(0.197294, 2.0e-1)

    def test_match_rejects_genuine_mismatches(self):
        assert not two_sig_match(0.298808, 2.3e-1)
        assert not two_sig_match(1.84e-9, 1.6e-7)
        assert not two_sig_match(0.0876178, 8.6e-2)

    def test_error_formatting(self):
        assert format_sig2(0.0876178) == "8.8e-2"
        assert format_sig2(1.6e-7) == "1.6e-7"
        assert format_sig2(0.23) == "2.3e-1"
        assert format_sig2(0.0) == "0"
        assert format_sig2(math.inf) == "inf"

    def test_value_formatting(self):
        assert format_value(0.2058543, ".7f") == "0.2058543"
        assert format_value(78472.736258832, ".8e") == "7.84727363e4"
        assert format_value(1.84e-9, ".3e") == "1.840e-9"


class TestLoadTable:
    @pytest.mark.parametrize("table_id", TABLE_IDS)
    def test_round_trip(self, table_id):
        spec = load_table(table_id)
        assert spec.table_id == table_id
        assert spec.rows
        assert spec.rows[0].selector == "exact"
        assert spec.mode == ("pattern" if table_id == 5 else "rows")

    @pytest.mark.parametrize("table_id", (1, 2, 3, 4))
    def test_recorded_tables_carry_expected_values(self, table_id):
        spec = load_table(table_id)
        for row in spec.rows:
            assert row.expected_value is not None
            assert row.value_tol is not None

    def test_reconstructed_table_carries_no_expected_values(self):
        spec = load_table(5)
        assert all(row.expected_value is None for row in spec.rows)
        assert "reconstruct" in spec.note.lower()

    def test_configuration_points_are_exact(self):
        t1 = load_table(1)
        assert (t1.n, t1.x, t1.y) == (10, F(1, 10), F(1))
        t4 = load_table(4)
        assert (t4.n, t4.x, t4.y) == (70, F(1), F(3, 4900))
        t5 = load_table(5)
        assert (t5.n, t5.x, t5.y) == (10, F(3), F(3, 100))

    @pytest.mark.parametrize("bad", (0, 6, -1, "1"))
    def test_unknown_id_rejected(self, bad):
        with pytest.raises(ValueError):
            load_table(bad)


class TestRunTable:
    def test_table1_reproduces_fully(self):
        result = run_table(1)
        assert result.passed
        assert result.offending == ()
        assert result.pattern_ok is None
        exact = result.rows[0]
        assert exact.rel_error is None
        assert abs(exact.computed - 0.2058543) <= 5e-8
        for rr in result.rows[1:]:
            assert rr.value_ok is True
            assert rr.error_ok is True
            assert rr.terms_used > 0

    def test_table2_flags_exactly_the_irreproducible_rows(self):
        result = run_table(2)
        assert not result.passed
        assert result.offending == ("order m=2 (J0/J2 form)", "order m=6")
        by_label = {rr.row.label: rr for rr in result.rows}
        # the J0/J2 number differs from the series-form number it was
        # recorded against; both its value and error columns miss
        j2 = by_label["order m=2 (J0/J2 form)"]
        assert j2.value_ok is False
        assert j2.error_ok is False
        # the series form at m=2 is the one that actually matches
        assert by_label["order m=2 (series)"].ok
        m6 = by_label["order m=6"]
        assert m6.value_ok is False
        assert m6.error_ok is False
        assert m6.rel_error < 1e-8

    def test_table3_flags_only_the_m5_error_digits(self):
        result = run_table(3)
        assert not result.passed
        assert result.offending == ("order m=5 (decimal-point corrected)",)
        m5 = result.rows[-1]
        assert m5.value_ok is True        # corrected value agrees
        assert m5.error_ok is False       # recorded 1.6e-7 vs actual ~1.8e-9
        assert m5.rel_error < 1e-8

    def test_table4_flags_only_the_m1_error_digits(self):
        result = run_table(4)
        assert not result.passed
        assert result.offending == ("order m=1",)
        m1 = result.rows[1]
        assert m1.value_ok is True
        assert m1.error_ok is False
        # recorded 2.3e-1 normalizes by the approximation, not the exact value
        assert two_sig_match(abs(m1.computed - result.rows[0].computed) / m1.computed, 2.3e-1)

    def test_table5_pattern_holds(self):
        result = run_table(5)
        assert result.passed
        assert result.pattern_ok is True
        assert result.offending == ()
        errs = [rr.rel_error for rr in result.rows if rr.rel_error is not None]
        assert len(errs) == 4
        assert all(a > b for a, b in zip(errs, errs[1:]))
        assert errs[0] / errs[-1] >= 100.0
        frozen = (5.016751e-2, 4.144297e-3, 6.238178e-4, 9.170129e-5)
        for got, want in zip(errs, frozen):
            assert abs(got - want) <= 1e-6 * want

    def test_unknown_id_rejected(self):
        with pytest.raises(ValueError):
            run_table(0)
