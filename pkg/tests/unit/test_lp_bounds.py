"""Tests for the enumerator program and its integer feasibility."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from hybridcodes.services.lp_bounds import (
    STARRED_CELLS,
    TABLE_I,
    BoundQuery,
    Verdict,
    build_program,
    check_certificate,
    ip_feasible,
    is_feasible,
    max_m,
    reproduce_table1,
)


class TestBoundQuery:
    def test_valid(self):
        qy = BoundQuery(n=7, k=1, m=1, d=3)
        assert qy.use_shadow
        assert qy.q == 2

    @pytest.mark.parametrize(
        "n, k, m, d",
        [(5, 3, 3, 3), (5, -1, 0, 3), (5, 1, 0, 0), (5, 1, 0, 6)],
    )
    def test_invalid(self, n, k, m, d):
        with pytest.raises(ValidationError):
            BoundQuery(n=n, k=k, m=m, d=d)


class TestProgram:
    """Shape of the assembled program."""

    def test_variables_and_forms(self):
        program = build_program(BoundQuery(n=5, k=1, m=1, d=3))
        assert program.num_variables == 12
        assert len(program.integral_forms) == 30
        assert len(program.shadow_forms) == 6

    def test_shadow_is_integral_only_when_constrained(self):
        without = build_program(BoundQuery(n=5, k=1, m=1, d=3, use_shadow=False))
        assert len(without.integral_forms) == 24
        assert not any(f.label.startswith("shadow") for f in without.integral_forms)

    def test_fractional_shadow_is_rejected(self):
        # a_perp = (1, 1, 1) puts half a vector in the shadow at weight 0
        certificate = {"a_perp": [1, 1, 1], "b_perp": [1, 1, 1]}
        with_shadow = build_program(BoundQuery(n=2, k=1, m=0, d=1))
        without = build_program(BoundQuery(n=2, k=1, m=0, d=1, use_shadow=False))
        assert "shadow[0] is not an integer" in check_certificate(with_shadow, certificate)
        assert "shadow[0] is not an integer" not in check_certificate(without, certificate)

    def test_shadow_constraints_are_optional(self):
        with_shadow = build_program(BoundQuery(n=5, k=1, m=0, d=3))
        without = build_program(BoundQuery(n=5, k=1, m=0, d=3, use_shadow=False))
        assert len(with_shadow.constraints) - len(without.constraints) == 6

    def test_distance_constraints(self):
        labels = [c.label for c in build_program(BoundQuery(n=5, k=1, m=0, d=3)).constraints]
        assert "a_perp[2] = a[2]" in labels
        assert "a[2] = b[2]" in labels
        assert "a[3] = b[3]" not in labels


class TestFeasibility:
    """Known existence and nonexistence verdicts."""

    def test_five_qubit_code_exists(self):
        result = is_feasible(5, 1, 0, 3)
        assert result.feasible
        program = build_program(BoundQuery(n=5, k=1, m=0, d=3))
        assert check_certificate(program, result.certificate) == []

    def test_certificate_is_integral(self):
        result = is_feasible(7, 1, 1, 3)
        assert result.verdict == Verdict.FEASIBLE
        for values in result.certificate.values():
            assert all(Fraction(v).denominator == 1 for v in values)
        program = build_program(BoundQuery(n=7, k=1, m=1, d=3))
        x = program.assignment(result.certificate["a_perp"], result.certificate["b_perp"])
        assert all(form.value(x).denominator == 1 for form in program.shadow_forms)

    def test_no_classical_bit_on_five_qubits(self):
        result = is_feasible(5, 1, 1, 3)
        assert not result.feasible
        assert result.certificate is None
        assert "reason" in result.witness

    def test_seven_qubits_two_bits(self):
        assert is_feasible(7, 1, 2, 3).feasible

    def test_tampered_certificate(self):
        program = build_program(BoundQuery(n=5, k=1, m=0, d=3))
        certificate = dict(is_feasible(5, 1, 0, 3).certificate)
        a_perp = list(certificate["a_perp"])
        a_perp[1] += 1
        certificate["a_perp"] = a_perp
        assert check_certificate(program, certificate)

    def test_restart_gives_same_verdict(self):
        program = build_program(BoundQuery(n=5, k=1, m=1, d=3))
        assert not ip_feasible(program, restart_nodes=1).feasible


class TestMaxM:
    @pytest.mark.parametrize(
        "n, k, d, expected",
        [(5, 1, 3, 0), (7, 1, 3, 2), (10, 3, 3, 2)],
    )
    def test_values(self, n, k, d, expected):
        assert max_m(n, k, d) == expected

    def test_no_code_at_all(self):
        # no [[5,2,3]] code and no classical bits to trade for
        assert max_m(5, 2, 3) is None


class TestTable:
    def test_published_grid(self):
        assert set(TABLE_I) == {3, 4, 5}
        assert TABLE_I[4][11] == (6, 4, 2)
        assert TABLE_I[5][11][1] == 0
        assert (4, 13, 5) in STARRED_CELLS

    def test_small_row(self):
        report = reproduce_table1(distances=[3], lengths=[5])
        cells = {r["k"]: r for r in report.to_json()}
        assert cells[1]["lp_m"] == 0
        assert cells[1]["status"] == "match"
        assert report.mismatches.empty
        assert report.text().startswith("d = 3")
