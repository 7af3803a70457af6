from __future__ import annotations

from fractions import Fraction

import pytest

from qdivisible.lp import (
    build_system,
    ilp_feasible,
    lp_feasible,
    scan_dimensions,
)


def _residual(system, cert):
    """Largest violation of A x = b for a certificate, exact."""
    worst = Fraction(0)
    x = [cert[label] for label in system.labels]
    for coeffs, rhs in system.rows:
        lhs = sum(c * xi for c, xi in zip(coeffs, x))
        worst = max(worst, abs(lhs - rhs))
    return worst


def test_build_system_variable_selection():
    system = build_system(2, 2, 3, 21, 6)
    assert system.a_indices == [5, 13]
    assert system.b_dims == []
    assert system.labels == ["a5", "a13"]


def test_build_system_with_triples():
    system = build_system(2, 2, 3, 21, 6, include_triples=True)
    assert system.labels == ["a5", "a13", "b4", "b5", "b6"]
    assert len(system.rows) == 5


def test_build_system_triples_need_three_members():
    system = build_system(2, 2, 3, 2, 6, include_triples=True)
    assert system.b_dims == []


def test_build_system_caps_triple_dimension_at_ambient():
    system = build_system(2, 2, 3, 21, 5, include_triples=True)
    assert system.b_dims == [4, 5]


def test_build_system_full_hyperplane_toggle():
    assert 21 not in build_system(2, 2, 3, 21, 6).a_indices
    widened = build_system(2, 2, 3, 21, 6, allow_full_hyperplane=True)
    assert widened.a_indices == [5, 13, 21]


def test_build_system_zero_residue_variable():
    # n = q^(k+r) leaves i = 0 admissible
    system = build_system(2, 2, 3, 8, 6)
    assert system.a_indices == [0]


def test_build_system_rejects_cramped_ambient():
    with pytest.raises(ValueError):
        build_system(2, 2, 3, 21, 3)
    with pytest.raises(ValueError):
        build_system(2, 2, 3, 0, 6)


def test_spread_cardinality_is_feasible_with_unique_certificate():
    system = build_system(2, 2, 3, 21, 6)
    res = lp_feasible(system)
    assert res.feasible
    assert res.certificate == {"a5": Fraction(63), "a13": Fraction(0)}
    assert _residual(system, res.certificate) == 0


def test_integer_search_agrees_on_feasible_case():
    res = ilp_feasible(build_system(2, 2, 3, 21, 6))
    assert res.feasible
    assert all(value.denominator == 1 for value in res.certificate.values())
    assert res.certificate["a5"] == 63


def test_infeasible_cardinality_reports_positive_gap():
    res = lp_feasible(build_system(2, 2, 3, 13, 6))
    assert res.status == "infeasible"
    assert res.certificate is None
    assert res.infeasibility == Fraction(588, 5)
    assert ilp_feasible(build_system(2, 2, 3, 13, 6)).status == "infeasible"


def test_triple_rows_stay_feasible_for_the_spread():
    system = build_system(2, 2, 3, 21, 6, include_triples=True)
    res = lp_feasible(system)
    assert res.feasible
    assert _residual(system, res.certificate) == 0
    assert res.certificate["a5"] == 63
    # triple counts must total 21*20*19 and balance the incidence cube sum
    total = sum(res.certificate[f"b{j}"] for j in (4, 5, 6))
    assert total == 21 * 20 * 19


def test_scan_excludes_22_everywhere():
    scan = scan_dimensions(2, 2, 3, 22, range(4, 13))
    assert scan.all_infeasible
    assert not scan.any_feasible
    assert scan.undecided == []


def test_scan_finds_32_at_its_natural_dimension():
    scan = scan_dimensions(2, 2, 3, 32, range(7, 13))
    assert scan.any_feasible
    assert scan.results[7].feasible


def test_scan_keeps_21_only_at_six():
    scan = scan_dimensions(2, 2, 3, 21, range(4, 13))
    feasible_dims = [v for v, res in scan.results.items() if res.feasible]
    assert feasible_dims == [6]


def test_open_case_33_survives_large_dimensions():
    scan = scan_dimensions(2, 2, 3, 33, range(4, 11))
    assert not scan.all_infeasible
    assert scan.results[10].feasible


def test_lp_relaxation_dominates_integer_search():
    # anything LP-infeasible must come back ILP-infeasible as well
    for n in (13, 22, 25):
        system = build_system(2, 2, 3, n, 6)
        if lp_feasible(system).status == "infeasible":
            assert ilp_feasible(system).status == "infeasible"


def test_certificates_satisfy_every_row_exactly():
    for n, v in ((21, 6), (32, 7), (53, 13)):
        system = build_system(2, 2, 3, n, v, include_triples=True)
        res = lp_feasible(system)
        assert res.feasible
        assert _residual(system, res.certificate) == 0
        assert all(value >= 0 for value in res.certificate.values())
