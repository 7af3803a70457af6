from __future__ import annotations

import pytest

from qdivisible.constructions import realize
from qdivisible.spectrum import (
    admissible_set,
    constructible_set,
    report,
    semigroup_generators,
)
from qdivisible.subspaces import divisibility_exponent, pairwise_disjoint

PUBLISHED_23 = [21, 31, 32, 33, 42, 43, 44, 52, 53, 54, 55,
                62, 63, 64, 65, 66, 72, 73, 74, 75, 76, 77, 78]


def test_analytic_admissible_list_is_reproduced():
    rep = admissible_set(2, 2, 3, 81)
    assert rep.admissible == PUBLISHED_23
    assert rep.largest_excluded == 81


def test_below_the_minimum_everything_is_excluded():
    rep = admissible_set(2, 2, 3, 20)
    assert rep.admissible == []
    assert all(e.status == "Excluded" for e in rep.entries)


def test_exclusion_reasons_fire_in_sieve_order():
    rep = admissible_set(2, 2, 3, 81)
    assert rep.entry(1).reason == "BelowMinimum"
    assert rep.entry(20).reason == "BelowMinimum"
    assert rep.entry(22).reason == "AverageBound"
    assert rep.entry(24).reason == "Quadratic"
    assert rep.entry(24).witness == {"m": 3, "tau": -120}
    assert rep.entry(79).reason == "Quadratic"


def test_generators_and_construction_witnesses():
    first, second = semigroup_generators(2, 2, 3)
    assert (first.kind, first.s) == ("spread", 3)
    assert (second.kind, second.r) == ("lifted_mrd", 3)
    built = constructible_set(2, 2, 3, 81)
    assert sorted(built) == [21, 32, 42, 53, 63, 64, 74]
    for n, (x, y, _recipe) in built.items():
        assert 21 * x + 32 * y == n


def test_constructible_set_empty_below_generators():
    assert constructible_set(2, 2, 3, 20) == {}


def test_constructible_witness_realizes_to_the_right_size():
    built = constructible_set(2, 2, 3, 81)
    for n in (21, 53):
        s = realize(built[n][2])
        assert s.n == n
        assert pairwise_disjoint(s)
        assert divisibility_exponent(s) >= 3


def test_merged_report_statuses():
    rep = report(2, 2, 3, 81)
    assert rep.admissible == PUBLISHED_23
    assert rep.by_status("Constructible") == [21, 32, 42, 53, 63, 64, 74]
    assert rep.entry(33).status == "OpenPossible"
    assert rep.entry(44).status == "OpenPossible"
    assert rep.entry(22).reason == "AverageBound"
    assert rep.generators == (21, 32)
    assert rep.largest_excluded == 81
    assert rep.entry(21).recipe is not None


def test_lp_scan_only_narrows_the_admissible_set():
    analytic = report(2, 2, 3, 81)
    scanned = report(2, 2, 3, 81, use_lp=True, v_range=range(4, 11))
    assert set(scanned.admissible) <= set(analytic.admissible)
    lp_only = [e for e in scanned.entries if e.reason == "LPScan"]
    assert all(e.witness["v_values"] == list(range(4, 11)) for e in lp_only)
    # the two published open cases must stay open under the scan too
    assert scanned.entry(33).status == "OpenPossible"
    assert scanned.entry(44).status == "OpenPossible"
    # no construction may ever land on an excluded n
    for e in scanned.entries:
        assert not (e.status == "Excluded" and e.recipe is not None)


def test_three_one_one_report():
    rep = report(3, 1, 1, 30)
    assert rep.generators == (4, 9)
    assert rep.admissible == [4] + list(range(8, 31))
    assert rep.largest_excluded == 7
    assert rep.by_status("OpenPossible") == [10, 11, 14, 15, 19, 23]
    # 23 is the Frobenius number of <4, 9>: everything beyond is constructible
    assert all(
        rep.entry(n).status == "Constructible" for n in range(24, 31)
    )


@pytest.mark.parametrize("nmax", [0, -3])
def test_report_rejects_empty_range(nmax):
    with pytest.raises(ValueError):
        report(2, 2, 3, nmax)
