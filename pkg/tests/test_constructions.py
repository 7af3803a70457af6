from __future__ import annotations

import pytest

from qdivisible.algebra import gauss_number
from qdivisible.constructions import (
    ConstructionRecipe,
    direct_sum,
    guaranteed_exponent,
    lifted_mrd,
    realize,
    spread,
)
from qdivisible.fileio import dumps
from qdivisible.subspaces import (
    coverage,
    divisibility_exponent,
    hyperplane_spectrum,
    pairwise_disjoint,
    span_and_restrict,
)


@pytest.mark.parametrize("q,k,s", [(2, 1, 2), (2, 1, 3), (2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 1, 2), (3, 2, 2), (4, 1, 2)])
def test_spread_shape(q, k, s):
    built = spread(q, k, s)
    assert built.v == s * k
    assert built.n == gauss_number(q, s * k) // gauss_number(q, k)
    assert pairwise_disjoint(built)
    # a spread covers every point exactly once
    cov = coverage(built)
    assert len(cov) == gauss_number(q, built.v)
    assert set(cov.values()) == {1}


@pytest.mark.parametrize("q,k,s,expected", [(2, 2, 2, 2), (2, 2, 3, 4), (3, 1, 2, 1), (2, 3, 2, 3)])
def test_spread_exponent(q, k, s, expected):
    assert expected == (s - 1) * k
    assert divisibility_exponent(spread(q, k, s)) == expected


@pytest.mark.parametrize("q,k,r", [(2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 3), (3, 1, 1), (3, 2, 1)])
def test_lifted_mrd_shape(q, k, r):
    built = lifted_mrd(q, k, r)
    assert built.v == 2 * k + r
    assert built.n == q ** (k + r)
    assert pairwise_disjoint(built)
    assert divisibility_exponent(built) >= r


def test_lifted_mrd_covers_complement_of_a_subspace():
    # members cover exactly the points with some nonzero among the first k
    # coordinates; the missed points form a (k+r)-dim subspace
    for q, k, r in ((2, 1, 1), (2, 2, 3), (3, 1, 1)):
        built = lifted_mrd(q, k, r)
        cov = coverage(built)
        assert set(cov.values()) == {1}
        assert all(any(p[:k]) for p in cov)
        missed = gauss_number(q, built.v) - len(cov)
        assert missed == gauss_number(q, k + r)


def test_lifted_mrd_small_binary_case():
    built = lifted_mrd(2, 1, 1)
    assert built.n == 4 and built.v == 3
    pts = sorted(coverage(built))
    assert pts == [(1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1)]


def test_direct_sum_concatenates_complementary_blocks():
    a = spread(2, 2, 2)
    b = spread(2, 2, 2)
    both = direct_sum(a, b)
    assert both.v == 8 and both.n == 10 and both.k == 2
    assert pairwise_disjoint(both)
    assert divisibility_exponent(both) >= min(
        divisibility_exponent(a), divisibility_exponent(b)
    )
    _res, d = span_and_restrict(both)
    assert d == 8


def test_direct_sum_rejects_mismatched_pieces():
    with pytest.raises(ValueError):
        direct_sum(spread(2, 2, 2), spread(3, 1, 2))
    with pytest.raises(ValueError):
        direct_sum(spread(2, 2, 2), spread(2, 1, 2))


def test_direct_sum_acceptance_pair():
    both = direct_sum(spread(2, 2, 3), lifted_mrd(2, 2, 3))
    assert (both.n, both.v) == (53, 13)
    assert hyperplane_spectrum(both).n == 53


def test_member_cap_guards_enumeration():
    with pytest.raises(ValueError):
        spread(2, 2, 3, member_cap=10)
    with pytest.raises(ValueError):
        lifted_mrd(2, 2, 3, member_cap=10)


def test_constructions_are_deterministic():
    assert dumps(spread(2, 2, 3)) == dumps(spread(2, 2, 3))
    assert dumps(lifted_mrd(3, 1, 2)) == dumps(lifted_mrd(3, 1, 2))
    assert spread(4, 1, 2).members == spread(4, 1, 2).members


def test_recipe_realization_matches_direct_calls():
    r1 = ConstructionRecipe("spread", q=2, k=2, s=3)
    assert realize(r1).members == spread(2, 2, 3).members
    r2 = ConstructionRecipe("lifted_mrd", q=2, k=2, r=3)
    assert realize(r2).members == lifted_mrd(2, 2, 3).members
    r3 = ConstructionRecipe("direct_sum", parts=(r1, r2))
    assert realize(r3).members == direct_sum(spread(2, 2, 3), lifted_mrd(2, 2, 3)).members
    assert "spread(q=2, k=2, s=3)" in r3.describe()


def test_guaranteed_exponents():
    assert guaranteed_exponent(ConstructionRecipe("spread", q=2, k=2, s=3)) == 4
    assert guaranteed_exponent(ConstructionRecipe("lifted_mrd", q=2, k=2, r=3)) == 3
    nested = ConstructionRecipe(
        "direct_sum",
        parts=(
            ConstructionRecipe("spread", q=2, k=2, s=3),
            ConstructionRecipe("lifted_mrd", q=2, k=2, r=3),
        ),
    )
    assert guaranteed_exponent(nested) == 3
