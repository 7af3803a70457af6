"""Constructions of divisible subspace sets.

Three families: block spreads (points of a projective space over GF(q^k)
expanded by multiplication matrices), lifted maximum-rank-distance sets,
and ambient-padding direct sums.  Every construction returns a plain
SubspaceSet; nothing here is verified at build time, the checks live in
subspaces and in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import GFMatrix, extension_rep, field_context, gauss_number, mult_matrix
from .subspaces import Subspace, SubspaceSet

DEFAULT_MEMBER_CAP = 4096


def spread(q: int, k: int, s: int, member_cap: int = DEFAULT_MEMBER_CAP) -> SubspaceSet:
    """The standard k-spread of GF(q)^(s*k).

    Members correspond to the normalized vectors of GF(q^k)^s (first
    nonzero entry 1); entry x becomes the k x k multiplication matrix of x
    and the blocks are laid side by side.  Every point of the ambient
    space is covered exactly once; the divisibility exponent is (s-1)*k.
    """
    if k < 1 or s < 1:
        raise ValueError("need k >= 1 and s >= 1")
    ext = extension_rep(q, k)
    E = ext.order
    n = gauss_number(E, s)
    if n > member_cap:
        raise ValueError(f"spread would have {n} members, above cap {member_cap}")
    ctx = field_context(q)
    blocks = [mult_matrix(ext, a).rows for a in range(E)]
    members = []
    for lead in range(s):
        for tail in itertools.product(range(E), repeat=s - 1 - lead):
            vec = (0,) * lead + (1,) + tail
            rows = []
            for r in range(k):
                row = ()
                for x in vec:
                    row += blocks[x][r]
                rows.append(row)
            members.append(Subspace(GFMatrix(ctx, tuple(rows))))
    return SubspaceSet(ctx, s * k, k, tuple(members))


def lifted_mrd(q: int, k: int, r: int, member_cap: int = DEFAULT_MEMBER_CAP) -> SubspaceSet:
    """Lifted linear maximum-rank-distance set in GF(q)^(2k+r).

    One member [I | B(a)] per element a of GF(q^(k+r)), where B(a) is the
    first k rows of the multiplication matrix of a.  B(a) - B(b) = B(a-b)
    has full rank k for a != b, so the members are pairwise disjoint.  The
    q^(k+r) members cover exactly the points outside the r+k dim space
    where the first k coordinates vanish... see the coverage test.
    """
    if k < 1 or r < 1:
        raise ValueError("need k >= 1 and r >= 1")
    ext = extension_rep(q, k + r)
    n = ext.order
    if n > member_cap:
        raise ValueError(f"lifted set would have {n} members, above cap {member_cap}")
    ctx = field_context(q)
    members = []
    for a in range(n):
        top = mult_matrix(ext, a).rows[:k]
        rows = tuple(
            tuple(1 if c == i else 0 for c in range(k)) + top[i] for i in range(k)
        )
        members.append(Subspace(GFMatrix(ctx, rows)))
    return SubspaceSet(ctx, 2 * k + r, k, tuple(members))


def direct_sum(s1: SubspaceSet, s2: SubspaceSet) -> SubspaceSet:
    """Place two sets in complementary coordinate blocks of GF(q)^(v1+v2).

    The divisibility exponent of the result is at least the smaller of the
    two inputs' exponents.
    """
    if s1.ctx.q != s2.ctx.q:
        raise ValueError("mixed fields")
    if s1.k != s2.k:
        raise ValueError("member dimensions differ")
    ctx = s1.ctx
    v = s1.v + s2.v
    left = [
        Subspace(GFMatrix(ctx, tuple(row + (0,) * s2.v for row in m.gen.rows)))
        for m in s1.members
    ]
    right = [
        Subspace(GFMatrix(ctx, tuple((0,) * s1.v + row for row in m.gen.rows)))
        for m in s2.members
    ]
    return SubspaceSet(ctx, v, s1.k, tuple(left + right))


@dataclass(frozen=True)
class ConstructionRecipe:
    """Deferred construction: realize() turns it into an actual set."""

    kind: str  # "spread" | "lifted_mrd" | "direct_sum"
    q: int = 0
    k: int = 0
    s: int = 0
    r: int = 0
    parts: tuple["ConstructionRecipe", ...] = ()

    def describe(self) -> str:
        if self.kind == "spread":
            return f"spread(q={self.q}, k={self.k}, s={self.s})"
        if self.kind == "lifted_mrd":
            return f"lifted_mrd(q={self.q}, k={self.k}, r={self.r})"
        return " + ".join(p.describe() for p in self.parts)


def realize(recipe: ConstructionRecipe, member_cap: int = DEFAULT_MEMBER_CAP) -> SubspaceSet:
    if recipe.kind == "spread":
        return spread(recipe.q, recipe.k, recipe.s, member_cap)
    if recipe.kind == "lifted_mrd":
        return lifted_mrd(recipe.q, recipe.k, recipe.r, member_cap)
    if recipe.kind == "direct_sum":
        if not recipe.parts:
            raise ValueError("empty direct sum")
        out = realize(recipe.parts[0], member_cap)
        for p in recipe.parts[1:]:
            out = direct_sum(out, realize(p, member_cap))
        return out
    raise ValueError(f"unknown recipe kind {recipe.kind!r}")


def guaranteed_exponent(recipe: ConstructionRecipe) -> int:
    """Exponent the construction promises (measurement may exceed it)."""
    if recipe.kind == "spread":
        return (recipe.s - 1) * recipe.k
    if recipe.kind == "lifted_mrd":
        return recipe.r
    if recipe.kind == "direct_sum":
        return min(guaranteed_exponent(p) for p in recipe.parts)
    raise ValueError(f"unknown recipe kind {recipe.kind!r}")
