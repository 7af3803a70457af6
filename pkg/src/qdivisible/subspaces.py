"""Sets of k-subspaces of GF(q)^v and their hyperplane statistics.

A subspace is held as its canonical generator matrix (reduced row echelon,
rank k), so equality of subspaces is equality of matrices.  The two
enumeration-heavy statistics (hyperplane incidence counts and triple span
dimensions) are delegated to the kernel backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .algebra import FieldContext, GFMatrix, gauss_number

DEFAULT_POINT_CAP = 10**6  # refuse hyperplane enumeration beyond this many points


@dataclass(frozen=True)
class Subspace:
    """A k-dim subspace of GF(q)^v, generator matrix in reduced echelon form."""

    gen: GFMatrix

    @property
    def k(self) -> int:
        return self.gen.nrows

    @property
    def v(self) -> int:
        return self.gen.ncols


def canonicalize(m: GFMatrix) -> Subspace:
    """Subspace spanned by the rows of m; the rows must be independent."""
    r, rank = m.rref()
    if rank != m.nrows:
        raise ValueError(f"rows are dependent: rank {rank} < {m.nrows}")
    return Subspace(r)


@dataclass(frozen=True)
class SubspaceSet:
    """A finite list of distinct k-subspaces of a common GF(q)^v."""

    ctx: FieldContext
    v: int
    k: int
    members: tuple[Subspace, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("a subspace set needs at least one member")
        if not 1 <= self.k <= self.v:
            raise ValueError(f"need 1 <= k <= v, got k={self.k} v={self.v}")
        seen = set()
        for s in self.members:
            if s.gen.ctx.q != self.ctx.q or s.k != self.k or s.v != self.v:
                raise ValueError("member does not match the set's (q, v, k)")
            if s.gen.rows in seen:
                raise ValueError("duplicate member")
            seen.add(s.gen.rows)

    @property
    def n(self) -> int:
        return len(self.members)


def subspace_set(ctx: FieldContext, v: int, k: int, matrices) -> SubspaceSet:
    """Build a set from row iterables, canonicalizing each member."""
    members = []
    for rows in matrices:
        m = rows if isinstance(rows, GFMatrix) else GFMatrix.from_rows(ctx, rows)
        members.append(canonicalize(m))
    return SubspaceSet(ctx, v, k, tuple(members))


def member_points(sub: Subspace) -> frozenset:
    """The 1-dim subspaces inside sub, as normalized coordinate tuples."""
    ctx = sub.gen.ctx
    q = ctx.q
    rows = sub.gen.rows
    k, v = sub.k, sub.v
    pts = set()
    coeff = [0] * k
    for _ in range(q**k - 1):
        # odometer over nonzero coefficient vectors
        i = 0
        while coeff[i] == q - 1:
            coeff[i] = 0
            i += 1
        coeff[i] += 1
        vec = [0] * v
        for r in range(k):
            cr = coeff[r]
            if cr:
                row = rows[r]
                for c in range(v):
                    if row[c]:
                        vec[c] = ctx.add(vec[c], ctx.mul(cr, row[c]))
        lead = next(c for c in range(v) if vec[c])
        li = ctx.inv(vec[lead])
        if li != 1:
            vec = [ctx.mul(li, x) for x in vec]
        pts.add(tuple(vec))
    return frozenset(pts)


def coverage(s: SubspaceSet) -> dict:
    """Multiplicity of every covered point across the members."""
    out: dict = {}
    for sub in s.members:
        for p in member_points(sub):
            out[p] = out.get(p, 0) + 1
    return out


def first_overlap(s: SubspaceSet):
    """Indices of the first member pair with nontrivial intersection, or None."""
    for i in range(s.n):
        gi = s.members[i].gen
        for j in range(i + 1, s.n):
            if gi.stack(s.members[j].gen).rank() != 2 * s.k:
                return (i, j)
    return None


def pairwise_disjoint(s: SubspaceSet) -> bool:
    return first_overlap(s) is None


def span_and_restrict(s: SubspaceSet) -> tuple[SubspaceSet, int]:
    """Re-express the set inside its own span.

    Returns (restricted set in GF(q)^d coordinates, d) where d is the
    dimension of the joint span.  When the set already spans GF(q)^v the
    set itself is returned.
    """
    stacked = s.members[0].gen
    for sub in s.members[1:]:
        stacked = stacked.stack(sub.gen)
    ech, d = stacked.rref()
    if d == s.v:
        return s, d
    basis = ech.rows[:d]
    pivots = []
    for row in basis:
        pivots.append(next(c for c in range(s.v) if row[c]))
    # a row in the span equals sum row[p_t] * basis_t, so its coordinates
    # in the basis are just its entries at the pivot columns
    members = []
    for sub in s.members:
        rows = [tuple(r[p] for p in pivots) for r in sub.gen.rows]
        members.append(canonicalize(GFMatrix.from_rows(s.ctx, rows)))
    return SubspaceSet(s.ctx, d, s.k, tuple(members)), d


@dataclass(frozen=True)
class IncidenceSpectrum:
    """Sparse histogram: counts[(i, a_i)] with a_i > 0, ascending in i."""

    q: int
    v: int
    k: int
    n: int
    counts: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict:
        return dict(self.counts)


@dataclass(frozen=True)
class TripleSpectrum:
    """Ordered triple counts by span dimension: (j, b_j) with b_j > 0."""

    q: int
    v: int
    k: int
    n: int
    counts: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict:
        return dict(self.counts)


def _flat_gens(s: SubspaceSet):
    return [x for sub in s.members for row in sub.gen.rows for x in row]


def hyperplane_spectrum(s: SubspaceSet, point_cap: int = DEFAULT_POINT_CAP) -> IncidenceSpectrum:
    """Exact histogram of members-per-hyperplane over all hyperplanes."""
    npts = gauss_number(s.ctx.q, s.v)
    if npts > point_cap:
        raise ValueError(
            f"{npts} hyperplanes exceeds the enumeration cap {point_cap}"
        )
    f = s.ctx
    hist = kernels.incidence_histogram(
        f.q, s.v, s.n, s.k, _flat_gens(s), f.add_table, f.mul_table
    )
    counts = tuple((i, c) for i, c in enumerate(hist) if c)
    return IncidenceSpectrum(f.q, s.v, s.k, s.n, counts)


def triple_spectrum(s: SubspaceSet) -> TripleSpectrum:
    """Ordered triples of distinct members, counted by span dimension."""
    f = s.ctx
    hist = kernels.triple_dim_histogram(
        f.q, s.v, s.n, s.k, _flat_gens(s),
        f.add_table, f.mul_table, f.neg_table, f.inv_table,
    )
    counts = tuple((j, 6 * c) for j, c in enumerate(hist) if c)
    return TripleSpectrum(f.q, s.v, s.k, s.n, counts)


def divisibility_exponent(s: SubspaceSet, point_cap: int = DEFAULT_POINT_CAP) -> int:
    """Largest r such that q^r divides n minus every hyperplane incidence.

    The set is first restricted to its span (the ambient space matters:
    unused dimensions would make every residue count spurious hyperplanes),
    and must be pairwise disjoint.
    """
    restricted, _ = span_and_restrict(s)
    bad = first_overlap(restricted)
    if bad is not None:
        raise ValueError(f"members {bad[0]} and {bad[1]} intersect nontrivially")
    spec = hyperplane_spectrum(restricted, point_cap)
    g = 0
    for i, _c in spec.counts:
        g = math.gcd(g, s.n - i)
    # members span the space, so some hyperplane misses some member: g >= 1
    q = s.ctx.q
    r = 0
    while g % q == 0:
        g //= q
        r += 1
    return r


def _bracket(q: int, m: int) -> int:
    """gauss_number extended by 0 on negative arguments."""
    return gauss_number(q, m) if m >= 0 else 0


def counting_identity_report(
    a: IncidenceSpectrum,
    b: TripleSpectrum | None,
    q: int,
    v: int,
    k: int,
    n: int,
) -> dict:
    """Which of the standard double-counting identities hold for the spectra.

    Keys: points, pairs_k, pairs_2k, triples_sum, triples_total (the last
    two only when a triple spectrum is supplied).  A check whose count
    factor n(n-1) or n(n-1)(n-2) vanishes is trivially true.
    """
    counts = a.counts
    out = {}
    out["points"] = sum(ai for _i, ai in counts) == gauss_number(q, v)
    out["pairs_k"] = sum(i * ai for i, ai in counts) == n * _bracket(q, v - k)
    if n < 2:
        out["pairs_2k"] = True
    else:
        lhs2 = sum(i * (i - 1) * ai for i, ai in counts)
        out["pairs_2k"] = lhs2 == n * (n - 1) * _bracket(q, v - 2 * k)
    if b is not None:
        if n < 3:
            out["triples_sum"] = True
            out["triples_total"] = True
        else:
            lhs3 = sum(i * (i - 1) * (i - 2) * ai for i, ai in counts)
            rhs3 = sum(bj * _bracket(q, v - j) for j, bj in b.counts)
            out["triples_sum"] = lhs3 == rhs3
            out["triples_total"] = sum(bj for _j, bj in b.counts) == n * (n - 1) * (n - 2)
    return out


def check_counting_identities(
    a: IncidenceSpectrum,
    b: TripleSpectrum | None,
    q: int,
    v: int,
    k: int,
    n: int,
) -> bool:
    return all(counting_identity_report(a, b, q, v, k, n).values())


@dataclass(frozen=True)
class Classification:
    kind: str  # "Spread" | "PartitionOf2k" | "Unclassified"
    detail: tuple[tuple[str, int], ...] = ()

    def as_dict(self) -> dict:
        return dict(self.detail)


def classify_spectrum(a: IncidenceSpectrum | dict, q: int, v: int, k: int) -> Classification:
    """Recognize the two rigid spectrum shapes.

    A q-divisible set of size q^k + 1 partitions GF(q)^(2k); a spectrum
    concentrated on a single positive incidence count is a spread with
    (q^(v-k)-1)/(q^k-1) members in every hyperplane.  The partition test
    runs first: the q^k + 1 spread of GF(q)^(2k) is both, and the sharper
    label wins.  A plain dict {i: a_i} is accepted in place of a spectrum;
    the set size is then recovered from the pair-counting identity.

    Data matching a recognizable shape but violating its closed forms
    raises ValueError rather than returning a wrong label.
    """
    if isinstance(a, dict):
        counts = tuple(sorted(a.items()))
        inc = sum(i * ai for i, ai in counts)
        per_member = _bracket(q, v - k)
        if per_member == 0 or inc % per_member:
            raise ValueError("cannot recover the set size from this spectrum")
        n = inc // per_member
    else:
        counts = a.counts
        n = a.n
    if not counts:
        raise ValueError("empty spectrum")
    divisible = all((n - i) % q == 0 for i, _ai in counts)
    if divisible and n == q**k + 1:
        if v != 2 * k:
            raise ValueError(f"q^k+1 divisible set needs v = 2k, got v={v} k={k}")
        if n * gauss_number(q, k) != gauss_number(q, v):
            raise ValueError("member points do not cover the space")
        return Classification("PartitionOf2k", (("v", v),))
    if len(counts) == 1 and counts[0][0] > 0:
        r, ar = counts[0]
        if v % k != 0:
            raise ValueError(f"constant spectrum needs k | v, got v={v} k={k}")
        if n != gauss_number(q, v) // gauss_number(q, k):
            raise ValueError(f"a spread of GF({q})^{v} has {gauss_number(q, v) // gauss_number(q, k)} members, not {n}")
        if r != (q ** (v - k) - 1) // (q**k - 1):
            raise ValueError(f"a spread meets every hyperplane in {(q ** (v - k) - 1) // (q**k - 1)} members, not {r}")
        if ar != gauss_number(q, v):
            raise ValueError("hyperplane count does not match the ambient space")
        return Classification("Spread", (("r", r),))
    return Classification("Unclassified")
