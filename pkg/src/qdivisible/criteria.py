"""Analytic exclusion criteria and cardinality bounds.

Everything here is closed-form integer arithmetic on the cardinality n of
a hypothetical set of k-subspaces with divisibility exponent r over GF(q).
The three exclusion tests (minimum cardinality, hyperplane average,
convex quadratic) are each independent of the ambient dimension; the
interval form repackages the quadratic test per convexity parameter m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


def tau(n: int, delta: int, u: int, m: int) -> int:
    """Convex quadratic in m whose negativity is impossible for real sets.

    tau = delta^2 u^2 m(m-1) - n(2m-1)u(u-1)delta + n(u-1)(n(u-1)+1),
    evaluated with delta = q^r and u = q^k.  For any actual set,
    tau * q^(v-2k-2r) >= m(m-1) for every integer m, so tau < 0 (or
    tau <= 0 away from m in {0, 1}) rules n out in every dimension.
    """
    return (
        delta * delta * u * u * m * (m - 1)
        - n * (2 * m - 1) * u * (u - 1) * delta
        + n * (u - 1) * (n * (u - 1) + 1)
    )


def tau_window(q: int, k: int, r: int, n: int) -> list[tuple[int, int]]:
    """(m, tau) on an integer window certain to contain the minimum.

    The vertex sits at 1/2 + n(u-1)/(delta*u); the window spans two
    integers beyond it on each side and is widened while tau still
    decreases toward an edge (it never does, tau is convex, but the guard
    costs nothing).
    """
    delta, u = q**r, q**k
    m0 = (delta * u + 2 * n * (u - 1)) // (2 * delta * u)  # floor(vertex)
    lo, hi = m0 - 2, m0 + 3

    def t(m):
        return tau(n, delta, u, m)

    while t(lo) < t(lo + 1):
        lo -= 1
    while t(hi) < t(hi - 1):
        hi += 1
    return [(m, t(m)) for m in range(lo, hi + 1)]


@dataclass
class ExclusionVerdict:
    """Outcome of one analytic test.

    reason is one of "BelowMinimum", "AverageBound", "Quadratic",
    "Interval" (present iff excluded); witness carries the firing values
    (minimum / residue / m and tau / interval bounds).
    """

    excluded: bool
    reason: str | None = None
    witness: dict = field(default_factory=dict)


def _valuation(x: int, q: int) -> int:
    r = 0
    while x and x % q == 0:
        x //= q
        r += 1
    return r


def _check_qkr(q, k, r):
    if q < 2 or k < 1 or r < 1:
        raise ValueError(f"need q >= 2, k >= 1, r >= 1, got {(q, k, r)}")


def min_cardinality(q: int, k: int, r: int) -> int:
    """Smallest possible size of a set with divisibility exponent >= r."""
    _check_qkr(q, k, r)
    if r < k:
        return q**k + 1
    a, b = divmod(r, k)
    if b == 0:
        return (q ** (k + r) - 1) // (q**k - 1)
    return (q ** ((a + 2) * k) - 1) // (q**k - 1)


def min_cardinality_multiple(q: int, k: int, r: int) -> int:
    """Smallest size that is additionally a multiple of q^r."""
    _check_qkr(q, k, r)
    if r < k:
        return q ** (k + r) - q**k + q**r
    return q ** (k + r)


def below_minimum_excludes(q: int, k: int, r: int, n: int) -> ExclusionVerdict:
    m = min_cardinality(q, k, r)
    if 1 <= n < m:
        return ExclusionVerdict(True, "BelowMinimum", {"minimum": m})
    return ExclusionVerdict(False)


def average_excludes(q: int, k: int, r: int, n: int) -> ExclusionVerdict:
    """Residue test: the mean hyperplane incidence forces n mod q^r * q^k <= n."""
    _check_qkr(q, k, r)
    rho = n % q**r
    if rho * q**k > n:
        return ExclusionVerdict(True, "AverageBound", {"residue": rho})
    return ExclusionVerdict(False)


def quadratic_excludes(q: int, k: int, r: int, n: int) -> ExclusionVerdict:
    """Scan the tau window; report the deepest violation if any."""
    _check_qkr(q, k, r)
    fires = []
    for m, t in tau_window(q, k, r, n):
        if t < 0 or (t == 0 and m not in (0, 1)):
            fires.append((t, m))
    if fires:
        t, m = min(fires)
        return ExclusionVerdict(True, "Quadratic", {"m": m, "tau": t})
    return ExclusionVerdict(False)


@dataclass(frozen=True)
class IntervalExclusions:
    """Closed-form version of the quadratic test.

    base_end: n < base_end is excluded outright (no set smaller than the
    minimal one).  intervals: inclusive integer ranges (m, lo, hi), one
    per convexity parameter m >= 2 with a real root window.
    """

    q: int
    k: int
    r: int
    base_end: Fraction
    m_max: int
    intervals: tuple[tuple[int, int, int], ...]

    def find(self, n: int) -> dict | None:
        if 1 <= n < self.base_end:
            return {"base": True}
        for m, lo, hi in self.intervals:
            if lo <= n <= hi:
                return {"m": m, "lo": lo, "hi": hi}
        return None


def _floor_add_sqrt(a: int, w: int, b: int) -> int:
    """floor((a + sqrt(w)) / b) for integers, b > 0, w >= 0, exactly."""
    t = (a + math.isqrt(w)) // b
    while b * (t + 1) - a <= 0 or (b * (t + 1) - a) ** 2 <= w:
        t += 1
    return t


def _ceil_sub_sqrt(a: int, w: int, b: int) -> int:
    """ceil((a - sqrt(w)) / b) for integers, b > 0, w >= 0, exactly."""
    t = -((math.isqrt(w) - a) // b)  # ceil((a - isqrt(w)) / b), at or above target
    while a - b * (t - 1) <= 0 or (a - b * (t - 1)) ** 2 <= w:
        t -= 1
    return t


def excluded_intervals(q: int, k: int, r: int) -> IntervalExclusions:
    _check_qkr(q, k, r)
    delta, u = q**r, q**k
    du = delta * u
    base_end = Fraction(q ** (k + r) - 1, q**r - 1)
    m_max = (du * du + 2 * du + 1) // (4 * du)
    out = []
    for m in range(2, m_max + 1):
        w = (du - 2 * m) ** 2 + (2 * du + 1 - 4 * m * m)
        if w < 0:
            continue
        a = 2 * du * m - du - 1
        b = 2 * (u - 1)
        lo = _ceil_sub_sqrt(a, w, b)
        hi = _floor_add_sqrt(a, w, b)
        if lo <= hi:
            out.append((m, lo, hi))
    return IntervalExclusions(q, k, r, base_end, m_max, tuple(out))


# ---------------------------------------------------------------------------
# tail bounds for partial k-spreads with two hole dimensions

@dataclass
class TailBoundReport:
    """Lower bounds on the number u1 of smaller holes.

    heden_bound is the classical bound (strict when the inequality is
    u1 > bound rather than >=); improved_bound is the least cardinality a
    divisible set of the forced exponent can have, which is what the hole
    configuration actually is.
    """

    q: int
    d1: int
    d2: int
    multiple: bool
    case: str  # "i" | "ii" | "iii" | "iv"
    heden_bound: int
    heden_strict: bool
    improved_bound: int
    b_free_bound: int | None = None
    notes: tuple[str, ...] = ()


def heden_tail_bound(q: int, d1: int, d2: int, multiple: bool) -> TailBoundReport:
    """Compare the classical tail bound with the divisibility bound.

    d1 < d2 are the two hole dimensions, u1 counts the d1-dim holes, and
    `multiple` states whether u1 is known to be divisible by q^(d2-d1).
    The d1-dim holes form a set with divisibility exponent >= d2 - d1, so
    min_cardinality (or its multiple-constrained variant) applies.
    """
    if not 1 <= d1 < d2:
        raise ValueError(f"need 1 <= d1 < d2, got {(d1, d2)}")
    r = d2 - d1
    notes = []
    b_free = None
    if not multiple:
        if d2 < 2 * d1:
            case = "i"
            bound, strict = q**d1 + 1, False
        else:
            case = "ii"
            if d2 % d1 == 0:
                bound, strict = (q**d2 - 1) // (q**d1 - 1), False
            else:
                bound, strict = 2 * q**r, True
                b_free = q ** (r + 1) + _ceil_div(q ** (r + 1) - 1, q**d1 - 1)
        improved = min_cardinality(q, d1, r)
    else:
        if d2 < 2 * d1:
            case = "iii"
            bound, strict = q**d2 - q**d1 + q**r, False
        else:
            case = "iv"
            bound, strict = q**d2, False
        improved = min_cardinality_multiple(q, d1, r)
    floor_classical = bound + 1 if strict else bound
    if improved > floor_classical:
        notes.append(f"divisibility raises the bound from {floor_classical} to {improved}")
    return TailBoundReport(
        q, d1, d2, multiple, case, bound, strict, improved, b_free, tuple(notes)
    )


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)
