"""Exact rational feasibility of hyperplane-count systems.

Unknowns: a_i = number of hyperplanes containing exactly i members, for
the residue-admissible incidences i = n - h*q^r >= 0, plus (optionally)
b_j = ordered triple counts by span dimension j.  The equations are the
point/pair/triple double-counting identities.  Feasibility over the
nonnegative rationals (or integers) is decided by a phase-one simplex
with Bland's rule over Fraction, so every verdict is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import gauss_number

DEFAULT_NODE_LIMIT = 20000


@dataclass
class LinearSystem:
    q: int
    k: int
    r: int
    n: int
    v: int
    include_triples: bool
    labels: list[str]
    a_indices: list[int]
    b_dims: list[int]
    rows: list[tuple[list[Fraction], Fraction]]


def build_system(
    q: int,
    k: int,
    r: int,
    n: int,
    v: int,
    include_triples: bool = False,
    allow_full_hyperplane: bool = False,
) -> LinearSystem:
    """Assemble the counting identities for given (q, k, r, n, v).

    The incidence i = n (every member in one hyperplane) is impossible for
    sets spanning the ambient space and is omitted unless
    allow_full_hyperplane is set.  Triple variables exist only when
    include_triples, n >= 3 and the span dimension j can fit: 2k <= j <=
    min(3k, v).
    """
    if q < 2 or k < 1 or r < 1 or n < 1 or v < k:
        raise ValueError(f"bad parameters {(q, k, r, n, v)}")
    if n >= 2 and v < 2 * k:
        raise ValueError(f"two disjoint {k}-spaces do not fit in dimension {v}")
    delta = q**r
    a_indices = []
    i = n - delta
    while i >= 0:
        a_indices.append(i)
        i -= delta
    a_indices.reverse()
    if allow_full_hyperplane:
        a_indices.append(n)
    b_dims = []
    if include_triples and n >= 3:
        b_dims = list(range(2 * k, min(3 * k, v) + 1))
    labels = [f"a{i}" for i in a_indices] + [f"b{j}" for j in b_dims]
    na, nb = len(a_indices), len(b_dims)
    ncols = na + nb

    def arow(f):
        return [Fraction(f(i)) for i in a_indices] + [Fraction(0)] * nb

    rows = [
        (arow(lambda i: 1), Fraction(gauss_number(q, v))),
        (arow(lambda i: i), Fraction(n * gauss_number(q, v - k))),
    ]
    if n >= 2:
        rows.append(
            (arow(lambda i: i * (i - 1)), Fraction(n * (n - 1) * gauss_number(q, v - 2 * k)))
        )
    if b_dims:
        coeffs = arow(lambda i: i * (i - 1) * (i - 2))
        for t, j in enumerate(b_dims):
            coeffs[na + t] = Fraction(-gauss_number(q, v - j))
        rows.append((coeffs, Fraction(0)))
        total = [Fraction(0)] * na + [Fraction(1)] * nb
        rows.append((total, Fraction(n * (n - 1) * (n - 2))))
    return LinearSystem(q, k, r, n, v, include_triples, labels, a_indices, b_dims, rows)


@dataclass
class FeasibilityResult:
    status: str  # "feasible" | "infeasible" | "node_limit"
    certificate: dict | None = None  # label -> Fraction, exact
    infeasibility: Fraction | None = None  # positive phase-one optimum
    nodes: int = 0

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


def _phase_one(rows, ncols):
    """Minimize the artificial sum for A x = b, x >= 0, exactly.

    Returns (optimum, x) where x has length ncols; optimum == 0 means
    feasible and x is then a nonnegative rational solution.
    """
    m = len(rows)
    width = ncols + m + 1
    tab = []
    for i, (cs, rhs) in enumerate(rows):
        if rhs < 0:
            cs = [-c for c in cs]
            rhs = -rhs
        row = [Fraction(c) for c in cs] + [Fraction(0)] * m + [Fraction(rhs)]
        row[ncols + i] = Fraction(1)
        tab.append(row)
    basis = list(range(ncols, ncols + m))
    # w-row: w = sum of artificials, expressed in the nonbasic variables
    wrow = [sum(tab[i][j] for i in range(m)) for j in range(width)]
    for j in range(ncols, ncols + m):
        wrow[j] = Fraction(0)

    while True:
        enter = -1
        for j in range(ncols + m):  # Bland: first improving column
            if wrow[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            t = tab[i][enter]
            if t > 0:
                ratio = tab[i][-1] / t
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:  # pragma: no cover - w is bounded below by 0
            raise ArithmeticError("phase-one column unbounded")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        prow = tab[leave]
        for i in range(m):
            if i != leave and tab[i][enter]:
                c = tab[i][enter]
                tab[i] = [x - c * y for x, y in zip(tab[i], prow)]
        if wrow[enter]:
            c = wrow[enter]
            wrow = [x - c * y for x, y in zip(wrow, prow)]
        basis[leave] = enter

    x = [Fraction(0)] * (ncols + m)
    for i in range(m):
        x[basis[i]] = tab[i][-1]
    return wrow[-1], x[:ncols]


def lp_feasible(system: LinearSystem) -> FeasibilityResult:
    """Exact rational feasibility of the system with x >= 0."""
    opt, x = _phase_one(system.rows, len(system.labels))
    if opt != 0:
        return FeasibilityResult("infeasible", infeasibility=opt, nodes=1)
    _check_certificate(system.rows, x)
    cert = dict(zip(system.labels, x))
    return FeasibilityResult("feasible", certificate=cert, nodes=1)


def _check_certificate(rows, x):
    for cs, rhs in rows:
        acc = Fraction(0)
        for c, xi in zip(cs, x):
            acc += c * xi
        if acc != rhs:
            raise AssertionError("certificate fails an identity (solver bug)")
    for xi in x:
        if xi < 0:
            raise AssertionError("negative certificate entry (solver bug)")


def ilp_feasible(system: LinearSystem, node_limit: int = DEFAULT_NODE_LIMIT) -> FeasibilityResult:
    """Depth-first branch and bound for integer feasibility.

    Bounds x_j <= c / x_j >= c are added as extra rows with slack columns;
    each node is one exact LP.  All variables are bounded by the identities
    (row sums fix their totals), so the search terminates.
    """
    base_rows = system.rows
    ncols = len(system.labels)
    nodes = 0

    def solve(extra):
        width = ncols + len(extra)
        padded = [(list(cs) + [Fraction(0)] * len(extra), rhs) for cs, rhs in base_rows]
        for t, (j, sense, bound) in enumerate(extra):
            cs = [Fraction(0)] * width
            cs[j] = Fraction(1)
            cs[ncols + t] = Fraction(1 if sense == "le" else -1)
            padded.append((cs, Fraction(bound)))
        return _phase_one(padded, width)

    def dfs(extra):
        nonlocal nodes
        if nodes >= node_limit:
            return "node_limit", None
        nodes += 1
        opt, x = solve(extra)
        if opt != 0:
            return "infeasible", None
        frac_j = -1
        for j in range(ncols):
            if x[j].denominator != 1:
                frac_j = j
                break
        if frac_j < 0:
            return "feasible", x[:ncols]
        lo = x[frac_j].numerator // x[frac_j].denominator
        st, sol = dfs(extra + [(frac_j, "le", lo)])
        if st != "infeasible":
            return st, sol
        return dfs(extra + [(frac_j, "ge", lo + 1)])

    status, x = dfs([])
    if status == "feasible":
        _check_certificate(base_rows, x)
        if any(xi.denominator != 1 for xi in x):
            raise AssertionError("non-integer ILP certificate (solver bug)")
        return FeasibilityResult("feasible", certificate=dict(zip(system.labels, x)), nodes=nodes)
    if status == "node_limit":
        return FeasibilityResult("node_limit", nodes=nodes)
    return FeasibilityResult("infeasible", nodes=nodes)


@dataclass
class ScanReport:
    q: int
    k: int
    r: int
    n: int
    include_triples: bool
    integer: bool
    results: dict  # v -> FeasibilityResult

    @property
    def any_feasible(self) -> bool:
        return any(res.feasible for res in self.results.values())

    @property
    def all_infeasible(self) -> bool:
        return all(res.status == "infeasible" for res in self.results.values())

    @property
    def undecided(self) -> list:
        return [v for v, res in self.results.items() if res.status == "node_limit"]


def scan_dimensions(
    q: int,
    k: int,
    r: int,
    n: int,
    v_values,
    include_triples: bool = False,
    integer: bool = False,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> ScanReport:
    """Run the feasibility test for each ambient dimension in v_values.

    Infeasibility for every scanned v says nothing about unscanned ones;
    report consumers must carry the scanned range along with the verdict.
    """
    results = {}
    for v in v_values:
        system = build_system(q, k, r, n, v, include_triples)
        results[v] = ilp_feasible(system, node_limit) if integer else lp_feasible(system)
    return ScanReport(q, k, r, n, include_triples, integer, results)
