"""Which cardinalities n admit a q^r-divisible set of k-subspaces.

Three layers per n: the analytic exclusion sieve (minimum cardinality,
hyperplane average, convex quadratic), an optional exact LP/ILP scan over
a range of ambient dimensions, and the two-generator construction
semigroup (spreads and lifted rank-metric sets glued by direct sums).
Whatever is neither excluded nor constructed stays open, and the report
says so explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import lp
from .constructions import ConstructionRecipe
from .criteria import (
    average_excludes,
    below_minimum_excludes,
    min_cardinality,
    quadratic_excludes,
)

EXCLUDED = "Excluded"
OPEN = "OpenPossible"
CONSTRUCTIBLE = "Constructible"


@dataclass
class SpectrumEntry:
    n: int
    status: str  # "Excluded" | "OpenPossible" | "Constructible"
    reason: str | None = None
    witness: dict = field(default_factory=dict)
    recipe: ConstructionRecipe | None = None


def exclusion_for(q: int, k: int, r: int, n: int):
    """First firing analytic criterion for n, or None."""
    for test in (below_minimum_excludes, average_excludes, quadratic_excludes):
        verdict = test(q, k, r, n)
        if verdict.excluded:
            return verdict
    return None


@dataclass
class SpectrumReport:
    q: int
    k: int
    r: int
    n_max: int
    generators: tuple[int, int]  # (spread size c1, lifted size c2)
    entries: list[SpectrumEntry]

    def by_status(self, status: str) -> list[int]:
        return [e.n for e in self.entries if e.status == status]

    def entry(self, n: int) -> SpectrumEntry:
        return self.entries[n - 1]

    @property
    def admissible(self) -> list[int]:
        return [e.n for e in self.entries if e.status != EXCLUDED]

    @property
    def largest_excluded(self):
        ex = self.by_status(EXCLUDED)
        return max(ex) if ex else None


def _generator_sizes(q: int, k: int, r: int) -> tuple[int, int]:
    return min_cardinality(q, k, r), q ** (k + r)


def admissible_set(
    q: int,
    k: int,
    r: int,
    n_max: int,
    use_lp: bool = False,
    v_range=None,
    include_triples: bool = False,
    integer: bool = False,
    node_limit: int = lp.DEFAULT_NODE_LIMIT,
) -> SpectrumReport:
    """Sieve n = 1..n_max; each entry is Excluded (with witness) or stays open.

    The analytic tests run in a fixed order (minimum cardinality, then
    hyperplane average, then the convex quadratic) and the first to fire
    is recorded.  With use_lp, a survivor is additionally tried against
    the exact counting-identity systems for each ambient dimension in
    v_range (default 2k..2k+2r) and excluded only if every single one is
    proven infeasible.
    """
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    if v_range is None:
        v_range = range(2 * k, 2 * k + 2 * r + 1)
    v_values = list(v_range)
    entries = []
    for n in range(1, n_max + 1):
        verdict = exclusion_for(q, k, r, n)
        if verdict is not None:
            entries.append(SpectrumEntry(n, EXCLUDED, verdict.reason, verdict.witness))
            continue
        if use_lp:
            scan = lp.scan_dimensions(
                q, k, r, n, v_values,
                include_triples=include_triples, integer=integer, node_limit=node_limit,
            )
            if scan.all_infeasible:
                witness = {"v_values": v_values, "integer": integer}
                entries.append(SpectrumEntry(n, EXCLUDED, "LPScan", witness))
                continue
        entries.append(SpectrumEntry(n, OPEN))
    return SpectrumReport(q, k, r, n_max, _generator_sizes(q, k, r), entries)


def semigroup_generators(q: int, k: int, r: int) -> tuple[ConstructionRecipe, ConstructionRecipe]:
    """The two basic recipes: the smallest spread and the lifted MRD set."""
    a, b = divmod(r, k)
    s = a + 2 if b else a + 1
    return (
        ConstructionRecipe("spread", q=q, k=k, s=s),
        ConstructionRecipe("lifted_mrd", q=q, k=k, r=r),
    )


def constructible_set(q: int, k: int, r: int, n_max: int) -> dict:
    """n -> (x, y, recipe) for every n <= n_max reachable as x*c1 + y*c2.

    c1 is the minimal spread size, c2 = q^(k+r) the lifted set size; the
    witness with the fewest lifted summands is chosen.
    """
    spread_recipe, mrd_recipe = semigroup_generators(q, k, r)
    c1, c2 = _generator_sizes(q, k, r)
    out = {}
    for n in range(1, n_max + 1):
        for y in range(n // c2 + 1):
            rest = n - y * c2
            if rest % c1 == 0:
                x = rest // c1
                parts = (spread_recipe,) * x + (mrd_recipe,) * y
                recipe = parts[0] if len(parts) == 1 else ConstructionRecipe(
                    "direct_sum", parts=parts
                )
                out[n] = (x, y, recipe)
                break
    return out


def report(
    q: int,
    k: int,
    r: int,
    n_max: int,
    use_lp: bool = False,
    v_range=None,
    include_triples: bool = False,
    integer: bool = False,
    node_limit: int = lp.DEFAULT_NODE_LIMIT,
) -> SpectrumReport:
    """Merge the exclusion sieve with the construction semigroup.

    A cardinality that is both excluded and constructed would mean a bug
    in one of the two sides, so that case raises instead of reporting.
    """
    rep = admissible_set(
        q, k, r, n_max,
        use_lp=use_lp, v_range=v_range, include_triples=include_triples,
        integer=integer, node_limit=node_limit,
    )
    built = constructible_set(q, k, r, n_max)
    for e in rep.entries:
        if e.n not in built:
            continue
        x, y, recipe = built[e.n]
        if e.status == EXCLUDED:
            raise AssertionError(
                f"n={e.n} both excluded ({e.reason}) and constructible (criteria bug)"
            )
        e.status = CONSTRUCTIBLE
        e.witness = {"spreads": x, "lifted": y}
        e.recipe = recipe
    return rep
