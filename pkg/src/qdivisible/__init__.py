"""Exact analysis of divisible sets of subspaces over finite fields.

A set of k-dimensional subspaces of GF(q)^v, pairwise intersecting only
in 0, has divisibility exponent r when q^r divides n minus the number of
members inside H for every hyperplane H.  This package computes the
hyperplane and triple spectra of explicit sets, decides which
cardinalities n the analytic criteria exclude, proves sharper exclusions
by exact rational (I)LP over the counting identities, and realizes the
attainable cardinalities by spread, lifted-MRD and direct-sum
constructions.
"""

from .algebra import FieldContext, GFMatrix, field_context, gauss_number, prime_power
from .constructions import (
    ConstructionRecipe,
    direct_sum,
    guaranteed_exponent,
    lifted_mrd,
    realize,
    spread,
)
from .criteria import (
    ExclusionVerdict,
    TailBoundReport,
    average_excludes,
    below_minimum_excludes,
    excluded_intervals,
    heden_tail_bound,
    min_cardinality,
    min_cardinality_multiple,
    quadratic_excludes,
    tau,
    tau_window,
)
from .lp import build_system, ilp_feasible, lp_feasible, scan_dimensions
from .spectrum import admissible_set, constructible_set, report, semigroup_generators
from .subspaces import (
    Classification,
    IncidenceSpectrum,
    Subspace,
    SubspaceSet,
    TripleSpectrum,
    canonicalize,
    check_counting_identities,
    classify_spectrum,
    counting_identity_report,
    coverage,
    divisibility_exponent,
    hyperplane_spectrum,
    pairwise_disjoint,
    span_and_restrict,
    subspace_set,
    triple_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "FieldContext",
    "GFMatrix",
    "field_context",
    "gauss_number",
    "prime_power",
    "ConstructionRecipe",
    "direct_sum",
    "guaranteed_exponent",
    "lifted_mrd",
    "realize",
    "spread",
    "ExclusionVerdict",
    "TailBoundReport",
    "average_excludes",
    "below_minimum_excludes",
    "excluded_intervals",
    "heden_tail_bound",
    "min_cardinality",
    "min_cardinality_multiple",
    "quadratic_excludes",
    "tau",
    "tau_window",
    "build_system",
    "ilp_feasible",
    "lp_feasible",
    "scan_dimensions",
    "admissible_set",
    "constructible_set",
    "report",
    "semigroup_generators",
    "Classification",
    "IncidenceSpectrum",
    "Subspace",
    "SubspaceSet",
    "TripleSpectrum",
    "canonicalize",
    "check_counting_identities",
    "classify_spectrum",
    "counting_identity_report",
    "coverage",
    "divisibility_exponent",
    "hyperplane_spectrum",
    "pairwise_disjoint",
    "span_and_restrict",
    "subspace_set",
    "triple_spectrum",
]
