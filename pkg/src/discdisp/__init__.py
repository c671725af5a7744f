"""Dispersion orders and dispersion measures for discrete distributions.

Distributions are finite, sorted ``(value, probability)`` tables, exact
(``Fraction``) by default.  The discrete dispersive orders ``⪯∧`` and
``⪯∨`` compare jump heights of the cdfs over overlapping jumps and the
lengths of constant stretches over the derived relations.
"""

from .dist import (
    APPROX,
    EXACT,
    DiscreteDist,
    abs_diff_dist,
    affine,
    binomial,
    cdf,
    centered,
    expectile,
    from_pmf,
    from_samples,
    geometric,
    mean,
    poisson,
    quantile,
    quantile_mid,
    shift,
    stop_loss,
    to_approx,
    uniform_range,
    uniform_set,
    variance,
)
from .errors import (
    BadParam,
    BadProbability,
    ConditionOneViolated,
    DiscDispError,
    DuplicateValue,
    FewerThanTwoAtoms,
    IndexOutOfRange,
    NonPositiveProb,
    NotLattice,
    ParseError,
    SumNotOne,
)
from .io import dist_from_json, dist_to_json, dump_dist, load_dist, read_counts_csv
from .measures import LEFT, MID, MeasureSpec, gmd, ienr, iqnr, mad, mdmad, median, parse_specs, sd
from .orders import (
    OrderVerdict,
    Witness,
    compare,
    is_lattice,
    leq_dil,
    leq_disc_and,
    leq_disc_lattice,
    leq_disc_or,
    leq_disp,
    leq_st,
    leq_weak_disp,
    shift_equivalence,
)
from .relations import RelationSet, nn_set, rel_and, rel_join, rel_or

__version__ = "0.1.0"

__all__ = [
    "APPROX",
    "EXACT",
    "DiscreteDist",
    "abs_diff_dist",
    "affine",
    "binomial",
    "cdf",
    "centered",
    "expectile",
    "from_pmf",
    "from_samples",
    "geometric",
    "mean",
    "poisson",
    "quantile",
    "quantile_mid",
    "shift",
    "stop_loss",
    "to_approx",
    "uniform_range",
    "uniform_set",
    "variance",
    "BadParam",
    "BadProbability",
    "ConditionOneViolated",
    "DiscDispError",
    "DuplicateValue",
    "FewerThanTwoAtoms",
    "IndexOutOfRange",
    "NonPositiveProb",
    "NotLattice",
    "ParseError",
    "SumNotOne",
    "dist_from_json",
    "dist_to_json",
    "dump_dist",
    "load_dist",
    "read_counts_csv",
    "LEFT",
    "MID",
    "MeasureSpec",
    "gmd",
    "ienr",
    "iqnr",
    "mad",
    "mdmad",
    "median",
    "parse_specs",
    "sd",
    "OrderVerdict",
    "Witness",
    "compare",
    "is_lattice",
    "leq_dil",
    "leq_disc_and",
    "leq_disc_lattice",
    "leq_disc_or",
    "leq_disp",
    "leq_st",
    "leq_weak_disp",
    "shift_equivalence",
    "RelationSet",
    "nn_set",
    "rel_and",
    "rel_join",
    "rel_or",
]
