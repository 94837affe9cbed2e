"""Finite-scale probes: density points, witnesses, entropy, Dini envelopes, box counts, crookedness."""

from .boxdim import BoxCountTable, box_count, box_dimension
from .crooked import CrookedRow, crookedness_check, find_crookedness_failure, is_delta_crooked, pair_condition
from .density import (
    DensityIdentityResult,
    DensitySet,
    density_identity_check,
    density_points,
    lemma2_check,
    truncated_density_set,
)
from .dini import DiniEnvelope, blowup_statistic, dini_envelopes, knot_fraction, min_max_right_quotient
from .entropy import (
    LapCounter,
    LapTable,
    LogCombination,
    UncertifiedMap,
    require_certified,
    rokhlin_entropy,
    topological_entropy_lower,
)
from .witness import WitnessReport, find_witness

__all__ = [
    "BoxCountTable",
    "box_count",
    "box_dimension",
    "CrookedRow",
    "crookedness_check",
    "find_crookedness_failure",
    "is_delta_crooked",
    "pair_condition",
    "DensitySet",
    "DensityIdentityResult",
    "density_identity_check",
    "density_points",
    "lemma2_check",
    "truncated_density_set",
    "DiniEnvelope",
    "blowup_statistic",
    "dini_envelopes",
    "knot_fraction",
    "min_max_right_quotient",
    "LapCounter",
    "LapTable",
    "LogCombination",
    "UncertifiedMap",
    "require_certified",
    "rokhlin_entropy",
    "topological_entropy_lower",
    "WitnessReport",
    "find_witness",
]
