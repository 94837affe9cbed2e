"""Seed maps, rescaling, densification, conjugation and random generators."""

from .conjugate import Conjugate, PLHomeomorphism, ci_besicovitch, conjugate
from .corpus import CorpusEntry, corpus, random_homeomorphism, random_walk_map
from .densify import (
    PartitionPeps,
    densify,
    epsilon_partition,
    monotone_pieces,
    rescale_g,
    rescale_h,
)
from .seed import DEFAULT_SCHEDULE, SeedMap, SeedSchedule, seed, seed_halves

__all__ = [
    "Conjugate",
    "PLHomeomorphism",
    "ci_besicovitch",
    "conjugate",
    "CorpusEntry",
    "corpus",
    "random_homeomorphism",
    "random_walk_map",
    "PartitionPeps",
    "densify",
    "epsilon_partition",
    "monotone_pieces",
    "rescale_g",
    "rescale_h",
    "DEFAULT_SCHEDULE",
    "SeedMap",
    "SeedSchedule",
    "seed",
    "seed_halves",
]
