"""Exact arithmetic, piecewise-affine maps, interval sets and certification."""

from .certify import (
    NotCertifiable,
    PreservationCertificate,
    PushforwardHistogram,
    StepDensity,
    certify_preservation,
    exact_pushforward_density,
    montecarlo_pushforward,
)
from .intervals import IntervalSet
from .pamap import PAFunction, PAMap, compose, compose_power, image, preimage, sup_distance
from .rational import (
    ONE,
    ZERO,
    DenominatorOverflow,
    Q,
    denominator_guard,
    format_rational,
    parse_rational,
)

__all__ = [
    "ONE",
    "ZERO",
    "Q",
    "DenominatorOverflow",
    "denominator_guard",
    "format_rational",
    "parse_rational",
    "IntervalSet",
    "PAFunction",
    "PAMap",
    "compose",
    "compose_power",
    "image",
    "preimage",
    "sup_distance",
    "NotCertifiable",
    "PreservationCertificate",
    "PushforwardHistogram",
    "StepDensity",
    "certify_preservation",
    "exact_pushforward_density",
    "montecarlo_pushforward",
]
