"""Interval witnesses that a measure-preserving PA map is not invertible almost everywhere."""

from __future__ import annotations

from dataclasses import dataclass

from ..core.certify import certify_preservation
from ..core.intervals import IntervalSet
from ..core.pamap import PAFunction, image
from ..core.rational import format_rational
from .entropy import UncertifiedMap

__all__ = ["WitnessReport", "find_witness"]


@dataclass(frozen=True)
class WitnessReport:
    Y: IntervalSet
    image_measure: object
    set_measure: object

    @property
    def margin(self):
        return self.image_measure - self.set_measure

    def to_json(self) -> dict:
        return {
            "Y": self.Y.to_json(),
            "imageMeasure": format_rational(self.image_measure),
            "setMeasure": format_rational(self.set_measure),
            "margin": format_rational(self.margin),
        }


def find_witness(f: PAFunction) -> WitnessReport | None:
    """A set ``Y`` with ``λ(f(Y)) > λ(Y)``, or ``None`` when ``f`` is monotone.

    Takes the first value cell covered by two or more branches and, among
    those, the steepest branch (leftmost on ties). Its source interval maps
    onto the whole cell while having measure ``width / |slope|``; in a
    certified map overlapping branches all have ``|slope| > 1``.
    Null sets go to null sets under a PA map, so removing any null set from
    ``Y`` leaves the margin unchanged.
    """
    cert = certify_preservation(f)
    if not cert.passed:
        raise UncertifiedMap(f"map does not preserve Lebesgue measure: {cert.summary()}")
    for cell in cert.cells:
        if len(cell.branches) < 2:
            continue
        best = min(cell.branches, key=lambda b: (-abs(b.slope), b.source[0]))
        Y = IntervalSet([best.source])
        report = WitnessReport(Y, image(f, Y).measure, Y.measure)
        assert report.margin > 0
        return report
    return None
