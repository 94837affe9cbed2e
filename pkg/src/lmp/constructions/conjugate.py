"""Conjugation by piecewise-linear homeomorphisms and the perturbed-affine construction."""

from __future__ import annotations

from dataclasses import dataclass

from ..core.certify import StepDensity
from ..core.pamap import PAMap, compose
from ..core.rational import HALF, ONE, ZERO, Q
from .seed import DEFAULT_SCHEDULE, SeedSchedule, seed

__all__ = ["PLHomeomorphism", "Conjugate", "conjugate", "ci_besicovitch"]


class PLHomeomorphism(PAMap):
    """Strictly increasing PAMap fixing 0 and 1."""

    def _validate(self) -> None:
        super()._validate()
        if self.ys[0] != ZERO or self.ys[-1] != ONE:
            raise ValueError("homeomorphism must fix 0 and 1")
        if any(s <= 0 for s in self.slopes):
            raise ValueError("homeomorphism must have strictly positive slopes")

    @classmethod
    def from_map(cls, p: PAMap) -> "PLHomeomorphism":
        return cls._from_trusted(p.xs, p.ys)

    def inverse(self) -> "PLHomeomorphism":
        return PLHomeomorphism._from_trusted(self.ys, self.xs)

    def pushed_density(self) -> StepDensity:
        """Density of the measure ``nu(B) = lambda(p(B))``: the slope of ``p``."""
        return StepDensity(self.xs, self.slopes)


@dataclass(frozen=True)
class Conjugate:
    q: PAMap
    density: StepDensity  # invariant for q whenever f preserves Lebesgue measure


def conjugate(f: PAMap, p: PAMap) -> Conjugate:
    """``q = p^-1 ∘ f ∘ p`` together with the density carried to q's coordinates."""
    if not isinstance(p, PLHomeomorphism):
        try:
            p = PLHomeomorphism.from_map(p)
        except ValueError as exc:
            raise ValueError(f"p is not a homeomorphism: {exc}") from exc
    q = compose(p.inverse(), compose(f, p))
    return Conjugate(q, p.pushed_density())


def ci_besicovitch(
    g_affine: tuple,
    alpha,
    beta,
    seed_level: int,
    schedule: SeedSchedule = DEFAULT_SCHEDULE,
) -> PAMap:
    """``g + alpha * f1 - beta * f2`` for an affine ``g``.

    ``f1`` is the seed squeezed onto ``[0, 1/2]`` (zero on the right half) and
    ``f2`` the seed squeezed onto ``[1/2, 1]`` (zero on the left half). The
    result need not preserve Lebesgue measure.
    """
    slope, intercept = Q(g_affine[0]), Q(g_affine[1])
    alpha, beta = Q(alpha), Q(beta)
    f = seed(seed_level, schedule)
    pts = []
    for u, v in zip(f.xs, f.ys):
        x = u * HALF
        pts.append((x, slope * x + intercept + alpha * v))
    for u, v in zip(f.xs[1:], f.ys[1:]):
        x = HALF + u * HALF
        pts.append((x, slope * x + intercept - beta * v))
    lo = min(y for _, y in pts)
    hi = max(y for _, y in pts)
    if lo < ZERO or hi > ONE:
        raise ValueError(f"range [{lo}, {hi}] escapes [0, 1]; shrink alpha/beta")
    return PAMap(pts)
