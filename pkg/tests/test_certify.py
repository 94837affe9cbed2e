from fractions import Fraction as F

import pytest
from hypothesis import given

import oracles
from conftest import measure_preserving_maps, pa_maps
from lmp.constructions import PLHomeomorphism, conjugate
from lmp.core import (
    NotCertifiable,
    PAMap,
    StepDensity,
    certify_preservation,
    exact_pushforward_density,
    montecarlo_pushforward,
)

T = PAMap.tent()
BROKEN = PAMap([(0, 0), (F(1, 2), 1), (1, F(1, 2))])


def test_tent_and_identity_pass():
    assert certify_preservation(T).passed
    assert certify_preservation(PAMap.identity()).passed
    assert certify_preservation(PAMap.reflection()).passed


def test_broken_map_reports_cells_and_deficiencies():
    cert = certify_preservation(BROKEN)
    assert not cert.passed
    bad = {(c.lo, c.hi, c.closed_right): c.deficiency for c in cert.failing_cells()}
    assert bad == {(0, F(1, 2), False): F(1, 2), (F(1, 2), 1, True): F(-1, 2)}


def test_zero_slope_is_not_certifiable():
    with pytest.raises(NotCertifiable):
        certify_preservation(PAMap([(0, 0), (F(1, 2), F(1, 2)), (1, F(1, 2))]))


@given(pa_maps())
def test_certificate_agrees_with_measure_oracle(f):
    if any(s == 0 for s in f.slopes):
        return
    assert certify_preservation(f).passed == oracles.is_measure_preserving(oracles.pts(f))


@given(measure_preserving_maps())
def test_generated_maps_pass(f):
    assert certify_preservation(f).passed
    assert exact_pushforward_density(f, 16) == [1] * 16


def test_weighted_certificate_for_conjugate():
    p = PLHomeomorphism([(0, 0), (F(1, 2), F(1, 4)), (1, 1)])
    res = conjugate(T, p)
    assert res.density == StepDensity((0, F(1, 2), 1), (F(1, 2), F(3, 2)))
    assert certify_preservation(res.q, res.density).passed
    assert not certify_preservation(res.q).passed


def test_step_density_must_be_probability():
    with pytest.raises(ValueError):
        StepDensity((0, 1), (2,))


def test_montecarlo_deterministic_and_within_bound():
    a = montecarlo_pushforward(T, 200_000, 50, rng_seed=7)
    b = montecarlo_pushforward(T, 200_000, 50, rng_seed=7)
    assert a.sup_deviation == b.sup_deviation
    assert a.sup_deviation < a.bound()
    iid = montecarlo_pushforward(T, 200_000, 50, rng_seed=7, method="iid")
    assert iid.sup_deviation < iid.bound()


def test_montecarlo_detects_broken_map():
    h = montecarlo_pushforward(BROKEN, 100_000, 20, rng_seed=1)
    assert h.sup_deviation > 0.4


def test_montecarlo_reference_budgets():
    for f in (T, PAMap.identity()):
        h = montecarlo_pushforward(f, 10**6, 100, rng_seed=3)
        assert h.sup_deviation < 0.02
    h = montecarlo_pushforward(BROKEN, 10**6, 100, rng_seed=3)
    assert h.density[50:].min() > 1.3
    assert exact_pushforward_density(BROKEN, 2) == [F(1, 2), F(3, 2)]
