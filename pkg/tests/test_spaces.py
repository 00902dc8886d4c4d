"""Product-point metric space over a fixed pinched base."""

import numpy as np
import pytest

from teichlen import (
    UHPoint,
    ValidationError,
    growth_rate_estimate,
    hyp_distance,
    instability_lower_bound,
    pi_image_space,
)
from teichlen.distance import ProductPoint

LADDER = [0.3, 3.0, 30.0, 100.0, 300.0]


class TestPiImageSpace:
    def test_distance_axioms_on_random_triples(self, genus2):
        space = pi_image_space(genus2, gamma=("g1", "g2"))
        rng = np.random.default_rng(71)
        for _ in range(20):
            x, y, z = space.random_triple(rng, 0.1, 2.0)
            assert space.distance(x, x) == 0.0
            assert space.distance(x, y) == space.distance(y, x)
            assert space.distance(x, y) <= (
                space.distance(x, z) + space.distance(z, y) + 1e-9
            )

    def test_distance_is_max_of_factor_distances(self, genus2):
        space = pi_image_space(genus2, gamma=("g1", "g2", "g3"))
        rng = np.random.default_rng(72)
        template = space.random_triple(rng, 0.1, 1.0)[0]
        base_factors = (UHPoint(0.0, 1.0),) * 3
        moved = list(base_factors)
        moved[1] = UHPoint(0.0, 4.0)
        p = ProductPoint(template.base, template.gamma, base_factors)
        q = ProductPoint(template.base, template.gamma, tuple(moved))
        assert space.distance(p, q) == pytest.approx(
            hyp_distance(UHPoint(0.0, 1.0), UHPoint(0.0, 4.0))
        )

    def test_sup_witness_reaches_half_length(self, genus2):
        space = pi_image_space(genus2)
        for L in (1.0, 10.0, 100.0):
            value, witness = instability_lower_bound(space, 0.0, L, budget=60)
            assert value >= L / 2 - 1e-9
            assert witness is not None

    def test_growth_rate_slope_one(self, genus2):
        space = pi_image_space(genus2)
        fit = growth_rate_estimate(space, 0.0, LADDER, budget=50)
        assert fit.slope == pytest.approx(1.0, abs=0.05)

    def test_partial_gamma_base_metric_runs(self, genus2):
        space = pi_image_space(genus2, gamma=("g1",))
        rng = np.random.default_rng(73)
        x, y, _ = space.random_triple(rng, 0.1, 2.0)
        assert space.distance(x, y) >= 0.0

    def test_requires_a_pinched_curve(self, genus2):
        with pytest.raises(ValidationError):
            pi_image_space(genus2, gamma=())
