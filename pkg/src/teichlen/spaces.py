"""Metric-space handle over product-model points of a marked surface.

Points are images of the pinching projection with a fixed base point, so
the search explores the half-plane factor directions while the base
distance (computed by the surface estimator, cached) stays zero.  This
is the product geometry the distance comparison experiments measure.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .collar import DEFAULT_PARAMS, CollarParams
from .distance import (
    ProductPoint,
    default_curve_family,
    kerckhoff_distance_estimate,
    pi_map,
    product_distance,
)
from .errors import ValidationError
from .halfplane import UHPoint, geodesic_point
from .instability import MetricSpaceHandle
from .surface import FNPoint, Marking


def _default_base_point(marking: Marking) -> FNPoint:
    lengths = {name: 1.0 for name in marking.curves}
    for name in marking.decomposition.boundary_names():
        lengths[name] = 1.0
    twists = {name: 0.0 for name in marking.curves}
    return FNPoint(lengths, twists)


def pi_image_space(marking: Marking, gamma: tuple[str, ...] | None = None,
                   base: FNPoint | None = None,
                   params: CollarParams = DEFAULT_PARAMS) -> MetricSpaceHandle:
    """Sup-metric space of product points over a fixed pinched base.

    ``gamma`` defaults to all internal pants curves.  Factor segments are
    half-plane geodesics parameterized proportionally; the base segment
    is constant since all points share the base.
    """
    gamma = tuple(sorted(gamma if gamma is not None else marking.curves))
    if not gamma:
        raise ValidationError("need at least one pinched curve")
    base_point = base if base is not None else _default_base_point(marking)
    template = pi_map(base_point, gamma, marking)
    pinched = marking.pinch(gamma)
    # pinching every curve leaves a union of rigid thrice-punctured pieces
    base_family = default_curve_family(pinched) if pinched.curves else None

    @lru_cache(maxsize=128)
    def _base_distance_keyed(key1, key2):
        if key1 == key2 or base_family is None:
            return 0.0
        rho1 = FNPoint(dict(key1[0]), dict(key1[1]))
        rho2 = FNPoint(dict(key2[0]), dict(key2[1]))
        return kerckhoff_distance_estimate(rho1, rho2, base_family, pinched, params)

    def _key(rho: FNPoint):
        return (tuple(rho.lengths.items()), tuple(rho.twists.items()))

    def base_metric(rho1: FNPoint, rho2: FNPoint) -> float:
        return _base_distance_keyed(_key(rho1), _key(rho2))

    def make_point(factors) -> ProductPoint:
        return ProductPoint(template.base, gamma, tuple(factors))

    def distance(p: ProductPoint, q: ProductPoint) -> float:
        return product_distance(p, q, base_metric)

    def segment(p: ProductPoint, q: ProductPoint):
        def sampler(t: float) -> ProductPoint:
            return make_point(
                geodesic_point(zp, zq, t) for zp, zq in zip(p.factors, q.factors)
            )

        return sampler

    k = len(gamma)

    def witnesses(delta: float, L: float):
        if k < 2 or 2.0 * L > 600.0:
            return
        rest = tuple(UHPoint(0.0, 1.0) for _ in range(k - 2))
        x = make_point((UHPoint(0.0, 1.0), UHPoint(0.0, 1.0)) + rest)
        y = make_point((UHPoint(0.0, math.exp(2.0 * L)), UHPoint(0.0, 1.0)) + rest)
        for frac in np.linspace(0.05, 1.0, 40):
            height = math.exp(2.0 * min(L / 2.0 + delta, L) * frac)
            z = make_point(
                (UHPoint(0.0, math.exp(L)), UHPoint(0.0, height)) + rest
            )
            yield x, y, z

    def random_triple(rng, delta, L):
        scale = min(L / 4.0, 5.0)

        def rand_point():
            return UHPoint(rng.normal() * scale, math.exp(rng.normal() * scale))

        x = make_point(rand_point() for _ in range(k))
        y = make_point(rand_point() for _ in range(k))
        z = make_point(
            geodesic_point(zx, zy, 0.5 + rng.normal() * 0.1)
            for zx, zy in zip(x.factors, y.factors)
        )
        return x, y, z

    return MetricSpaceHandle(
        name=f"pi-image[{','.join(gamma)}]",
        distance=distance,
        segment=segment,
        witnesses=witnesses if k >= 2 else None,
        random_triple=random_triple,
    )
