"""Distance estimation over finite curve families and the product model.

The distance estimator takes the supremum of extremal-length ratios over
a finite family of curve systems, symmetrized over the two directions,
and returns half its log.  Inside the estimator the annulus terms are
evaluated at height m/pi rather than m, which puts twist-direction and
pinch-direction ratios on the same hyperbolic scale as the product
coordinates (s, 1/l); the public extremal-length estimate keeps the raw
modulus.  For the torus the exact formula is available as
``torus_family_estimate`` / ``hyp_distance``.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from .collar import DEFAULT_PARAMS, CollarParams, collar_decomposition
from .errors import ValidationError
from .extremal import _ortho_cached, _pants_cuff_lengths, arc_multiplicities
from .halfplane import UHPoint, hyp_distance
from .surface import CURVE, CurveSystem, FNPoint, Marking, core_curve


@dataclass(frozen=True)
class CurveFamily:
    """Finite stand-in for the full set of curve classes."""

    members: tuple[CurveSystem, ...]

    def __post_init__(self):
        if not self.members:
            raise ValidationError("curve family must be nonempty")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def default_curve_family(marking: Marking, i_max: int = 2,
                         twist_bound: int = 8) -> CurveFamily:
    """All curve systems with i_j <= i_max and |b_j| <= twist_bound, plus cores.

    Crossing patterns are filtered by the per-pants parity constraint.
    The family covers both kinds of ratio witnesses: curves confined to a
    thick piece and curves twisting through an annulus.
    """
    curves = marking.curves
    pants = marking.decomposition.pants
    members: list[CurveSystem] = []
    for pattern in itertools.product(range(i_max + 1), repeat=len(curves)):
        if sum(pattern) == 0:
            continue
        counts = dict(zip(curves, pattern))
        ok = all(
            sum(counts[e.name] for e in p.ends if e.kind == CURVE) % 2 == 0
            for p in pants
        )
        if not ok:
            continue
        crossing = [c for c in curves if counts[c] > 0]
        for offsets in itertools.product(
            range(-twist_bound, twist_bound + 1), repeat=len(crossing)
        ):
            data = {c: (counts[c], 0, 0) for c in curves}
            for c, b in zip(crossing, offsets):
                data[c] = (counts[c], b, 0)
            members.append(CurveSystem(data))
    for c in curves:
        members.append(core_curve(marking, c))
    return CurveFamily(tuple(members))


class _RatioEvaluator:
    """Per-point component evaluator used by the distance estimator.

    Precomputes the collar decomposition, annulus heights, and per-pants
    orthogeodesic tables so that evaluating one curve system is cheap.
    """

    def __init__(self, marking: Marking, sigma: FNPoint, params: CollarParams):
        sigma.validate_for(marking)
        self.marking = marking
        self.sigma = sigma
        self.params = params
        dec = collar_decomposition(marking, sigma, params)
        self.thin = [
            (a.curve, a.modulus / math.pi, sigma.twist(a.curve))
            for a in dec.thin
            if not a.peripheral
        ]
        self.thick = []
        pants_ends = {}
        for p in marking.decomposition.pants:
            _, cuffs = _pants_cuff_lengths(marking, sigma, p.name)
            curve_ends = tuple(
                e.name if e.kind == CURVE else None for e in p.ends
            )
            pants_ends[p.name] = (curve_ends, cuffs)
        for comp in dec.thick:
            cuff_terms = [
                (cuff, sigma.length(cuff), sigma.twist(cuff))
                for cuff in comp.internal_cuffs
                if sigma.length(cuff) > params.eps1
            ]
            self.thick.append(
                ([pants_ends[name] for name in comp.pants], cuff_terms)
            )

    def value(self, beta: CurveSystem) -> float:
        best = 0.0
        for curve, height, twist in self.thin:
            i, b, n = beta.data[curve]
            if i > 0:
                t = b + twist
                v = i * i * (height + t * t / height)
            elif n > 0:
                v = n * n / height
            else:
                v = 0.0
            if v > best:
                best = v
        for pants_list, cuff_terms in self.thick:
            length = 0.0
            for curve_ends, cuffs in pants_list:
                counts = tuple(
                    beta.data[name][0] if name is not None else 0
                    for name in curve_ends
                )
                if sum(counts) == 0:
                    continue
                ortho = _ortho_cached(cuffs)
                for (i, j), count in arc_multiplicities(*counts).pairs():
                    if count:
                        length += count * ortho.between(i, j)
            for cuff, ell, twist in cuff_terms:
                i, b, _ = beta.data[cuff]
                if i > 0:
                    length += abs(b + twist) * ell * i
            v = length * length
            if v > best:
                best = v
        return best


def kerckhoff_distance_estimate(sigma: FNPoint, tau: FNPoint,
                                family: CurveFamily, marking: Marking,
                                params: CollarParams = DEFAULT_PARAMS) -> float:
    """Distance estimate (1/2) log of the symmetrized supremal length ratio.

    Ratios run over the family; members whose estimate vanishes at either
    point carry no usable ratio and are skipped (the ratio of vanishing
    contributions is conventionally 1).  The result is a lower-bound
    style estimate: enlarging the family can only increase it.
    """
    if len(family) == 0:
        raise ValidationError("curve family must be nonempty")
    ev_sigma = _RatioEvaluator(marking, sigma, params)
    ev_tau = _RatioEvaluator(marking, tau, params)
    sup = 1.0
    for beta in family:
        a = ev_sigma.value(beta)
        b = ev_tau.value(beta)
        if a == 0.0 or b == 0.0:
            continue
        r = a / b if a > b else b / a
        if r > sup:
            sup = r
    return 0.5 * math.log(sup)


@lru_cache(maxsize=64)
def _coprime_pairs(n_max: int):
    u, v = np.meshgrid(np.arange(-n_max, n_max + 1), np.arange(-n_max, n_max + 1))
    mask = np.gcd(np.abs(u), np.abs(v)) == 1
    return u[mask].astype(float), v[mask].astype(float)


def torus_family_estimate(z1: UHPoint, z2: UHPoint, n_max: int) -> float:
    """Torus distance estimate from coprime classes |u|,|v| <= n_max.

    Uses the exact extremal lengths |u + v z|^2 / Im z of the lattice
    (1, z); never exceeds hyp_distance(z1, z2) and is nondecreasing in
    n_max.
    """
    if n_max < 1:
        raise ValidationError("n_max must be at least 1")
    u, v = _coprime_pairs(n_max)
    lam1 = ((u + v * z1.x) ** 2 + (v * z1.y) ** 2) / z1.y
    lam2 = ((u + v * z2.x) ** 2 + (v * z2.y) ** 2) / z2.y
    ratio = lam2 / lam1
    sup = max(ratio.max(), (1.0 / ratio).max())
    return 0.5 * math.log(sup)


@dataclass(frozen=True)
class ProductPoint:
    """Image of a marked point under the pinching projection.

    ``base`` is the point of the pinched surface (coordinates of the
    unpinched curves); ``factors[i]`` is the half-plane point
    (twist of gamma_i, 1 / length of gamma_i).
    """

    base: FNPoint
    gamma: tuple[str, ...]
    factors: tuple[UHPoint, ...]

    def __post_init__(self):
        if len(self.gamma) != len(self.factors):
            raise ValidationError("one factor per pinched curve required")


def pi_map(sigma: FNPoint, gamma: Iterable[str], marking: Marking) -> ProductPoint:
    """Project a marked point to (pinched-surface point, one half-plane per curve)."""
    sigma.validate_for(marking)
    gamma = tuple(sorted(set(gamma)))
    for g in gamma:
        if g not in marking.curves:
            raise ValidationError(f"cannot pinch {g!r}: not an internal pants curve")
    lengths = {k: v for k, v in sigma.lengths.items() if k not in gamma}
    twists = {k: v for k, v in sigma.twists.items() if k not in gamma}
    base = FNPoint(lengths, twists)
    factors = tuple(
        UHPoint(sigma.twist(g), 1.0 / sigma.length(g)) for g in gamma
    )
    return ProductPoint(base, gamma, factors)


def pi_map_inverse(point: ProductPoint) -> FNPoint:
    """Reinsert the pinched length/twist pairs, inverting pi_map exactly."""
    lengths = dict(point.base.lengths)
    twists = dict(point.base.twists)
    for g, factor in zip(point.gamma, point.factors):
        lengths[g] = 1.0 / factor.y
        twists[g] = factor.x
    return FNPoint(lengths, twists)


def product_distance(p: ProductPoint, q: ProductPoint,
                     base_metric: Callable[[FNPoint, FNPoint], float]) -> float:
    """Sup metric: max of the base distance and the factor distances."""
    if p.gamma != q.gamma:
        raise ValidationError("product points pinch different curve systems")
    best = base_metric(p.base, q.base)
    for zp, zq in zip(p.factors, q.factors):
        d = hyp_distance(zp, zq)
        if d > best:
            best = d
    return best


def annulus_ratio_check(b: float, x1: float, y1: float,
                        x2: float, y2: float) -> float:
    """Annulus length-ratio profile (y2+(b+x2)^2/y2) / (y1+(b+x1)^2/y1).

    Its supremum over b equals k_ratio_sup((x1,y1), (x2,y2)); used as an
    internal consistency check between annulus contributions and the
    half-plane factor metric.
    """
    if not (y1 > 0 and y2 > 0):
        raise ValidationError("heights must be positive")
    num = y2 + (b + x2) ** 2 / y2
    den = y1 + (b + x1) ** 2 / y1
    return num / den


@dataclass(frozen=True)
class DiscrepancyReport:
    d_teich: float
    d_product: float
    gamma: tuple[str, ...]
    thin_ok: bool

    @property
    def discrepancy(self) -> float:
        return abs(self.d_teich - self.d_product)


def product_region_discrepancy(sigma: FNPoint, tau: FNPoint, gamma: Iterable[str],
                               marking: Marking,
                               params: CollarParams = DEFAULT_PARAMS,
                               family: CurveFamily | None = None,
                               base_family: CurveFamily | None = None,
                               ) -> DiscrepancyReport:
    """Compare the surface distance estimate with the product-model distance.

    The base factor of the product distance reuses the same estimator on
    the pinched marking, so the recursion terminates after one step.
    Pinched curves are expected to be thin at both points; violations
    are reported via ``thin_ok`` rather than rejected.
    """
    gamma = tuple(sorted(set(gamma)))
    if family is None:
        family = default_curve_family(marking)
    d_teich = kerckhoff_distance_estimate(sigma, tau, family, marking, params)
    pinched = marking.pinch(gamma)
    if base_family is None:
        base_family = default_curve_family(pinched)

    def base_metric(rho1: FNPoint, rho2: FNPoint) -> float:
        return kerckhoff_distance_estimate(rho1, rho2, base_family, pinched, params)

    p = pi_map(sigma, gamma, marking)
    q = pi_map(tau, gamma, marking)
    d_product = product_distance(p, q, base_metric)
    thin_ok = all(
        point.length(g) <= params.eps1 for g in gamma for point in (sigma, tau)
    )
    if not thin_ok:
        warnings.warn(
            "pinched curves are not thin at both points; the product model "
            "only tracks the distance estimate on the thin region",
            stacklevel=2,
        )
    return DiscrepancyReport(d_teich, d_product, gamma, thin_ok)
