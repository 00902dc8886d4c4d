"""Extremal-length estimators over a collar decomposition.

Each component of the decomposition contributes separately and the
surface-level estimate is the maximum over components.  A thin annulus
with modulus m crossed i times at estimated twist t contributes
i^2 (m + t^2 / m), or n^2 / m for n parallel core copies.  A thick
component contributes the square of a concrete length proxy: summed
orthogeodesic arc lengths inside each pants plus a twist-travel term
|t| * l * i on moderate internal cuffs.  The proxy is validated by
property tests, not by matching any particular multiplicative constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .collar import (
    DEFAULT_PARAMS,
    CollarDecomposition,
    CollarParams,
    ThickComponent,
    collar_decomposition,
)
from .errors import ValidationError
from .pants import PantsCuffs, pants_orthogeodesics
from .surface import BOUNDARY, CURVE, CurveSystem, FNPoint, Marking, estimated_twist


def lambda_annulus(i: int, n: int, m: float, t_hat: float | None = None) -> float:
    """Annulus contribution: i^2 (m + t^2/m) for crossings, n^2/m for cores."""
    if i < 0 or n < 0:
        raise ValidationError("counts must be nonnegative")
    if not m > 0:
        raise ValidationError("modulus must be positive")
    if i > 0:
        if t_hat is None or not math.isfinite(t_hat):
            raise ValidationError("crossing arcs need a finite twist estimate")
        return i * i * (m + t_hat * t_hat / m)
    if n > 0:
        return n * n / m
    return 0.0


@dataclass(frozen=True)
class ArcMultiplicities:
    """How arc endpoints on the three cuffs of a pants pair up inside it."""

    a11: int
    a22: int
    a33: int
    a12: int
    a13: int
    a23: int

    def pairs(self):
        return (
            ((1, 1), self.a11), ((2, 2), self.a22), ((3, 3), self.a33),
            ((1, 2), self.a12), ((1, 3), self.a13), ((2, 3), self.a23),
        )


@lru_cache(maxsize=4096)
def arc_multiplicities(m1: int, m2: int, m3: int) -> ArcMultiplicities:
    """Canonical arc pairing for endpoint counts (m1, m2, m3) on the cuffs.

    When the counts satisfy the triangle inequalities every arc joins two
    distinct cuffs; otherwise the excess on the dominant cuff returns to
    it.  This is the unique pairing with the fewest same-cuff arcs.
    """
    counts = (m1, m2, m3)
    if min(counts) < 0:
        raise ValidationError("endpoint counts must be nonnegative")
    if sum(counts) % 2 != 0:
        raise ValidationError(f"endpoint counts {counts} have odd total")
    a = {key: 0 for key in ((1, 1), (2, 2), (3, 3), (1, 2), (1, 3), (2, 3))}
    big = max(range(3), key=lambda k: counts[k])
    rest = [k for k in range(3) if k != big]
    if counts[big] > counts[rest[0]] + counts[rest[1]]:
        for other in rest:
            key = tuple(sorted((big + 1, other + 1)))
            a[key] = counts[other]
        a[(big + 1, big + 1)] = (counts[big] - counts[rest[0]] - counts[rest[1]]) // 2
    else:
        a[(1, 2)] = (m1 + m2 - m3) // 2
        a[(1, 3)] = (m1 + m3 - m2) // 2
        a[(2, 3)] = (m2 + m3 - m1) // 2
    return ArcMultiplicities(
        a11=a[(1, 1)], a22=a[(2, 2)], a33=a[(3, 3)],
        a12=a[(1, 2)], a13=a[(1, 3)], a23=a[(2, 3)],
    )


@lru_cache(maxsize=65536)
def _ortho_cached(cuffs: tuple[float, float, float]):
    return pants_orthogeodesics(PantsCuffs(*cuffs))


def _pants_cuff_lengths(marking: Marking, sigma: FNPoint, pants_name: str):
    pants = marking.pants_by_name()[pants_name]
    lengths = []
    for end in pants.ends:
        if end.kind == CURVE:
            lengths.append(sigma.length(end.name))
        elif end.kind == BOUNDARY:
            lengths.append(sigma.length(end.name))
        else:
            lengths.append(0.0)
    return pants, tuple(lengths)


def _pants_arc_length(marking: Marking, sigma: FNPoint, pants_name: str,
                      beta: CurveSystem) -> float:
    """Summed orthogeodesic length of beta's arcs through one pair of pants."""
    pants, cuffs = _pants_cuff_lengths(marking, sigma, pants_name)
    counts = tuple(
        beta.intersection(end.name) if end.kind == CURVE else 0
        for end in pants.ends
    )
    if sum(counts) == 0:
        return 0.0
    mults = arc_multiplicities(*counts)
    ortho = _ortho_cached(cuffs)
    total = 0.0
    for (i, j), count in mults.pairs():
        if count:
            total += count * ortho.between(i, j)
    return total


def lambda_thick(component: ThickComponent, beta: CurveSystem, sigma: FNPoint,
                 marking: Marking, params: CollarParams = DEFAULT_PARAMS) -> float:
    """Thick contribution: square of the length proxy of beta inside the component.

    Core components parallel to a thin cuff contribute nothing here; they
    are counted by the annulus term alone.
    """
    length = 0.0
    for pants_name in component.pants:
        length += _pants_arc_length(marking, sigma, pants_name, beta)
    for cuff in component.internal_cuffs:
        if sigma.length(cuff) > params.eps1:
            i = beta.intersection(cuff)
            if i > 0:
                length += abs(estimated_twist(beta, sigma, cuff)) * sigma.length(cuff) * i
    return length * length


@dataclass(frozen=True)
class ComponentLength:
    """Labeled contribution of one decomposition component."""

    component: str
    kind: str  # "annulus" or "thick"
    value: float


@dataclass(frozen=True)
class EstimateResult:
    value: float
    components: tuple[ComponentLength, ...]

    def component_value(self, component: str) -> float:
        for row in self.components:
            if row.component == component:
                return row.value
        raise ValidationError(f"no component {component!r} in this estimate")


def lambda_surface_estimate(beta: CurveSystem, sigma: FNPoint, marking: Marking,
                            params: CollarParams = DEFAULT_PARAMS,
                            decomposition: CollarDecomposition | None = None,
                            ) -> EstimateResult:
    """Surface extremal-length estimate: max over decomposition components.

    Returns the maximum together with the per-component breakdown.  When
    ``decomposition`` is omitted the full collar decomposition of sigma
    is used; a partial decomposition gives the coarser estimate.
    """
    beta.validate_for(marking)
    sigma.validate_for(marking)
    if decomposition is None:
        decomposition = collar_decomposition(marking, sigma, params)
    rows = []
    for annulus in decomposition.thin:
        if annulus.peripheral:
            rows.append(ComponentLength(annulus.curve, "annulus", 0.0))
            continue
        i = beta.intersection(annulus.curve)
        n = beta.core_copies(annulus.curve)
        t_hat = estimated_twist(beta, sigma, annulus.curve) if i > 0 else None
        rows.append(
            ComponentLength(
                annulus.curve, "annulus", lambda_annulus(i, n, annulus.modulus, t_hat)
            )
        )
    for component in decomposition.thick:
        rows.append(
            ComponentLength(
                component.component_id,
                "thick",
                lambda_thick(component, beta, sigma, marking, params),
            )
        )
    value = max((row.value for row in rows), default=0.0)
    return EstimateResult(value, tuple(rows))
