"""Collar decompositions: thin annuli around short pants curves, thick rest.

A pants curve is thin when its length is at most eps1; its collar gets
internal boundary circles of length eps0 and modulus pi/l - 2/eps0.
Only pants curves (and boundary components) can be thin in this model,
so inputs should use a decomposition adapted to the intended thin locus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import NumericDomainError, ValidationError
from .pants import collar_modulus
from .surface import FNPoint, Marking

MARGULIS_2D = 2.0 * math.asinh(1.0)


@dataclass(frozen=True)
class CollarParams:
    """Thin-thin thresholds 0 < eps1 < eps0 < margulis."""

    eps0: float = 0.5
    eps1: float = 0.1
    margulis: float = MARGULIS_2D

    def __post_init__(self):
        if not (0 < self.eps1 < self.eps0 < self.margulis):
            raise ValidationError(
                f"need 0 < eps1 < eps0 < margulis, got "
                f"({self.eps0}, {self.eps1}, {self.margulis})"
            )


DEFAULT_PARAMS = CollarParams()


@dataclass(frozen=True)
class ThinAnnulus:
    curve: str
    core_length: float
    modulus: float
    peripheral: bool = False


@dataclass(frozen=True)
class ThickComponent:
    """A connected union of pants with the internal cuffs joining them."""

    pants: tuple[str, ...]
    internal_cuffs: tuple[str, ...]

    @property
    def component_id(self) -> str:
        return "thick[" + ",".join(self.pants) + "]"


@dataclass(frozen=True)
class CollarDecomposition:
    marking: Marking
    params: CollarParams
    thin: tuple[ThinAnnulus, ...]
    thick: tuple[ThickComponent, ...]

    def thin_curves(self) -> tuple[str, ...]:
        return tuple(a.curve for a in self.thin if not a.peripheral)

    def annulus(self, curve: str) -> ThinAnnulus:
        for a in self.thin:
            if a.curve == curve:
                return a
        raise ValidationError(f"{curve!r} is not a thin curve of this decomposition")


def _components(marking: Marking, removed: set[str]) -> tuple[ThickComponent, ...]:
    """Connected components of the pants graph after cutting the removed curves."""
    pants_names = [p.name for p in marking.decomposition.pants]
    parent = {name: name for name in pants_names}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    sides = marking.curve_sides()
    for curve, places in sides.items():
        if curve in removed:
            continue
        (pa, _), (pb, _) = places
        ra, rb = find(pa), find(pb)
        if ra != rb:
            parent[ra] = rb
    groups: dict[str, list[str]] = {}
    for name in pants_names:
        groups.setdefault(find(name), []).append(name)
    comps = []
    for members in groups.values():
        member_set = set(members)
        cuffs = tuple(
            sorted(
                curve
                for curve, places in sides.items()
                if curve not in removed and places[0][0] in member_set
            )
        )
        comps.append(ThickComponent(tuple(sorted(members)), cuffs))
    return tuple(sorted(comps, key=lambda c: c.pants))


def _annulus(curve: str, sigma: FNPoint, params: CollarParams,
             peripheral: bool) -> ThinAnnulus:
    length = sigma.length(curve)
    m = collar_modulus(length, params.eps0)
    if m < 1.0:
        raise NumericDomainError(
            f"collar of {curve} has modulus {m:.4g} < 1; "
            f"choose a smaller eps1 or larger eps0"
        )
    return ThinAnnulus(curve, length, m, peripheral=peripheral)


def _thin_sets(marking: Marking, sigma: FNPoint, params: CollarParams):
    internal = {c for c in marking.curves if sigma.length(c) <= params.eps1}
    peripheral = {
        b for b in marking.decomposition.boundary_names()
        if sigma.length(b) <= params.eps1
    }
    return internal, peripheral


def collar_decomposition(marking: Marking, sigma: FNPoint,
                         params: CollarParams = DEFAULT_PARAMS) -> CollarDecomposition:
    """Split the marked surface into thin collars and thick components."""
    sigma.validate_for(marking)
    internal, peripheral = _thin_sets(marking, sigma, params)
    thin = tuple(
        [_annulus(c, sigma, params, False) for c in sorted(internal)]
        + [_annulus(b, sigma, params, True) for b in sorted(peripheral)]
    )
    thick = _components(marking, internal)
    return CollarDecomposition(marking, params, thin, thick)


def partial_decomposition(marking: Marking, sigma: FNPoint, params: CollarParams,
                          subset: Iterable[str]) -> CollarDecomposition:
    """Decomposition that keeps only the selected thin annuli.

    ``subset`` must consist of curves that are thin for sigma; the thick
    components merge across the unselected thin curves.
    """
    sigma.validate_for(marking)
    subset = set(subset)
    internal, peripheral = _thin_sets(marking, sigma, params)
    stray = subset - internal - peripheral
    if stray:
        raise ValidationError(f"curves {sorted(stray)} are not thin for this point")
    thin = tuple(
        [_annulus(c, sigma, params, False) for c in sorted(subset & internal)]
        + [_annulus(b, sigma, params, True) for b in sorted(subset & peripheral)]
    )
    thick = _components(marking, subset & internal)
    return CollarDecomposition(marking, params, thin, thick)
