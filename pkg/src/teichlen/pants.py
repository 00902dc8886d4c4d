"""Right-angled hexagon trigonometry, pants orthogeodesics, flat annuli.

Cuff length 0 encodes a cusp; every formula takes the continuous limit
(right-angled pentagon with one ideal vertex).  Orthogeodesics that run
into a cusp are reported as ``math.inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateHexagonError, NoCollarError, ValidationError


@dataclass(frozen=True)
class PantsCuffs:
    """Boundary lengths of a pair of pants; a value of 0 is a cusp."""

    l1: float
    l2: float
    l3: float

    def __post_init__(self):
        for value in (self.l1, self.l2, self.l3):
            if value < 0 or not math.isfinite(value):
                raise ValidationError(f"cuff lengths must be >= 0, got {value}")

    def as_tuple(self):
        return (self.l1, self.l2, self.l3)


@dataclass(frozen=True)
class FlatAnnulus:
    """Flat annulus with boundary circle length L and height H; modulus H/L.

    Crossing arcs are described by lift endpoints whose second coordinate
    is periodic with period ``height`` (one full wrap shifts y by H).
    """

    circumference: float
    height: float

    def __post_init__(self):
        if not (self.circumference > 0 and self.height > 0):
            raise ValidationError("annulus dimensions must be positive")

    @property
    def modulus(self) -> float:
        return self.height / self.circumference


def hexagon_side(a: float, gamma: float, b: float) -> float:
    """Side of a right-angled hexagon two steps past gamma.

    Cosine rule for right-angled hexagons (sides a, gamma, b consecutive):
    cosh c = sinh a sinh b cosh gamma - cosh a cosh b.  Symmetric in a, b.
    """
    if min(a, gamma, b) < 0:
        raise ValidationError("hexagon sides must be nonnegative")
    value = math.sinh(a) * math.sinh(b) * math.cosh(gamma) - math.cosh(a) * math.cosh(b)
    if value <= 1.0:
        raise DegenerateHexagonError(
            f"sides ({a}, {gamma}, {b}) do not bound a right-angled hexagon"
        )
    return math.acosh(value)


@dataclass(frozen=True)
class OrthoLengths:
    """The six simple orthogeodesic lengths of a pair of pants."""

    d11: float
    d22: float
    d33: float
    d12: float
    d13: float
    d23: float

    def between(self, i: int, j: int) -> float:
        """Length of the orthogeodesic joining cuff i and cuff j (1-based)."""
        if i > j:
            i, j = j, i
        try:
            return getattr(self, f"d{i}{j}")
        except AttributeError:
            raise ValidationError(f"no orthogeodesic ({i}, {j})") from None


def _seam(half: tuple, i: int, j: int, k: int) -> float:
    ci, cj, ck = math.cosh(half[i]), math.cosh(half[j]), math.cosh(half[k])
    si, sj = math.sinh(half[i]), math.sinh(half[j])
    if si == 0.0 or sj == 0.0:
        return math.inf
    return math.acosh((ck + ci * cj) / (si * sj))


def _self_seam(half: tuple, i: int) -> float:
    # twice the hexagon altitude from cuff i to the opposite seam side;
    # cosh of the altitude collapses to a symmetric function of the cuffs
    c = [math.cosh(h) for h in half]
    si = math.sinh(half[i])
    if si == 0.0:
        return math.inf
    sym = c[0] ** 2 + c[1] ** 2 + c[2] ** 2 + 2.0 * c[0] * c[1] * c[2] - 1.0
    return 2.0 * math.acosh(math.sqrt(sym) / si)


def pants_orthogeodesics(cuffs: PantsCuffs) -> OrthoLengths:
    """All six orthogeodesic lengths of the pants with the given cuffs.

    d_ij joins cuffs i and j (the seam), d_ii runs from cuff i back to
    itself separating the other two cuffs.  Arcs ending on a cusp have
    infinite length.
    """
    half = tuple(l / 2.0 for l in cuffs.as_tuple())
    return OrthoLengths(
        d11=_self_seam(half, 0),
        d22=_self_seam(half, 1),
        d33=_self_seam(half, 2),
        d12=_seam(half, 0, 1, 2),
        d13=_seam(half, 0, 2, 1),
        d23=_seam(half, 1, 2, 0),
    )


def collar_modulus(delta: float, eps0: float) -> float:
    """Modulus pi/delta - 2/eps0 of the collar about a core of length delta.

    The collar's internal boundary circles have length eps0.
    """
    if not (delta > 0 and eps0 > 0):
        raise ValidationError("delta and eps0 must be positive")
    if delta > eps0:
        raise NoCollarError(f"core length {delta} exceeds boundary length {eps0}")
    m = math.pi / delta - 2.0 / eps0
    if m <= 0:
        raise NoCollarError(f"no collar: pi/{delta} <= 2/{eps0}")
    return m


def flat_annulus_twist(ann: FlatAnnulus, y0: float, y1: float) -> float:
    """Twist (y1 - y0)/H of a crossing arc lifted to endpoints (0,y0), (L,y1)."""
    return (y1 - y0) / ann.height


_CROSSING_OFFSET = 0.25  # generic boundary offset between the two arcs


def annulus_arc_crossings(t1: float, t2: float, samples: int = 64) -> int:
    """Crossing number of two straight arcs with twists t1, t2 in an annulus.

    The arcs enter at boundary positions offset by a quarter turn, so no
    crossing sits on the boundary; crossings within 1e-9 of the boundary
    are dropped (perturbation convention).  Enumerates lift translates
    n in [-samples, samples]; result is symmetric in (t1, t2) and lies in
    [|t1 - t2| - 1, |t1 - t2| + 1].
    """
    if samples <= 0:
        raise ValidationError("samples must be positive")
    spread = abs(t2 - t1)
    if samples < spread + 1:
        raise ValidationError(f"samples={samples} too small for twist gap {spread}")
    if spread == 0.0:
        return 0
    # canonical placement: slower-twisting arc at position 0, other at the offset
    count = 0
    for n in range(-samples, samples + 1):
        y_star = (-_CROSSING_OFFSET - n) / spread
        if 1e-9 < y_star < 1.0 - 1e-9:
            count += 1
    return count
