"""Pairs of pants in numbers: hexagon cosine rule, the six orthogeodesic
lengths, collar moduli of short curves, and arc crossings in an annulus.

Run with:  python demos/pants_trigonometry_demo.py
"""

from teichlen import (
    FlatAnnulus,
    PantsCuffs,
    annulus_arc_crossings,
    collar_modulus,
    flat_annulus_twist,
    hexagon_side,
    pants_orthogeodesics,
)

print("Right-angled hexagon with alternating sides (2, 1, 2):")
print(f"  the side two steps past the middle one has length {hexagon_side(2, 1, 2):.6f}")

print()
print("Orthogeodesics of the pants with cuffs (2, 2, 2):")
ortho = pants_orthogeodesics(PantsCuffs(2, 2, 2))
print(f"  seams   d12 = d13 = d23 = {ortho.d12:.6f}")
print(f"  returns d11 = d22 = d33 = {ortho.d11:.6f}")

print()
print("A cusp (cuff length 0) sends the arcs touching it to infinity:")
cusped = pants_orthogeodesics(PantsCuffs(2, 2, 0))
print(f"  d12 = {cusped.d12:.6f}   d13 = {cusped.d13}   d33 = {cusped.d33}")

print()
print("Collars around short geodesics get huge moduli:")
for delta in (0.1, 0.01, 0.001):
    print(f"  core length {delta:5g}: modulus {collar_modulus(delta, 0.5):10.3f}")

print()
print("Twists of crossing arcs in a flat annulus, and their crossing counts:")
ann = FlatAnnulus(1.0, 2.0)
print(f"  lift endpoints (0, 0) -> (L, 3): twist {flat_annulus_twist(ann, 0.0, 3.0)}")
for gap in (0.0, 1.0, 2.5, 6.0):
    count = annulus_arc_crossings(0.0, gap)
    print(f"  twists 0 and {gap:3g}: {count} crossings (within 1 of the gap)")
