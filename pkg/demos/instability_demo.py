"""Geodesic instability: how far can an almost-between point sit from a
geodesic?  Sup-metric products answer "half the distance", Euclidean
space answers "square root", and the distortion-transfer inequality
moves bounds between spaces.

Run with:  python demos/instability_demo.py
"""

from teichlen import (
    distortion_transfer_check,
    euclidean_instability_exact,
    euclidean_space,
    growth_rate_estimate,
    instability_lower_bound,
    sup_product_space,
)

sup2 = sup_product_space(2)
euc2 = euclidean_space(2)

print("Sup-metric plane: the corner witness reaches L/2 with zero slack")
for L in (1.0, 10.0, 100.0):
    value, witness = instability_lower_bound(sup2, 0.0, L, budget=100)
    print(f"  L = {L:5g}: s_lower = {value:.6f}  witness z = {witness.z}")

print()
print("Euclidean plane: the sampled bound tracks sqrt(2 L delta + delta^2)/2")
for delta, L in ((0.02, 1.0), (0.2, 10.0)):
    exact = euclidean_instability_exact(delta, L)
    value, _ = instability_lower_bound(euc2, delta, L, budget=200)
    print(f"  delta = {delta:4g}, L = {L:4g}: sampled {value:.6f} vs exact {exact:.6f}")

print()
ladder = [1.0, 10.0, 100.0, 1000.0, 10000.0]
sup_fit = growth_rate_estimate(sup2, 0.0, ladder, budget=60)
euc_fit = growth_rate_estimate(
    None, 0.5, ladder, s_values=[euclidean_instability_exact(0.5, L) for L in ladder]
)
print(f"Growth rates: sup-metric {sup_fit.slope:.3f} (linear), "
      f"Euclidean {euc_fit.slope:.3f} (square root)")

print()
print("Distortion transfer: a map moving distances by at most c transports")
print("instability lower bounds, s_X <= 3c + 4 s_Y(delta + 3c, L + c).")
c = 0.05
grid = [(0.1, 1.0), (0.1, 10.0), (0.5, 10.0)]
s_y = {
    (d + 3 * c, L + c): euclidean_instability_exact(d + 3 * c, L + c)
    for d, L in grid
}
s_x = {key: euclidean_instability_exact(*key) for key in grid}
report = distortion_transfer_check(s_x, s_y, c)
for row in report.rows:
    print(f"  delta={row.delta:3g} L={row.L:4g}: {row.lhs:.4f} <= {row.rhs:.4f}  "
          f"{'ok' if row.holds else 'VIOLATED'}")
print(f"overall: {'holds' if report.ok else 'violated'}")
