"""Series coefficients from circle integrals: round trip, radius
independence, and the sharp first-mode bound.

Run from the repository root:

    python3 demos/03_coefficients.py
"""

import numpy as np

from harmonicdisk.gallery import gallery_map
from harmonicdisk.geometry import extract_coefficients
from harmonicdisk.maps import SeriesHarmonicMap
from harmonicdisk.theorems import thm5_bound

# a map with known coefficients, recovered from derivative integrals
# on an interior circle
m = SeriesHarmonicMap([0.1 + 0.2j, 1.0, 0.0, -0.05j], [0.3, 0.0, 0.1])
a, b = extract_coefficients(m, n_max=3, rho=0.5)
print("round trip at rho = 0.5")
print("  analytic     ", np.round(a, 12))
print("  anti-analytic", np.round(b, 12))

# the result does not depend on the extraction radius
a7, b7 = extract_coefficients(m, n_max=3, rho=0.7)
drift = max(np.max(np.abs(a - a7)), np.max(np.abs(b - b7)))
print(f"  radius independence: rho 0.5 vs 0.7 differ by {drift:.2e}")

# high modes are recoverable too: mode 12 sits twelve powers of rho
# below the leading term, so the sums run in extended precision
tail = np.zeros(12)
tail[11] = 1e-3
hi = SeriesHarmonicMap([0.0, 1.0], tail)
_, bh = extract_coefficients(hi, n_max=12, rho=0.35)
print(f"\nmode 12 of size 1e-3 recovered at rho = 0.35: "
      f"error {abs(bh[11] - 1e-3):.2e}")

# the first-mode bound |a_1| <= K * M_rad is attained with equality by
# plain stretches; higher modes vanish
print("\nfirst-mode sharpness for stretch maps")
for M in (0.5, 1.0, 3.0):
    reps = thm5_bound(gallery_map(f"scaled:{M}"), K=1.0, n_max=4)
    first = reps[0]
    resid = max(r.lhs for r in reps[1:])
    print(f"  M = {M}: |a_1| = {first.lhs:.12f}, bound = {first.rhs:.12f}, "
          f"higher modes {resid:.1e}")
