"""Closed-form reference areas.

Identity map, region {|z - w| <= rho} intersected with the unit disk:
the classical two-circle lens with centers distance d = |w| apart,

    A = acos((d^2 + 1 - rho^2) / (2 d))
      + rho^2 acos((d^2 + rho^2 - 1) / (2 d rho))
      - sqrt((-d+1+rho)(d+1-rho)(d-1+rho)(d+1+rho)) / 2.

Polynomial map f(z) = z + c zbar^2: Jacobian 1 - 4|c|^2 |z|^2, so the
area over |z| < r is pi r^2 - 2 pi |c|^2 r^4.

Run:  python3 tests/oracles/area_closed_forms.py
"""

import math


def lens_area(d, rho, R=1.0):
    if d >= R + rho:
        return 0.0
    if d <= abs(R - rho):
        r_small = min(R, rho)
        return math.pi * r_small * r_small
    a = R * R * math.acos((d * d + R * R - rho * rho) / (2.0 * d * R))
    b = rho * rho * math.acos((d * d + rho * rho - R * R) / (2.0 * d * rho))
    c = 0.5 * math.sqrt((-d + R + rho) * (d + R - rho) * (d - R + rho)
                        * (d + R + rho))
    return a + b - c


def poly_area(c_abs, r):
    return math.pi * r * r - 2.0 * math.pi * c_abs * c_abs * r ** 4


def main():
    for rho in (0.5, 0.8, 1.5):
        print(f"lens d=1, rho={rho}: {lens_area(1.0, rho):.17g}")
    for r in (0.5, 0.9):
        print(f"poly c=0.3, r={r}: {poly_area(0.3, r):.17g}")
    print(f"disk r=0.9: {math.pi * 0.81:.17g}")
    print(f"disk r_eff=1-1e-6: {math.pi * (1.0 - 1e-6) ** 2:.17g}")
    print(f"affine area r=0.9: {0.75 * math.pi * 0.81:.17g}")


if __name__ == "__main__":
    main()
