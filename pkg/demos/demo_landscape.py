"""Render the entropy-production landscape over (aleph, theta).

Dumps the rate surface with rate_landscape, then prints a coarse ASCII heat
map.  The valley bottom sits at (d, phi) and the surface repeats with period
pi in theta; the mirror symmetry (aleph, theta) -> (1/aleph, theta + pi/2)
is visible as a second valley below aleph = 1.
"""

import math

import numpy as np

from lindosc import DiffDecomposition, analytic_minimizer, rate_landscape

SHADES = " .:-=+*#%@"


def main():
    diff = DiffDecomposition(Delta=1.0, d=2.0, phi=1.1)
    lam, area = 0.3, 1.0
    n_aleph, n_theta = 33, 72

    table = np.array(list(rate_landscape(area, lam, diff,
                                         n_aleph=n_aleph, n_theta=n_theta,
                                         aleph_range=(0.25, 8.0))))
    rates = table[:, 2].reshape(n_aleph, n_theta)
    alephs = table[::n_theta, 0]

    lo, hi = rates.min(), rates.max()
    print(f"rate range [{lo:.4f}, {hi:.4f}] over "
          f"aleph in [0.25, 8] (log), theta in [0, pi)")
    print(f"{'':>7} theta: 0 {'-' * (n_theta - 12)} pi")
    for i in range(n_aleph - 1, -1, -1):
        # log scaling spreads the valley; the bottom row of shades is darkest
        row = "".join(SHADES[min(int(math.log1p(r - lo)
                                     / math.log1p(hi - lo) * 10), 9)]
                      for r in rates[i])
        print(f"{alephs[i]:7.3f} {row}")

    best = analytic_minimizer(area, lam, diff)
    i, j = np.unravel_index(np.argmin(rates), rates.shape)
    print(f"\nvalley bottom on the grid: aleph={alephs[i]:.3f}, "
          f"theta={table[i * n_theta + j, 1]:.3f}")
    print(f"analytic minimizer:        aleph={best.aleph_star:.3f}, "
          f"theta={best.theta_star:.3f}, rate={best.min_rate:.4f}")


if __name__ == "__main__":
    main()
