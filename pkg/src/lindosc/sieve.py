"""Selection of the most predictable initial states.

For a fixed phase-space area ``A`` the entropy-production rate of a Gaussian
state depends on its squeezing ``aleph`` and orientation ``theta`` through

    rate = (1/A) * (-2*lam + (Delta/A) * B(aleph, theta))
    B = cos^2(theta-phi) * (aleph^2/d^2 + d^2/aleph^2)
      + sin^2(theta-phi) * (aleph^2*d^2 + 1/(aleph^2*d^2))

where (Delta, d, phi) decompose the scaled diffusion matrix.  The minimum is
attained at ``aleph = d``, ``theta = phi`` with value ``2*(Delta - A*lam) /
A**2``, independent of the purity A.  A brute-force grid search over
(aleph, theta) serves as an independent oracle for the analytic minimizer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BracketError


@dataclass(frozen=True)
class SieveResult:
    """Analytic minimizer, optionally paired with a grid-search record."""

    aleph_star: float
    theta_star: float
    min_rate: float
    degenerate_angle: bool
    grid_aleph: Optional[float] = None
    grid_theta: Optional[float] = None
    grid_rate: Optional[float] = None
    grid_spec: Optional[dict] = None


def rate_at(aleph, theta, area, lam, diff):
    """Entropy-production rate of a state with squeezing/orientation
    (aleph, theta) and area ``area``.  Broadcasts over array inputs."""
    aleph = np.asarray(aleph, dtype=float)
    theta = np.asarray(theta, dtype=float)
    delta_angle = theta - diff.phi
    c2 = np.cos(delta_angle) ** 2
    s2 = np.sin(delta_angle) ** 2
    al2 = aleph ** 2
    d2 = diff.d ** 2
    bracket = c2 * (al2 / d2 + d2 / al2) + s2 * (al2 * d2 + 1.0 / (al2 * d2))
    out = (-2.0 * lam + (diff.Delta / area) * bracket) / area
    return float(out) if out.ndim == 0 else out


def analytic_minimizer(area, lam, diff):
    """Closed-form minimizer of :func:`rate_at` over (aleph, theta).

    The optimum matches the diffusion anisotropy: ``aleph = d`` and
    ``theta = phi``.  For isotropic diffusion (d = 1) the angle is
    degenerate and reported as 0 with a flag.
    """
    degenerate = diff.d - 1.0 < 1e-12
    min_rate = 2.0 * (diff.Delta - area * lam) / area ** 2
    return SieveResult(aleph_star=diff.d,
                       theta_star=0.0 if degenerate else diff.phi,
                       min_rate=min_rate,
                       degenerate_angle=bool(degenerate))


def _default_grids(diff, n_aleph, n_theta, aleph_range):
    lo, hi = aleph_range
    if not lo < diff.d < hi and not (lo == hi == diff.d):
        raise BracketError(
            f"aleph range {aleph_range} does not bracket the anisotropy {diff.d}")
    alephs = np.geomspace(lo, hi, n_aleph)
    thetas = np.linspace(0.0, math.pi, n_theta, endpoint=False)
    return alephs, thetas


def grid_search(area, lam, diff, n_aleph, n_theta, aleph_range,
                aleph_grid=None, theta_grid=None):
    """Exhaustive rate minimization over a log-spaced aleph grid times a
    uniform theta grid on [0, pi).

    Explicit ``aleph_grid``/``theta_grid`` arrays override the generated
    grids.  Ties resolve to the lowest flat index (aleph outer, theta
    inner).  Returns ``(aleph, theta, rate)``.
    """
    if aleph_grid is None or theta_grid is None:
        alephs, thetas = _default_grids(diff, n_aleph, n_theta, aleph_range)
        if aleph_grid is not None:
            alephs = np.asarray(aleph_grid, dtype=float)
        if theta_grid is not None:
            thetas = np.asarray(theta_grid, dtype=float)
    else:
        alephs = np.asarray(aleph_grid, dtype=float)
        thetas = np.asarray(theta_grid, dtype=float)

    rates = rate_at(alephs[:, None], thetas[None, :], area, lam, diff)
    rates = np.atleast_2d(rates)
    flat = int(np.argmin(rates))
    i, j = divmod(flat, rates.shape[1])
    aleph, theta = float(alephs[i]), float(thetas[j])
    if aleph < 1.0:
        # The rate is invariant under (aleph, theta) -> (1/aleph, theta+pi/2);
        # report the representative matching the aleph >= 1 convention.
        aleph, theta = 1.0 / aleph, (theta + math.pi / 2.0) % math.pi
    return aleph, theta, float(rates[i, j])


def rate_landscape(area, lam, diff, n_aleph, n_theta, aleph_range):
    """Full (aleph, theta, rate) table, aleph-major ordering, for plotting."""
    alephs, thetas = _default_grids(diff, n_aleph, n_theta, aleph_range)
    rates = rate_at(alephs[:, None], thetas[None, :], area, lam, diff)
    table = np.column_stack([
        np.repeat(alephs, len(thetas)),
        np.tile(thetas, len(alephs)),
        rates.ravel(),
    ])
    return table


def run_sieve(area, lam, diff, n_aleph=401, n_theta=361, aleph_range=(0.5, 8.0)):
    """Analytic minimizer plus the grid-search oracle in one record."""
    analytic = analytic_minimizer(area, lam, diff)
    g_aleph, g_theta, g_rate = grid_search(area, lam, diff,
                                           n_aleph, n_theta, aleph_range)
    return SieveResult(
        aleph_star=analytic.aleph_star,
        theta_star=analytic.theta_star,
        min_rate=analytic.min_rate,
        degenerate_angle=analytic.degenerate_angle,
        grid_aleph=g_aleph,
        grid_theta=g_theta,
        grid_rate=g_rate,
        grid_spec={"n_aleph": n_aleph, "n_theta": n_theta,
                   "aleph_min": aleph_range[0], "aleph_max": aleph_range[1]},
    )
