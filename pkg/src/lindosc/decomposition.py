"""Scale/squeezing/rotation decomposition of 2x2 symmetric matrices.

A symmetric positive definite covariance matrix is written as

    M = (hbar * A / 2) * O(theta)^T @ diag(aleph**2, aleph**-2) @ O(theta)

with ``A`` the phase-space area, ``aleph >= 1`` the squeezing parameter and
``O(theta)`` the rotation with the convention ``O = [[c, -s], [s, c]]``.
The same congruence decomposes the scaled diffusion matrix into an intensity
``Delta``, an anisotropy ``d`` and an angle ``phi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotSPD, SingularDiffusion

#: Below this excess of aleph**2 over 1 the rotation angle is meaningless.
_ISOTROPY_TOL = 1e-12

_SYMMETRY_RTOL = 1e-9


@dataclass(frozen=True)
class CovDecomposition:
    """(area, squeezing, angle) of a covariance matrix."""

    A: float
    aleph: float
    theta: float


@dataclass(frozen=True)
class DiffDecomposition:
    """(intensity, anisotropy, angle) of a scaled diffusion matrix."""

    Delta: float
    d: float
    phi: float


def rotation(theta):
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def _check_symmetric(m):
    scale = max(abs(m[0, 0]), abs(m[1, 1]), abs(m[0, 1]), abs(m[1, 0]), 1e-300)
    if abs(m[0, 1] - m[1, 0]) > _SYMMETRY_RTOL * scale:
        raise NotSPD(f"matrix is not symmetric: {m!r}")


def _diagonalize(m):
    """Closed-form eigen-structure of a symmetric 2x2 matrix.

    Returns ``(sqrt_det, ratio2, theta)`` where ``ratio2 = lambda_max /
    sqrt(det) >= 1`` and ``theta in [0, pi)`` orients the congruence so the
    large eigenvalue sits on the first diagonal slot.
    """
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    sqrt_det = math.sqrt(det)
    tr = m[0, 0] + m[1, 1]
    gap = math.hypot(m[0, 0] - m[1, 1], 2.0 * m[0, 1])
    lam_max = 0.5 * (tr + gap)
    ratio2 = lam_max / sqrt_det
    if ratio2 - 1.0 < _ISOTROPY_TOL:
        return sqrt_det, 1.0, 0.0
    theta = 0.5 * math.atan2(-2.0 * m[0, 1], m[0, 0] - m[1, 1])
    return sqrt_det, ratio2, theta % math.pi


def decompose(m, hbar):
    """Decompose an SPD covariance matrix into (A, aleph, theta)."""
    m = np.asarray(m, dtype=float)
    _check_symmetric(m)
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if det <= 0 or m[0, 0] <= 0:
        raise NotSPD(f"matrix is not positive definite: {m!r}")
    sqrt_det, ratio2, theta = _diagonalize(m)
    return CovDecomposition(A=2.0 * sqrt_det / hbar,
                            aleph=math.sqrt(ratio2),
                            theta=theta)


def compose(dec, hbar):
    """Rebuild the covariance matrix from (A, aleph, theta)."""
    o = rotation(dec.theta)
    core = np.diag([dec.aleph ** 2, dec.aleph ** -2])
    return (hbar * dec.A / 2.0) * (o.T @ core @ o)


def decompose_diffusion(d_matrix, hbar):
    """Decompose a scaled diffusion matrix into (Delta, d, phi)."""
    d_matrix = np.asarray(d_matrix, dtype=float)
    _check_symmetric(d_matrix)
    det = d_matrix[0, 0] * d_matrix[1, 1] - d_matrix[0, 1] * d_matrix[1, 0]
    if det <= 0:
        raise SingularDiffusion(
            "diffusion matrix has non-positive determinant; "
            "anisotropy is undefined")
    sqrt_det, ratio2, phi = _diagonalize(d_matrix)
    return DiffDecomposition(Delta=2.0 * sqrt_det / hbar,
                             d=math.sqrt(ratio2),
                             phi=phi)


def compose_diffusion(dec, hbar):
    """Rebuild the scaled diffusion matrix from (Delta, d, phi)."""
    o = rotation(dec.phi)
    core = np.diag([dec.d ** 2, dec.d ** -2])
    return (hbar * dec.Delta / 2.0) * (o.T @ core @ o)
