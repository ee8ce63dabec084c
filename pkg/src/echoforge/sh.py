"""Real spherical-harmonic math: evaluation, rotation, transforms, loudness.

Basis: real, fully orthonormal, ACN channel ordering (index l*l + l + m),
polynomial (Cartesian) evaluation up to order 4.  The sign convention is
the one under which normalize(-c[3], -c[1], c[2]) recovers the encoding
direction of a first-order vector, which every consumer in this package
relies on.
"""
from __future__ import annotations

import numpy as np

from .tdesigns import TDesign, design_for_order

MAX_ORDER = 4

SH_C0 = 0.28209479177387814
SH_C1 = 0.4886025119029199
SH_C2 = (1.0925484305920792, -1.0925484305920792, 0.31539156525252005,
         -1.0925484305920792, 0.5462742152960396)
SH_C3 = (-0.5900435899266435, 2.890611442640554, -0.4570457994644658,
         0.3731763325901154, -0.4570457994644658, 1.445305721320277,
         -0.5900435899266435)
SH_C4 = (2.5033429417967046, -1.7701307697799304, 0.9461746957575601,
         -0.6690465435572892, 0.10578554691520431, -0.6690465435572892,
         0.47308734787878004, -1.7701307697799304, 0.6258357354491761)


def n_coeffs(order: int) -> int:
    return (order + 1) ** 2


class SHVector:
    """Coefficient vector of a real spherical-harmonic expansion."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        coeffs = np.asarray(coeffs, dtype=np.float64)
        if coeffs.shape != (n_coeffs(order),):
            raise ValueError(
                f"order {order} needs {n_coeffs(order)} coefficients, "
                f"got {coeffs.shape}")
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("non-finite SH coefficients")
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def from_direction(cls, direction, order: int) -> "SHVector":
        return cls(order, eval_sh(direction, order))

    def __repr__(self):
        return f"SHVector(order={self.order}, coeffs={self.coeffs!r})"


class SHRotation:
    """Block-diagonal rotation matrix acting on SH coefficient vectors."""

    __slots__ = ("order", "matrix")

    def __init__(self, order: int, matrix: np.ndarray):
        self.order = order
        self.matrix = matrix

    def apply(self, coeffs: np.ndarray) -> np.ndarray:
        return self.matrix @ np.asarray(coeffs, dtype=np.float64)


def _check_direction(direction):
    d = np.asarray(direction, dtype=np.float64)
    if d.shape != (3,):
        raise ValueError("direction must be a 3-vector")
    norm = np.linalg.norm(d)
    if abs(norm - 1.0) > 1e-3:
        raise ValueError(f"direction norm {norm:.6g} too far from unit")
    return d / norm


def eval_sh(direction, order: int) -> np.ndarray:
    """Evaluate the real SH basis at one unit direction, ACN order."""
    d = _check_direction(direction)
    return eval_sh_batch(d[None, :], order)[0]


def eval_sh_batch(directions: np.ndarray, order: int) -> np.ndarray:
    """Evaluate the basis at (N, 3) unit directions; returns (N, (n+1)^2).

    Directions are assumed normalized by the caller; no renormalization.
    """
    if order < 0 or order > MAX_ORDER:
        raise ValueError(f"order must be in [0, {MAX_ORDER}], got {order}")
    d = np.asarray(directions, dtype=np.float64)
    x, y, z = d[:, 0], d[:, 1], d[:, 2]
    out = np.empty((d.shape[0], n_coeffs(order)))
    out[:, 0] = SH_C0
    if order >= 1:
        out[:, 1] = -SH_C1 * y
        out[:, 2] = SH_C1 * z
        out[:, 3] = -SH_C1 * x
    if order >= 2:
        xx, yy, zz = x * x, y * y, z * z
        out[:, 4] = SH_C2[0] * x * y
        out[:, 5] = SH_C2[1] * y * z
        out[:, 6] = SH_C2[2] * (2.0 * zz - xx - yy)
        out[:, 7] = SH_C2[3] * x * z
        out[:, 8] = SH_C2[4] * (xx - yy)
    if order >= 3:
        out[:, 9] = SH_C3[0] * y * (3.0 * xx - yy)
        out[:, 10] = SH_C3[1] * x * y * z
        out[:, 11] = SH_C3[2] * y * (4.0 * zz - xx - yy)
        out[:, 12] = SH_C3[3] * z * (2.0 * zz - 3.0 * xx - 3.0 * yy)
        out[:, 13] = SH_C3[4] * x * (4.0 * zz - xx - yy)
        out[:, 14] = SH_C3[5] * z * (xx - yy)
        out[:, 15] = SH_C3[6] * x * (xx - 3.0 * yy)
    if order >= 4:
        out[:, 16] = SH_C4[0] * x * y * (xx - yy)
        out[:, 17] = SH_C4[1] * y * z * (3.0 * xx - yy)
        out[:, 18] = SH_C4[2] * x * y * (7.0 * zz - 1.0)
        out[:, 19] = SH_C4[3] * y * z * (7.0 * zz - 3.0)
        out[:, 20] = SH_C4[4] * (zz * (35.0 * zz - 30.0) + 3.0)
        out[:, 21] = SH_C4[5] * x * z * (7.0 * zz - 3.0)
        out[:, 22] = SH_C4[6] * (xx - yy) * (7.0 * zz - 1.0)
        out[:, 23] = SH_C4[7] * x * z * (xx - 3.0 * yy)
        out[:, 24] = SH_C4[8] * (xx * (xx - 3.0 * yy) - yy * (3.0 * xx - yy))
    return out


def dominant_direction(v) -> np.ndarray | None:
    """Dominant Cartesian direction of a distribution from its order-1 part.

    Returns None when the first-order energy vanishes (isotropic input);
    callers must supply their own fallback direction.
    """
    coeffs = v.coeffs if isinstance(v, SHVector) else np.asarray(v, np.float64)
    if coeffs.shape[0] < 4:
        raise ValueError("dominant_direction needs order >= 1 coefficients")
    vec = np.array([-coeffs[3], -coeffs[1], coeffs[2]])
    norm = np.linalg.norm(vec)
    if norm <= 1e-12 * max(1.0, abs(coeffs[0])):
        return None
    return vec / norm


def _check_rotation(R):
    R = np.asarray(R, dtype=np.float64)
    if R.shape != (3, 3):
        raise ValueError("rotation must be a 3x3 matrix")
    if np.abs(R @ R.T - np.eye(3)).max() > 1e-9 or np.linalg.det(R) < 0:
        raise ValueError("matrix is not a proper rotation")
    return R


def sh_rotation(R, order: int) -> SHRotation:
    """SH-domain rotation matrix for a 3x3 rotation, built by the
    degree-recursive method: each degree-l block is derived from the
    degree-1 block and the previous block."""
    R = _check_rotation(R)
    if order < 0 or order > MAX_ORDER:
        raise ValueError(f"order must be in [0, {MAX_ORDER}]")
    # degree-1 block in SH component order (y, z, x)
    perm = (1, 2, 0)
    M1 = np.array([[R[perm[i], perm[j]] for j in range(3)] for i in range(3)])
    blocks = [np.array([[1.0]]), M1]

    def prev(a, b, l):
        return blocks[l - 1][a + l - 1, b + l - 1]

    def P(i, l, a, b):
        if b == l:
            return (M1[i + 1, 2] * prev(a, l - 1, l)
                    - M1[i + 1, 0] * prev(a, -l + 1, l))
        if b == -l:
            return (M1[i + 1, 2] * prev(a, -l + 1, l)
                    + M1[i + 1, 0] * prev(a, l - 1, l))
        return M1[i + 1, 1] * prev(a, b, l)

    for l in range(2, order + 1):
        M = np.zeros((2 * l + 1, 2 * l + 1))
        for m in range(-l, l + 1):
            am = abs(m)
            d_m0 = 1.0 if m == 0 else 0.0
            for n in range(-l, l + 1):
                denom = ((2 * l) * (2 * l - 1) if abs(n) == l
                         else (l + n) * (l - n))
                u = np.sqrt((l + m) * (l - m) / denom)
                v = (0.5 * np.sqrt((1 + d_m0) * (l + am - 1) * (l + am)
                                   / denom) * (1 - 2 * d_m0))
                w = -0.5 * np.sqrt((l - am - 1) * (l - am) / denom) \
                    * (1 - d_m0)
                val = u * P(0, l, m, n) if u != 0.0 else 0.0
                if v != 0.0:
                    if m == 0:
                        V = P(1, l, 1, n) + P(-1, l, -1, n)
                    elif m > 0:
                        V = (P(1, l, m - 1, n)
                             * (np.sqrt(2.0) if m == 1 else 1.0)
                             - (0.0 if m == 1 else P(-1, l, -m + 1, n)))
                    else:
                        V = ((0.0 if m == -1 else P(1, l, m + 1, n))
                             + P(-1, l, -m - 1, n)
                             * (np.sqrt(2.0) if m == -1 else 1.0))
                    val += v * V
                if w != 0.0:
                    if m > 0:
                        W = P(1, l, m + 1, n) + P(-1, l, -m - 1, n)
                    else:
                        W = P(1, l, m - 1, n) - P(-1, l, -m + 1, n)
                    val += w * W
                M[m + l, n + l] = val
        blocks.append(M)

    size = n_coeffs(order)
    J = np.zeros((size, size))
    for l in range(order + 1):
        # conjugate each block into this package's sign convention
        s = np.array([(-1.0) ** abs(m) for m in range(-l, l + 1)])
        J[l * l:(l + 1) ** 2, l * l:(l + 1) ** 2] = blocks[l] * np.outer(s, s)
    return SHRotation(order, J)


def sh_transform(directions: np.ndarray, values: np.ndarray,
                 order: int) -> np.ndarray:
    """Discrete SH transform: fit coefficients to sampled sphere values.

    Exact for band-limited input sampled on a t-design of degree
    >= 2*order; least-squares on any other (overdetermined) grid.
    """
    dirs = np.asarray(directions, dtype=np.float64)
    vals = np.asarray(values, dtype=np.float64)
    nc = n_coeffs(order)
    if dirs.shape[0] < nc:
        raise ValueError(
            f"need at least {nc} samples for order {order}, got {dirs.shape[0]}")
    B = eval_sh_batch(dirs, order)
    coeffs, *_ = np.linalg.lstsq(B, vals, rcond=None)
    return coeffs


def directional_loudness_matrix(avg_directivity, order: int) -> np.ndarray:
    """Loudness transform that reshapes an SH signal toward a target
    directional distribution: the distribution is sampled on a t-design
    as per-direction gains (negatives clamped to zero) and re-encoded."""
    dist = (avg_directivity.coeffs if isinstance(avg_directivity, SHVector)
            else np.asarray(avg_directivity, dtype=np.float64))
    design = design_for_order(order)
    nc = n_coeffs(order)
    B = eval_sh_batch(design.directions, order)          # (N, nc)
    dist_order = int(np.sqrt(dist.shape[0])) - 1
    Bd = B if dist.shape[0] == nc else eval_sh_batch(design.directions,
                                                     dist_order)
    gains = np.maximum(0.0, Bd @ dist)
    return (4.0 * np.pi / len(design)) * (B.T * gains) @ B


def random_scatter_rotation(rng: np.random.Generator) -> np.ndarray:
    """Scattering rotation: per-axis angles drawn uniformly in [90, 270] deg."""
    angles = rng.uniform(np.pi / 2, 3 * np.pi / 2, size=3)
    cx, sx = np.cos(angles[0]), np.sin(angles[0])
    cy, sy = np.cos(angles[1]), np.sin(angles[1])
    cz, sz = np.cos(angles[2]), np.sin(angles[2])
    Rx = np.array([[1, 0, 0], [0, cx, -sx], [0, sx, cx]])
    Ry = np.array([[cy, 0, sy], [0, 1, 0], [-sy, 0, cy]])
    Rz = np.array([[cz, -sz, 0], [sz, cz, 0], [0, 0, 1]])
    return Rz @ Ry @ Rx
