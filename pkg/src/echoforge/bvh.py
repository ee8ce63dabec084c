"""Bounding-volume hierarchy over triangles with binned SAH construction."""
from __future__ import annotations

import numpy as np

_LEAF_SIZE = 4
_N_BINS = 16
_BARY_EPS = 1e-10


def ray_triangles(origin, direction, v0, e1, e2, t_min, t_max):
    """Moeller-Trumbore for one ray against a triangle array.

    Returns (t, valid): hit parameters and a mask of real hits within
    (t_min, t_max].
    """
    pvec = np.cross(direction, e2)
    det = np.einsum("ij,ij->i", e1, pvec)
    valid = np.abs(det) > 1e-14
    inv_det = np.where(valid, 1.0 / np.where(valid, det, 1.0), 0.0)
    tvec = origin - v0
    u = np.einsum("ij,ij->i", tvec, pvec) * inv_det
    qvec = np.cross(tvec, e1)
    v = qvec @ direction * inv_det
    t = np.einsum("ij,ij->i", e2, qvec) * inv_det
    valid &= (u >= -_BARY_EPS) & (v >= -_BARY_EPS) & (u + v <= 1.0 + _BARY_EPS)
    valid &= (t > t_min) & (t <= t_max)
    return t, valid


def ray_triangles_batch(origins, directions, v0, e1, e2, t_min):
    """All rays against all triangles: returns (t, valid) of shape (R, T)."""
    d = directions[:, None, :]
    pvec = np.cross(d, e2[None, :, :])
    det = np.einsum("tj,rtj->rt", e1, pvec)
    valid = np.abs(det) > 1e-14
    inv_det = np.where(valid, 1.0 / np.where(valid, det, 1.0), 0.0)
    tvec = origins[:, None, :] - v0[None, :, :]
    u = np.einsum("rtj,rtj->rt", tvec, pvec) * inv_det
    qvec = np.cross(tvec, e1[None, :, :])
    v = np.einsum("rtj,rj->rt", qvec, directions) * inv_det
    t = np.einsum("tj,rtj->rt", e2, qvec) * inv_det
    valid &= (u >= -_BARY_EPS) & (v >= -_BARY_EPS) & (u + v <= 1.0 + _BARY_EPS)
    valid &= t > t_min
    return t, valid


class BVH:
    """Static BVH stored as flat arrays; traversal is per-ray."""

    def __init__(self, v0: np.ndarray, e1: np.ndarray, e2: np.ndarray):
        self.v0, self.e1, self.e2 = v0, e1, e2
        n = len(v0)
        self.n_triangles = n
        if n == 0:
            self.tri_order = np.empty(0, dtype=np.int64)
            self.node_min = np.empty((0, 3))
            return
        tri_min = np.minimum(np.minimum(v0, v0 + e1), v0 + e2)
        tri_max = np.maximum(np.maximum(v0, v0 + e1), v0 + e2)
        centroids = (tri_min + tri_max) * 0.5

        node_min, node_max = [], []
        node_left, node_start, node_count = [], [], []
        order = np.arange(n, dtype=np.int64)

        def add_node():
            node_min.append(None)
            node_max.append(None)
            node_left.append(-1)
            node_start.append(-1)
            node_count.append(0)
            return len(node_min) - 1

        def build(idx, lo, hi):
            sel = order[lo:hi]
            bb_min = tri_min[sel].min(axis=0)
            bb_max = tri_max[sel].max(axis=0)
            node_min[idx], node_max[idx] = bb_min, bb_max
            count = hi - lo
            if count <= _LEAF_SIZE:
                node_start[idx], node_count[idx] = lo, count
                return
            cens = centroids[sel]
            extent = cens.max(axis=0) - cens.min(axis=0)
            axis = int(np.argmax(extent))
            if extent[axis] <= 1e-12:
                node_start[idx], node_count[idx] = lo, count
                return
            # binned SAH over the widest centroid axis
            rel = (cens[:, axis] - cens[:, axis].min()) / extent[axis]
            bins = np.minimum((_N_BINS * rel).astype(np.int64), _N_BINS - 1)
            best_cost, best_split = np.inf, None
            for split in range(1, _N_BINS):
                left = bins < split
                nl = int(left.sum())
                if nl == 0 or nl == count:
                    continue
                lmin = tri_min[sel[left]].min(axis=0)
                lmax = tri_max[sel[left]].max(axis=0)
                rmin = tri_min[sel[~left]].min(axis=0)
                rmax = tri_max[sel[~left]].max(axis=0)
                area = lambda a, b: float(np.sum((b - a) * np.roll(b - a, 1)))
                cost = area(lmin, lmax) * nl + area(rmin, rmax) * (count - nl)
                if cost < best_cost:
                    best_cost, best_split = cost, split
            if best_split is None:
                half = count // 2
                part = np.argsort(cens[:, axis], kind="stable")
                order[lo:hi] = sel[part]
                mid = lo + half
            else:
                left = bins < best_split
                order[lo:hi] = np.concatenate([sel[left], sel[~left]])
                mid = lo + int(left.sum())
            li, ri = add_node(), add_node()
            node_left[idx] = li
            build(li, lo, mid)
            build(ri, mid, hi)

        root = add_node()
        build(root, 0, n)
        self.tri_order = order
        self.node_min = np.array(node_min)
        self.node_max = np.array(node_max)
        self.node_left = np.array(node_left, dtype=np.int64)
        self.node_start = np.array(node_start, dtype=np.int64)
        self.node_count = np.array(node_count, dtype=np.int64)

    def intersect(self, origin, direction, t_min, t_max):
        """Nearest hit: returns (t, triangle_id) or (inf, -1)."""
        if self.n_triangles == 0:
            return np.inf, -1
        inv = np.where(np.abs(direction) > 1e-300, 1.0 / direction, np.inf)
        best_t, best_tri = t_max, -1
        stack = [0]
        nmin, nmax = self.node_min, self.node_max
        while stack:
            node = stack.pop()
            t0 = (nmin[node] - origin) * inv
            t1 = (nmax[node] - origin) * inv
            near = np.minimum(t0, t1).max()
            far = np.maximum(t0, t1).min()
            if near > far or far < t_min or near > best_t:
                continue
            if self.node_left[node] < 0:
                s = self.node_start[node]
                ids = self.tri_order[s:s + self.node_count[node]]
                t, valid = ray_triangles(origin, direction, self.v0[ids],
                                         self.e1[ids], self.e2[ids],
                                         t_min, best_t)
                if valid.any():
                    k = np.argmin(np.where(valid, t, np.inf))
                    best_t, best_tri = t[k], int(ids[k])
            else:
                stack.append(self.node_left[node])
                stack.append(self.node_left[node] + 1)
        if best_tri < 0:
            return np.inf, -1
        return float(best_t), best_tri
