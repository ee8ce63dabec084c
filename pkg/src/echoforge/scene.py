"""Scene ingestion and ray queries: meshes, materials, sources, listener.

Scene files are JSON; geometry comes from a triangulated Wavefront OBJ.
Moving entities carry optional trajectory CSVs (time, position, quaternion
rows, linearly interpolated).
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

import numpy as np

from .bvh import BVH, ray_triangles_batch

N_BANDS = 4
BAND_EDGES_HZ = (176.0, 775.0, 3408.0)
DEFAULT_SPEED_OF_SOUND = 343.0

# self-intersection offset in meters
RAY_EPS = 1e-4

# used when a triangle's material binding is missing
DEFAULT_ABSORPTION = 0.1
DEFAULT_SCATTERING = 0.5

# scenes at or below this triangle count skip the BVH in batched queries
_BRUTE_FORCE_MAX_TRIS = 512


@dataclass(frozen=True)
class Material:
    name: str
    absorption: np.ndarray
    scattering: np.ndarray

    def __post_init__(self):
        for attr in ("absorption", "scattering"):
            arr = np.asarray(getattr(self, attr), dtype=np.float64)
            if arr.shape != (N_BANDS,):
                raise ValueError(f"{attr} must have {N_BANDS} band values")
            if arr.min() < 0.0 or arr.max() > 1.0:
                raise ValueError(f"{attr} coefficients must lie in [0, 1]")
            object.__setattr__(self, attr, arr)


def default_material() -> Material:
    return Material("default", np.full(N_BANDS, DEFAULT_ABSORPTION),
                    np.full(N_BANDS, DEFAULT_SCATTERING))


@dataclass
class RayHit:
    distance: float
    triangle: int
    material: Material
    normal: np.ndarray
    point: np.ndarray


def quat_to_matrix(q) -> np.ndarray:
    """Rotation matrix from quaternion (w, x, y, z)."""
    w, x, y, z = np.asarray(q, dtype=np.float64) / np.linalg.norm(q)
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])


class Trajectory:
    """Piecewise-linear pose track: rows of time, position, quaternion."""

    def __init__(self, times, positions, quats):
        self.times = np.asarray(times, dtype=np.float64)
        self.positions = np.asarray(positions, dtype=np.float64)
        self.quats = np.asarray(quats, dtype=np.float64)
        if not np.all(np.diff(self.times) >= 0):
            raise ValueError("trajectory times must be non-decreasing")

    @classmethod
    def from_csv(cls, path) -> "Trajectory":
        rows = np.loadtxt(path, delimiter=",", ndmin=2)
        if rows.shape[1] != 8:
            raise ValueError(
                f"trajectory rows must be time,px,py,pz,qw,qx,qy,qz: {path}")
        return cls(rows[:, 0], rows[:, 1:4], rows[:, 4:8])

    def pose(self, t: float):
        """Position and normalized quaternion at time t (clamped to range)."""
        times = self.times
        if t <= times[0]:
            return self.positions[0], self.quats[0] / np.linalg.norm(self.quats[0])
        if t >= times[-1]:
            return self.positions[-1], self.quats[-1] / np.linalg.norm(self.quats[-1])
        i = int(np.searchsorted(times, t, side="right")) - 1
        span = times[i + 1] - times[i]
        a = 0.0 if span <= 0 else (t - times[i]) / span
        pos = (1 - a) * self.positions[i] + a * self.positions[i + 1]
        q0, q1 = self.quats[i], self.quats[i + 1]
        if np.dot(q0, q1) < 0:
            q1 = -q1
        q = (1 - a) * q0 + a * q1
        return pos, q / np.linalg.norm(q)


@dataclass
class Source:
    id: str
    position: np.ndarray
    radius: float = 0.0
    gain: float = 1.0
    audio: str | None = None
    trajectory: Trajectory | None = None

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=np.float64)
        if self.radius < 0:
            raise ValueError(f"source {self.id}: radius must be >= 0")

    def pose_at(self, t: float) -> np.ndarray:
        if self.trajectory is None:
            return self.position
        return self.trajectory.pose(t)[0]


@dataclass
class Listener:
    position: np.ndarray
    orientation: np.ndarray = field(
        default_factory=lambda: np.eye(3))
    trajectory: Trajectory | None = None

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=np.float64)
        self.orientation = np.asarray(self.orientation, dtype=np.float64)

    def pose_at(self, t: float):
        if self.trajectory is None:
            return self.position, self.orientation
        pos, quat = self.trajectory.pose(t)
        return pos, quat_to_matrix(quat)


class SceneModel:
    """Immutable scene snapshot: triangles, materials, sources, listener."""

    def __init__(self, v0, e1, e2, material_index, materials,
                 sources, listener, speed_of_sound=DEFAULT_SPEED_OF_SOUND,
                 degenerate_dropped=0):
        self.v0 = np.asarray(v0, dtype=np.float64).reshape(-1, 3)
        self.e1 = np.asarray(e1, dtype=np.float64).reshape(-1, 3)
        self.e2 = np.asarray(e2, dtype=np.float64).reshape(-1, 3)
        self.material_index = np.asarray(material_index, dtype=np.int64)
        self.materials = list(materials)
        self.sources = list(sources)
        self.listener = listener
        self.speed_of_sound = float(speed_of_sound)
        self.degenerate_dropped = degenerate_dropped
        if not self.sources:
            raise ValueError("scene must define at least one source")
        n = len(self.v0)
        cross = np.cross(self.e1, self.e2) if n else np.empty((0, 3))
        norms = np.linalg.norm(cross, axis=1) if n else np.empty(0)
        self.normals = cross / norms[:, None] if n else np.empty((0, 3))
        self.absorption = np.array(
            [m.absorption for m in self.materials]).reshape(-1, N_BANDS)
        self.scattering = np.array(
            [m.scattering for m in self.materials]).reshape(-1, N_BANDS)
        self.bvh = BVH(self.v0, self.e1, self.e2)

    @property
    def n_triangles(self) -> int:
        return len(self.v0)

    def intersect(self, origin, direction, max_distance=np.inf) -> RayHit | None:
        """Nearest surface hit along a unit-direction ray, or None."""
        origin = np.asarray(origin, dtype=np.float64)
        direction = np.asarray(direction, dtype=np.float64)
        norm = np.linalg.norm(direction)
        if abs(norm - 1.0) > 1e-6:
            raise ValueError("ray direction must be unit length")
        t, tri = self.bvh.intersect(origin, direction, RAY_EPS, max_distance)
        if tri < 0:
            return None
        normal = self.normals[tri]
        if normal @ direction > 0:
            normal = -normal
        return RayHit(distance=t, triangle=tri,
                      material=self.materials[self.material_index[tri]],
                      normal=normal, point=origin + t * direction)

    def intersect_brute(self, origin, direction, max_distance=np.inf):
        """Reference nearest-hit over all triangles (no BVH)."""
        if self.n_triangles == 0:
            return np.inf, -1
        from .bvh import ray_triangles
        t, valid = ray_triangles(np.asarray(origin, np.float64),
                                 np.asarray(direction, np.float64),
                                 self.v0, self.e1, self.e2,
                                 RAY_EPS, max_distance)
        if not valid.any():
            return np.inf, -1
        k = int(np.argmin(np.where(valid, t, np.inf)))
        return float(t[k]), k

    def intersect_batch(self, origins, directions):
        """Nearest hits for many rays: (t, triangle_id, hit_mask) arrays."""
        origins = np.asarray(origins, dtype=np.float64)
        directions = np.asarray(directions, dtype=np.float64)
        n_rays = len(origins)
        if self.n_triangles == 0:
            return (np.full(n_rays, np.inf), np.full(n_rays, -1, np.int64),
                    np.zeros(n_rays, dtype=bool))
        if self.n_triangles <= _BRUTE_FORCE_MAX_TRIS:
            t, valid = ray_triangles_batch(origins, directions,
                                           self.v0, self.e1, self.e2, RAY_EPS)
            t = np.where(valid, t, np.inf)
            tri = np.argmin(t, axis=1)
            best = t[np.arange(n_rays), tri]
            hit = np.isfinite(best)
            return best, np.where(hit, tri, -1), hit
        best = np.empty(n_rays)
        tri = np.empty(n_rays, dtype=np.int64)
        for i in range(n_rays):
            best[i], tri[i] = self.bvh.intersect(origins[i], directions[i],
                                                 RAY_EPS, np.inf)
        hit = tri >= 0
        return best, tri, hit

    def occluded_batch(self, origins, targets):
        """True where the segment origin->target is blocked by geometry."""
        origins = np.asarray(origins, dtype=np.float64)
        targets = np.asarray(targets, dtype=np.float64)
        n_rays = len(origins)
        if self.n_triangles == 0 or n_rays == 0:
            return np.zeros(n_rays, dtype=bool)
        delta = targets - origins
        dist = np.linalg.norm(delta, axis=1)
        safe = np.maximum(dist, 1e-12)
        dirs = delta / safe[:, None]
        limit = dist - RAY_EPS
        if self.n_triangles <= _BRUTE_FORCE_MAX_TRIS:
            t, valid = ray_triangles_batch(origins, dirs,
                                           self.v0, self.e1, self.e2, RAY_EPS)
            return np.any(valid & (t < limit[:, None]), axis=1)
        out = np.empty(n_rays, dtype=bool)
        for i in range(n_rays):
            t, tri = self.bvh.intersect(origins[i], dirs[i], RAY_EPS, limit[i])
            out[i] = tri >= 0
        return out


def _parse_obj(path):
    """Triangulated OBJ: positions only; returns triangles and group names."""
    verts = []
    tris = []
    groups = []
    current = ""
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            tag = parts[0]
            if tag == "v":
                verts.append([float(x) for x in parts[1:4]])
            elif tag in ("g", "o", "usemtl"):
                current = parts[1] if len(parts) > 1 else ""
            elif tag == "f":
                idx = []
                for token in parts[1:]:
                    i = int(token.split("/")[0])
                    idx.append(i - 1 if i > 0 else len(verts) + i)
                for k in range(1, len(idx) - 1):  # fan triangulation
                    tris.append((idx[0], idx[k], idx[k + 1]))
                    groups.append(current)
    return np.asarray(verts, dtype=np.float64), tris, groups


def load_scene(source, base_dir=None) -> SceneModel:
    """Build a SceneModel from a scene JSON path or an equivalent dict."""
    if isinstance(source, (str, os.PathLike)):
        base_dir = base_dir or os.path.dirname(os.fspath(source))
        with open(source, "r", encoding="utf-8") as f:
            desc = json.load(f)
    else:
        desc = source
        base_dir = base_dir or "."

    def resolve(p):
        return p if os.path.isabs(p) else os.path.join(base_dir, p)

    materials = [default_material()]
    by_name = {}
    for m in desc.get("materials", []):
        mat = Material(m["name"], np.asarray(m["absorption"], dtype=float),
                       np.asarray(m["scattering"], dtype=float))
        by_name[mat.name] = len(materials)
        materials.append(mat)
    bindings = desc.get("material_bindings", {})

    v0 = np.empty((0, 3))
    e1 = np.empty((0, 3))
    e2 = np.empty((0, 3))
    mat_idx = np.empty(0, dtype=np.int64)
    dropped = 0
    if desc.get("mesh"):
        verts, tris, groups = _parse_obj(resolve(desc["mesh"]))
        keep_a, keep_b, keep_c, keep_m = [], [], [], []
        for (a, b, c), grp in zip(tris, groups):
            pa, pb, pc = verts[a], verts[b], verts[c]
            if np.linalg.norm(np.cross(pb - pa, pc - pa)) < 1e-12:
                dropped += 1
                continue
            keep_a.append(pa)
            keep_b.append(pb)
            keep_c.append(pc)
            keep_m.append(by_name.get(bindings.get(grp, ""), 0))
        if keep_a:
            A = np.array(keep_a)
            B = np.array(keep_b)
            C = np.array(keep_c)
            v0, e1, e2 = A, B - A, C - A
            mat_idx = np.array(keep_m, dtype=np.int64)

    sources = []
    for s in desc.get("sources", []):
        traj = (Trajectory.from_csv(resolve(s["trajectory"]))
                if s.get("trajectory") else None)
        audio = s.get("audio")
        if audio and audio != "impulse":
            audio = resolve(audio)
        sources.append(Source(id=str(s.get("id", len(sources))),
                              position=s["position"],
                              radius=float(s.get("radius", 0.0)),
                              gain=float(s.get("gain", 1.0)),
                              audio=audio, trajectory=traj))

    ldesc = desc.get("listener", {"position": [0.0, 0.0, 0.0]})
    quat = ldesc.get("orientation_quat", [1.0, 0.0, 0.0, 0.0])
    ltraj = (Trajectory.from_csv(resolve(ldesc["trajectory"]))
             if ldesc.get("trajectory") else None)
    listener = Listener(position=ldesc["position"],
                        orientation=quat_to_matrix(quat), trajectory=ltraj)

    return SceneModel(v0, e1, e2, mat_idx, materials, sources, listener,
                      speed_of_sound=desc.get("speed_of_sound",
                                              DEFAULT_SPEED_OF_SOUND),
                      degenerate_dropped=dropped)


def make_box_scene(size=10.0, absorption=0.2, scattering=0.5,
                   source_position=(2.5, 0.0, 0.0),
                   listener_position=(-2.5, 0.0, 0.0),
                   gain=1.0, radius=0.0) -> SceneModel:
    """Axis-aligned closed box centered at the origin (test/benchmark aid)."""
    h = size / 2.0
    corners = np.array([[sx, sy, sz] for sx in (-h, h)
                        for sy in (-h, h) for sz in (-h, h)])
    # 12 triangles, two per face, inward-facing winding is irrelevant
    faces = [
        (0, 1, 3), (0, 3, 2),   # -x
        (4, 6, 7), (4, 7, 5),   # +x
        (0, 4, 5), (0, 5, 1),   # -y
        (2, 3, 7), (2, 7, 6),   # +y
        (0, 2, 6), (0, 6, 4),   # -z
        (1, 5, 7), (1, 7, 3),   # +z
    ]
    A = corners[[f[0] for f in faces]]
    B = corners[[f[1] for f in faces]]
    C = corners[[f[2] for f in faces]]
    mat = Material("box", np.full(N_BANDS, absorption),
                   np.full(N_BANDS, scattering))
    src = Source(id="src", position=np.asarray(source_position, float),
                 radius=radius, gain=gain)
    lst = Listener(position=np.asarray(listener_position, float))
    return SceneModel(A, B - A, C - A, np.zeros(12, dtype=np.int64),
                      [mat], [src], lst)
