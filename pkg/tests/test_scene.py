import json

import numpy as np
import pytest

from echoforge.scene import (
    Material,
    SceneModel,
    Trajectory,
    load_scene,
    make_box_scene,
    quat_to_matrix,
)

CUBE_OBJ = """\
# unit cube
v 0 0 0
v 1 0 0
v 1 1 0
v 0 1 0
v 0 0 1
v 1 0 1
v 1 1 1
v 0 1 1
g walls
f 1 2 3 4
f 5 8 7 6
f 1 5 6 2
f 2 6 7 3
f 3 7 8 4
f 5 1 4 8
"""


def write_scene(tmp_path, extra=None, mesh=CUBE_OBJ):
    scene = {
        "materials": [
            {"name": "plaster", "absorption": [0.1, 0.2, 0.3, 0.4],
             "scattering": [0.5, 0.5, 0.5, 0.5]},
        ],
        "material_bindings": {"walls": "plaster"},
        "sources": [{"id": "s1", "position": [0.5, 0.5, 0.5],
                     "radius": 0.0, "gain": 1.0}],
        "listener": {"position": [0.25, 0.5, 0.5],
                     "orientation_quat": [1, 0, 0, 0]},
        "speed_of_sound": 343.0,
    }
    if mesh is not None:
        (tmp_path / "cube.obj").write_text(mesh)
        scene["mesh"] = "cube.obj"
    if extra:
        scene.update(extra)
    path = tmp_path / "scene.json"
    path.write_text(json.dumps(scene))
    return path


class TestLoading:
    def test_unit_cube(self, tmp_path):
        model = load_scene(write_scene(tmp_path))
        assert model.n_triangles == 12
        assert len(model.sources) == 1
        assert model.speed_of_sound == 343.0
        tri_mat = model.materials[model.material_index[0]]
        assert tri_mat.name == "plaster"

    def test_unreferenced_material_retained(self, tmp_path):
        extra = {"materials": [
            {"name": "plaster", "absorption": [0.1] * 4, "scattering": [0.5] * 4},
            {"name": "unused", "absorption": [0.9] * 4, "scattering": [0.1] * 4},
        ]}
        model = load_scene(write_scene(tmp_path, extra))
        assert any(m.name == "unused" for m in model.materials)

    def test_free_field_scene(self, tmp_path):
        model = load_scene(write_scene(tmp_path, mesh=None))
        assert model.n_triangles == 0
        assert model.intersect([0, 0, 0.0], [1.0, 0, 0]) is None

    def test_unknown_binding_gets_default(self, tmp_path):
        extra = {"material_bindings": {}}
        model = load_scene(write_scene(tmp_path, extra))
        mat = model.materials[model.material_index[0]]
        assert mat.name == "default"
        assert np.allclose(mat.absorption, 0.1)
        assert np.allclose(mat.scattering, 0.5)

    def test_degenerate_triangles_dropped(self, tmp_path):
        mesh = CUBE_OBJ + "f 1 1 2\n"
        model = load_scene(write_scene(tmp_path, mesh=mesh))
        assert model.n_triangles == 12
        assert model.degenerate_dropped == 1

    def test_zero_sources_rejected(self, tmp_path):
        path = write_scene(tmp_path, extra={"sources": []})
        with pytest.raises(ValueError):
            load_scene(path)

    def test_material_range_validation(self):
        with pytest.raises(ValueError):
            Material("bad", [1.5, 0, 0, 0], [0.5] * 4)
        with pytest.raises(ValueError):
            Material("bad", [0.5] * 4, [0.1, 0.1, 0.1])


class TestIntersect:
    def test_center_of_box(self):
        model = make_box_scene(size=10.0)
        hit = model.intersect([0.0, 0, 0], [1.0, 0, 0])
        assert hit.distance == pytest.approx(5.0, abs=1e-6)
        assert abs(np.linalg.norm(hit.normal) - 1.0) < 1e-6
        assert hit.normal @ np.array([1.0, 0, 0]) < 0  # faces the ray

    def test_origin_on_face_outward(self):
        model = make_box_scene(size=10.0)
        hit = model.intersect([5.0, 0, 0], [1.0, 0, 0])
        assert hit is None
        # brute force agrees
        t, tri = model.intersect_brute([5.0, 0, 0], [1.0, 0, 0])
        assert tri == -1

    def test_non_unit_direction_rejected(self):
        model = make_box_scene()
        with pytest.raises(ValueError):
            model.intersect([0.0, 0, 0], [2.0, 0, 0])

    def test_max_distance(self):
        model = make_box_scene(size=10.0)
        assert model.intersect([0.0, 0, 0], [1.0, 0, 0], max_distance=4.0) is None

    def test_batch_matches_scalar(self):
        model = make_box_scene(size=10.0)
        rng = np.random.default_rng(0)
        dirs = rng.normal(size=(100, 3))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
        origins = rng.uniform(-4, 4, size=(100, 3))
        t, tri, hit = model.intersect_batch(origins, dirs)
        assert hit.all()  # closed box
        for i in range(100):
            h = model.intersect(origins[i], dirs[i])
            assert h.distance == pytest.approx(t[i], abs=1e-9)
            assert h.triangle == tri[i]


class TestBVHAgainstBruteForce:
    def test_random_soup(self):
        rng = np.random.default_rng(7)
        n_tris = 700
        centers = rng.uniform(-5, 5, size=(n_tris, 3))
        a = centers + rng.normal(scale=0.4, size=(n_tris, 3))
        b = centers + rng.normal(scale=0.4, size=(n_tris, 3))
        c = centers + rng.normal(scale=0.4, size=(n_tris, 3))
        mat = Material("m", [0.1] * 4, [0.5] * 4)
        from echoforge.scene import Listener, Source
        model = SceneModel(a, b - a, c - a, np.zeros(n_tris, dtype=np.int64),
                           [mat],
                           [Source(id="s", position=np.zeros(3))],
                           Listener(position=np.zeros(3)))
        n_rays = 10_000
        origins = rng.uniform(-6, 6, size=(n_rays, 3))
        dirs = rng.normal(size=(n_rays, 3))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
        mismatches = 0
        for i in range(n_rays):
            t_b, tri_b = model.intersect_brute(origins[i], dirs[i])
            t_v, tri_v = model.bvh.intersect(origins[i], dirs[i], 1e-4, np.inf)
            if tri_b != tri_v or (tri_b >= 0 and abs(t_b - t_v) > 1e-9):
                mismatches += 1
        assert mismatches == 0


class TestTrajectory:
    def test_interpolation(self, tmp_path):
        csv = tmp_path / "traj.csv"
        csv.write_text("0.0,0,0,0,1,0,0,0\n2.0,4,0,0,0,0,0,1\n")
        traj = Trajectory.from_csv(csv)
        pos, quat = traj.pose(1.0)
        assert np.allclose(pos, [2, 0, 0])
        assert np.linalg.norm(quat) == pytest.approx(1.0, abs=1e-12)

    def test_clamping(self, tmp_path):
        csv = tmp_path / "traj.csv"
        csv.write_text("1.0,1,2,3,1,0,0,0\n2.0,4,5,6,1,0,0,0\n")
        traj = Trajectory.from_csv(csv)
        assert np.allclose(traj.pose(0.0)[0], [1, 2, 3])
        assert np.allclose(traj.pose(9.0)[0], [4, 5, 6])

    def test_quat_to_matrix_identity(self):
        assert np.allclose(quat_to_matrix([1, 0, 0, 0]), np.eye(3))

    def test_quat_to_matrix_z90(self):
        s = np.sqrt(0.5)
        R = quat_to_matrix([s, 0, 0, s])
        assert np.allclose(R @ [1, 0, 0], [0, 1, 0], atol=1e-12)
