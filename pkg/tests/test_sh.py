import numpy as np
import pytest
from scipy.special import sph_harm_y

from echoforge.sh import (
    MAX_ORDER,
    SHVector,
    directional_loudness_matrix,
    dominant_direction,
    eval_sh,
    eval_sh_batch,
    n_coeffs,
    random_scatter_rotation,
    sh_rotation,
    sh_transform,
)
from echoforge.tdesigns import AVAILABLE_DEGREES, design_for_order, tdesign


def random_unit(rng, n=1):
    v = rng.normal(size=(n, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def random_rotation(rng):
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


class TestEvalSH:
    def test_constant_term(self):
        rng = np.random.default_rng(0)
        for d in random_unit(rng, 20):
            assert eval_sh(d, 0)[0] == pytest.approx(0.2820948, abs=1e-7)

    def test_axis_z_order1(self):
        c = eval_sh((0.0, 0.0, 1.0), 1)
        assert c[2] == pytest.approx(np.sqrt(3 / (4 * np.pi)), abs=1e-12)
        assert abs(c[1]) < 1e-15 and abs(c[3]) < 1e-15

    def test_addition_theorem(self):
        rng = np.random.default_rng(1)
        for order in range(MAX_ORDER + 1):
            expected = sum((2 * l + 1) / (4 * np.pi)
                           for l in range(order + 1))
            for d in random_unit(rng, 50):
                total = np.sum(eval_sh(d, order) ** 2)
                assert total == pytest.approx(expected, rel=1e-12)

    def test_near_unit_normalized(self):
        d = np.array([0.0, 0.0, 1.0 + 5e-4])
        c = eval_sh(d, 1)
        assert c[2] == pytest.approx(np.sqrt(3 / (4 * np.pi)), abs=1e-9)

    def test_non_unit_rejected(self):
        with pytest.raises(ValueError):
            eval_sh((0.0, 0.0, 1.5), 1)

    def test_order_too_high_rejected(self):
        with pytest.raises(ValueError):
            eval_sh((0.0, 0.0, 1.0), MAX_ORDER + 1)

    def test_matches_reference_basis_up_to_signs(self):
        # cross-check magnitudes against scipy's spherical harmonics
        rng = np.random.default_rng(2)
        dirs = random_unit(rng, 10)
        theta = np.arccos(dirs[:, 2])
        phi = np.arctan2(dirs[:, 1], dirs[:, 0])
        ours = eval_sh_batch(dirs, MAX_ORDER)
        for l in range(MAX_ORDER + 1):
            for m in range(-l, l + 1):
                Y = sph_harm_y(l, abs(m), theta, phi)
                if m == 0:
                    ref = Y.real
                elif m > 0:
                    ref = np.sqrt(2) * Y.real
                else:
                    ref = np.sqrt(2) * Y.imag
                got = ours[:, l * l + l + m]
                assert np.allclose(np.abs(got), np.abs(ref), atol=1e-12)


class TestRotation:
    def test_identity(self):
        J = sh_rotation(np.eye(3), 3).matrix
        assert np.abs(J - np.eye(16)).max() < 1e-12

    def test_90deg_z_order1(self):
        a = np.pi / 2
        R = np.array([[np.cos(a), -np.sin(a), 0],
                      [np.sin(a), np.cos(a), 0],
                      [0, 0, 1]])
        got = sh_rotation(R, 1).apply(eval_sh((1.0, 0.0, 0.0), 1))
        want = eval_sh(R @ np.array([1.0, 0.0, 0.0]), 1)
        assert np.abs(got - want).max() < 1e-12

    def test_rotation_consistency_property(self):
        # J(R) Y(d) == Y(R d) across random rotations, directions, orders
        rng = np.random.default_rng(3)
        worst = 0.0
        for _ in range(300):
            R = random_rotation(rng)
            d = random_unit(rng)[0]
            order = int(rng.integers(0, MAX_ORDER + 1))
            err = np.abs(sh_rotation(R, order).apply(eval_sh(d, order))
                         - eval_sh(R @ d, order)).max()
            worst = max(worst, err)
        assert worst < 1e-9

    def test_orthogonal_and_norm_preserving(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            J = sh_rotation(random_rotation(rng), 4).matrix
            assert np.abs(J @ J.T - np.eye(25)).max() < 1e-9
            v = rng.normal(size=25)
            assert np.linalg.norm(J @ v) == pytest.approx(
                np.linalg.norm(v), rel=1e-12)

    def test_block_structure(self):
        rng = np.random.default_rng(5)
        J = sh_rotation(random_rotation(rng), 4).matrix
        for l in range(5):
            lo, hi = l * l, (l + 1) ** 2
            off = J.copy()
            off[lo:hi, lo:hi] = 0.0
            assert np.abs(off[lo:hi, :]).max() == 0.0 or \
                np.abs(off[lo:hi, :]).max() < 1e-15

    def test_composition(self):
        rng = np.random.default_rng(6)
        for _ in range(20):
            R1, R2 = random_rotation(rng), random_rotation(rng)
            J12 = sh_rotation(R1 @ R2, 4).matrix
            J1J2 = sh_rotation(R1, 4).matrix @ sh_rotation(R2, 4).matrix
            assert np.abs(J12 - J1J2).max() < 1e-8

    def test_non_orthogonal_rejected(self):
        with pytest.raises(ValueError):
            sh_rotation(np.eye(3) * 2.0, 1)
        with pytest.raises(ValueError):
            sh_rotation(np.diag([1.0, 1.0, -1.0]), 1)  # reflection


class TestDominantDirection:
    def test_roundtrip_z(self):
        d = dominant_direction(eval_sh((0.0, 0.0, 1.0), 1))
        assert np.abs(d - [0, 0, 1]).max() < 1e-6

    def test_scale_invariant_roundtrip(self):
        got = dominant_direction(7.0 * eval_sh((1.0, 0.0, 0.0), 3))
        assert np.abs(got - [1, 0, 0]).max() < 1e-6

    def test_roundtrip_random(self):
        rng = np.random.default_rng(7)
        for d in random_unit(rng, 200):
            got = dominant_direction(SHVector.from_direction(d, 1))
            assert np.abs(got - d).max() < 1e-6

    def test_isotropic_signalled(self):
        assert dominant_direction(np.array([1.0, 0.0, 0.0, 0.0])) is None


class TestTDesigns:
    def test_unit_norms(self):
        for deg in AVAILABLE_DEGREES:
            t = tdesign(deg)
            assert np.abs(np.linalg.norm(t.directions, axis=1) - 1).max() < 1e-12

    def test_quadrature_exactness(self):
        # mean of every harmonic of degree 1..t vanishes
        for deg in AVAILABLE_DEGREES:
            t = tdesign(deg)
            theta = np.arccos(np.clip(t.directions[:, 2], -1, 1))
            phi = np.arctan2(t.directions[:, 1], t.directions[:, 0])
            for l in range(1, deg + 1):
                for m in range(0, l + 1):
                    Y = sph_harm_y(l, m, theta, phi)
                    assert abs(Y.real.mean()) < 1e-9
                    assert abs(Y.imag.mean()) < 1e-9

    def test_order_selection(self):
        assert design_for_order(1).degree == 3
        assert design_for_order(2).degree == 5
        assert design_for_order(3).degree == 9
        assert design_for_order(4).degree == 9


class TestSHTransform:
    def test_constant_function(self):
        for deg in AVAILABLE_DEGREES:
            t = tdesign(deg)
            order = min(MAX_ORDER, (deg - 1) // 2)
            c = sh_transform(t.directions, np.ones(len(t)), order)
            assert c[0] == pytest.approx(2 * np.sqrt(np.pi), abs=1e-9)
            assert np.abs(c[1:]).max() < 1e-9

    def test_band_limited_roundtrip(self):
        t = tdesign(3)
        vals = eval_sh_batch(t.directions, 1)[:, 2]  # samples of one harmonic
        c = sh_transform(t.directions, vals, 1)
        want = np.zeros(4)
        want[2] = 1.0
        assert np.abs(c - want).max() < 1e-9

    def test_random_bandlimited_recovery(self):
        rng = np.random.default_rng(8)
        for order in range(MAX_ORDER + 1):
            t = design_for_order(order)
            coeffs = rng.normal(size=n_coeffs(order))
            vals = eval_sh_batch(t.directions, order) @ coeffs
            got = sh_transform(t.directions, vals, order)
            assert np.abs(got - coeffs).max() < 1e-9

    def test_zero_samples(self):
        t = tdesign(3)
        c = sh_transform(t.directions, np.zeros(len(t)), 1)
        assert np.abs(c).max() == 0.0

    def test_too_few_samples_rejected(self):
        with pytest.raises(ValueError):
            sh_transform(np.eye(3), np.ones(3), 1)


class TestDirectionalLoudness:
    def test_isotropic_gives_scaled_identity(self):
        # uniform distribution with directional gain g everywhere
        for g in (1.0, 0.25, 3.0):
            dist = np.zeros(4)
            dist[0] = g / eval_sh((0, 0, 1.0), 0)[0]  # f(d) == g
            D = directional_loudness_matrix(dist, 1)
            assert np.abs(D - g * np.eye(4)).max() < 1e-9

    def test_zero_distribution(self):
        D = directional_loudness_matrix(np.zeros(4), 2)
        assert np.abs(D).max() == 0.0

    def test_hemisphere_weighting(self):
        # distribution favouring +z: encodings from +z keep more energy
        dist = sh_transform(design_for_order(1).directions,
                            np.maximum(0.0, design_for_order(1).directions[:, 2]),
                            1)
        D = directional_loudness_matrix(dist, 1)
        up = D @ eval_sh((0, 0, 1.0), 1)
        down = D @ eval_sh((0, 0, -1.0), 1)
        assert up[0] > down[0]

    def test_gain_tracks_distribution(self):
        # order-limited: projected gain correlates with the distribution
        # value at the encoding direction and brackets its range
        dist = sh_transform(design_for_order(1).directions,
                            1.0 + 0.5 * design_for_order(1).directions[:, 0],
                            1)
        D = directional_loudness_matrix(dist, 1)

        def projected_gain(d):
            e = eval_sh(d, 1)
            return (e @ D @ e) / (e @ e)

        hi = projected_gain(np.array([1.0, 0, 0]))
        mid = projected_gain(np.array([0.0, 0, 1.0]))
        lo = projected_gain(np.array([-1.0, 0, 0]))
        assert hi > mid > lo
        assert mid == pytest.approx(1.0, rel=0.05)
        assert 1.0 < hi <= 1.5 + 1e-9
        assert 0.5 - 1e-9 <= lo < 1.0


class TestScatterRotation:
    def test_deterministic_and_orthogonal(self):
        a = random_scatter_rotation(np.random.default_rng(42))
        b = random_scatter_rotation(np.random.default_rng(42))
        assert np.array_equal(a, b)
        assert np.abs(a @ a.T - np.eye(3)).max() < 1e-12

    def test_distinct_seeds_differ(self):
        a = random_scatter_rotation(np.random.default_rng(1))
        b = random_scatter_rotation(np.random.default_rng(2))
        assert np.abs(a - b).max() > 1e-6

    def test_angle_range(self):
        # draw many matrices through a recording generator shim
        class Recorder:
            def __init__(self, rng):
                self.rng = rng
                self.draws = []

            def uniform(self, lo, hi, size):
                out = self.rng.uniform(lo, hi, size)
                self.draws.append((lo, hi, out.copy()))
                return out

        rec = Recorder(np.random.default_rng(10))
        for _ in range(10_000):
            random_scatter_rotation(rec)
        for lo, hi, vals in rec.draws:
            assert lo == pytest.approx(np.pi / 2)
            assert hi == pytest.approx(3 * np.pi / 2)
            assert np.all(vals >= lo) and np.all(vals <= hi)
