"""Windowed transform tests: definition, inversion, and the theorem
identities (linearity, Plancherel, parity, shift, orthogonality)."""

import math

import numpy as np
import pytest

from biqwlct.analysis import energy, make_gaussian, make_haar_window, \
    make_random_field, scalar_inner
from biqwlct.errors import GridMismatch, ZeroWindow
from biqwlct.grids import Field2D, GridSpec, dual_grid_2d
from biqwlct.hypercomplex import Biquaternion, RootOfMinusOne, bq_conjugate, \
    bq_multiply
from biqwlct.kernels import LctParam
from biqwlct.transforms import TransformConfig, biqwlct, biqwlct_inverse, \
    rbiqlct_direct, rbiqlct_fast, rbiqlct_inverse, shift_field_values, window_norm_sq

MU = RootOfMinusOne(Biquaternion.unit("i"))
M_SHEAR = LctParam(1, 1, 0, 1)
M_GEN = LctParam(2, 1, 1, 1)


def _grid(n=16, delta=0.5):
    return GridSpec.centered(n, n, delta, delta)


def _rel(a, b):
    return float(np.linalg.norm((a - b).ravel()) / np.linalg.norm(b.ravel()))


class TestDefinition:
    def test_zero_signal(self):
        g = _grid(8)
        w = biqwlct(Field2D.zeros(g), make_haar_window(g),
                    TransformConfig(M_SHEAR, M_GEN, MU))
        assert np.max(np.abs(w.values)) == 0.0

    def test_constant_window_drops_out(self):
        # with the all-ones window (wrapped shifts) every nu slice equals
        # the plain transform
        g = _grid(8)
        ones = Field2D.from_scalar(g, np.ones((8, 8)))
        f = make_random_field(g, 31)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU)
        w = biqwlct(f, ones, cfg, periodic=True)
        plain = rbiqlct_direct(f, cfg, w.omega_grid)
        for a in (0, 3, 7):
            for b in (1, 5):
                np.testing.assert_allclose(w.values[:, :, a, b], plain.values,
                                           atol=1e-13)

    def test_each_slice_is_transform_of_product(self):
        g = _grid(8)
        f = make_random_field(g, 32)
        win = make_haar_window(g)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU)
        w = biqwlct(f, win, cfg)
        a, b = 5, 6
        p1 = int(round(w.nu_grid.coords(1)[a] / g.delta1))
        p2 = int(round(w.nu_grid.coords(2)[b] / g.delta2))
        shifted = shift_field_values(bq_conjugate(win.values, "biquaternion"),
                                     p1, p2, periodic=False)
        product = Field2D(g, bq_multiply(f.values, shifted))
        plain = rbiqlct_direct(product, cfg, w.omega_grid)
        np.testing.assert_allclose(w.values[:, :, a, b], plain.values, atol=1e-14)

    def test_zero_window_rejected(self):
        g = _grid(8)
        with pytest.raises(ZeroWindow):
            biqwlct(make_random_field(g, 33), Field2D.zeros(g),
                    TransformConfig(M_SHEAR, M_GEN, MU))

    def test_off_lattice_nu_rejected(self):
        g = _grid(8)
        nu = GridSpec(2, 2, 0.3 * g.delta1, 0.0, g.delta1, g.delta2)
        with pytest.raises(GridMismatch):
            biqwlct(make_random_field(g, 34), make_haar_window(g),
                    TransformConfig(M_SHEAR, M_GEN, MU), nu_grid=nu)

    def test_fast_path_needs_dual_omega_grid(self):
        g = _grid(8)
        bad = GridSpec.centered(8, 8, 1.0, 1.0)
        with pytest.raises(GridMismatch):
            biqwlct(make_random_field(g, 35), make_haar_window(g),
                    TransformConfig(M_SHEAR, M_GEN, MU, path="fast"), omega_grid=bad)

    def test_window_must_share_grid(self):
        g = _grid(8)
        other = _grid(8, 0.25)
        with pytest.raises(GridMismatch):
            biqwlct(make_random_field(g, 36), make_haar_window(other),
                    TransformConfig(M_SHEAR, M_GEN, MU))

    def test_paths_agree(self):
        g = _grid(8)
        f = make_random_field(g, 37)
        win = make_haar_window(g)
        wd = biqwlct(f, win, TransformConfig(M_SHEAR, M_GEN, MU, path="direct"))
        wf = biqwlct(f, win, TransformConfig(M_SHEAR, M_GEN, MU, path="fast"))
        assert np.max(np.abs(wd.values - wf.values)) < 1e-10


class TestInversion:
    def test_zero(self):
        g = _grid(8)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU)
        win = make_haar_window(g)
        w = biqwlct(Field2D.zeros(g), win, cfg)
        out = biqwlct_inverse(w, win, cfg, g)
        assert np.max(np.abs(out.values)) == 0.0

    def test_round_trip_periodized(self):
        g = _grid(16)
        f = make_gaussian(1.0 + 0.5j, 1.0, 0.75, g)
        win = make_haar_window(g)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU, path="fast")
        w = biqwlct(f, win, cfg, periodic=True)
        back = biqwlct_inverse(w, win, cfg, g, periodic=True)
        assert _rel(back.values, f.values) < 1e-9

    def test_round_trip_truncated(self):
        g = _grid(16)
        f = make_gaussian(1.0, 1.0, 1.0, g)
        win = make_haar_window(g)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU, path="fast")
        w = biqwlct(f, win, cfg, periodic=False)
        back = biqwlct_inverse(w, win, cfg, g, periodic=False)
        assert _rel(back.values, f.values) < 1e-2

    def test_round_trip_random_window(self):
        g = _grid(12)
        f = make_random_field(g, 38)
        win = Field2D(g, make_random_field(g, 39).values.real + 0j)  # real quaternion
        cfg = TransformConfig(M_GEN, M_SHEAR, MU, path="fast")
        w = biqwlct(f, win, cfg, periodic=True)
        back = biqwlct_inverse(w, win, cfg, g, periodic=True)
        assert _rel(back.values, f.values) < 1e-11

    def test_window_scaling_invariance(self):
        g = _grid(12)
        f = make_gaussian(1.0, 1.0, 1.0, g)
        win = make_haar_window(g)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU, path="fast")
        base = biqwlct_inverse(biqwlct(f, win, cfg, periodic=True), win, cfg, g,
                               periodic=True)
        doubled_win = Field2D(g, 2.0 * win.values)
        doubled = biqwlct_inverse(biqwlct(f, doubled_win, cfg, periodic=True),
                                  doubled_win, cfg, g, periodic=True)
        assert _rel(doubled.values, base.values) < 1e-12

    def test_zero_window_rejected(self):
        g = _grid(8)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU)
        win = make_haar_window(g)
        w = biqwlct(make_random_field(g, 40), win, cfg)
        with pytest.raises(ZeroWindow):
            biqwlct_inverse(w, Field2D.zeros(g), cfg, g)


class TestThreading:
    def test_thread_env_keeps_results_bit_identical(self, monkeypatch):
        g = _grid(8)
        f = make_random_field(g, 48)
        win = make_haar_window(g)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU)
        sequential = biqwlct(f, win, cfg)
        monkeypatch.setenv("BIQWLCT_THREADS", "4")
        threaded = biqwlct(f, win, cfg)
        np.testing.assert_array_equal(threaded.values, sequential.values)

    def test_garbage_env_value_ignored(self, monkeypatch):
        g = _grid(8)
        f = make_random_field(g, 49)
        win = make_haar_window(g)
        monkeypatch.setenv("BIQWLCT_THREADS", "many")
        biqwlct(f, win, TransformConfig(M_SHEAR, M_GEN, MU))


class TestLinearity:
    def test_real_combination(self):
        g = _grid(8)
        f1 = make_random_field(g, 41)
        f2 = make_random_field(g, 42)
        win = make_haar_window(g)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU)
        mixed = Field2D(g, 2.0 * f1.values - 3.0 * f2.values)
        w = biqwlct(mixed, win, cfg)
        w1 = biqwlct(f1, win, cfg)
        w2 = biqwlct(f2, win, cfg)
        assert np.max(np.abs(w.values - 2.0 * w1.values + 3.0 * w2.values)) < 1e-12


class TestPlancherel:
    def setup_method(self):
        self.g = _grid(16)
        self.f = make_gaussian(1.0 + 0.25j, 1.0, 0.75, self.g)
        self.h = make_gaussian(0.5 - 1.0j, 0.75, 1.0, self.g)
        self.win = make_haar_window(self.g)
        self.cfg = TransformConfig(M_SHEAR, M_GEN, MU, path="fast")

    def _lhs(self, wf, wg):
        prod = bq_multiply(wf.values, bq_conjugate(wg.values, "biquaternion"))
        return float(np.sum(prod[..., 0].real) * wf.cell_weight) \
            / window_norm_sq(self.win)

    def test_inner_product_preserved_periodized(self):
        wf = biqwlct(self.f, self.win, self.cfg, periodic=True)
        wg = biqwlct(self.h, self.win, self.cfg, periodic=True)
        want = scalar_inner(self.f, self.h)
        scale = math.sqrt(energy(self.f) * energy(self.h))
        assert abs(self._lhs(wf, wg) - want) / scale < 1e-9

    def test_energy_identity(self):
        wf = biqwlct(self.f, self.win, self.cfg, periodic=True)
        got = self._lhs(wf, wf)
        assert got == pytest.approx(energy(self.f), rel=1e-9)

    def test_truncated_within_tolerance_class(self):
        wf = biqwlct(self.f, self.win, self.cfg, periodic=False)
        wg = biqwlct(self.h, self.win, self.cfg, periodic=False)
        want = scalar_inner(self.f, self.h)
        scale = math.sqrt(energy(self.f) * energy(self.h))
        assert abs(self._lhs(wf, wg) - want) / scale < 1e-2


class TestParity:
    def test_reflected_pair(self):
        n = 15  # odd so the lattice is closed under negation
        g = GridSpec.centered(n, n, 0.5, 0.5)
        f = make_random_field(g, 43)
        win = Field2D(g, make_gaussian(1.0, 1.0, 1.0, g).values
                      + 0.2 * make_random_field(g, 44).values)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU, path="fast")
        w = biqwlct(f, win, cfg)
        pf = Field2D(g, f.values[::-1, ::-1])
        pw = Field2D(g, win.values[::-1, ::-1])
        wp = biqwlct(pf, pw, cfg)
        assert np.max(np.abs(wp.values - w.values[::-1, ::-1, ::-1, ::-1])) < 1e-11


class TestShift:
    def test_lattice_shift_matches_literal_phases(self):
        n = 16
        sd = math.sqrt(2 * math.pi / n)  # self-dual spacing
        g = GridSpec.centered(n, n, sd, sd)
        m1 = LctParam(2, 1, 1, 1)
        m2 = LctParam(1, 1, 1, 2)
        cfg = TransformConfig(m1, m2, MU, path="fast")
        p1, p2 = 2, 1
        margin = max(p1, p2) + 1
        f = make_random_field(g, 45)
        f.values[:margin] = 0
        f.values[-margin:] = 0
        f.values[:, :margin] = 0
        f.values[:, -margin:] = 0
        win = make_gaussian(1.0, 0.5, 0.5, g)
        shifted = Field2D(g, shift_field_values(f.values, p1, p2, periodic=False))
        w = biqwlct(f, win, cfg)
        ws = biqwlct(shifted, win, cfg)
        og = w.omega_grid
        r1, r2 = p1 * sd, p2 * sd
        s1 = int(round(m1.a * r1 / og.delta1))
        s2 = int(round(m2.a * r2 / og.delta2))
        phase = (m1.c * r1 * og.coords(1)[s1:, None]
                 + m2.c * r2 * og.coords(2)[None, s2:]
                 - (m1.a * m1.c * r1 ** 2 + m2.a * m2.c * r2 ** 2) / 2.0)
        base = w.values[:og.n1 - s1, :og.n2 - s2, :n - p1, :n - p2]
        c = np.cos(phase)[:, :, None, None, None]
        s = np.sin(phase)[:, :, None, None, None]
        expected = base * c + bq_multiply(base, MU.coeffs) * s
        got = ws.values[s1:, s2:, p1:, p2:]
        scale = float(np.max(np.abs(w.values)))
        assert float(np.max(np.abs(got - expected))) / scale < 1e-9


class TestOrthogonality:
    def test_shared_window_periodized(self):
        g = _grid(16)
        f = make_gaussian(1.0 + 0.25j, 1.0, 0.75, g)
        h = make_gaussian(0.5 - 1.0j, 0.75, 1.0, g)
        win = make_haar_window(g)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU, path="fast")
        wf = biqwlct(f, win, cfg, periodic=True)
        wg = biqwlct(h, win, cfg, periodic=True)
        prod = bq_multiply(wf.values, bq_conjugate(wg.values, "biquaternion"))
        quad = float(np.sum(prod[..., 0].real) * wf.cell_weight)
        want = window_norm_sq(win) * scalar_inner(f, h)
        scale = math.sqrt(energy(f) * energy(h))
        assert abs(quad - want) / scale < 1e-9

    def test_truncated_matches_lattice_weight_exactly(self):
        g = _grid(12)
        n = g.n1
        f = make_random_field(g, 46)
        h = make_random_field(g, 47)
        win = make_haar_window(g)
        cfg = TransformConfig(M_SHEAR, M_GEN, MU, path="fast")
        wf = biqwlct(f, win, cfg, periodic=False)
        wg = biqwlct(h, win, cfg, periodic=False)
        prod = bq_multiply(wf.values, bq_conjugate(wg.values, "biquaternion"))
        quad = float(np.sum(prod[..., 0].real) * wf.cell_weight)
        ups = np.zeros((n, n))
        for a in range(n):
            for b in range(n):
                sh = shift_field_values(win.values, a - n // 2, b - n // 2, False)
                ups += np.sum(np.abs(sh) ** 2, axis=-1) * g.cell_area
        inner = bq_multiply(f.values, bq_conjugate(h.values, "biquaternion"))[..., 0].real
        want = float(np.sum(ups * inner) * g.cell_area)
        scale = math.sqrt(energy(f) * energy(h))
        assert abs(quad - want) / scale < 1e-12
