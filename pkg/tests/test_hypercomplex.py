"""Algebra tests: Hamilton rules, conjugations, norms, exp, and the
simplex/perplex split, cross-checked against independent oracles."""

import math

import numpy as np
import pytest

from biqwlct.errors import NotARoot, NotOrthogonal
from biqwlct.hypercomplex import (
    Biquaternion,
    RootOfMinusOne,
    bq_conjugate,
    bq_exp,
    bq_multiply,
    bq_norm_sq,
    is_root_of_minus_one,
    split_simplex_perplex,
    vector_inner,
    vector_wedge,
)

ONE = Biquaternion.unit("1")
I_, J_, K_ = (Biquaternion.unit(u) for u in "ijk")
CI = Biquaternion.unit("I")

# Hamilton structure constants, written out so the matrix oracle below is
# independent of the multiply implementation: e_a e_b = sign * e_idx.
HAM = {
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
    (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
    (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
}


def coords8(h: np.ndarray) -> np.ndarray:
    """Real 8-vector [re(h0..h3), im(h0..h3)] of a coefficient array."""
    return np.concatenate([h.real, h.imag])


def left_mult_matrix(h: np.ndarray) -> np.ndarray:
    """8x8 real matrix of g -> h g, built from the structure constants.

    Basis order: e0..e3 = 1, i, j, k and e4..e7 = I * (1, i, j, k) with
    I commuting and I^2 = -1.
    """
    m = np.zeros((8, 8))
    hc = coords8(h)
    for alpha in range(8):
        pa, a = divmod(alpha, 4)
        for beta in range(8):
            pb, b = divmod(beta, 4)
            idx, sign = HAM[(a, b)]
            p = pa + pb
            sign *= -1 if p >= 2 else 1
            target = idx + 4 * (p % 2)
            m[target, beta] += sign * hc[alpha]
    return m


def rand_bq(rng, n=1):
    return rng.standard_normal((n, 4)) + 1j * rng.standard_normal((n, 4))


class TestMultiply:
    def test_hamilton_products(self):
        assert (I_ * J_).allclose(K_)
        assert (J_ * I_).allclose(-K_)
        assert (J_ * K_).allclose(I_)
        assert (K_ * J_).allclose(-I_)
        assert (K_ * I_).allclose(J_)
        assert (I_ * K_).allclose(-J_)
        for u in (I_, J_, K_):
            assert (u * u).allclose(-ONE)

    def test_identity_element(self):
        rng = np.random.default_rng(1)
        h = Biquaternion.from_coeffs(rand_bq(rng)[0])
        assert (ONE * h).allclose(h)
        assert (h * ONE).allclose(h)

    def test_commuting_unit(self):
        for u in (I_, J_, K_):
            assert (CI * u).allclose(u * CI)

    def test_zero_divisor_example(self):
        z = I_ + CI * J_  # i + I j squares to zero
        sq = z * z
        assert sq.allclose(Biquaternion())

    def test_against_matrix_representation(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            h = rand_bq(rng)[0]
            g = rand_bq(rng)[0]
            want = left_mult_matrix(h) @ coords8(g)
            got = coords8(bq_multiply(h, g))
            np.testing.assert_allclose(got, want, atol=1e-13)

    def test_associative(self):
        rng = np.random.default_rng(3)
        h, g, l = (rand_bq(rng, 500) for _ in range(3))
        lhs = bq_multiply(bq_multiply(h, g), l)
        rhs = bq_multiply(h, bq_multiply(g, l))
        scale = np.maximum(np.max(np.abs(rhs), axis=-1), 1.0)
        assert np.max(np.max(np.abs(lhs - rhs), axis=-1) / scale) < 1e-12

    def test_scalar_subalgebra(self):
        # a value with zero vector part behaves as its complex scalar
        a, b = 1.5 - 0.5j, -2.0 + 1.0j
        ha, hb = Biquaternion(a), Biquaternion(b)
        assert (ha * hb).allclose(Biquaternion(a * b))
        rng = np.random.default_rng(4)
        h = Biquaternion.from_coeffs(rand_bq(rng)[0])
        assert (ha * h).allclose(Biquaternion.from_coeffs(a * h.coeffs))


class TestConjugations:
    def test_quaternion_kind(self):
        assert I_.conjugate("quaternion").allclose(-I_)
        h = Biquaternion(2, 3, -1, 0.5)
        assert h.conjugate("quaternion").allclose(Biquaternion(2, -3, 1, -0.5))

    def test_complex_kind(self):
        assert CI.conjugate("complex").allclose(-CI)
        h = Biquaternion(1 + 2j, 3j, 0, 1)
        assert h.conjugate("complex").allclose(Biquaternion(1 - 2j, -3j, 0, 1))

    def test_biquaternion_kind_composes(self):
        rng = np.random.default_rng(5)
        h = rand_bq(rng, 100)
        composed = bq_conjugate(bq_conjugate(h, "quaternion"), "complex")
        np.testing.assert_array_equal(bq_conjugate(h, "biquaternion"), composed)

    def test_involutions(self):
        rng = np.random.default_rng(6)
        h = rand_bq(rng, 100)
        for kind in ("quaternion", "complex", "biquaternion"):
            np.testing.assert_array_equal(bq_conjugate(bq_conjugate(h, kind), kind), h)

    def test_product_reversal(self):
        # bar(g h) = bar(h) bar(g) on random pairs
        rng = np.random.default_rng(7)
        g, h = rand_bq(rng, 500), rand_bq(rng, 500)
        lhs = bq_conjugate(bq_multiply(g, h), "biquaternion")
        rhs = bq_multiply(bq_conjugate(h, "biquaternion"), bq_conjugate(g, "biquaternion"))
        assert np.max(np.abs(lhs - rhs)) < 1e-12

    def test_complex_conj_needs_no_reversal(self):
        # the basis structure constants are real, so the complex kind
        # distributes without swapping the factors
        rng = np.random.default_rng(8)
        g, h = rand_bq(rng, 500), rand_bq(rng, 500)
        lhs = bq_conjugate(bq_multiply(h, g), "complex")
        same = bq_multiply(bq_conjugate(h, "complex"), bq_conjugate(g, "complex"))
        swapped = bq_multiply(bq_conjugate(g, "complex"), bq_conjugate(h, "complex"))
        assert np.max(np.abs(lhs - same)) < 1e-12
        assert np.max(np.abs(lhs - swapped)) > 1.0  # reversal does not hold

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            bq_conjugate(np.zeros(4, complex), "dual")


class TestNorm:
    def test_zero(self):
        assert Biquaternion().norm_sq() == 0.0

    def test_unit_coefficients(self):
        assert Biquaternion(1, 1, 1, 1).norm_sq() == pytest.approx(4.0)

    def test_complex_coefficients(self):
        # |1+I|^2 + |1-I|^2 = 4, by the componentwise modulus definition
        h = Biquaternion(1 + 1j, 0, 0, 1 - 1j)
        want = abs(1 + 1j) ** 2 + abs(1 - 1j) ** 2
        assert h.norm_sq() == pytest.approx(want)
        assert h.norm_sq() == pytest.approx(4.0)

    def test_real_quaternion_multiplicativity(self):
        rng = np.random.default_rng(9)
        h = rng.standard_normal((500, 4)) + 0j
        g = rng.standard_normal((500, 4)) + 0j
        prod = bq_norm_sq(bq_multiply(h, g))
        sep = bq_norm_sq(h) * bq_norm_sq(g)
        assert np.max(np.abs(prod - sep) / sep) < 1e-12

    def test_not_multiplicative_in_general(self):
        z = (I_ + CI * J_).coeffs  # zero divisor
        assert bq_norm_sq(bq_multiply(z, z)) == pytest.approx(0.0)
        assert bq_norm_sq(z) ** 2 == pytest.approx(4.0)


def test_cyclic_scalar_symmetry():
    rng = np.random.default_rng(10)
    p, q, l = (rng.standard_normal((300, 4)) + 0j for _ in range(3))
    pql = bq_multiply(p, bq_multiply(q, l))[..., 0]
    qlp = bq_multiply(q, bq_multiply(l, p))[..., 0]
    lpq = bq_multiply(l, bq_multiply(p, q))[..., 0]
    assert np.max(np.abs(pql - qlp)) < 1e-13
    assert np.max(np.abs(pql - lpq)) < 1e-13


def series_exp(h, terms=40):
    out = np.zeros_like(h)
    out[..., 0] = 1.0
    term = out.copy()
    for n in range(1, terms + 1):
        term = bq_multiply(term, h) / n
        out = out + term
    return out


class TestExp:
    def test_zero(self):
        assert Biquaternion().exp().allclose(ONE)

    def test_euler_identity_all_roots(self):
        roots = [I_, J_, K_, Biquaternion(0, 0.6, 0.8, 0),
                 Biquaternion(0, math.cosh(0.3), 1j * math.sinh(0.3), 0)]
        for mu in roots:
            mu = RootOfMinusOne(mu)
            got = bq_exp(mu.coeffs * math.pi)
            np.testing.assert_allclose(got, (-ONE).coeffs, atol=1e-12)

    def test_plane_rotation(self):
        got = Biquaternion(0, 0.3, 0.4, 0).exp()
        want = math.cos(0.5) * ONE + math.sin(0.5) * Biquaternion(0, 0.6, 0.8, 0)
        assert got.allclose(want)

    def test_matches_series(self):
        rng = np.random.default_rng(11)
        h = rand_bq(rng, 400)
        h *= (rng.uniform(0, 4, 400) / np.sqrt(bq_norm_sq(h)))[:, None]
        assert np.max(np.abs(bq_exp(h) - series_exp(h))) < 1e-12

    def test_small_vector_part_series_path(self):
        rng = np.random.default_rng(12)
        h = rand_bq(rng, 100)
        h[:, 1:] *= 1e-8
        assert np.max(np.abs(bq_exp(h) - series_exp(h))) < 1e-12


class TestRoots:
    def test_basis_units(self):
        assert is_root_of_minus_one(I_.coeffs, 1e-12)

    def test_one_is_not(self):
        assert not is_root_of_minus_one(ONE.coeffs, 1e-12)

    def test_unit_vector_combination(self):
        h = Biquaternion(0, 0.6, 0.8, 0)
        assert is_root_of_minus_one(h.coeffs, 1e-12)

    def test_scalar_commuting_unit_is_root(self):
        assert is_root_of_minus_one(CI.coeffs, 1e-12)

    def test_complex_coefficient_root(self):
        t = 0.7
        h = Biquaternion(0, math.cosh(t), 1j * math.sinh(t), 0)
        assert is_root_of_minus_one(h.coeffs, 1e-12)

    def test_validation_wrapper(self):
        RootOfMinusOne(I_)
        with pytest.raises(NotARoot):
            RootOfMinusOne(Biquaternion(0, 0.5, 0, 0))

    def test_tol_must_be_positive(self):
        with pytest.raises(ValueError):
            is_root_of_minus_one(I_.coeffs, 0.0)


class TestVectorOps:
    def test_inner_orthogonal_basis(self):
        assert complex(vector_inner(I_.coeffs, J_.coeffs)) == 0

    def test_wedge_basis(self):
        np.testing.assert_allclose(vector_wedge(I_.coeffs, J_.coeffs), K_.coeffs)

    def test_product_identity(self):
        rng = np.random.default_rng(13)
        h, g = rand_bq(rng, 1000), rand_bq(rng, 1000)
        expected = np.zeros_like(h)
        expected[..., 0] = h[..., 0] * g[..., 0] - vector_inner(h, g)
        expected[..., 1:] = (h[..., :1] * g[..., 1:] + g[..., :1] * h[..., 1:]
                             + vector_wedge(h, g)[..., 1:])
        assert np.max(np.abs(bq_multiply(h, g) - expected)) < 1e-13


class TestSplit:
    def test_already_simplex(self):
        gamma, nu = RootOfMinusOne(I_), RootOfMinusOne(J_)
        h = ONE + I_
        simp, perp = split_simplex_perplex(h, gamma, nu)
        assert simp.allclose(h)
        assert perp.allclose(Biquaternion())

    def test_already_perplex(self):
        gamma, nu = RootOfMinusOne(I_), RootOfMinusOne(J_)
        simp, perp = split_simplex_perplex(J_, gamma, nu)
        assert simp.allclose(Biquaternion())
        assert perp.allclose(J_)

    def test_span_membership_via_linear_solve(self):
        gamma, nu = RootOfMinusOne(I_), RootOfMinusOne(J_)
        basis = np.stack([ONE.coeffs, gamma.coeffs, nu.coeffs,
                          bq_multiply(gamma.coeffs, nu.coeffs)], axis=1)
        rng = np.random.default_rng(14)
        for _ in range(25):
            h = Biquaternion.from_coeffs(rand_bq(rng)[0])
            simp, perp = split_simplex_perplex(h, gamma, nu)
            assert (simp + perp).allclose(h)
            cs = np.linalg.solve(basis, simp.coeffs)
            cp = np.linalg.solve(basis, perp.coeffs)
            assert np.max(np.abs(cs[2:])) < 1e-12
            assert np.max(np.abs(cp[:2])) < 1e-12

    def test_explicit_example(self):
        gamma, nu = RootOfMinusOne(I_), RootOfMinusOne(J_)
        simp, perp = split_simplex_perplex(I_ + J_ + K_, gamma, nu)
        assert (simp + perp).allclose(I_ + J_ + K_)

    def test_complex_root_pair(self):
        gamma = RootOfMinusOne(I_)
        nu = RootOfMinusOne(Biquaternion(0, 0, math.cosh(0.4), 1j * math.sinh(0.4)))
        rng = np.random.default_rng(15)
        h = Biquaternion.from_coeffs(rand_bq(rng)[0])
        simp, perp = split_simplex_perplex(h, gamma, nu)
        assert (simp + perp).allclose(h)

    def test_requires_orthogonality(self):
        gamma = RootOfMinusOne(I_)
        with pytest.raises(NotOrthogonal):
            split_simplex_perplex(ONE, gamma, gamma)
