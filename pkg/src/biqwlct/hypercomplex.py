"""Biquaternion (complexified quaternion) arithmetic.

A biquaternion is h = h0 + h1 i + h2 j + h3 k with complex coefficients
h0..h3 over a commuting imaginary unit I, and Hamilton's rules for the
quaternion units:

    i^2 = j^2 = k^2 = -1,  ij = -ji = k,  jk = -kj = i,  ki = -ik = j.

The commuting unit I is realised as the imaginary unit of the complex
coefficients (``1j`` in Python), so a biquaternion is stored as a
``complex128`` array of shape ``(..., 4)`` holding the coefficients on
the basis (1, i, j, k).  All array-level functions broadcast, which is
what the field transforms build on; the :class:`Biquaternion` wrapper
gives scalar values operator syntax.

Real quaternions are the special case with all imaginary parts zero;
there is no separate type for them.
"""

from __future__ import annotations

import numpy as np

from .errors import NotARoot, NotOrthogonal

__all__ = [
    "Biquaternion",
    "RootOfMinusOne",
    "bq_multiply",
    "bq_conjugate",
    "bq_norm_sq",
    "bq_exp",
    "bq_exp_unit",
    "bq_zeros",
    "is_root_of_minus_one",
    "split_simplex_perplex",
    "vector_inner",
    "vector_wedge",
]

# Default tolerance for algebraic identity checks (double precision with
# headroom over the 16-term product expansion).
ALGEBRA_TOL = 1e-12
ORTHO_TOL = 1e-10


def bq_zeros(shape=()) -> np.ndarray:
    """Zero biquaternion array of the given leading shape."""
    if isinstance(shape, int):
        shape = (shape,)
    return np.zeros(tuple(shape) + (4,), dtype=np.complex128)


def _as_coeffs(h) -> np.ndarray:
    a = np.asarray(h, dtype=np.complex128)
    if a.shape[-1:] != (4,):
        raise ValueError(f"expected trailing axis of length 4, got shape {a.shape}")
    return a


def bq_multiply(h, g) -> np.ndarray:
    """Product hg from the bilinear expansion over the 16 basis products.

    Complex coefficients commute with the quaternion units, so the real
    Hamilton structure constants apply coefficient-wise.  Broadcasts over
    leading axes.
    """
    h = _as_coeffs(h)
    g = _as_coeffs(g)
    h0, h1, h2, h3 = h[..., 0], h[..., 1], h[..., 2], h[..., 3]
    g0, g1, g2, g3 = g[..., 0], g[..., 1], g[..., 2], g[..., 3]
    out = np.empty(np.broadcast_shapes(h.shape, g.shape), dtype=np.complex128)
    out[..., 0] = h0 * g0 - h1 * g1 - h2 * g2 - h3 * g3
    out[..., 1] = h0 * g1 + h1 * g0 + h2 * g3 - h3 * g2
    out[..., 2] = h0 * g2 - h1 * g3 + h2 * g0 + h3 * g1
    out[..., 3] = h0 * g3 + h1 * g2 - h2 * g1 + h3 * g0
    return out


def bq_conjugate(h, kind: str = "biquaternion") -> np.ndarray:
    """One of the three conjugations.

    ``quaternion``   negates the vector part (h1, h2, h3);
    ``complex``      conjugates each complex coefficient;
    ``biquaternion`` composes both.  Each kind is an involution.
    """
    h = _as_coeffs(h)
    out = h.copy()
    if kind == "quaternion":
        out[..., 1:] = -out[..., 1:]
    elif kind == "complex":
        out = np.conj(out)
    elif kind == "biquaternion":
        out = np.conj(out)
        out[..., 1:] = -out[..., 1:]
    else:
        raise ValueError(f"unknown conjugation kind: {kind!r}")
    return out


def bq_norm_sq(h) -> np.ndarray:
    """|h0|^2 + |h1|^2 + |h2|^2 + |h3|^2 (nonnegative real)."""
    h = _as_coeffs(h)
    return np.sum(h.real ** 2 + h.imag ** 2, axis=-1)


def bq_exp_unit(mu, phase) -> np.ndarray:
    """exp(mu * phase) = cos(phase) + mu sin(phase) for a real phase.

    Valid for any mu with mu^2 = -1.  ``phase`` broadcasts against the
    leading axes of the output; mu is a single biquaternion.
    """
    mu = _as_coeffs(mu)
    phase = np.asarray(phase, dtype=np.float64)
    c = np.cos(phase)
    s = np.sin(phase)
    out = np.zeros(phase.shape + (4,), dtype=np.complex128)
    out[..., 0] = c
    out += mu * s[..., None]
    return out


def bq_exp(h) -> np.ndarray:
    """Exponential sum(h^n / n!) in closed form.

    For h = s + v with scalar part s and vector part v, e^h equals
    e^s (cos(t) + v sin(t)/t) with t the principal complex square root of
    h1^2 + h2^2 + h3^2.  cos and sin(t)/t are even in t, so the branch
    choice does not affect the value.  Near t = 0 the sin(t)/t factor is
    evaluated by its truncated series to avoid cancellation.
    """
    h = _as_coeffs(h)
    s = h[..., 0]
    v = h[..., 1:]
    t = np.sqrt(np.sum(v * v, axis=-1) + 0j)
    small = np.abs(t) < 1e-6
    # sin(t)/t = 1 - t^2/6 + t^4/120 + O(t^6)
    t_safe = np.where(small, 1.0, t)
    sinc = np.where(small, 1.0 - t * t / 6.0 + t ** 4 / 120.0, np.sin(t_safe) / t_safe)
    out = np.zeros_like(h)
    out[..., 0] = np.cos(t)
    out[..., 1:] = v * sinc[..., None]
    return out * np.exp(s)[..., None]


def is_root_of_minus_one(h, tol: float = ALGEBRA_TOL) -> bool:
    """True iff h^2 = -1, i.e. norm_sq(h*h + 1) <= tol^2."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    h = _as_coeffs(h)
    sq = bq_multiply(h, h)
    sq = sq.copy()
    sq[..., 0] += 1.0
    return bool(np.all(bq_norm_sq(sq) <= tol * tol))


def vector_inner(h, g) -> np.ndarray:
    """<V(h), V(g)> = h1 g1 + h2 g2 + h3 g3 (complex bilinear, no conjugation)."""
    h = _as_coeffs(h)
    g = _as_coeffs(g)
    return np.sum(h[..., 1:] * g[..., 1:], axis=-1)


def vector_wedge(h, g) -> np.ndarray:
    """V(h) ^ V(g), the determinant-pattern cross product (middle term negated)."""
    h = _as_coeffs(h)
    g = _as_coeffs(g)
    h1, h2, h3 = h[..., 1], h[..., 2], h[..., 3]
    g1, g2, g3 = g[..., 1], g[..., 2], g[..., 3]
    out = np.zeros(np.broadcast_shapes(h.shape, g.shape), dtype=np.complex128)
    out[..., 1] = h2 * g3 - h3 * g2
    out[..., 2] = -(h1 * g3 - h3 * g1)
    out[..., 3] = h1 * g2 - h2 * g1
    return out


class Biquaternion:
    """Immutable biquaternion scalar.

    Wraps a ``(4,)`` complex coefficient array on the basis (1, i, j, k).
    Arithmetic goes through the array-level functions above, so scalar
    and field code share one implementation of the algebra.
    """

    __slots__ = ("_c",)

    def __init__(self, h0=0, h1=0, h2=0, h3=0):
        c = np.array([h0, h1, h2, h3], dtype=np.complex128)
        c.flags.writeable = False
        object.__setattr__(self, "_c", c)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs) -> "Biquaternion":
        a = np.asarray(coeffs, dtype=np.complex128).reshape(4)
        return cls(a[0], a[1], a[2], a[3])

    @classmethod
    def unit(cls, name: str) -> "Biquaternion":
        """Basis unit by name: '1', 'i', 'j', 'k', or 'I' (commuting unit)."""
        table = {
            "1": (1, 0, 0, 0),
            "i": (0, 1, 0, 0),
            "j": (0, 0, 1, 0),
            "k": (0, 0, 0, 1),
            "I": (1j, 0, 0, 0),
        }
        if name not in table:
            raise ValueError(f"unknown basis unit {name!r}")
        return cls(*table[name])

    # -- views ---------------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def scalar(self) -> complex:
        return complex(self._c[0])

    @property
    def vector(self) -> "Biquaternion":
        return Biquaternion(0, self._c[1], self._c[2], self._c[3])

    def is_real_quaternion(self, tol: float = ALGEBRA_TOL) -> bool:
        return bool(np.max(np.abs(self._c.imag)) <= tol)

    # -- algebra -------------------------------------------------------

    def __add__(self, other):
        return Biquaternion.from_coeffs(self._c + _coerce(other)._c)

    def __radd__(self, other):
        return Biquaternion.from_coeffs(_coerce(other)._c + self._c)

    def __sub__(self, other):
        return Biquaternion.from_coeffs(self._c - _coerce(other)._c)

    def __rsub__(self, other):
        return Biquaternion.from_coeffs(_coerce(other)._c - self._c)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Biquaternion.from_coeffs(self._c * other)
        return Biquaternion.from_coeffs(bq_multiply(self._c, _coerce(other)._c))

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Biquaternion.from_coeffs(other * self._c)
        return Biquaternion.from_coeffs(bq_multiply(_coerce(other)._c, self._c))

    def __neg__(self):
        return Biquaternion.from_coeffs(-self._c)

    def conjugate(self, kind: str = "biquaternion") -> "Biquaternion":
        return Biquaternion.from_coeffs(bq_conjugate(self._c, kind))

    def norm_sq(self) -> float:
        return float(bq_norm_sq(self._c))

    def exp(self) -> "Biquaternion":
        return Biquaternion.from_coeffs(bq_exp(self._c))

    def is_root_of_minus_one(self, tol: float = ALGEBRA_TOL) -> bool:
        return is_root_of_minus_one(self._c, tol)

    # -- comparison / repr ---------------------------------------------

    def allclose(self, other, tol: float = ALGEBRA_TOL) -> bool:
        return bool(np.max(np.abs(self._c - _coerce(other)._c)) <= tol)

    def __eq__(self, other):
        try:
            return bool(np.array_equal(self._c, _coerce(other)._c))
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self._c.tobytes())

    def __repr__(self):
        return f"Biquaternion({self._c[0]!r}, {self._c[1]!r}, {self._c[2]!r}, {self._c[3]!r})"


def _coerce(x) -> Biquaternion:
    if isinstance(x, Biquaternion):
        return x
    if isinstance(x, (int, float, complex)):
        return Biquaternion(x)
    return Biquaternion.from_coeffs(x)


class RootOfMinusOne:
    """A validated biquaternion root of -1, used as a transform kernel axis.

    Construction checks value^2 = -1 componentwise within ``tol``; anything
    else raises :class:`NotARoot`.
    """

    __slots__ = ("value",)

    def __init__(self, value, tol: float = ALGEBRA_TOL):
        v = _coerce(value)
        sq = bq_multiply(v.coeffs, v.coeffs)
        if np.max(np.abs(sq - np.array([-1, 0, 0, 0]))) > tol:
            raise NotARoot(f"value does not square to -1 within {tol}")
        self.value = v

    @property
    def coeffs(self) -> np.ndarray:
        return self.value.coeffs

    def negated(self) -> "RootOfMinusOne":
        return RootOfMinusOne(-self.value)

    def __repr__(self):
        return f"RootOfMinusOne({self.value!r})"


def split_simplex_perplex(h, gamma: RootOfMinusOne, nu: RootOfMinusOne):
    """Split h into components in span{1, gamma} and span{nu, gamma nu}.

    Requires <V(gamma), V(nu)> = 0.  Uses the projector pair
    Simp(h) = (h - gamma h gamma)/2 and Perp(h) = (h + gamma h gamma)/2,
    the eigenspaces of x -> gamma x gamma; Simp + Perp = h by construction.
    """
    g = gamma.coeffs
    n = nu.coeffs
    if abs(complex(vector_inner(g, n))) > ORTHO_TOL:
        raise NotOrthogonal("gamma and nu vector parts are not orthogonal")
    hq = _coerce(h)
    ghg = bq_multiply(g, bq_multiply(hq.coeffs, g))
    simp = Biquaternion.from_coeffs((hq.coeffs - ghg) / 2.0)
    perp = Biquaternion.from_coeffs((hq.coeffs + ghg) / 2.0)
    return simp, perp
