"""Dense real polynomials on [0, 1].

Every function handled by the solver (series terms, homotopy coefficients,
partial sums, forcing terms) is a :class:`Polynomial` with ascending
float64 coefficients.
"""

from __future__ import annotations

import warnings
from typing import Iterable, Sequence

import numpy as np

#: Degree above which construction emits a warning.  Nothing is truncated.
DEGREE_SOFT_CAP = 200


class DegreeWarning(UserWarning):
    pass


def _trim(c: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(c)
    if nz.size == 0:
        return np.zeros(0)
    return c[: nz[-1] + 1]


class Polynomial:
    """Immutable polynomial ``c[0] + c[1] x + ... + c[n] x^n``.

    Trailing zeros are trimmed on construction, so the zero polynomial has
    an empty coefficient array and ``degree == -1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[float] = ()):
        c = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                     dtype=float).ravel()
        if not np.all(np.isfinite(c)):
            raise OverflowError("polynomial coefficients must be finite")
        c = _trim(c).copy()
        c.setflags(write=False)
        if c.size - 1 > DEGREE_SOFT_CAP:
            warnings.warn(f"polynomial degree {c.size - 1} exceeds soft cap "
                          f"{DEGREE_SOFT_CAP}", DegreeWarning, stacklevel=2)
        self._c = c

    @classmethod
    def constant(cls, value: float) -> "Polynomial":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coeff: float = 1.0) -> "Polynomial":
        c = np.zeros(degree + 1)
        c[degree] = coeff
        return cls(c)

    @classmethod
    def line(cls, left: float, right: float) -> "Polynomial":
        """The affine function through (0, left) and (1, right)."""
        return cls([left, right - left])

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        return self._c.size - 1

    def is_zero(self) -> bool:
        return self._c.size == 0

    def coeff(self, i: int) -> float:
        return float(self._c[i]) if 0 <= i < self._c.size else 0.0

    def __call__(self, x):
        return evaluate(self, x)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, scale(_coerce(other), -1.0))

    def __rsub__(self, other):
        return add(_coerce(other), scale(self, -1.0))

    def __neg__(self):
        return scale(self, -1.0)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return mul(self, other)
        return scale(self, float(other))

    __rmul__ = __mul__

    def __truediv__(self, other: float):
        return scale(self, 1.0 / float(other))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Polynomial([1.0]), self
        while n:
            if n & 1:
                result = mul(result, base)
            n >>= 1
            if n:
                base = mul(base, base)
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self._c, other._c)

    def __hash__(self):
        return hash(self._c.tobytes())

    def __repr__(self):
        return f"Polynomial({self._c.tolist()!r})"

    def allclose(self, other: "Polynomial", atol: float = 1e-12) -> bool:
        """Coefficient comparison with ``atol`` scaled by max(1, max |coeff|)."""
        n = max(self._c.size, other._c.size)
        a = np.zeros(n)
        b = np.zeros(n)
        a[: self._c.size] = self._c
        b[: other._c.size] = other._c
        s = max(1.0, float(np.max(np.abs(a), initial=0.0)), float(np.max(np.abs(b), initial=0.0)))
        return bool(np.all(np.abs(a - b) <= atol * s))


ZERO = Polynomial()
ONE = Polynomial([1.0])
X = Polynomial([0.0, 1.0])


def _coerce(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    return Polynomial([float(p)])


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = p.coeffs, q.coeffs
    if a.size < b.size:
        a, b = b, a
    c = a.copy()
    with np.errstate(over="ignore", invalid="ignore"):
        c[: b.size] += b
    return Polynomial(c)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return ZERO
    with np.errstate(over="ignore", invalid="ignore"):
        c = np.convolve(p.coeffs, q.coeffs)
    return Polynomial(c)


def scale(p: Polynomial, c: float) -> Polynomial:
    if not np.isfinite(c):
        raise ValueError(f"scale factor must be finite, got {c!r}")
    with np.errstate(over="ignore", invalid="ignore"):
        return Polynomial(p.coeffs * c)


def evaluate(p: Polynomial, x):
    """Horner evaluation; ``x`` may be a scalar or an array."""
    x = np.asarray(x, dtype=float)
    acc = np.zeros_like(x)
    for c in p.coeffs[::-1]:
        acc = acc * x + c
    return float(acc) if acc.ndim == 0 else acc


def antiderivative(p: Polynomial) -> Polynomial:
    """Formal antiderivative vanishing at 0."""
    if p.is_zero():
        return ZERO
    c = p.coeffs / np.arange(1, p.coeffs.size + 1)
    return Polynomial(np.concatenate(([0.0], c)))


def integrate01(p: Polynomial) -> float:
    c = p.coeffs
    return float(np.sum(c / np.arange(1, c.size + 1)))


def differentiate(p: Polynomial) -> Polynomial:
    c = p.coeffs
    if c.size <= 1:
        return ZERO
    return Polynomial(c[1:] * np.arange(1, c.size))


def uniform_grid(grid_size: int) -> np.ndarray:
    return np.arange(grid_size) / (grid_size - 1)


def max_abs_on_grid(p: Polynomial, grid_size: int = 201) -> float:
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    if p.is_zero():
        return 0.0
    return float(np.max(np.abs(evaluate(p, uniform_grid(grid_size)))))


def poly_sum(terms: Sequence[Polynomial]) -> Polynomial:
    total = ZERO
    for t in terms:
        total = add(total, t)
    return total
