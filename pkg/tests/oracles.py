"""Independent reference computations used only by the tests."""

import functools
import itertools
import math

import numpy as np
from numpy.polynomial import polynomial as npoly

from nonlocal_oham.poly import Polynomial

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(64)


def _gauss(fun, lo, hi):
    if hi <= lo:
        return 0.0
    s = 0.5 * (hi - lo) * _GL_NODES + 0.5 * (hi + lo)
    return 0.5 * (hi - lo) * float(np.dot(_GL_WEIGHTS, fun(s)))


def green_quadrature(f: Polynomial, x: float) -> float:
    """int_0^1 G(x, s) f(s) ds by 64-node Gauss-Legendre on each side of s = x."""
    c = f.coeffs
    left = _gauss(lambda s: s * (x - 1.0) * npoly.polyval(s, c), 0.0, x)
    right = _gauss(lambda s: x * (s - 1.0) * npoly.polyval(s, c), x, 1.0)
    return left + right


def green_by_double_integration(c: np.ndarray) -> np.ndarray:
    """Coefficients of u with u'' = f, u(0) = u(1) = 0, via numpy's integ."""
    if len(c) == 0:
        return np.zeros(0)
    U = npoly.polyint(c, 2)
    U = npoly.polysub(U, [0.0, npoly.polyval(1.0, U)])
    return U


def multinomial_power_coefficient(terms, m: int, k: int) -> np.ndarray:
    """[q^k] (sum_j terms[j] q^j)^m by enumerating every ordered index tuple."""
    total = np.zeros(1)
    arrays = [np.asarray(t.coeffs if isinstance(t, Polynomial) else t, dtype=float)
              for t in terms]
    arrays += [np.zeros(0)] * max(0, k + 1 - len(arrays))
    if m == 0:
        return np.array([1.0]) if k == 0 else np.zeros(0)
    for idx in itertools.product(range(k + 1), repeat=m):
        if sum(idx) != k:
            continue
        prod = np.array([1.0])
        for j in idx:
            prod = npoly.polymul(prod, arrays[j]) if arrays[j].size else np.zeros(1)
        total = npoly.polyadd(total, prod)
    return total


def adm_direct(a, b, gamma, h, lam, m, order, strategy):
    """Adomian recursion y_k = K[A_{k-1}] / alpha(p_{k-1}) written out from scratch.

    ``strategy`` is 'frozen', 'partial-sum' or 'expansion'; ``h`` is an array of
    forcing coefficients.  Returns a list of coefficient arrays y_0..y_order.
    """
    h = np.asarray(h, dtype=float)
    ys = [np.array([a, b - a], dtype=float)]
    integral = lambda c: float(sum(ci / (i + 1) for i, ci in enumerate(c)))

    def A(j, with_forcing):
        term = multinomial_power_coefficient(ys, m, j) * lam if lam else np.zeros(1)
        if with_forcing:
            term = npoly.polyadd(term, h) if h.size else term
        return term

    for k in range(1, order + 1):
        if strategy == "expansion":
            ps = [integral(y) for y in ys]
            # (p0 + u)^e = p0^e * sum_n binom(e, n) (u/p0)^n, truncated in q
            u = np.array([0.0] + [pi / ps[0] for pi in ps[1:k]])
            beta, un = np.zeros(k), np.zeros(k)
            un[0] = 1.0
            e = -gamma
            for n in range(k):
                beta += _gen_binom(e, n) * un
                un = np.convolve(un, u)[:k]
            beta *= ps[0] ** e
            y = np.zeros(1)
            for l in range(k):
                y = npoly.polyadd(y, beta[k - 1 - l] * green_by_double_integration(A(l, l == 0)))
        else:
            total = ys[0] if strategy == "frozen" else functools.reduce(npoly.polyadd, ys)
            y = green_by_double_integration(A(k - 1, True)) / integral(total) ** gamma
        ys.append(np.asarray(y, dtype=float))
    return ys


def _gen_binom(e: float, n: int) -> float:
    return math.prod(e - i for i in range(n)) / math.factorial(n)
