"""Green's function of ``u'' = f`` on (0, 1) with homogeneous Dirichlet data.

``G(x, s) = x (s - 1)`` for ``x <= s`` and ``s (x - 1)`` for ``s <= x``.
The integral operator is applied in closed form, so polynomials map to
polynomials with no discretisation error.
"""

from __future__ import annotations

from .poly import X, Polynomial, antiderivative, evaluate, mul


def green_eval(x: float, s: float) -> float:
    if not (0.0 <= x <= 1.0 and 0.0 <= s <= 1.0):
        raise ValueError(f"G(x, s) is defined on the unit square, got ({x}, {s})")
    if x <= s:
        return x * (s - 1.0)
    return s * (x - 1.0)


def apply_green(f: Polynomial) -> Polynomial:
    """Return ``u(x) = int_0^1 G(x, s) f(s) ds``.

    Splitting the integral at ``s = x`` gives
    ``u = (x - 1) A(x) + x (B(1) - B(x))`` with ``A' = s f``, ``B' = (s - 1) f``
    and ``A(0) = B(0) = 0``.  The result solves ``u'' = f``, ``u(0) = u(1) = 0``.
    """
    if f.is_zero():
        return f
    sf = mul(X, f)
    A = antiderivative(sf)
    B = antiderivative(sf - f)
    return mul(X - 1.0, A) + mul(X, evaluate(B, 1.0) - B)
