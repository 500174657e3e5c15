"""Classical and exceptional (X_m) orthogonal polynomials and the error function.

Everything here is vectorised over the argument ``z``; degrees and
parameters are scalars.  Degree ``-1`` is the zero polynomial, which lets the
exceptional-polynomial formulas be written without special cases at n = 0.

Classical polynomials are evaluated by their three-term recurrence in the
degree.  The parameters that appear in the exceptional constructions are
frequently negative and non-integer (e.g. ``P_m^(-a-1, b-1)``), so the Jacobi
recurrence does not assume the classical parameter range; if one of its
leading coefficients is small the explicit binomial sum is used instead.
"""

import math

import numpy as np

from .errors import ParameterError

__all__ = [
    "laguerre",
    "laguerre_deriv",
    "jacobi",
    "jacobi_deriv",
    "x_laguerre",
    "x_laguerre_deriv",
    "x_jacobi",
    "x_jacobi_deriv",
    "erf",
    "erfc",
]

_SQRT_PI = math.sqrt(math.pi)


def _as_array(z):
    z = np.asarray(z, dtype=float)
    if np.iscomplexobj(z):
        raise TypeError("complex arguments are not supported")
    return z


def _out(value):
    # 0-d arrays come back as Python floats
    return value[()] if isinstance(value, np.ndarray) and value.ndim == 0 else value


def laguerre(n, alpha, z):
    """Generalised Laguerre polynomial ``L_n^(alpha)(z)``; ``n = -1`` gives 0."""
    z = _as_array(z)
    if n < -1:
        raise ParameterError(f"Laguerre degree must be >= -1, got {n}")
    if n == -1:
        return _out(np.zeros_like(z))
    prev = np.zeros_like(z)
    cur = np.ones_like(z)
    for k in range(n):
        prev, cur = cur, ((2 * k + 1 + alpha - z) * cur - (k + alpha) * prev) / (k + 1)
    return _out(cur)


def laguerre_deriv(n, alpha, z):
    """d/dz L_n^(alpha)(z) = -L_{n-1}^(alpha+1)(z)."""
    if n < 0:
        raise ParameterError(f"derivative needs degree >= 0, got {n}")
    return _out(-_as_array(laguerre(n - 1, alpha + 1, z)))


def _gbinom(x, j):
    """Generalised binomial coefficient C(x, j) for real x and integer j >= 0."""
    out = 1.0
    for i in range(j):
        out *= (x - i) / (i + 1)
    return out


def _jacobi_sum(n, alpha, beta, z):
    half_m = (z - 1.0) / 2.0
    half_p = (z + 1.0) / 2.0
    total = np.zeros_like(z)
    for s in range(n + 1):
        c = _gbinom(n + alpha, n - s) * _gbinom(n + beta, s)
        total = total + c * half_m**s * half_p ** (n - s)
    return total


def jacobi(n, alpha, beta, z):
    """Jacobi polynomial ``P_n^(alpha, beta)(z)`` for arbitrary real parameters."""
    z = _as_array(z)
    if n < -1:
        raise ParameterError(f"Jacobi degree must be >= -1, got {n}")
    if n == -1:
        return _out(np.zeros_like(z))
    if n == 0:
        return _out(np.ones_like(z))
    ab = alpha + beta
    # the recurrence divides by (k + a + b + 1)(2k + a + b); when either factor
    # is small the division amplifies rounding, so use the explicit sum instead
    if any(abs(k + ab + 1) < 1 or abs(2 * k + ab) < 1 for k in range(1, n)):
        return _out(_jacobi_sum(n, alpha, beta, z))
    prev = np.ones_like(z)
    cur = (alpha + 1.0) + (ab + 2.0) * (z - 1.0) / 2.0
    for k in range(1, n):
        s = 2 * k + ab
        a1 = 2.0 * (k + 1) * (k + ab + 1) * s
        a2 = (s + 1) * (alpha * alpha - beta * beta)
        a3 = s * (s + 1) * (s + 2)
        a4 = 2.0 * (k + alpha) * (k + beta) * (s + 2)
        prev, cur = cur, ((a2 + a3 * z) * cur - a4 * prev) / a1
    return _out(cur)


def jacobi_deriv(n, alpha, beta, z):
    """d/dz P_n^(a,b)(z) = (n + a + b + 1)/2 * P_{n-1}^(a+1, b+1)(z)."""
    if n < 0:
        raise ParameterError(f"derivative needs degree >= 0, got {n}")
    return _out(0.5 * (n + alpha + beta + 1) * _as_array(jacobi(n - 1, alpha + 1, beta + 1, z)))


def _check_x_indices(n, m):
    if m < 1:
        raise ParameterError(f"extension order m must be >= 1, got {m}")
    if n < 0:
        raise ParameterError(f"degree index n must be >= 0, got {n}")


def x_laguerre(n, m, alpha, z):
    """X_m exceptional Laguerre polynomial of degree n + m.

    L^_{n+m}^(a)(z) = L_m^(a)(-z) L_n^(a-1)(z) + L_m^(a-1)(-z) L_{n-1}^(a)(z)
    """
    _check_x_indices(n, m)
    if not alpha > 0:
        raise ParameterError(f"exceptional Laguerre needs alpha > 0, got {alpha}")
    z = _as_array(z)
    val = laguerre(m, alpha, -z) * laguerre(n, alpha - 1, z)
    if n > 0:
        val = val + laguerre(m, alpha - 1, -z) * laguerre(n - 1, alpha, z)
    return _out(np.asarray(val))


def x_laguerre_deriv(n, m, alpha, z):
    """d/dz of :func:`x_laguerre`."""
    _check_x_indices(n, m)
    if not alpha > 0:
        raise ParameterError(f"exceptional Laguerre needs alpha > 0, got {alpha}")
    z = _as_array(z)
    val = -laguerre_deriv(m, alpha, -z) * laguerre(n, alpha - 1, z) + laguerre(
        m, alpha, -z
    ) * laguerre_deriv(n, alpha - 1, z)
    if n > 0:
        val = val - laguerre_deriv(m, alpha - 1, -z) * laguerre(n - 1, alpha, z)
        val = val + laguerre(m, alpha - 1, -z) * laguerre_deriv(n - 1, alpha, z)
    return _out(np.asarray(val))


def _x_jacobi_coeffs(n, m, alpha, beta):
    _check_x_indices(n, m)
    if 1 + alpha + n == 0:
        raise ParameterError(
            f"exceptional Jacobi denominator 1 + alpha + n vanishes (alpha={alpha}, n={n})"
        )
    c1 = (1 + alpha + beta + n) / (2.0 * (1 + alpha + n))
    c2 = (1 + alpha - m) / (alpha + 1 + n)
    return (-1) ** m * c1, (-1) ** m * c2


def x_jacobi(n, m, alpha, beta, z):
    """X_m exceptional Jacobi polynomial of degree n + m.

    (-1)^m [ c1 (z-1) P_m^(-a-1,b-1) P_{n-1}^(a+2,b) + c2 P_m^(-a-2,b) P_n^(a+1,b-1) ]
    with c1 = (1+a+b+n)/(2(1+a+n)) and c2 = (1+a-m)/(1+a+n).
    """
    c1, c2 = _x_jacobi_coeffs(n, m, alpha, beta)
    z = _as_array(z)
    val = c2 * jacobi(m, -alpha - 2, beta, z) * jacobi(n, alpha + 1, beta - 1, z)
    if n > 0:
        val = val + c1 * (z - 1) * jacobi(m, -alpha - 1, beta - 1, z) * jacobi(
            n - 1, alpha + 2, beta, z
        )
    return _out(np.asarray(val))


def x_jacobi_deriv(n, m, alpha, beta, z):
    """d/dz of :func:`x_jacobi`."""
    c1, c2 = _x_jacobi_coeffs(n, m, alpha, beta)
    z = _as_array(z)
    val = c2 * (
        jacobi_deriv(m, -alpha - 2, beta, z) * jacobi(n, alpha + 1, beta - 1, z)
        + jacobi(m, -alpha - 2, beta, z) * jacobi_deriv(n, alpha + 1, beta - 1, z)
    )
    if n > 0:
        pm = jacobi(m, -alpha - 1, beta - 1, z)
        pn = jacobi(n - 1, alpha + 2, beta, z)
        val = val + c1 * (
            pm * pn
            + (z - 1) * jacobi_deriv(m, -alpha - 1, beta - 1, z) * pn
            + (z - 1) * pm * jacobi_deriv(n - 1, alpha + 2, beta, z)
        )
    return _out(np.asarray(val))


# error function ------------------------------------------------------------

_SERIES_TERMS = 48
_CF_DEPTH = 120
_SWITCH = 2.0


def _erf_series(x):
    # erf(x) = 2/sqrt(pi) exp(-x^2) sum_k 2^k x^(2k+1) / (2k+1)!!  (all terms positive)
    x2 = x * x
    term = x.copy()
    total = x.copy()
    for k in range(_SERIES_TERMS):
        term = term * (2.0 * x2) / (2 * k + 3)
        total = total + term
    return 2.0 / _SQRT_PI * np.exp(-x2) * total


def _erfc_cf(x):
    # erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), x > 0
    f = x.copy()
    for k in range(_CF_DEPTH, 0, -1):
        f = x + (0.5 * k) / f
    return np.exp(-x * x) / (_SQRT_PI * f)


def erf(x):
    """Error function with relative error below ~1e-15 on the real line."""
    x = _as_array(x)
    ax = np.abs(x)
    small = ax < _SWITCH
    out = np.empty_like(ax)
    out[small] = _erf_series(ax[small])
    out[~small] = 1.0 - _erfc_cf(ax[~small])
    return _out(np.copysign(out, x))


def erfc(x):
    """Complementary error function, accurate in the far right tail."""
    x = _as_array(x)
    out = np.empty_like(x)
    big = x >= _SWITCH
    out[big] = _erfc_cf(x[big])
    rest = ~big
    out[rest] = 1.0 - np.asarray(erf(x[rest]))
    return _out(out)
