"""Grids, quadrature, finite differences and the Dirichlet bound-state solver.

The eigensolver discretises ``-d^2/dx^2 + V`` with the three-point stencil on a
uniform grid (Dirichlet walls at both cuts), so the matrix stays symmetric
tridiagonal.  Accuracy comes from Richardson extrapolation between grids of
spacing h and h/2 rather than from a wider stencil.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.linalg import eigh_tridiagonal

from .errors import ConvergenceError, ParameterError, QuadratureError

__all__ = [
    "GridSpec",
    "SampledFunction",
    "EigenResult",
    "adaptive_quad",
    "gauss_legendre_panels",
    "central_diff",
    "dirichlet_eigenvalues",
    "fd_eigensolve",
    "MIN_NODES",
    "MAX_LEVELS",
]

MIN_NODES = 200
MAX_LEVELS = 15


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on the truncated interval [x_min, x_max] with n nodes."""

    x_min: float
    x_max: float
    n: int

    def __post_init__(self):
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise ParameterError("grid cuts must be finite")
        if not self.x_min < self.x_max:
            raise ParameterError(f"grid needs x_min < x_max, got [{self.x_min}, {self.x_max}]")
        if self.n < MIN_NODES:
            raise ParameterError(f"grid needs at least {MIN_NODES} nodes, got {self.n}")

    @property
    def h(self):
        return (self.x_max - self.x_min) / (self.n - 1)

    @property
    def nodes(self):
        return np.linspace(self.x_min, self.x_max, self.n)

    def refined(self):
        """Same interval with the spacing halved."""
        return GridSpec(self.x_min, self.x_max, 2 * self.n - 1)

    def with_nodes(self, n):
        return GridSpec(self.x_min, self.x_max, n)


@dataclass(frozen=True)
class SampledFunction:
    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.grid.n,):
            raise ParameterError(
                f"expected {self.grid.n} samples, got array of shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise ParameterError("sampled function contains non-finite values")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def sample(cls, f, grid):
        return cls(grid, f(grid.nodes))


def adaptive_quad(f, a, b, tol=1e-12, rtol=0.0, limit=500):
    """Integrate a scalar function ``f`` over [a, b]; either end may be infinite.

    Backed by QUADPACK's adaptive Gauss-Kronrod routines (semi-infinite ranges
    are mapped onto a finite interval internally).  Raises QuadratureError
    when the error estimate exceeds ``max(tol, rtol * |value|)``.
    """
    if not a < b:
        raise ParameterError(f"quadrature needs a < b, got a={a}, b={b}")
    with warnings.catch_warnings(), np.errstate(all="ignore"):
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err = integrate.quad(
            lambda t: float(f(t)), a, b, epsabs=tol / 4, epsrel=rtol / 4, limit=limit
        )
    bound = max(tol, rtol * abs(value))
    if not math.isfinite(value) or err > bound:
        raise QuadratureError(
            f"quadrature on [{a}, {b}] reached error estimate {err:.3e} > {bound:.3e}"
        )
    return value, err


_GL_CACHE = {}


def _gl(order):
    if order not in _GL_CACHE:
        _GL_CACHE[order] = np.polynomial.legendre.leggauss(order)
    return _GL_CACHE[order]


def gauss_legendre_panels(f, left, right, order=20):
    """Fixed-order Gauss-Legendre integral of vectorised ``f`` over many panels.

    ``left`` and ``right`` are equal-length arrays of panel ends.  Returns
    ``(values, err)`` where ``err`` is |G_order - G_order/2| per panel, an
    estimate of the error of the lower-order rule and therefore conservative
    for the returned high-order value.
    """
    left = np.asarray(left, dtype=float)
    right = np.asarray(right, dtype=float)
    half = 0.5 * (right - left)
    mid = 0.5 * (right + left)
    results = []
    for p in (order, order // 2):
        t, w = _gl(p)
        pts = mid[..., None] + half[..., None] * t
        results.append(half * (f(pts.ravel()).reshape(pts.shape) @ w))
    return results[0], np.abs(results[0] - results[1])


def central_diff(f, x, order=1, h=1e-3):
    """Five-point central difference of ``f`` at ``x`` (first or second derivative)."""
    x = np.asarray(x, dtype=float)
    fm2, fm1, fp1, fp2 = f(x - 2 * h), f(x - h), f(x + h), f(x + 2 * h)
    if order == 1:
        return (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    if order == 2:
        return (-fm2 + 16 * fm1 - 30 * f(x) + 16 * fp1 - fp2) / (12 * h * h)
    raise ParameterError(f"central_diff supports order 1 or 2, got {order}")


def dirichlet_eigenvalues(V, grid, k):
    """Lowest ``k`` eigenvalues of the three-point discretisation, no extrapolation."""
    if not 1 <= k <= MAX_LEVELS:
        raise ParameterError(f"k must lie in [1, {MAX_LEVELS}], got {k}")
    x = grid.nodes[1:-1]
    h = grid.h
    pot = np.asarray(V(x), dtype=float)
    if not np.all(np.isfinite(pot)):
        bad = x[~np.isfinite(pot)][0]
        raise ParameterError(f"potential is not finite on the grid (first at x={bad!r})")
    diag = 2.0 / h**2 + pot
    off = np.full(x.size - 1, -1.0 / h**2)
    return eigh_tridiagonal(diag, off, select="i", select_range=(0, k - 1))[0]


@dataclass(frozen=True)
class EigenResult:
    values: np.ndarray
    coarse: np.ndarray
    fine: np.ndarray
    error_estimate: np.ndarray


def fd_eigensolve(V, grid, k, tol=None, full_output=False):
    """Lowest ``k`` eigenvalues of ``-d^2/dx^2 + V`` with Dirichlet walls.

    Solves on ``grid`` and on the grid with half the spacing, then returns the
    Richardson-extrapolated values (4 E_{h/2} - E_h) / 3 in ascending order.
    ``error_estimate`` is |E_{h/2} - E_h| / 3, the estimated error of the fine
    unextrapolated solve.  With ``tol`` set, ConvergenceError is raised when
    any estimate exceeds it.
    """
    coarse = dirichlet_eigenvalues(V, grid, k)
    fine = dirichlet_eigenvalues(V, grid.refined(), k)
    values = (4.0 * fine - coarse) / 3.0
    est = np.abs(fine - coarse) / 3.0
    if tol is not None and np.any(est > tol):
        worst = int(np.argmax(est))
        raise ConvergenceError(
            f"eigenvalue {worst} not converged: estimated error {est[worst]:.3e} > tol {tol:.3e}"
            f" on {grid.n} nodes"
        )
    if full_output:
        return EigenResult(values, coarse, fine, est)
    return values
