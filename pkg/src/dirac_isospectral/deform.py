"""One-parameter isospectral deformation of a sector-1 potential.

Given the normalised ground state psi_0 with cumulative probability
I(x) = int_lower^x psi_0^2, the deformed superpotential is

    phi(x, lam) = phi(x) + psi_0^2 / (I(x) + lam),

valid for lam > 0 or lam < -1.  lam -> 0 and lam -> -1 are the Pursey and
Abraham-Moses limits (denominators I and I - 1), each of which removes the
ground state.  lam -> +-inf restores the undeformed potential.

I(x) is tabulated once per grid together with the complementary tail
J(x) = 1 - I(x), integrated from the upper end, so that both I near the lower
wall and 1 - I near the upper wall keep full relative precision.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import families as fam
from .errors import ParameterError, QuadratureError, SingularityError
from .numerics import adaptive_quad, central_diff, gauss_legendre_panels

__all__ = [
    "SINGULAR_THRESHOLD",
    "DeformationKind",
    "Deformation",
    "IntegralTable",
    "compute_I",
    "phi_lambda",
    "phi_lambda_deriv",
    "v1_lambda",
    "v1_lambda_log_route",
    "psi0_lambda",
    "psi_excited_lambda",
    "excited_state_norm",
    "candidate_ground_norm",
    "dirac_spinor_lambda",
]

SINGULAR_THRESHOLD = 1e-14


class DeformationKind(enum.Enum):
    GENERIC = "generic"
    PURSEY = "pursey"
    ABRAHAM_MOSES = "am"
    UNDEFORMED = "undeformed"


@dataclass(frozen=True)
class Deformation:
    """A member of the lambda family; the three limits are symbolic, never floats."""

    kind: DeformationKind
    lam: float = math.nan

    def __post_init__(self):
        if self.kind is DeformationKind.GENERIC:
            lam = float(self.lam)
            if not math.isfinite(lam):
                raise ParameterError(
                    "lambda must be finite for a generic deformation; use Deformation.undeformed()"
                )
            if -1.0 <= lam <= 0.0:
                raise ParameterError(
                    f"lambda={lam!r} rejected: lambda in [-1, 0] makes the denominator"
                    " I(x)+lambda vanish inside the domain (valid: lambda > 0 or lambda < -1;"
                    " lambda=0 and lambda=-1 are the Pursey and Abraham-Moses limits)"
                )
            object.__setattr__(self, "lam", lam)

    @classmethod
    def generic(cls, lam):
        return cls(DeformationKind.GENERIC, lam)

    @classmethod
    def pursey(cls):
        return cls(DeformationKind.PURSEY)

    @classmethod
    def abraham_moses(cls):
        return cls(DeformationKind.ABRAHAM_MOSES)

    @classmethod
    def undeformed(cls):
        return cls(DeformationKind.UNDEFORMED)

    @classmethod
    def from_value(cls, value):
        """Map a lambda value onto a deformation: 0, -1 and +-inf become the limits."""
        value = float(value)
        if value == 0.0:
            return cls.pursey()
        if value == -1.0:
            return cls.abraham_moses()
        if math.isinf(value):
            return cls.undeformed()
        return cls.generic(value)

    @property
    def label(self):
        if self.kind is DeformationKind.GENERIC:
            return f"lambda={self.lam!r}"
        return self.kind.value

    @property
    def has_ground_state(self):
        return self.kind in (DeformationKind.GENERIC, DeformationKind.UNDEFORMED)


@dataclass(frozen=True)
class IntegralTable:
    """Cumulative ground-state probability tabulated on grid nodes.

    ``left[i]`` is I(x_i) (integrated from the lower domain end) and
    ``right[i]`` is J(x_i) = int_{x_i}^upper psi_0^2.  ``error_estimate`` bounds
    the accumulated quadrature error of either column.
    """

    family: fam.Family
    nodes: np.ndarray
    left: np.ndarray
    right: np.ndarray
    order: int
    error_estimate: float

    @property
    def total(self):
        return float(self.left[-1] + self.right[-1])

    def _density(self, x):
        return np.asarray(fam.psi1(self.family, 0, x)) ** 2

    def _panel(self, a, b):
        vals, _ = gauss_legendre_panels(self._density, a, b, self.order)
        return vals

    def evaluate(self, x):
        """Return (I(x), J(x)) for points inside the open domain."""
        x = np.asarray(x, dtype=float)
        self.family.domain.check(x)
        flat = x.ravel()
        nodes = self.nodes
        idx = np.clip(np.searchsorted(nodes, flat), 1, nodes.size - 1)
        nearer_left = (flat - nodes[idx - 1]) <= (nodes[idx] - flat)
        k = np.where(nearer_left, idx - 1, idx)
        below = flat < nodes[0]
        k[below] = 0
        lower = self.family.domain.lower
        # signed integral from the chosen node to x
        piece = self._panel(nodes[k], flat)
        I = self.left[k] + piece
        J = self.right[k] - piece
        if np.any(below):
            # I from the wall directly so tiny values stay relatively accurate
            I[below] = self._panel(np.full(below.sum(), lower), flat[below])
        return I.reshape(x.shape), J.reshape(x.shape)

    def I(self, x):
        return _scalar(self.evaluate(x)[0])

    def J(self, x):
        return _scalar(self.evaluate(x)[1])

    def denominator(self, d, x, check=True):
        """I(x) + lambda, or I(x) / I(x) - 1 for the Pursey / AM limits.

        Raises SingularityError when |denominator| < SINGULAR_THRESHOLD anywhere
        in ``x``.  Undeformed has no denominator and returns ``inf``.
        """
        x = np.asarray(x, dtype=float)
        if d.kind is DeformationKind.UNDEFORMED:
            return np.full(x.shape, np.inf)
        I, J = self.evaluate(x)
        if d.kind is DeformationKind.PURSEY:
            den = I
        elif d.kind is DeformationKind.ABRAHAM_MOSES:
            den = -J
        else:
            den = np.where(I <= 0.5, I + d.lam, (1.0 + d.lam) - J)
        if check:
            bad = np.abs(den) < SINGULAR_THRESHOLD
            if np.any(bad):
                where = x[bad].ravel().tolist()
                raise SingularityError(
                    f"{d.label} denominator |{_den_name(d)}| < {SINGULAR_THRESHOLD:g} at"
                    f" {self.family.domain.label}={where[0]!r}"
                    f" ({len(where)} point(s), range [{min(where)!r}, {max(where)!r}])",
                    float(where[0]),
                )
        return den

    def safe_interval(self, d, margin=2.0):
        """Widest node interval on which |denominator| >= margin * threshold."""
        if d.kind is DeformationKind.PURSEY:
            ok = self.left >= margin * SINGULAR_THRESHOLD
        elif d.kind is DeformationKind.ABRAHAM_MOSES:
            ok = self.right >= margin * SINGULAR_THRESHOLD
        else:
            ok = np.ones(self.nodes.size, dtype=bool)
        if not np.any(ok):
            raise SingularityError(f"{d.label} denominator is below threshold on the whole grid")
        ids = np.flatnonzero(ok)
        return float(self.nodes[ids[0]]), float(self.nodes[ids[-1]])


def _den_name(d):
    return {
        DeformationKind.PURSEY: "I(x)",
        DeformationKind.ABRAHAM_MOSES: "I(x)-1",
    }.get(d.kind, "I(x)+lambda")


def _scalar(v):
    v = np.asarray(v)
    return v[()] if v.ndim == 0 else v


def compute_I(p, grid=None, order=20, tol=1e-10):
    """Tabulate I(x) and its complement on the nodes of ``grid``.

    Each grid interval is integrated with an ``order``-point Gauss-Legendre rule;
    the head panel starts at the lower domain end.  QuadratureError if the
    accumulated error estimate exceeds ``tol`` or the total probability is not
    within 1e-8 of one.
    """
    if grid is None:
        grid = p.default_grid()
    nodes = grid.nodes
    p.domain.check(nodes)

    def dens(x):
        return np.asarray(fam.psi1(p, 0, x)) ** 2

    lower, upper = p.domain.lower, p.domain.upper
    head, head_err = gauss_legendre_panels(dens, [lower], [nodes[0]], order)
    panels, panel_err = gauss_legendre_panels(dens, nodes[:-1], nodes[1:], order)
    if math.isinf(upper):
        # beyond x_max the density is < 1e-24 of its peak; a finite cut keeps
        # hyperbolic factors from overflowing
        tail, tail_err = adaptive_quad(dens, nodes[-1], nodes[-1] + (nodes[-1] - lower), tol=1e-16)
        tail_err = np.array([tail_err])
        tail = np.array([tail])
    else:
        tail, tail_err = gauss_legendre_panels(dens, [nodes[-1]], [upper], order)

    left = np.concatenate([head, head[0] + np.cumsum(panels)])
    right = np.concatenate([tail[0] + np.cumsum(panels[::-1])[::-1], tail])
    err = float(head_err.sum() + panel_err.sum() + tail_err.sum())
    if err > tol:
        raise QuadratureError(
            f"cumulative integral error estimate {err:.3e} exceeds {tol:.1e} on {grid.n} nodes"
        )
    total = left[-1] + right[-1]
    if abs(total - 1.0) > 1e-8:
        raise QuadratureError(f"ground state integrates to {total!r}, not 1 within 1e-8")
    for arr in (nodes, left, right):
        arr.setflags(write=False)
    return IntegralTable(p, nodes, left, right, order, err)


def _g(p, d, x, table):
    """psi_0^2 / denominator, the additive change to phi."""
    den = table.denominator(d, x)
    return np.asarray(fam.psi1(p, 0, x)) ** 2 / den, den


def phi_lambda(p, d, x, table):
    """Deformed superpotential phi(x, lambda)."""
    x = np.asarray(x, dtype=float)
    phi = np.asarray(fam.phi_ext(p, x))
    if d.kind is DeformationKind.UNDEFORMED:
        return _scalar(phi)
    g, _ = _g(p, d, x, table)
    return _scalar(phi + g)


def phi_lambda_deriv(p, d, x, table):
    """d/dx phi(x, lambda), using I' = psi_0^2 and I'' = 2 psi_0 psi_0'."""
    x = np.asarray(x, dtype=float)
    dphi = np.asarray(fam.phi_ext_deriv(p, x))
    if d.kind is DeformationKind.UNDEFORMED:
        return _scalar(dphi)
    den = table.denominator(d, x)
    psi0 = np.asarray(fam.psi1(p, 0, x))
    dpsi0 = np.asarray(fam.psi1_deriv(p, 0, x))
    g = psi0**2 / den
    return _scalar(dphi + 2.0 * psi0 * dpsi0 / den - g * g)


def v1_lambda(p, d, x, table):
    """Deformed sector-1 potential phi_lam^2 - phi_lam'."""
    phi = np.asarray(phi_lambda(p, d, x, table))
    return _scalar(phi * phi - np.asarray(phi_lambda_deriv(p, d, x, table)))


def v1_lambda_log_route(p, d, x, table, h=1e-3):
    """V1(x) - 2 d^2/dx^2 ln|denominator|, the second derivative by finite differences.

    An independent route to :func:`v1_lambda` used for cross-checking.
    """
    x = np.asarray(x, dtype=float)
    v1 = np.asarray(fam.partner_potentials(p, x)[0])
    if d.kind is DeformationKind.UNDEFORMED:
        return _scalar(v1)

    def log_den(y):
        return np.log(np.abs(table.denominator(d, y)))

    return _scalar(v1 - 2.0 * central_diff(log_den, x, order=2, h=h))


def psi0_lambda(p, d, x, table):
    """Normalised ground state sqrt(lam (1 + lam)) psi_0 / (I + lam)."""
    if d.kind is DeformationKind.UNDEFORMED:
        return fam.psi1(p, 0, x)
    if d.kind is not DeformationKind.GENERIC:
        raise ParameterError(
            f"the {d.label} limit has no ground state (it is removed by the deformation)"
        )
    x = np.asarray(x, dtype=float)
    den = table.denominator(d, x)
    return _scalar(math.sqrt(d.lam * (1.0 + d.lam)) * np.asarray(fam.psi1(p, 0, x)) / den)


def psi_excited_lambda(p, d, n, x, table, normalize=False):
    """Deformed state built from psi_{n+1}: psi + g (psi' + phi psi) / E_{n+1}.

    For the Pursey and Abraham-Moses limits this is their n-th state.  The raw
    formula is returned unless ``normalize`` is set, in which case it is
    divided by :func:`excited_state_norm`.
    """
    x = np.asarray(x, dtype=float)
    psi = np.asarray(fam.psi1(p, n + 1, x))
    if d.kind is DeformationKind.UNDEFORMED:
        return _scalar(psi)
    g, _ = _g(p, d, x, table)
    dpsi = np.asarray(fam.psi1_deriv(p, n + 1, x))
    phi = np.asarray(fam.phi_ext(p, x))
    out = psi + g * (dpsi + phi * psi) / fam.energy(p, n + 1)
    if normalize:
        out = out / excited_state_norm(p, d, n, table)
    return _scalar(out)


def _integrate_on_table(f, table, a, b, order=20):
    nodes = table.nodes
    inner = nodes[(nodes > a) & (nodes < b)]
    pts = np.concatenate([[a], inner, [b]])
    vals, _ = gauss_legendre_panels(f, pts[:-1], pts[1:], order)
    return float(vals.sum())


def excited_state_norm(p, d, n, table):
    """L2 norm of the raw deformed excited state over the tabulated range.

    For the Pursey / AM limits the integral stops where the denominator drops
    below the singularity threshold; the excluded mass is negligible there.
    """
    a, b = table.safe_interval(d)
    return math.sqrt(
        _integrate_on_table(
            lambda y: np.asarray(psi_excited_lambda(p, d, n, y, table)) ** 2, table, a, b
        )
    )


def candidate_ground_norm(p, d, cut, table):
    """int (psi_0 / den)^2 for the Pursey / AM limits, truncated at ``cut``.

    Pursey integrates from ``cut`` up to the last node, AM from the first node
    up to ``cut``; the value grows without bound as ``cut`` approaches the
    offending wall, i.e. psi_0 / den is not a bound state.
    """
    if d.kind not in (DeformationKind.PURSEY, DeformationKind.ABRAHAM_MOSES):
        raise ParameterError("candidate_ground_norm applies only to the Pursey and AM limits")

    def dens(y):
        return (np.asarray(fam.psi1(p, 0, y)) / table.denominator(d, y)) ** 2

    if d.kind is DeformationKind.PURSEY:
        return _integrate_on_table(dens, table, cut, float(table.nodes[-1]))
    return _integrate_on_table(dens, table, float(table.nodes[0]), cut)


def dirac_spinor_lambda(p, d, n, x, table):
    """Two-component eigenspinor.  ``n = -1`` is the ground state (lower component 0)."""
    x = np.asarray(x, dtype=float)
    if n == -1:
        upper = np.asarray(psi0_lambda(p, d, x, table))
        return _scalar(upper), _scalar(np.zeros_like(upper))
    return psi_excited_lambda(p, d, n, x, table), fam.psi2(p, n, x)
