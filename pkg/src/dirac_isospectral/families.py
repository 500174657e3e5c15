"""Rationally extended scalar potentials and their analytic bound states.

Each family supplies a conventional superpotential plus a rational term built
from exceptional orthogonal polynomials.  The sector-1 eigenfunctions all share
one shape,

    Psi_n(x) = N_n * w(x) * Q_n(z(x)) / D(z(x)),

where ``w`` is the conventional ground state (so w'/w = -phi_con), ``D`` is the
classical polynomial whose zeros the extension must avoid, and ``Q_n`` is the
X_m exceptional polynomial of degree n + m.  Derivatives are assembled
analytically from the polynomial derivative identities in :mod:`specfun`.
"""

import functools
import math
from dataclasses import dataclass, replace
from typing import ClassVar

import numpy as np

from . import specfun as sf
from .errors import BoundStateIndexError, DomainError, ParameterError, SingularityError
from .numerics import GridSpec, adaptive_quad

__all__ = [
    "DomainSpec",
    "SpectralLine",
    "Family",
    "RadialOscillator",
    "ScarfI",
    "GPT",
    "make_family",
    "phi_ext",
    "phi_ext_deriv",
    "partner_potentials",
    "psi1",
    "psi1_deriv",
    "psi2",
    "energy",
    "spectrum",
]


@dataclass(frozen=True)
class DomainSpec:
    lower: float
    upper: float
    label: str

    def contains(self, x):
        x = np.asarray(x, dtype=float)
        return (x > self.lower) & (x < self.upper)

    def check(self, x):
        inside = self.contains(x)
        if not np.all(inside):
            bad = np.asarray(x, dtype=float)[~inside].ravel()[0]
            raise DomainError(
                f"{self.label}={bad!r} is outside the open domain ({self.lower}, {self.upper})"
            )


@dataclass(frozen=True)
class SpectralLine:
    """One bound state.  ``epsilon`` is the positive Dirac energy +sqrt(E)."""

    n: int
    E: float
    epsilon: float
    sector: int


class Family:
    """Common machinery; subclasses provide the family-specific pieces."""

    kind: ClassVar[str] = ""
    m: int

    # -- family-specific hooks -------------------------------------------
    @property
    def domain(self):
        raise NotImplementedError

    def z(self, x):
        raise NotImplementedError

    def dz(self, x):
        raise NotImplementedError

    def d2z(self, x):
        raise NotImplementedError

    def phi_con(self, x):
        raise NotImplementedError

    def phi_con_deriv(self, x):
        raise NotImplementedError

    def phi_rat(self, x):
        raise NotImplementedError

    def phi_rat_deriv(self, x):
        raise NotImplementedError

    def weight(self, x):
        raise NotImplementedError

    def denominator(self, z):
        raise NotImplementedError

    def denominator_dz(self, z):
        raise NotImplementedError

    def numerator(self, n, z):
        raise NotImplementedError

    def numerator_dz(self, n, z):
        raise NotImplementedError

    def level(self, n):
        """Sector-1 eigenvalue E_n (no range check)."""
        raise NotImplementedError

    def n_bound(self):
        """Number of sector-1 bound states (``math.inf`` if unbounded)."""
        return math.inf

    def norm_constant(self, n):
        return _numeric_norm(self, n)

    def default_grid_bounds(self):
        raise NotImplementedError

    def default_grid_nodes(self):
        return 4000

    # -- shared helpers ---------------------------------------------------
    def _validate_m(self):
        if not (isinstance(self.m, (int, np.integer)) and self.m >= 1):
            raise ParameterError(f"extension order m must be an integer >= 1, got {self.m!r}")

    def describe(self):
        raise NotImplementedError

    def default_grid(self, check_tail=True):
        """Solver grid for this family; asserts the ground-state tail condition."""
        lo, hi = self.default_grid_bounds()
        grid = GridSpec(lo, hi, self.default_grid_nodes())
        if check_tail:
            x = grid.nodes
            psi = np.abs(psi1(self, 0, x))
            if not psi[-1] < 1e-12 * psi.max():
                raise ParameterError(
                    f"default grid [{lo}, {hi}] violates the tail condition for {self.describe()}"
                )
        return grid


def _check_index(p, n, sector=1):
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise BoundStateIndexError(f"state index must be a non-negative integer, got {n!r}")
    limit = p.n_bound() - (sector - 1)
    if n >= limit:
        raise BoundStateIndexError(
            f"n={n} is not a bound state of sector {sector} for {p.describe()}"
            f" (only n < {limit} are bound)"
        )


@functools.lru_cache(maxsize=256)
def _numeric_norm(p, n):
    """Signed normalisation making Psi_n unit-norm and positive at the lower wall."""
    lo, hi = p.domain.lower, p.domain.upper
    if math.isinf(hi):
        # Psi_n decays like exp(-(A - n) r); beyond this cut the tail is < 1e-30
        hi = 40.0 / max(p.level_decay(n), 1e-3) + 5.0

    def dens(x):
        return (p.weight(x) * p.numerator(n, p.z(x)) / p.denominator(p.z(x))) ** 2

    pts = np.linspace(lo, hi, 9)
    total = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        total += adaptive_quad(dens, a, b, tol=1e-300, rtol=1e-13)[0]
    z0 = p.z(np.array([lo]))
    ratio = float(p.numerator(n, z0)[0] / p.denominator(z0)[0])
    if ratio == 0.0:
        x1 = lo + 1e-6 * (hi - lo)
        z1 = p.z(np.array([x1]))
        ratio = float(p.numerator(n, z1)[0] / p.denominator(z1)[0])
    return math.copysign(1.0 / math.sqrt(total), ratio)


# ---------------------------------------------------------------------------
# radial oscillator


@dataclass(frozen=True)
class RadialOscillator(Family):
    """phi_con = omega r / 2 - (ell + 1) / r on 0 < r < inf, with X_m Laguerre extension."""

    omega: float
    ell: float
    m: int = 1
    kind: ClassVar[str] = "radial"

    def __post_init__(self):
        if not self.omega > 0:
            raise ParameterError(f"radial oscillator needs omega > 0, got {self.omega}")
        if not self.ell > 0:
            raise ParameterError(f"radial oscillator needs ell > 0, got {self.ell}")
        self._validate_m()

    def describe(self):
        return f"radial(omega={self.omega!r}, ell={self.ell!r}, m={self.m})"

    @property
    def alpha(self):
        return self.ell + 0.5

    @property
    def domain(self):
        return DomainSpec(0.0, math.inf, "r")

    def z(self, x):
        return 0.5 * self.omega * x * x

    def dz(self, x):
        return self.omega * x

    def d2z(self, x):
        return np.full_like(np.asarray(x, dtype=float), self.omega)

    def phi_con(self, x):
        return 0.5 * self.omega * x - (self.ell + 1) / x

    def phi_con_deriv(self, x):
        return 0.5 * self.omega + (self.ell + 1) / (x * x)

    def _rat_terms(self, u):
        a, m = self.alpha, self.m
        num1, den1 = sf.laguerre(m - 1, a, u), sf.laguerre(m, a - 1, u)
        num2, den2 = sf.laguerre(m - 1, a + 1, u), sf.laguerre(m, a, u)
        r1, r2 = num1 / den1, num2 / den2
        dr1 = (sf.laguerre_deriv(m - 1, a, u) * den1 - num1 * sf.laguerre_deriv(m, a - 1, u)) / den1**2
        dr2 = (sf.laguerre_deriv(m - 1, a + 1, u) * den2 - num2 * sf.laguerre_deriv(m, a, u)) / den2**2
        return r1 - r2, dr1 - dr2

    def phi_rat(self, x):
        diff, _ = self._rat_terms(-self.z(x))
        return self.omega * x * diff

    def phi_rat_deriv(self, x):
        diff, ddiff = self._rat_terms(-self.z(x))
        # d/dx of u = -z is -omega x
        return self.omega * diff - (self.omega * x) ** 2 * ddiff

    def weight(self, x):
        return x ** (self.ell + 1) * np.exp(-0.5 * self.z(x))

    def denominator(self, z):
        return sf.laguerre(self.m, self.alpha - 1, -z)

    def denominator_dz(self, z):
        return -sf.laguerre_deriv(self.m, self.alpha - 1, -z)

    def numerator(self, n, z):
        return sf.x_laguerre(n, self.m, self.alpha, z)

    def numerator_dz(self, n, z):
        return sf.x_laguerre_deriv(n, self.m, self.alpha, z)

    def level(self, n):
        return 2.0 * n * self.omega

    def norm_constant(self, n):
        a = self.alpha
        return math.sqrt(
            math.factorial(n) * self.omega ** (a + 1) / (2**a * (a + n + self.m) * math.gamma(a + n))
        )

    def default_grid_bounds(self):
        scale = math.sqrt(3.0 / self.omega)
        lo = 1e-4 * scale
        hi = 8.0 * scale
        while abs(psi1(self, 0, np.array([hi]))[0]) >= 1e-13 * _max_abs_psi0(self, lo, hi):
            hi *= 1.25
        return lo, hi


# ---------------------------------------------------------------------------
# Jacobi-type families


class _JacobiFamily(Family):
    A: float
    B: float

    @property
    def alpha(self):
        raise NotImplementedError

    @property
    def beta(self):
        raise NotImplementedError

    def _rat_terms(self, z):
        a, b, m = self.alpha, self.beta, self.m
        num1, den1 = sf.jacobi(m - 1, -a - 1, b + 1, z), sf.jacobi(m, -a - 2, b, z)
        num2, den2 = sf.jacobi(m - 1, -a, b, z), sf.jacobi(m, -a - 1, b - 1, z)
        dr1 = (
            sf.jacobi_deriv(m - 1, -a - 1, b + 1, z) * den1 - num1 * sf.jacobi_deriv(m, -a - 2, b, z)
        ) / den1**2
        dr2 = (
            sf.jacobi_deriv(m - 1, -a, b, z) * den2 - num2 * sf.jacobi_deriv(m, -a - 1, b - 1, z)
        ) / den2**2
        return num1 / den1 - num2 / den2, dr1 - dr2

    @property
    def _rat_coeff(self):
        return -(self.beta - self.alpha + self.m - 1) / 2.0

    def phi_rat(self, x):
        diff, _ = self._rat_terms(self.z(x))
        return self._rat_coeff * self.dz(x) * diff

    def phi_rat_deriv(self, x):
        diff, ddiff = self._rat_terms(self.z(x))
        return self._rat_coeff * (self.d2z(x) * diff + self.dz(x) ** 2 * ddiff)

    def denominator(self, z):
        return sf.jacobi(self.m, -self.alpha - 1, self.beta - 1, z)

    def denominator_dz(self, z):
        return sf.jacobi_deriv(self.m, -self.alpha - 1, self.beta - 1, z)

    def numerator(self, n, z):
        return sf.x_jacobi(n, self.m, self.alpha, self.beta, z)

    def numerator_dz(self, n, z):
        return sf.x_jacobi_deriv(n, self.m, self.alpha, self.beta, z)

    def describe(self):
        return f"{self.kind}(A={self.A!r}, B={self.B!r}, m={self.m})"


@dataclass(frozen=True)
class ScarfI(_JacobiFamily):
    """phi_con = A tan x - B sec x on (-pi/2, pi/2), z = sin x."""

    A: float
    B: float
    m: int = 1
    kind: ClassVar[str] = "scarf"

    def __post_init__(self):
        if not 0 < self.B < self.A - 1:
            raise ParameterError(f"Scarf-I needs 0 < B < A - 1, got A={self.A}, B={self.B}")
        self._validate_m()

    @property
    def alpha(self):
        return self.A - self.B - 0.5

    @property
    def beta(self):
        return self.A + self.B - 0.5

    @property
    def domain(self):
        return DomainSpec(-math.pi / 2, math.pi / 2, "x")

    def z(self, x):
        return np.sin(x)

    def dz(self, x):
        return np.cos(x)

    def d2z(self, x):
        return -np.sin(x)

    def phi_con(self, x):
        return self.A * np.tan(x) - self.B / np.cos(x)

    def phi_con_deriv(self, x):
        c = np.cos(x)
        return (self.A - self.B * np.sin(x)) / (c * c)

    def weight(self, x):
        # 1 - sin x = 2 sin^2(pi/4 - x/2) and 1 + sin x = 2 cos^2(pi/4 - x/2), cancellation-free
        half = math.pi / 4 - 0.5 * np.asarray(x, dtype=float)
        log_m = math.log(2.0) + 2.0 * np.log(np.abs(np.sin(half)))
        log_p = math.log(2.0) + 2.0 * np.log(np.abs(np.cos(half)))
        return np.exp(0.5 * (self.A - self.B) * log_m + 0.5 * (self.A + self.B) * log_p)

    def level(self, n):
        return (self.A + n) ** 2 - self.A**2

    def level_decay(self, n):
        return 1.0

    def default_grid_bounds(self):
        t = 1e-6
        while True:
            lo, hi = -math.pi / 2 + t, math.pi / 2 - t
            edge = np.abs(psi1(self, 0, np.array([lo, hi]))).max()
            if edge < 1e-13 * _max_abs_psi0(self, lo, hi) or t < 1e-12:
                return lo, hi
            t /= 10.0


@dataclass(frozen=True)
class GPT(_JacobiFamily):
    """phi_con = A coth r - B cosech r on 0 < r < inf, z = cosh r."""

    A: float
    B: float
    m: int = 1
    kind: ClassVar[str] = "gpt"

    def __post_init__(self):
        if not self.B > self.A + 1 > 1:
            raise ParameterError(f"GPT needs B > A + 1 > 1, got A={self.A}, B={self.B}")
        self._validate_m()

    @property
    def alpha(self):
        return -self.A + self.B - 0.5

    @property
    def beta(self):
        return -self.A - self.B - 0.5

    @property
    def domain(self):
        return DomainSpec(0.0, math.inf, "r")

    def z(self, x):
        return np.cosh(x)

    def dz(self, x):
        return np.sinh(x)

    def d2z(self, x):
        return np.cosh(x)

    def phi_con(self, x):
        return self.A / np.tanh(x) - self.B / np.sinh(x)

    def phi_con_deriv(self, x):
        s = np.sinh(x)
        return (self.B * np.cosh(x) - self.A) / (s * s)

    def weight(self, x):
        # z - 1 = 2 sinh^2(r/2), z + 1 = 2 cosh^2(r/2)
        half = 0.5 * np.asarray(x, dtype=float)
        log_m = math.log(2.0) + 2.0 * np.log(np.sinh(half))
        log_p = math.log(2.0) + 2.0 * np.log(np.cosh(half))
        return np.exp(0.5 * (self.B - self.A) * log_m - 0.5 * (self.B + self.A) * log_p)

    def level(self, n):
        return self.A**2 - (self.A - n) ** 2

    def level_decay(self, n):
        return self.A - n

    def n_bound(self):
        # E_n = A^2 - (A - n)^2 increases only while n < A
        return int(math.ceil(self.A))

    def default_grid_bounds(self):
        lo = 1e-4
        hi = 25.0 * 2.0 / self.A
        while abs(psi1(self, 0, np.array([hi]))[0]) >= 1e-13 * _max_abs_psi0(self, lo, hi):
            hi *= 1.25
        return lo, hi

    def default_grid_nodes(self):
        return 6000


def _max_abs_psi0(p, lo, hi):
    return float(np.abs(psi1(p, 0, np.linspace(lo, hi, 2001))).max())


def make_family(kind, m=1, **params):
    """Build a family from a selector string: ``radial``, ``scarf`` or ``gpt``."""
    if kind == "radial":
        return RadialOscillator(float(params["omega"]), float(params["ell"]), m)
    if kind == "scarf":
        return ScarfI(float(params["A"]), float(params["B"]), m)
    if kind == "gpt":
        return GPT(float(params["A"]), float(params["B"]), m)
    raise ParameterError(f"unknown family {kind!r}; expected radial, scarf or gpt")


# ---------------------------------------------------------------------------
# public operations


def _prep(p, x):
    x = np.asarray(x, dtype=float)
    p.domain.check(x)
    return x


def _out(v):
    v = np.asarray(v)
    return v[()] if v.ndim == 0 else v


def _safe_den(p, z, x):
    d = np.asarray(p.denominator(z))
    if np.any(d == 0):
        bad = np.asarray(x)[d == 0].ravel()[0]
        raise SingularityError(f"extension denominator vanishes at x={bad!r} for {p.describe()}", bad)
    return d


def phi_ext(p, x):
    """Extended superpotential phi_con + phi_rat (the rational term as a ratio of polynomials)."""
    x = _prep(p, x)
    _safe_den(p, p.z(x), x)
    return _out(p.phi_con(x) + p.phi_rat(x))


def phi_ext_deriv(p, x):
    x = _prep(p, x)
    return _out(p.phi_con_deriv(x) + p.phi_rat_deriv(x))


def partner_potentials(p, x):
    """(V1, V2) = (phi^2 - phi', phi^2 + phi')."""
    phi = np.asarray(phi_ext(p, x))
    dphi = np.asarray(phi_ext_deriv(p, x))
    return _out(phi * phi - dphi), _out(phi * phi + dphi)


def psi1(p, n, x):
    """Normalised sector-1 eigenfunction, positive next to the lower wall."""
    _check_index(p, n)
    x = _prep(p, x)
    z = p.z(x)
    return _out(p.norm_constant(n) * p.weight(x) * p.numerator(n, z) / _safe_den(p, z, x))


def psi1_deriv(p, n, x):
    _check_index(p, n)
    x = _prep(p, x)
    z = p.z(x)
    w = p.weight(x)
    q, d = p.numerator(n, z), _safe_den(p, z, x)
    dq, dd = p.numerator_dz(n, z), p.denominator_dz(z)
    val = -p.phi_con(x) * w * q / d + w * p.dz(x) * (dq * d - q * dd) / (d * d)
    return _out(p.norm_constant(n) * val)


def energy(p, n, sector=1):
    _check_index(p, n, sector)
    return float(p.level(n + sector - 1))


def psi2(p, n, x):
    """Normalised sector-2 eigenfunction, defined so that A psi1_{n+1} = sqrt(E) psi2_n."""
    _check_index(p, n, sector=2)
    if isinstance(p, RadialOscillator):
        # shape invariance: sector 2 at ell is sector 1 at ell + 1, up to the sign
        # fixed by the intertwining relation
        return _out(-np.asarray(psi1(replace(p, ell=p.ell + 1), n, x)))
    x = _prep(p, x)
    e = p.level(n + 1)
    up = np.asarray(psi1(p, n + 1, x))
    dup = np.asarray(psi1_deriv(p, n + 1, x))
    return _out((dup + np.asarray(phi_ext(p, x)) * up) / math.sqrt(e))


def spectrum(p, sector=1, count=1):
    """Analytic levels of one partner Hamiltonian, truncated to bound states."""
    if sector not in (1, 2):
        raise ParameterError(f"sector must be 1 or 2, got {sector!r}")
    if count < 1:
        raise ParameterError(f"count must be >= 1, got {count}")
    available = p.n_bound() - (sector - 1)
    lines = []
    for n in range(int(min(count, available))):
        e = float(p.level(n + sector - 1))
        lines.append(SpectralLine(n, e, math.sqrt(e), sector))
    return lines
