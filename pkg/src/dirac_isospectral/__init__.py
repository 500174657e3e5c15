"""Isospectral deformations of rationally extended Dirac scalar potentials.

Modules:

* ``specfun``  classical and exceptional orthogonal polynomials, erf
* ``families`` radial oscillator, Scarf-I and GPT superpotentials and states
* ``deform``   the lambda family, Pursey and Abraham-Moses limits
* ``numerics`` grids, quadrature, finite differences, Dirichlet eigensolver
* ``verify``   analytic claims as checks with structured reports
* ``cli``      command-line entry point
"""

__version__ = "0.1.0"

from .deform import Deformation, DeformationKind, IntegralTable, compute_I
from .errors import (
    BoundStateIndexError,
    ConvergenceError,
    DomainError,
    IsospectralError,
    NumericalError,
    ParameterError,
    QuadratureError,
    SingularityError,
    SpuriousEigenvalueError,
)
from .families import GPT, RadialOscillator, ScarfI, make_family
from .numerics import GridSpec, fd_eigensolve

__all__ = [
    "__version__",
    "Deformation",
    "DeformationKind",
    "IntegralTable",
    "compute_I",
    "GPT",
    "RadialOscillator",
    "ScarfI",
    "make_family",
    "GridSpec",
    "fd_eigensolve",
    "IsospectralError",
    "ParameterError",
    "DomainError",
    "BoundStateIndexError",
    "NumericalError",
    "SingularityError",
    "QuadratureError",
    "ConvergenceError",
    "SpuriousEigenvalueError",
]
