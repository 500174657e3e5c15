"""Command-line entry point: curves, spectra and verification reports.

    dirac-iso potential    --family radial --lambda 0,0.05,0.1,1,inf --out radial.csv
    dirac-iso potential    --family gpt "--lambda=-1.1,-1.01,-1.001,-1"
    dirac-iso wavefunction --family scarf --n 0 --lambda 0.001,0.1,1,inf
    dirac-iso spectrum     --family gpt --k 4
    dirac-iso verify       --family radial --format report-tree

Lambda lists are comma separated; ``inf``/``-inf``/``undeformed``, ``0``/``pursey``
and ``-1``/``am`` select the limits.  Lists starting with a minus sign must be
attached with ``=`` so they are not mistaken for options.

CSV output is plain text (``x`` plus one column per deformation), so any
plotting tool can draw it, e.g. in gnuplot:

    set datafile separator ','
    plot for [i=2:*] 'radial.csv' using 1:i with lines title columnhead

Exit codes: 0 success, 1 a verification check failed, 2 usage or parameter
error, 3 numerical failure (singularity, quadrature or solver convergence).
"""

import argparse
import csv
import io
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__
from . import deform as dm
from . import families as fam
from . import verify as vf
from .errors import (
    BoundStateIndexError,
    DomainError,
    NumericalError,
    ParameterError,
    SpuriousEigenvalueError,
)
from .numerics import GridSpec

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

_KEYWORDS = {
    "inf": math.inf,
    "+inf": math.inf,
    "-inf": -math.inf,
    "undeformed": math.inf,
    "pursey": 0.0,
    "am": -1.0,
}

_FAMILY_DEFAULTS = {
    "radial": {"omega": 3.0, "ell": 1.0},
    "scarf": {"A": 4.0, "B": 2.0},
    "gpt": {"A": 2.0, "B": 5.0},
}


class UsageError(Exception):
    pass


def parse_lambda_list(text):
    """'0,0.05,inf' -> [Deformation, ...]; raises ArgumentTypeError naming the rule."""
    out = []
    for token in filter(None, (t.strip() for t in text.split(","))):
        key = token.lower()
        try:
            value = _KEYWORDS[key] if key in _KEYWORDS else float(token)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"invalid lambda {token!r}: expected a number, inf, -inf, pursey, am or undeformed"
            ) from None
        if math.isnan(value):
            raise argparse.ArgumentTypeError("lambda may not be nan")
        if -1.0 < value < 0.0:
            raise argparse.ArgumentTypeError(
                f"lambda={token} rejected: lambda in (-1, 0) makes the denominator I(x)+lambda"
                " vanish inside the domain (valid: lambda > 0 or lambda < -1; 0 = pursey, -1 = am)"
            )
        out.append(dm.Deformation.from_value(value))
    return out


def _dedupe(deformations):
    seen, out = set(), []
    for d in deformations:
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out


def _column(prefix, d):
    if d.kind is dm.DeformationKind.GENERIC:
        return f"{prefix}_lambda={d.lam!r}"
    return f"{prefix}_{d.kind.value}"


def build_family(args):
    defaults = _FAMILY_DEFAULTS[args.family]
    if args.family == "radial":
        if args.A is not None or args.B is not None:
            raise UsageError("--A/--B apply to scarf and gpt; the radial family takes --omega/--ell")
        params = {
            "omega": defaults["omega"] if args.omega is None else args.omega,
            "ell": defaults["ell"] if args.ell is None else args.ell,
        }
    else:
        if args.omega is not None or args.ell is not None:
            raise UsageError(f"--omega/--ell apply to the radial family, not {args.family}")
        params = {
            "A": defaults["A"] if args.A is None else args.A,
            "B": defaults["B"] if args.B is None else args.B,
        }
    return fam.make_family(args.family, m=args.m, **params)


def _base_grid(p, args):
    n = args.grid_n if args.grid_n is not None else p.default_grid_nodes()
    return p.default_grid().with_nodes(n)


def _output_grid(p, args, table, deformations):
    """Default window, narrowed to where Pursey / AM denominators are nonsingular.

    Explicit --xmin/--xmax are used as given; a singular point then raises.
    """
    base = _base_grid(p, args)
    lo, hi = base.x_min, base.x_max
    for d in deformations:
        if d.kind in (dm.DeformationKind.PURSEY, dm.DeformationKind.ABRAHAM_MOSES):
            a, b = table.safe_interval(d)
            lo, hi = max(lo, a), min(hi, b)
    lo = lo if args.xmin is None else args.xmin
    hi = hi if args.xmax is None else args.xmax
    for edge in (lo, hi):
        if not p.domain.contains(edge):
            raise DomainError(
                f"grid cut {edge!r} is outside the open domain"
                f" ({p.domain.lower!r}, {p.domain.upper!r}) of {p.describe()}"
            )
    return GridSpec(lo, hi, base.n)


def _format(v):
    return "%.17g" % v


def render_csv(header, columns):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in zip(*columns):
        writer.writerow([_format(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def write_output(text, path):
    """Write to ``path`` atomically (temp file + rename), or stdout when path is None."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _require_csv(args):
    if args.format != "csv":
        raise UsageError(f"{args.command} writes csv; --format {args.format} applies to verify")


def cmd_potential(args):
    _require_csv(args)
    p = build_family(args)
    deformations = _dedupe(args.deformations) or [dm.Deformation.undeformed()]
    table = dm.compute_I(p, p.default_grid())
    grid = _output_grid(p, args, table, deformations)
    x = grid.nodes
    header, cols = ["x"], [x.tolist()]
    for d in deformations:
        header.append(_column("phi", d))
        cols.append(np.asarray(dm.phi_lambda(p, d, x, table), dtype=float).tolist())
    write_output(render_csv(header, cols), args.out)
    return EXIT_OK


def _wavefunction(p, d, n, x, table):
    """Normalised level-n state of the deformed potential (same energy E_n in every column)."""
    if d.kind is dm.DeformationKind.UNDEFORMED:
        return fam.psi1(p, n, x)
    if n == 0:
        if not d.has_ground_state:
            raise UsageError(
                f"the {d.label} potential has no ground state (it is deleted); its levels start at --n 1"
            )
        return dm.psi0_lambda(p, d, x, table)
    return dm.psi_excited_lambda(p, d, n - 1, x, table, normalize=True)


def cmd_wavefunction(args):
    _require_csv(args)
    p = build_family(args)
    if args.n < 0 or args.n >= p.n_bound():
        valid = "n >= 0" if math.isinf(p.n_bound()) else f"0 <= n <= {p.n_bound() - 1}"
        raise BoundStateIndexError(f"--n {args.n} is not a bound state of {p.describe()}: need {valid}")
    if args.divide_by_r and p.kind != "radial":
        raise UsageError("--divide-by-r applies only to the radial family")
    deformations = _dedupe(args.deformations) or [dm.Deformation.undeformed()]
    table = dm.compute_I(p, p.default_grid())
    grid = _output_grid(p, args, table, deformations)
    x = grid.nodes
    header, cols = ["x"], [x.tolist()]
    for d in deformations:
        values = np.asarray(_wavefunction(p, d, args.n, x, table), dtype=float)
        if args.divide_by_r:
            values = values / x
        header.append(_column("psi", d))
        cols.append(values.tolist())
    write_output(render_csv(header, cols), args.out)
    return EXIT_OK


def cmd_spectrum(args):
    _require_csv(args)
    p = build_family(args)
    if args.k < 1:
        raise UsageError(f"--k must be >= 1, got {args.k}")
    rows = []
    for name, sector in (("sector1", 1), ("sector2", 2), ("pursey", 2), ("am", 2)):
        lines = fam.spectrum(p, sector, args.k)
        if len(lines) < args.k:
            print(
                f"note: {name} has only {len(lines)} bound state(s) for {p.describe()}"
                f" (requested {args.k})",
                file=sys.stderr,
            )
        rows += [(name, str(line.n), float(line.E), float(line.epsilon)) for line in lines]
    write_output(render_csv(["spectrum", "n", "E", "epsilon"], list(zip(*rows))), args.out)
    return EXIT_OK


def cmd_verify(args):
    fmt = args.format if args.format != "csv" else "report-text"
    if args.format_explicit and args.format == "csv":
        raise UsageError("verify writes report-text or report-tree, not csv")
    p = build_family(args)
    generic = []
    for d in args.deformations:
        if d.kind is not dm.DeformationKind.GENERIC:
            raise UsageError(
                f"verify --lambda takes generic values (lambda > 0 or lambda < -1); {d.label}"
                " is checked automatically"
            )
        generic.append(d.lam)
    lambdas = generic or [0.05, 0.1, 1.0, 10.0]
    grid = _base_grid(p, args)
    if args.xmin is not None or args.xmax is not None:
        grid = GridSpec(
            grid.x_min if args.xmin is None else args.xmin,
            grid.x_max if args.xmax is None else args.xmax,
            grid.n,
        )
    report = vf.run_all(p, lambdas=lambdas, k=args.k, n_max=args.n_max, grid=grid)
    text = report.to_json() if fmt == "report-tree" else report.to_text()
    write_output(text, args.out)
    if not report.passed:
        for c in report.failures():
            print(f"check failed: {c.name} (measured {c.measured:.3g}, tolerance {c.tolerance:.3g})",
                  file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


class _FormatAction(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        namespace.format_explicit = True


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dirac-iso",
        description="Isospectral deformations of rationally extended Dirac scalar potentials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=sorted(_FAMILY_DEFAULTS), default="radial")
    common.add_argument("--omega", type=float, help="radial: oscillator frequency (default 3)")
    common.add_argument("--ell", type=float, help="radial: angular momentum l > 0 (default 1)")
    common.add_argument("--A", type=float, help="scarf/gpt: A (defaults 4 and 2)")
    common.add_argument("--B", type=float, help="scarf/gpt: B (defaults 2 and 5)")
    common.add_argument("--m", type=int, default=1, help="extension order m >= 1")
    common.add_argument(
        "--lambda",
        dest="lambda_lists",
        action="append",
        type=parse_lambda_list,
        default=[],
        metavar="LIST",
        help="comma-separated lambda values or inf/-inf/pursey/am/undeformed;"
        " use --lambda=-1.1,... for lists starting with a minus sign",
    )
    common.add_argument("--grid-n", type=int, help="number of grid nodes (>= 200)")
    common.add_argument("--xmin", type=float, help="lower grid cut (inside the domain)")
    common.add_argument("--xmax", type=float, help="upper grid cut (inside the domain)")
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument(
        "--format",
        choices=["csv", "report-text", "report-tree"],
        default="csv",
        action=_FormatAction,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("potential", parents=[common], help="phi(x, lambda) curves as CSV")
    p.set_defaults(func=cmd_potential)

    w = sub.add_parser("wavefunction", parents=[common], help="normalised deformed states as CSV")
    w.add_argument("--n", type=int, default=0, help="level index (energy E_n)")
    w.add_argument("--divide-by-r", action="store_true", help="radial only: emit psi / r")
    w.set_defaults(func=cmd_wavefunction)

    s = sub.add_parser("spectrum", parents=[common], help="analytic spectra as CSV")
    s.add_argument("--k", type=int, default=4, help="levels per spectrum")
    s.set_defaults(func=cmd_spectrum)

    v = sub.add_parser("verify", parents=[common], help="run all checks, exit 1 on failure")
    v.add_argument("--k", type=int, default=4, help="eigenvalues per solve")
    v.add_argument("--n", dest="n_max", type=int, default=3, help="highest state index checked")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format_explicit = getattr(args, "format_explicit", False)
    args.deformations = [d for group in args.lambda_lists for d in group]
    try:
        return args.func(args)
    except (UsageError, ParameterError, DomainError, BoundStateIndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SpuriousEigenvalueError as exc:
        print(f"spurious eigenvalue: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
