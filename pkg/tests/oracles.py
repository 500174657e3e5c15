"""Independent reference implementations for the tests (mpmath, 30 digits).

Nothing here imports the package: classical polynomials come from explicit
finite sums or mpmath's hypergeometric routines, exceptional polynomials and
wavefunctions are rebuilt from their defining formulas, and integrals use
mpmath quadrature.
"""

import mpmath as mp

mp.mp.dps = 30


def laguerre_series(n, a, z):
    """L_n^(a)(z) = sum_k (-1)^k C(n+a, n-k) z^k / k!; returns (value, sum of |terms|)."""
    if n < 0:
        return mp.mpf(0), mp.mpf(0)
    a, z = mp.mpf(a), mp.mpf(z)
    terms = [(-1) ** k * mp.binomial(n + a, n - k) * z**k / mp.factorial(k) for k in range(n + 1)]
    return mp.fsum(terms), mp.fsum(abs(t) for t in terms)


def jacobi_series(n, a, b, z):
    """P_n^(a,b)(z) = sum_s C(n+a, n-s) C(n+b, s) ((z-1)/2)^s ((z+1)/2)^(n-s)."""
    if n < 0:
        return mp.mpf(0), mp.mpf(0)
    a, b, z = mp.mpf(a), mp.mpf(b), mp.mpf(z)
    terms = [
        mp.binomial(n + a, n - s) * mp.binomial(n + b, s) * ((z - 1) / 2) ** s * ((z + 1) / 2) ** (n - s)
        for s in range(n + 1)
    ]
    return mp.fsum(terms), mp.fsum(abs(t) for t in terms)


def L(n, a, z):
    return laguerre_series(n, a, z)[0]


def P(n, a, b, z):
    return jacobi_series(n, a, b, z)[0]


def x_laguerre(n, m, a, z):
    z = mp.mpf(z)
    return L(m, a, -z) * L(n, a - 1, z) + L(m, a - 1, -z) * L(n - 1, a, z)


def x_jacobi(n, m, a, b, z):
    a, b, z = mp.mpf(a), mp.mpf(b), mp.mpf(z)
    t1 = (1 + a + b + n) / (2 * (1 + a + n)) * (z - 1) * P(m, -a - 1, b - 1, z) * P(n - 1, a + 2, b, z)
    t2 = (1 + a - m) / (a + 1 + n) * P(m, -2 - a, b, z) * P(n, a + 1, b - 1, z)
    return (-1) ** m * (t1 + t2)


def erf(x):
    return mp.erf(mp.mpf(x))


# radial oscillator ----------------------------------------------------------------


def radial_norm(w, ell, n, m):
    a = mp.mpf(ell) + mp.mpf(1) / 2
    w = mp.mpf(w)
    return mp.sqrt(mp.factorial(n) * w ** (a + 1) / (2**a * (a + n + m) * mp.gamma(a + n)))


def radial_psi(w, ell, m, n, r, shift=0):
    """Psi^(1)_n with alpha -> alpha + shift (shift=1 gives the sector-2 form up to sign)."""
    w, ell, r = mp.mpf(w), mp.mpf(ell), mp.mpf(r)
    a = ell + mp.mpf(1) / 2 + shift
    z = w * r * r / 2
    return (
        radial_norm(w, ell + shift, n, m)
        * r ** (a + mp.mpf(1) / 2)
        * mp.exp(-z / 2)
        / L(m, a - 1, -z)
        * x_laguerre(n, m, a, z)
    )


def radial_phi(w, ell, m, r):
    w, ell, r = mp.mpf(w), mp.mpf(ell), mp.mpf(r)
    a = ell + mp.mpf(1) / 2
    z = w * r * r / 2
    return w * r / 2 - (ell + 1) / r + w * r * (L(m - 1, a, -z) / L(m, a - 1, -z) - L(m - 1, a + 1, -z) / L(m, a, -z))


def radial_v1_printed(w, ell, m, r):
    w, ell, r = mp.mpf(w), mp.mpf(ell), mp.mpf(r)
    a = ell + mp.mpf(1) / 2
    z = w * r * r / 2
    D = L(m, a - 1, -z)
    v_con = w**2 * r**2 / 4 + ell * (ell + 1) / r**2 - w * (ell + mp.mpf(3) / 2)
    v_rat = (
        -(w**2) * r**2 * L(m - 2, a + 1, -z) / D
        + 2 * w * (z + a - 1) * L(m - 1, a, -z) / D
        + 2 * w**2 * r**2 * (L(m - 1, a, -z) / D) ** 2
        - 2 * m * w
    )
    return v_con + v_rat


def radial_I1(r):
    """Printed closed form of I(r) for omega = 3, ell = 1, m = 1."""
    r = mp.mpf(r)
    return -mp.exp(-1.5 * r * r) * mp.sqrt(6 / mp.pi) * r * (5 + 10 * r**2 + 3 * r**4) / (5 * (1 + r * r)) + mp.erf(
        mp.sqrt(1.5) * r
    )


def radial_phi_hat(lam, r):
    """Printed zeta/xi/vartheta/Upsilon form; lam=0 is Pursey, lam=-1 is AM."""
    r = mp.mpf(r)
    s6 = mp.sqrt(6 / mp.pi)
    zeta = s6 * r * (100 + 145 * r**2 + 195 * r**4 + 117 * r**6 + 27 * r**8)
    xi = 5 * mp.exp(1.5 * r * r) * (-20 - 9 * r**2 + 12 * r**4 + 9 * r**6)
    th = s6 * r * (5 + 3 * r**2) * (5 + 10 * r**2 + 3 * r**4)
    up = 5 * mp.exp(1.5 * r * r) * (5 + 8 * r**2 + 3 * r**4)
    e = lam + mp.erf(mp.sqrt(1.5) * r)
    return -(zeta + xi * e) / (2 * r * (th - up * e))


# Jacobi families -------------------------------------------------------------------


def jacobi_family(kind, A, B, m):
    """Unnormalised Psi_n, phi and energies rebuilt from the family definitions."""
    A, B = mp.mpf(A), mp.mpf(B)
    half = mp.mpf(1) / 2
    if kind == "scarf":
        a, b = A - B - half, A + B - half
        zf = mp.sin
        weight = lambda z: (1 - z) ** ((A - B) / 2) * (1 + z) ** ((A + B) / 2)
        energy = lambda n: (A + n) ** 2 - A**2
    else:
        a, b = -A + B - half, -A - B - half
        zf = mp.cosh
        weight = lambda z: (z - 1) ** ((B - A) / 2) * (z + 1) ** (-(B + A) / 2)
        energy = lambda n: A**2 - (A - n) ** 2

    def psi(n, x):
        z = zf(mp.mpf(x))
        return weight(z) / P(m, -a - 1, b - 1, z) * x_jacobi(n, m, a, b, z)

    return psi, energy


def normalised(psi, n, lo, hi):
    """Psi_n / ||Psi_n|| with the sign fixed positive near ``lo``."""
    pts = [lo, hi] if hi < 50 else [lo, 5, 15, hi]
    norm = mp.sqrt(mp.quad(lambda y: psi(n, y) ** 2, pts))
    probe = lo + mp.mpf("1e-3")
    sign = 1 if psi(n, probe) > 0 else -1
    return lambda x: sign * psi(n, x) / norm
