"""Pearson data, structure relations, and second-order ODE coefficients.

Two independent routes produce the structure pair (M_N, N_N): closed-form
Chebyshev expressions and the first-order recursion driven only by the
Pearson data and the recurrence coefficients.  The recursion is the trusted
oracle; the closed forms are what the tests put on trial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chebyshev import t_hat, u_hat
from .polycore import Poly, divide_exact, poly_gcd
from .recurrence import SievedFamily, SievedKind, gamma_flat, sieved_monic

U0 = Fraction(1)  # normalization <u, 1> := 1


def _u(n: int) -> Poly:
    """U_hat with every negative index taken as zero.

    The closed forms below reach indices -1..-3 at boundary j; taking all
    of them as zero reproduces the recursion exactly (checked in tests).
    """
    return Poly.zero() if n < 0 else u_hat(n)


@dataclass(frozen=True)
class PearsonData:
    phi: Poly
    psi: Poly
    c: Poly
    d: Poly
    u0: Fraction


@dataclass(frozen=True)
class StructurePair:
    m: Poly
    n: Poly
    index: int
    eps: Fraction


@dataclass(frozen=True)
class OdeData:
    j: Poly
    kk: Poly
    l: Poly
    omega: Poly


@lru_cache(maxsize=None)
def pearson_data(fam: SievedFamily) -> PearsonData:
    k, lam = fam.k, fam.lam
    x = Poly.x()
    one_minus_x2 = Poly.exact([1, 0, -1])
    uk1 = u_hat(k - 1)
    tk = t_hat(k)
    phi = one_minus_x2 * uk1
    if fam.kind == SievedKind.SECOND:
        psi = -((x * uk1).scale(2) + tk.scale(k * (2 * lam + 1)))
        c = -(x * uk1 + tk.scale(2 * k * lam))
        d = (uk1 + t_hat(k - 1).scale(k * lam)).scale(-2 * U0)
    else:
        psi = -tk.scale(k * (2 * lam + 1))
        c = x * uk1 - tk.scale(2 * k * lam)
        d = uk1.scale(-2 * k * lam * U0)
    return PearsonData(phi=phi, psi=psi, c=c, d=d, u0=U0)


def _eps(fam: SievedFamily, j: int) -> Fraction:
    if j == fam.k - 1:
        return Fraction(1)
    if fam.kind == SievedKind.SECOND:
        return Fraction(0) if j == fam.k - 2 else Fraction(1, 2)
    return Fraction(0) if j == 0 else Fraction(1, 2)


def structure_pair(fam: SievedFamily, big_n: int) -> StructurePair:
    """Closed-form (M_N, N_N) with N = nk + j."""
    if big_n < 0:
        raise ValueError("index must be >= 0")
    k, lam = fam.k, fam.lam
    n, j = divmod(big_n, k)
    uk1 = u_hat(k - 1)
    uk2 = u_hat(k - 2)
    x = Poly.x()
    lk = lam * k
    eps = _eps(fam, j)
    if fam.kind == SievedKind.SECOND:
        m = uk1.scale(-2 * (big_n + 1 + lk)) - (
            _u(j - 1) * _u(k - j - 2) - _u(j) * _u(k - j - 3)
        ).scale(lk / 2)
        nn = (
            (x * uk1).scale(big_n + 2 + 2 * lk)
            - uk2.scale(lk * eps)
            + (_u(j - 1) * _u(k - j - 3) - _u(j) * _u(k - j - 4)).scale(
                lk / 8
            )
        )
    else:
        m = uk1.scale(-2 * (big_n + lk)) - (
            _u(j - 1) * _u(k - j - 2) - _u(j - 2) * _u(k - j - 1)
        ).scale(lk / 2)
        nn = (
            (x * uk1).scale(big_n + 2 * lk)
            - uk2.scale(lk * eps)
            + (_u(j - 1) * _u(k - j - 3) - _u(j - 2) * _u(k - j - 2)).scale(
                lk / 8
            )
        )
    return StructurePair(m=m, n=nn, index=big_n, eps=eps)


def structure_pair_alternate(fam: SievedFamily, big_n: int) -> StructurePair:
    """The remark-style (M_N, N_N) built from single Chebyshev terms."""
    k, lam = fam.k, fam.lam
    n, j = divmod(big_n, k)
    uk1 = u_hat(k - 1)
    uk2 = u_hat(k - 2)
    x = Poly.x()
    lk = lam * k
    four = Fraction(4)
    if fam.kind == SievedKind.SECOND:
        delta_j = Fraction(1) if j <= k - 2 else Fraction(0)
        if j <= (k - 3) // 2:
            ukj = _u(k - 3 - 2 * j).scale(-(four ** (-j)))
        else:
            ukj = _u(2 * j - k + 1).scale(four ** (-k + j + 2))
        if j <= (k - 4) // 2:
            vkj = _u(k - 4 - 2 * j).scale(-(four ** (-j - 2)))
        else:
            vkj = _u(2 * j - k + 2).scale(four ** (-k + j + 1))
        m = uk1.scale(-2 * (big_n + 1 + lk * delta_j)) - ukj.scale(lk / 2)
        nn = (
            (x * uk1).scale(big_n + 2 + 2 * lk * delta_j)
            - uk2.scale(lk / 2)
            + vkj.scale(2 * lk)
        )
    else:
        delta_j = Fraction(0) if j == 0 else Fraction(1)
        if j <= (k - 1) // 2:
            ukj = _u(k - 1 - 2 * j).scale(four ** (1 - j))
        else:
            ukj = _u(2 * j - k - 1).scale(-(four ** (-k + j + 1)))
        if j <= (k - 2) // 2:
            vkj = _u(k - 2 - 2 * j).scale(four ** (-j))
        else:
            vkj = _u(2 * j - k).scale(-(four ** (-k + j + 1)))
        m = uk1.scale(-2 * (big_n + lk * delta_j)) - ukj.scale(lk / 2)
        nn = (
            (x * uk1).scale(big_n + 2 * lk)
            - uk2.scale(lk / 2)
            + vkj.scale(lk / 2)
        )
    return StructurePair(m=m, n=nn, index=big_n, eps=_eps(fam, j))


@lru_cache(maxsize=None)
def _recursive_table(fam: SievedFamily, upto: int) -> tuple:
    """(M_N, N_N) for N = 0..upto from the Pearson-driven recursion."""
    pd = pearson_data(fam)
    x = Poly.x()
    n_prev = -pd.c  # N_{-1}
    m_prev = Poly.zero()  # M_{-1}
    m_cur = pd.d.scale(1 / pd.u0)  # M_0
    pairs = []
    for big_n in range(upto + 1):
        n_cur = -pd.c - n_prev - x * m_cur
        pairs.append((m_cur, n_cur))
        gamma_next = gamma_flat(fam, big_n + 1)
        gamma_cur = gamma_flat(fam, big_n) if big_n >= 1 else Fraction(0)
        m_next = (
            -pd.phi + m_prev.scale(gamma_cur) + x * (n_prev - n_cur)
        ).scale(1 / gamma_next)
        m_prev, m_cur, n_prev = m_cur, m_next, n_cur
    return tuple(pairs)


def structure_pair_recursive(fam: SievedFamily, big_n: int) -> StructurePair:
    if big_n < 0:
        raise ValueError("index must be >= 0")
    m, nn = _recursive_table(fam, big_n)[big_n]
    return StructurePair(m=m, n=nn, index=big_n, eps=_eps(fam, big_n % fam.k))


def structure_residual(fam: SievedFamily, big_n: int) -> Poly:
    """Phi p_N' - M_N p_{N+1} - N_N p_N, with the closed-form pair."""
    pd = pearson_data(fam)
    sp = structure_pair(fam, big_n)
    p_n = sieved_monic(fam, big_n)
    p_n1 = sieved_monic(fam, big_n + 1)
    return pd.phi * p_n.derivative() - sp.m * p_n1 - sp.n * p_n


def _omega(fam: SievedFamily, big_n: int) -> Poly:
    k, lam = fam.k, fam.lam
    n, j = divmod(big_n, k)
    uk1 = u_hat(k - 1)
    lk = lam * k
    if fam.kind == SievedKind.SECOND:
        return uk1.scale((big_n + 1) * (big_n + 2 + 2 * lk)) - (
            _u(j) * _u(k - j - 3)
        ).scale(lk / 2)
    return uk1.scale((big_n + 1) * (big_n + 2 * lk)) + (
        _u(j - 1) * _u(k - j - 2)
    ).scale(lk / 2)


def ode_data(fam: SievedFamily, big_n: int) -> OdeData:
    """ODE coefficients J, K, L at index N from the closed-form pair."""
    pd = pearson_data(fam)
    sp = structure_pair(fam, big_n)
    omega = _omega(fam, big_n)
    j_pol = pd.phi * sp.m
    k_pol = pd.psi * sp.m - pd.phi * sp.m.derivative()
    l_pol = sp.n * sp.m.derivative() + (omega - sp.n.derivative()) * sp.m
    return OdeData(j=j_pol, kk=k_pol, l=l_pol, omega=omega)


def omega_generic(fam: SievedFamily, big_n: int) -> Poly:
    """Omega recovered by exact division, the dual route to _omega.

    (gamma_{N+1} M_N M_{N+1} - N_N (N_N + C)) / Phi, which must divide
    exactly.
    """
    pd = pearson_data(fam)
    sp = structure_pair(fam, big_n)
    sp1 = structure_pair(fam, big_n + 1)
    gamma = gamma_flat(fam, big_n + 1)
    numer = (sp.m * sp1.m).scale(gamma) - sp.n * (sp.n + pd.c)
    return divide_exact(numer, pd.phi)


def ode_residual(fam: SievedFamily, big_n: int) -> Poly:
    """J p'' + K p' + L p at index N; zero iff the ODE holds."""
    od = ode_data(fam, big_n)
    p = sieved_monic(fam, big_n)
    return od.j * p.derivative().derivative() + od.kk * p.derivative() + od.l * p


@dataclass(frozen=True)
class ClassInfo:
    value: int
    classical: bool


def semiclassical_class(fam: SievedFamily) -> ClassInfo:
    """Class after cancelling the common factor of (Phi, C, D).

    k-1 for lam != 0; class 0 with the classical flag for lam = 0.
    """
    pd = pearson_data(fam)
    g = poly_gcd(pd.phi, pd.c)
    if not pd.d.is_zero():
        g = poly_gcd(g, pd.d)
    phi = divide_exact(pd.phi, g)
    c = divide_exact(pd.c, g)
    d = pd.d if pd.d.is_zero() else divide_exact(pd.d, g)
    deg_c = c.degree
    deg_d = d.degree  # -inf for the zero polynomial
    s = int(max(deg_c - 1, deg_d))
    return ClassInfo(value=s, classical=(s == 0))
