"""Sieved ultraspherical families: block recurrences, determinants, mapping.

Both families are defined through the block three-term recurrence
(x - b) p_i = p_{i+1} + a p_{i-1} with all b = 0.  The polynomial-mapping
factorization expresses p_{kn+j} through monic Chebyshev polynomials and a
rescaled ultraspherical sequence q_n; mapping_residual checks that the two
constructions agree exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chebyshev import t_hat, u_hat
from .polycore import Poly

QUARTER = Fraction(1, 4)


class SievedKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"


class RegularityError(ValueError):
    """Parameter lambda hits a pole of the recurrence coefficients."""


def _check_regular(lam: Fraction):
    if lam < 0 and (2 * lam).denominator == 1:
        raise RegularityError(
            f"lambda={lam} is a negative half-integer; the family degenerates"
        )


@dataclass(frozen=True)
class SievedFamily:
    kind: SievedKind
    lam: Fraction
    k: int

    def __post_init__(self):
        if self.k < 3:
            raise ValueError(f"sieving order k must be >= 3, got {self.k}")
        object.__setattr__(self, "lam", Fraction(self.lam))
        _check_regular(self.lam)


@dataclass(frozen=True)
class BlockCoeffs:
    a: Fraction
    b: Fraction


def block_coeff(fam: SievedFamily, n: int, j: int) -> BlockCoeffs:
    """Recurrence coefficients a_n^(j), b_n^(j) of the block recurrence.

    a_0^(0) is the conventional value 1; it multiplies p_{-1} = 0 and never
    enters any computed polynomial.
    """
    if not 0 <= j < fam.k:
        raise ValueError(f"block index j={j} outside [0, {fam.k - 1}]")
    if n < 0:
        raise ValueError(f"block row n={n} must be >= 0")
    lam = fam.lam
    if fam.kind == SievedKind.FIRST:
        if j == 0:
            a = Fraction(1) if n == 0 else Fraction(n, 1) / (4 * (n + lam))
        elif j == 1:
            # at n=0 the formula is 2*lam/(4*lam); its lam->0 limit is 1/2
            a = Fraction(1, 2) if n == 0 else (n + 2 * lam) / (4 * (n + lam))
        else:
            a = QUARTER
    else:
        if j == 0:
            a = Fraction(1) if n == 0 else Fraction(n, 1) / (4 * (n + lam))
        elif j == fam.k - 1:
            a = (n + 1 + 2 * lam) / (4 * (n + 1 + lam))
        else:
            a = QUARTER
    return BlockCoeffs(a=a, b=Fraction(0))


def gamma_flat(fam: SievedFamily, m: int) -> Fraction:
    """Flattened recurrence coefficient: gamma_{nk+j} = a_n^(j), m >= 1."""
    if m < 1:
        raise ValueError("flattened index must be >= 1")
    return block_coeff(fam, m // fam.k, m % fam.k).a


@lru_cache(maxsize=None)
def _sieved_monic_table(fam: SievedFamily, upto: int) -> tuple:
    x = Poly.x()
    polys = [Poly.one()]
    if upto >= 1:
        polys.append(x)
    for m in range(1, upto):
        polys.append(x * polys[m] - polys[m - 1].scale(gamma_flat(fam, m)))
    return tuple(polys)


def sieved_monic(fam: SievedFamily, n: int) -> Poly:
    """Monic sieved polynomial of degree n, built from the block recurrence."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    return _sieved_monic_table(fam, n)[n]


def shifted_factorial(a: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


@lru_cache(maxsize=None)
def ultraspherical(lam: Fraction, n: int) -> Poly:
    """Classical (non-monic) ultraspherical polynomial C_n^lam.

    For lam = 0 the compatible definition C_n^0 = T_n is used.
    """
    lam = Fraction(lam)
    _check_regular(lam)
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if lam == 0:
        from .chebyshev import chebyshev_t

        return chebyshev_t(n)
    x = Poly.x()
    prev, cur = Poly.one(), x.scale(2 * lam)
    if n == 0:
        return prev
    for i in range(1, n):
        nxt = (x * cur.scale(2 * (i + lam)) - prev.scale(i + 2 * lam - 1)).scale(
            Fraction(1, i + 1)
        )
        prev, cur = cur, nxt
    return cur


def mapped_q(fam: SievedFamily, n: int) -> Poly:
    """Monic q_n of the mapping: a rescaled ultraspherical polynomial.

    First kind uses parameter lam, second kind lam + 1.  For parameter 0
    the Chebyshev limit 2 * 2^{-kn} T_n(2^{k-1} x) applies (n >= 1).
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    lam_q = fam.lam if fam.kind == SievedKind.FIRST else fam.lam + 1
    if n == 0:
        return Poly.one()
    scale_arg = Fraction(2) ** (fam.k - 1)
    if lam_q == 0:
        from .chebyshev import chebyshev_t

        base = chebyshev_t(n).compose_linear(scale_arg)
        return base.scale(2 * Fraction(2) ** (-fam.k * n))
    base = ultraspherical(lam_q, n).compose_linear(scale_arg)
    factor = shifted_factorial(Fraction(1), n) / (
        Fraction(2) ** (fam.k * n) * shifted_factorial(lam_q, n)
    )
    return base.scale(factor)


def monic_normalizer(fam: SievedFamily, n: int) -> Fraction:
    """Factor nu with p_n = nu * (classical sieved polynomial of degree n)."""
    lam = fam.lam
    if fam.kind == SievedKind.SECOND:
        blk = n // fam.k
        return shifted_factorial(Fraction(1), blk) / (
            Fraction(2) ** n * shifted_factorial(lam + 1, blk)
        )
    if n == 0:
        return Fraction(1)
    blk = (n - 1) // fam.k
    return shifted_factorial(2 * lam + 1, blk) / (
        Fraction(2) ** (n - 1) * shifted_factorial(lam + 1, blk)
    )


def classical_sieved(fam: SievedFamily, n: int) -> Poly:
    """Non-monic sieved polynomial in the classical normalization."""
    return sieved_monic(fam, n).scale(1 / monic_normalizer(fam, n))


def delta(fam: SievedFamily, n: int, i: int, j: int) -> Poly:
    """Tridiagonal determinant polynomial built from the block coefficients.

    Indices past k-1 wrap to the next block row; expansion along the last
    row keeps the work linear in j - i.
    """
    if i < 1:
        raise ValueError(f"index i must be >= 1, got {i}")

    def coeffs_at(idx: int) -> BlockCoeffs:
        return block_coeff(fam, n + idx // fam.k, idx % fam.k)

    if j < i - 2:
        return Poly.zero()
    if j == i - 2:
        return Poly.one()
    x = Poly.x()
    prev = Poly.one()
    cur = x - Poly.constant(coeffs_at(i - 1).b)
    for col in range(i, j + 1):
        c = coeffs_at(col)
        prev, cur = cur, (x - Poly.constant(c.b)) * cur - prev.scale(c.a)
    return cur


def pi_k_from_determinants(fam: SievedFamily) -> Poly:
    """The mapping polynomial assembled from determinant data: equals T_hat(k)."""
    k = fam.k
    if fam.kind == SievedKind.FIRST:
        # m = 0: theta_0 = 1, eta_{k-1} = Delta_0(2, k-1)
        return delta(fam, 0, 1, 0) * delta(fam, 0, 2, k - 1) - delta(
            fam, 0, 3, k - 1
        ).scale(block_coeff(fam, 0, 1).a)
    # m = k-1: eta_0 = 1; a_0^(k) wraps to a_1^(0)
    return delta(fam, 0, 1, k - 1) - delta(fam, 0, k + 2, 2 * k - 2).scale(
        block_coeff(fam, 1, 0).a
    )


def mapping_residual(fam: SievedFamily, n: int, j: int) -> Poly:
    """Exact difference between the recurrence and mapping constructions.

    Second kind (j in [0, k-1]):
        p_{kn+j} - (U_hat(j) q_n(T_hat(k))
                    + 4^{-j} a_n^(0) U_hat(k-j-2) q_{n-1}(T_hat(k)))
    First kind (j in [1, k]), multiplied through by U_hat(k-1):
        U_hat(k-1) p_{kn+j} - (U_hat(j-1) q_{n+1}(T_hat(k))
                    + 4^{1-j} a_n^(1) U_hat(k-j-1) q_n(T_hat(k)))
    """
    k = fam.k
    tk = t_hat(k)
    if fam.kind == SievedKind.SECOND:
        if not 0 <= j <= k - 1:
            raise ValueError(f"second kind needs j in [0, {k - 1}], got {j}")
        lhs = sieved_monic(fam, k * n + j)
        rhs = u_hat(j) * mapped_q(fam, n).compose(tk)
        if n >= 1:
            a0 = block_coeff(fam, n, 0).a
            rhs = rhs + (u_hat(k - j - 2) * mapped_q(fam, n - 1).compose(tk)).scale(
                a0 * Fraction(4) ** (-j)
            )
        return lhs - rhs
    if not 1 <= j <= k:
        raise ValueError(f"first kind needs j in [1, {k}], got {j}")
    lhs = u_hat(k - 1) * sieved_monic(fam, k * n + j)
    a1 = block_coeff(fam, n, 1).a
    rhs = u_hat(j - 1) * mapped_q(fam, n + 1).compose(tk) + (
        u_hat(k - j - 1) * mapped_q(fam, n).compose(tk)
    ).scale(a1 * Fraction(4) ** (1 - j))
    return lhs - rhs
