"""Block recurrences, determinants, and the polynomial-mapping factorization."""

from fractions import Fraction as F

import pytest

from sievedops.chebyshev import t_hat, u_hat
from sievedops.polycore import Poly, divide_exact
from sievedops.recurrence import (
    RegularityError,
    SievedFamily,
    SievedKind,
    block_coeff,
    classical_sieved,
    delta,
    gamma_flat,
    mapped_q,
    mapping_residual,
    monic_normalizer,
    pi_k_from_determinants,
    sieved_monic,
    ultraspherical,
)

FIRST, SECOND = SievedKind.FIRST, SievedKind.SECOND

FAM_C10 = SievedFamily(FIRST, F(3, 2), 5)
FAM_B14 = SievedFamily(SECOND, F(1, 2), 5)


def test_family_validation():
    with pytest.raises(ValueError):
        SievedFamily(FIRST, F(1, 2), 2)
    with pytest.raises(RegularityError):
        SievedFamily(FIRST, F(-1, 2), 3)
    with pytest.raises(RegularityError):
        SievedFamily(SECOND, F(-3), 4)
    # negative but regular values are fine
    SievedFamily(SECOND, F(-7, 6), 3)
    SievedFamily(FIRST, F(-1, 4), 4)


def test_block_coeff_examples():
    assert block_coeff(FAM_C10, 1, 0).a == F(1, 10)
    fam = SievedFamily(SECOND, F(1, 2), 4)
    assert block_coeff(fam, 0, fam.k - 1).a == F(1, 3)
    for fam2 in (FAM_C10, FAM_B14):
        for n in range(3):
            for j in range(fam2.k):
                assert block_coeff(fam2, n, j).b == 0


def test_block_coeff_conventions():
    # a_0^(0) = 1 by convention; first-kind a_0^(1) -> 1/2 in the lam=0 limit
    assert block_coeff(FAM_C10, 0, 0).a == 1
    fam0 = SievedFamily(FIRST, F(0), 3)
    assert block_coeff(fam0, 0, 1).a == F(1, 2)


def test_block_coeff_range_checks():
    with pytest.raises(ValueError):
        block_coeff(FAM_C10, 0, 5)
    with pytest.raises(ValueError):
        block_coeff(FAM_C10, -1, 0)


def test_sieved_monic_frozen_degree_10():
    p = sieved_monic(FAM_C10, 10)
    assert p == Poly.exact(
        [F(-1, 1280), 0, F(25, 256), 0, F(-25, 32), 0, F(35, 16), 0, F(-5, 2), 0, 1]
    )


def test_sieved_monic_base_cases():
    assert sieved_monic(FAM_B14, 0) == Poly.one()
    assert sieved_monic(FAM_B14, 1) == Poly.x()
    with pytest.raises(ValueError):
        sieved_monic(FAM_B14, -1)


def test_lambda_zero_degenerations():
    fam_t = SievedFamily(FIRST, F(0), 3)
    assert sieved_monic(fam_t, 6) == t_hat(6)
    fam_u = SievedFamily(SECOND, F(0), 3)
    for n in range(12):
        assert sieved_monic(fam_u, n) == u_hat(n)


def test_symmetry():
    for fam in (FAM_C10, FAM_B14, SievedFamily(SECOND, F(-1, 4), 4)):
        for n in range(12):
            p = sieved_monic(fam, n)
            flipped = Poly.exact(
                [(-1) ** (n - i) * c for i, c in enumerate(p.coeffs)]
            )
            assert flipped == p


def test_classical_normalization_figure_values():
    c10 = classical_sieved(FAM_C10, 10)
    assert c10 == Poly.exact(
        [F(-1, 4), 0, F(125, 4), 0, -250, 0, 700, 0, -800, 0, 320]
    )
    b14 = classical_sieved(FAM_B14, 14)
    assert b14 == Poly.exact(
        [F(-3, 2), 0, F(411, 2), 0, -3774, 0, 25200, 0, -79200, 0, 126720,
         0, -99840, 0, 30720]
    )
    assert monic_normalizer(FAM_C10, 0) == 1


def test_ultraspherical_examples():
    lam = F(3, 2)
    assert ultraspherical(lam, 1) == Poly.exact([0, 2 * lam])
    assert ultraspherical(F(0), 3) == Poly.exact([0, -3, 0, 4])
    assert ultraspherical(F(3, 2), 2) == Poly.exact([F(-3, 2), 0, F(15, 2)])


def test_mapped_q_base_cases():
    assert mapped_q(FAM_C10, 0) == Poly.one()
    assert mapped_q(FAM_C10, 1) == Poly.x()


def test_mapped_q_is_monic():
    for fam in (FAM_C10, FAM_B14, SievedFamily(SECOND, F(0), 4)):
        for n in range(1, 6):
            q = mapped_q(fam, n)
            assert q.degree == n and q.leading() == 1


def test_mapped_q_three_term_recurrence():
    # q_{n+1} = x q_n - s_n q_{n-1} with the s_n built from block coefficients
    x = Poly.x()
    four = F(4)
    for fam in (
        FAM_C10,
        FAM_B14,
        SievedFamily(FIRST, F(2), 4),
        SievedFamily(SECOND, F(-1, 4), 6),
    ):
        for n in range(1, 6):
            if fam.kind == SECOND:
                s = four ** (2 - fam.k) * block_coeff(fam, n, 0).a * block_coeff(
                    fam, n, fam.k - 1
                ).a
            else:
                s = four ** (2 - fam.k) * block_coeff(fam, n, 0).a * block_coeff(
                    fam, n - 1, 1
                ).a
            lhs = mapped_q(fam, n + 1)
            rhs = x * mapped_q(fam, n) - mapped_q(fam, n - 1).scale(s)
            assert lhs == rhs, (fam, n)


def test_delta_base_cases():
    assert delta(FAM_B14, 0, 3, 1) == Poly.one()
    assert delta(FAM_B14, 0, 3, 0).is_zero()
    with pytest.raises(ValueError):
        delta(FAM_B14, 0, 0, 2)


def test_delta_chebyshev_rows():
    # First kind: Delta_n(2, j) = U_hat(j) for 0 <= j <= k-1
    for n in range(3):
        for j in range(FAM_C10.k):
            assert delta(FAM_C10, n, 2, j) == u_hat(j)
    # Second kind: Delta_n(j+2, k-2) = U_hat(k-j-2)
    k = FAM_B14.k
    for n in range(3):
        for j in range(k - 1):
            assert delta(FAM_B14, n, j + 2, k - 2) == u_hat(k - j - 2)


def test_delta_block_shift_convention():
    # Delta_n(k+i, k+j) = Delta_{n+1}(i, j)
    for fam in (FAM_C10, FAM_B14):
        k = fam.k
        for n in range(2):
            for i in range(1, 4):
                for j in range(i - 2, k):
                    assert delta(fam, n, k + i, k + j) == delta(fam, n + 1, i, j)


def test_pi_k_assembly_matches_t_hat():
    for kind in (FIRST, SECOND):
        for k in range(3, 9):
            fam = SievedFamily(kind, F(3, 2), k)
            assert pi_k_from_determinants(fam) == t_hat(k)


def test_mapping_residual_zero_grid():
    for kind in (FIRST, SECOND):
        for k in (3, 5):
            for lam in (F(1, 2), F(-1, 4)):
                fam = SievedFamily(kind, lam, k)
                js = range(1, k + 1) if kind == FIRST else range(k)
                for n in range(4):
                    for j in js:
                        assert mapping_residual(fam, n, j).is_zero(), (fam, n, j)


def test_mapping_residual_index_checks():
    with pytest.raises(ValueError):
        mapping_residual(FAM_B14, 0, FAM_B14.k)
    with pytest.raises(ValueError):
        mapping_residual(FAM_C10, 0, 0)


def test_mapping_pure_block_boundaries():
    # p_{nk} (first kind) = q_n(T_hat(k)); second kind p_{nk+k-1} factorizes
    tk = t_hat(FAM_C10.k)
    for n in range(4):
        assert sieved_monic(FAM_C10, 5 * n) == mapped_q(FAM_C10, n).compose(tk)
        assert sieved_monic(FAM_B14, 5 * n + 4) == u_hat(4) * mapped_q(
            FAM_B14, n
        ).compose(tk)


def test_zero_sharing_exact_division():
    # second kind (lam-1, n+k-1) = U_hat(k-1) * first kind (lam, n) for k | n
    for lam in (F(3, 2), F(5, 2)):
        for k in (3, 5):
            for ell in (1, 2, 3):
                n = k * ell
                fam1 = SievedFamily(FIRST, lam, k)
                fam2 = SievedFamily(SECOND, lam - 1, k)
                big = sieved_monic(fam2, n + k - 1)
                quotient = divide_exact(big, u_hat(k - 1))
                assert quotient == sieved_monic(fam1, n)


def test_gamma_flat_positive_in_pd_range():
    for fam in (FAM_C10, FAM_B14):
        assert all(gamma_flat(fam, m) > 0 for m in range(1, 30))
    with pytest.raises(ValueError):
        gamma_flat(FAM_C10, 0)
