import random
from fractions import Fraction

import pytest

from nkoszul.algebras import antisymmetrizer, enumerate_admissible, polynomial, quantum_space
from nkoszul.koszul import dual_koszul_subspace, nu
from nkoszul.manin import build_end, character_series, dual_character_series, evaluate_character
from nkoszul.mmt import (
    char_poly_coeffs,
    check_specializable,
    g_coefficient,
    g_table,
    matrix_det,
    mmt_check,
    nmt_check,
    nmt_rhs_denominator,
    principal_minor_sum,
    random_rational_matrix,
    restricted_trace,
)
from nkoszul.scalar import QQ
from nkoszul.series import MultiSeries


def ident(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def ones(n):
    return [[Fraction(1)] * n for _ in range(n)]


def zeros(n):
    return [[Fraction(0)] * n for _ in range(n)]


def test_random_matrix_deterministic():
    a = random_rational_matrix(3, 7)
    b = random_rational_matrix(3, 7)
    assert a == b
    assert a != random_rational_matrix(3, 8)
    for row in a:
        for v in row:
            # p in [-9, 9], q in [1, 9]; reduction only shrinks them
            assert -9 <= v.numerator <= 9
            assert 1 <= v.denominator <= 9


def test_specializable_builtins():
    rng = random.Random(21)
    for A in (polynomial(2), polynomial(3), antisymmetrizer(3, 3), antisymmetrizer(4, 3)):
        Z = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(A.n)] for _ in range(A.n)]
        assert check_specializable(A, Z), A.label


def test_specializable_quantum_fails():
    Q = quantum_space(2, q=2)
    assert not check_specializable(Q, ones(2))
    # and the guard is exactly "some relation is not killed": evaluate it
    # z_i^j -> 1 on relation x2⊗x1 - 2 x1⊗x2 pairs R^perp against a moved R
    assert check_specializable(Q, ident(2))  # diagonal matrices are fine


def test_g_identity_matrix_all_ones():
    A = antisymmetrizer(3, 3)
    tab = g_table(A, ident(3), 4)
    assert all(v == 1 for v in tab.values())
    assert g_coefficient(A, ident(3), (0, 2, 1)) == 1


def test_g_empty_word():
    assert g_coefficient(polynomial(2), ones(2), ()) == 1


def test_g_poly_allones_row_sums():
    # expansion of (x1+x2)^k: sum of G over degree-k exponent vectors is 2^k
    A = polynomial(2)
    tab = g_table(A, ones(2), 5)
    for k in range(6):
        total = sum(v for w, v in tab.items() if len(w) == k)
        assert total == 2**k


def test_g_rejects_non_admissible():
    A = antisymmetrizer(3, 3)
    with pytest.raises(ValueError):
        g_coefficient(A, ident(3), (2, 1, 0))


def test_g_rejects_non_specializable():
    Q = quantum_space(2, q=2)
    with pytest.raises(ValueError):
        g_coefficient(Q, ones(2), (0, 1))


def test_mmt_zero_and_identity():
    assert mmt_check(2, zeros(2), 4).passed
    res = mmt_check(2, ident(2), 5)
    assert res.passed
    # both sides are prod 1/(1-t_i): coefficient of any exponent vector is 1
    assert res.lhs.coefficient((2, 3)) == 1


def test_mmt_random():
    Z = random_rational_matrix(3, 7)
    assert mmt_check(3, Z, 5).passed


def test_mmt_detects_perturbation():
    # corrupt the right-hand side by perturbing one matrix entry on one side
    Z = random_rational_matrix(2, 3)
    res = mmt_check(2, Z, 4)
    assert res.passed
    Z2 = [row[:] for row in Z]
    Z2[0][0] += 1
    lhs = res.lhs
    rhs2 = mmt_check(2, Z2, 4).rhs
    assert lhs != rhs2


def test_nmt_identity_matrix():
    res = nmt_check(3, 3, ident(3), 5)
    assert res.passed
    denom = nmt_rhs_denominator(3, 3, ident(3), QQ, 5)
    expected = MultiSeries(
        QQ,
        3,
        5,
        {
            (0, 0, 0): Fraction(1),
            (1, 0, 0): Fraction(-1),
            (0, 1, 0): Fraction(-1),
            (0, 0, 1): Fraction(-1),
            (1, 1, 1): Fraction(1),
        },
    )
    assert denom == expected


def test_nmt_random():
    Z = random_rational_matrix(3, 11)
    assert nmt_check(3, 3, Z, 5).passed


def test_nmt_at_N2_coincides_with_mmt():
    # the epsilon-signed principal-minor sum at N=2 is det(I - ZT)
    Z = random_rational_matrix(3, 5)
    res_m = mmt_check(3, Z, 4)
    res_n = nmt_check(3, 2, Z, 4, algebra=polynomial(3))
    assert res_m.passed and res_n.passed
    assert res_m.lhs == res_n.lhs
    assert res_m.rhs == res_n.rhs


def test_char_poly_identity_matrix():
    assert char_poly_coeffs(ident(2)) == [Fraction(1), Fraction(-2), Fraction(1)]


def test_char_poly_c0_and_minor_bridge():
    rng = random.Random(23)
    for _ in range(10):
        M = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)] for _ in range(3)]
        coeffs = char_poly_coeffs(M)
        assert coeffs[0] == 1
        # evaluate at lambda = 1: det(I - M)
        eye_minus = [[Fraction(int(i == j)) - M[i][j] for j in range(3)] for i in range(3)]
        assert sum(coeffs) == matrix_det(eye_minus)
        for r in range(4):
            assert coeffs[r] == (-1) ** r * principal_minor_sum(M, r)


def test_char_poly_lambda_oracle():
    # independent oracle: Leibniz determinant over polynomials in lambda
    rng = random.Random(29)
    M = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]

    def poly_mul(p, q):
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            for j, b in enumerate(q):
                out[i + j] += a * b
        return out

    from itertools import permutations

    from nkoszul.algebras import perm_sign

    det = [Fraction(0)] * 4
    for perm in permutations(range(3)):
        prod = [Fraction(1)]
        for i in range(3):
            entry = [-M[i][perm[i]]]
            if perm[i] == i:
                entry = [-M[i][i], Fraction(1)]  # lambda - M_ii
            prod = poly_mul(prod, entry)
        sign = perm_sign(perm)
        for d, c in enumerate(prod):
            det[d] += c if sign > 0 else -c
    # det = sum c_r lambda^{3-r}
    coeffs = char_poly_coeffs(M)
    assert [det[3 - r] for r in range(4)] == coeffs


def test_numeric_ferm_equals_restricted_traces():
    # sum_J eps(|J|) det(Z_J) prod t_j specialized at t_j = t equals the
    # alternating restricted-trace series sum_l (-1)^l tr(Z^{⊗nu}|_J) t^nu
    for n, N in ((2, 2), (3, 3)):
        A = antisymmetrizer(n, N)
        Z = random_rational_matrix(n, 17)
        denom = nmt_rhs_denominator(n, N, Z, QQ, n + 2)
        by_total = {}
        for exps, c in denom.terms.items():
            by_total[sum(exps)] = by_total.get(sum(exps), Fraction(0)) + c
        ell = 0
        while nu(N, ell) <= n + 1:
            m = nu(N, ell)
            space = dual_koszul_subspace(A, m)
            tr = restricted_trace(Z, space, n, m)
            expected = by_total.get(m, Fraction(0))
            assert (-1) ** ell * tr == expected, (n, N, ell)
            ell += 1


def test_numeric_evaluation_of_character_series():
    # oracle agreement: evaluating the character series at Z reproduces the
    # numeric bosonic/fermionic series built from G data and minors
    for A in (polynomial(2), antisymmetrizer(3, 3)):
        B = build_end(A)
        Z = random_rational_matrix(A.n, 31)
        D = 4
        p = character_series(B, D)
        q = dual_character_series(B, D)
        tab = g_table(A, Z, D)
        for k in range(D + 1):
            bos_k = sum(
                (v for w, v in tab.items() if len(w) == k), Fraction(0)
            )
            assert evaluate_character(B, p.coeffs[k], Z) == bos_k, (A.label, k)
        denom = nmt_rhs_denominator(A.n, A.N, Z, QQ, D)
        by_total = {}
        for exps, c in denom.terms.items():
            by_total[sum(exps)] = by_total.get(sum(exps), Fraction(0)) + c
        for d in range(D + 1):
            assert evaluate_character(B, q.coeffs[d], Z) == by_total.get(d, Fraction(0)), (
                A.label,
                d,
            )


def test_g_table_matches_single_calls():
    A = antisymmetrizer(3, 3)
    Z = random_rational_matrix(3, 41)
    tab = g_table(A, Z, 3)
    for w in enumerate_admissible(3, 3, 3):
        assert tab[w] == g_coefficient(A, Z, w)
