from fractions import Fraction

from odefock.partitions import Partition, partitions_up_to
from odefock.boson import EPoly, SchurVector, epoly_to_schur, mult
from odefock.vertex import (LaurentBoson, check_inverse, check_multiplicative,
                            check_row_transform_det, g_strip, g_twisted,
                            g_vee, gamma, gamma_fermionic, gamma_vee,
                            gamma_vee_det, gamma_vee_fermionic, h_schur)


def basis(lam, r):
    return SchurVector.basis(lam, r)


def test_g_strip_on_one_row_classes():
    # h_n loses at most one cell: h_n - h_{n-1}/z
    for r in (1, 2, 3):
        for n in range(5):
            got = g_strip(h_schur(n, r))
            want = {0: h_schur(n, r)}
            if n >= 1:
                want[-1] = -h_schur(n - 1, r)
            assert got == LaurentBoson(r, want), (r, n)


def test_g_strip_unit_and_two_rows():
    assert g_strip(SchurVector.one(2)) == LaurentBoson.constant(SchurVector.one(2))
    got = g_strip(basis((2, 1), 2))
    want = LaurentBoson(2, {
        0: basis((2, 1), 2),
        -1: -(basis((1, 1), 2) + basis((2,), 2)),
        -2: basis((1,), 2),
    })
    assert got == want


def test_g_strip_weight_grading():
    for r in (2, 3):
        for lam in partitions_up_to(6, r):
            for zexp, sv in g_strip(basis(lam, r)).terms.items():
                assert all(mu.weight() == lam.weight() + zexp for mu in sv.terms)


def test_twisted_determinant_matches_strips():
    assert g_twisted(basis((1,), 2)) == LaurentBoson(
        2, {0: h_schur(1, 2), -1: -SchurVector.one(2)})
    assert g_twisted(SchurVector.one(3)) == LaurentBoson.constant(SchurVector.one(3))
    for r in (1, 2, 3):
        for lam in partitions_up_to(6, r):
            v = basis(lam, r)
            assert g_strip(v) == g_twisted(v), (r, lam)


def test_g_vee_accumulates_one_row_classes():
    got = g_vee(h_schur(2, 2))
    want = LaurentBoson(2, {0: h_schur(2, 2), -1: h_schur(1, 2),
                            -2: SchurVector.one(2)})
    assert got == want
    assert g_vee(SchurVector.one(2)) == LaurentBoson.constant(SchurVector.one(2))


def test_g_vee_two_row_value():
    # frozen via the determinant over the accumulated sequence
    got = g_vee(basis((1, 1), 2))
    want = LaurentBoson(2, {0: basis((1, 1), 2), -1: basis((1,), 2)})
    assert got == want


def test_gamma_worked_examples():
    # all non-negative powers cancel against the h-series
    assert gamma(h_schur(1, 1), 6) == LaurentBoson(
        1, {-1: -SchurVector.one(1)})
    assert gamma(h_schur(2, 1), 6) == LaurentBoson(
        1, {-1: -basis((1,), 1)})
    # on the unit class the operator reproduces the h-series itself
    got = gamma(SchurVector.one(2), 4)
    want = LaurentBoson(2, {n: h_schur(n, 2) for n in range(5)})
    assert got == want


def test_gamma_vee_on_unit_is_alternating_sum_over_z():
    for r in (1, 2, 3):
        got = gamma_vee(SchurVector.one(r))
        want = {}
        for i in range(r + 1):
            c = epoly_to_schur(EPoly.gen(i, r))
            want[i - 1] = c if i % 2 == 0 else -c
        assert got == LaurentBoson(r, want)


def test_gamma_vee_on_one_row_matches_linear_forms():
    # z * (dual operator on h_n) = z^-n - sum_j U_j(u_{n+1}) z^{j+1}
    from odefock.series import u_form, u_gen
    for r in (1, 2, 3):
        for n in (0, 1, 2, 4):
            got = gamma_vee(h_schur(n, r)).shift(1)
            want = {-n: SchurVector.one(r)}
            for j in range(r):
                form = u_form(j, u_gen(n + 1, r, j), r)
                sv = epoly_to_schur(form)
                if sv:
                    want[j + 1] = -sv
            assert got == LaurentBoson(r, want), (r, n)


def test_gamma_vee_exponent_band():
    for r in (1, 2, 3):
        for lam in partitions_up_to(5, r):
            got = gamma_vee(basis(lam, r))
            assert got.min_exp() >= -lam.part(0) - 1
            assert got.max_exp() <= r - 1


def test_dual_three_path_agreement():
    for r in (1, 2, 3):
        for lam in partitions_up_to(6, r):
            a = gamma_vee(basis(lam, r))
            b = gamma_vee_det(lam, r)
            c = gamma_vee_fermionic(lam, r)
            assert a == b == c, (r, lam)


def test_gamma_vee_det_one_row_case():
    # z^{-n} plus the single fattened correction, then divided by z
    r = 1
    for n in (0, 1, 3):
        got = gamma_vee_det(Partition((n,)) if n else Partition(), r)
        want = LaurentBoson(r, {-n - 1: SchurVector.one(r),
                                0: -h_schur(n + 1, r)})
        assert got == want


def test_fermionic_gamma_examples():
    assert gamma_fermionic(Partition((1,)), 1, 6) == LaurentBoson(
        1, {-1: -SchurVector.one(1)})
    got = gamma_fermionic(Partition(), 2, 2)
    assert got == LaurentBoson(2, {0: SchurVector.one(2),
                                   1: h_schur(1, 2), 2: h_schur(2, 2)})
    assert gamma_fermionic(Partition((2,)), 1, 6) == LaurentBoson(
        1, {-1: -basis((1,), 1)})


def test_gamma_path_agreement():
    for r in (1, 2, 3):
        for lam in partitions_up_to(6, r):
            assert gamma(basis(lam, r), 6) == gamma_fermionic(lam, r, 6), (r, lam)


def test_inverse_on_basis():
    for r in (1, 2, 3):
        for lam in partitions_up_to(6, r):
            assert check_inverse(basis(lam, r)), (r, lam)
    assert check_inverse(SchurVector.one(2))
    assert check_inverse(basis((3, 2, 1), 3))


def test_multiplicative_within_rank():
    assert check_multiplicative([2], 1)
    assert check_multiplicative([1, 2], 2)
    for r in (1, 2, 3):
        lists = [[1], [2], [1, 1], [2, 1], [3, 2], [1, 1, 1], [4, 2, 1]]
        for idx in lists:
            if len(idx) <= r:
                assert check_multiplicative(idx, r), (r, idx)


def test_multiplicative_fails_past_rank():
    assert not check_multiplicative([1, 1], 1)
    # the exact shape of the failure
    h1 = h_schur(1, 1)
    lhs = g_strip(mult(h1, h1))
    assert lhs == LaurentBoson(1, {0: h_schur(2, 1), -1: -h_schur(1, 1)})
    rhs = g_strip(h1) * g_strip(h1)
    assert rhs == LaurentBoson(1, {0: h_schur(2, 1),
                                   -1: h_schur(1, 1).scale(-2),
                                   -2: SchurVector.one(1)})
    assert lhs != rhs


def test_row_transform_determinants():
    assert check_row_transform_det(Partition((1,)), 1)
    assert check_row_transform_det(Partition(), 2)
    assert check_row_transform_det(Partition((2, 1)), 2)
    for r in (1, 2, 3):
        for lam in partitions_up_to(4, r):
            assert check_row_transform_det(lam, r), (r, lam)


def test_laurent_boson_json_round_trip():
    lb = gamma_vee(basis((2, 1), 2))
    obj = lb.to_obj()
    assert [t["zexp"] for t in obj["terms"]] == sorted(t["zexp"] for t in obj["terms"])
    assert LaurentBoson.from_obj(obj) == lb
