from fractions import Fraction

import pytest

from odefock.errors import LengthExceedsOrder, TruncationMismatch
from odefock.partitions import Partition, partitions_up_to
from odefock.boson import (EPoly, SchurVector, elementary_partial,
                           epoly_to_schur, h_of_e, h_sequence, jacobi_trudi,
                           mult, pieri, schur_to_epoly, x_of_e)
from odefock.rings import Laurent, determinant


def e(i, r):
    return EPoly.gen(i, r)


def test_h_values():
    assert h_of_e(0, 3) == EPoly.one(3)
    assert h_of_e(1, 3) == e(1, 3)
    assert h_of_e(2, 2) == e(1, 2) * e(1, 2) - e(2, 2)
    assert not h_of_e(-3, 2)
    # unrolling the recurrence by hand at r=2
    assert h_of_e(3, 2) == e(1, 2) ** 3 - 2 * e(1, 2) * e(2, 2)


def test_h_as_e_determinant():
    # h_k = det(e_{j-i+1}) with e_0 = 1 and e vanishing past r
    for r in range(1, 4):
        for k in range(1, 7):
            matrix = [[e(j - i + 1, r) if j - i + 1 >= 0 else EPoly.zero(r)
                       for j in range(k)] for i in range(k)]
            assert determinant(matrix, EPoly.zero(r)) == h_of_e(k, r)


def test_x_values():
    assert x_of_e(1, 2) == e(1, 2)
    assert x_of_e(2, 2) == Fraction(1, 2) * e(1, 2) * e(1, 2) - e(2, 2)


def test_x_recurrence_consistency():
    # (r+1+j) x_{r+1+j} - (r+j) e_1 x_{r+j} + ... + (-1)^r j' e_r x_{j+1} = 0
    for r in (2, 3):
        for j in range(0, 4):
            acc = EPoly.zero(r)
            for i in range(r + 1):
                term = (r + 1 + j - i) * e(i, r) * x_of_e(r + 1 + j - i, r)
                acc = acc - term if i % 2 else acc + term
            assert not acc, (r, j)


def _poly_mul(a, b, order, r):
    out = [EPoly.zero(r) for _ in range(order + 1)]
    for i, ai in enumerate(a):
        if i > order:
            break
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] = out[i + j] + ai * bj
    return out


def test_x_exponentiates_to_h():
    # exp of the x-series reproduces the h-series through order 10
    order, r = 10, 3
    xs = [EPoly.zero(r)] + [x_of_e(n, r) for n in range(1, order + 1)]
    total = [EPoly.one(r)] + [EPoly.zero(r)] * order
    power = [EPoly.one(r)] + [EPoly.zero(r)] * order
    fact = 1
    for m in range(1, order + 1):
        power = _poly_mul(power, xs, order, r)
        fact *= m
        total = [t + Fraction(1, fact) * p for t, p in zip(total, power)]
    for n in range(order + 1):
        assert total[n] == h_of_e(n, r), n


def test_jacobi_trudi_examples():
    assert jacobi_trudi(Partition((1,)), h_sequence(2), 2) == e(1, 2)
    # |h_2 h_0; h_3 h_1| with the third e-generator truncated away
    assert jacobi_trudi(Partition((2, 1)), h_sequence(2), 2) == e(1, 2) * e(2, 2)


def test_jacobi_trudi_vanishes_beyond_length():
    for r in range(1, 4):
        for lam in partitions_up_to(6):
            if lam.length() != r + 1:
                continue
            assert not jacobi_trudi(lam, h_sequence(r), r + 1), (r, lam)


def test_jacobi_trudi_generates_h():
    for r in range(1, 5):
        for n in range(0, 11):
            assert jacobi_trudi(Partition((n,) if n else ()), h_sequence(r), r) \
                == h_of_e(n, r)


def test_pieri_display_example():
    v = SchurVector.basis((3, 2), 3)
    got = pieri(2, v)
    want = (SchurVector.basis((4, 3), 3) + SchurVector.basis((3, 3, 1), 3)
            + SchurVector.basis((4, 2, 1), 3))
    assert got == want


def test_pieri_degenerate_cases():
    v = SchurVector.basis((2, 1), 3) + SchurVector.basis((1,), 3).scale(Fraction(1, 2))
    assert pieri(0, v) == v
    assert pieri(1, SchurVector.basis((1,), 1)) == SchurVector.basis((2,), 1)
    assert not pieri(4, v)  # e_4 = 0 in B_3


def test_pieri_matches_epoly_oracle():
    for r in range(1, 5):
        for lam in partitions_up_to(8, r):
            v = SchurVector.basis(lam, r)
            as_e = schur_to_epoly(v)
            for i in range(r + 1):
                assert pieri(i, v) == epoly_to_schur(e(i, r) * as_e), (r, lam, i)


def test_epoly_to_schur_examples():
    assert epoly_to_schur(e(1, 2)) == SchurVector.basis((1,), 2)
    sq = e(1, 2) * e(1, 2)
    assert epoly_to_schur(sq) == SchurVector.basis((2,), 2) + SchurVector.basis((1, 1), 2)
    assert epoly_to_schur(sq - e(2, 2)) == SchurVector.basis((2,), 2)


def test_schur_to_epoly_examples():
    assert schur_to_epoly(SchurVector.basis((1,), 3)) == e(1, 3)
    assert schur_to_epoly(SchurVector.basis((1, 1), 2)) == e(2, 2)
    assert schur_to_epoly(SchurVector.basis((2,), 1)) == e(1, 1) * e(1, 1)


def test_conversion_round_trip_exhaustive():
    for r in range(1, 5):
        for lam in partitions_up_to(8, r):
            v = SchurVector.basis(lam, r).scale(Fraction(7, 3)) \
                - SchurVector.one(r).scale(2)
            assert epoly_to_schur(schur_to_epoly(v)) == v


def test_mult_examples():
    one = SchurVector.basis((1,), 2)
    assert mult(one, one) == SchurVector.basis((2,), 2) + SchurVector.basis((1, 1), 2)
    v = SchurVector.basis((2, 1), 2).scale(Fraction(3, 4))
    assert mult(SchurVector.one(2), v) == v
    b1 = SchurVector.basis((1,), 1)
    assert mult(b1, b1) == SchurVector.basis((2,), 1)


def test_mult_rejects_mixed_truncations():
    with pytest.raises(TruncationMismatch):
        mult(SchurVector.one(1), SchurVector.one(2))


def test_schur_vector_rejects_long_partitions():
    with pytest.raises(LengthExceedsOrder):
        SchurVector.basis((1, 1), 1)


def test_elementary_partial():
    assert elementary_partial(0, 3) == Laurent({0: EPoly.one(3)})
    assert elementary_partial(1, 3) == Laurent({0: EPoly.one(3), 1: -e(1, 3)})
    assert elementary_partial(2, 3) == Laurent(
        {0: EPoly.one(3), 1: -e(1, 3), 2: e(2, 3)})
    shifted = elementary_partial(2, 3, z_shift=-2)
    assert shifted == Laurent({-2: EPoly.one(3), -1: -e(1, 3), 0: e(2, 3)})


def test_epoly_json_round_trip():
    p = Fraction(7, 2) * e(1, 3) * e(3, 3) - e(2, 3)
    obj = p.to_obj()
    assert all(len(t["exps"]) == 3 for t in obj["terms"])
    assert EPoly.from_obj(obj) == p


def test_schur_vector_json_round_trip():
    v = SchurVector.basis((3, 2), 3).scale(Fraction(7, 2)) - SchurVector.one(3)
    obj = v.to_obj()
    assert obj["terms"][0]["partition"] == "3,2"
    assert obj["terms"][0]["coeff"] == "7/2"
    assert SchurVector.from_obj(obj) == v
