"""Bit-matrix linear maps: structure, builders, and cost figures."""

import random

import pytest

from conftest import first_irreducible
from ecadd.gf2field import IrreduciblePoly
from ecadd.linmaps import (
    BinMatrix,
    SingularMatrixError,
    matrix_of_const_mul,
    matrix_of_sqrt,
    matrix_of_squaring,
    random_invertible,
)


class TestBinMatrix:
    def test_identity(self):
        m = BinMatrix.identity(4)
        assert m.weight == 4
        assert m.max_degree == 1
        for v in range(16):
            assert m.apply(v) == v

    def test_from_lists_and_entry(self):
        m = BinMatrix.from_lists([[1, 0], [1, 1]])
        assert m.entry(0, 0) == 1 and m.entry(0, 1) == 0
        assert m.entry(1, 0) == 1 and m.entry(1, 1) == 1
        assert m.rows == (0b01, 0b11)

    def test_validation(self):
        with pytest.raises(ValueError):
            BinMatrix(0, ())
        with pytest.raises(ValueError):
            BinMatrix(2, (1,))
        with pytest.raises(ValueError):
            BinMatrix(2, (1, 4))  # bit outside width
        with pytest.raises(ValueError):
            BinMatrix.from_lists([[1, 0, 0], [0, 1, 0]])

    def test_weights_and_degree(self):
        m = BinMatrix.from_lists([
            [1, 1, 0],
            [0, 1, 0],
            [1, 1, 1],
        ])
        assert m.weight == 6
        assert m.row_weights == (2, 1, 3)
        assert m.col_weights == (2, 3, 1)
        assert m.max_degree == 3
        assert BinMatrix(3, (0, 0, 0)).max_degree == 0

    def test_transpose_involution(self, rng):
        for _ in range(50):
            n = rng.randint(1, 12)
            m = BinMatrix(n, tuple(rng.getrandbits(n) for _ in range(n)))
            t = m.transpose()
            assert t.transpose() == m
            assert t.row_weights == m.col_weights

    def test_matmul_matches_composed_apply(self, rng):
        for _ in range(50):
            n = rng.randint(1, 10)
            a = BinMatrix(n, tuple(rng.getrandbits(n) for _ in range(n)))
            b = BinMatrix(n, tuple(rng.getrandbits(n) for _ in range(n)))
            ab = a @ b
            for _ in range(10):
                v = rng.getrandbits(n)
                assert ab.apply(v) == a.apply(b.apply(v))

    def test_invert(self, rng):
        ident = BinMatrix.identity(6)
        for _ in range(40):
            m = random_invertible(6, rng)
            assert m @ m.invert() == ident
            assert m.invert() @ m == ident
        with pytest.raises(SingularMatrixError):
            BinMatrix(3, (0, 1, 2)).invert()
        assert not BinMatrix(2, (3, 3)).is_invertible()


class TestFieldMapBuilders:
    def test_const_mul_worked_example(self, f8):
        # Multiplication by 1+x+x^2 in F8 = F2[x]/(1+x+x^3).
        m = matrix_of_const_mul(f8.elem(0b111))
        assert m == BinMatrix.from_lists([
            [1, 1, 1],
            [1, 0, 0],
            [1, 1, 0],
        ])
        assert m.weight == 6
        assert m.max_degree == 3

    def test_squaring_worked_example(self, f128):
        # Squaring in F128 = F2[x]/(1+x+x^7).
        m = matrix_of_squaring(f128)
        assert m.weight == 10
        assert m.max_degree == 2

    def test_const_mul_matches_field_mul(self, rng):
        for n in (2, 3, 5, 8, 11):
            fld = first_irreducible(n)
            for _ in range(20):
                c = fld.elem(rng.getrandbits(n))
                if c.value == 0:
                    continue
                m = matrix_of_const_mul(c)
                for _ in range(10):
                    a = fld.elem(rng.getrandbits(n))
                    assert m.apply(a.value) == (c * a).value

    def test_const_mul_by_one_is_identity(self, f16):
        assert matrix_of_const_mul(f16.one()) == BinMatrix.identity(4)

    def test_const_mul_zero_rejected(self, f8):
        with pytest.raises(SingularMatrixError):
            matrix_of_const_mul(f8.zero())

    def test_squaring_and_sqrt_match_field_ops(self, rng):
        for n in (2, 3, 5, 8, 13):
            fld = first_irreducible(n)
            msq = matrix_of_squaring(fld)
            msr = matrix_of_sqrt(fld)
            for _ in range(40):
                a = fld.elem(rng.getrandbits(n))
                assert msq.apply(a.value) == a.square().value
                assert msr.apply(a.value) == a.sqrt().value

    def test_sqrt_inverts_squaring(self):
        for text in ("1+x+x^4", "1+x^3+x^6+x^7+x^163", "1+x^74+x^233"):
            fld = IrreduciblePoly.from_string(text)
            assert matrix_of_sqrt(fld) @ matrix_of_squaring(fld) \
                == BinMatrix.identity(fld.n)

    def test_nist_squaring_weight_is_column_popcount_sum(self):
        # Independent weight computation: weight = sum_i |x^(2i) mod p|.
        from ecadd.gf2field import poly_mod
        for text in ("1+x^3+x^6+x^7+x^163", "1+x^74+x^233",
                     "1+x^5+x^7+x^12+x^283"):
            fld = IrreduciblePoly.from_string(text)
            p = fld.poly.bits
            expect = sum(
                poly_mod(1 << (2 * i), p).bit_count() for i in range(fld.n)
            )
            assert matrix_of_squaring(fld).weight == expect

    def test_random_invertible_is_invertible(self, rng):
        for n in (1, 2, 7, 20):
            for _ in range(10):
                assert random_invertible(n, rng).is_invertible()
