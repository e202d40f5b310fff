"""Exact matrix arithmetic, factorizations, and polynomial invariants."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from ginv.field import IMAG, ONE, QI_CONJ, QI_IDENT, QQ, Scalar, ZERO
from ginv.matrix import (
    CoreNilpotent,
    DimensionMismatchError,
    ExactMatrix,
    NotInvertibleError,
    ZeroMatrixError,
    characteristic_polynomial,
    column_space_basis,
    core_nilpotent,
    full_rank_factorize,
    hstack,
    inverse,
    minimal_polynomial,
    null_space,
    rank,
    rref,
    schur_corner_inverse,
    vstack,
)
from ginv.polynomial import Polynomial, zero_multiplicity
from ginv.randgen import random_matrix

from .oracles import sympy_charpoly, sympy_inverse, sympy_rank

M = ExactMatrix.from_rows


def seeded(n: int) -> random.Random:
    return random.Random(f"matrix-tests:{n}")


class TestConstructionAndArithmetic:
    def test_from_rows_and_entry(self):
        a = M([[1, 2], [3, 4]], QQ)
        assert a.rows == 2 and a.cols == 2
        assert a.entry(1, 0) == Scalar(3)
        assert a.row_list(0) == [Scalar(1), Scalar(2)]
        assert a.col_list(1) == [Scalar(2), Scalar(4)]

    def test_from_rows_rejects_ragged_and_inadmissible(self):
        with pytest.raises(DimensionMismatchError):
            M([[1, 2], [3]], QQ)
        with pytest.raises(ValueError):
            M([[IMAG]], QQ)

    def test_identity_zeros_diagonal(self):
        assert ExactMatrix.identity(2, QQ) == M([[1, 0], [0, 1]], QQ)
        assert ExactMatrix.zeros(2, 3, QQ).is_zero()
        assert ExactMatrix.diagonal([Scalar(2), Scalar(5)], QQ) == M([[2, 0], [0, 5]], QQ)

    def test_add_sub_matmul_scale(self):
        a = M([[1, 2], [3, 4]], QQ)
        b = M([[0, 1], [1, 0]], QQ)
        assert a + b == M([[1, 3], [4, 4]], QQ)
        assert a - b == M([[1, 1], [2, 4]], QQ)
        assert a * b == M([[2, 1], [4, 3]], QQ)
        assert a.scale(Scalar(2)) == M([[2, 4], [6, 8]], QQ)
        assert 2 * a == a.scale(Scalar(2))
        assert a * Scalar(2) == a.scale(Scalar(2))

    def test_matmul_shape_check(self):
        with pytest.raises(DimensionMismatchError):
            M([[1, 2]], QQ) * M([[1, 2]], QQ)

    def test_power(self):
        a = M([[1, 1], [0, 1]], QQ)
        assert a**0 == ExactMatrix.identity(2, QQ)
        assert a**3 == M([[1, 3], [0, 1]], QQ)

    def test_transpose_and_adjoint(self):
        a = M([[Scalar(1, 2), Scalar(0, 1)]], QI_CONJ)
        assert a.transpose() == M([[Scalar(1, 2)], [Scalar(0, 1)]], QI_CONJ)
        assert a.adjoint() == M([[Scalar(1, -2)], [Scalar(0, -1)]], QI_CONJ)
        b = M([[Scalar(1, 2)]], QI_IDENT)
        assert b.adjoint() == b.transpose()  # identity involution: plain transpose

    def test_block_and_stack(self):
        a = M([[1]], QQ)
        b = M([[2]], QQ)
        grid = ExactMatrix.block([[a, b], [b, a]])
        assert grid == M([[1, 2], [2, 1]], QQ)
        assert hstack(a, b) == M([[1, 2]], QQ)
        assert vstack(a, b) == M([[1], [2]], QQ)

    def test_block_allows_zero_sized(self):
        a = M([[1, 2], [3, 4]], QQ)
        empty = ExactMatrix.zeros(2, 0, QQ)
        assert ExactMatrix.block([[a, empty]]) == a

    def test_sub_and_select_columns(self):
        a = M([[1, 2, 3], [4, 5, 6]], QQ)
        assert a.sub(0, 2, 1, 3) == M([[2, 3], [5, 6]], QQ)
        assert a.select_columns([2, 0]) == M([[3, 1], [6, 4]], QQ)

    def test_trace_and_is_square(self):
        a = M([[1, 2], [3, 4]], QQ)
        assert a.trace() == Scalar(5)
        assert a.is_square()
        assert not M([[1, 2]], QQ).is_square()

    def test_structural_equality_includes_cfg(self):
        a = M([[1]], QQ)
        b = M([[1]], QI_CONJ)
        assert a != b
        assert hash(a) != hash(b) or a != b


class TestRrefRankInverse:
    def test_rref_frozen_example(self):
        a = M([[1, 2, 3], [2, 4, 6], [1, 1, 1]], QQ)
        result = rref(a)
        assert result.pivot_cols == (0, 1)
        assert result.rank == 2
        assert result.reduced == M([[1, 0, -1], [0, 1, 2], [0, 0, 0]], QQ)

    def test_rank_against_sympy(self, fields):
        for cfg in fields:
            rng = seeded(1)
            for _ in range(15):
                a = random_matrix(rng, cfg, rng.randint(1, 5))
                assert rank(a) == sympy_rank(a)

    def test_inverse_round_trip_and_sympy(self, fields):
        for cfg in fields:
            rng = seeded(2)
            for _ in range(10):
                n = rng.randint(1, 5)
                a = random_matrix(rng, cfg, n, flavor="dense")
                if rank(a) < n:
                    continue
                inv = inverse(a)
                assert a * inv == ExactMatrix.identity(n, cfg)
                assert inv * a == ExactMatrix.identity(n, cfg)
                assert inv == sympy_inverse(a)

    def test_inverse_rejects_singular(self):
        with pytest.raises(NotInvertibleError):
            inverse(M([[1, 2], [2, 4]], QQ))

    def test_null_space(self):
        a = M([[1, 2, 3], [2, 4, 6], [1, 1, 1]], QQ)
        basis = null_space(a)
        assert basis.cols == 1
        assert (a * basis).is_zero()
        assert rank(basis) == 1

    def test_column_space_basis(self):
        a = M([[1, 2, 3], [2, 4, 6], [1, 1, 1]], QQ)
        b = column_space_basis(a)
        assert b.cols == 2
        assert b == a.select_columns([0, 1])


class TestFullRankFactorization:
    def test_factorization_properties(self, fields):
        for cfg in fields:
            rng = seeded(3)
            for _ in range(12):
                a = random_matrix(rng, cfg, rng.randint(1, 5))
                if a.is_zero():
                    with pytest.raises(ZeroMatrixError):
                        full_rank_factorize(a)
                    continue
                fr = full_rank_factorize(a)
                assert fr.f * fr.g == a
                assert fr.rank == rank(a)
                assert fr.f.cols == fr.rank and fr.g.rows == fr.rank
                assert rank(fr.f) == fr.rank
                assert rank(fr.g) == fr.rank


class TestPolynomials:
    def test_charpoly_frozen(self):
        a = M([[2, 1], [0, 2]], QQ)
        # det(lI - A) = (l-2)^2 = 4 - 4l + l^2
        assert characteristic_polynomial(a) == Polynomial(
            (Scalar(4), Scalar(-4), Scalar(1))
        )

    def test_minpoly_detects_defect(self):
        jordan = M([[2, 1], [0, 2]], QQ)
        diagonal = M([[2, 0], [0, 2]], QQ)
        assert minimal_polynomial(jordan).degree == 2
        assert minimal_polynomial(diagonal) == Polynomial((Scalar(-2), Scalar(1)))

    def test_charpoly_matches_sympy(self, fields):
        for cfg in fields:
            rng = seeded(4)
            for _ in range(10):
                a = random_matrix(rng, cfg, rng.randint(1, 5))
                assert characteristic_polynomial(a) == sympy_charpoly(a)

    def test_minpoly_annihilates_and_divides_charpoly(self, fields):
        for cfg in fields:
            rng = seeded(5)
            for _ in range(12):
                a = random_matrix(rng, cfg, rng.randint(1, 5))
                psi = minimal_polynomial(a)
                assert psi.leading() == ONE
                assert psi.eval_matrix(a).is_zero()
                assert psi.divides(characteristic_polynomial(a))

    def test_minpoly_index_on_nilpotent(self):
        n = M([[0, 1, 0], [0, 0, 1], [0, 0, 0]], QQ)
        psi = minimal_polynomial(n)
        assert psi == Polynomial.lambda_power(3)
        k, g = zero_multiplicity(psi)
        assert k == 3 and g == Polynomial.one()


class TestSchurCorner:
    def test_block_inverse(self):
        alpha = M([[1, 2], [3, 4]], QQ)
        beta = M([[1, 0], [0, 1]], QQ)
        gamma = M([[2, 0], [0, 3]], QQ)
        full = ExactMatrix.block([[alpha, beta], [gamma, ExactMatrix.identity(2, QQ)]])
        got = schur_corner_inverse(alpha, beta, gamma)
        assert full * got == ExactMatrix.identity(4, QQ)

    def test_matches_general_inverse(self, fields):
        for cfg in fields:
            rng = seeded(6)
            for _ in range(8):
                n = rng.randint(1, 3)
                r = rng.randint(1, 3)
                alpha = random_matrix(rng, cfg, n, flavor="dense")
                beta = ExactMatrix.from_rows(
                    [[Scalar(rng.randint(-3, 3)) for _ in range(r)] for _ in range(n)],
                    cfg,
                )
                gamma = ExactMatrix.from_rows(
                    [[Scalar(rng.randint(-3, 3)) for _ in range(n)] for _ in range(r)],
                    cfg,
                )
                full = ExactMatrix.block(
                    [[alpha, beta], [gamma, ExactMatrix.identity(r, cfg)]]
                )
                if rank(full) < n + r:
                    continue
                assert schur_corner_inverse(alpha, beta, gamma) == inverse(full)


class TestCoreNilpotent:
    def test_invertible_matrix_has_trivial_part(self):
        a = M([[2, 1], [1, 1]], QQ)
        cn = core_nilpotent(a)
        assert cn.index == 0
        assert cn.core.rows == 2
        assert cn.nilpotent.rows == 0

    def test_nilpotent_matrix_is_all_nilpotent(self):
        n = M([[0, 1], [0, 0]], QQ)
        cn = core_nilpotent(n)
        assert cn.index == 2
        assert cn.core.rows == 0

    def test_reassembly_and_block_properties(self, fields):
        for cfg in fields:
            rng = seeded(7)
            for _ in range(12):
                a = random_matrix(rng, cfg, rng.randint(1, 5))
                cn = core_nilpotent(a)
                n = a.rows
                assert cn.transform * cn.transform_inv == ExactMatrix.identity(n, cfg)
                middle = ExactMatrix.block(
                    [
                        [cn.core, ExactMatrix.zeros(cn.core.rows, cn.nilpotent.cols, cfg)],
                        [ExactMatrix.zeros(cn.nilpotent.rows, cn.core.cols, cfg), cn.nilpotent],
                    ]
                )
                assert cn.transform * middle * cn.transform_inv == a
                if cn.core.rows:
                    assert rank(cn.core) == cn.core.rows
                if cn.nilpotent.rows:
                    assert (cn.nilpotent ** max(cn.index, 1)).is_zero()
                k, _ = zero_multiplicity(minimal_polynomial(a)) if n else (0, None)
                assert cn.index == k
