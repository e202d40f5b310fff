"""Group, Drazin, and Moore-Penrose inverses: routes, equations, uniqueness."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from ginv.field import IMAG, ONE, QI_CONJ, QI_IDENT, QQ, Scalar, ZERO
from ginv.geninv import (
    InverseKind,
    Method,
    cline_product_drazin,
    drazin_equations,
    drazin_inverse,
    drazin_via_core_nilpotent,
    group_inverse,
    left_inverse,
    moore_penrose,
    penrose_equations,
    right_inverse,
)
from ginv.matrix import ExactMatrix, inverse, rank
from ginv.polynomial import Polynomial
from ginv.randgen import jordan_sum, random_matrix

from .oracles import sympy_pinv

M = ExactMatrix.from_rows


def seeded(n: int) -> random.Random:
    return random.Random(f"geninv-tests:{n}")


class TestDrazin:
    def test_invertible_matrix_gives_plain_inverse(self):
        a = M([[2, 1], [1, 1]], QQ)
        d = drazin_inverse(a)
        assert d.index == 0
        assert d.inverse == inverse(a)

    def test_nilpotent_gives_zero(self):
        n = M([[0, 1], [0, 0]], QQ)
        d = drazin_inverse(n)
        assert d.index == 2
        assert d.inverse.is_zero()
        assert d.min_poly == Polynomial.lambda_power(2)

    def test_zero_and_empty(self):
        z = ExactMatrix.zeros(2, 2, QQ)
        d = drazin_inverse(z)
        assert d.inverse.is_zero() and d.index == 1
        e = ExactMatrix.zeros(0, 0, QQ)
        d0 = drazin_inverse(e)
        assert d0.index == 0 and d0.inverse.rows == 0

    def test_frozen_index_two_example(self):
        # block diag of invertible [[1]] and nilpotent [[0,1],[0,0]]
        a = M([[1, 0, 0], [0, 0, 1], [0, 0, 0]], QQ)
        d = drazin_inverse(a)
        assert d.index == 2
        assert d.inverse == M([[1, 0, 0], [0, 0, 0], [0, 0, 0]], QQ)

    def test_routes_agree(self, fields):
        for cfg in fields:
            rng = seeded(1)
            for _ in range(15):
                a = random_matrix(rng, cfg, rng.randint(0, 5))
                d1 = drazin_inverse(a)
                d2 = drazin_via_core_nilpotent(a)
                assert d1.inverse == d2.inverse
                assert d1.index == d2.index
                assert d1.min_poly == d2.min_poly

    def test_equations_and_uniqueness(self, fields):
        for cfg in fields:
            rng = seeded(2)
            for _ in range(10):
                a = random_matrix(rng, cfg, rng.randint(1, 5))
                d = drazin_inverse(a)
                eqs = drazin_equations(a, d.inverse, d.index)
                assert all(eqs.values()), eqs
                # uniqueness: any perturbation that still satisfies all
                # three equations must equal the computed inverse, so a
                # perturbed candidate must break at least one equation
                noise = random_matrix(rng, cfg, a.rows, flavor="dense")
                candidate = d.inverse + noise
                if candidate != d.inverse:
                    eqs2 = drazin_equations(a, candidate, d.index)
                    assert not all(eqs2.values())

    def test_jordan_structure_indices(self):
        rng = seeded(3)
        for want in (0, 1, 2, 3):
            a = jordan_sum(rng, QQ, want)
            assert drazin_inverse(a).index == want

    def test_cline_product_identity(self, fields):
        for cfg in fields:
            rng = seeded(4)
            for _ in range(8):
                n = rng.randint(1, 4)
                a = random_matrix(rng, cfg, n)
                b = random_matrix(rng, cfg, n)
                assert cline_product_drazin(a, b) == drazin_inverse(a * b).inverse


class TestGroup:
    def test_exists_iff_index_at_most_one(self, fields):
        for cfg in fields:
            rng = seeded(5)
            for _ in range(12):
                a = random_matrix(rng, cfg, rng.randint(1, 5))
                d = drazin_inverse(a)
                g = group_inverse(a)
                assert g.exists == (d.index <= 1)
                if g.exists:
                    assert g.matrix == d.inverse
                    assert g.index == d.index
                else:
                    assert g.matrix is None
                    assert g.reason == "GF is singular, so the index exceeds 1"

    def test_group_equations(self):
        a = M([[1, 1], [1, 1]], QQ)  # rank 1, trace nonzero -> group exists
        g = group_inverse(a)
        assert g.exists
        x = g.matrix
        assert a * x * a == a
        assert x * a * x == x
        assert a * x == x * a

    def test_zero_matrix_group(self):
        g = group_inverse(ExactMatrix.zeros(3, 3, QQ))
        assert g.exists and g.matrix.is_zero() and g.index == 1

    def test_empty_matrix_group(self):
        g = group_inverse(ExactMatrix.zeros(0, 0, QQ))
        assert g.exists and g.index == 0

    def test_report_shape(self):
        g = group_inverse(M([[0, 1], [0, 0]], QQ))
        assert g.kind is InverseKind.GROUP
        assert g.method is Method.GENERAL
        assert not g.exists


class TestMoorePenrose:
    def test_matches_sympy_conjugation(self, fields):
        for cfg in (QQ, QI_CONJ):
            rng = seeded(6)
            for _ in range(10):
                a = random_matrix(rng, cfg, rng.randint(1, 5))
                mp = moore_penrose(a)
                assert mp.exists  # always over Q / Q(i) with conjugation
                assert mp.matrix == sympy_pinv(a)

    def test_rectangular(self):
        a = M([[1, 0, 2], [0, 1, 1]], QQ)
        mp = moore_penrose(a)
        assert mp.exists
        assert all(penrose_equations(a, mp.matrix).values())
        assert mp.matrix.rows == 3 and mp.matrix.cols == 2

    def test_zero_matrix(self):
        mp = moore_penrose(ExactMatrix.zeros(2, 3, QQ))
        assert mp.exists
        assert mp.matrix == ExactMatrix.zeros(3, 2, QQ)

    def test_identity_involution_can_fail(self):
        # x = (1, i): the Gram x x^T = 1 + i^2 = 0 under the identity involution
        a = M([[1, IMAG]], QI_IDENT)
        mp = moore_penrose(a)
        assert not mp.exists
        assert mp.reason == "singular Gram matrix: GG*"
        # a genuinely two-sided failure names both Grams
        b = M([[1, IMAG], [IMAG, -1]], QI_IDENT)
        mp2 = moore_penrose(b)
        assert not mp2.exists
        assert mp2.reason == "singular Gram matrix: GG*, F*F"

    def test_identity_involution_success_passes_equations(self):
        a = M([[1, IMAG], [2, 3]], QI_IDENT)
        mp = moore_penrose(a)
        assert mp.exists
        assert all(penrose_equations(a, mp.matrix).values())

    def test_uniqueness_against_perturbation(self):
        rng = seeded(7)
        a = random_matrix(rng, QQ, 4)
        mp = moore_penrose(a)
        noise = random_matrix(rng, QQ, 4, flavor="dense")
        candidate = mp.matrix + noise
        if candidate != mp.matrix:
            assert not all(penrose_equations(a, candidate).values())


class TestPowerGroupPattern:
    def test_powers_acquire_group_inverse_exactly_at_index(self):
        rng = seeded(8)
        for want in (2, 3):
            a = jordan_sum(rng, QQ, want)
            for j in range(1, want):
                assert not group_inverse(a**j).exists
            assert group_inverse(a**want).exists


class TestOneSided:
    def test_right_inverse(self):
        a = M([[1, 0, 2], [0, 1, 1]], QQ)  # full row rank
        r = right_inverse(a)
        assert a * r.matrix == ExactMatrix.identity(2, QQ)

    def test_left_inverse(self):
        a = M([[1, 0], [0, 1], [2, 1]], QQ)  # full column rank
        l = left_inverse(a)
        assert l.matrix * a == ExactMatrix.identity(2, QQ)

    def test_rank_deficient_rejected(self):
        with pytest.raises(ValueError):
            right_inverse(M([[1, 2], [2, 4]], QQ))
        with pytest.raises(ValueError):
            left_inverse(M([[1, 2], [2, 4]], QQ))

    def test_gram_fallback_when_gram_singular(self):
        # full row rank over Q(i)/identity, but A A^T = 0: Gram route is
        # unavailable and elimination must take over
        a = M([[1, IMAG]], QI_IDENT)
        assert (a * a.adjoint()).is_zero()
        r = right_inverse(a)
        assert a * r.matrix == ExactMatrix.identity(1, QI_IDENT)
        assert not r.gram_based
