"""Grothendieck-ring classes: atoms, scissor calculus, duality."""

import pytest

from hirzebruch import motivic as mo
from hirzebruch.errors import InvalidParameter
from hirzebruch.hodge import HodgeDiamond
from hirzebruch.rings import LaurentY, PolyUV, invert_uv


def scissor_projective(n):
    """Independent oracle: P^n = A^n + P^(n-1), starting from a point."""
    cls = mo.point()
    for k in range(1, n + 1):
        cls = mo.affine(k) + cls
    return cls


def inclusion_exclusion_e(n, k):
    """Independent oracle for the complement E-polynomial."""
    total = mo.projective(n).e_polynomial()
    binom = 1
    for s in range(1, min(k, n) + 1):
        binom = binom * (k - s + 1) // s
        term = mo.projective(n - s).e_polynomial() * binom
        total = total - term if s % 2 == 1 else total + term
    return total


class TestAtoms:
    def test_lefschetz(self):
        L = mo.lefschetz()
        assert L.realization == HodgeDiamond({(1, 1): 1})
        assert L.e_polynomial() == PolyUV({(1, 1): 1})

    def test_torus_is_affine_line_minus_point(self):
        assert mo.torus() == mo.affine(1) - mo.point()
        assert mo.torus().realization == HodgeDiamond({(1, 1): 1, (0, 0): -1})

    @pytest.mark.parametrize("n", range(5))
    def test_projective_by_scissor_recursion(self, n):
        assert mo.projective(n) == scissor_projective(n)

    def test_projective_two_table(self):
        assert mo.projective(2).realization == HodgeDiamond({(0, 0): 1, (1, 1): 1, (2, 2): 1})

    def test_curve_table(self):
        assert mo.curve(2).realization == HodgeDiamond(
            {(0, 0): 1, (1, 0): -2, (0, 1): -2, (1, 1): 1})

    def test_invalid_parameters(self):
        for bad in (lambda: mo.projective(-1), lambda: mo.affine(-2), lambda: mo.curve(-1)):
            with pytest.raises(InvalidParameter):
                bad()


class TestCombine:
    def test_line_minus_point_is_lefschetz(self):
        assert mo.projective(1) - mo.point() == mo.lefschetz()

    def test_product_of_lines(self):
        got = (mo.projective(1) * mo.projective(1)).e_polynomial()
        one_uv = PolyUV.one() + PolyUV({(1, 1): 1})
        assert got == one_uv * one_uv

    def test_two_line_complement(self):
        cls = mo.projective(2) - 2 * mo.projective(1) + mo.point()
        assert cls.e_polynomial() == PolyUV({(2, 2): 1, (1, 1): -1})
        assert cls == mo.arrangement_complement(2, 2)

    @pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 4) for k in range(n + 2)])
    def test_arrangement_complement_matches_inclusion_exclusion(self, n, k):
        assert mo.arrangement_complement(n, k).e_polynomial() == inclusion_exclusion_e(n, k)

    def test_chi_y_is_multiplicative(self):
        a, b = mo.projective(2), mo.curve(1)
        assert (a * b).chi_y() == a.chi_y() * b.chi_y()

    def test_expression_display(self):
        cls = mo.projective(2) - 2 * mo.projective(1) + mo.point()
        assert str(cls) == "P2 - 2*P1 + pt"


class TestDual:
    def test_dual_of_line(self):
        assert mo.projective(1).dual().realization == HodgeDiamond({(-1, -1): 1, (0, 0): 1})

    def test_dual_of_point(self):
        assert mo.point().dual() == mo.point()

    def test_dual_of_lefschetz_from_additivity(self):
        # D(L) = D(P1) - D(pt), and equals the table of L^(-1)
        got = mo.projective(1).dual() - mo.point().dual()
        assert got == mo.lefschetz().dual()
        assert got.realization == HodgeDiamond({(-1, -1): 1})

    def test_involution_and_products(self):
        a, b = mo.projective(2), mo.curve(1)
        assert a.dual().dual() == a
        assert (a * b).dual() == a.dual() * b.dual()

    def test_dual_inverts_e_variables(self):
        for cls in (mo.projective(3), mo.curve(2), mo.arrangement_complement(2, 2)):
            assert cls.dual().e_polynomial() == invert_uv(cls.e_polynomial())

    @pytest.mark.parametrize("g", range(4))
    def test_curve_duality_polynomial_identity(self, g):
        e = mo.curve(g).e_polynomial()
        assert invert_uv(e) == PolyUV({(-1, -1): 1}) * e

    @pytest.mark.parametrize("n", range(1, 4))
    def test_torus_power_compact_ordinary_duality(self, n):
        # chi^c of Gm^n against the ordinary genus (1+y)^n
        compact = (mo.torus() ** n).chi_y()
        ordinary = LaurentY({0: 1, 1: 1}) ** n
        assert compact == ordinary.invert_y() * LaurentY({n: (-1) ** n})
