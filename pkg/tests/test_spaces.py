"""Space models: construction, integration, Gysin maps, custom documents."""

from fractions import Fraction

import pytest

from hirzebruch import spaces as sp
from hirzebruch.errors import InvalidParameter, ParseError, UnsupportedMap


def series_quotient_oracle(num_coeffs, den_linear, order):
    """Expand (sum num_coeffs[j] h^j) / (1 + den_linear*h) to the given order
    with plain list arithmetic, independent of the class machinery."""
    inv = [Fraction(1)]
    for j in range(1, order + 1):
        inv.append(inv[-1] * -den_linear)
    out = []
    for j in range(order + 1):
        acc = Fraction(0)
        for i in range(j + 1):
            if i < len(num_coeffs):
                acc += num_coeffs[i] * inv[j - i]
        out.append(acc)
    return out


def segre_oracle(chern_coeffs, order):
    """Formal inverse of a total Chern class given by plain coefficients."""
    s = [Fraction(1)]
    for j in range(1, order + 1):
        acc = Fraction(0)
        for i in range(1, j + 1):
            if i < len(chern_coeffs):
                acc += chern_coeffs[i] * s[j - i]
        s.append(-acc)
    return s


class TestConstruction:
    def test_projective_plane_tangent(self):
        p2 = sp.projective(2)
        h = p2.gen_class(0)
        assert p2.tangent_chern == p2.one() + 3 * h + 3 * h * h

    def test_quartic_surface(self):
        x = sp.hypersurface(3, 4)
        # oracle: (1+h)^4 / (1+4h) truncated at degree 2
        want = series_quotient_oracle([1, 4, 6, 4, 1], 4, 2)
        assert want == [Fraction(1), Fraction(0), Fraction(6)]
        h = x.gen_class(0)
        assert x.tangent_chern == x.one() + 6 * h * h
        assert x.integrate(x.tangent_chern.component(2)) == 24

    def test_toric_boundary_has_trivial_log_bundle(self):
        arr = sp.with_arrangement(sp.projective(2), 3)
        assert arr.log.log_cotangent.rank == 2
        assert arr.log.log_cotangent.total_chern == arr.one()

    def test_arrangement_extremes(self):
        n = 3
        full = sp.with_arrangement(sp.projective(n), n + 1)
        assert full.log.log_cotangent.total_chern == full.one()
        none = sp.with_arrangement(sp.projective(n), 0)
        h = none.gen_class(0)
        assert none.log.log_cotangent.total_chern == (none.one() - h) ** (n + 1)

    def test_preconditions(self):
        with pytest.raises(InvalidParameter):
            sp.hypersurface(1, 2)
        with pytest.raises(InvalidParameter):
            sp.hypersurface(3, 0)
        with pytest.raises(InvalidParameter):
            sp.with_arrangement(sp.projective(2), 4)
        with pytest.raises(InvalidParameter):
            sp.projective_bundle(sp.projective(1), sp.trivial_bundle(sp.projective(1), 0))

    def test_product_drops_points_and_flattens(self):
        p1 = sp.projective(1)
        assert sp.product(p1, sp.point()) is p1
        triple = sp.product(sp.product(p1, p1), p1)
        assert triple.dim == 3 and len(triple.gens) == 3


class TestIntegration:
    def test_normalization(self):
        p2 = sp.projective(2)
        assert p2.integrate(p2.gen_class(0) ** 2) == 1

    def test_bundle_relation_segre(self):
        base = sp.projective(1)
        tot = sp.projective_bundle(base, sp.sum_of_line_bundles(base, [0, 1]))
        xi = tot.gen_class(1)
        assert tot.integrate(xi * xi) == -1

    def test_product_integration(self):
        prod = sp.product(sp.projective(1), sp.projective(2))
        top = prod.monomial((1, 2))
        assert prod.integrate(top) == 1
        assert prod.integrate(prod.monomial((0, 2))) == 0

    @pytest.mark.parametrize("twists", [(0, 0), (0, 1), (-1, 2), (1, 2, 3), (0, -2)])
    def test_segre_classes_from_pushforward(self, twists):
        # pi_*(xi^(r-1+j)) must equal the formal inverse of c(E)
        base = sp.projective(3)
        E = sp.sum_of_line_bundles(base, twists)
        r = E.rank
        tot = sp.projective_bundle(base, E)
        pi = sp.bundle_projection(tot)
        xi = tot.gen_class(len(base.gens))
        chern_coeffs = [E.chern(i).coeff((i,)) for i in range(base.dim + 1)]
        want = segre_oracle(chern_coeffs, base.dim)
        for j in range(base.dim + 1):
            got = sp.gysin_pushforward(pi, xi ** (r - 1 + j))
            assert got == base.monomial((j,), want[j]), (twists, j)

    @pytest.mark.parametrize("twists", [(0, 0), (0, 1), (0, 1, 3), (-2, 1)])
    @pytest.mark.parametrize("base_n", [1, 2])
    def test_chi_structure_sheaf_is_birational_invariant(self, base_n, twists):
        # integral of td(T) over P(E) equals the base value (checks the
        # Grothendieck-relation sign convention)
        from hirzebruch.bundles import apply_series, genus_series
        base = sp.projective(base_n)
        tot = sp.projective_bundle(base, sp.sum_of_line_bundles(base, twists))
        td_tot = apply_series(genus_series("todd", tot.dim), tot.tangent_bundle())
        td_base = apply_series(genus_series("todd", max(base.dim, 1)), base.tangent_bundle())
        assert tot.integrate(td_tot.component(tot.dim)) == \
            base.integrate(td_base.component(base.dim)) == 1


class TestGysin:
    def test_bundle_projection_unit(self):
        base = sp.projective(1)
        tot = sp.projective_bundle(base, sp.sum_of_line_bundles(base, [0, 1]))
        pi = sp.bundle_projection(tot)
        xi = tot.gen_class(1)
        assert sp.gysin_pushforward(pi, xi) == base.one()

    def test_hypersurface_fundamental_class(self):
        x = sp.hypersurface(3, 4)
        iota = sp.hypersurface_inclusion(x)
        p3 = iota.target
        assert sp.gysin_pushforward(iota, x.one()) == p3.monomial((1,), Fraction(4))

    def test_linear_embedding_point(self):
        emb = sp.linear_embedding(1, 2)
        p1 = emb.source
        pushed = sp.gysin_pushforward(emb, p1.gen_class(0))
        assert pushed == emb.target.monomial((2,))

    def test_constant_map(self):
        p2 = sp.projective(2)
        k = sp.constant_map(p2)
        assert sp.gysin_pushforward(k, p2.gen_class(0) ** 2) == k.target.one()

    def test_unsupported(self):
        with pytest.raises(UnsupportedMap):
            sp.bundle_projection(sp.projective(2))

    def test_projection_formula(self):
        # f_* (f^* a . b) == a . f_* b for the two projection-type maps
        base = sp.projective(2)
        E = sp.sum_of_line_bundles(base, [0, 1, -1])
        tot = sp.projective_bundle(base, E)
        pi = sp.bundle_projection(tot)
        a = base.gen_class(0) + 2 * base.one()
        b = tot.gen_class(len(base.gens)) ** 2 + tot.gen_class(0)
        lhs = sp.gysin_pushforward(pi, sp.ring_pullback(pi, a) * b)
        assert lhs == a * sp.gysin_pushforward(pi, b)

        prod = sp.product(sp.projective(1), sp.projective(2))
        pr = sp.product_projection(prod, 0)
        a = pr.target.gen_class(0)
        b = prod.monomial((0, 2)) + prod.monomial((1, 1))
        lhs = sp.gysin_pushforward(pr, sp.ring_pullback(pr, a) * b)
        assert lhs == a * sp.gysin_pushforward(pr, b)


P2_DOCUMENT = """
# the projective plane, presented explicitly
dim 2
gens h
relation h^3 = 0
integral h^2 = 1
tangent 1 + 3*h + 3*h^2
"""

QUADRIC_DOCUMENT = """
# P1 x P1 with generators a, b
dim 2
gens a b
relation a^2 = 0
relation b^2 = 0
integral a*b = 1
tangent 1 + 2*a + 2*b + 4*a*b
"""


class TestDocuments:
    def test_projective_plane_document(self):
        m = sp.from_document(P2_DOCUMENT)
        assert m.dim == 2
        assert m.integrate(m.gen_class(0) ** 2) == 1
        assert m.tangent_chern.coeff((1,)) == 3
        assert m.tangent_chern.coeff((2,)) == 3

    def test_quadric_document_genus_inputs(self):
        m = sp.from_document(QUADRIC_DOCUMENT)
        a, b = m.gen_class(0), m.gen_class(1)
        assert m.integrate(a * b) == 1
        assert (a * a).is_zero()

    def test_quadric_document_feeds_the_genus_pipeline(self):
        from hirzebruch.rings import LaurentY
        from hirzebruch.transforms import chi_y_genus
        m = sp.from_document(QUADRIC_DOCUMENT)
        assert chi_y_genus(m) == LaurentY({0: 1, 1: -2, 2: 1})

    def test_document_with_grothendieck_relation(self):
        doc = """
        dim 2
        gens h xi
        relation h^2 = 0
        relation xi^2 = -1*h*xi
        integral h*xi = 1
        tangent 1 + 2*xi + 3*h + 4*h*xi
        """
        m = sp.from_document(doc)
        xi = m.gen_class(1)
        assert m.integrate(xi * xi) == -1

    def test_document_errors(self):
        with pytest.raises(ParseError):
            sp.from_document("dim 2\ngens h\nintegral h^2 = 1\n")  # no tangent
        with pytest.raises(ParseError):
            sp.from_document("gens h\nrelation h^2 = 0\n")  # no dim
        with pytest.raises(ParseError):
            sp.from_document(
                "dim 1\ngens h\nrelation h^2 = h^2\nintegral h = 1\ntangent 1")
