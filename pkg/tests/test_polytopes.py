import random

import pytest

from gammapos.errors import ResourceLimitError, ValidationError
from gammapos.eulerian import binomial_eulerian_poly, eulerian_poly
from gammapos.exactpoly import IntPoly1
from gammapos.polytopes import (
    SimplicialComplex,
    barycentric_subdivision,
    cross_polytope_boundary,
    dual_permutohedron,
    dual_stellohedron,
    euler_characteristic,
    f_vector,
    gal_check,
    h_polynomial,
    is_flag,
    simplex_boundary,
    stellar_subdivide,
    verify_h_identities,
)


class TestComplexBasics:
    def test_facet_containment_rejected(self):
        with pytest.raises(ValidationError):
            SimplicialComplex([{"a", "b"}, {"a"}])

    def test_faces_close_downward(self):
        K = SimplicialComplex([{"a", "b", "c"}])
        assert K.has_face({"a"})
        assert K.has_face({"b", "c"})
        assert not K.has_face({"d"})
        assert len(K.faces()) == 7

    def test_simplex_boundary(self):
        K = simplex_boundary("abc")
        assert K.facets == frozenset({frozenset("ab"), frozenset("ac"), frozenset("bc")})
        two = simplex_boundary(["0", "1"])
        assert two.facets == frozenset({frozenset({"0"}), frozenset({"1"})})
        tetra = simplex_boundary("abcd")
        assert len(tetra.facets) == 4
        with pytest.raises(ValidationError):
            simplex_boundary(["x"])


class TestSubdivisions:
    def test_barycentric_triangle(self):
        hexagon = barycentric_subdivision(simplex_boundary("abc"))
        assert f_vector(hexagon).f == (1, 6, 6)

    def test_barycentric_edge(self):
        path = barycentric_subdivision(SimplicialComplex([{"a", "b"}]))
        assert path.facets == frozenset({frozenset({"a", "a|b"}),
                                         frozenset({"a|b", "b"})})

    def test_barycentric_tetrahedron(self):
        K = barycentric_subdivision(simplex_boundary("abcd"))
        assert f_vector(K).f == (1, 14, 36, 24)

    def test_stellar_edge_of_triangle(self):
        K = stellar_subdivide(simplex_boundary("abc"), {"a", "b"})
        assert f_vector(K).f == (1, 4, 4)
        assert K.has_face({"a", "a|b"}) and K.has_face({"b", "a|b"})
        assert not K.has_face({"a", "b"})

    def test_stellar_vertex_is_trivial(self):
        K = simplex_boundary("abc")
        assert stellar_subdivide(K, {"a"}) == K

    def test_stellar_facet_of_tetrahedron(self):
        K = simplex_boundary("abcd")
        L = stellar_subdivide(K, {"a", "b", "c"})
        assert len(L.vertices) == len(K.vertices) + 1
        assert len(L.facets) == len(K.facets) + 2

    def test_stellar_requires_face(self):
        with pytest.raises(ValidationError):
            stellar_subdivide(simplex_boundary("abc"), {"a", "b", "c"})

    def test_subdivision_preserves_euler(self):
        for K in (simplex_boundary("abc"), simplex_boundary("abcd"),
                  cross_polytope_boundary(3)):
            chi = euler_characteristic(K)
            assert euler_characteristic(barycentric_subdivision(K)) == chi
            face = next(iter(K.facets))
            assert euler_characteristic(stellar_subdivide(K, face)) == chi


class TestFamilies:
    def test_dual_permutohedron(self):
        assert f_vector(dual_permutohedron(3)).f == (1, 6, 6)
        assert f_vector(dual_permutohedron(2)).f == (1, 2)
        assert f_vector(dual_permutohedron(4)).f == (1, 14, 36, 24)

    def test_dual_stellohedron(self):
        assert f_vector(dual_stellohedron(2)).f == (1, 5, 5)
        assert f_vector(dual_stellohedron(1)).f == (1, 2)
        assert h_polynomial(dual_stellohedron(3), 3) == IntPoly1((1, 7, 7, 1))

    def test_stellohedron_order_invariance(self):
        # permuting the subdivision order inside a dimension class changes
        # nothing
        rng = random.Random(3)
        n = 3
        from itertools import combinations
        reference = dual_stellohedron(n)
        for _ in range(3):
            K = simplex_boundary(str(i) for i in range(n + 1))
            for i in range(n - 1, 0, -1):
                faces = [{"0", *(str(v) for v in s)}
                         for s in combinations(range(1, n + 1), i)]
                rng.shuffle(faces)
                for face in faces:
                    K = stellar_subdivide(K, face)
            assert K == reference

    def test_cross_polytope(self):
        assert f_vector(cross_polytope_boundary(2)).f == (1, 4, 4)
        assert f_vector(cross_polytope_boundary(1)).f == (1, 2)
        assert f_vector(cross_polytope_boundary(3)).f == (1, 6, 12, 8)

    def test_bounds(self):
        with pytest.raises(ResourceLimitError):
            dual_permutohedron(7)
        with pytest.raises(ResourceLimitError):
            dual_stellohedron(6)
        with pytest.raises(ValidationError):
            dual_permutohedron(1)


class TestHPolynomials:
    def test_examples(self):
        assert h_polynomial(dual_permutohedron(3), 2) == IntPoly1((1, 4, 1))
        assert h_polynomial(dual_stellohedron(2), 2) == IntPoly1((1, 3, 1))
        assert h_polynomial(cross_polytope_boundary(2), 2) == IntPoly1((1, 2, 1))

    def test_dimension_checked(self):
        with pytest.raises(ValidationError):
            h_polynomial(dual_permutohedron(3), 3)

    def test_euler_relation(self):
        for n in range(2, 6):
            K = dual_permutohedron(n)
            d = n - 1
            assert euler_characteristic(K) == 1 + (-1) ** (d - 1)
        for n in range(1, 6):
            K = dual_stellohedron(n)
            assert euler_characteristic(K) == 1 + (-1) ** (n - 1)
            K = cross_polytope_boundary(n)
            assert euler_characteristic(K) == 1 + (-1) ** (n - 1)

    def test_facet_count_equals_h_at_one(self):
        for n in range(1, 6):
            K = dual_stellohedron(n)
            h = h_polynomial(K, n)
            assert h(1) == len(K.facets) == binomial_eulerian_poly(n)(1)


class TestFlagAndGal:
    def test_is_flag(self):
        assert is_flag(dual_permutohedron(3))
        assert not is_flag(simplex_boundary("abc"))
        assert is_flag(dual_stellohedron(3))
        assert is_flag(cross_polytope_boundary(3))

    def test_gal_examples(self):
        rep = gal_check(dual_permutohedron(5), 4)
        assert rep.passed and rep.gamma_vector == ["1", "22", "16"]
        rep = gal_check(cross_polytope_boundary(3), 3)
        assert rep.passed and rep.gamma_vector == ["1", "0"]
        rep = gal_check(dual_stellohedron(3), 3)
        assert rep.passed and rep.gamma_vector == ["1", "4"]

    def test_gal_dehn_sommerville_failure(self):
        # a solid triangle is not a sphere; its h-polynomial t^0..t^3 is t^3
        solid = SimplicialComplex([{"a", "b", "c"}])
        rep = gal_check(solid, 3)
        assert not rep.passed
        assert rep.detail == {"dehn_sommerville": False}


class TestHIdentities:
    def test_small(self):
        for n in range(1, 6):
            assert verify_h_identities(n).passed

    def test_permutohedron_matches_eulerian(self):
        for n in range(2, 6):
            assert h_polynomial(dual_permutohedron(n), n - 1) == eulerian_poly(n)

    def test_out_of_range(self):
        with pytest.raises(ResourceLimitError):
            verify_h_identities(7)
