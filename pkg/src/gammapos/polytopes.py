"""Abstract simplicial complexes and the boundary-complex families.

A complex is given by its facets over string vertex labels; faces close
downward on demand.  Barycentric subdivision labels each new vertex by the
face it came from (sorted labels joined by ``|``), and stellar subdivision
does the same, so constructions are reproducible and complexes comparable.

The three families built here are the dual permutohedron (barycentric
subdivision of a simplex boundary), the dual stellohedron (stellar
subdivisions of the simplex faces through a distinguished apex vertex,
largest dimension first), and the cross-polytope boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

import networkx as nx

from .errors import ResourceLimitError, ValidationError
from .exactpoly import IntPoly1, gamma_expand, is_palindromic
from .reports import Report, combine

DEFAULT_PERMUTOHEDRON_BOUND = 6
DEFAULT_STELLOHEDRON_BOUND = 5


def _face_label(face) -> str:
    return "|".join(sorted(face))


class SimplicialComplex:
    """An abstract simplicial complex given by its maximal faces."""

    __slots__ = ("facets", "_faces")

    def __init__(self, facets):
        fs = set()
        for f in facets:
            fx = frozenset(str(v) for v in f)
            if not fx:
                raise ValidationError("empty facet")
            fs.add(fx)
        by_size: dict[int, list[frozenset]] = {}
        for f in fs:
            by_size.setdefault(len(f), []).append(f)
        sizes = sorted(by_size)
        for i, small in enumerate(sizes):
            for f in by_size[small]:
                for big in sizes[i + 1:]:
                    if any(f < g for g in by_size[big]):
                        raise ValidationError(f"facet {sorted(f)} is contained in another")
        self.facets = frozenset(fs)
        self._faces = None

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset().union(*self.facets) if self.facets else frozenset()

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self) -> frozenset[frozenset[str]]:
        """All nonempty faces (downward closure of the facets)."""
        if self._faces is None:
            out = set()
            for facet in self.facets:
                elems = tuple(facet)
                for size in range(1, len(elems) + 1):
                    out.update(frozenset(c) for c in combinations(elems, size))
            self._faces = frozenset(out)
        return self._faces

    def has_face(self, face) -> bool:
        fx = frozenset(str(v) for v in face)
        return any(fx <= facet for facet in self.facets)

    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) <= 1

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def to_json(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "facets": sorted(sorted(f) for f in self.facets),
        }

    def __repr__(self):
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets)"


@dataclass(frozen=True)
class FVector:
    """Face counts by dimension, led by f_(-1) = 1 for the empty face."""

    f: tuple[int, ...]

    def count(self, dim: int) -> int:
        """Number of faces of the given dimension (dim = -1 gives 1)."""
        idx = dim + 1
        return self.f[idx] if 0 <= idx < len(self.f) else 0


def simplex_boundary(vertex_labels) -> SimplicialComplex:
    """Boundary of the simplex on the given vertices: all proper subsets of
    one less element are facets."""
    labels = sorted(str(v) for v in vertex_labels)
    if len(labels) != len(set(labels)):
        raise ValidationError("duplicate vertex labels")
    if len(labels) < 2:
        raise ValidationError("need at least 2 vertices")
    return SimplicialComplex(combinations(labels, len(labels) - 1))


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset: vertices are the nonempty faces,
    facets are the maximal chains."""
    new_facets = []
    for facet in K.facets:
        elems = sorted(facet)
        for order in permutations(elems):
            chain = []
            prefix = []
            for v in order:
                prefix.append(v)
                chain.append(_face_label(prefix))
            new_facets.append(frozenset(chain))
    return SimplicialComplex(new_facets)


def stellar_subdivide(K: SimplicialComplex, face) -> SimplicialComplex:
    """Replace the star of a face by the cone over its boundary joined with
    its link.  Subdividing a vertex is trivial and returns the complex
    unchanged."""
    fx = frozenset(str(v) for v in face)
    if not K.has_face(fx):
        raise ValidationError(f"{sorted(fx)} is not a face")
    if len(fx) == 1:
        return K
    apex = _face_label(fx)
    if apex in K.vertices:
        raise ValidationError(f"fresh vertex label {apex!r} already present")
    new_facets = []
    for facet in K.facets:
        if fx <= facet:
            link = facet - fx
            for v in fx:
                new_facets.append(frozenset({apex}) | (fx - {v}) | link)
        else:
            new_facets.append(facet)
    return SimplicialComplex(new_facets)


def dual_permutohedron(n: int, bound: int = DEFAULT_PERMUTOHEDRON_BOUND) -> SimplicialComplex:
    """Boundary complex of the dual permutohedron: the barycentric
    subdivision of the boundary of the (n-1)-simplex, so the vertices are
    the nonempty proper subsets of {1..n}."""
    if n < 2:
        raise ValidationError("need n >= 2")
    if n > bound:
        raise ResourceLimitError(f"n={n} exceeds the bound {bound}")
    return barycentric_subdivision(simplex_boundary(str(i) for i in range(1, n + 1)))


def dual_stellohedron(n: int, bound: int = DEFAULT_STELLOHEDRON_BOUND) -> SimplicialComplex:
    """Boundary complex of the dual stellohedron on apex vertex 0.

    Starting from the boundary of the simplex on {0, 1, ..., n}, every
    original face through 0 is stellarly subdivided, one dimension class at
    a time from dimension n-1 down to 1.  Within a class the order does not
    matter; vertices (dimension 0) would subdivide trivially.
    """
    if n < 1:
        raise ValidationError("need n >= 1")
    if n > bound:
        raise ResourceLimitError(f"n={n} exceeds the bound {bound}")
    K = simplex_boundary(str(i) for i in range(n + 1))
    for i in range(n - 1, 0, -1):
        for subset in combinations(range(1, n + 1), i):
            K = stellar_subdivide(K, {"0", *(str(v) for v in subset)})
    return K


def cross_polytope_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-dimensional cross-polytope: vertices +i and -i,
    faces are the sets never containing an antipodal pair."""
    if n < 1:
        raise ValidationError("need n >= 1")
    facets = []
    for signs in product("+-", repeat=n):
        facets.append(frozenset(f"{s}{i + 1}" for i, s in enumerate(signs)))
    return SimplicialComplex(facets)


def f_vector(K: SimplicialComplex) -> FVector:
    counts = [0] * (K.dim + 2)
    counts[0] = 1
    for face in K.faces():
        counts[len(face)] += 1
    return FVector(tuple(counts))


def euler_characteristic(K: SimplicialComplex) -> int:
    fv = f_vector(K)
    return sum((-1) ** i * fv.f[i + 1] for i in range(len(fv.f) - 1))


def h_polynomial(K: SimplicialComplex, d: int) -> IntPoly1:
    """h-polynomial sum_j f_(j-1) (t-1)^(d-j) of a (d-1)-dimensional
    complex."""
    if K.dim != d - 1:
        raise ValidationError(f"complex has dimension {K.dim}, expected {d - 1}")
    fv = f_vector(K)
    total = IntPoly1.zero()
    for j in range(d + 1):
        total = total + (IntPoly1((-1, 1)) ** (d - j)) * fv.count(j - 1)
    return total


def is_flag(K: SimplicialComplex) -> bool:
    """True iff every set of pairwise-adjacent vertices is a face, i.e. the
    complex is the clique complex of its 1-skeleton."""
    graph = nx.Graph()
    graph.add_nodes_from(K.vertices)
    for face in K.facets:
        graph.add_edges_from(combinations(sorted(face), 2))
    return all(K.has_face(clique) for clique in nx.find_cliques(graph))


def gal_check(K: SimplicialComplex, d: int) -> Report:
    """Gamma-expand the h-polynomial and ask for nonnegative entries.

    A non-palindromic h-polynomial (a Dehn-Sommerville failure) is reported
    rather than raised.
    """
    h = h_polynomial(K, d)
    if not is_palindromic(h, d):
        return Report("gal-gamma-nonnegative", {"d": d}, "fail",
                      lhs=h.to_text("t"),
                      detail={"dehn_sommerville": False})
    vec = gamma_expand(h, d)
    ok = vec.is_nonnegative()
    return Report("gal-gamma-nonnegative", {"d": d},
                  "pass" if ok else "fail",
                  lhs=h.to_text("t"),
                  gamma_vector=[str(g) for g in vec.gammas])


def verify_h_identities(n: int,
                        permutohedron_bound: int = DEFAULT_PERMUTOHEDRON_BOUND,
                        stellohedron_bound: int = DEFAULT_STELLOHEDRON_BOUND) -> Report:
    """The dual permutohedron h-polynomial is the Eulerian polynomial and
    the dual stellohedron h-polynomial is the binomial-Eulerian polynomial;
    both complexes are flag and both h-polynomials palindromic."""
    from .eulerian import binomial_eulerian_poly, eulerian_poly

    checks = {}
    detail = {}
    ran = False
    if 2 <= n <= permutohedron_bound:
        ran = True
        K = dual_permutohedron(n, permutohedron_bound)
        h = h_polynomial(K, n - 1)
        checks["permutohedron-h-eulerian"] = h == eulerian_poly(n)
        checks["permutohedron-palindromic"] = is_palindromic(h, n - 1)
        checks["permutohedron-flag"] = is_flag(K)
        detail["permutohedron_h"] = h.to_json()
    if 1 <= n <= stellohedron_bound:
        ran = True
        K = dual_stellohedron(n, stellohedron_bound)
        h = h_polynomial(K, n)
        checks["stellohedron-h-binomial-eulerian"] = h == binomial_eulerian_poly(n)
        checks["stellohedron-palindromic"] = is_palindromic(h, n)
        checks["stellohedron-flag"] = is_flag(K)
        checks["stellohedron-facet-count-h1"] = h(1) == len(K.facets)
        detail["stellohedron_h"] = h.to_json()
    if not ran:
        raise ResourceLimitError(
            f"n={n} exceeds both family bounds "
            f"({permutohedron_bound}, {stellohedron_bound})")
    return combine("h-polynomial-identities", {"n": n}, checks, detail=detail)
