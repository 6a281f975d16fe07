# Copyright 2026, tcox developers
"""

Exact rational convex geometry in N_Q = Q^n.

Values are kept in V-representation (vertices plus tail cone generators), which is what
the Cox ring formulas consume. H-representations are computed on demand with cddlib
(`pycddlib`, exact fraction arithmetic) for intersections and face tests.

cdd conventions used throughout:

* generator rows are [1, v] for points and [0, r] for rays; lines are rows in `lin_set`;
* inequality rows [b, a] mean b + <a, x> >= 0; rows in `lin_set` are equations.

Every constructor removes redundant generators, so equality of values is structural.

"""
import logging
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

import cdd

from .exceptions import EmptyPolyhedron, TailMismatch, UnboundedBelow
from .intlinalg import clear_denominators, rank

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]
Row = Tuple[Fraction, ...]


def dot(u, v) -> Fraction:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def primitive(v) -> Tuple[int, ...]:
    """ The primitive integer vector on the ray Q>=0 * v.

    Examples:
        >>> primitive((2, 4))
        (1, 2)
        >>> primitive((Fraction(-3, 2), 0))
        (-1, 0)
    """
    ints = clear_denominators(v)
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        raise ValueError("The zero vector does not span a ray.")
    return tuple(x // g for x in ints)


def vertex_index(v) -> int:
    """ Least mu >= 1 such that mu * v is a lattice point (lcm of the denominators).

    Examples:
        >>> vertex_index((Fraction(2, 3), Fraction(1, 6)))
        6
    """
    return reduce(lambda a, b: a * b // gcd(a, b), (Fraction(x).denominator for x in v), 1)


def _generator_matrix(points, rays=(), lines=()):
    rows = [[1] + list(p) for p in points] + [[0] + list(r) for r in rays]
    mat = cdd.Matrix(rows, number_type='fraction')
    mat.rep_type = cdd.RepType.GENERATOR
    if lines:
        mat.extend([[0] + list(r) for r in lines], linear=True)
    return mat


def _inequality_matrix(ambient_rank, inequalities, equalities):
    # 1 >= 0 first: cdd drops the origin vertex of a homogeneous system otherwise
    mat = cdd.Matrix([[1] + [0] * ambient_rank], number_type='fraction')
    mat.rep_type = cdd.RepType.INEQUALITY
    if inequalities:
        mat.extend([list(r) for r in inequalities])
    if equalities:
        mat.extend([list(r) for r in equalities], linear=True)
    return mat


def _read_generators(mat) -> Tuple[List[Vector], List[Tuple[int, ...]]]:
    """ Split a cdd generator matrix into vertices and primitive rays (lines as +- pairs). """
    vertices, rays = [], []
    for i in range(mat.row_size):
        row = [Fraction(x) for x in mat[i]]
        if row[0] != 0:
            vertices.append(tuple(x / row[0] for x in row[1:]))
        elif any(row[1:]):
            r = primitive(row[1:])
            rays.append(r)
            if i in mat.lin_set:
                rays.append(tuple(-x for x in r))
    return vertices, rays


def _read_inequalities(mat) -> Tuple[List[Row], List[Row]]:
    inequalities, equalities = [], []
    for i in range(mat.row_size):
        row = tuple(Fraction(x) for x in mat[i])
        if not any(row[1:]):
            continue  # 1 >= 0
        (equalities if i in mat.lin_set else inequalities).append(row)
    return inequalities, equalities


def _h_representation(points, rays) -> Tuple[List[Row], List[Row]]:
    mat = cdd.Polyhedron(_generator_matrix(points, rays)).get_inequalities()
    mat.canonicalize()
    return _read_inequalities(mat)


class Cone:
    """ Rational polyhedral cone in Q^n given by primitive integer generators.

    Generators are deduplicated, made primitive and reduced to extreme rays; a cone
    containing lines lists each line as a +- pair. Generators are sorted
    lexicographically, so two equal cones compare equal.
    """

    def __init__(self, ambient_rank: int, generators: Iterable[Sequence] = ()):
        self.ambient_rank = n = int(ambient_rank)
        gens = set()
        for g in generators:
            if len(g) != n:
                raise ValueError(f"Generator {tuple(g)} does not lie in Q^{n}.")
            if any(g):
                gens.add(primitive(g))
        if gens:
            mat = _generator_matrix([(0,) * n], sorted(gens))
            mat.canonicalize()
            gens = set(_read_generators(mat)[1])
        self.generators = tuple(sorted(gens))
        self._hrep = None

    @classmethod
    def zero(cls, ambient_rank: int) -> 'Cone':
        return cls(ambient_rank, ())

    @property
    def is_pointed(self) -> bool:
        gens = set(self.generators)
        return not any(tuple(-x for x in g) in gens for g in gens)

    @property
    def dimension(self) -> int:
        return rank(self.generators, self.ambient_rank) if self.generators else 0

    def h_representation(self) -> Tuple[List[Row], List[Row]]:
        """ (inequalities, equalities) as rows [0, a] meaning <a, x> >= 0 (resp. = 0). """
        if self._hrep is None:
            if self.ambient_rank == 0:
                self._hrep = ([], [])
            else:
                self._hrep = _h_representation([(0,) * self.ambient_rank], self.generators)
        return self._hrep

    def contains(self, v) -> bool:
        inequalities, equalities = self.h_representation()
        return (all(dot(row[1:], v) >= 0 for row in inequalities)
                and all(dot(row[1:], v) == 0 for row in equalities))

    def dual_contains(self, u) -> bool:
        """ True iff u lies in the dual cone, i.e. <u, g> >= 0 for every generator g. """
        return all(dot(u, g) >= 0 for g in self.generators)

    def is_subcone_of(self, other: 'Cone') -> bool:
        return all(other.contains(g) for g in self.generators)

    def as_polyhedron(self) -> 'SigmaPolyhedron':
        return SigmaPolyhedron(self.ambient_rank, [(0,) * self.ambient_rank], self)

    def __eq__(self, other):
        return (isinstance(other, Cone) and self.ambient_rank == other.ambient_rank
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.ambient_rank, self.generators))

    def __repr__(self):
        return f"Cone({self.ambient_rank}, {list(self.generators)})"


class SigmaPolyhedron:
    """ Polyhedron conv(vertices) + tail, or the empty polyhedron.

    The empty polyhedron absorbs Minkowski sums and is a face of everything.
    """

    def __init__(self, ambient_rank: int, vertices: Iterable[Sequence] = (), tail: Optional[Cone] = None,
                 empty: bool = False):
        self.ambient_rank = n = int(ambient_rank)
        self.is_empty = bool(empty)
        self._hrep = None
        if self.is_empty:
            self.vertices = ()
            self.tail = None
            return
        if tail is None:
            tail = Cone.zero(n)
        if tail.ambient_rank != n:
            raise ValueError(f"Tail {tail} does not lie in Q^{n}.")
        points = {tuple(Fraction(x) for x in v) for v in vertices}
        if not points:
            raise ValueError("A non-empty polyhedron needs at least one vertex.")
        if any(len(v) != n for v in points):
            raise ValueError(f"Vertices must lie in Q^{n}.")
        if len(points) > 1:
            mat = _generator_matrix(sorted(points), tail.generators)
            mat.canonicalize()
            points = set(_read_generators(mat)[0])
        self.vertices = tuple(sorted(points))
        self.tail = tail

    @classmethod
    def empty(cls, ambient_rank: int) -> 'SigmaPolyhedron':
        return cls(ambient_rank, empty=True)

    @classmethod
    def point(cls, v, tail: Optional[Cone] = None) -> 'SigmaPolyhedron':
        return cls(len(v), [v], tail)

    def h_representation(self) -> Tuple[List[Row], List[Row]]:
        """ (inequalities, equalities) as rows [b, a] meaning b + <a, x> >= 0 (resp. = 0). """
        if self.is_empty:
            raise EmptyPolyhedron("The empty polyhedron has no H-representation here.")
        if self._hrep is None:
            self._hrep = _h_representation(self.vertices, self.tail.generators)
        return self._hrep

    def contains_point(self, x) -> bool:
        if self.is_empty:
            return False
        inequalities, equalities = self.h_representation()
        return (all(row[0] + dot(row[1:], x) >= 0 for row in inequalities)
                and all(row[0] + dot(row[1:], x) == 0 for row in equalities))

    def __eq__(self, other):
        if not isinstance(other, SigmaPolyhedron):
            return NotImplemented
        return (self.ambient_rank, self.is_empty, self.vertices, self.tail) == \
               (other.ambient_rank, other.is_empty, other.vertices, other.tail)

    def __hash__(self):
        return hash((self.ambient_rank, self.is_empty, self.vertices, self.tail))

    def __repr__(self):
        if self.is_empty:
            return f"SigmaPolyhedron.empty({self.ambient_rank})"
        verts = [tuple(str(x) for x in v) for v in self.vertices]
        return f"SigmaPolyhedron({self.ambient_rank}, {verts}, {self.tail!r})"


def as_polyhedron(x) -> SigmaPolyhedron:
    return x.as_polyhedron() if isinstance(x, Cone) else x


def polyhedron_from_h(ambient_rank: int, inequalities: Sequence[Row], equalities: Sequence[Row] = ()
                      ) -> SigmaPolyhedron:
    """ V-representation of {x : b + <a, x> >= 0 for inequalities, = 0 for equalities}. """
    n = ambient_rank
    if not inequalities and not equalities:
        lines = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
        return SigmaPolyhedron(n, [(0,) * n], Cone(n, lines + [tuple(-x for x in v) for v in lines]))
    gens = cdd.Polyhedron(_inequality_matrix(n, list(inequalities), list(equalities))).get_generators()
    vertices, rays = _read_generators(gens)
    if not vertices:
        return SigmaPolyhedron.empty(n)
    return SigmaPolyhedron(n, vertices, Cone(n, rays))


def _check_rank(a, b):
    if a.ambient_rank != b.ambient_rank:
        raise ValueError(f"Ambient ranks differ: {a.ambient_rank} and {b.ambient_rank}.")


def minkowski_sum(a, b) -> SigmaPolyhedron:
    """ Minkowski sum of two sigma-polyhedra with the same tail.

    Either argument may be the shared tail cone itself (the neutral element), and the
    empty polyhedron absorbs.

    Raises:
        TailMismatch: if both arguments are non-empty with different tails.
    """
    a, b = as_polyhedron(a), as_polyhedron(b)
    _check_rank(a, b)
    if a.is_empty or b.is_empty:
        return SigmaPolyhedron.empty(a.ambient_rank)
    if a.tail != b.tail:
        raise TailMismatch(f"Cannot add polyhedra with tails {a.tail} and {b.tail}.")
    sums = [tuple(x + y for x, y in zip(va, vb)) for va, vb in product(a.vertices, b.vertices)]
    return SigmaPolyhedron(a.ambient_rank, sums, a.tail)


def support_min(delta: SigmaPolyhedron, u) -> Fraction:
    """ min <u, v> over the polyhedron.

    Raises:
        EmptyPolyhedron: for the empty polyhedron.
        UnboundedBelow: if u is not in the dual of the tail cone.
    """
    delta = as_polyhedron(delta)
    if delta.is_empty:
        raise EmptyPolyhedron("support_min of the empty polyhedron is undefined.")
    if not delta.tail.dual_contains(u):
        raise UnboundedBelow(f"u = {tuple(str(x) for x in u)} is not in the dual of the tail cone {delta.tail}.")
    return min(dot(u, v) for v in delta.vertices)


def intersect(a, b) -> SigmaPolyhedron:
    """ Intersection via stacked H-representations; may be empty. """
    a, b = as_polyhedron(a), as_polyhedron(b)
    _check_rank(a, b)
    if a.is_empty or b.is_empty:
        return SigmaPolyhedron.empty(a.ambient_rank)
    ia, ea = a.h_representation()
    ib, eb = b.h_representation()
    return polyhedron_from_h(a.ambient_rank, ia + ib, ea + eb)


def contains(delta, f) -> bool:
    """ True iff f is a subset of delta. """
    delta, f = as_polyhedron(delta), as_polyhedron(f)
    if f.is_empty:
        return True
    if delta.is_empty:
        return False
    inequalities, equalities = delta.h_representation()
    return (all(delta.contains_point(v) for v in f.vertices)
            and all(dot(row[1:], r) >= 0 for row in inequalities for r in f.tail.generators)
            and all(dot(row[1:], r) == 0 for row in equalities for r in f.tail.generators))


def is_face(f, delta) -> bool:
    """ True iff f is a face of delta. The empty polyhedron is a face of everything.

    The face of delta spanned by f is cut out by the inequalities tight on all of f; f is
    a face exactly when that face equals f.
    """
    f, delta = as_polyhedron(f), as_polyhedron(delta)
    _check_rank(f, delta)
    if f.is_empty:
        return True
    if not contains(delta, f):
        return False
    inequalities, equalities = delta.h_representation()
    tight = [row for row in inequalities
             if all(row[0] + dot(row[1:], v) == 0 for v in f.vertices)
             and all(dot(row[1:], r) == 0 for r in f.tail.generators)]
    return polyhedron_from_h(delta.ambient_rank, inequalities, equalities + tight) == f


def dimension(delta) -> int:
    """ Affine dimension; -1 for the empty polyhedron. """
    delta = as_polyhedron(delta)
    if delta.is_empty:
        return -1
    _, equalities = delta.h_representation()
    if not equalities:
        return delta.ambient_rank
    return delta.ambient_rank - rank([clear_denominators(row[1:]) for row in equalities])


def facets(delta) -> List[SigmaPolyhedron]:
    """ The facets of a non-empty polyhedron, one per irredundant inequality. """
    delta = as_polyhedron(delta)
    inequalities, equalities = delta.h_representation()
    return [polyhedron_from_h(delta.ambient_rank, inequalities, equalities + [row]) for row in inequalities]


def cone_intersection(cones: Sequence[Cone]) -> Cone:
    """ Intersection of cones sharing an ambient space. """
    if not cones:
        raise ValueError("Need at least one cone to intersect.")
    n = cones[0].ambient_rank
    if n == 0:
        return Cone.zero(0)
    inequalities, equalities = [], []
    for cone in cones:
        if cone.ambient_rank != n:
            raise ValueError("Cones live in different ambient spaces.")
        ineq, eq = cone.h_representation()
        inequalities += ineq
        equalities += eq
    result = polyhedron_from_h(n, inequalities, equalities)
    return result.tail
