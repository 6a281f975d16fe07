# Copyright 2026, tcox developers
"""

Polyhedral divisors and divisorial fans on Y = P^1.

A polyhedral divisor D = sum_Z Delta_Z * Z assigns a sigma-polyhedron to finitely many
points of P^1; at every other point the coefficient is the tail cone itself. An empty
coefficient removes that point from the locus of D.

Provides evaluation, degree, the properness and face criteria, the intersection of
divisors, validation of divisorial fans (`check_fan`), slice data and the dimensions of
the graded pieces of the algebra A(D).

"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import floor
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from tcox.exceptions import DegeneratePoints, InvalidFan, NonCompleteLocus, TailMismatch, UnboundedBelow
from tcox.polyhedra import (
    Cone, SigmaPolyhedron, as_polyhedron, contains, cone_intersection, dimension, facets, intersect,
    is_face, minkowski_sum, support_min, vertex_index,
)
from tcox.rationals import format_rational

logger = logging.getLogger(__name__)


class P1Point:
    """ A point [b:c] of P^1 with a chosen representative.

    Equality is projective. The representative is kept because trinomial coefficients
    depend on it.
    """

    def __init__(self, b, c, name: Optional[str] = None):
        b, c = Fraction(b), Fraction(c)
        if b == 0 and c == 0:
            raise DegeneratePoints("[0:0] is not a point of P^1.")
        self.representative = (b, c)
        self.normalized = (Fraction(1), c / b) if b != 0 else (Fraction(0), Fraction(1))
        self.name = name

    @property
    def label(self) -> str:
        return self.name or f"[{format_rational(self.representative[0])}:{format_rational(self.representative[1])}]"

    def __eq__(self, other):
        return isinstance(other, P1Point) and self.normalized == other.normalized

    def __hash__(self):
        return hash(self.normalized)

    def __repr__(self):
        b, c = self.representative
        return f"P1Point({format_rational(b)!r}, {format_rational(c)!r}, name={self.name!r})"


class PolyhedralDivisorP1:
    """ Polyhedral divisor on P^1 with a pointed tail cone.

    Args:
        tail: The common tail cone.
        coefficients: Map P1Point -> SigmaPolyhedron (or Cone). Coefficients equal to the tail
            are the default and are not stored.
        name: Optional name used in reports.
    """

    def __init__(self, tail: Cone, coefficients: Mapping[P1Point, SigmaPolyhedron], name: Optional[str] = None):
        self.tail = tail
        self.ambient_rank = tail.ambient_rank
        self.name = name
        default = tail.as_polyhedron()
        coeffs = {}
        for y, delta in coefficients.items():
            delta = as_polyhedron(delta)
            if delta.ambient_rank != self.ambient_rank:
                raise ValueError(f"Coefficient at {y.label} lives in Q^{delta.ambient_rank}, "
                                 f"expected Q^{self.ambient_rank}.")
            if not delta.is_empty and delta.tail != tail:
                raise TailMismatch(f"Coefficient at {y.label} has tail {delta.tail}, divisor tail is {tail}.")
            if y in coeffs:
                raise DegeneratePoints(f"Point {y.label} appears twice in divisor {name}.")
            if delta != default:
                coeffs[y] = delta
        self.coefficients: Dict[P1Point, SigmaPolyhedron] = coeffs

    def coefficient(self, y: P1Point) -> SigmaPolyhedron:
        return self.coefficients.get(y, self.tail.as_polyhedron())

    @property
    def support(self) -> List[P1Point]:
        return list(self.coefficients)

    @property
    def is_trivial(self) -> bool:
        return not self.coefficients

    @property
    def has_empty_coefficient(self) -> bool:
        return any(delta.is_empty for delta in self.coefficients.values())

    def sort_key(self):
        coeffs = sorted((y.normalized, delta.is_empty, delta.vertices) for y, delta in self.coefficients.items())
        return (self.tail.generators, tuple(coeffs))

    def __eq__(self, other):
        return (isinstance(other, PolyhedralDivisorP1) and self.tail == other.tail
                and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash(self.sort_key())

    def __repr__(self):
        coeffs = ", ".join(f"{y.label}: {delta!r}" for y, delta in self.coefficients.items())
        return f"PolyhedralDivisorP1(name={self.name!r}, tail={self.tail!r}, {{{coeffs}}})"


def evaluate(D: PolyhedralDivisorP1, u) -> Dict[P1Point, Fraction]:
    """ The rational divisor D(u) = sum_Z min<u, Delta_Z> Z.

    Points whose coefficient is the tail contribute 0 and are omitted; empty coefficients
    mark removed points and are skipped as well.

    Raises:
        UnboundedBelow: if u is not in the dual of the tail cone.
    """
    if not D.tail.dual_contains(u):
        raise UnboundedBelow(f"u = {tuple(format_rational(x) for x in u)} is not in the dual of "
                             f"tail({D.name or 'D'}) = {D.tail}.")
    return {y: support_min(delta, u) for y, delta in D.coefficients.items() if not delta.is_empty}


def degree(D: PolyhedralDivisorP1) -> SigmaPolyhedron:
    """ deg(D): the Minkowski sum of all coefficients; empty if any coefficient is empty. """
    return reduce(minkowski_sum, D.coefficients.values(), D.tail.as_polyhedron())


def is_proper_p1(D: PolyhedralDivisorP1) -> bool:
    """ Properness criterion on P^1: deg(D) is a proper subset of tail(D), or empty.

    The criterion is sufficient for properness; an empty degree counts as proper.
    """
    deg = degree(D)
    if deg.is_empty:
        return True
    tail = D.tail.as_polyhedron()
    return contains(tail, deg) and deg != tail


def intersection(D: PolyhedralDivisorP1, Dp: PolyhedralDivisorP1, name: Optional[str] = None) -> PolyhedralDivisorP1:
    """ Slice-wise intersection of two polyhedral divisors. """
    tail = cone_intersection([D.tail, Dp.tail])
    points = list(D.coefficients) + [y for y in Dp.coefficients if y not in D.coefficients]
    coeffs = {y: intersect(D.coefficient(y), Dp.coefficient(y)) for y in points}
    return PolyhedralDivisorP1(tail, coeffs, name=name)


def is_face_pdiv(Dp: PolyhedralDivisorP1, D: PolyhedralDivisorP1) -> bool:
    """ True iff Dp is a face of D.

    Every slice of Dp must be a face of the corresponding slice of D (the tails count as the
    slice at a general point), and deg(D) intersected with tail(Dp) must equal deg(Dp).
    """
    if Dp.ambient_rank != D.ambient_rank:
        raise ValueError("Divisors live in lattices of different rank.")
    if not is_face(Dp.tail.as_polyhedron(), D.tail.as_polyhedron()):
        return False
    points = list(D.coefficients) + [y for y in Dp.coefficients if y not in D.coefficients]
    if not all(is_face(Dp.coefficient(y), D.coefficient(y)) for y in points):
        return False
    return intersect(degree(D), Dp.tail.as_polyhedron()) == degree(Dp)


@dataclass
class ValidityReport:
    """ Outcome of `check_fan`. Never raised, only returned. """
    valid: bool = True
    complete: bool = False
    offending_pairs: List[Tuple[str, str, str]] = field(default_factory=list)
    improper: List[str] = field(default_factory=list)
    completeness: Dict[str, bool] = field(default_factory=dict)
    messages: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            'valid': self.valid,
            'complete': self.complete,
            'offending_pairs': [list(pair) for pair in self.offending_pairs],
            'improper': list(self.improper),
            'completeness': dict(self.completeness),
            'messages': list(self.messages),
        }


class DivisorialFanP1:
    """ A finite family of polyhedral divisors on P^1 with a common lattice.

    Args:
        divisors: The polyhedral divisors. They are sorted canonically; unnamed divisors
            are named D1, D2, ... in that order.
        points: Marked points in declaration order. Support points missing from the list
            are appended.
        report: Validity report, set by `validated()`.
    """

    def __init__(self, divisors: Sequence[PolyhedralDivisorP1], points: Sequence[P1Point] = (),
                 report: Optional[ValidityReport] = None):
        divisors = list(divisors)
        if not divisors:
            raise InvalidFan("A divisorial fan needs at least one polyhedral divisor.")
        ranks = {D.ambient_rank for D in divisors}
        if len(ranks) != 1:
            raise InvalidFan(f"Divisors live in lattices of different ranks {sorted(ranks)}.")
        self.ambient_rank = ranks.pop()
        divisors.sort(key=lambda D: D.sort_key())
        for k, D in enumerate(divisors, 1):
            if D.name is None:
                D.name = f"D{k}"
        self.divisors = tuple(divisors)
        declared = []
        for y in list(points) + [y for D in divisors for y in D.support]:
            if y not in declared:
                declared.append(y)
        self.points = tuple(declared)
        self.report = report

    @property
    def is_valid(self) -> bool:
        return self.report is not None and self.report.valid

    @property
    def is_complete(self) -> bool:
        return self.report is not None and self.report.complete

    def validated(self) -> 'DivisorialFanP1':
        """ A copy of the fan carrying the result of `check_fan`. """
        return DivisorialFanP1(self.divisors, self.points, report=check_fan(self))

    def cells(self, y: Optional[P1Point]) -> List[SigmaPolyhedron]:
        """ The distinct non-empty cells of the slice over y (y=None: the tail fan). """
        cells = []
        for D in self.divisors:
            cell = D.tail.as_polyhedron() if y is None else D.coefficient(y)
            if not cell.is_empty and cell not in cells:
                cells.append(cell)
        return cells

    def uncovered_points(self) -> List[P1Point]:
        """ Marked points where every divisor has an empty coefficient. """
        return [y for y in self.points if not self.cells(y)]


def _maximal(cells: List[SigmaPolyhedron]) -> List[SigmaPolyhedron]:
    return [c for c in cells if not any(c != other and is_face(c, other) for other in cells)]


def is_complete_subdivision(cells: List[SigmaPolyhedron], ambient_rank: int) -> bool:
    """ True iff the full-dimensional cells cover Q^n, assuming they meet in common faces.

    Every facet of a full-dimensional cell has to be a face of another one.
    """
    full = [c for c in cells if dimension(c) == ambient_rank]
    if not full:
        return False
    for cell in full:
        for facet in facets(cell):
            if not any(other != cell and is_face(facet, other) for other in full):
                logger.debug("Facet %r of %r is not shared.", facet, cell)
                return False
    return True


def check_fan(fan: DivisorialFanP1) -> ValidityReport:
    """ Validate a divisorial fan and report completeness per point.

    Every divisor must pass the properness criterion, and for every pair the intersection
    must be a face of both. A slice is complete when it is a complete subdivision of N_Q;
    the tail fan is checked as the slice over a general point, keyed "generic".
    """
    report = ValidityReport()
    for D in fan.divisors:
        if not is_proper_p1(D):
            report.valid = False
            report.improper.append(D.name)
            report.messages.append(f"properness criterion deg(D) ⊊ tail(D) failed for divisor '{D.name}' "
                                   f"(the criterion is sufficient only)")
    for D, Dp in combinations(fan.divisors, 2):
        meet = intersection(D, Dp, name=f"{D.name}∩{Dp.name}")
        for big in (D, Dp):
            if not is_face_pdiv(meet, big):
                report.valid = False
                reason = f"{D.name} ∩ {Dp.name} is not a face of {big.name}"
                report.offending_pairs.append((D.name, Dp.name, reason))
                report.messages.append(reason)
                break
    for y in list(fan.points) + [None]:
        key = "generic" if y is None else y.label
        report.completeness[key] = is_complete_subdivision(fan.cells(y), fan.ambient_rank)
    report.complete = report.valid and all(report.completeness.values())
    logger.info("Checked fan with %d divisors: valid=%s complete=%s",
                len(fan.divisors), report.valid, report.complete)
    return report


@dataclass(frozen=True)
class SliceVertex:
    vertex: Tuple[Fraction, ...]
    index: int


@dataclass(frozen=True)
class PointSlice:
    point: P1Point
    vertices: Tuple[SliceVertex, ...]
    trivial: bool


@dataclass(frozen=True)
class TailRay:
    ray: Tuple[int, ...]
    extremal: bool


@dataclass(frozen=True)
class SliceData:
    """ Vertices with their indices per marked point, and the rays of the tail fan. """
    points: Tuple[PointSlice, ...]
    rays: Tuple[TailRay, ...]

    @property
    def nontrivial_points(self) -> List[PointSlice]:
        return [ps for ps in self.points if not ps.trivial]

    @property
    def extremal_rays(self) -> List[Tuple[int, ...]]:
        return [tr.ray for tr in self.rays if tr.extremal]


def _slice_is_trivial(fan: DivisorialFanP1, y: P1Point) -> bool:
    for D in fan.divisors:
        delta = D.coefficient(y)
        if not delta.is_empty and delta != D.tail.as_polyhedron():
            return False
    return set(_maximal(fan.cells(y))) == set(_maximal(fan.cells(None)))


def slices(fan: DivisorialFanP1) -> SliceData:
    """ Slice vertices per marked point (declaration order) and tail rays.

    On P^1 every vertex is extremal. A ray rho is extremal iff some divisor D has rho as a
    ray of its tail and rho does not meet deg(D).
    """
    points = []
    for y in fan.points:
        verts = sorted({v for cell in fan.cells(y) for v in cell.vertices})
        points.append(PointSlice(y, tuple(SliceVertex(v, vertex_index(v)) for v in verts),
                                 _slice_is_trivial(fan, y)))
    rays = sorted({r for D in fan.divisors for r in D.tail.generators})
    tail_rays = []
    for r in rays:
        ray_cone = Cone(fan.ambient_rank, [r]).as_polyhedron()
        extremal = any(r in D.tail.generators and intersect(ray_cone, degree(D)).is_empty for D in fan.divisors)
        tail_rays.append(TailRay(r, extremal))
    logger.debug("Slices: %d marked points (%d non-trivial), %d rays (%d extremal)",
                 len(points), sum(not p.trivial for p in points), len(tail_rays),
                 sum(t.extremal for t in tail_rays))
    return SliceData(tuple(points), tuple(tail_rays))


def graded_piece_dim(D: PolyhedralDivisorP1, u) -> int:
    """ dim of the weight-u piece of A(D): max(0, 1 + sum_Z floor(min<u, Delta_Z>)).

    Raises:
        NonCompleteLocus: if D has an empty coefficient.
        UnboundedBelow: if u is not in the dual tail cone.
    """
    if D.has_empty_coefficient:
        raise NonCompleteLocus(f"Divisor {D.name or ''} has empty coefficients; its locus is not all of P^1.")
    values = evaluate(D, u)
    return max(0, 1 + sum(floor(v) for v in values.values()))
