# Copyright 2026, tcox developers
"""

The complexity-one engine.

    divisorial fan -> ComplexityOneData + class group with degree map
                   -> Cox ring presentation -> canonical class, moving cone

Column order of the class group relation matrix is fixed: the base class `D0`, then
the D-vertices (points in declaration order, vertices sorted), then the extremal rays
(sorted). Labels are `T{i}_{j}` for the j-th vertex (from 1) over the i-th non-trivial
point (from 0) and `S{k}` for the k-th extremal ray.

With fewer than two marked points the data are padded with trivial points, each
carrying a single generator of degree D0 and isotropy order 1; this keeps the
coordinate functions of P^1 in the ring.

"""
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from tcox.exceptions import DegeneratePoints, InvalidFan, MissingDegree, NonCompleteLocus
from tcox.intlinalg import (
    FGAbelianGroup, GroupElement, change_basis, cokernel, syz2, trinomial_syzygies,
)
from tcox.polyhedra import Cone, cone_intersection, dot
from .pdiv import DivisorialFanP1, P1Point, slices
from .presentation import (
    Generator, GradedPresentation, Grading, GradingStatus, Monomial, Polynomial, ProvenanceTag,
    saturation_grading,
)

logger = logging.getLogger(__name__)

BASE_CLASS = "D0"

# Positions used for padding points, tried in this order.
PADDING_CANDIDATES = [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1), (1, -1), (1, 3), (3, 1)]


@dataclass(frozen=True)
class ComplexityOneData:
    """ Points a_i = [b_i:c_i], D-labels with isotropy orders per point, and E-labels. """
    points: Tuple[P1Point, ...]
    labels: Tuple[Tuple[str, ...], ...]
    isotropy: Tuple[Tuple[int, ...], ...]
    e_labels: Tuple[str, ...] = ()
    fan: Optional[DivisorialFanP1] = None

    def __post_init__(self):
        if len(self.labels) != len(self.points) or len(self.isotropy) != len(self.points):
            raise ValueError("Need one label list and one isotropy list per point.")
        for i, (labels, orders) in enumerate(zip(self.labels, self.isotropy)):
            if not labels or len(labels) != len(orders):
                raise ValueError(f"Point {i} needs at least one label and one isotropy order per label.")
            if any(l < 1 for l in orders):
                raise ValueError(f"Isotropy orders must be positive, got {orders} at point {i}.")
        for i in range(len(self.points)):
            for j in range(i + 1, len(self.points)):
                if self.points[i] == self.points[j]:
                    raise DegeneratePoints(f"Points {i} and {j} coincide.")
        all_labels = [label for labels in self.labels for label in labels] + list(self.e_labels)
        if len(set(all_labels)) != len(all_labels):
            raise ValueError(f"Labels are not unique: {all_labels}")

    @property
    def r(self) -> int:
        """ Number of points minus one. """
        return len(self.points) - 1

    @property
    def d_labels(self) -> List[str]:
        return [label for labels in self.labels for label in labels]

    def monomial(self, i: int) -> Monomial:
        """ f_i = prod_j T_ij^l_ij """
        return Monomial(dict(zip(self.labels[i], self.isotropy[i])))

    def padded(self) -> 'ComplexityOneData':
        """ Add trivial points until there are at least two. """
        points, labels, isotropy = list(self.points), list(self.labels), list(self.isotropy)
        candidates = iter(PADDING_CANDIDATES)
        while len(points) < 2:
            y = P1Point(*next(candidates))
            if y in points:
                continue
            points.append(y)
            labels.append((f"T{len(points) - 1}_1",))
            isotropy.append((1,))
        if len(points) == len(self.points):
            return self
        return replace(self, points=tuple(points), labels=tuple(labels), isotropy=tuple(isotropy))


@dataclass(frozen=True)
class ClassGroupData:
    """ Relation matrix of the class group and the resulting grading. """
    columns: Tuple[str, ...]
    matrix: Tuple[Tuple[int, ...], ...]
    grading: Grading

    @property
    def group(self) -> FGAbelianGroup:
        return self.grading.group

    @property
    def degrees(self) -> Dict[str, GroupElement]:
        return self.grading.degrees


def _require_fan(fan: DivisorialFanP1) -> DivisorialFanP1:
    if fan.report is None:
        fan = fan.validated()
    if not fan.is_valid:
        raise InvalidFan("Divisorial fan is not valid: " + "; ".join(fan.report.messages), report=fan.report)
    uncovered = fan.uncovered_points()
    if uncovered:
        raise NonCompleteLocus("Every divisor has an empty coefficient at " +
                               ", ".join(y.label for y in uncovered) + "; the locus does not cover P^1.")
    return fan


def from_fan(fan: DivisorialFanP1) -> ComplexityOneData:
    """ Marked points, D-labels and E-labels of a valid divisorial fan.

    Marked points are the points with non-trivial slices, D-labels their vertices with
    isotropy order mu(v), E-labels the extremal rays.

    Raises:
        InvalidFan: if check_fan fails.
        NonCompleteLocus: if some marked point is not covered by any divisor.
    """
    fan = _require_fan(fan)
    sd = slices(fan)
    points = sd.nontrivial_points
    labels = tuple(tuple(f"T{i}_{j}" for j in range(1, len(ps.vertices) + 1)) for i, ps in enumerate(points))
    isotropy = tuple(tuple(sv.index for sv in ps.vertices) for ps in points)
    e_labels = tuple(f"S{k}" for k in range(1, len(sd.extremal_rays) + 1))
    logger.info("Fan data: %d marked points, %d D-labels, %d E-labels",
                len(points), sum(map(len, labels)), len(e_labels))
    return ComplexityOneData(tuple(ps.point for ps in points), labels, isotropy, e_labels, fan=fan)


def class_group_from_fan(fan: DivisorialFanP1, group_basis=None) -> ClassGroupData:
    """ Class group of X(fan) with the degrees of D0, the D-vertices and the E-rays.

    The relation matrix has a row per non-trivial point, encoding sum_v mu(v) D_v = D0,
    and a row per basis vector u of M, encoding div(chi^u) = sum <u, v_rho> E_rho +
    sum mu(v) <u, v> D_v.

    Args:
        fan: A divisorial fan; validated if it has not been.
        group_basis: Optional (free, torsion) lists of {label: coefficient} maps naming the
            generators to express degrees in.
    """
    fan = _require_fan(fan)
    sd = slices(fan)
    points = sd.nontrivial_points
    n = fan.ambient_rank
    columns = [BASE_CLASS]
    vertex_columns = []
    for i, ps in enumerate(points):
        for j, sv in enumerate(ps.vertices, 1):
            columns.append(f"T{i}_{j}")
            vertex_columns.append((i, sv))
    rays = sd.extremal_rays
    columns += [f"S{k}" for k in range(1, len(rays) + 1)]
    rows = []
    for i, ps in enumerate(points):
        rows.append([-1] + [sv.index if vi == i else 0 for vi, sv in vertex_columns] + [0] * len(rays))
    for e in range(n):
        u = tuple(1 if k == e else 0 for k in range(n))
        row = [0]
        for _, sv in vertex_columns:
            value = sv.index * dot(u, sv.vertex)
            assert value.denominator == 1, "mu(v) must clear the denominators of v"
            row.append(int(value))
        row += [int(dot(u, ray)) for ray in rays]
        rows.append(row)
    group, images = cokernel(rows, ncols=len(columns))
    degrees = dict(zip(columns, images))
    if group_basis is not None:
        group, degrees = rebase(group, degrees, *group_basis)
    logger.info("Class group: %s from a %dx%d relation matrix", group, len(rows), len(columns))
    return ClassGroupData(tuple(columns), tuple(tuple(r) for r in rows), Grading(group, degrees))


def rebase(group: FGAbelianGroup, degrees: Dict[str, GroupElement], free=(), torsion=()
           ) -> Tuple[FGAbelianGroup, Dict[str, GroupElement]]:
    """ Express degrees in generators given as integer combinations of labels. """
    def combine(spec):
        total = group.zero()
        for label, k in spec.items():
            if label not in degrees:
                raise MissingDegree(f"Group basis refers to unknown label '{label}'.")
            total = total + int(k) * degrees[label]
        return total

    labels = list(degrees)
    new_group, images = change_basis(group, [degrees[label] for label in labels],
                                     [combine(s) for s in free], [combine(s) for s in torsion])
    return new_group, dict(zip(labels, images))


def _degree(grading: Grading, label: str) -> GroupElement:
    try:
        return grading.degrees[label]
    except KeyError:
        raise MissingDegree(f"The grading has no degree for '{label}'.") from None


def relation_syzygies(data: ComplexityOneData, relation_basis: str = 'trinomial') -> List[Tuple[Fraction, ...]]:
    if relation_basis == 'trinomial':
        return trinomial_syzygies(data.points)
    if relation_basis == 'saturated':
        return [tuple(Fraction(x) for x in beta) for beta in syz2(data.points)]
    raise ValueError(f"Unknown relation basis {relation_basis!r}; use 'trinomial' or 'saturated'.")


def cox_ring(data: ComplexityOneData, grading: Optional[Grading] = None,
             relation_basis: str = 'trinomial') -> GradedPresentation:
    """ Cox ring presentation of the complexity-one data.

    Generators are the E-labels followed by the D-labels; relations are sum_i beta_i f_i
    for beta in a syzygy basis of the point representatives (max(0, r-1) of them).

    Args:
        data: Complexity-one data; padded to two points if needed.
        grading: Degrees for every label and for D0. Without it the ring is graded by
            saturation with status free-part-only.
        relation_basis: 'trinomial' (consecutive triples) or 'saturated' (HNF lattice basis).
    """
    padding = _padding_labels(data)
    data = data.padded()
    relations = []
    for beta in relation_syzygies(data, relation_basis):
        rel = Polynomial({data.monomial(i): b for i, b in enumerate(beta) if b})
        relations.append(rel)
    tags = [(label, ProvenanceTag.E_RAY) for label in data.e_labels] + \
           [(label, ProvenanceTag.D_VERTEX) for label in data.d_labels]
    if grading is None:
        ungraded = GradedPresentation(None, tuple(Generator(label, None, tag) for label, tag in tags),
                                      tuple(relations), GradingStatus.UNGRADED)
        return saturation_grading(ungraded)
    generators = []
    for label, tag in tags:
        degree = grading.degrees.get(label)
        if degree is None:
            if label not in padding:
                raise MissingDegree(f"The grading has no degree for '{label}'.")
            degree = _degree(grading, BASE_CLASS)
        generators.append(Generator(label, degree, tag))
    return GradedPresentation(grading.group, tuple(generators), tuple(relations), grading.status)


def _padding_labels(data: ComplexityOneData) -> set:
    return set(data.padded().d_labels) - set(data.d_labels)


def canonical_class(data: ComplexityOneData, grading: Grading, i: int = 0) -> GroupElement:
    """ max(0, r-1) * sum_j l_ij D_ij - sum_k E_k - sum_ij D_ij, for the arm choice i. """
    padding = _padding_labels(data)
    data = data.padded()
    if not 0 <= i <= data.r:
        raise IndexError(f"Arm index {i} out of range 0..{data.r}.")
    def deg(label):
        if label in grading.degrees:
            return grading.degrees[label]
        if label in padding:
            return _degree(grading, BASE_CLASS)
        raise MissingDegree(f"The grading has no degree for '{label}'.")

    total = grading.group.zero()
    coefficient = max(0, data.r - 1)
    for label, l in zip(data.labels[i], data.isotropy[i]):
        total = total + coefficient * l * deg(label)
    for label in list(data.e_labels) + data.d_labels:
        total = total - deg(label)
    return total


def moving_cone(presentation: GradedPresentation) -> Cone:
    """ Intersection over all generators g of the cone spanned by the other degrees.

    Lives in the free part of the class group tensored with Q.
    """
    group = presentation.grading
    if group is None:
        raise MissingDegree("The presentation is ungraded.")
    a = group.free_rank
    degrees = [g.degree.free_part for g in presentation.generators]
    cones = [Cone(a, degrees[:k] + degrees[k + 1:]) for k in range(len(degrees))]
    if not cones:
        return Cone.zero(a)
    return cone_intersection(cones)
