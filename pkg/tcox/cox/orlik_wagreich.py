# Copyright 2026, tcox developers
"""

Smooth complete rational K*-surfaces given by their Orlik-Wagreich graphs.

A graph has a source curve F+ and a sink curve F-, joined by arms of invariant curves.
Arm i sits over the point a_i of P^1 and lists the curves from F+ towards F- with their
negated self-intersection numbers b_1 .. b_n. Curve j of arm i gets the label `T{i}_{j}`
(i from 0, j from 1); the fixed curves give `Splus` and `Sminus`.

The exponent of T{i}_{j} in the relations is the isotropy order l_j of that curve, read
off the continued fraction b_1 - 1/(b_2 - 1/(...)).

Singular models are reached by contracting curves, i.e. setting the generators of the
contracted curves to 1.

"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from tcox.exceptions import InvalidGraph
from tcox.intlinalg import cokernel, kernel_basis, rank
from .pdiv import P1Point
from .pipeline import ComplexityOneData, relation_syzygies
from .presentation import (
    Generator, GradedPresentation, Grading, GradingStatus, Polynomial, ProvenanceTag,
    saturation_grading, substitute_one,
)

logger = logging.getLogger(__name__)

SOURCE = "Splus"
SINK = "Sminus"


@dataclass(frozen=True)
class OWArm:
    point: P1Point
    self_intersections: Tuple[int, ...]

    def __post_init__(self):
        if not self.self_intersections:
            raise InvalidGraph(f"Arm over {self.point.label} has no curves.")


@dataclass(frozen=True)
class OWGraph:
    """ Arms of an Orlik-Wagreich graph, optionally with the self-intersections (c+, c-) of F+ and F-. """
    arms: Tuple[OWArm, ...]
    fixed_curves: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if not self.arms:
            raise InvalidGraph("An Orlik-Wagreich graph needs at least one arm.")
        seen = []
        for i, arm in enumerate(self.arms):
            if arm.point in seen:
                raise InvalidGraph(f"Arm {i} repeats the point {arm.point.label}.")
            seen.append(arm.point)

    def labels(self, i: int) -> Tuple[str, ...]:
        return tuple(f"T{i}_{j}" for j in range(1, len(self.arms[i].self_intersections) + 1))

    @property
    def curve_labels(self) -> List[str]:
        """ Splus, Sminus, then the arm curves arm by arm. """
        return [SOURCE, SINK] + [label for i in range(len(self.arms)) for label in self.labels(i)]


@dataclass(frozen=True)
class ContractionSpec:
    exceptional_labels: FrozenSet[str] = field(default_factory=frozenset)

    @classmethod
    def minus_two_curves(cls, g: OWGraph) -> 'ContractionSpec':
        """ Every curve of self-intersection at most -2.

        Fixed curves count only when `fixed_curves` is known.
        """
        labels = set()
        if g.fixed_curves is not None:
            for label, c in zip((SOURCE, SINK), g.fixed_curves):
                if c <= -2:
                    labels.add(label)
        for i, arm in enumerate(g.arms):
            labels.update(label for label, b in zip(g.labels(i), arm.self_intersections) if b >= 2)
        return cls(frozenset(labels))


def continuant(b: Sequence[int]) -> List[int]:
    """ The sequence l_1 .. l_{n+1} of l_{j+1} = b_j l_j - l_{j-1}, with l_0 = 0 and l_1 = 1.

    Examples:
        >>> continuant([2, 1, 2])
        [1, 2, 1, 0]
    """
    prev, cur = 0, 1
    out = [cur]
    for bj in b:
        prev, cur = cur, int(bj) * cur - prev
        out.append(cur)
    return out


def arm_isotropy(b: Sequence[int]) -> List[int]:
    """ Isotropy orders l_1 .. l_n of the curves of an arm.

    l_j is the numerator of b_1 - 1/(b_2 - 1/(... - 1/b_{j-1})) in lowest terms.

    Examples:
        >>> arm_isotropy([2, 2, 2, 2, 1])
        [1, 2, 3, 4, 5]

    Raises:
        InvalidGraph: if some l_j vanishes.
    """
    if not b:
        raise InvalidGraph("An arm needs at least one curve.")
    orders = [abs(l) for l in continuant(b)[:len(b)]]
    if any(l == 0 for l in orders):
        raise InvalidGraph(f"Self-intersections {list(b)} give a vanishing isotropy order: {orders}.")
    return orders


def complexity_one_data(g: OWGraph) -> ComplexityOneData:
    return ComplexityOneData(
        points=tuple(arm.point for arm in g.arms),
        labels=tuple(g.labels(i) for i in range(len(g.arms))),
        isotropy=tuple(tuple(arm_isotropy(arm.self_intersections)) for arm in g.arms),
        e_labels=(SOURCE, SINK),
    )


def intersection_matrix(g: OWGraph) -> Tuple[List[str], List[List[int]]]:
    """ Intersection numbers of all invariant curves, in `curve_labels` order.

    Raises:
        InvalidGraph: if the graph carries no `fixed_curves`.
    """
    if g.fixed_curves is None:
        raise InvalidGraph("The intersection form needs the self-intersections of F+ and F-.")
    labels = g.curve_labels
    index = {label: k for k, label in enumerate(labels)}
    M = [[0] * len(labels) for _ in labels]

    def meet(a, b):
        M[index[a]][index[b]] = M[index[b]][index[a]] = 1

    M[0][0], M[1][1] = g.fixed_curves
    for i, arm in enumerate(g.arms):
        arm_labels = g.labels(i)
        for label, b in zip(arm_labels, arm.self_intersections):
            M[index[label]][index[label]] = -int(b)
        meet(SOURCE, arm_labels[0])
        for a, b in zip(arm_labels, arm_labels[1:]):
            meet(a, b)
        meet(arm_labels[-1], SINK)
    return labels, M


def intersection_grading(g: OWGraph) -> Grading:
    """ Cl = Z^curves / numerically trivial classes, a free group.

    Raises:
        InvalidGraph: if an arm does not close up at F- or the form has the wrong rank.
    """
    labels, M = intersection_matrix(g)
    for i, arm in enumerate(g.arms):
        l = continuant(arm.self_intersections)
        if l[-1] != 0 or abs(l[-2]) != 1:
            raise InvalidGraph(f"Arm {i} with self-intersections {list(arm.self_intersections)} "
                               f"does not close up at F- (continuant {l}).")
    expected = len(labels) - len(g.arms)
    found = rank(M, ncols=len(labels))
    if found != expected:
        raise InvalidGraph(f"The intersection form has rank {found}, expected {expected} "
                           f"for {len(labels)} curves on {len(g.arms)} arms.")
    group, images = cokernel(kernel_basis(M, ncols=len(labels)), ncols=len(labels))
    logger.info("Intersection grading: %s", group)
    return Grading(group, dict(zip(labels, images)), GradingStatus.FULL)


def resolution_cox(g: OWGraph, relation_basis: str = 'trinomial') -> GradedPresentation:
    """ Cox ring of the smooth surface: generators Splus, Sminus and the arm curves.

    Graded by the intersection form when `fixed_curves` is known, else by saturation
    (status free-part-only).
    """
    data = complexity_one_data(g)
    relations = tuple(Polynomial({data.monomial(i): c for i, c in enumerate(beta) if c})
                      for beta in relation_syzygies(data, relation_basis))
    tags = [(SOURCE, ProvenanceTag.F_PLUS), (SINK, ProvenanceTag.F_MINUS)] + \
           [(label, ProvenanceTag.D_VERTEX) for label in data.d_labels]
    logger.info("Resolution Cox ring: %d generators, %d relations", len(tags), len(relations))
    if g.fixed_curves is None:
        ungraded = GradedPresentation(None, tuple(Generator(label, None, tag) for label, tag in tags),
                                      relations, GradingStatus.UNGRADED)
        return saturation_grading(ungraded)
    grading = intersection_grading(g)
    generators = tuple(Generator(label, grading.degrees[label], tag) for label, tag in tags)
    return GradedPresentation(grading.group, generators, relations, GradingStatus.FULL)


def contract(P: GradedPresentation, spec: ContractionSpec, grading: Optional[Grading] = None
             ) -> GradedPresentation:
    """ Remove the generators of the contracted curves.

    The result is ungraded unless a grading of the contracted surface is supplied, e.g.
    from the divisorial fan route.
    """
    logger.info("Contracting %d curves", len(spec.exceptional_labels))
    return substitute_one(P, sorted(spec.exceptional_labels), grading)


def renaming_to_fan_route(g: OWGraph, spec: ContractionSpec) -> Dict[str, str]:
    """ Map surviving arm curves to fan-route labels: the k-th survivor of arm i becomes T{i}_{k}. """
    mapping = {}
    for i in range(len(g.arms)):
        survivors = [label for label in g.labels(i) if label not in spec.exceptional_labels]
        for k, label in enumerate(survivors, 1):
            mapping[label] = f"T{i}_{k}"
    return mapping
