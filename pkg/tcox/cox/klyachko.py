# Copyright 2026, tcox developers
"""

Cox rings of projectivized rank-2 equivariant bundles over complete toric varieties.

A rank-2 equivariant bundle is described per ray rho of the base fan by the jump indices
i0 <= i1 of its filtration and, for a proper jump (i0 < i1), the line L = E^rho(i0). The
distinct lines form the set of marked points of the fiber P^1.

Generators are `S{k}` for the rays (input order) and `T{k}` for the lines (order of first
appearance). With fewer than two lines the fiber coordinates are completed by the extra
generators `U{k}`.

Degrees live in Cl(P(E)) = Cl(X) + Z*xi:

* deg S_rho = ([D_rho], 0)
* deg T_L = (-sum over rho with L^rho = L of (i1 - i0)[D_rho], 1)
* deg U_k = (0, 1)

"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from tcox.exceptions import DegeneratePoints, InvalidBundle
from tcox.intlinalg import FGAbelianGroup, GroupElement, cokernel, kernel_basis, syz2
from tcox.polyhedra import primitive
from .pdiv import P1Point
from .presentation import (
    Generator, GradedPresentation, GradingStatus, Monomial, Polynomial, ProvenanceTag,
    saturation_grading,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BundleRay:
    """ A ray v of the base fan with the jumps (i0, i1) and the line L = E^v(i0). """
    ray: Tuple[int, ...]
    i0: int
    i1: int
    line: Optional[P1Point] = None

    @property
    def jumps(self) -> bool:
        return self.i0 < self.i1


@dataclass(frozen=True)
class Rank2BundleData:
    ambient_rank: int
    rays: Tuple[BundleRay, ...]

    def __post_init__(self):
        if self.ambient_rank < 1:
            raise InvalidBundle(f"The base lattice needs rank at least 1, got {self.ambient_rank}.")
        seen = set()
        for k, r in enumerate(self.rays, 1):
            if len(r.ray) != self.ambient_rank:
                raise InvalidBundle(f"Ray {k} {r.ray} does not live in Z^{self.ambient_rank}.")
            if any(r.ray) and tuple(primitive(r.ray)) != tuple(r.ray):
                raise InvalidBundle(f"Ray {k} {r.ray} is not primitive.")
            if not any(r.ray):
                raise InvalidBundle(f"Ray {k} is zero.")
            if r.ray in seen:
                raise InvalidBundle(f"Ray {r.ray} is listed twice.")
            seen.add(r.ray)
            if r.i0 > r.i1:
                raise InvalidBundle(f"Ray {k} has i0 = {r.i0} > i1 = {r.i1}.")
            if r.jumps and r.line is None:
                raise InvalidBundle(f"Ray {k} jumps from {r.i0} to {r.i1} but names no line L.")

    def lines(self) -> List[P1Point]:
        """ Distinct lines of the proper jumps, in order of first appearance. """
        lines = []
        for r in self.rays:
            if r.jumps and r.line not in lines:
                lines.append(r.line)
        return lines


def _check_rays(rays: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    rays = [tuple(int(x) for x in v) for v in rays]
    if not rays:
        raise InvalidBundle("Need at least one ray.")
    n = len(rays[0])
    if any(len(v) != n for v in rays):
        raise InvalidBundle("Rays have different lengths.")
    if len(set(rays)) != len(rays):
        raise InvalidBundle(f"Repeated rays in {rays}.")
    for v in rays:
        if not any(v) or tuple(primitive(v)) != v:
            raise InvalidBundle(f"Ray {v} is not a primitive nonzero vector.")
    return rays


def toric_class_group(rays: Sequence[Sequence[int]]) -> Tuple[FGAbelianGroup, List[GroupElement]]:
    """ Cl(X) = Z^rays / M for the toric variety with the given rays, and the classes [D_rho].

    Completeness of the fan is the caller's assertion.

    Examples:
        >>> group, degrees = toric_class_group([(1, 0), (0, 1), (-1, -1)])
        >>> str(group)
        'Z'
    """
    rays = _check_rays(rays)
    n = len(rays[0])
    rows = [[v[k] for v in rays] for k in range(n)]
    return cokernel(rows, ncols=len(rays))


def _bundle_grading(rays: Sequence[Tuple[int, ...]]) -> Tuple[FGAbelianGroup, List[GroupElement], GroupElement]:
    """ Cl(X) + Z*xi as a cokernel with columns (rays, xi); returns (group, ray classes, xi). """
    n = len(rays[0])
    rows = [[v[k] for v in rays] + [0] for k in range(n)]
    group, images = cokernel(rows, ncols=len(rays) + 1)
    return group, images[:-1], images[-1]


def tangent_bundle_data(rays: Sequence[Sequence[int]]) -> Rank2BundleData:
    """ Filtration data of the tangent sheaf of a complete toric surface: (i0, i1) = (-1, 0), L = [v]. """
    rays = _check_rays(rays)
    if len(rays[0]) != 2:
        raise InvalidBundle("The tangent sheaf is of rank 2 only over surfaces.")
    return Rank2BundleData(2, tuple(BundleRay(v, -1, 0, P1Point(*v)) for v in rays))


def projectivization_cox(d: Rank2BundleData, grading: str = 'exact') -> GradedPresentation:
    """ Cox ring of P(E) for a rank-2 equivariant bundle E.

    Args:
        d: Jump data per ray.
        grading: 'exact' for the class group of P(E) (status full, the base fan is
            asserted complete), or 'saturation' for the finest homogeneous grading.

    Returns:
        Generators S_rho, T_L (and U_k if there are fewer than two lines); one relation
        sum_L lambda_L S^L T_L per syzygy lambda of the line representatives.
    """
    if not d.rays:
        raise InvalidBundle("A bundle needs at least one ray.")
    lines = d.lines()
    try:
        syzygies = syz2(lines)
    except DegeneratePoints as exc:
        raise InvalidBundle(f"Lines of the filtration: {exc}") from None
    s_labels = [f"S{k}" for k in range(1, len(d.rays) + 1)]
    t_labels = [f"T{k}" for k in range(1, len(lines) + 1)]
    u_labels = [f"U{k}" for k in range(1, max(0, 2 - len(lines)) + 1)]
    fiber_parts = []
    for L, t in zip(lines, t_labels):
        exps = {s: r.i1 - r.i0 for s, r in zip(s_labels, d.rays) if r.jumps and r.line == L}
        fiber_parts.append(Monomial(exps) * Monomial({t: 1}))
    relations = tuple(Polynomial({m: Fraction(c) for m, c in zip(fiber_parts, beta) if c}) for beta in syzygies)
    tags = [(s, ProvenanceTag.BUNDLE_S) for s in s_labels] + \
           [(t, ProvenanceTag.BUNDLE_T) for t in t_labels + u_labels]
    if u_labels:
        logger.info("Only %d distinct lines; adding fiber generators %s", len(lines), u_labels)
    logger.info("Projectivized bundle: %d generators, %d relations", len(tags), len(relations))
    if grading == 'saturation':
        ungraded = GradedPresentation(None, tuple(Generator(l, None, t) for l, t in tags), relations,
                                      GradingStatus.UNGRADED)
        return saturation_grading(ungraded)
    if grading != 'exact':
        raise ValueError(f"Unknown grading {grading!r}; use 'exact' or 'saturation'.")
    group, ray_classes, xi = _bundle_grading([r.ray for r in d.rays])
    degrees: Dict[str, GroupElement] = dict(zip(s_labels, ray_classes))
    for L, t in zip(lines, t_labels):
        deg = xi
        for s, r in zip(s_labels, d.rays):
            if r.jumps and r.line == L:
                deg = deg - (r.i1 - r.i0) * degrees[s]
        degrees[t] = deg
    for u in u_labels:
        degrees[u] = xi
    generators = tuple(Generator(label, degrees[label], tag) for label, tag in tags)
    return GradedPresentation(group, generators, relations, GradingStatus.FULL)


def cotangent_lines(rays: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """ Rays modulo sign, one representative (the first listed) each. """
    reps = []
    for v in _check_rays(rays):
        if v not in reps and tuple(-x for x in v) not in reps:
            reps.append(v)
    return reps


def cotangent_cox(rays: Sequence[Sequence[int]], grading: str = 'exact') -> GradedPresentation:
    """ Cox ring of the projectivized cotangent bundle of a smooth complete toric variety.

    One T_tau per ray tau up to sign; relations sum_tau lambda_tau S^tau T_tau over the
    integer syzygies lambda of the representatives, with S^tau = S_tau S_-tau when -tau
    is a ray and S^tau = S_tau otherwise.
    """
    rays = _check_rays(rays)
    if len(rays) < 2:
        raise InvalidBundle(f"The cotangent construction needs at least 2 rays, got {len(rays)}.")
    n = len(rays[0])
    reps = cotangent_lines(rays)
    index = {v: k for k, v in enumerate(rays)}
    s_labels = [f"S{k}" for k in range(1, len(rays) + 1)]
    t_labels = [f"T{k}" for k in range(1, len(reps) + 1)]

    def s_part(tau):
        labels = [s_labels[index[tau]]]
        minus = tuple(-x for x in tau)
        if minus in index:
            labels.append(s_labels[index[minus]])
        return labels

    fiber_parts = [Monomial({s: 1 for s in s_part(tau)}) * Monomial({t: 1}) for tau, t in zip(reps, t_labels)]
    syzygies = kernel_basis([[v[k] for v in reps] for k in range(n)], ncols=len(reps))
    relations = tuple(Polynomial({m: Fraction(c) for m, c in zip(fiber_parts, beta) if c}) for beta in syzygies)
    tags = [(s, ProvenanceTag.BUNDLE_S) for s in s_labels] + [(t, ProvenanceTag.BUNDLE_T) for t in t_labels]
    logger.info("Projectivized cotangent bundle: %d generators, %d relations", len(tags), len(relations))
    if grading == 'saturation':
        ungraded = GradedPresentation(None, tuple(Generator(l, None, t) for l, t in tags), relations,
                                      GradingStatus.UNGRADED)
        return saturation_grading(ungraded)
    if grading != 'exact':
        raise ValueError(f"Unknown grading {grading!r}; use 'exact' or 'saturation'.")
    group, ray_classes, xi = _bundle_grading(rays)
    degrees: Dict[str, GroupElement] = dict(zip(s_labels, ray_classes))
    for tau, t in zip(reps, t_labels):
        deg = xi
        for s in s_part(tau):
            deg = deg - degrees[s]
        degrees[t] = deg
    generators = tuple(Generator(label, degrees[label], tag) for label, tag in tags)
    return GradedPresentation(group, generators, relations, GradingStatus.FULL)
