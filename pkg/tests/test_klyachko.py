import itertools

import pytest

from tcox.exceptions import InvalidBundle
from tcox.intlinalg import FGAbelianGroup
from tcox.cox.klyachko import (
    BundleRay, Rank2BundleData, cotangent_cox, cotangent_lines, projectivization_cox, tangent_bundle_data,
    toric_class_group,
)
from tcox.cox.pdiv import P1Point
from tcox.cox.pipeline import class_group_from_fan, cox_ring, from_fan
from tcox.cox.presentation import (
    GradingStatus, ProvenanceTag, ci_dimension, complete_intersection_canonical_class, degree_of,
    grading_isomorphic, is_homogeneous, parse_relation, relation_space_equal, same_relations,
)

P2_RAYS = [(1, 0), (0, 1), (-1, -1)]
P1XP1_RAYS = [(1, 0), (0, 1), (-1, 0), (0, -1)]
F1_RAYS = [(1, 0), (0, 1), (-1, 1), (0, -1)]


def _fiber_labels(P):
    return [g.label for g in P.generators if g.tag == ProvenanceTag.BUNDLE_T]


def _is_linear_in_fiber(P):
    fiber = set(_fiber_labels(P))
    return all(sum(m.exponents.get(label, 0) for label in fiber) == 1
               for rel in P.relations for m in rel.monomials)


def test_toric_class_group():
    group, degrees = toric_class_group(P2_RAYS)
    assert group == FGAbelianGroup(1)
    assert degrees[0] == degrees[1] == degrees[2]
    group, _ = toric_class_group(F1_RAYS)
    assert group == FGAbelianGroup(2)
    with pytest.raises(InvalidBundle):
        toric_class_group([(2, 0), (0, 1)])


def test_tangent_p2():
    P = projectivization_cox(tangent_bundle_data(P2_RAYS))
    assert P.grading == FGAbelianGroup(2)
    assert P.grading_status == GradingStatus.FULL
    assert P.labels == ["S1", "S2", "S3", "T1", "T2", "T3"]
    assert relation_space_equal(P.relations, [parse_relation("S1*T1 + S2*T2 + S3*T3")])
    assert is_homogeneous(P)
    assert _is_linear_in_fiber(P)
    assert ci_dimension(P) == 5
    # S_k T_k all have the class of the tautological divisor
    xi = degree_of(P.relations[0].monomials[0], P)
    assert all(degree_of(m, P) == xi for m in P.relations[0].monomials)
    # the flag variety: -K = 2 (h1 + h2) with h1 = deg S_k and h2 = deg T_k
    assert complete_intersection_canonical_class(P) == P.grading.zero() - 2 * (P.degree("S1") + P.degree("T1"))


def test_tangent_p2_saturation_grading():
    P = projectivization_cox(tangent_bundle_data(P2_RAYS), grading='saturation')
    assert P.grading == FGAbelianGroup(4)
    assert P.grading_status == GradingStatus.FREE_PART_ONLY
    assert cotangent_cox(P2_RAYS, grading="saturation").grading_status == GradingStatus.FREE_PART_ONLY
    assert is_homogeneous(P)
    with pytest.raises(ValueError):
        projectivization_cox(tangent_bundle_data(P2_RAYS), grading='coarse')


def test_tangent_needs_surface():
    with pytest.raises(InvalidBundle):
        tangent_bundle_data([(1,), (-1,)])


def test_trivial_bundle():
    d = Rank2BundleData(1, (BundleRay((1,), 0, 0), BundleRay((-1,), 0, 0)))
    P = projectivization_cox(d)
    assert P.labels == ["S1", "S2", "U1", "U2"]
    assert P.relations == ()
    assert P.grading == FGAbelianGroup(2)
    assert P.degree("U1") == P.degree("U2")
    assert P.degree("S1") == P.degree("S2")


def test_distinct_jumps():
    d = Rank2BundleData(1, (BundleRay((1,), -1, 0, P1Point(1, 0)), BundleRay((-1,), -1, 0, P1Point(0, 1))))
    P = projectivization_cox(d)
    assert P.labels == ["S1", "S2", "T1", "T2"]
    assert P.relations == ()
    assert P.degree("T1") == P.degree("T2")


def test_hirzebruch_f1():
    d = Rank2BundleData(1, (BundleRay((1,), -1, 0, P1Point(1, 0)), BundleRay((-1,), 0, 0)))
    P = projectivization_cox(d)
    assert P.labels == ["S1", "S2", "T1", "U1"]
    assert P.relations == ()
    assert P.degree("T1") == P.degree("U1") - P.degree("S1")


def test_shared_line_multiplies_exponents():
    L = P1Point(1, 1)
    d = Rank2BundleData(2, (
        BundleRay((1, 0), -2, 0, L),
        BundleRay((0, 1), -1, 0, P1Point(1, 0)),
        BundleRay((-1, -1), 0, 1, L),
        BundleRay((1, 1), -1, 0, P1Point(0, 1)),
    ))
    assert d.lines() == [L, P1Point(1, 0), P1Point(0, 1)]
    P = projectivization_cox(d)
    (rel,) = P.relations
    exponents = [m.exponents for m in rel.monomials]
    assert {"S1": 2, "S3": 1, "T1": 1} in exponents
    assert is_homogeneous(P)


def test_bundle_validation():
    with pytest.raises(InvalidBundle):
        Rank2BundleData(1, (BundleRay((1,), 1, 0),))
    with pytest.raises(InvalidBundle):
        Rank2BundleData(1, (BundleRay((1,), -1, 0),))
    with pytest.raises(InvalidBundle):
        Rank2BundleData(1, (BundleRay((2,), 0, 0),))
    with pytest.raises(InvalidBundle):
        Rank2BundleData(1, (BundleRay((1,), 0, 0), BundleRay((1,), 0, 0)))
    with pytest.raises(InvalidBundle):
        Rank2BundleData(2, (BundleRay((1,), 0, 0),))
    with pytest.raises(InvalidBundle):
        projectivization_cox(Rank2BundleData(1, ()))


def test_cotangent_lines():
    assert cotangent_lines(P1XP1_RAYS) == [(1, 0), (0, 1)]
    assert cotangent_lines(F1_RAYS) == [(1, 0), (0, 1), (-1, 1)]


@pytest.mark.parametrize("rays, free_rank, n_relations", [
    (P2_RAYS, 2, 1),
    (P1XP1_RAYS, 3, 0),
    (F1_RAYS, 3, 1),
])
def test_cotangent(rays, free_rank, n_relations):
    P = cotangent_cox(rays)
    assert P.grading == FGAbelianGroup(free_rank)
    assert len(P.relations) == n_relations
    assert len(P.generators) == len(rays) + len(cotangent_lines(rays))
    assert is_homogeneous(P)
    assert _is_linear_in_fiber(P)


def test_cotangent_f1_relation():
    P = cotangent_cox(F1_RAYS)
    assert relation_space_equal(P.relations, [parse_relation("S1*T1 - S2*S4*T2 + S3*T3")])


def test_cotangent_validation():
    with pytest.raises(InvalidBundle):
        cotangent_cox([(1, 0)])
    with pytest.raises(InvalidBundle):
        cotangent_cox([(1, 0), (1, 0), (0, 1)])
    with pytest.raises(InvalidBundle):
        cotangent_cox([(1, 0), (0, 1, 1)])


def _degree_classes(P):
    classes = {}
    for label in P.labels:
        classes.setdefault(P.degree(label), []).append(label)
    return sorted(len(labels) for labels in classes.values())


@pytest.mark.parametrize("bundle_cox", [
    lambda: cotangent_cox(P2_RAYS),
    lambda: projectivization_cox(tangent_bundle_data(P2_RAYS)),
])
def test_fan_route_matches_bundle_route(cotangent_fan, bundle_cox):
    data = from_fan(cotangent_fan)
    fan_P = cox_ring(data, class_group_from_fan(cotangent_fan).grading)
    Q = bundle_cox()
    assert _degree_classes(fan_P) == _degree_classes(Q) == [3, 3]
    pairs = [labels for labels in data.labels if labels]
    assert [len(labels) for labels in pairs] == [2, 2, 2]
    # each point of P^1 carries one S_k T_k pair; try every pairing and orientation
    matches = []
    for order in itertools.permutations(range(3)):
        for flips in itertools.product((False, True), repeat=3):
            renaming = {}
            for k, (i, flip) in enumerate(zip(order, flips), start=1):
                first, second = reversed(pairs[i]) if flip else pairs[i]
                renaming[first] = f"S{k}"
                renaming[second] = f"T{k}"
            if same_relations(fan_P, Q, renaming) and grading_isomorphic(fan_P, Q, renaming):
                matches.append(renaming)
    assert matches
