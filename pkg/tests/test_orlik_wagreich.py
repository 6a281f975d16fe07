from fractions import Fraction

import pytest

from tcox.exceptions import InvalidGraph, UnknownLabel
from tcox.cox.orlik_wagreich import (
    SINK, SOURCE, ContractionSpec, OWArm, OWGraph, arm_isotropy, complexity_one_data, continuant, contract,
    intersection_grading, intersection_matrix, renaming_to_fan_route, resolution_cox,
)
from tcox.cox.pdiv import P1Point
from tcox.cox.pipeline import class_group_from_fan, cox_ring, from_fan
from tcox.cox.presentation import (
    GradingStatus, is_homogeneous, parse_relation, relation_space_equal, rename, same_relations,
)


def test_continuant():
    assert continuant([]) == [1]
    assert continuant([2, 1, 2]) == [1, 2, 1, 0]
    assert continuant([3]) == [1, 3]
    assert continuant([2, 2, 2, 2]) == [1, 2, 3, 4, 5]


def test_arm_isotropy():
    assert arm_isotropy([1]) == [1]
    assert arm_isotropy([1, 1]) == [1, 1]
    assert arm_isotropy([2, 1, 2]) == [1, 2, 1]
    assert arm_isotropy([2, 2, 2, 2, 1]) == [1, 2, 3, 4, 5]
    assert arm_isotropy([3, 1, 2, 2]) == [1, 3, 2, 1]


def test_arm_isotropy_rejects_vanishing_order():
    with pytest.raises(InvalidGraph):
        arm_isotropy([1, 1, 1])
    with pytest.raises(InvalidGraph):
        arm_isotropy([])


def _continued_fractions(max_length, entries=range(1, 7)):
    """ b_1 - 1/(b_2 - ... - 1/b_k) for every b of length 1..max_length; None where a division by zero occurs. """
    layer = {(b,): Fraction(b) for b in entries}
    values = dict(layer)
    for _ in range(max_length - 1):
        layer = {(b,) + tail: (b - 1 / value if value else None) for tail, value in layer.items() for b in entries}
        values.update(layer)
    return values


def test_arm_isotropy_matches_direct_evaluation():
    values = _continued_fractions(7)
    for prefix in [()] + list(values):
        prefix_values = [values[prefix[:k]] for k in range(1, len(prefix) + 1)]
        if None in prefix_values:
            continue
        expected = [1] + [abs(value.numerator) for value in prefix_values]
        # the last self-intersection does not enter the orders
        b = prefix + (1,)
        if 0 in expected:
            with pytest.raises(InvalidGraph):
                arm_isotropy(b)
        else:
            assert arm_isotropy(b) == expected, b
    assert arm_isotropy((3, 1, 2, 5)) == arm_isotropy((3, 1, 2, 1))


def test_graph_validation():
    with pytest.raises(InvalidGraph):
        OWGraph(())
    with pytest.raises(InvalidGraph):
        OWArm(P1Point(1, 0), ())
    with pytest.raises(InvalidGraph):
        OWGraph((OWArm(P1Point(1, 0), (1,)), OWArm(P1Point(2, 0), (1,))))


def test_intersection_matrix_needs_fixed_curves():
    g = OWGraph((OWArm(P1Point(1, 0), (1,)), OWArm(P1Point(0, 1), (1,))))
    with pytest.raises(InvalidGraph):
        intersection_matrix(g)
    # without fixed curves the smooth ring is graded by saturation
    P = resolution_cox(g)
    assert P.grading_status == GradingStatus.FREE_PART_ONLY
    assert P.relations == ()


def test_intersection_matrix_2d4(graph_2d4):
    labels, M = intersection_matrix(graph_2d4)
    assert labels[:2] == [SOURCE, SINK]
    assert len(labels) == 13
    i = labels.index("T1_2")
    assert M[i][i] == -1
    assert M[i][labels.index("T1_1")] == M[i][labels.index("T1_3")] == 1
    assert M[0][labels.index("T0_1")] == 1
    assert M[1][labels.index("T0_2")] == 1
    assert M[0][0] == M[1][1] == -2
    assert M == [list(row) for row in zip(*M)]


def test_arm_must_close_up():
    g = OWGraph((OWArm(P1Point(1, 0), (2,)), OWArm(P1Point(0, 1), (1,))), fixed_curves=(0, 0))
    with pytest.raises(InvalidGraph):
        intersection_grading(g)


def test_2d4_resolution(graph_2d4):
    P = resolution_cox(graph_2d4)
    assert P.grading_status == GradingStatus.FULL
    assert P.grading.free_rank == 9 and P.grading.is_free
    assert len(P.generators) == 13
    assert P.labels[:2] == [SOURCE, SINK]
    assert is_homogeneous(P)
    expected = [parse_relation("T0_1*T0_2 + T1_1*T1_2^2*T1_3 + T2_1*T2_2^2*T2_3"),
                parse_relation("lam*T1_1*T1_2^2*T1_3 + T2_1*T2_2^2*T2_3 + T3_1*T3_2^2*T3_3", {"lam": 2})]
    assert relation_space_equal(P.relations, expected)


def test_complexity_one_data(graph_2d4):
    data = complexity_one_data(graph_2d4)
    assert data.e_labels == (SOURCE, SINK)
    assert data.isotropy == ((1, 1), (1, 2, 1), (1, 2, 1), (1, 2, 1))
    assert data.labels[2] == ("T2_1", "T2_2", "T2_3")


def test_minus_two_curves(graph_2d4):
    spec = ContractionSpec.minus_two_curves(graph_2d4)
    assert spec.exceptional_labels == {SOURCE, SINK, "T1_1", "T1_3", "T2_1", "T2_3", "T3_1", "T3_3"}
    unknown = OWGraph(graph_2d4.arms)
    assert ContractionSpec.minus_two_curves(unknown).exceptional_labels == spec.exceptional_labels - {SOURCE, SINK}


def test_contract_2d4(graph_2d4):
    spec = ContractionSpec.minus_two_curves(graph_2d4)
    Q = contract(resolution_cox(graph_2d4), spec)
    assert Q.labels == ["T0_1", "T0_2", "T1_2", "T2_2", "T3_2"]
    assert Q.grading_status == GradingStatus.UNGRADED
    expected = [parse_relation("T0_1*T0_2 + T1_2^2 + T2_2^2"),
                parse_relation("lam*T1_2^2 + T2_2^2 + T3_2^2", {"lam": 2})]
    assert relation_space_equal(Q.relations, expected)


def test_contraction_matches_fan_route(graph_2d4, fan_2d4):
    spec = ContractionSpec.minus_two_curves(graph_2d4)
    Q = contract(resolution_cox(graph_2d4), spec)
    mapping = renaming_to_fan_route(graph_2d4, spec)
    assert mapping == {"T0_1": "T0_1", "T0_2": "T0_2", "T1_2": "T1_1", "T2_2": "T2_1", "T3_2": "T3_1"}
    fan_ring = cox_ring(from_fan(fan_2d4), class_group_from_fan(fan_2d4).grading)
    assert same_relations(Q, fan_ring, mapping)
    assert sorted(rename(Q, mapping).labels) == sorted(fan_ring.labels)


def test_contract_with_grading(graph_2d4, fan_2d4):
    spec = ContractionSpec.minus_two_curves(graph_2d4)
    mapping = renaming_to_fan_route(graph_2d4, spec)
    grading = class_group_from_fan(fan_2d4).grading
    back = {v: k for k, v in mapping.items()}
    degrees = {back[label]: d for label, d in grading.degrees.items() if label in back}
    Q = contract(resolution_cox(graph_2d4), spec, grading._replace(degrees=degrees))
    assert Q.grading_status == GradingStatus.FULL
    assert is_homogeneous(Q)


def test_contract_unknown_label(graph_2d4):
    with pytest.raises(UnknownLabel):
        contract(resolution_cox(graph_2d4), ContractionSpec(frozenset({"T9_9"})))
