import pytest

from tcox.exceptions import MissingDegree, UnknownLabel
from tcox.intlinalg import FGAbelianGroup
from tcox.cox.presentation import (
    Generator, GradedPresentation, GradingStatus, Monomial, Polynomial, ProvenanceTag, ci_dimension,
    complete_intersection_canonical_class, degree_of, grading_isomorphic, is_homogeneous, parse_relation,
    presentation_to_dict, relation_space_equal, rename, same_relations, saturation_grading, substitute_one,
    to_ideal_text,
)

Z2 = FGAbelianGroup(2)


def _tangent_like(degrees=None):
    """ S1*T1 + S2*T2 + S3*T3 with the given free degrees (or ungraded). """
    labels = ["S1", "S2", "S3", "T1", "T2", "T3"]
    relation = parse_relation("S1*T1 + S2*T2 + S3*T3")
    if degrees is None:
        generators = tuple(Generator(label, None, ProvenanceTag.BUNDLE_S) for label in labels)
        return GradedPresentation(None, generators, (relation,), GradingStatus.UNGRADED)
    generators = tuple(Generator(label, Z2.element(degrees[label]), ProvenanceTag.BUNDLE_S) for label in labels)
    return GradedPresentation(Z2, generators, (relation,))


TANGENT_DEGREES = {"S1": (1, 0), "S2": (1, 0), "S3": (1, 0), "T1": (-1, 1), "T2": (-1, 1), "T3": (-1, 1)}


def test_monomial_basics():
    m = Monomial({"T1": 2, "T2": 0, "S": 1})
    assert m.labels == ["S", "T1"]
    assert m * Monomial({"S": 2}) == Monomial({"S": 3, "T1": 2})
    assert m.without(["T1"]) == Monomial({"S": 1})
    assert m.to_text(["T1", "S"]) == "T1^2*S"
    with pytest.raises(ValueError):
        Monomial({"T1": -1})


def test_polynomial_text_and_parsing():
    p = parse_relation("T1*T2 + 2*T3^2")
    assert p.to_text(["T1", "T2", "T3"]) == "T1*T2 + 2*T3^2"
    q = parse_relation("lam*T3^2 + T4**2 − T5^2", {"lam": 2})
    assert q.terms[Monomial({"T3": 2})] == 2
    assert q.terms[Monomial({"T5": 2})] == -1
    assert parse_relation("T1 - T1").is_zero
    with pytest.raises(ValueError):
        parse_relation("T1 +* T2")


def test_polynomial_without_merges_terms():
    p = parse_relation("T1*T2 + T1 - 3*T2")
    assert p.without(["T2"]) == Polynomial({Monomial({"T1": 1}): 2, Monomial(): -3})


def test_homogeneity_and_degrees():
    P = _tangent_like(TANGENT_DEGREES)
    assert is_homogeneous(P)
    assert degree_of(Monomial({"S1": 1, "T1": 1}), P) == Z2.element((0, 1))
    assert degree_of(Monomial(), P).is_zero
    assert ci_dimension(P) == 5
    skewed = dict(TANGENT_DEGREES, T3=(0, 1))
    assert not is_homogeneous(_tangent_like(skewed))


def test_presentation_validation():
    with pytest.raises(UnknownLabel):
        GradedPresentation(None, (Generator("T1", None, ProvenanceTag.D_VERTEX),),
                           (parse_relation("T1 + T2"),), GradingStatus.UNGRADED)
    with pytest.raises(MissingDegree):
        GradedPresentation(Z2, (Generator("T1", None, ProvenanceTag.D_VERTEX),), ())
    with pytest.raises(ValueError):
        GradedPresentation(None, (Generator("T1", None, ProvenanceTag.D_VERTEX),) * 2, (), GradingStatus.UNGRADED)


def test_saturation_grading_of_tangent_relation():
    P = saturation_grading(_tangent_like())
    assert P.grading == FGAbelianGroup(4)
    assert P.grading_status == GradingStatus.FREE_PART_ONLY
    assert is_homogeneous(P)
    assert saturation_grading(_tangent_like(), smooth=True).grading_status == GradingStatus.FULL


def test_complete_intersection_canonical_class():
    P = _tangent_like(TANGENT_DEGREES)
    assert complete_intersection_canonical_class(P) == Z2.element((0, -2))
    with pytest.raises(MissingDegree):
        complete_intersection_canonical_class(_tangent_like())
    skewed = dict(TANGENT_DEGREES, T3=(0, 1))
    with pytest.raises(ValueError):
        complete_intersection_canonical_class(_tangent_like(skewed))


def test_substitute_one_and_rename():
    P = _tangent_like(TANGENT_DEGREES)
    Q = substitute_one(P, ["S1", "S2", "S3"])
    assert Q.grading_status == GradingStatus.UNGRADED
    assert Q.labels == ["T1", "T2", "T3"]
    assert Q.relation_texts() == ["T1 + T2 + T3"]
    with pytest.raises(UnknownLabel):
        substitute_one(P, ["X"])
    R = rename(P, {"S1": "A"})
    assert R.labels[0] == "A"
    assert same_relations(P, R, {"S1": "A"})
    assert grading_isomorphic(P, R, {"S1": "A"})


def test_relation_space_equal():
    a = [parse_relation("T1 + T2 + T3"), parse_relation("T2 - T3")]
    b = [parse_relation("T1 + 2*T2"), parse_relation("T1 + 2*T3")]
    assert relation_space_equal(a, b)
    assert not relation_space_equal(a[:1], b)
    assert relation_space_equal([], [])


def test_grading_isomorphic_detects_unimodular_change():
    P = _tangent_like(TANGENT_DEGREES)
    swapped = {label: (d[1], d[0] + d[1]) for label, d in TANGENT_DEGREES.items()}
    assert grading_isomorphic(P, _tangent_like(swapped))
    doubled = {label: (2 * d[0], d[1]) for label, d in TANGENT_DEGREES.items()}
    assert not grading_isomorphic(P, _tangent_like(doubled))


def test_ideal_text_and_dict():
    P = _tangent_like(TANGENT_DEGREES)
    plain = to_ideal_text(P)
    assert plain.splitlines()[0] == "variables: S1 S2 S3 T1 T2 T3"
    assert "relation: S1*T1 + S2*T2 + S3*T3" in plain
    m2 = to_ideal_text(P, style="macaulay2")
    assert m2.startswith("R = QQ[S1, S2, S3, T1, T2, T3, Degrees => {{1, 0}")
    assert "I = ideal(S1*T1 + S2*T2 + S3*T3)" in m2
    with pytest.raises(ValueError):
        to_ideal_text(P, style="latex")
    d = presentation_to_dict(P)
    assert d['grading_status'] == "full"
    assert d['class_group'] == {'free_rank': 2, 'torsion': []}
    assert d['generators'][3] == {'label': 'T1', 'tag': 'bundle-S', 'degree': {'free': [-1, 1], 'torsion': []}}
