# Copyright 2026, tcox developers
"""

Graded ring presentations.

A `GradedPresentation` lists labeled generators with degrees in an `FGAbelianGroup` and
relations as sparse polynomials with rational coefficients. Presentations coming from
different pipelines are compared by renaming generators and testing equality of the
row spaces of their relation coefficient matrices, never by string comparison.

Relation strings (fixtures, user files) are parsed with sympy.

"""
import logging
import re
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from tcox.exceptions import MissingDegree, UnknownLabel
from tcox.intlinalg import FGAbelianGroup, GroupElement, cokernel, saturate
from tcox.rationals import MINUS_SIGNS, format_rational

logger = logging.getLogger(__name__)


class ProvenanceTag(str, Enum):
    E_RAY = 'E-ray'
    D_VERTEX = 'D-vertex'
    F_PLUS = 'F-plus'
    F_MINUS = 'F-minus'
    BUNDLE_S = 'bundle-S'
    BUNDLE_T = 'bundle-T'


class GradingStatus(str, Enum):
    FULL = 'full'
    FREE_PART_ONLY = 'free-part-only'
    UNGRADED = 'ungraded'


class Monomial:
    """ Product of generators; zero exponents are dropped. Immutable and hashable. """

    __slots__ = ('_exponents',)

    def __init__(self, exponents: Mapping[str, int] = None):
        items = []
        for label, e in dict(exponents or {}).items():
            e = int(e)
            if e < 0:
                raise ValueError(f"Negative exponent {e} for {label}.")
            if e:
                items.append((label, e))
        self._exponents = tuple(sorted(items))

    @property
    def exponents(self) -> Dict[str, int]:
        return dict(self._exponents)

    @property
    def labels(self) -> List[str]:
        return [label for label, _ in self._exponents]

    def exponent(self, label: str) -> int:
        return self.exponents.get(label, 0)

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        exps = self.exponents
        for label, e in other._exponents:
            exps[label] = exps.get(label, 0) + e
        return Monomial(exps)

    def without(self, labels) -> 'Monomial':
        return Monomial({label: e for label, e in self._exponents if label not in labels})

    def renamed(self, mapping: Mapping[str, str]) -> 'Monomial':
        return Monomial({mapping.get(label, label): e for label, e in self._exponents})

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._exponents == other._exponents

    def __hash__(self):
        return hash(self._exponents)

    def __repr__(self):
        return f"Monomial({self.exponents})"

    def to_text(self, order: Sequence[str] = None) -> str:
        exps = self.exponents
        labels = [label for label in (order or sorted(exps)) if label in exps]
        return "*".join(label if exps[label] == 1 else f"{label}^{exps[label]}" for label in labels)


class Polynomial:
    """ Sparse polynomial: Monomial -> nonzero Fraction. """

    __slots__ = ('terms',)

    def __init__(self, terms: Mapping[Monomial, Fraction] = None):
        self.terms: Dict[Monomial, Fraction] = {}
        for m, c in dict(terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[m] = self.terms.get(m, Fraction(0)) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def monomials(self) -> List[Monomial]:
        return list(self.terms)

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Polynomial(terms)

    def scaled(self, k) -> 'Polynomial':
        return Polynomial({m: c * Fraction(k) for m, c in self.terms.items()})

    def without(self, labels) -> 'Polynomial':
        """ Set every variable in `labels` to 1, merging terms that become equal. """
        terms = {}
        for m, c in self.terms.items():
            m = m.without(labels)
            terms[m] = terms.get(m, Fraction(0)) + c
        return Polynomial(terms)

    def renamed(self, mapping: Mapping[str, str]) -> 'Polynomial':
        return Polynomial({m.renamed(mapping): c for m, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def sorted_terms(self, order: Sequence[str] = None) -> List[Tuple[Monomial, Fraction]]:
        """ Terms by descending exponent vector in generator order. """
        if order is None:
            order = sorted({label for m in self.terms for label in m.labels})
        return sorted(self.terms.items(), key=lambda mc: [-mc[0].exponent(label) for label in order])

    def to_text(self, order: Sequence[str] = None) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self.sorted_terms(order)):
            sign = "-" if c < 0 else ("+" if k else "")
            mag = abs(c)
            body = m.to_text(order)
            if not body:
                body = format_rational(mag)
            elif mag != 1:
                body = f"{format_rational(mag)}*{body}"
            out.append(f"{sign} {body}" if k else f"{sign}{body}")
        return " ".join(out)


@dataclass(frozen=True)
class Generator:
    label: str
    degree: Optional[GroupElement]
    tag: ProvenanceTag


class Grading(NamedTuple):
    """ A class group with a degree for each label (and possibly for D0). """
    group: FGAbelianGroup
    degrees: Dict[str, GroupElement]
    status: GradingStatus = GradingStatus.FULL


@dataclass(frozen=True)
class GradedPresentation:
    """ Generators with degrees and relations of a graded ring. """
    grading: Optional[FGAbelianGroup]
    generators: Tuple[Generator, ...]
    relations: Tuple[Polynomial, ...]
    grading_status: GradingStatus = GradingStatus.FULL

    def __post_init__(self):
        labels = [g.label for g in self.generators]
        if len(set(labels)) != len(labels):
            raise ValueError(f"Generator labels are not unique: {labels}")
        known = set(labels)
        for rel in self.relations:
            unknown = {label for m in rel.monomials for label in m.labels} - known
            if unknown:
                raise UnknownLabel(f"Relation {rel.to_text()} uses unknown generators {sorted(unknown)}.")
        if self.grading_status != GradingStatus.UNGRADED:
            missing = [g.label for g in self.generators if g.degree is None]
            if missing or self.grading is None:
                raise MissingDegree(f"Graded presentation lacks degrees for {missing}.")

    @property
    def labels(self) -> List[str]:
        return [g.label for g in self.generators]

    def generator(self, label: str) -> Generator:
        for g in self.generators:
            if g.label == label:
                return g
        raise UnknownLabel(f"Unknown generator '{label}'.")

    def degree(self, label: str) -> GroupElement:
        if self.grading_status == GradingStatus.UNGRADED:
            raise MissingDegree("The presentation is ungraded.")
        return self.generator(label).degree

    def relation_texts(self) -> List[str]:
        return [rel.to_text(self.labels) for rel in self.relations]


def degree_of(m: Monomial, P: GradedPresentation) -> GroupElement:
    """ Sum of generator degrees weighted by exponents; the empty monomial has degree 0. """
    if P.grading_status == GradingStatus.UNGRADED:
        raise MissingDegree("The presentation is ungraded.")
    total = P.grading.zero()
    for label, e in m.exponents.items():
        total = total + e * P.degree(label)
    return total


def is_homogeneous(P: GradedPresentation) -> bool:
    """ True iff the monomials of every relation share one degree. """
    for rel in P.relations:
        if len({degree_of(m, P) for m in rel.monomials}) > 1:
            return False
    return True


def ci_dimension(P: GradedPresentation) -> int:
    return len(P.generators) - len(P.relations)


def complete_intersection_canonical_class(P: GradedPresentation) -> GroupElement:
    """ Sum of the relation degrees minus the sum of the generator degrees.

    This is the canonical class of the variety when the relations form a complete
    intersection and the grading is its class group.

    Raises:
        MissingDegree: if P is ungraded.
        ValueError: if a relation is not homogeneous.
    """
    if P.grading_status == GradingStatus.UNGRADED:
        raise MissingDegree("The presentation is ungraded.")
    total = P.grading.zero()
    for rel in P.relations:
        degrees = {degree_of(m, P) for m in rel.monomials}
        if len(degrees) != 1:
            raise ValueError(f"Relation {rel.to_text()} is not homogeneous.")
        total = total + degrees.pop()
    for g in P.generators:
        total = total - P.degree(g.label)
    return total


def _check_labels(P: GradedPresentation, labels: Iterable[str]):
    unknown = set(labels) - set(P.labels)
    if unknown:
        raise UnknownLabel(f"Unknown generator labels {sorted(unknown)}.")


def substitute_one(P: GradedPresentation, labels: Iterable[str], grading: Optional[Grading] = None
                   ) -> GradedPresentation:
    """ Set the listed variables to 1 and drop them from the generators.

    Relations that vanish are dropped. The result is ungraded unless `grading` supplies
    degrees for the remaining generators.
    """
    labels = set(labels)
    _check_labels(P, labels)
    if not labels and grading is None:
        return P
    relations = tuple(r for r in (rel.without(labels) for rel in P.relations) if not r.is_zero)
    kept = [g for g in P.generators if g.label not in labels]
    if grading is None:
        generators = tuple(Generator(g.label, None, g.tag) for g in kept)
        return GradedPresentation(None, generators, relations, GradingStatus.UNGRADED)
    try:
        generators = tuple(Generator(g.label, grading.degrees[g.label], g.tag) for g in kept)
    except KeyError as exc:
        raise MissingDegree(f"Replacement grading has no degree for {exc.args[0]}.") from None
    return GradedPresentation(grading.group, generators, relations, grading.status)


def rename(P: GradedPresentation, mapping: Mapping[str, str]) -> GradedPresentation:
    """ Rename generators; labels missing from `mapping` are kept. """
    _check_labels(P, mapping)
    generators = tuple(replace(g, label=mapping.get(g.label, g.label)) for g in P.generators)
    return GradedPresentation(P.grading, generators, tuple(r.renamed(mapping) for r in P.relations),
                              P.grading_status)


def exponent_differences(P: GradedPresentation) -> List[List[int]]:
    """ Exponent vector differences of the monomials within each relation. """
    index = {label: k for k, label in enumerate(P.labels)}
    rows = []
    for rel in P.relations:
        vectors = []
        for m in rel.monomials:
            v = [0] * len(index)
            for label, e in m.exponents.items():
                v[index[label]] = e
            vectors.append(v)
        rows += [[a - b for a, b in zip(v, vectors[0])] for v in vectors[1:]]
    return rows


def saturation_grading(P: GradedPresentation, smooth: bool = False) -> GradedPresentation:
    """ Grade by Z^gens / sat(L), L spanned by exponent differences within relations.

    This is the finest grading keeping every relation homogeneous. It contains the class
    group grading and in general refines it by the characters of the acting torus, so it
    is marked full only when the caller asserts it (`smooth=True`).
    """
    n = len(P.generators)
    rows = exponent_differences(P)
    group, images = cokernel(saturate(rows, n), ncols=n)
    status = GradingStatus.FULL if smooth else GradingStatus.FREE_PART_ONLY
    generators = tuple(Generator(g.label, d, g.tag) for g, d in zip(P.generators, images))
    logger.debug("Saturation grading of %d generators: %s", n, group)
    return GradedPresentation(group, generators, P.relations, status)


def _coefficient_matrix(relations: Sequence[Polynomial], basis: Sequence[Monomial]) -> sympy.Matrix:
    def entry(rel, m):
        c = rel.terms.get(m, Fraction(0))
        return sympy.Rational(c.numerator, c.denominator)
    return sympy.Matrix([[entry(rel, m) for m in basis] for rel in relations])


def relation_space_equal(relations_a: Sequence[Polynomial], relations_b: Sequence[Polynomial]) -> bool:
    """ True iff both relation lists span the same space of polynomials. """
    basis = list({m for rel in list(relations_a) + list(relations_b) for m in rel.monomials})
    if not basis:
        return True
    A = _coefficient_matrix(relations_a, basis) if relations_a else sympy.zeros(0, len(basis))
    B = _coefficient_matrix(relations_b, basis) if relations_b else sympy.zeros(0, len(basis))
    ra, rb = A.rank(), B.rank()
    return ra == rb == A.col_join(B).rank()


def same_relations(P: GradedPresentation, Q: GradedPresentation, renaming: Mapping[str, str] = None) -> bool:
    """ Row-space equality of relations after renaming the generators of P. """
    if renaming:
        P = rename(P, renaming)
    return relation_space_equal(P.relations, Q.relations)


def grading_isomorphic(P: GradedPresentation, Q: GradedPresentation, renaming: Mapping[str, str] = None) -> bool:
    """ True iff a group isomorphism carries the degrees of P to those of Q.

    For free groups the isomorphism is solved for and checked to be unimodular; with
    torsion the degrees must agree structurally.
    """
    if renaming:
        P = rename(P, renaming)
    if set(P.labels) != set(Q.labels) or P.grading is None or Q.grading is None:
        return False
    if P.grading != Q.grading:
        return False
    labels = Q.labels
    if not P.grading.is_free:
        return all(P.degree(label) == Q.degree(label) for label in labels)
    a = P.grading.free_rank
    if a == 0:
        return True
    D1 = sympy.Matrix([list(P.degree(label).free_part) for label in labels]).T
    D2 = sympy.Matrix([list(Q.degree(label).free_part) for label in labels]).T
    cols = []
    for k in range(len(labels)):
        if D1[:, cols + [k]].rank() > len(cols):
            cols.append(k)
        if len(cols) == a:
            break
    if len(cols) < a:
        return False
    M = D2[:, cols] * D1[:, cols].inv()
    if any(not x.is_integer for x in M) or abs(M.det()) != 1:
        return False
    return M * D1 == D2


def parse_relation(text: str, parameters: Mapping[str, object] = None) -> Polynomial:
    """ Parse a relation such as "lam*T1_1^2 + T2_1^2 + T3_1^2".

    Args:
        text: Polynomial in generator labels; `^` and `**` both denote powers.
        parameters: Values substituted for parameter names, e.g. {"lam": 2}.

    Examples:
        >>> parse_relation("T1*T2 + 2*T3^2").to_text(["T1", "T2", "T3"])
        'T1*T2 + 2*T3^2'
    """
    for sign in MINUS_SIGNS:
        text = text.replace(sign, "-")
    names = set(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text))
    symbols = {name: sympy.Symbol(name) for name in names}
    try:
        expr = parse_expr(text, local_dict=symbols, transformations=standard_transformations + (convert_xor,))
    except (SyntaxError, TypeError, sympy.SympifyError) as exc:
        raise ValueError(f"Cannot parse relation {text!r}: {exc}") from None
    if parameters:
        expr = expr.subs({symbols[k]: sympy.Rational(str(v)) for k, v in parameters.items() if k in symbols})
    expr = sympy.expand(expr)
    gens = sorted(expr.free_symbols, key=str)
    if not gens:
        c = sympy.Rational(expr)
        return Polynomial({Monomial(): Fraction(int(c.p), int(c.q))})
    poly = sympy.Poly(expr, *gens)
    terms = {}
    for exps, coeff in poly.terms():
        c = sympy.Rational(coeff)
        terms[Monomial({str(g): e for g, e in zip(gens, exps)})] = Fraction(int(c.p), int(c.q))
    return Polynomial(terms)


def to_ideal_text(P: GradedPresentation, style: str = 'plain') -> str:
    """ Plain-text ideal listing for general computer algebra systems.

    `plain` writes a variable line, a degree line and one relation per line; `macaulay2`
    writes a ring and ideal definition.
    """
    labels = P.labels
    relations = P.relation_texts()
    if style == 'macaulay2':
        degrees = ""
        if P.grading_status != GradingStatus.UNGRADED and P.grading.is_free and P.grading.free_rank:
            degrees = ", Degrees => {" + ", ".join(
                "{" + ", ".join(str(x) for x in g.degree.free_part) + "}" for g in P.generators) + "}"
        ring = f"R = QQ[{', '.join(labels)}{degrees}]"
        ideal = "I = ideal(" + ", ".join(relations) + ")"
        return f"{ring}\n{ideal}\n"
    if style != 'plain':
        raise ValueError(f"Unknown ideal style {style!r}; use 'plain' or 'macaulay2'.")
    lines = ["variables: " + " ".join(labels)]
    if P.grading_status != GradingStatus.UNGRADED:
        lines.append(f"grading: {P.grading} ({P.grading_status.value})")
        lines.append("degrees: " + " ".join(f"{g.label}={g.degree}" for g in P.generators))
    lines += [f"relation: {rel}" for rel in relations]
    return "\n".join(lines) + "\n"


def presentation_to_dict(P: GradedPresentation) -> dict:
    """ JSON-ready record of a presentation. """
    graded = P.grading_status != GradingStatus.UNGRADED
    return {
        'grading_status': P.grading_status.value,
        'class_group': P.grading.as_dict() if graded else None,
        'generators': [
            {'label': g.label, 'tag': g.tag.value, 'degree': g.degree.as_dict() if graded else None}
            for g in P.generators
        ],
        'relations': P.relation_texts(),
    }
