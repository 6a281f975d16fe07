# Copyright 2026, tcox developers
"""

Gorenstein del Pezzo K*-surfaces of Picard number at most two.

Each row lists the Cox ring of the singular surface X and of its minimal resolution,
with variable names as they are usually printed (T1, T2, ..., S or S1, S2).

A row is reconstructible when the exponents of its resolution ring can be read as arms
of an Orlik-Wagreich graph: the arms below list the table names of the curves from F+
towards F- together with self-intersection numbers b that produce those exponents. Rows
with a single S variable have an elliptic fixed point; they are modelled with both fixed
curves and `Sminus` is contracted.

`verify_row` builds the graph, computes the resolution ring, compares it with the printed
one and checks that contracting the curves missing from R(X) reproduces R(X).

"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .orlik_wagreich import SINK, SOURCE, ContractionSpec, OWArm, OWGraph, contract, resolution_cox
from .pdiv import P1Point
from .presentation import parse_relation, relation_space_equal, rename

logger = logging.getLogger(__name__)

THREE_ARM_POINTS = [(1, 0), (0, 1), (-1, -1)]
# Relations f0 + f1 + f2 and lam*f1 + f2 + f3 for lam = 2.
FOUR_ARM_POINTS = [(-1, -1), (1, 0), (0, 1), (-2, -1)]
LAMBDA = 2


def _variables(s_names: Tuple[str, ...], t_count: int) -> Tuple[str, ...]:
    return tuple(s_names) + tuple(f"T{k}" for k in range(1, t_count + 1))


@dataclass(frozen=True)
class DelPezzoRow:
    degree: int
    singularity: str
    singular_variables: Tuple[str, ...]
    singular_relations: Tuple[str, ...]
    resolution_variables: Tuple[str, ...]
    resolution_relations: Tuple[str, ...]
    arms: Optional[Tuple[Tuple[Tuple[str, ...], Tuple[int, ...]], ...]] = None

    @property
    def name(self) -> str:
        return f"delpezzo-deg{self.degree}-{self.singularity}"

    @property
    def reconstructible(self) -> bool:
        return self.arms is not None

    @property
    def s_names(self) -> Tuple[str, ...]:
        return tuple(v for v in self.resolution_variables if v.startswith("S"))

    @property
    def exceptional(self) -> Tuple[str, ...]:
        """ Table names of the resolution variables that do not survive in R(X). """
        return tuple(v for v in self.resolution_variables if v not in self.singular_variables)


def _row(degree, singularity, singular, resolution, arms=None):
    (s_sing, t_sing, rel_sing), (s_res, t_res, rel_res) = singular, resolution
    return DelPezzoRow(degree, singularity, _variables(s_sing, t_sing), tuple(rel_sing),
                       _variables(s_res, t_res), tuple(rel_res),
                       None if arms is None else tuple((tuple(names), tuple(b)) for names, b in arms))


ROWS: List[DelPezzoRow] = [
    # degree 1
    _row(1, "2D4",
         ((), 5, ["T1*T2 + T3^2 + T4^2", "lam*T3^2 + T4^2 + T5^2"]),
         (("S1", "S2"), 11, ["T1*T2 + T6*T7*T3^2 + T8*T9*T4^2",
                             "lam*T6*T7*T3^2 + T8*T9*T4^2 + T10*T11*T5^2"]),
         [(["T1", "T2"], [1, 1]), (["T6", "T3", "T7"], [2, 1, 2]),
          (["T8", "T4", "T9"], [2, 1, 2]), (["T10", "T5", "T11"], [2, 1, 2])]),
    _row(1, "E6A2",
         ((), 4, ["T1^2*T2 + T3^3 + T4^3"]),
         (("S",), 11, ["T5*T1^2*T2 + T6*T7*T8^2*T3^3 + T9*T10*T11^2*T4^3"]),
         [(["T5", "T1", "T2"], [2, 1, 1]), (["T6", "T8", "T3", "T7"], [2, 2, 1, 2]),
          (["T9", "T11", "T4", "T10"], [2, 2, 1, 2])]),
    _row(1, "E7A1",
         ((), 4, ["T1^3*T2 + T3^4 + T4^2"]),
         (("S",), 11, ["T5*T6^2*T1^3*T2 + T7*T8^2*T9^3*T10^3*T3^4 + T11*T4^2"]),
         [(["T5", "T6", "T1", "T2"], [2, 2, 1, 1]), (["T7", "T9", "T8", "T10", "T3"], [3, 1, 3, 2, 1]),
          (["T11", "T4"], [2, 1])]),
    _row(1, "E8",
         ((), 4, ["T1^5*T2 + T3^3 + T4^2"]),
         (("S",), 11, ["T5*T6^2*T7^3*T8^4*T1^5*T2 + T9*T10^2*T3^3 + T11*T4^2"]),
         [(["T5", "T6", "T7", "T8", "T1", "T2"], [2, 2, 2, 2, 1, 1]), (["T9", "T10", "T3"], [2, 2, 1]),
          (["T11", "T4"], [2, 1])]),
    # degree 2
    _row(2, "2A3A1",
         ((), 4, ["T1*T2 + T3^2 + T4^2"]),
         (("S1", "S2"), 9, ["T5*T1*T2 + T6*T7*T3^2 + T8*T9*T4^2"]),
         [(["T5", "T1", "T2"], [1, 2, 1]), (["T6", "T3", "T7"], [2, 1, 2]), (["T8", "T4", "T9"], [2, 1, 2])]),
    _row(2, "A5A2",
         ((), 4, ["T1*T2 + T3^3 + T4^3"]),
         (("S",), 10, ["T1*T2 + T5*T6*T7^2*T3^3 + T8*T9*T10^2*T4^3"]),
         [(["T1", "T2"], [1, 1]), (["T5", "T7", "T3", "T6"], [2, 2, 1, 2]),
          (["T8", "T10", "T4", "T9"], [2, 2, 1, 2])]),
    # The printed resolution relation repeats T4, so no graph reproduces it.
    _row(2, "D43A1",
         (("S1",), 3, ["T1^2 + T2^2 + T3^2"]),
         (("S1", "S2"), 9, ["T4*T5*T1^2 + T6*T4*T2^2 + T8*T9*T3^2"])),
    _row(2, "D6A1",
         ((), 4, ["T1^2*T2 + T3^4 + T4^2"]),
         (("S",), 10, ["T5*T1^2*T2 + T6*T7*T8^2*T9^3*T3^4 + T10*T4^2"]),
         [(["T5", "T1", "T2"], [2, 1, 1]), (["T6", "T7", "T8", "T9", "T3"], [1, 3, 2, 2, 1]),
          (["T10", "T4"], [2, 1])]),
    _row(2, "E7",
         ((), 4, ["T1^4*T2 + T3^3 + T4^2"]),
         (("S",), 10, ["T5*T6^2*T7^3*T1^4*T2 + T8*T9^2*T3^3 + T10*T4^2"]),
         [(["T5", "T6", "T7", "T1", "T2"], [2, 2, 2, 1, 1]), (["T8", "T9", "T3"], [2, 2, 1]),
          (["T10", "T4"], [2, 1])]),
    _row(2, "2A3",
         ((), 6, ["T1*T2 + T3*T4 + T5^2", "lam*T3*T4 + T5^2 + T6^2"]),
         (("S1", "S2"), 10, ["T1*T2 + T3*T4 + T7*T8*T5^2", "lam*T3*T4 + T7*T8*T5^2 + T9*T10*T6^2"]),
         [(["T1", "T2"], [1, 1]), (["T3", "T4"], [1, 1]), (["T7", "T5", "T8"], [2, 1, 2]),
          (["T9", "T6", "T10"], [2, 1, 2])]),
    _row(2, "D5A1",
         ((), 5, ["T1*T2^2 + T3*T4^2 + T5^3"]),
         (("S",), 10, ["T6*T1*T2^2 + T7*T3*T4^2 + T8*T9*T10^2*T5^3"]),
         [(["T6", "T2", "T1"], [2, 1, 1]), (["T7", "T4", "T3"], [2, 1, 1]),
          (["T8", "T10", "T5", "T9"], [2, 2, 1, 2])]),
    _row(2, "E6",
         ((), 5, ["T1*T2^3 + T3*T4^3 + T5^2"]),
         (("S",), 10, ["T6*T7^2*T1*T2^3 + T8*T9^2*T3*T4^3 + T10*T5^2"]),
         [(["T6", "T7", "T2", "T1"], [2, 2, 1, 1]), (["T8", "T9", "T4", "T3"], [2, 2, 1, 1]),
          (["T10", "T5"], [2, 1])]),
    # degree 3
    _row(3, "A5A1",
         ((), 4, ["T1*T2 + T3^4 + T4^2"]),
         (("S",), 9, ["T1*T2 + T5*T6*T7^2*T8^3*T3^4 + T9*T4^2"]),
         [(["T1", "T2"], [1, 1]), (["T5", "T6", "T7", "T8", "T3"], [1, 3, 2, 2, 1]), (["T9", "T4"], [2, 1])]),
    _row(3, "E6",
         ((), 4, ["T1^3*T2 + T3^3 + T4^2"]),
         (("S",), 9, ["T5*T6^2*T1^3*T2 + T7*T8^2*T3^3 + T9*T4^2"]),
         [(["T5", "T6", "T1", "T2"], [2, 2, 1, 1]), (["T7", "T8", "T3"], [2, 2, 1]), (["T9", "T4"], [2, 1])]),
    _row(3, "2A2A1",
         ((), 5, ["T1*T2 + T3*T4 + T5^2"]),
         (("S1", "S2"), 8, ["T6*T1*T2 + T3*T4 + T7*T8*T5^2"]),
         [(["T6", "T1", "T2"], [1, 2, 1]), (["T3", "T4"], [1, 1]), (["T7", "T5", "T8"], [2, 1, 2])]),
    _row(3, "A32A1",
         (("S1",), 4, ["T1*T2 + T3^2 + T4^2"]),
         (("S1", "S2"), 8, ["T1*T2 + T5*T6*T3^2 + T7*T8*T4^2"]),
         [(["T1", "T2"], [1, 1]), (["T5", "T3", "T6"], [2, 1, 2]), (["T7", "T4", "T8"], [2, 1, 2])]),
    _row(3, "A4A1",
         ((), 5, ["T1*T2^2 + T3*T4 + T5^3"]),
         (("S",), 9, ["T6*T1*T2^2 + T3*T4 + T7*T8*T9^2*T5^3"]),
         [(["T6", "T2", "T1"], [2, 1, 1]), (["T3", "T4"], [1, 1]), (["T7", "T9", "T5", "T8"], [2, 2, 1, 2])]),
    _row(3, "D5",
         ((), 5, ["T1*T2^3 + T3*T4^2 + T5^2"]),
         (("S",), 9, ["T6*T7^2*T1*T2^3 + T8*T3*T4^2 + T9*T5^2"]),
         [(["T6", "T7", "T2", "T1"], [2, 2, 1, 1]), (["T8", "T4", "T3"], [2, 1, 1]), (["T9", "T5"], [2, 1])]),
    # degree 4
    _row(4, "D5",
         ((), 4, ["T1^2*T2 + T3^3 + T4^2"]),
         (("S",), 8, ["T5*T1^2*T2 + T6*T7^2*T3^3 + T8*T4^2"]),
         [(["T5", "T1", "T2"], [2, 1, 1]), (["T6", "T7", "T3"], [2, 2, 1]), (["T8", "T4"], [2, 1])]),
    _row(4, "A3A1",
         ((), 5, ["T1*T2 + T3*T4 + T5^3"]),
         (("S",), 8, ["T1*T2 + T3*T4 + T6*T7*T8^2*T5^3"]),
         [(["T1", "T2"], [1, 1]), (["T3", "T4"], [1, 1]), (["T6", "T8", "T5", "T7"], [2, 2, 1, 2])]),
    _row(4, "A4",
         ((), 5, ["T1*T2^3 + T3*T4 + T5^2"]),
         (("S",), 8, ["T6*T7^2*T1*T2^3 + T3*T4 + T8*T5^2"]),
         [(["T6", "T7", "T2", "T1"], [2, 2, 1, 1]), (["T3", "T4"], [1, 1]), (["T8", "T5"], [2, 1])]),
    _row(4, "D4",
         ((), 5, ["T1*T2^2 + T3*T4^2 + T5^2"]),
         (("S",), 8, ["T6*T1*T2^2 + T7*T3*T4^2 + T8*T5^2"]),
         [(["T6", "T2", "T1"], [2, 1, 1]), (["T7", "T4", "T3"], [2, 1, 1]), (["T8", "T5"], [2, 1])]),
    # degree 5
    _row(5, "A3",
         ((), 5, ["T1*T2^2 + T3*T4 + T5^2"]),
         (("S",), 7, ["T6*T1*T2^2 + T3*T4 + T7*T5^2"]),
         [(["T6", "T2", "T1"], [2, 1, 1]), (["T3", "T4"], [1, 1]), (["T7", "T5"], [2, 1])]),
    _row(5, "A4",
         ((), 4, ["T1*T2 + T3^3 + T4^2"]),
         (("S",), 7, ["T1*T2 + T5*T6^2*T3^3 + T7*T4^2"]),
         [(["T1", "T2"], [1, 1]), (["T5", "T6", "T3"], [2, 2, 1]), (["T7", "T4"], [2, 1])]),
    # degree 6
    _row(6, "A2",
         ((), 5, ["T1*T2 + T3*T4 + T5^2"]),
         (("S",), 6, ["T1*T2 + T3*T4 + T6*T5^2"]),
         [(["T1", "T2"], [1, 1]), (["T3", "T4"], [1, 1]), (["T6", "T5"], [2, 1])]),
]


def get_row(name: str) -> DelPezzoRow:
    for row in ROWS:
        if row.name == name:
            return row
    raise KeyError(f"No del Pezzo row named {name!r}.")


def graph(row: DelPezzoRow) -> OWGraph:
    """ The Orlik-Wagreich graph reproducing the exponents of a reconstructible row. """
    if not row.reconstructible:
        raise ValueError(f"Row {row.name} is output-only.")
    points = THREE_ARM_POINTS if len(row.arms) == 3 else FOUR_ARM_POINTS
    return OWGraph(tuple(OWArm(P1Point(*p), b) for p, (_, b) in zip(points, row.arms)))


def table_names(row: DelPezzoRow) -> Dict[str, str]:
    """ Map graph labels to the table's variable names; Sminus is kept when the table has one S. """
    mapping = {SOURCE: row.s_names[0]}
    if len(row.s_names) > 1:
        mapping[SINK] = row.s_names[1]
    for i, (names, _) in enumerate(row.arms):
        for j, name in enumerate(names, 1):
            mapping[f"T{i}_{j}"] = name
    return mapping


def verify_row(row: DelPezzoRow) -> List[str]:
    """ Recompute a reconstructible row; returns the list of mismatches (empty if it matches). """
    parameters = {'lam': LAMBDA}
    P = rename(resolution_cox(graph(row)), table_names(row))
    problems = []
    expected_res = [parse_relation(text, parameters) for text in row.resolution_relations]
    labels = set(P.labels) - ({SINK} if len(row.s_names) == 1 else set())
    if labels != set(row.resolution_variables):
        problems.append(f"resolution generators {sorted(labels)} differ from {list(row.resolution_variables)}")
    if not relation_space_equal(P.relations, expected_res):
        problems.append(f"resolution relations {P.relation_texts()} differ from {list(row.resolution_relations)}")
    exceptional = set(row.exceptional)
    if len(row.s_names) == 1:
        exceptional.add(SINK)
    Q = contract(P, ContractionSpec(frozenset(exceptional)))
    expected_sing = [parse_relation(text, parameters) for text in row.singular_relations]
    if set(Q.labels) != set(row.singular_variables):
        problems.append(f"contracted generators {Q.labels} differ from {list(row.singular_variables)}")
    if not relation_space_equal(Q.relations, expected_sing):
        problems.append(f"contracted relations {Q.relation_texts()} differ from {list(row.singular_relations)}")
    logger.debug("Row %s: %s", row.name, problems or "ok")
    return problems
