# Copyright 2026, tcox developers
"""

Built-in catalog of worked examples with their expected results.

Each JSON file under `fixtures/` holds one entry:

    name, description, provenance   text
    input                           a document in one of the input dialects
    parameters                      values of named parameters in expected relations (optional)
    expected                        the values to compare against

Every row of the del Pezzo table is an entry as well (kind `delpezzo`); those are
verified by recomputing the row from its Orlik-Wagreich graph.

"""
import json
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

from tcox.exceptions import TcoxError
from . import delpezzo
from .dialects import GraphInput, JobSpec, parse_document, run, serialize
from .orlik_wagreich import ContractionSpec
from .presentation import parse_relation, relation_space_equal

logger = logging.getLogger(__name__)

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")
DELPEZZO = "delpezzo"


@dataclass
class Fixture:
    name: str
    kind: str
    description: str = ""
    provenance: str = ""
    input: Optional[dict] = None
    expected: dict = field(default_factory=dict)
    parameters: dict = field(default_factory=dict)
    row: Optional[delpezzo.DelPezzoRow] = None


@dataclass
class FixtureResult:
    name: str
    ok: bool
    problems: List[str] = field(default_factory=list)
    seconds: float = 0.0


def load_fixture_file(path) -> Fixture:
    with open(path, encoding='utf-8') as fp:
        doc = json.load(fp)
    return Fixture(
        name=doc['name'],
        kind=doc['input']['kind'],
        description=doc.get('description', ""),
        provenance=doc.get('provenance', ""),
        input=doc['input'],
        expected=doc.get('expected', {}),
        parameters=doc.get('parameters', {}),
    )


def _delpezzo_input(row: delpezzo.DelPezzoRow) -> Optional[dict]:
    """ The owgraph document of a reconstructible row, contracting its exceptional curves. """
    if not row.reconstructible:
        return None
    g = delpezzo.graph(row)
    back = {v: k for k, v in delpezzo.table_names(row).items()}
    exceptional = {back.get(label, label) for label in row.exceptional}
    if len(row.s_names) == 1:
        exceptional.add(delpezzo.SINK)
    return serialize(JobSpec('owgraph', GraphInput(g, ContractionSpec(frozenset(exceptional)))))


def delpezzo_fixture(row: delpezzo.DelPezzoRow) -> Fixture:
    provenance = "Table row of Gorenstein log del Pezzo K*-surfaces of Picard number one"
    if not row.reconstructible:
        provenance += "; output-only, its printed resolution repeats a variable"
    return Fixture(
        name=row.name,
        kind=DELPEZZO,
        description=f"Degree {row.degree} log del Pezzo surface with singularity type {row.singularity}.",
        provenance=provenance,
        input=_delpezzo_input(row),
        parameters={'lam': delpezzo.LAMBDA},
        row=row,
    )


def load_fixtures(fixtures_dir=None, include_delpezzo=True) -> Dict[str, Fixture]:
    """ All catalog entries by name: the JSON fixtures (sorted by file name), then the del Pezzo rows. """
    if fixtures_dir is None:
        fixtures_dir = FIXTURES_DIR
    fixtures = {}
    for fn in sorted(os.listdir(fixtures_dir)):
        if not fn.endswith(".json"):
            continue
        fixture = load_fixture_file(os.path.join(fixtures_dir, fn))
        if fixture.name in fixtures:
            raise ValueError(f"Duplicate fixture name '{fixture.name}' in {fn}.")
        fixtures[fixture.name] = fixture
    if include_delpezzo:
        for row in delpezzo.ROWS:
            fixtures[row.name] = delpezzo_fixture(row)
    return fixtures


def show_fixture(fixture: Fixture) -> dict:
    """ The input document of an entry; output-only table rows show the row itself. """
    if fixture.input is not None:
        return fixture.input
    return asdict(fixture.row)


def _same_relations(found: Sequence[str], expected: Sequence[str], parameters: dict) -> bool:
    return relation_space_equal([parse_relation(text) for text in found],
                                [parse_relation(text, parameters) for text in expected])


def compare(report: dict, expected: dict, parameters: Optional[dict] = None) -> List[str]:
    """ Differences between a report and the expected values of a fixture. """
    parameters = parameters or {}
    P = report['presentation']
    problems = []

    def differ(what, found, wanted):
        if found != wanted:
            problems.append(f"{what}: expected {wanted}, got {found}")

    if 'class_group' in expected:
        differ("class group", P['class_group'], expected['class_group'])
    if 'num_generators' in expected:
        differ("number of generators", len(P['generators']), expected['num_generators'])
    if 'num_relations' in expected:
        differ("number of relations", len(P['relations']), expected['num_relations'])
    degrees = {g['label']: g['degree'] for g in P['generators']}
    for label, degree in expected.get('degrees', {}).items():
        differ(f"degree of {label}", degrees.get(label), degree)
    if 'canonical_class' in expected:
        differ("canonical class", report.get('canonical_class'), expected['canonical_class'])
    if 'relations' in expected and not _same_relations(P['relations'], expected['relations'], parameters):
        problems.append(f"relations: expected {expected['relations']}, got {P['relations']}")
    contracted = report.get('contracted')
    if 'contracted_generators' in expected:
        found = sorted(g['label'] for g in contracted['generators']) if contracted else None
        differ("contracted generators", found, sorted(expected['contracted_generators']))
    if 'contracted_relations' in expected and (
            contracted is None or not _same_relations(contracted['relations'], expected['contracted_relations'],
                                                      parameters)):
        problems.append(f"contracted relations: expected {expected['contracted_relations']}, "
                        f"got {contracted and contracted['relations']}")
    return problems


def verify_fixture(fixture: Fixture) -> FixtureResult:
    """ Recompute one entry with all structural checks on; never raises for library errors. """
    start = time.perf_counter()
    try:
        if fixture.kind == DELPEZZO:
            if fixture.row.reconstructible:
                problems = delpezzo.verify_row(fixture.row)
            else:
                problems = []
        else:
            job = parse_document(fixture.input)
            document = serialize(job)
            if serialize(parse_document(document)) != document:
                problems = ["input does not survive a serialize/parse round trip"]
            else:
                problems = []
            report, _ = run(job, check=True)
            problems += compare(report, fixture.expected, fixture.parameters)
    except TcoxError as exc:
        problems = [f"{type(exc).__name__}: {exc}"]
    seconds = time.perf_counter() - start
    logger.info("Fixture %s: %s (%.3f s)", fixture.name, "ok" if not problems else "FAILED", seconds)
    return FixtureResult(fixture.name, not problems, problems, seconds)


def verify_catalog(names: Optional[Sequence[str]] = None, workers: int = 4,
                   fixtures: Optional[Dict[str, Fixture]] = None) -> List[FixtureResult]:
    """ Verify catalog entries in a thread pool; results come back in catalog order.

    Raises:
        KeyError: for an unknown entry name.
    """
    if fixtures is None:
        fixtures = load_fixtures()
    if names:
        missing = [name for name in names if name not in fixtures]
        if missing:
            raise KeyError(f"Unknown catalog entries: {', '.join(missing)}")
        selected = [fixtures[name] for name in names]
    else:
        selected = list(fixtures.values())
    logger.info("Verifying %d catalog entries with %d workers", len(selected), workers)
    with ThreadPoolExecutor(max_workers=max(1, int(workers))) as executor:
        return list(executor.map(verify_fixture, selected))
