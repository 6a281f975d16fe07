# Copyright 2026, tcox developers
"""

JSON input files and the reports computed from them.

Four kinds of input are understood, selected by the top-level "kind" field:

    fan        divisorial fan on P^1
    owgraph    Orlik-Wagreich graph, optionally with a contraction
    bundle     rank-2 bundle jump data over a toric variety
    cotangent  rays of a smooth complete toric variety

Rational numbers are written as strings ("-3/2") or plain integers; floats are rejected.
See docs/dialects.md for the full format.

"""
import json
import logging
import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from tcox.exceptions import CheckFailed, SchemaError, TcoxError
from tcox.polyhedra import Cone, SigmaPolyhedron
from tcox.rationals import format_vector, integer_vector, parse_integer, rational_vector
from .klyachko import BundleRay, Rank2BundleData, cotangent_cox, projectivization_cox
from .orlik_wagreich import ContractionSpec, OWArm, OWGraph, complexity_one_data, contract, resolution_cox
from .pdiv import DivisorialFanP1, P1Point, PolyhedralDivisorP1
from .pipeline import (
    canonical_class, class_group_from_fan, cox_ring, from_fan, moving_cone,
)
from .presentation import (
    GradedPresentation, Grading, GradingStatus, ci_dimension, complete_intersection_canonical_class, is_homogeneous,
    presentation_to_dict,
)

logger = logging.getLogger(__name__)

KINDS = ('fan', 'owgraph', 'bundle', 'cotangent')
EMPTY = "empty"


@dataclass
class FanInput:
    fan: DivisorialFanP1
    group_basis: Optional[Tuple[list, list]] = None


@dataclass
class GraphInput:
    graph: OWGraph
    contraction: Optional[ContractionSpec] = None
    contract_minus_two: bool = False


@dataclass
class CotangentInput:
    rays: Tuple[Tuple[int, ...], ...]


Payload = Union[FanInput, GraphInput, Rank2BundleData, CotangentInput]


@dataclass
class JobSpec:
    kind: str
    payload: Payload
    options: Dict[str, Any] = field(default_factory=dict)


_PATH_TOKEN = re.compile(r"\[(\d+)\]|\.?([^.\[\]]+)")
_DECODER = json.JSONDecoder()
_WS = re.compile(r"\s*")


def _path_tokens(path: str) -> List[Union[str, int]]:
    return [int(index) if index else key for index, key in _PATH_TOKEN.findall(path)]


def _skip_ws(text: str, pos: int) -> int:
    return _WS.match(text, pos).end()


def _member(text: str, pos: int, key: str) -> Optional[Tuple[int, int]]:
    """ (key position, value position) of `key` in the object starting at pos. """
    pos = _skip_ws(text, pos + 1)
    while text[pos] == '"':
        name, end = json.decoder.scanstring(text, pos + 1)
        value = _skip_ws(text, _skip_ws(text, end) + 1)
        if name == key:
            return pos, value
        _, end = _DECODER.raw_decode(text, value)
        pos = _skip_ws(text, end)
        if text[pos] != ',':
            return None
        pos = _skip_ws(text, pos + 1)
    return None


def _element(text: str, pos: int, index: int) -> Optional[int]:
    pos = _skip_ws(text, pos + 1)
    if text[pos] == ']':
        return None
    for _ in range(index):
        _, end = _DECODER.raw_decode(text, pos)
        pos = _skip_ws(text, end)
        if text[pos] != ',':
            return None
        pos = _skip_ws(text, pos + 1)
    return pos


def _locate(text: Optional[str], path: str) -> Tuple[Optional[int], Optional[int]]:
    """ Line and column of the last object key on `path`, following the path through the source text.

    A key missing from the text points at the object that should hold it.
    """
    if not text or not path:
        return None, None
    mark = None
    try:
        pos = _skip_ws(text, 0)
        for token in _path_tokens(path):
            if isinstance(token, int):
                found = _element(text, pos, token) if text[pos] == '[' else None
                if found is None:
                    break
                pos = found
            else:
                found = _member(text, pos, token) if text[pos] == '{' else None
                if found is None:
                    mark = pos
                    break
                mark, pos = found
    except (ValueError, IndexError):
        pass
    if mark is None:
        return None, None
    line = text.count("\n", 0, mark) + 1
    column = mark - (text.rfind("\n", 0, mark) + 1) + 1
    return line, column


class _Reader:
    """ Field access with path tracking for error messages. """

    def __init__(self, text: Optional[str] = None):
        self.text = text

    def error(self, message, path):
        line, column = _locate(self.text, path)
        return SchemaError(message, path=path, line=line, column=column)

    def field(self, obj, key, path, required=True, default=None):
        if not isinstance(obj, dict):
            raise self.error(f"expected an object, got {type(obj).__name__}", path)
        if key not in obj:
            if required:
                raise self.error(f"missing required field '{key}'", f"{path}.{key}" if path else key)
            return default
        return obj[key]

    def list(self, value, path, min_length=0):
        if not isinstance(value, list):
            raise self.error(f"expected a list, got {type(value).__name__}", path)
        if len(value) < min_length:
            raise self.error(f"expected at least {min_length} entries, got {len(value)}", path)
        return value

    def convert(self, func, value, path):
        try:
            return func(value)
        except TcoxError:
            raise
        except (TypeError, ValueError) as exc:
            raise self.error(str(exc), path) from None

    def rationals(self, value, path, length=None):
        value = self.list(value, path)
        if length is not None and len(value) != length:
            raise self.error(f"expected {length} entries, got {len(value)}", path)
        return self.convert(rational_vector, value, path)

    def integers(self, value, path, length=None):
        value = self.list(value, path)
        if length is not None and len(value) != length:
            raise self.error(f"expected {length} entries, got {len(value)}", path)
        return self.convert(integer_vector, value, path)


def _parse_fan(doc: dict, r: _Reader) -> FanInput:
    n = r.convert(parse_integer, r.field(doc, 'rank', ''), 'rank')
    if n < 1:
        raise r.error("lattice rank must be at least 1", 'rank')
    points = {}
    for k, p in enumerate(r.list(r.field(doc, 'points', ''), 'points', min_length=1)):
        path = f"points[{k}]"
        name = str(r.field(p, 'name', path))
        b, c = r.rationals(r.field(p, 'rep', path), f"{path}.rep", length=2)
        if name in points:
            raise r.error(f"point name '{name}' is declared twice", f"{path}.name")
        points[name] = r.convert(lambda bc: P1Point(*bc, name=name), (b, c), f"{path}.rep")
    divisors = []
    for k, d in enumerate(r.list(r.field(doc, 'divisors', ''), 'divisors', min_length=1)):
        path = f"divisors[{k}]"
        rays = [r.integers(ray, f"{path}.tail[{j}]", length=n)
                for j, ray in enumerate(r.list(r.field(d, 'tail', path), f"{path}.tail"))]
        tail = r.convert(lambda g: Cone(n, g), rays, f"{path}.tail")
        coeffs = {}
        raw = r.field(d, 'coefficients', path, required=False, default={})
        if not isinstance(raw, dict):
            raise r.error("expected an object mapping point names to coefficients", f"{path}.coefficients")
        for name, coeff in raw.items():
            cpath = f"{path}.coefficients.{name}"
            if name not in points:
                raise r.error(f"unknown point '{name}'", cpath)
            if coeff == EMPTY:
                coeffs[points[name]] = SigmaPolyhedron.empty(n)
                continue
            vertices = [r.rationals(v, f"{cpath}.vertices[{j}]", length=n)
                        for j, v in enumerate(r.list(r.field(coeff, 'vertices', cpath), f"{cpath}.vertices", 1))]
            coeffs[points[name]] = r.convert(lambda vs: SigmaPolyhedron(n, vs, tail), vertices, cpath)
        name = r.field(d, 'name', path, required=False)
        divisors.append(r.convert(lambda c: PolyhedralDivisorP1(tail, c, name=name), coeffs, path))
    group_basis = None
    basis = r.field(doc, 'group_basis', '', required=False)
    if basis is not None:
        group_basis = tuple(
            [{str(label): r.convert(parse_integer, k, f"group_basis.{part}[{j}].{label}") for label, k in spec.items()}
             for j, spec in enumerate(r.list(r.field(basis, part, 'group_basis', required=False, default=[]),
                                             f"group_basis.{part}"))]
            for part in ('free', 'torsion'))
    fan = r.convert(lambda ds: DivisorialFanP1(ds, list(points.values())), divisors, 'divisors')
    return FanInput(fan, group_basis)


def _parse_owgraph(doc: dict, r: _Reader) -> GraphInput:
    arms = []
    for k, a in enumerate(r.list(r.field(doc, 'arms', ''), 'arms', min_length=1)):
        path = f"arms[{k}]"
        b, c = r.rationals(r.field(a, 'point', path), f"{path}.point", length=2)
        point = r.convert(lambda bc: P1Point(*bc, name=a.get('name')), (b, c), f"{path}.point")
        sis = r.integers(r.field(a, 'b', path), f"{path}.b")
        arms.append(r.convert(lambda s: OWArm(point, s), sis, f"{path}.b"))
    fixed = r.field(doc, 'fixed_curves', '', required=False)
    if fixed is not None:
        fixed = r.integers(fixed, 'fixed_curves', length=2)
    graph = r.convert(lambda x: OWGraph(tuple(arms), x), fixed, 'arms')
    raw = r.field(doc, 'contract', '', required=False)
    if raw is None:
        return GraphInput(graph)
    if raw == "minus-two":
        return GraphInput(graph, ContractionSpec.minus_two_curves(graph), contract_minus_two=True)
    labels = [str(x) for x in r.list(raw, 'contract')]
    unknown = set(labels) - set(graph.curve_labels)
    if unknown:
        raise r.error(f"unknown curve labels {sorted(unknown)}", 'contract')
    return GraphInput(graph, ContractionSpec(frozenset(labels)))


def _parse_bundle(doc: dict, r: _Reader) -> Rank2BundleData:
    n = r.convert(parse_integer, r.field(doc, 'rank', ''), 'rank')
    rays = []
    for k, entry in enumerate(r.list(r.field(doc, 'rays', ''), 'rays', min_length=1)):
        path = f"rays[{k}]"
        v = r.integers(r.field(entry, 'v', path), f"{path}.v", length=n)
        i0 = r.convert(parse_integer, r.field(entry, 'i0', path), f"{path}.i0")
        i1 = r.convert(parse_integer, r.field(entry, 'i1', path), f"{path}.i1")
        line = r.field(entry, 'line', path, required=False)
        if line is not None:
            line = r.convert(lambda bc: P1Point(*bc), r.rationals(line, f"{path}.line", length=2), f"{path}.line")
        rays.append(BundleRay(v, i0, i1, line))
    return r.convert(lambda rs: Rank2BundleData(n, tuple(rs)), rays, 'rays')


def _parse_cotangent(doc: dict, r: _Reader) -> CotangentInput:
    rays = r.list(r.field(doc, 'rays', ''), 'rays', min_length=2)
    rays = [r.integers(v, f"rays[{k}]") for k, v in enumerate(rays)]
    if len({len(v) for v in rays}) != 1:
        raise r.error("rays have different lengths", 'rays')
    return CotangentInput(tuple(rays))


PARSERS = {
    'fan': _parse_fan,
    'owgraph': _parse_owgraph,
    'bundle': _parse_bundle,
    'cotangent': _parse_cotangent,
}


def parse_document(doc: dict, kind: Optional[str] = None, text: Optional[str] = None,
                   options: Optional[dict] = None) -> JobSpec:
    """ Build a JobSpec from an already decoded JSON document. """
    r = _Reader(text)
    if not isinstance(doc, dict):
        raise SchemaError("the top level must be a JSON object", path='')
    declared = doc.get('kind')
    kind = kind or declared
    if kind not in KINDS:
        raise r.error(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", 'kind')
    if declared is not None and declared != kind:
        raise r.error(f"file declares kind '{declared}' but '{kind}' was requested", 'kind')
    payload = PARSERS[kind](doc, r)
    return JobSpec(kind, payload, dict(options or {}))


def parse_input(data: Union[bytes, str], kind: Optional[str] = None, options: Optional[dict] = None) -> JobSpec:
    """ Parse a UTF-8 JSON input file into a JobSpec.

    Args:
        data: File contents.
        kind: Expected kind; when given it must agree with the file's "kind" field.
        options: Run options (format, check) carried along.

    Raises:
        SchemaError: with the offending field path and, when found, line and column.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode('utf-8')
        except UnicodeDecodeError as exc:
            raise SchemaError(f"input is not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    return parse_document(doc, kind, data, options)


def _cone_to_list(cone: Cone) -> List[List[int]]:
    return [list(g) for g in cone.generators]


def serialize(job: JobSpec) -> dict:
    """ The JSON document of a job; `parse_document(serialize(job))` rebuilds it. """
    p = job.payload
    if job.kind == 'fan':
        fan = p.fan
        doc = {
            'kind': 'fan',
            'rank': fan.ambient_rank,
            'points': [{'name': y.label, 'rep': format_vector(y.representative)} for y in fan.points],
            'divisors': [],
        }
        for D in fan.divisors:
            coeffs = {}
            for y, delta in D.coefficients.items():
                coeffs[y.label] = EMPTY if delta.is_empty else {'vertices': [format_vector(v) for v in delta.vertices]}
            doc['divisors'].append({'name': D.name, 'tail': _cone_to_list(D.tail), 'coefficients': coeffs})
        if p.group_basis is not None:
            doc['group_basis'] = {'free': p.group_basis[0], 'torsion': p.group_basis[1]}
        return doc
    if job.kind == 'owgraph':
        g = p.graph
        doc = {'kind': 'owgraph', 'arms': []}
        for arm in g.arms:
            entry = {'point': format_vector(arm.point.representative), 'b': list(arm.self_intersections)}
            if arm.point.name:
                entry['name'] = arm.point.name
            doc['arms'].append(entry)
        if g.fixed_curves is not None:
            doc['fixed_curves'] = list(g.fixed_curves)
        if p.contract_minus_two:
            doc['contract'] = "minus-two"
        elif p.contraction is not None:
            doc['contract'] = sorted(p.contraction.exceptional_labels)
        return doc
    if job.kind == 'bundle':
        rays = []
        for r in p.rays:
            entry = {'v': list(r.ray), 'i0': r.i0, 'i1': r.i1}
            if r.line is not None:
                entry['line'] = format_vector(r.line.representative)
            rays.append(entry)
        return {'kind': 'bundle', 'rank': p.ambient_rank, 'rays': rays}
    return {'kind': 'cotangent', 'rays': [list(v) for v in p.rays]}


def _grading_of(P: GradedPresentation) -> Grading:
    return Grading(P.grading, {g.label: g.degree for g in P.generators}, P.grading_status)


def _moving_cone_rays(P: GradedPresentation) -> Optional[List[List[int]]]:
    if P.grading_status == GradingStatus.UNGRADED:
        return None
    return _cone_to_list(moving_cone(P))


def _check(name: str, ok: bool, checks: List[str]):
    if not ok:
        raise CheckFailed(f"structural check failed: {name}")
    checks.append(name)


def _check_presentation(P: GradedPresentation, checks: List[str]):
    if P.grading_status != GradingStatus.UNGRADED:
        _check("relations are homogeneous", is_homogeneous(P), checks)


def _check_complexity_one(data, P: GradedPresentation, grading: Optional[Grading], checks: List[str]):
    padded = data.padded()
    _check("relation count is max(0, r-1)", len(P.relations) == max(0, padded.r - 1), checks)
    _check("complete intersection dimension",
           ci_dimension(P) == len(padded.e_labels) + len(padded.d_labels) - padded.r + 1, checks)
    reps = [y.representative for y in padded.points]
    monomials = [padded.monomial(i) for i in range(len(padded.points))]

    def annihilates(rel):
        if not set(rel.terms) <= set(monomials):
            return False
        coeffs = [rel.terms.get(m, 0) for m in monomials]
        return all(sum(c * rep[k] for c, rep in zip(coeffs, reps)) == 0 for k in (0, 1))

    _check("relation coefficients annihilate the point representatives",
           all(annihilates(rel) for rel in P.relations), checks)
    _check("every relation has three terms", all(len(rel.monomials) == 3 for rel in P.relations), checks)
    if grading is not None and grading.status == GradingStatus.FULL:
        classes = {canonical_class(data, grading, i) for i in range(padded.r + 1)}
        _check("canonical class is independent of the arm", len(classes) == 1, checks)


def _run_fan(job: JobSpec, report: dict, check: bool):
    fan = job.payload.fan.validated()
    report['validity'] = fan.report.as_dict()
    data = from_fan(fan)
    cg = class_group_from_fan(fan, job.payload.group_basis)
    P = cox_ring(data, cg.grading)
    report['relation_matrix'] = {'columns': list(cg.columns), 'rows': [list(r) for r in cg.matrix]}
    report['base_class'] = cg.degrees['D0'].as_dict()
    report['presentation'] = presentation_to_dict(P)
    report['canonical_class'] = canonical_class(data, cg.grading, 0).as_dict()
    report['moving_cone'] = _moving_cone_rays(P)
    if check:
        _check_presentation(P, report['checks'])
        _check_complexity_one(data, P, cg.grading, report['checks'])
    return P


def _run_owgraph(job: JobSpec, report: dict, check: bool):
    g = job.payload.graph
    P = resolution_cox(g)
    data = complexity_one_data(g)
    report['presentation'] = presentation_to_dict(P)
    graded = P.grading_status == GradingStatus.FULL
    report['canonical_class'] = canonical_class(data, _grading_of(P), 0).as_dict() if graded else None
    report['moving_cone'] = _moving_cone_rays(P)
    if check:
        _check_presentation(P, report['checks'])
        _check_complexity_one(data, P, _grading_of(P) if graded else None, report['checks'])
    if job.payload.contraction is not None:
        Q = contract(P, job.payload.contraction)
        report['contracted'] = presentation_to_dict(Q)
        report['exceptional_labels'] = sorted(job.payload.contraction.exceptional_labels)
        return Q
    return P


def _multilinear_in_fiber(P: GradedPresentation) -> bool:
    fiber = {g.label for g in P.generators if g.label.startswith(("T", "U"))}
    return all(sum(m.exponent(t) for t in fiber) == 1 for rel in P.relations for m in rel.monomials)


def _bundle_canonical_class(P: GradedPresentation) -> Optional[dict]:
    """ Canonical class of P(E); its Cox ring is a complete intersection. """
    if P.grading_status != GradingStatus.FULL:
        return None
    return complete_intersection_canonical_class(P).as_dict()


def _run_bundle(job: JobSpec, report: dict, check: bool):
    d = job.payload
    P = projectivization_cox(d)
    report['lines'] = [format_vector(L.representative) for L in d.lines()]
    report['presentation'] = presentation_to_dict(P)
    report['canonical_class'] = _bundle_canonical_class(P)
    report['moving_cone'] = _moving_cone_rays(P)
    if check:
        _check_presentation(P, report['checks'])
        _check("relations are linear in the fiber variables", _multilinear_in_fiber(P), report['checks'])
        _check("relation count is max(0, #lines - 2)", len(P.relations) == max(0, len(d.lines()) - 2),
               report['checks'])
    return P


def _run_cotangent(job: JobSpec, report: dict, check: bool):
    P = cotangent_cox(job.payload.rays)
    report['presentation'] = presentation_to_dict(P)
    report['canonical_class'] = _bundle_canonical_class(P)
    report['moving_cone'] = _moving_cone_rays(P)
    if check:
        _check_presentation(P, report['checks'])
        _check("relations are linear in the fiber variables", _multilinear_in_fiber(P), report['checks'])
    return P


RUNNERS = {
    'fan': _run_fan,
    'owgraph': _run_owgraph,
    'bundle': _run_bundle,
    'cotangent': _run_cotangent,
}


def run(job: JobSpec, check: Optional[bool] = None) -> Tuple[dict, GradedPresentation]:
    """ Compute the report of a job.

    Returns:
        (report, presentation): the JSON-ready report and the final presentation (the
        contracted one for owgraph jobs with a contraction).

    Raises:
        CheckFailed: if `check` is on and a structural property does not hold.
    """
    if check is None:
        check = bool(job.options.get('check', False))
    report = {'kind': job.kind, 'checks': []}
    logger.info("Running %s job", job.kind)
    P = RUNNERS[job.kind](job, report, check)
    if not check:
        del report['checks']
    return report, P


def format_report(report: dict) -> str:
    """ Human-readable rendering of a report. """
    lines = [f"kind: {report['kind']}"]
    validity = report.get('validity')
    if validity:
        lines.append(f"fan valid: {validity['valid']}, complete: {validity['complete']}")
        lines += [f"  {msg}" for msg in validity['messages']]

    def presentation(title, P):
        group = P['class_group']
        lines.append(f"{title} ({P['grading_status']})")
        if group is not None:
            lines.append("  class group: " + _group_text(group))
        for g in P['generators']:
            degree = "" if g['degree'] is None else "  deg " + _element_text(g['degree'])
            lines.append(f"  {g['label']:8} {g['tag']:9}{degree}")
        lines.extend([f"  relation: {rel}" for rel in P['relations']] or ["  relations: none"])

    presentation("Cox ring", report['presentation'])
    if report.get('canonical_class') is not None:
        lines.append("canonical class: " + _element_text(report['canonical_class']))
    if report.get('moving_cone') is not None:
        lines.append(f"moving cone: cone{tuple(tuple(r) for r in report['moving_cone'])}")
    if 'contracted' in report:
        lines.append("contracted: " + ", ".join(report['exceptional_labels']))
        presentation("Cox ring after contraction", report['contracted'])
    if 'checks' in report:
        lines.append(f"checks passed: {len(report['checks'])}")
    return "\n".join(lines) + "\n"


def _group_text(group: dict) -> str:
    parts = ["Z"] * group['free_rank'] + [f"Z/{d}" for d in group['torsion']]
    return " + ".join(parts) or "0"


def _element_text(element: dict) -> str:
    entries = [str(x) for x in element['free']] + [f"{x} mod" for x in element['torsion']]
    return "(" + ", ".join(entries) + ")"
