# Copyright 2026, tcox developers
"""

Exception hierarchy for tcox.

All library errors derive from `TcoxError`, which is a `ValueError`, so callers that
only care about "bad input" can keep catching `ValueError`.
The command line front end maps `SchemaError` to exit code 2 and every other
`TcoxError` to exit code 1.

"""


class TcoxError(ValueError):
    """ Base class for all tcox errors. """


class DegeneratePoints(TcoxError):
    """ Points on P^1 (or their representatives) are zero, repeated or proportional. """


class TailMismatch(TcoxError):
    """ Two sigma-polyhedra with different tail cones were combined. """


class UnboundedBelow(TcoxError):
    """ A linear form is not bounded below on a polyhedron (u outside the dual tail cone). """


class EmptyPolyhedron(TcoxError):
    """ An operation that needs a non-empty polyhedron received the empty polyhedron. """


class NonCompleteLocus(TcoxError):
    """ A polyhedral divisor or fan has empty coefficients where a complete locus is required. """


class InvalidFan(TcoxError):
    """ A divisorial fan failed validation. The structured report is kept on `report`. """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InvalidGraph(TcoxError):
    """ An Orlik-Wagreich graph is malformed or its continued fractions degenerate. """


class InvalidBundle(TcoxError):
    """ Filtration data of a rank-2 bundle is inconsistent. """


class UnknownLabel(TcoxError):
    """ A generator label is not part of the presentation. """


class MissingDegree(TcoxError):
    """ A grading does not supply a degree for a generator label. """


class CheckFailed(TcoxError):
    """ A structural invariant of a computed result does not hold. """


class SchemaError(TcoxError):
    """ Input JSON does not match the expected dialect.

    Args:
        message: What is wrong.
        path: Field path, e.g. `divisors[2].tail`.
        line, column: Position in the source text, when known.
    """

    def __init__(self, message, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        where = []
        if path:
            where.append(f"field '{path}'")
        if line is not None:
            where.append(f"line {line}" + (f", column {column}" if column is not None else ""))
        if where:
            message = f"{message} ({'; '.join(where)})"
        super().__init__(message)
