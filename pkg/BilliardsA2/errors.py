"""Exceptions raised by the package.

Invalid arguments and options raise the built-in ValueError. The classes
below signal violated geometric assumptions, malformed input files and
lookups outside of shipped fixture data."""


class BilliardsError(Exception):
    """Base class of all package specific errors."""
    pass


class GeometryError(BilliardsError, AssertionError):
    """A geometric assumption of the dynamics does not hold (no unique
    outgoing edge, no corner ahead, a non-unique coset representative,
    an impossible merge and so on)."""
    pass


class ParseError(BilliardsError, ValueError):
    """Malformed line of an interchange file.

    Args:
        reason: string, what is wrong with the line.
        line: int, 1-based line number.
        source: string, name of the parsed file."""

    def __init__(self, reason, line=None, source='<input>'):
        self.reason = reason
        self.line = line
        self.source = source
        if line is None:
            message = '{}: {}'.format(source, reason)
        else:
            message = '{}:{}: {}'.format(source, line, reason)
        super(ParseError, self).__init__(message)


class UncoveredError(BilliardsError, KeyError):
    """Lookup outside of the coverage of a fixture."""

    def __str__(self):
        return str(self.args[0]) if self.args else ''
