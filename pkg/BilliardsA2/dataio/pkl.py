"""Line based interchange format of p-Kazhdan-Lusztig data.

    p 5
    # partial true
    x 0 : box 0 0 L : 1
    x 4 : box 1 1 L : v^-1+v

The header 'p <int>' comes first, records 'x <i> : <alcove> : <poly>'
give the coefficient of b_y (y A0 the alcove) in the element with index
i, '#' starts a comment. The comment '# partial true|false' marks
predictions made from an incomplete Step-3 strategy."""
import io
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, Optional
from BilliardsA2.errors import ParseError
from BilliardsA2.geometry.convert import address_to_alcove
from BilliardsA2.geometry.alcoves import x_sequence
from BilliardsA2.labels.laurent import LaurentPolynomial
from BilliardsA2.conjecture.klcomb import KLCombination


logger = logging.getLogger(__name__)

_HEADER = re.compile(r'p\s+(\d+)')
_PARTIAL = re.compile(r'#\s*partial\s+(true|false)')
_INDEX = re.compile(r'x\s+(\d+)')


@dataclass
class PKLDataset:
    """Expansions of the elements p_b_(x_i) (or of predictions zeta_i)
    in the Kazhdan-Lusztig basis.

    Args:
        p: int, the characteristic.
        records: dict i -> KLCombination.
        partial: bool or None, completeness flag of a prediction; None
            for ingested data."""

    p: int
    records: Dict = field(default_factory=dict)
    partial: Optional[bool] = None

    def indices(self):
        return sorted(self.records)

    def leading_term_violations(self):
        """Returns the indices i whose record lacks the alcove of x_i
        with constant term at least 1."""

        bad = []
        for i in self.indices():
            alcove = x_sequence(i).alcove
            if self.records[i].coefficient(alcove).coefficient(0) < 1:
                bad.append(i)
        return bad


def _parse_lines(lines, source):
    p = None
    partial = None
    terms = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            match = _PARTIAL.fullmatch(line)
            if match is not None:
                partial = match.group(1) == 'true'
            continue
        if p is None:
            match = _HEADER.fullmatch(line)
            if match is None:
                raise ParseError("expected header 'p <int>'", number, source)
            p = int(match.group(1))
            continue
        if _HEADER.fullmatch(line):
            raise ParseError("repeated header", number, source)
        fields = line.split(':')
        if len(fields) != 3:
            raise ParseError("expected 'x <i> : box <a> <b> <L|U> : "
                             "<poly>'", number, source)
        match = _INDEX.fullmatch(fields[0].strip())
        if match is None:
            raise ParseError("malformed index {!r}".format(fields[0].strip()),
                             number, source)
        try:
            alcove = address_to_alcove(fields[1])
        except ValueError as error:
            raise ParseError(str(error), number, source)
        try:
            polynomial = LaurentPolynomial.parse(fields[2])
        except ValueError as error:
            raise ParseError(str(error), number, source)
        key = (int(match.group(1)), alcove)
        if key in terms:
            raise ParseError("duplicate record for x {} at {}".format(
                key[0], alcove.address()), number, source)
        terms[key] = polynomial
    if p is None:
        raise ParseError("missing header 'p <int>'", None, source)
    records = {}
    for (i, alcove), polynomial in terms.items():
        records.setdefault(i, []).append((alcove, polynomial))
    dataset = PKLDataset(p, {i: KLCombination(records[i])
                             for i in sorted(records)}, partial)
    logger.debug("Parsed %d records for p=%d from %s", len(terms), p, source)
    return dataset


def parse_pkl(source):
    """Parses a p-KL dataset or prediction.

    Args:
        source: path (string or os.PathLike) of the file, or an open
            text stream.

    Returns:
        PKLDataset.

    Raises:
        ParseError: with the line number on malformed input or
            duplicated (i, alcove) records."""

    if hasattr(source, 'read'):
        name = getattr(source, 'name', '<stream>')
        return _parse_lines(source.read().splitlines(), str(name))
    with open(source, encoding='utf-8') as stream:
        return _parse_lines(stream.read().splitlines(), str(source))


def parse_pkl_text(text, source='<string>'):
    return _parse_lines(text.splitlines(), source)


def write_pkl(dataset, stream):
    """Writes a dataset in canonical form: header, partial flag, records
    sorted by i and then by alcove address.

    Args:
        dataset: PKLDataset.
        stream: text stream."""

    stream.write('p {}\n'.format(dataset.p))
    if dataset.partial is not None:
        stream.write('# partial {}\n'.format(
            'true' if dataset.partial else 'false'))
    for i in dataset.indices():
        for alcove, polynomial in dataset.records[i].items():
            stream.write('x {} : {} : {}\n'.format(i, alcove.address(),
                                                   polynomial))


def dumps_pkl(dataset):
    """Returns the canonical text of a dataset."""

    stream = io.StringIO()
    write_pkl(dataset, stream)
    return stream.getvalue()
