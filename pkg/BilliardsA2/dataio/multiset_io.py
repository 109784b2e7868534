import csv
import json
from BilliardsA2.errors import ParseError
from BilliardsA2.geometry.weights import Weight
from BilliardsA2.labels.label import Label
from BilliardsA2.billiards.points import LabelledPoint, Provenance
from BilliardsA2.billiards.multiset import PointMultiset


TSV_COLUMNS = ['a', 'b', 'n', 'k', 'seed', 'iteration', 'op', 'merge',
               'multiplicity']
list_of_formats = ['json', 'tsv']


def point_rows(points):
    """Returns one dict per key of a multiset in canonical order."""

    rows = []
    for key, count in points.items():
        point = points.point(key)
        rows.append({
            'weight': [point.weight.a, point.weight.b],
            'n': point.label.n,
            'k': point.label.k,
            'seed': point.seed,
            'iteration': point.provenance.iteration,
            'op': point.provenance.op,
            'merge': point.provenance.merge,
            'multiplicity': count,
        })
    return rows


def _seed_field(seeds):
    seeds = sorted(seeds)
    return seeds[0] if len(seeds) == 1 else seeds


def to_json(points, ell, seeds, iterations, mode):
    """Returns the canonical JSON export of a multiset.

    Args:
        points: PointMultiset.
        ell: int.
        seeds: iterable of int, the seed indices of the run.
        iterations: int.
        mode: string.

    Returns:
        string."""

    document = {
        'ell': ell,
        'seed_k': _seed_field(seeds),
        'iterations': iterations,
        'mode': mode,
        'points': point_rows(points),
    }
    return json.dumps(document, indent=1) + '\n'


def to_tsv(points):
    """Returns the TSV export of a multiset: a header line and one row
    per key with the columns of the JSON export."""

    lines = ['\t'.join(TSV_COLUMNS)]
    for row in point_rows(points):
        values = [row['weight'][0], row['weight'][1], row['n'], row['k'],
                  'true' if row['seed'] else 'false', row['iteration'],
                  row['op'], row['merge'], row['multiplicity']]
        lines.append('\t'.join(str(value) for value in values))
    return '\n'.join(lines) + '\n'


def dumps_points(points, ell, seeds, iterations, mode, format='json'):
    if format not in list_of_formats:
        raise ValueError("Incorrect format")
    if format == 'json':
        return to_json(points, ell, seeds, iterations, mode)
    return to_tsv(points)


def _row_point(row):
    weight = Weight(*row['weight'])
    provenance = Provenance(op=row['op'], iteration=row['iteration'],
                            merge=row['merge'])
    return LabelledPoint(weight, Label(row['n'], row['k']),
                         bool(row['seed']), provenance)


def loads_points(text, source='<string>'):
    """Reads a JSON or TSV export back.

    Args:
        text: string.
        source: string, name used in error messages.

    Returns:
        tuple (dict of the header fields, PointMultiset); the header is
        empty for TSV input."""

    points = PointMultiset()
    if text.lstrip().startswith('{'):
        try:
            document = json.loads(text)
            rows = document['points']
            header = {key: value for key, value in document.items()
                      if key != 'points'}
            for row in rows:
                points.add(_row_point(row), row['multiplicity'])
        except (ValueError, KeyError, TypeError) as error:
            raise ParseError('malformed multiset JSON: {}'.format(error),
                             None, source)
        return header, points
    reader = csv.reader(text.splitlines(), delimiter='\t')
    for number, fields in enumerate(reader, start=1):
        if number == 1:
            if fields != TSV_COLUMNS:
                raise ParseError('expected the header {}'.format(
                    ' '.join(TSV_COLUMNS)), number, source)
            continue
        try:
            row = dict(zip(TSV_COLUMNS, fields))
            point = _row_point({
                'weight': [int(row['a']), int(row['b'])],
                'n': int(row['n']), 'k': int(row['k']),
                'seed': row['seed'] == 'true',
                'iteration': int(row['iteration']),
                'op': row['op'], 'merge': row['merge']})
            points.add(point, int(row['multiplicity']))
        except (ValueError, KeyError) as error:
            raise ParseError(str(error), number, source)
    return {}, points


def read_points(path):
    with open(path, encoding='utf-8') as stream:
        return loads_points(stream.read(), str(path))


def events_lines(events, ell):
    """Returns the merge event export, one line 'ell corner_a corner_b
    type labels...' per event, sorted by kept label, corner and type."""

    ordered = sorted(events, key=lambda event: (event.label, event.corner,
                                                event.kind))
    return [event.to_line(ell) for event in ordered]
