from collections import Counter
from BilliardsA2.geometry.weights import is_strictly_dominant
from BilliardsA2.geometry.alcoves import Alcove, LOWER, UPPER
from BilliardsA2.labels.laurent import truncate_nonneg


class Picture:
    """Multisets of entries (i, f) written into dominant alcoves, f a
    polynomial in v with non-negative exponents.

    Args:
        entries: iterable of triples (alcove, i, f)."""

    def __init__(self, entries=()):
        self._cells = {}
        for alcove, i, f in entries:
            self.add(alcove, i, f)

    def add(self, alcove, i, f, count=1):
        if any(exponent < 0 for exponent in f.exponents()):
            raise ValueError("Picture entries have non-negative exponents")
        self._cells.setdefault(alcove, Counter())[(i, f)] += count

    def remove(self, alcove, i, f):
        cell = self._cells[alcove]
        cell[(i, f)] -= 1
        if cell[(i, f)] <= 0:
            del cell[(i, f)]
        if not cell:
            del self._cells[alcove]

    def count(self, alcove, i, f):
        return self._cells.get(alcove, Counter())[(i, f)]

    def alcoves(self):
        return sorted(self._cells)

    def entries(self, alcove):
        """Returns the entries (i, f) of an alcove with repetitions,
        sorted by i and f."""

        cell = self._cells.get(alcove, Counter())
        return [entry for entry in sorted(cell, key=_entry_key)
                for _ in range(cell[entry])]

    def total(self):
        return sum(sum(cell.values()) for cell in self._cells.values())

    def copy(self):
        result = Picture()
        for alcove, cell in self._cells.items():
            result._cells[alcove] = Counter(cell)
        return result

    def __eq__(self, other):
        if not isinstance(other, Picture):
            return NotImplemented
        return self._cells == other._cells

    def __repr__(self):
        return 'Picture({})'.format('; '.join(
            '{}: {}'.format(alcove.address(), ', '.join(
                '{}({})'.format(i, f) for i, f in self.entries(alcove)))
            for alcove in self.alcoves()))


def _entry_key(entry):
    i, f = entry
    return (i, f.sort_key())


def combined_picture(dataset):
    """Writes every coefficient f of b_y in the element with index j as
    the entry (j, f truncated to non-negative powers) into the alcove of
    y. Coefficients vanishing after truncation are skipped.

    Args:
        dataset: PKLDataset.

    Returns:
        Picture."""

    picture = Picture()
    for j in dataset.indices():
        for alcove, f in dataset.records[j].items():
            truncated = truncate_nonneg(f)
            if truncated:
                picture.add(alcove, j, truncated)
    return picture


def _find_triple(picture):
    boxes = sorted({alcove.box for alcove in picture.alcoves()
                    if is_strictly_dominant(alcove.box)})
    for mu in boxes:
        lower, upper = Alcove(mu, LOWER), Alcove(mu, UPPER)
        for i, f in picture.entries(lower):
            if (picture.count(lower, i + 2, f)
                    and picture.count(upper, i + 1, f)):
                return lower, upper, i, f
    return None


def collapse_triples(picture):
    """Replaces triples coming from star operations: whenever the lower
    alcove of a box carries (i, f) and (i + 2, f) and the upper alcove
    carries (i + 1, f), the three entries are replaced by (i, f) in the
    lower alcove. Boxes are scanned by ascending mu, entries by ascending
    i, until no triple is left.

    Args:
        picture: Picture.

    Returns:
        Picture, a new picture."""

    result = picture.copy()
    while True:
        triple = _find_triple(result)
        if triple is None:
            return result
        lower, upper, i, f = triple
        result.remove(lower, i + 2, f)
        result.remove(upper, i + 1, f)
