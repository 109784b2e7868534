
class PointMultiset:
    """Multiset of labelled points keyed by (weight, label).

    Every key carries a positive multiplicity and the list of records
    (point, copies) that produced it, in insertion order. The
    multiplicity of a key is the sum of the copies of its records.

    Args:
        points: iterable of LabelledPoint, each added once.

    Note:
        Iteration always follows the canonical order: lexicographic on
        (weight.a, weight.b, label.n, label.k)."""

    def __init__(self, points=()):
        self._counts = {}
        self._records = {}
        for point in points:
            self.add(point)

    def add(self, point, copies=1):
        """Adds copies of a labelled point.

        Args:
            point: LabelledPoint.
            copies: int >= 1."""

        if copies < 1:
            raise ValueError("Number of copies must be positive")
        key = point.key
        self._counts[key] = self._counts.get(key, 0) + copies
        self._records.setdefault(key, []).append((point, copies))

    def update(self, other):
        """Adds all records of another multiset."""

        for key in other.keys():
            for point, copies in other.records(key):
                self.add(point, copies)

    def copy(self):
        result = PointMultiset()
        result.update(self)
        return result

    def keys(self):
        """Returns the keys in canonical order."""
        return sorted(self._counts)

    def items(self):
        """Returns the pairs (key, multiplicity) in canonical order."""
        return [(key, self._counts[key]) for key in self.keys()]

    def multiplicity(self, key):
        return self._counts.get(key, 0)

    __getitem__ = multiplicity

    def __contains__(self, key):
        return key in self._counts

    def __len__(self):
        return len(self._counts)

    def __iter__(self):
        return iter(self.keys())

    def total(self):
        """Returns the sum of all multiplicities."""
        return sum(self._counts.values())

    def max_multiplicity(self):
        return max(self._counts.values(), default=0)

    def records(self, key):
        """Returns the list of (LabelledPoint, copies) records of a
        key."""
        return list(self._records.get(key, ()))

    def point(self, key):
        """Returns a representative labelled point of a key: seed if any
        record is a seed, with the provenance of its first seed record
        (of its first record otherwise)."""

        records = self._records[key]
        seeds = [point for point, _ in records if point.seed]
        return seeds[0] if seeds else records[0][0]

    def points(self):
        """Returns the representative points in canonical order."""
        return [self.point(key) for key in self.keys()]

    def seeds(self):
        """Returns the pairs (seed point, copies) in canonical order,
        copies counting the seed records of each key only."""

        result = []
        for key in self.keys():
            copies = sum(c for point, c in self._records[key] if point.seed)
            if copies:
                result.append((self.point(key), copies))
        return result

    def parents(self, key):
        """Returns the set of parent keys over all records of a key."""

        return {parent for point, _ in self._records[key]
                for parent in point.provenance.parents}

    def filter(self, predicate):
        """Returns the sub-multiset of the keys satisfying a
        predicate."""

        result = PointMultiset()
        for key in self.keys():
            if predicate(key):
                for point, copies in self._records[key]:
                    result.add(point, copies)
        return result

    def map_points(self, function):
        """Returns the multiset of images of all records under a map of
        labelled points."""

        result = PointMultiset()
        for key in self.keys():
            for point, copies in self._records[key]:
                result.add(function(point), copies)
        return result

    def difference(self, other):
        """Returns the multiset difference self - other: every key with
        its excess multiplicity. Records of the excess keep the
        provenance of the latest records of self."""

        result = PointMultiset()
        for key in self.keys():
            excess = self._counts[key] - other.multiplicity(key)
            if excess <= 0:
                continue
            for point, copies in reversed(self._records[key]):
                taken = min(copies, excess)
                result.add(point, taken)
                excess -= taken
                if not excess:
                    break
        return result

    def counts(self):
        """Returns a plain dict key -> multiplicity."""
        return dict(self._counts)

    def __eq__(self, other):
        if not isinstance(other, PointMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __repr__(self):
        return 'PointMultiset({})'.format(', '.join(
            '{}@{}x{}'.format(label, weight, count)
            for (weight, label), count in self.items()))
