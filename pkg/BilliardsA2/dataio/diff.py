from dataclasses import dataclass
from typing import Optional
from BilliardsA2.labels.laurent import LaurentPolynomial


MISSING_IN_PREDICTION = 'missing-in-prediction'
MISSING_IN_ACTUAL = 'missing-in-actual'
VALUE_MISMATCH = 'value-mismatch'
list_of_kinds = [MISSING_IN_PREDICTION, MISSING_IN_ACTUAL, VALUE_MISMATCH]


@dataclass(frozen=True)
class Discrepancy:
    """One differing coefficient.

    Args:
        i: int, index of the element.
        alcove: Alcove of the basis element b_y.
        kind: string, one of list_of_kinds.
        predicted: LaurentPolynomial or None.
        actual: LaurentPolynomial or None.
        informational: bool, True for gaps expected from a partial
            prediction."""

    i: int
    alcove: object
    kind: str
    predicted: Optional[LaurentPolynomial]
    actual: Optional[LaurentPolynomial]
    informational: bool = False

    def format(self):
        line = 'x {} : {} : {} predicted={} actual={}'.format(
            self.i, self.alcove.address(), self.kind,
            '-' if self.predicted is None else self.predicted,
            '-' if self.actual is None else self.actual)
        if self.informational:
            line += ' (expected under partial strategy)'
        return line


class DiffReport:
    """Discrepancies between a prediction and computed data, sorted by i
    and alcove."""

    def __init__(self, entries):
        self.entries = sorted(entries, key=lambda d: (d.i, d.alcove))

    @property
    def failures(self):
        return [entry for entry in self.entries if not entry.informational]

    def is_empty(self):
        return not self.entries

    def __len__(self):
        return len(self.entries)

    def lines(self):
        return [entry.format() for entry in self.entries]


def diff_report(prediction, actual):
    """Compares two datasets coefficient by coefficient.

    Args:
        prediction: PKLDataset, a prediction; when it is marked partial,
            coefficients missing in it are informational.
        actual: PKLDataset.

    Returns:
        DiffReport.

    Raises:
        ValueError: if the datasets are for different p."""

    if prediction.p != actual.p:
        raise ValueError("Cannot compare data for p={} with data for "
                         "p={}".format(prediction.p, actual.p))
    partial = bool(prediction.partial)
    entries = []
    for i in sorted(set(prediction.records) | set(actual.records)):
        predicted = prediction.records.get(i)
        computed = actual.records.get(i)
        alcoves = set(predicted.alcoves() if predicted else ())
        alcoves |= set(computed.alcoves() if computed else ())
        for alcove in sorted(alcoves):
            left = predicted.coefficient(alcove) if predicted else None
            right = computed.coefficient(alcove) if computed else None
            left = left if left else None
            right = right if right else None
            if left == right:
                continue
            if left is None:
                entries.append(Discrepancy(i, alcove, MISSING_IN_PREDICTION,
                                           None, right, partial))
            elif right is None:
                entries.append(Discrepancy(i, alcove, MISSING_IN_ACTUAL,
                                           left, None))
            else:
                entries.append(Discrepancy(i, alcove, VALUE_MISMATCH,
                                           left, right))
    return DiffReport(entries)
