from dataclasses import dataclass, field, replace
from typing import Optional, Tuple
from BilliardsA2.geometry.weights import Weight
from BilliardsA2.labels.label import Label


list_of_ops = ['initial', 'rest', 'small', 'leap']
list_of_merges = ['none', 'II', 'III']
list_of_routines = ['initial', 'resting-once', 'resting-twice', 'giant-leap']


@dataclass(frozen=True)
class Provenance:
    """Where a labelled point comes from.

    Args:
        op: string, the elementary move that produced the point, one of
            'initial', 'rest', 'small', 'leap'.
        iteration: int, index i of the round Q_i the point belongs to
            (0 for the seeds of X).
        merge: string, 'none', 'II' or 'III'.
        routine: string, the case of the iteration that produced the
            point: 'initial', 'resting-once', 'resting-twice' or
            'giant-leap'.
        target: Weight or None, the corner a giant leap went through.
        parents: tuple of point keys (Weight, Label), the seeds the
            point was produced from.
        seed_index: int or None, the index k of the run Y_k."""

    op: str = 'initial'
    iteration: int = 0
    merge: str = 'none'
    routine: str = 'initial'
    target: Optional[Weight] = None
    parents: Tuple = ()
    seed_index: Optional[int] = None

    def __post_init__(self):
        if self.op not in list_of_ops:
            raise ValueError("Incorrect op")
        if self.merge not in list_of_merges:
            raise ValueError("Incorrect merge")
        if self.routine not in list_of_routines:
            raise ValueError("Incorrect routine")


@dataclass(frozen=True)
class LabelledPoint:
    """An element (mu, n(v^k)) of X x M together with its seed flag and
    provenance.

    Args:
        weight: Weight.
        label: Label.
        seed: bool, whether the point propagates to the next round.
        provenance: Provenance."""

    weight: Weight
    label: Label
    seed: bool = False
    provenance: Provenance = field(default_factory=Provenance,
                                   compare=False)

    @property
    def key(self):
        """The multiset key (weight, label)."""
        return (self.weight, self.label)

    def evolve(self, weight=None, label=None, seed=None, **provenance):
        """Returns a copy with replaced fields; keyword arguments not
        naming a point field update the provenance."""

        return LabelledPoint(
            self.weight if weight is None else weight,
            self.label if label is None else label,
            self.seed if seed is None else seed,
            replace(self.provenance, **provenance))

    def __str__(self):
        return '{}@{}{}'.format(self.label, self.weight,
                                '*' if self.seed else '')


def make_point(a, b, n, k, seed=False, **provenance):
    """Shortcut building a labelled point from plain integers."""

    return LabelledPoint(Weight(a, b), Label(n, k), seed,
                         Provenance(**provenance))


def format_key(key):
    weight, label = key
    return '{}@{}'.format(label, weight)
