import logging
from dataclasses import dataclass
from BilliardsA2.errors import GeometryError
from BilliardsA2.billiards.points import LabelledPoint, Provenance
from BilliardsA2.billiards.multiset import PointMultiset


logger = logging.getLogger(__name__)

list_of_modes = ['corrected', 'legacy']
_KINDS = {2: 'II', 3: 'III'}
_KEPT = {'II': 1, 'III': 3}


def check_mode(mode):
    if mode not in list_of_modes:
        raise ValueError("Incorrect mode")


@dataclass(frozen=True)
class MergeEvent:
    """Giant leaps of one round converging at one corner.

    Args:
        corner: Weight, the corner the leaps went through.
        kind: string, 'II' for two leaps and 'III' for three.
        inputs: tuple of LabelledPoint, the seeds that leapt.
        kept: tuple of LabelledPoint, the superposed seeds kept at
            multiplicity one.
        discarded: tuple of LabelledPoint, the dropped leap endpoints.
        iteration: int, index of the round."""

    corner: object
    kind: str
    inputs: tuple
    kept: tuple
    discarded: tuple
    iteration: int = 0

    def __post_init__(self):
        if self.kind not in _KEPT:
            raise ValueError("Incorrect merge kind")
        leaps = {'II': 2, 'III': 3}[self.kind]
        if len(self.inputs) != leaps or len(self.kept) != _KEPT[self.kind]:
            raise GeometryError(
                "Merge of type {} at {} with {} leaps keeps {} points".format(
                    self.kind, self.corner, len(self.inputs), len(self.kept)))

    @property
    def label(self):
        return self.kept[0].label

    def to_line(self, ell):
        """Returns 'ell corner_a corner_b type label_kept...'."""

        return ' '.join([str(ell), str(self.corner.a), str(self.corner.b),
                         self.kind] + [str(point.label)
                                       for point in self.kept])


def _leap_records(outputs):
    """Groups the giant leap records of a round by their corner.

    Returns:
        dict corner -> (set of source keys, dict output key -> copies)."""

    targets = {}
    for key in outputs.keys():
        for point, copies in outputs.records(key):
            provenance = point.provenance
            if provenance.op != 'leap' or provenance.target is None:
                continue
            sources, produced = targets.setdefault(provenance.target,
                                                   (set(), {}))
            sources.update(provenance.parents)
            produced[key] = produced.get(key, 0) + copies
    return targets


def merge_pass(outputs, mode='corrected', iteration=0):
    """Applies the geometric merge rule to the outputs of one round.

    In the corrected mode, whenever at least two giant leaps go through
    one corner and some of their endpoints coincide, only the superposed
    endpoints are kept, at multiplicity one; the other endpoints of
    leaps through that corner are dropped. The legacy mode leaves the
    outputs untouched.

    Args:
        outputs: PointMultiset, all points produced by one round, giant
            leap endpoints carrying their target corner.
        mode: string, 'corrected' or 'legacy'.
        iteration: int, index of the round, stored in the events.

    Returns:
        tuple (PointMultiset, list of MergeEvent).

    Raises:
        GeometryError: if four or more leaps go through one corner or
            the superposed labels disagree."""

    check_mode(mode)
    if mode == 'legacy':
        return outputs, []

    merged = {}
    events = []
    for corner, (sources, produced) in sorted(_leap_records(outputs).items()):
        leaps = len(sources)
        if leaps < 2:
            continue
        if leaps > 3:
            raise GeometryError("{} giant leaps go through the corner "
                                "{}".format(leaps, corner))
        superposed = sorted(key for key, count in produced.items()
                            if count >= 2)
        if not superposed:
            logger.warning("%d leaps through %s in round %d do not "
                           "superpose", leaps, corner, iteration)
            continue
        if len({label for _, label in superposed}) != 1:
            raise GeometryError("Superposed labels at the corner {} "
                                "disagree".format(corner))
        kind = _KINDS[leaps]
        parents = tuple(sorted(sources))
        kept = []
        for key in superposed:
            template = outputs.point(key)
            point = LabelledPoint(key[0], key[1], True, Provenance(
                op='leap', iteration=iteration, merge=kind,
                routine=template.provenance.routine, target=corner,
                parents=parents,
                seed_index=template.provenance.seed_index))
            merged[key] = point
            kept.append(point)
        discarded = tuple(outputs.point(key) for key in sorted(produced)
                          if key not in merged)
        inputs = tuple(LabelledPoint(weight, label, True)
                       for weight, label in parents)
        event = MergeEvent(corner, kind, inputs, tuple(kept), discarded,
                           iteration)
        logger.debug("Merge of type %s at %s in round %d keeps %s", kind,
                     corner, iteration, ', '.join(map(str, kept)))
        events.append(event)

    if not events:
        return outputs, []

    corners = {event.corner for event in events}
    result = PointMultiset()
    for key in outputs.keys():
        for point, copies in outputs.records(key):
            provenance = point.provenance
            if provenance.op == 'leap' and provenance.target in corners:
                continue
            result.add(point, copies)
        if key in merged:
            result.add(merged[key])
    return result, events
