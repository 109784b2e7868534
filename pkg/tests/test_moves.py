import logging
import pytest
from BilliardsA2 import billiards
from BilliardsA2.errors import GeometryError
from BilliardsA2.geometry.weights import Weight
from BilliardsA2.labels.label import Label
from BilliardsA2.billiards.points import make_point, Provenance
from BilliardsA2.billiards.multiset import PointMultiset
from BilliardsA2.billiards.moves import leap_target


def test_rest():
    point = make_point(1, 4, 18, 0)
    rested = billiards.rest(point, seed=True)
    assert rested.key == (Weight(1, 4), Label(21, 1))
    assert rested.seed
    assert rested.provenance.op == 'rest'


def test_small_step():
    point = make_point(5, 0, 10, 0, seed=True)
    step = billiards.small_step(point, 5)
    assert step.key == (Weight(4, 1), Label(12, 0))
    assert not step.seed
    assert step.provenance.op == 'small'


def test_small_step_at_corner_with_several_edges():
    with pytest.raises(GeometryError):
        billiards.small_step(make_point(5, 5, 30, 0), 5)


testdata = [
    # (a, b, n, k), ell, [(a, b, n, k)], corner
    ((1, 4, 21, 1), 5, [(3, 5, 32, 2)], (0, 5)),
    ((3, 5, 32, 2), 5, [(3, 7, 43, 3), (5, 3, 43, 3)], (5, 5)),
    ((6, 4, 31, 1), 5, [(8, 5, 42, 2), (5, 2, 42, 2)], (5, 5)),
    ((5, 3, 43, 3), 5, [(4, 1, 54, 4)], (5, 0)),
    ((1, 2, 13, 1), 3, [(1, 3, 20, 2)], (0, 3)),
]


@pytest.mark.parametrize("start,ell,ends,corner", testdata)
def test_giant_leap(start, ell, ends, corner):
    outputs = billiards.giant_leap(make_point(*start, seed=True), ell)
    assert [(p.weight.a, p.weight.b, p.label.n, p.label.k)
            for p in outputs] == ends
    for point in outputs:
        assert point.seed
        assert point.provenance.op == 'leap'
        assert point.provenance.target == Weight(*corner)


@pytest.mark.parametrize("a,b", [(5, 5), (4, 1), (5, 0)])
def test_giant_leap_from_corner(a, b):
    with pytest.raises(ValueError):
        billiards.giant_leap(make_point(a, b, 10, 0), 5)


def test_leap_target():
    corner, direction, steps = leap_target(Weight(2, 13), 5)
    assert corner == Weight(0, 15)
    assert steps == 2
    assert direction.name == 'D2'


def test_giant_leap_outside_wall_graph():
    with pytest.raises(ValueError):
        billiards.giant_leap(make_point(1, 1, 10, 0), 5)


class CheckIteration():

    def __init__(self, start, ell, routine, expected):

        self.point = make_point(*start, seed=True)
        self.ell = ell
        self.routine = routine
        self.expected = expected
        self.outputs = billiards.iterate_seed(self.point, ell, iteration=3,
                                              seed_index=1)

    def _points(self):
        return [(p.weight.a, p.weight.b, p.label.n, p.label.k, p.seed)
                for p in self.outputs]

    def checks(self):
        assert self._points() == self.expected, "Wrong outputs"
        for point in self.outputs:
            provenance = point.provenance
            assert provenance.routine == self.routine, "Wrong routine"
            assert provenance.iteration == 3, "Wrong iteration"
            assert provenance.seed_index == 1, "Wrong seed index"
            assert provenance.parents == (self.point.key,), "Wrong parents"


testdata = [
    ((5, 0, 10, 0), 5, 'resting-once',
     [(4, 1, 12, 0, False), (3, 2, 14, 0, False), (2, 3, 16, 0, False),
      (1, 4, 18, 0, False), (1, 4, 21, 1, True)]),
    ((4, 1, 54, 4), 5, 'resting-twice',
     [(4, 1, 57, 5, False), (3, 2, 59, 5, False), (2, 3, 61, 5, False),
      (1, 4, 63, 5, False), (1, 4, 66, 6, True)]),
    ((1, 4, 21, 1), 5, 'giant-leap', [(3, 5, 32, 2, True)]),
    ((3, 0, 6, 0), 3, 'resting-once',
     [(2, 1, 8, 0, False), (1, 2, 10, 0, False), (1, 2, 13, 1, True)]),
]


@pytest.mark.parametrize("start,ell,routine,expected", testdata)
def test_iterate_seed(start, ell, routine, expected):
    Test = CheckIteration(start, ell, routine, expected)
    Test.checks()


def _round(seeds, ell):
    outputs = PointMultiset()
    for seed in seeds:
        for point in billiards.iterate_seed(seed, ell, iteration=7):
            outputs.add(point)
    return outputs


def test_merge_of_type_two():
    seeds = [make_point(3, 5, 77, 7, seed=True),
             make_point(5, 7, 77, 7, seed=True)]
    outputs = _round(seeds, 5)
    merged, events = billiards.merge_pass(outputs, 'corrected', iteration=7)
    assert len(events) == 1
    event = events[0]
    assert event.kind == 'II'
    assert event.corner == Weight(5, 5)
    assert event.label == Label(88, 8)
    assert event.to_line(5) == '5 5 5 II 88(v^8)'
    assert sorted(p.weight for p in event.discarded) == [Weight(5, 3),
                                                         Weight(7, 5)]
    assert sorted(p.key for p in event.inputs) == sorted(p.key
                                                         for p in seeds)
    key = (Weight(3, 7), Label(88, 8))
    assert merged.keys() == [key]
    assert merged.multiplicity(key) == 1
    point = merged.point(key)
    assert point.seed and point.provenance.merge == 'II'
    assert set(point.provenance.parents) == {p.key for p in seeds}


def test_merge_of_type_three():
    seeds = [make_point(4, 5, 76, 6, seed=True),
             make_point(6, 4, 76, 6, seed=True),
             make_point(5, 6, 76, 6, seed=True)]
    merged, events = billiards.merge_pass(_round(seeds, 5), iteration=6)
    assert [event.kind for event in events] == ['III']
    assert [p.weight for p in events[0].kept] == [Weight(2, 8), Weight(5, 2),
                                                  Weight(8, 5)]
    assert events[0].discarded == ()
    assert merged.counts() == {(Weight(2, 8), Label(87, 7)): 1,
                               (Weight(5, 2), Label(87, 7)): 1,
                               (Weight(8, 5), Label(87, 7)): 1}


def test_legacy_mode_keeps_outputs():
    seeds = [make_point(3, 5, 77, 7, seed=True),
             make_point(5, 7, 77, 7, seed=True)]
    outputs = _round(seeds, 5)
    result, events = billiards.merge_pass(outputs, 'legacy')
    assert events == []
    assert result == outputs
    assert result.multiplicity((Weight(3, 7), Label(88, 8))) == 2


def _leap(a, b, n, k, source):
    return make_point(a, b, n, k, seed=True, op='leap', target=Weight(5, 5),
                      parents=(source,))


def test_convergence_without_superposition(caplog):
    outputs = PointMultiset([
        _leap(3, 7, 88, 8, (Weight(3, 5), Label(77, 7))),
        _leap(7, 5, 88, 8, (Weight(5, 7), Label(77, 7)))])
    with caplog.at_level(logging.WARNING):
        result, events = billiards.merge_pass(outputs)
    assert events == []
    assert result == outputs
    assert 'do not superpose' in caplog.text


def test_four_leaps_through_a_corner():
    sources = [(Weight(a, 3), Label(77, 7)) for a in range(4)]
    outputs = PointMultiset([_leap(3, 7, 88, 8, source)
                             for source in sources])
    with pytest.raises(GeometryError):
        billiards.merge_pass(outputs)


def test_leaps_are_counted_by_source():
    first = (Weight(3, 5), Label(77, 7))
    second = (Weight(5, 7), Label(77, 7))
    outputs = PointMultiset()
    outputs.add(_leap(3, 7, 88, 8, first), 3)
    result, events = billiards.merge_pass(outputs)
    assert events == []
    assert result == outputs

    outputs = PointMultiset()
    outputs.add(_leap(3, 7, 88, 8, first), 2)
    outputs.add(_leap(3, 7, 88, 8, second))
    result, events = billiards.merge_pass(outputs)
    assert [event.kind for event in events] == ['II']
    assert result.counts() == {(Weight(3, 7), Label(88, 8)): 1}


def test_incorrect_mode():
    with pytest.raises(ValueError):
        billiards.merge_pass(PointMultiset(), 'fast')


def test_provenance_options():
    with pytest.raises(ValueError):
        Provenance(op='jump')
    with pytest.raises(ValueError):
        Provenance(merge='IV')
