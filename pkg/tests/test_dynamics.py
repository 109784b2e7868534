import pytest
from BilliardsA2 import billiards
from BilliardsA2.geometry.weights import Weight
from BilliardsA2.labels.label import Label
from tests import figures


def as_tuples(points):
    return {(p.weight.a, p.weight.b, p.label.n, p.label.k, p.seed)
            for p in points.points()}


@pytest.fixture(scope='module')
def ell5_runs():
    return billiards.run_seeds(5, [1, 2], 10)


testdata = [
    (1, figures.Y1_ROUNDS),
    (2, figures.Y2_ROUNDS),
]


@pytest.mark.parametrize("k,rounds", testdata)
def test_figure_rounds(ell5_runs, k, rounds):
    run = ell5_runs[k]
    assert len(run.trace) == len(rounds)
    for j, (computed, expected) in enumerate(zip(run.trace, rounds), 1):
        assert as_tuples(computed) == set(expected), "Round Q{}".format(j)
    assert as_tuples(run.points) == figures.round_points(rounds)
    assert run.points.max_multiplicity() == 1


def test_figure_sizes(ell5_runs):
    assert len(ell5_runs[1].points) == 45
    assert len(ell5_runs[2].points) == 85


def test_figure_merges(ell5_runs):
    merged = set()
    for k, run in ell5_runs.items():
        for point in run.points.points():
            if point.provenance.merge != 'none':
                merged.add((k, point.provenance.iteration, point.weight.a,
                            point.weight.b, point.label.n,
                            point.provenance.merge))
    assert merged == set(figures.MERGED)


def test_merge_events_of_figures(ell5_runs):
    lines = [event.to_line(5) for event in ell5_runs[1].events]
    assert lines == ['5 5 5 II 88(v^8)', '5 5 10 II 122(v^12)']
    kinds = [(event.iteration, event.kind) for event in ell5_runs[2].events]
    assert kinds == [(6, 'III'), (7, 'II'), (8, 'III'), (10, 'II'),
                     (10, 'II')]


def test_seed_point():
    seed = billiards.seed_point(2, 5)
    assert seed.key == (Weight(10, 0), Label(20, 0))
    assert seed.seed
    assert seed.provenance.seed_index == 2
    with pytest.raises(ValueError):
        billiards.seed_point(0, 5)


def test_ell3_first_round():
    run = billiards.run_dynamics(1, 3, 1)
    assert as_tuples(run.points) == set(figures.ELL3_Y1_ROUNDS[0])


def test_assemble_Y(ell5_runs):
    Y = billiards.assemble_Y(5, 2, 10)
    assert len(Y) == 45 + 85 + 2
    assert (Weight(5, 0), Label(10, 0)) in Y
    assert (Weight(10, 0), Label(20, 0)) in Y
    assert Y == billiards.assemble_runs(5, ell5_runs)


def test_self_similarity(ell5_runs):
    shifted = billiards.shift_points(ell5_runs[1].points, 1, 5)
    Y2 = ell5_runs[2].points
    assert shifted == Y2.filter(lambda key: key[0].a > 5)
    point = shifted.point((Weight(8, 7), Label(98, 8)))
    assert point.provenance.target == Weight(10, 5)
    assert point.provenance.parents


def test_legacy_witness():
    corrected = billiards.run_dynamics(1, 5, 8)
    legacy = billiards.run_dynamics(1, 5, 8, 'legacy')
    extra = legacy.points.difference(corrected.points)
    assert not corrected.points.difference(legacy.points)
    assert legacy.events == []
    extra_points = {(w.a, w.b, l.n, l.k) for w, l in extra.keys()
                    if (w, l) not in corrected.points}
    assert extra_points == set(figures.LEGACY_EXTRA)
    assert legacy.points.multiplicity((Weight(3, 7), Label(88, 8))) == 2
    assert legacy.points.multiplicity((Weight(1, 10), Label(99, 9))) == 2
    for point in extra.points():
        assert point.provenance.op == 'leap'
        assert point.provenance.target is not None


def test_growth_profile(ell5_runs):
    profile = billiards.growth_profile(ell5_runs[1].trace)
    assert [size for size, _ in profile] == [len(points) for points
                                             in figures.Y1_ROUNDS]
    assert all(top == 1 for _, top in profile)


def test_jobs_do_not_change_results(ell5_runs):
    parallel = billiards.run_seeds(5, [2, 1], 10, jobs=2)
    assert list(parallel) == [1, 2]
    for k in parallel:
        assert parallel[k].points == ell5_runs[k].points
        assert ([event.to_line(5) for event in parallel[k].events]
                == [event.to_line(5) for event in ell5_runs[k].events])


@pytest.mark.parametrize("kwargs", [dict(ell=2), dict(iterations=0),
                                    dict(mode='fast'), dict(jobs=0),
                                    dict(seeds=[0])])
def test_incorrect_run_options(kwargs):
    options = dict(ell=5, seeds=[1], iterations=3)
    options.update(kwargs)
    with pytest.raises(ValueError):
        billiards.run_seeds(**options)
