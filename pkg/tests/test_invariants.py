import pytest
from BilliardsA2 import billiards
from BilliardsA2.billiards import invariants
from BilliardsA2.billiards.points import make_point
from BilliardsA2.billiards.multiset import PointMultiset


class CheckDynamics():

    def __init__(self, ell, seeds, iterations):

        self.ell = ell
        self.runs = billiards.run_seeds(ell, seeds, iterations)
        self.reports = billiards.check_invariants(self.runs, ell)

    def _failures(self):
        return [report.format() for report in self.reports
                if report.status != invariants.PASS]

    def checks(self):
        assert not self._failures(), "Failed: {}".format(self._failures())
        assert invariants.suite_passed(self.reports)
        assert [report.name for report in self.reports] == [
            'seed_congruence', 'seed_exponent_not_multiple',
            'seed_exponent_law', 'operation_periodicity', 'disjointness',
            'column_confinement', 'self_similarity', 'multiplicity_one',
            'wall_position']


@pytest.fixture(params=[3, 5, 7, 11])
def ell(request):
    return request.param


@pytest.fixture(params=[20, 30])
def iterations(request):
    return request.param


def test_invariant_suite(ell, iterations):
    Test = CheckDynamics(ell, [1, 2, 3], iterations)
    Test.checks()


testdata = [
    (1, 5, 1), (2, 5, 2), (5, 5, 6), (6, 5, 7), (9, 5, 11),
    (1, 3, 1), (3, 3, 4), (5, 3, 7),
]


@pytest.mark.parametrize("j,ell,expected", testdata)
def test_expected_exponent(j, ell, expected):
    assert invariants.expected_exponent(j, ell) == expected


testdata = [
    (1, 5, 'resting-once'), (2, 5, 'giant-leap'), (4, 5, 'giant-leap'),
    (5, 5, 'resting-twice'), (9, 5, 'resting-twice'), (3, 3, 'resting-twice'),
    (2, 3, 'giant-leap'),
]


@pytest.mark.parametrize("j,ell,expected", testdata)
def test_expected_routine(j, ell, expected):
    assert invariants.expected_routine(j, ell) == expected


def test_legacy_failures_are_expected():
    runs = billiards.run_seeds(5, [1], 8, mode='legacy')
    reports = {report.name: report
               for report in billiards.check_invariants(runs, 5, 'legacy')}
    assert reports['multiplicity_one'].status == invariants.XFAIL
    assert reports['column_confinement'].status == invariants.XFAIL
    assert reports['multiplicity_one'].witnesses
    assert reports['seed_congruence'].status == invariants.PASS
    assert invariants.suite_passed(reports.values())


def _fake_run(points):
    round_points = PointMultiset(points)
    return billiards.DynamicsRun(round_points, [], [round_points])


def test_violations_are_reported():
    bad = make_point(1, 4, 23, 2, seed=True, routine='giant-leap')
    runs = {1: _fake_run([bad])}
    reports = {report.name: report
               for report in billiards.check_invariants(runs, 5)}
    assert reports['seed_congruence'].status == invariants.FAIL
    assert reports['seed_exponent_law'].status == invariants.FAIL
    assert reports['operation_periodicity'].status == invariants.FAIL
    assert reports['wall_position'].status == invariants.FAIL
    assert reports['multiplicity_one'].status == invariants.PASS
    assert not invariants.suite_passed(reports.values())
    assert reports['seed_congruence'].format() == (
        'FAIL seed_congruence: k=1 Q1 23(v^2)@(1,4)*')


def test_disjointness_violation():
    point = make_point(1, 4, 21, 1, seed=True)
    report = invariants.disjointness({1: _fake_run([point]),
                                      2: _fake_run([point])})
    assert report.status == invariants.FAIL
    assert report.witnesses == ('Y_1 and Y_2 share 21(v^1)@(1,4)',)


def test_witnesses_are_bounded():
    points = [make_point(a, 1, 7, 0) for a in range(1, 20)]
    report = invariants.column_confinement({1: _fake_run(points)}, 5)
    assert len(report.witnesses) == invariants.MAX_WITNESSES
