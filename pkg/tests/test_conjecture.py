import io
import pytest
from BilliardsA2 import billiards
from BilliardsA2 import conjecture
from BilliardsA2.conjecture import generations
from BilliardsA2.geometry.weights import Weight
from BilliardsA2.geometry.alcoves import Alcove, LOWER, UPPER
from BilliardsA2.geometry.alcoves import x_sequence, x_mu_s, from_word
from BilliardsA2.labels.laurent import LaurentPolynomial, phi, truncate_nonneg
from BilliardsA2.billiards.points import make_point
from BilliardsA2.billiards.multiset import PointMultiset
from BilliardsA2.dataio.pkl import parse_pkl_text


ONE = LaurentPolynomial.constant(1)
SYMMETRIC_V = LaurentPolynomial({-1: 1, 1: 1})


@pytest.fixture
def z_tilde():
    return PointMultiset([make_point(1, 4, 21, 1, seed=True),
                          make_point(3, 5, 32, 2, seed=True)])


def test_zeta_0(z_tilde):
    assert conjecture.zeta(0, z_tilde, 5) == conjecture.KLCombination.unit(
        Alcove(Weight(0, 0), LOWER))


@pytest.mark.parametrize("i", [21, 22, 23])
def test_zeta_window(z_tilde, i):
    s = ('s0', 's1', 's2')[(i - 1) % 3]
    expected = conjecture.KLCombination({
        x_sequence(i).alcove: ONE,
        x_mu_s(Weight(1, 4), s).alcove: SYMMETRIC_V})
    assert conjecture.zeta(i, z_tilde, 5) == expected


def test_zeta_outside_window(z_tilde):
    assert conjecture.zeta(20, z_tilde, 5) == conjecture.KLCombination.unit(
        x_sequence(20).alcove)
    assert len(conjecture.zeta(24, z_tilde, 5)) == 1
    combination = conjecture.zeta(32, z_tilde, 5)
    coefficient = combination.coefficient(
        x_mu_s(Weight(3, 5), 's1').alcove)
    assert coefficient == LaurentPolynomial({-2: 1, 2: 1})


def test_zeta_multiplicities_add_up():
    point = make_point(1, 4, 21, 1)
    z_tilde = PointMultiset()
    z_tilde.add(point, 2)
    combination = conjecture.zeta(21, z_tilde, 5)
    alcove = x_mu_s(Weight(1, 4), 's2').alcove
    assert combination.coefficient(alcove) == SYMMETRIC_V * 2


def test_predict_is_ordered(z_tilde):
    prediction = conjecture.predict(25, z_tilde, 5)
    assert list(prediction) == list(range(26))
    assert prediction[21] == conjecture.zeta(21, z_tilde, 5)


def test_predict_with_jobs(z_tilde):
    assert conjecture.predict(25, z_tilde, 5, jobs=2) == conjecture.predict(
        25, z_tilde, 5)


def test_incorrect_prediction_options(z_tilde):
    with pytest.raises(ValueError):
        conjecture.predict(-1, z_tilde, 5)
    with pytest.raises(ValueError):
        conjecture.zeta(3, z_tilde, 1)


def test_export_prediction(z_tilde):
    stream = io.StringIO()
    dataset = conjecture.export_prediction(23, z_tilde, 5, stream)
    text = stream.getvalue()
    assert text.startswith('p 5\n# partial true\nx 0 : box 0 0 L : 1\n')
    assert 'x 21 : box 0 10 U : 1\n' in text
    parsed = parse_pkl_text(text)
    assert parsed == dataset
    assert parsed.leading_term_violations() == []


def test_klcombination():
    lower = Alcove(Weight(1, 1), LOWER)
    upper = Alcove(Weight(1, 1), UPPER)
    f = conjecture.KLCombination([(lower, ONE), (upper, SYMMETRIC_V),
                                  (lower, -ONE)])
    assert f.alcoves() == [upper]
    assert lower not in f
    assert f + conjecture.KLCombination.unit(lower) == conjecture.KLCombination(
        {lower: ONE, upper: SYMMETRIC_V})
    with pytest.raises(ValueError):
        conjecture.KLCombination.unit(Alcove(Weight(-1, 0), UPPER))


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_exact_window(p):
    assert generations.exact_window(p) == 2 * p * (p + 1)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_stabilization_of_s0(p):
    s0 = from_word(['s0'])
    assert generations.level(s0, p) == 2 * p - 2
    assert not generations.stabilized(s0, p, 0)
    assert generations.stabilized(s0, p, 1)
    assert generations.stable_generation(s0, p) == 1


@pytest.mark.parametrize("p", [3, 5])
def test_stable_generation_is_least(p):
    for i in range(0, 60):
        x = x_sequence(i)
        n = generations.stable_generation(x, p)
        assert generations.stabilized(x, p, n)
        assert n == 1 or not generations.stabilized(x, p, n - 1)


def test_generation_index_must_be_non_negative():
    with pytest.raises(ValueError):
        generations.stabilized(x_sequence(3), 3, -1)


@pytest.fixture(scope='module')
def computed_z_tilde():
    Y = billiards.assemble_Y(5, 2, 6)
    extended = billiards.extend_step3(Y, 5, 'wall-only')
    return billiards.remove_x_seeds(extended.points, 5)


def test_every_point_contributes_three_times(computed_z_tilde):
    i_max = 40
    windows = [dict(conjecture.contributions(i, computed_z_tilde))
               for i in range(i_max + 1)]
    checked = 0
    for key, count in computed_z_tilde.items():
        n = key[1].n
        if n + 2 > i_max:
            continue
        hits = [i for i, window in enumerate(windows) if key in window]
        assert hits == [n, n + 1, n + 2], "Window of {}".format(key)
        assert all(windows[i][key] == count for i in hits)
        checked += 1
    assert checked > 0


@pytest.mark.parametrize("i", range(1, 41))
def test_zeta_coefficients(computed_z_tilde, i):
    combination = conjecture.zeta(i, computed_z_tilde, 5)
    leading = x_sequence(i).alcove
    assert combination.coefficient(leading).coefficient(0) >= 1
    for alcove in combination.alcoves():
        if alcove == leading:
            continue
        coefficient = combination.coefficient(alcove)
        assert coefficient.is_symmetric()
        assert phi(truncate_nonneg(coefficient)) == coefficient
