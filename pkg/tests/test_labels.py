import pytest
from hypothesis import given, strategies as st
from BilliardsA2.labels import Label, LaurentPolynomial, phi, truncate_nonneg


polynomials = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5),
                              max_size=5).map(LaurentPolynomial)

v = LaurentPolynomial.monomial(1)
v_inv = LaurentPolynomial.monomial(-1)


class CheckRing():

    def __init__(self, f, g, h):

        self.f = f
        self.g = g
        self.h = h

    def checks(self):
        f, g, h = self.f, self.g, self.h
        assert f + g == g + f, "Addition is not commutative"
        assert f * g == g * f, "Multiplication is not commutative"
        assert (f * g) * h == f * (g * h), "Multiplication is not associative"
        assert f * (g + h) == f * g + f * h, "Distributivity fails"
        assert f - f == 0, "Subtraction fails"
        assert (f * g).bar() == f.bar() * g.bar(), "Bar is not a morphism"
        assert LaurentPolynomial.parse(str(f)) == f, "Printing is not exact"


@given(polynomials, polynomials, polynomials)
def test_ring_laws(f, g, h):
    Test = CheckRing(f, g, h)
    Test.checks()


testdata = [
    (LaurentPolynomial(), '0'),
    (LaurentPolynomial.constant(1), '1'),
    (v_inv + v, 'v^-1+v'),
    (1 + v * v, '1+v^2'),
    (LaurentPolynomial({-3: 2, 1: -1}), '2*v^-3-v'),
    (LaurentPolynomial({0: -4}), '-4'),
]


@pytest.mark.parametrize("f,text", testdata)
def test_canonical_text(f, text):
    assert str(f) == text
    assert LaurentPolynomial.parse(text) == f


@pytest.mark.parametrize("text", ['', '1+', 'x', 'v^', '2**v', 'v^1.5'])
def test_malformed_polynomial(text):
    with pytest.raises(ValueError):
        LaurentPolynomial.parse(text)


def test_parse_whitespace():
    assert LaurentPolynomial.parse(' v ^ -1 +  v ') == v_inv + v


def test_zero_coefficients_are_dropped():
    f = LaurentPolynomial([(2, 1), (2, -1), (0, 3)])
    assert f.items() == ((0, 3),)
    assert f == 3
    assert not LaurentPolynomial({4: 0})


def test_phi():
    assert phi(LaurentPolynomial.constant(1)) == 1
    assert phi(v) == v + v_inv
    assert phi(2 + 3 * v * v) == LaurentPolynomial({-2: 3, 0: 2, 2: 3})
    with pytest.raises(ValueError):
        phi(v_inv)


@given(polynomials)
def test_phi_of_truncation_is_symmetric(f):
    assert phi(truncate_nonneg(f)).is_symmetric()
    assert all(e >= 0 for e in truncate_nonneg(f).exponents())


nonneg_polynomials = st.dictionaries(st.integers(0, 6), st.integers(-5, 5),
                                     max_size=5).map(LaurentPolynomial)

positive_polynomials = st.dictionaries(st.integers(1, 6), st.integers(-5, 5),
                                       max_size=5).map(LaurentPolynomial)


@given(nonneg_polynomials, nonneg_polynomials)
def test_phi_is_additive(f, g):
    assert phi(f + g) == phi(f) + phi(g)


@given(positive_polynomials)
def test_truncation_inverts_phi(f):
    assert truncate_nonneg(phi(f)) == f


def test_truncate_nonneg():
    assert truncate_nonneg(v_inv + 1 + v) == 1 + v
    assert truncate_nonneg(v_inv).is_zero()


testdata = [
    ('12(v^0)', Label(12, 0)),
    ('88(v^8)', Label(88, 8)),
    ('5(v^{-2})', Label(5, -2)),
]


@pytest.mark.parametrize("text,label", testdata)
def test_label_parse(text, label):
    assert Label.parse(text) == label


def test_label():
    label = Label(21, 1)
    assert str(label) == '21(v^1)'
    assert label.shifted(11, 1) == Label(32, 2)
    assert Label(12, 0) < Label(12, 1) < Label(14, 0)
    with pytest.raises(ValueError):
        Label(-1, 0)
    with pytest.raises(ValueError):
        Label.parse('12(w^0)')
