from BilliardsA2.labels.laurent import LaurentPolynomial


class KLCombination:
    """Element of the anti-spherical module written in Kazhdan-Lusztig
    coordinates: a finitely supported map dominant alcove ->
    LaurentPolynomial, the alcove x A0 standing for the basis element
    b_x.

    Args:
        coefficients: dict Alcove -> LaurentPolynomial or iterable of
            pairs; repeated alcoves accumulate, zero polynomials are
            dropped."""

    def __init__(self, coefficients=()):
        if isinstance(coefficients, dict):
            coefficients = coefficients.items()
        terms = {}
        for alcove, polynomial in coefficients:
            if not alcove.is_dominant():
                raise ValueError("Alcove {} is not dominant".format(alcove))
            terms[alcove] = terms.get(alcove, LaurentPolynomial()) + polynomial
        self._terms = {alcove: f for alcove, f in terms.items() if f}

    @classmethod
    def unit(cls, alcove):
        """Returns the basis element at an alcove."""
        return cls({alcove: LaurentPolynomial.constant(1)})

    def items(self):
        """Returns the (alcove, polynomial) pairs sorted by alcove."""
        return sorted(self._terms.items())

    def alcoves(self):
        return sorted(self._terms)

    def coefficient(self, alcove):
        return self._terms.get(alcove, LaurentPolynomial())

    def __contains__(self, alcove):
        return alcove in self._terms

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        return KLCombination(list(self._terms.items())
                             + list(other._terms.items()))

    def __eq__(self, other):
        if not isinstance(other, KLCombination):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        return 'KLCombination({})'.format(', '.join(
            '{}: {}'.format(alcove.address(), f) for alcove, f in self.items()))
