import re


_TERM = re.compile(r'(\d+)|(?:(\d+)\*)?v(?:\^(-?\d+))?')


class LaurentPolynomial:
    """Finitely supported integer valued map exponent -> coefficient,
    an element of Z[v, v^-1]. Zero coefficients are never stored and
    coefficients are arbitrary precision integers.

    Args:
        coefficients: dict int -> int or iterable of pairs
            (exponent, coefficient); repeated exponents accumulate.

    Note:
        Instances are immutable and hashable."""

    __slots__ = ('_terms', '_hash')

    def __init__(self, coefficients=()):
        if isinstance(coefficients, dict):
            coefficients = coefficients.items()
        terms = {}
        for exponent, coefficient in coefficients:
            terms[exponent] = terms.get(exponent, 0) + coefficient
        self._terms = tuple(sorted((e, c) for e, c in terms.items() if c))
        self._hash = hash(self._terms)

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        """Returns coefficient * v^exponent."""
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    def items(self):
        """Returns the (exponent, coefficient) pairs in ascending order
        of exponents."""
        return self._terms

    def coefficient(self, exponent):
        return dict(self._terms).get(exponent, 0)

    def exponents(self):
        return [e for e, _ in self._terms]

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        return LaurentPolynomial(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial((e, other * c) for e, c in self._terms)
        return LaurentPolynomial((e1 + e2, c1 * c2)
                                 for e1, c1 in self._terms
                                 for e2, c2 in other._terms)

    __rmul__ = __mul__

    def bar(self):
        """Returns the image under v -> v^-1."""
        return LaurentPolynomial((-e, c) for e, c in self._terms)

    def is_symmetric(self):
        return self == self.bar()

    def sort_key(self):
        return self._terms

    def __str__(self):
        if not self._terms:
            return '0'
        out = ''
        for exponent, coefficient in self._terms:
            sign = '-' if coefficient < 0 else '+'
            size = abs(coefficient)
            if exponent == 0:
                term = str(size)
            else:
                power = 'v' if exponent == 1 else 'v^{}'.format(exponent)
                term = power if size == 1 else '{}*{}'.format(size, power)
            if out or sign == '-':
                out += sign
            out += term
        return out

    def __repr__(self):
        return 'LaurentPolynomial({!r})'.format(str(self))

    @classmethod
    def parse(cls, text):
        """Parses a sum of terms 'c', 'v^e' or 'c*v^e' (e any integer,
        terms separated by '+' or '-', whitespace insensitive), for
        example '1+v^2', 'v^-1+v' or '2*v^-3-v'.

        Args:
            text: string.

        Returns:
            LaurentPolynomial.

        Raises:
            ValueError: on malformed input."""

        source = re.sub(r'\s+', '', text)
        if not source:
            raise ValueError("Empty polynomial")
        pieces = []
        start = 0
        for position in range(1, len(source)):
            if source[position] in '+-' and source[position - 1] != '^':
                pieces.append(source[start:position])
                start = position
        pieces.append(source[start:])
        terms = []
        for piece in pieces:
            sign = 1
            if piece[:1] in ('+', '-'):
                sign = -1 if piece[0] == '-' else 1
                piece = piece[1:]
            match = _TERM.fullmatch(piece)
            if match is None:
                raise ValueError("Malformed polynomial term {!r} in "
                                 "{!r}".format(piece, text))
            if match.group(1) is not None:
                terms.append((0, sign * int(match.group(1))))
            else:
                coefficient = int(match.group(2) or 1)
                exponent = int(match.group(3)) if match.group(3) else 1
                terms.append((exponent, sign * coefficient))
        return cls(terms)


ZERO_POLYNOMIAL = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)


def phi(f):
    """Symmetrizes a polynomial in v: v^0 -> 1 and v^k -> v^k + v^-k
    for k > 0, extended linearly.

    Args:
        f: LaurentPolynomial with non-negative exponents only.

    Returns:
        LaurentPolynomial."""

    terms = []
    for exponent, coefficient in f.items():
        if exponent < 0:
            raise ValueError("phi is defined on polynomials with "
                             "non-negative exponents only")
        terms.append((exponent, coefficient))
        if exponent > 0:
            terms.append((-exponent, coefficient))
    return LaurentPolynomial(terms)


def truncate_nonneg(f):
    """Forgets all negative powers of v together with their
    coefficients."""

    return LaurentPolynomial((e, c) for e, c in f.items() if e >= 0)
