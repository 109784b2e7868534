from dataclasses import dataclass
from functools import lru_cache
from BilliardsA2.errors import GeometryError
from BilliardsA2.geometry.weights import Weight, ZERO, RHO
from BilliardsA2.geometry.weights import is_strictly_dominant


LOWER = 'L'
UPPER = 'U'
list_of_halves = [LOWER, UPPER]
list_of_generators = ['s0', 's1', 's2']


@dataclass(frozen=True, order=True)
class Alcove:
    """An alcove of type A2 addressed by the box containing it.

    The box of mu = (a, b) is the open cell a < x < a + 1, b < y < b + 1.
    The wall x + y = a + b + 1 cuts it into a lower and an upper alcove.

    Args:
        box: Weight, the corner mu of the box.
        half: string, 'L' for the lower alcove and 'U' for the upper one.

    Note:
        Centroids are handled in coordinates multiplied by 3 so that all
        computations stay integral: the lower alcove of mu has the
        centroid (3a + 1, 3b + 1), the upper one (3a + 2, 3b + 2)."""

    box: Weight
    half: str

    def __post_init__(self):
        if self.half not in list_of_halves:
            raise ValueError("Incorrect half")

    def centroid3(self):
        """Returns the centroid of the alcove multiplied by 3."""
        shift = 1 if self.half == LOWER else 2
        return (3 * self.box.a + shift, 3 * self.box.b + shift)

    @classmethod
    def from_centroid3(cls, A, B):
        """Returns the alcove with the centroid (A / 3, B / 3)."""
        if A % 3 == 1 and B % 3 == 1:
            return cls(Weight((A - 1) // 3, (B - 1) // 3), LOWER)
        if A % 3 == 2 and B % 3 == 2:
            return cls(Weight((A - 2) // 3, (B - 2) // 3), UPPER)
        raise GeometryError("({}/3, {}/3) is not the centroid "
                            "of an alcove".format(A, B))

    def is_dominant(self):
        return self.box.a >= 0 and self.box.b >= 0

    def length(self):
        """Returns the number of affine hyperplanes separating the alcove
        from the fundamental alcove A0, i.e. the Coxeter length of the
        element x with x A0 equal to the alcove."""

        a, b = self.box.a, self.box.b
        level = a + b + (1 if self.half == UPPER else 0)
        return abs(a) + abs(b) + abs(level)

    def address(self):
        return 'box {} {} {}'.format(self.box.a, self.box.b, self.half)

    def __str__(self):
        return self.address()


FUNDAMENTAL_ALCOVE = Alcove(ZERO, LOWER)


@dataclass(frozen=True)
class AffineMap:
    """Affine map lambda -> M lambda + t of the weight lattice written
    in fundamental weight coordinates.

    Args:
        matrix: pair of pairs of int, rows of M.
        shift: Weight, the translation t."""

    matrix: tuple
    shift: Weight

    def linear(self, a, b):
        (m11, m12), (m21, m22) = self.matrix
        return (m11 * a + m12 * b, m21 * a + m22 * b)

    def __call__(self, weight):
        a, b = self.linear(weight.a, weight.b)
        return Weight(a + self.shift.a, b + self.shift.b)

    def apply3(self, A, B):
        """Applies the map to a point given in coordinates multiplied
        by 3."""
        a, b = self.linear(A, B)
        return (a + 3 * self.shift.a, b + 3 * self.shift.b)

    def compose(self, other):
        """Returns the map self o other."""
        (a11, a12), (a21, a22) = self.matrix
        (b11, b12), (b21, b22) = other.matrix
        matrix = ((a11 * b11 + a12 * b21, a11 * b12 + a12 * b22),
                  (a21 * b11 + a22 * b21, a21 * b12 + a22 * b22))
        return AffineMap(matrix, self(other.shift))


IDENTITY_MAP = AffineMap(((1, 0), (0, 1)), ZERO)
GENERATORS = {
    # s0 is the reflection in a + b = 1
    's0': AffineMap(((0, -1), (-1, 0)), Weight(1, 1)),
    's1': AffineMap(((-1, 0), (1, 1)), ZERO),
    's2': AffineMap(((1, 1), (0, -1)), ZERO),
}


def _check_generator(s):
    if s not in list_of_generators:
        raise ValueError("Incorrect generator")


def word_map(word):
    """Returns the affine map of the product of simple reflections given
    by a word, the first letter acting last."""

    result = IDENTITY_MAP
    for s in word:
        _check_generator(s)
        result = result.compose(GENERATORS[s])
    return result


def alcove_of_word(word):
    """Returns the alcove x A0 for x the product of the letters of a
    word."""

    A, B = word_map(word).apply3(*FUNDAMENTAL_ALCOVE.centroid3())
    return Alcove.from_centroid3(A, B)


def _separated(A, B, s):
    """Checks whether the point (A / 3, B / 3) lies on the other side
    of the s-coloured wall of A0 than A0 itself."""

    if s == 's1':
        return A < 0
    if s == 's2':
        return B < 0
    return A + B > 3


@dataclass(frozen=True)
class AffineElement:
    """An element x of the affine Weyl group of type A2.

    Args:
        word: tuple of strings over 's0', 's1', 's2', a reduced
            expression of x.
        alcove: Alcove, the alcove x A0.

    Note:
        x is a minimal coset representative iff its alcove is
        dominant."""

    word: tuple
    alcove: Alcove

    @property
    def length(self):
        return len(self.word)

    def affine_map(self):
        return word_map(self.word)

    def is_minimal(self):
        return self.alcove.is_dominant()

    def __str__(self):
        return '*'.join(self.word) if self.word else 'id'


IDENTITY = AffineElement((), FUNDAMENTAL_ALCOVE)


def from_word(word):
    """Builds an element from a reduced word.

    Args:
        word: iterable of strings over 's0', 's1', 's2'.

    Returns:
        AffineElement.

    Raises:
        GeometryError: if the word is not reduced."""

    word = tuple(word)
    alcove = alcove_of_word(word)
    if alcove.length() != len(word):
        raise GeometryError("Word {} is not reduced".format(
            '*'.join(word)))
    return AffineElement(word, alcove)


@lru_cache(maxsize=None)
def element_of(alcove):
    """Returns the element x with x A0 equal to a given alcove, together
    with a reduced word obtained by peeling off left descents.

    Args:
        alcove: Alcove.

    Returns:
        AffineElement."""

    A, B = alcove.centroid3()
    word = []
    while (A, B) != FUNDAMENTAL_ALCOVE.centroid3():
        for s in list_of_generators:
            if _separated(A, B, s):
                word.append(s)
                A, B = GENERATORS[s].apply3(A, B)
                break
    return AffineElement(tuple(word), alcove)


def right_multiple_alcove(x, s):
    """Returns the alcove of x * s."""

    _check_generator(s)
    A, B = GENERATORS[s].apply3(*FUNDAMENTAL_ALCOVE.centroid3())
    return Alcove.from_centroid3(*x.affine_map().apply3(A, B))


def right_descents(x):
    """Returns the right descent set of an element. A generator s is a
    right descent iff the s-coloured wall of x A0 separates x A0 from
    A0, i.e. iff x * s is shorter than x.

    Args:
        x: AffineElement.

    Returns:
        frozenset of strings."""

    length = x.alcove.length()
    return frozenset(s for s in list_of_generators
                     if right_multiple_alcove(x, s).length() < length)


def left_descents(x):
    """Returns the left descent set of an element."""

    A, B = x.alcove.centroid3()
    return frozenset(s for s in list_of_generators if _separated(A, B, s))


def periodic_letter(i):
    """Returns the i-th letter (counted from 1) of the periodic word
    s0 s1 s2 s0 s1 s2 ..."""
    return list_of_generators[(i - 1) % 3]


@lru_cache(maxsize=None)
def x_sequence(i):
    """Returns x_i, the product of the first i letters of the periodic
    word s0 s1 s2 s0 s1 s2 ...

    Args:
        i: int >= 0.

    Returns:
        AffineElement.

    Raises:
        GeometryError: if x_i is not a minimal coset representative with
            a unique right descent."""

    if i < 0:
        raise ValueError("Index of x_i must be non-negative")
    if i == 0:
        return IDENTITY
    x = from_word(periodic_letter(j) for j in range(1, i + 1))
    if not x.is_minimal():
        raise GeometryError("x_{} is not a minimal coset "
                            "representative".format(i))
    descents = right_descents(x)
    if len(descents) != 1:
        raise GeometryError("x_{} has right descents {}, expected "
                            "exactly one".format(i, sorted(descents)))
    return x


def unique_descent(x):
    """Returns the only right descent of an element."""

    descents = right_descents(x)
    if len(descents) != 1:
        raise GeometryError("{} has right descents {}, expected exactly "
                            "one".format(x, sorted(descents)))
    return next(iter(descents))


def box_alcoves(mu):
    """Returns the two minimal coset representatives whose alcoves are
    the lower and the upper alcove of the box of mu.

    Args:
        mu: Weight, strictly dominant or zero.

    Returns:
        tuple (lower, upper) of AffineElement."""

    if mu != ZERO and not is_strictly_dominant(mu):
        raise ValueError("Weight {} is not strictly dominant".format(mu))
    return (element_of(Alcove(mu, LOWER)), element_of(Alcove(mu, UPPER)))


@lru_cache(maxsize=None)
def x_mu_s(mu, s):
    """Returns the unique element of the box of mu having s as a right
    descent.

    Args:
        mu: Weight, strictly dominant.
        s: string, one of 's0', 's1', 's2'.

    Returns:
        AffineElement.

    Raises:
        GeometryError: if none or both box elements qualify."""

    _check_generator(s)
    if not is_strictly_dominant(mu):
        raise ValueError("Weight {} is not strictly dominant".format(mu))
    candidates = [x for x in box_alcoves(mu) if s in right_descents(x)]
    if len(candidates) != 1:
        raise GeometryError("{} box elements of {} have the right descent "
                            "{}, expected one".format(len(candidates),
                                                      mu, s))
    return candidates[0]


def dot_p(x, weight, p):
    """Returns the p-dilated dot action x ._p lambda = p x((lambda + rho)
    / p) - rho.

    Args:
        x: AffineElement.
        weight: Weight.
        p: int >= 2.

    Returns:
        Weight."""

    if p < 2:
        raise ValueError("Incorrect p")
    mapping = x.affine_map()
    a, b = mapping.linear(weight.a + RHO.a, weight.b + RHO.b)
    return Weight(a + p * mapping.shift.a - RHO.a,
                  b + p * mapping.shift.b - RHO.b)
