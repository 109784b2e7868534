"""Generations of the p-Kazhdan-Lusztig basis of SL2 for p = 3.

The basis elements are indexed by the lengths of the alternating words
s, st, sts, ... The fixture stores the triples (m, n, g): b at length m
occurs in p_b at length n and belongs to generation g."""
from dataclasses import dataclass
from BilliardsA2.errors import UncoveredError


list_of_letters = ['s', 't']


def alternating_word(k, start='s'):
    """Returns the alternating word of length k starting with a given
    letter, e.g. 'stst' for k = 4."""

    if start not in list_of_letters:
        raise ValueError("Incorrect letter")
    if k < 0:
        raise ValueError("Word length must be non-negative")
    other = 't' if start == 's' else 's'
    return ''.join(start if j % 2 == 0 else other for j in range(k))


@dataclass(frozen=True)
class SL2Fixture:
    """Transcribed SL2 generation data.

    Args:
        p: int.
        pairs: frozenset of triples (m, n, generation).
        coverage: range of the covered lengths n."""

    p: int
    pairs: frozenset
    coverage: range

    def __post_init__(self):
        for m, n, _ in self.pairs:
            if m > n:
                raise ValueError("SL2 pair ({}, {}) has m > n".format(m, n))
        diagonal = {(n, n) for m, n, g in self.pairs if m == n and g == 1}
        for n in self.coverage:
            if (n, n) not in diagonal:
                raise ValueError("Length {} is covered but lacks its "
                                 "diagonal entry".format(n))

    def generation(self, m, n):
        """Returns the generation of b at length m in p_b at length n, or
        None when it does not occur."""

        self.check_covered(n)
        for pair_m, pair_n, g in self.pairs:
            if (pair_m, pair_n) == (m, n):
                return g
        return None

    def check_covered(self, n):
        if n not in self.coverage:
            raise UncoveredError("Length {} is not covered by the SL2 "
                                 "fixture for p={} (covered: {}..{})".format(
                                     n, self.p, self.coverage.start,
                                     self.coverage.stop - 1))


# Cells (g, x, y) of the generation diagram: row and column indices start
# at 0 for the word of length 1; grey level g means generation g + 1. The
# diagonal (generation 1) is implied.
_DIAGRAM = (
    (1, 1, 3), (1, 0, 4), (1, 4, 6), (1, 3, 7), (1, 7, 9), (1, 6, 10),
    (2, 5, 11), (2, 4, 12), (2, 6, 12), (2, 3, 13), (2, 7, 13), (2, 2, 14),
    (2, 1, 15), (2, 3, 15), (2, 0, 16), (2, 4, 16), (1, 10, 12), (1, 9, 13),
    (1, 13, 15), (1, 12, 16), (1, 16, 18), (1, 15, 19), (2, 14, 20),
    (2, 13, 21), (2, 15, 21), (2, 12, 22), (2, 16, 22), (2, 11, 23),
    (2, 10, 24), (2, 12, 24), (2, 9, 25), (2, 13, 25), (1, 19, 21),
    (1, 18, 22), (1, 22, 24), (1, 21, 25), (1, 25, 27), (1, 24, 28),
    (2, 23, 29), (2, 22, 30), (2, 24, 30), (2, 21, 31), (2, 25, 31),
    (2, 20, 32), (2, 19, 33), (2, 21, 33), (2, 18, 34), (2, 22, 34),
    (3, 17, 35), (3, 16, 36), (3, 18, 36), (3, 15, 37), (3, 19, 37),
    (3, 14, 38), (3, 20, 38), (3, 13, 39), (3, 15, 39), (3, 19, 39),
    (3, 21, 39), (1, 28, 30), (1, 27, 31), (1, 31, 33), (1, 30, 34),
    (1, 34, 36), (1, 33, 37), (2, 32, 38), (2, 31, 39), (2, 33, 39),
    (1, 37, 39), (3, 12, 40), (3, 16, 40), (3, 18, 40), (3, 22, 40),
    (2, 30, 40), (2, 34, 40), (1, 36, 40),
)

COVERAGE = range(1, 42)


def _diagram_pairs():
    pairs = {(n, n, 1) for n in COVERAGE}
    pairs.update((x + 1, y + 1, g + 1) for g, x, y in _DIAGRAM)
    return frozenset(pairs)


P3_FIXTURE = SL2Fixture(3, _diagram_pairs(), COVERAGE)


def sl2_support(n, p, fixture=P3_FIXTURE):
    """Returns the b-lengths occurring in p_b at length n together with
    their generations.

    Args:
        n: int, length of the alternating word.
        p: int, must equal the characteristic of the fixture.
        fixture: SL2Fixture.

    Returns:
        set of pairs (m, generation).

    Raises:
        UncoveredError: if n is outside the coverage of the fixture."""

    if p != fixture.p:
        raise UncoveredError("No SL2 fixture for p={}".format(p))
    fixture.check_covered(n)
    return {(m, g) for m, pair_n, g in fixture.pairs if pair_n == n}
