from abc import ABC, abstractmethod
from BilliardsA2.geometry.weights import pairing
from BilliardsA2.dataio.sl2 import P3_FIXTURE


class Restriction(ABC):
    """Base class of the rules restricting a labelled point of type A2
    to pairs (m, n) of lengths of SL2 basis elements."""

    @abstractmethod
    def __call__(self, point):
        """Returns the list of SL2 pairs (m, n) of a labelled point.

        Args:
            point: LabelledPoint.

        Returns:
            list of pairs of int."""
        pass


class LeviRestriction(Restriction):
    """Provisional restriction to the rank one Levi subgroups: the point
    (a w1 + b w2, n(v^k)) restricts to (2 a, n) for the Levi of alpha1
    and to (2 b, n) for the Levi of alpha2.

    Args:
        levis: tuple of strings, a subset of ('alpha1', 'alpha2').
            Defaults to both."""

    def __init__(self, levis=('alpha1', 'alpha2')):

        list_of_levis = ['alpha1', 'alpha2']
        if not levis or any(levi not in list_of_levis for levi in levis):
            raise ValueError("Incorrect levi")
        self.levis = tuple(levis)

    def __call__(self, point):
        return [(2 * pairing(point.weight, levi), point.label.n)
                for levi in self.levis]


restrictions = {'levi': LeviRestriction,
                'alpha1': lambda: LeviRestriction(('alpha1',)),
                'alpha2': lambda: LeviRestriction(('alpha2',))}
list_of_restrictions = list(restrictions)


def get_restriction(restriction):
    if isinstance(restriction, Restriction):
        return restriction
    if restriction not in restrictions:
        raise ValueError("Incorrect restriction")
    return restrictions[restriction]()


def is_third_generation(point, fixture, restriction):
    """Checks whether some restriction of a point is tagged with a
    generation >= 3 by the fixture."""

    for m, n in restriction(point):
        generation = fixture.generation(m, n)
        if generation is not None and generation >= 3:
            return True
    return False


def heuristic_filter(z_tilde, p, fixture=P3_FIXTURE, restriction='levi'):
    """Removes the labelled points giving a third generation
    contribution, together with all labelled points induced by them
    (whose parent seeds in Z~ were all removed).

    Args:
        z_tilde: PointMultiset.
        p: int, must equal the characteristic of the fixture.
        fixture: SL2Fixture.
        restriction: string (registry name) or Restriction.

    Returns:
        PointMultiset.

    Raises:
        UncoveredError: if a needed length is outside the fixture."""

    if p != fixture.p:
        raise ValueError("Fixture is for p={}, not p={}".format(fixture.p, p))
    restriction = get_restriction(restriction)
    removed = set()
    # parents carry smaller labels than their children
    for key in sorted(z_tilde.keys(), key=lambda key: (key[1], key[0])):
        if is_third_generation(z_tilde.point(key), fixture, restriction):
            removed.add(key)
            continue
        present = [parent for parent in z_tilde.parents(key)
                   if parent in z_tilde]
        if present and all(parent in removed for parent in present):
            removed.add(key)
    return z_tilde.filter(lambda key: key not in removed)
