from dataclasses import dataclass
from enum import Enum
from BilliardsA2.errors import GeometryError


list_of_coroots = ['alpha1', 'alpha2', 'theta']


@dataclass(frozen=True, order=True)
class Weight:
    """A weight a * w1 + b * w2 of SL3 written in the basis of
    fundamental weights.

    Args:
        a: int, coefficient of the first fundamental weight.
        b: int, coefficient of the second fundamental weight.

    Note:
        Weights are ordered lexicographically by (a, b); this order is
        the canonical order of every exported point set."""

    a: int
    b: int

    def __add__(self, other):
        return Weight(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return Weight(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return Weight(-self.a, -self.b)

    def scale(self, factor):
        """Returns the weight multiplied by an integer factor."""
        return Weight(factor * self.a, factor * self.b)

    def __str__(self):
        return '({},{})'.format(self.a, self.b)


ZERO = Weight(0, 0)
RHO = Weight(1, 1)
THETA = Weight(1, 1)
ALPHA1 = Weight(2, -1)
ALPHA2 = Weight(-1, 2)


class Direction(Enum):
    """Directions of the edges of the graphs Gamma, Gamma_l and
    Gamma_wall. Each direction keeps one coroot pairing constant."""

    D1 = (1, 0)
    D2 = (-1, 1)
    D3 = (0, -1)

    @property
    def vector(self):
        return Weight(*self.value)

    @property
    def preserved_coroot(self):
        """Name of the coroot whose pairing does not change along the
        direction."""
        return _PRESERVED[self]

    def __lt__(self, other):
        return self.name < other.name


_PRESERVED = {Direction.D1: 'alpha2',
              Direction.D2: 'theta',
              Direction.D3: 'alpha1'}


def pairing(weight, coroot):
    """Returns the pairing of a weight with a positive coroot.

    Args:
        weight: Weight.
        coroot: string, one of 'alpha1', 'alpha2', 'theta'.

    Returns:
        int, a, b or a + b respectively."""

    if coroot == 'alpha1':
        return weight.a
    elif coroot == 'alpha2':
        return weight.b
    elif coroot == 'theta':
        return weight.a + weight.b
    raise ValueError("Incorrect coroot")


def check_ell(ell):
    """Raises ValueError unless ell is an integer not smaller than 3."""

    if isinstance(ell, bool) or not isinstance(ell, int) or ell < 3:
        raise ValueError("Incorrect ell: expected an integer >= 3, "
                         "got {!r}".format(ell))


def is_dominant(weight):
    return weight.a >= 0 and weight.b >= 0


def is_strictly_dominant(weight):
    return weight.a > 0 and weight.b > 0


def _check_dominant(weight):
    if not is_dominant(weight):
        raise ValueError("Weight {} is not dominant".format(weight))


def is_corner(weight, ell):
    """Checks whether a dominant weight is a corner point, i.e. all its
    positive coroot pairings lie in ell * Z.

    Args:
        weight: Weight, dominant.
        ell: int >= 3.

    Returns:
        bool."""

    check_ell(ell)
    _check_dominant(weight)
    return weight.a % ell == 0 and weight.b % ell == 0


def in_gamma(weight):
    """Checks whether a weight is a vertex of Gamma (the dominant
    cone)."""
    return is_dominant(weight)


def is_almost_corner(weight, ell):
    """Checks whether a dominant weight is the target of a Gamma-edge
    starting at a corner point.

    Args:
        weight: Weight, dominant.
        ell: int >= 3.

    Returns:
        bool."""

    check_ell(ell)
    _check_dominant(weight)
    for direction in Direction:
        source = weight - direction.vector
        if is_dominant(source) and is_corner(source, ell):
            return True
    return False


def in_gamma_ell(weight, ell):
    """Checks whether a weight is a vertex of Gamma_l: dominant with at
    least one positive coroot pairing in ell * Z."""

    check_ell(ell)
    if not is_dominant(weight):
        return False
    return any(pairing(weight, coroot) % ell == 0
               for coroot in list_of_coroots)


def in_wall_graph(weight, ell):
    """Checks whether a weight is a vertex of Gamma_wall. These are the
    vertices of Gamma_l with the points of the two walls of the dominant
    cone removed, except for the corners k * ell * w1 and k * ell * w2
    with k >= 1."""

    if not in_gamma_ell(weight, ell):
        return False
    if weight.a == 0 or weight.b == 0:
        if weight == ZERO:
            return False
        return weight.a % ell == 0 and weight.b % ell == 0
    return True


def gamma_ell_out_edges(weight, ell):
    """Returns the set of directions of the Gamma_l edges leaving a
    vertex of Gamma_l.

    Args:
        weight: Weight, vertex of Gamma_l.
        ell: int >= 3.

    Returns:
        frozenset of Direction."""

    if not in_gamma_ell(weight, ell):
        raise ValueError("Weight {} is not a vertex of Gamma_l "
                         "for ell={}".format(weight, ell))
    edges = set()
    for direction in Direction:
        coroot = direction.preserved_coroot
        target = weight + direction.vector
        if pairing(weight, coroot) % ell == 0 and is_dominant(target):
            edges.add(direction)
    return frozenset(edges)


def wall_out_edges(weight, ell):
    """Returns the set of directions of the Gamma_wall edges leaving a
    vertex of Gamma_wall.

    Args:
        weight: Weight, vertex of Gamma_wall.
        ell: int >= 3.

    Returns:
        frozenset of Direction."""

    if not in_wall_graph(weight, ell):
        raise ValueError("Weight {} is not a vertex of Gamma_wall "
                         "for ell={}".format(weight, ell))
    edges = set()
    for direction in Direction:
        coroot = direction.preserved_coroot
        target = weight + direction.vector
        if pairing(weight, coroot) % ell == 0 and in_wall_graph(target, ell):
            edges.add(direction)
    return frozenset(edges)


def unique_out_edge(weight, ell):
    """Returns the only Gamma_wall direction leaving a weight.

    Raises:
        GeometryError: if the weight has zero or several outgoing
            edges."""

    edges = wall_out_edges(weight, ell)
    if len(edges) != 1:
        raise GeometryError("Weight {} has {} outgoing Gamma_wall edges "
                            "for ell={}, expected one".format(
                                weight, len(edges), ell))
    return next(iter(edges))


def walk(weight, direction, steps, ell):
    """Walks along Gamma_wall edges of one direction.

    Args:
        weight: Weight, starting vertex of Gamma_wall.
        direction: Direction.
        steps: int >= 0, number of edges to follow.
        ell: int >= 3.

    Returns:
        list of Weight, the visited vertices without the start."""

    path = []
    for _ in range(steps):
        if direction not in wall_out_edges(weight, ell):
            raise GeometryError("No Gamma_wall edge in direction {} at "
                                "{} for ell={}".format(direction.name,
                                                       weight, ell))
        weight = weight + direction.vector
        path.append(weight)
    return path
