from typing import NamedTuple
from BilliardsA2.errors import GeometryError
from BilliardsA2.labels.label import Label
from BilliardsA2.billiards import base_strategy
from BilliardsA2.billiards.multiset import PointMultiset


class WallOnlyStrategy(base_strategy.Step3Strategy):
    """Extension adding nothing to the wall data. The interior labels are
    not generated, hence the result is marked partial."""

    def __init__(self):

        super(WallOnlyStrategy, self).__init__('wall-only', True)

    def extend(self, points, ell):
        return points.copy()


strategies = {'wall-only': WallOnlyStrategy}
list_of_strategies = list(strategies)


class Step3Result(NamedTuple):
    """Extension Z of Y and the completeness flag of the strategy."""

    points: PointMultiset
    partial: bool


def get_strategy(strategy):
    """Returns a strategy instance from a registry name or an
    instance."""

    if isinstance(strategy, base_strategy.Step3Strategy):
        return strategy
    if strategy not in strategies:
        raise ValueError("Incorrect strategy")
    return strategies[strategy]()


def extend_step3(points, ell, strategy='wall-only'):
    """Extends Y into the interiors of the ell-alcoves.

    Args:
        points: PointMultiset, the multiset Y.
        ell: int >= 3.
        strategy: string (registry name) or Step3Strategy.

    Returns:
        Step3Result.

    Raises:
        GeometryError: if the strategy drops points of Y."""

    strategy = get_strategy(strategy)
    extended = strategy.extend(points, ell)
    for key, count in points.items():
        if extended.multiplicity(key) < count:
            raise GeometryError("Strategy {} drops the point {}".format(
                strategy.name, key))
    return Step3Result(extended, strategy.partial)


def is_x_seed(key, ell):
    """Checks whether a key is a seed (k ell w1, 2 k ell (v^0)) of X."""

    weight, label = key
    k, rest = divmod(weight.a, ell)
    return (rest == 0 and k >= 1 and weight.b == 0
            and label == Label(2 * k * ell, 0))


def remove_x_seeds(points, ell):
    """Returns Z~ = Z minus the seeds of X."""

    return points.filter(lambda key: not is_x_seed(key, ell))
