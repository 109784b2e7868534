from abc import ABC, abstractmethod


class Step3Strategy(ABC):
    """Base class of the extensions of the wall data Y into the
    interiors of the ell-alcoves.

    Args:
        name: string, name of the strategy in the registry.
        partial: bool, whether the extension is known to be incomplete.

    Returns:
        object of the class Step3Strategy."""

    def __init__(self, name, partial):

        self.name = name
        self.partial = partial

    @abstractmethod
    def extend(self, points, ell):
        """Returns the extension Z of the wall data.

        Args:
            points: PointMultiset, the multiset Y.
            ell: int >= 3.

        Returns:
            PointMultiset containing points as a sub-multiset."""
        pass
