from dataclasses import dataclass
from typing import Optional, Tuple
from BilliardsA2.geometry.weights import check_ell
from BilliardsA2.billiards.merge import list_of_modes
from BilliardsA2.billiards.step3 import list_of_strategies
from BilliardsA2.dataio.heuristic import list_of_restrictions


list_of_formats = ['json', 'tsv', 'svg', 'tikz']


@dataclass(frozen=True)
class RunConfig:
    """Parameters of one command line run.

    Args:
        ell: int >= 3, also the characteristic p of predictions.
        seeds: tuple of int >= 1, seed indices k.
        iterations: int >= 1, number N of rounds.
        mode: string, 'corrected' or 'legacy'.
        strategy: string, name of the Step-3 strategy.
        format: string, output format.
        output: string or None, output path (None for stdout).
        jobs: int >= 1, number of worker processes.
        i_max: int or None, bound on indices or labels.
        restriction: string or None, heuristic restriction rule; None
            disables the heuristic filter."""

    ell: int
    seeds: Tuple[int, ...]
    iterations: int
    mode: str = 'corrected'
    strategy: str = 'wall-only'
    format: str = 'json'
    output: Optional[str] = None
    jobs: int = 1
    i_max: Optional[int] = None
    restriction: Optional[str] = None

    def __post_init__(self):
        check_ell(self.ell)
        if not self.seeds:
            raise ValueError("At least one seed index is needed")
        if any(k < 1 for k in self.seeds):
            raise ValueError("Seed indices must be positive")
        if self.iterations < 1:
            raise ValueError("Number of iterations must be positive")
        if self.mode not in list_of_modes:
            raise ValueError("Incorrect mode")
        if self.strategy not in list_of_strategies:
            raise ValueError("Incorrect strategy")
        if self.format not in list_of_formats:
            raise ValueError("Incorrect format")
        if self.jobs < 1:
            raise ValueError("Number of jobs must be positive")
        if self.i_max is not None and self.i_max < 0:
            raise ValueError("i_max must be non-negative")
        if (self.restriction is not None
                and self.restriction not in list_of_restrictions):
            raise ValueError("Incorrect restriction")
