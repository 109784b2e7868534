import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, NamedTuple
from BilliardsA2.geometry.weights import Weight, check_ell
from BilliardsA2.labels.label import Label
from BilliardsA2.billiards.points import LabelledPoint, Provenance
from BilliardsA2.billiards.multiset import PointMultiset
from BilliardsA2.billiards.moves import iterate_seed
from BilliardsA2.billiards.merge import merge_pass, check_mode


logger = logging.getLogger(__name__)


class DynamicsRun(NamedTuple):
    """Result of the dynamics started at one seed of X.

    Attributes:
        points: PointMultiset, Y_k, the union of the rounds Q_1 ... Q_N.
        events: list of MergeEvent, in the order of the rounds.
        trace: list of PointMultiset, the rounds Q_1 ... Q_N."""

    points: PointMultiset
    events: List
    trace: List


def seed_point(k, ell):
    """Returns the seed q_k = (k ell w1, 2 k ell (v^0)) of X."""

    check_ell(ell)
    if k < 1:
        raise ValueError("Seed index must be positive")
    return LabelledPoint(Weight(k * ell, 0), Label(2 * k * ell, 0), True,
                         Provenance(seed_index=k))


def _check_iterations(iterations):
    if iterations < 1:
        raise ValueError("Number of iterations must be positive")


def run_dynamics(k, ell, iterations, mode='corrected'):
    """Runs the corrected (or legacy) wall dynamics from the seed q_k.

    Round i iterates every seed of Q_(i-1) once, with the multiplicity
    of the seed, and applies the merge rule to the outputs.

    Args:
        k: int >= 1, index of the seed of X.
        ell: int >= 3.
        iterations: int >= 1, the number N of rounds.
        mode: string, 'corrected' or 'legacy'.

    Returns:
        DynamicsRun."""

    check_mode(mode)
    _check_iterations(iterations)
    current = PointMultiset([seed_point(k, ell)])
    points = PointMultiset()
    events = []
    trace = []
    for i in range(1, iterations + 1):
        outputs = PointMultiset()
        seeds = current.seeds()
        for seed, copies in seeds:
            for point in iterate_seed(seed, ell, iteration=i, seed_index=k):
                outputs.add(point, copies)
        current, merges = merge_pass(outputs, mode, iteration=i)
        logger.debug("Y_%d round %d: %d seeds, %d points, %d merges", k, i,
                     len(seeds), len(current), len(merges))
        trace.append(current)
        points.update(current)
        events.extend(merges)
    logger.info("Y_%d for ell=%d: %d points after %d rounds", k, ell,
                len(points), iterations)
    return DynamicsRun(points, events, trace)


def _run_job(args):
    return run_dynamics(*args)


def run_seeds(ell, seeds, iterations, mode='corrected', jobs=1):
    """Runs the dynamics for several seeds of X, possibly in worker
    processes.

    Args:
        ell: int >= 3.
        seeds: iterable of int >= 1, seed indices k.
        iterations: int >= 1.
        mode: string, 'corrected' or 'legacy'.
        jobs: int >= 1, number of worker processes.

    Returns:
        dict k -> DynamicsRun ordered by k."""

    check_ell(ell)
    check_mode(mode)
    _check_iterations(iterations)
    if jobs < 1:
        raise ValueError("Number of jobs must be positive")
    seeds = sorted(set(seeds))
    if any(k < 1 for k in seeds):
        raise ValueError("Seed index must be positive")
    jobs_args = [(k, ell, iterations, mode) for k in seeds]
    if jobs == 1 or len(seeds) < 2:
        runs = [_run_job(args) for args in jobs_args]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            runs = list(executor.map(_run_job, jobs_args))
    return dict(zip(seeds, runs))


def assemble_runs(ell, runs):
    """Returns the union of the seeds of X and the runs Y_k, in the
    order of k."""

    result = PointMultiset()
    for k in sorted(runs):
        result.add(seed_point(k, ell))
        result.update(runs[k].points)
    return result


def assemble_Y(ell, k_max, iterations, mode='corrected', jobs=1):
    """Returns the truncation of Y = X u Y_1 u Y_2 u ... to the seeds
    k <= k_max and N rounds.

    Args:
        ell: int >= 3.
        k_max: int >= 0.
        iterations: int >= 1.
        mode: string, 'corrected' or 'legacy'.
        jobs: int >= 1, number of worker processes.

    Returns:
        PointMultiset."""

    runs = run_seeds(ell, range(1, k_max + 1), iterations, mode, jobs)
    return assemble_runs(ell, runs)


def shift_points(points, shift, ell):
    """Self-similarity map (mu, n(v^i)) -> (mu + shift ell w1,
    (n + 2 shift ell)(v^i)) applied to a multiset.

    Args:
        points: PointMultiset.
        shift: int >= 0.
        ell: int >= 3.

    Returns:
        PointMultiset."""

    offset = Weight(shift * ell, 0)

    def image(point):
        parents = tuple((weight + offset, label.shifted(2 * shift * ell))
                        for weight, label in point.provenance.parents)
        target = point.provenance.target
        return point.evolve(weight=point.weight + offset,
                            label=point.label.shifted(2 * shift * ell),
                            parents=parents,
                            target=None if target is None else target + offset)

    return points.map_points(image)


def growth_profile(trace):
    """Returns, per round, the pair (number of distinct points, largest
    multiplicity)."""

    return [(len(round_points), round_points.max_multiplicity())
            for round_points in trace]
