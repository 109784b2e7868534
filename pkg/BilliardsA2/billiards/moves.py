"""Elementary moves of the billiards dynamics on Gamma_wall and the three
cases of one iteration of a seed."""
from BilliardsA2.errors import GeometryError
from BilliardsA2.geometry.weights import check_ell
from BilliardsA2.geometry.weights import in_wall_graph
from BilliardsA2.geometry.weights import is_corner
from BilliardsA2.geometry.weights import is_almost_corner
from BilliardsA2.geometry.weights import wall_out_edges
from BilliardsA2.geometry.weights import unique_out_edge
from BilliardsA2.geometry.weights import walk


def _check_wall_point(point, ell):
    if not in_wall_graph(point.weight, ell):
        raise ValueError("Point {} is not on Gamma_wall for "
                         "ell={}".format(point, ell))


def rest(point, seed=False, **provenance):
    """A rest: (mu, n(v^k)) -> (mu, (n + 3)(v^(k + 1))).

    Args:
        point: LabelledPoint.
        seed: bool, seed flag of the result.
        **provenance: fields of the provenance of the result besides
            op, which is 'rest'.

    Returns:
        LabelledPoint."""

    return point.evolve(label=point.label.shifted(3, 1), seed=seed,
                        op='rest', merge='none', target=None,
                        **provenance)


def small_step(point, ell, seed=False, **provenance):
    """A small step: (mu, n(v^k)) -> (mu', (n + 2)(v^k)) along the
    unique Gamma_wall edge mu -> mu'.

    Args:
        point: LabelledPoint, on Gamma_wall with exactly one outgoing
            edge.
        ell: int >= 3.
        seed: bool, seed flag of the result.
        **provenance: fields of the provenance of the result besides
            op, which is 'small'.

    Returns:
        LabelledPoint.

    Raises:
        GeometryError: if the weight has zero or several outgoing
            edges."""

    check_ell(ell)
    direction = unique_out_edge(point.weight, ell)
    return point.evolve(weight=point.weight + direction.vector,
                        label=point.label.shifted(2), seed=seed,
                        op='small', merge='none', target=None,
                        **provenance)


def leap_target(weight, ell):
    """Returns the corner a giant leap from a weight goes through and
    the number of steps to it.

    Args:
        weight: Weight, a vertex of Gamma_wall which is neither a corner
            nor an almost corner.
        ell: int >= 3.

    Returns:
        tuple (corner: Weight, direction: Direction, steps: int)."""

    direction = unique_out_edge(weight, ell)
    current = weight
    for steps in range(1, ell - 1):
        current = walk(current, direction, 1, ell)[0]
        if is_corner(current, ell):
            return current, direction, steps
    raise GeometryError("No corner within {} steps from {} in direction "
                        "{} for ell={}".format(ell - 2, weight,
                                               direction.name, ell))


def giant_leap(point, ell, **provenance):
    """A giant leap. The point walks j < ell - 1 steps along its
    direction d to a corner lambda and continues ell - 1 - j steps from
    lambda in every other available direction. Every endpoint gets the
    label (n + 2 ell + 1)(v^(k + 1)) and records lambda as its target.

    Args:
        point: LabelledPoint, on Gamma_wall, neither a corner nor an
            almost corner.
        ell: int >= 3.
        **provenance: further provenance fields of the results.

    Returns:
        list of LabelledPoint, one or two seeds."""

    check_ell(ell)
    _check_wall_point(point, ell)
    if is_corner(point.weight, ell) or is_almost_corner(point.weight, ell):
        raise ValueError("Giant leap from the corner or almost corner "
                         "{}".format(point.weight))
    corner, direction, steps = leap_target(point.weight, ell)
    label = point.label.shifted(2 * ell + 1, 1)
    results = []
    for other in sorted(wall_out_edges(corner, ell) - {direction}):
        end = walk(corner, other, ell - 1 - steps, ell)[-1]
        results.append(point.evolve(weight=end, label=label, seed=True,
                                    op='leap', merge='none', target=corner,
                                    **provenance))
    if not results:
        raise GeometryError("Giant leap from {} through {} has no "
                            "continuation".format(point.weight, corner))
    return results


def iterate_seed(point, ell, iteration=0, seed_index=None):
    """One iteration of a seed.

    A corner rests once: ell - 1 chained small steps followed by a
    rest. An almost corner rests twice: a rest, ell - 2 chained small
    steps and a rest. In both cases only the final rest is a seed. Any
    other point makes a giant leap whose endpoints are all seeds.

    Args:
        point: LabelledPoint, a seed on Gamma_wall.
        ell: int >= 3.
        iteration: int, index of the produced round.
        seed_index: int or None, index k of the run.

    Returns:
        list of LabelledPoint in the order of production."""

    check_ell(ell)
    _check_wall_point(point, ell)
    provenance = dict(iteration=iteration, seed_index=seed_index,
                      parents=(point.key,))
    if is_corner(point.weight, ell):
        routine = 'resting-once'
        chain = []
        current = point
        for _ in range(ell - 1):
            current = small_step(current, ell, routine=routine, **provenance)
            chain.append(current)
        chain.append(rest(current, seed=True, routine=routine, **provenance))
        return chain
    if is_almost_corner(point.weight, ell):
        routine = 'resting-twice'
        current = rest(point, routine=routine, **provenance)
        chain = [current]
        for _ in range(ell - 2):
            current = small_step(current, ell, routine=routine, **provenance)
            chain.append(current)
        chain.append(rest(current, seed=True, routine=routine, **provenance))
        return chain
    return giant_leap(point, ell, routine='giant-leap', **provenance)
