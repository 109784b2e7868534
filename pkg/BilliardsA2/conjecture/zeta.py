import logging
from concurrent.futures import ProcessPoolExecutor
from BilliardsA2.errors import GeometryError
from BilliardsA2.geometry.weights import is_strictly_dominant
from BilliardsA2.geometry.alcoves import x_sequence, x_mu_s, unique_descent
from BilliardsA2.labels.laurent import LaurentPolynomial, phi
from BilliardsA2.conjecture.klcomb import KLCombination


logger = logging.getLogger(__name__)


def contributions(i, z_tilde):
    """Returns the pairs (key, multiplicity) of the labelled points
    (mu, n(v^k)) of Z~ with n in {i, i - 1, i - 2}."""

    window = (i - 2, i - 1, i)
    return [(key, count) for key, count in z_tilde.items()
            if key[1].n in window]


def zeta(i, z_tilde, p):
    """Returns the predicted second generation element zeta_i in
    Kazhdan-Lusztig coordinates:

        zeta_0 = b_(x_0),
        zeta_i = b_(x_i) + sum phi(v^k) b_(x_mu^s),

    the sum running over (mu, n(v^k)) in Z~ with n in {i, i - 1, i - 2}
    and s the unique right descent of x_i.

    Args:
        i: int >= 0.
        z_tilde: PointMultiset, Z~ computed with ell = p.
        p: int >= 2.

    Returns:
        KLCombination."""

    if p < 2:
        raise ValueError("Incorrect p")
    x = x_sequence(i)
    terms = [(x.alcove, LaurentPolynomial.constant(1))]
    if i == 0:
        return KLCombination(terms)
    s = unique_descent(x)
    for (weight, label), count in contributions(i, z_tilde):
        if not is_strictly_dominant(weight):
            raise GeometryError("Contributing weight {} is not strictly "
                                "dominant".format(weight))
        coefficient = phi(LaurentPolynomial.monomial(label.k)) * count
        terms.append((x_mu_s(weight, s).alcove, coefficient))
    return KLCombination(terms)


def _zeta_job(args):
    return zeta(*args)


def predict(i_max, z_tilde, p, jobs=1):
    """Returns zeta_0, ..., zeta_(i_max).

    Args:
        i_max: int >= 0.
        z_tilde: PointMultiset.
        p: int >= 2.
        jobs: int >= 1, number of worker processes.

    Returns:
        dict i -> KLCombination ordered by i."""

    if i_max < 0:
        raise ValueError("i_max must be non-negative")
    indices = range(i_max + 1)
    if jobs == 1:
        values = [zeta(i, z_tilde, p) for i in indices]
    else:
        args = [(i, z_tilde, p) for i in indices]
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            values = list(executor.map(_zeta_job, args,
                                       chunksize=max(1, len(args) // jobs)))
    logger.debug("Predicted zeta_0 ... zeta_%d for p=%d", i_max, p)
    return dict(zip(indices, values))
