from BilliardsA2.geometry.weights import RHO, ZERO, pairing
from BilliardsA2.geometry.alcoves import dot_p


def exact_window(p):
    """Returns 2 p (p + 1); the second generation prediction is claimed
    to be exact for the indices i below it."""
    return 2 * p * (p + 1)


def level(x, p):
    """Returns the pairing of x ._p 0 + rho with the highest short
    coroot."""

    return pairing(dot_p(x, ZERO, p) + RHO, 'theta')


def stabilized(x, p, n):
    """Checks whether the n-th generation element of x already equals
    the p-Kazhdan-Lusztig basis element, i.e. whether
    <theta, x ._p 0 + rho> <= p^(n + 1).

    Args:
        x: AffineElement.
        p: int >= 2.
        n: int >= 0, generation index.

    Returns:
        bool."""

    if n < 0:
        raise ValueError("Generation index must be non-negative")
    return level(x, p) <= p ** (n + 1)


def stable_generation(x, p):
    """Returns the least generation index n >= 1 from which on x is
    stabilized."""

    n = 1
    value = level(x, p)
    while value > p ** (n + 1):
        n += 1
    return n
