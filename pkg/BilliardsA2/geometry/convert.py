import re
from BilliardsA2.geometry.weights import Weight
from BilliardsA2.geometry.alcoves import Alcove


_ADDRESS = re.compile(r'box\s+(-?\d+)\s+(-?\d+)\s+([LU])')


def alcove_to_address(alcove):
    """Returns the text address 'box <a> <b> <L|U>' of an alcove."""

    return alcove.address()


def address_to_alcove(text):
    """Parses a text address 'box <a> <b> <L|U>'.

    Args:
        text: string, the address; surrounding and repeated whitespace
            is ignored.

    Returns:
        Alcove.

    Raises:
        ValueError: if the text is not an address of a dominant
            alcove."""

    match = _ADDRESS.fullmatch(text.strip())
    if match is None:
        raise ValueError("Malformed alcove address {!r}".format(text))
    alcove = Alcove(Weight(int(match.group(1)), int(match.group(2))),
                    match.group(3))
    if not alcove.is_dominant():
        raise ValueError("Alcove address {!r} is not dominant".format(text))
    return alcove
