import re
from dataclasses import dataclass


_LABEL = re.compile(r'(\d+)\(v\^\{?(-?\d+)\}?\)')


@dataclass(frozen=True, order=True)
class Label:
    """A label n(v^k) of a labelled point.

    Args:
        n: int >= 0.
        k: int, exponent of v."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Label value must be non-negative")

    def shifted(self, dn, dk=0):
        """Returns the label (n + dn)(v^(k + dk))."""
        return Label(self.n + dn, self.k + dk)

    def __str__(self):
        return '{}(v^{})'.format(self.n, self.k)

    @classmethod
    def parse(cls, text):
        """Parses a label written as 'n(v^k)' (TeX braces around k are
        accepted)."""

        match = _LABEL.fullmatch(text.strip())
        if match is None:
            raise ValueError("Malformed label {!r}".format(text))
        return cls(int(match.group(1)), int(match.group(2)))
