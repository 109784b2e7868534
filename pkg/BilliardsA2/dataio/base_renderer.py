import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional


_COS30 = math.cos(math.pi / 6)
_SIN30 = 0.5
_SQRT3_2 = math.sqrt(3) / 2

MERGE_COLOURS = {'II': 'blue', 'III': 'red'}


@dataclass(frozen=True)
class Mark:
    """A text placed on the weight lattice.

    Args:
        a: float, w1 coordinate.
        b: float, w2 coordinate.
        text: string.
        underline: bool.
        colour: string or None.
        slot: int, position in the stack of texts at one place."""

    a: float
    b: float
    text: str
    underline: bool = False
    colour: Optional[str] = None
    slot: int = 0
    tex: Optional[str] = None


def project(a, b):
    """Maps lattice coordinates to the plane: w1 and w2 at 60 degrees,
    the whole lattice rotated by 30 degrees so that w2 points up."""

    x = a + b / 2
    y = b * _SQRT3_2
    return (x * _COS30 - y * _SIN30, x * _SIN30 + y * _COS30)


class Renderer(ABC):
    """Base class of the renderers of point multisets and pictures on the
    triangular lattice of weights.

    Args:
        ell: int or None, walls a, b, a + b in ell Z are drawn bold.
        show_seeds: bool, underline the labels of seeds.
        color_merges: bool, colour merged points (type III red, type II
            blue).

    Returns:
        object of the class Renderer."""

    def __init__(self, ell=None, show_seeds=True, color_merges=True):

        self.ell = ell
        self.show_seeds = show_seeds
        self.color_merges = color_merges

    def point_marks(self, points):
        """Returns the marks of the labels of a PointMultiset."""

        marks = []
        slots = {}
        for key in sorted(points.keys(), key=lambda key: (key[0], key[1])):
            point = points.point(key)
            slot = slots.get(point.weight, 0)
            slots[point.weight] = slot + 1
            colour = None
            if self.color_merges:
                colour = MERGE_COLOURS.get(point.provenance.merge)
            count = points.multiplicity(key)
            suffix = '' if count == 1 else ' x{}'.format(count)
            marks.append(Mark(
                point.weight.a, point.weight.b,
                '{}(v^{}){}'.format(point.label.n, point.label.k, suffix),
                self.show_seeds and point.seed, colour, slot,
                '{}(v^{{{}}}){}'.format(point.label.n, point.label.k,
                                         suffix)))
        return marks

    def picture_marks(self, picture):
        """Returns the marks of the entries of a Picture, placed at the
        centroids of the alcoves."""

        marks = []
        for alcove in picture.alcoves():
            A, B = alcove.centroid3()
            for slot, (i, f) in enumerate(picture.entries(alcove)):
                marks.append(Mark(A / 3, B / 3, '{}:{}'.format(i, f),
                                  slot=slot))
        return marks

    def frame_size(self, marks):
        size = max([int(math.ceil(mark.a + mark.b)) + 1 for mark in marks],
                   default=0)
        return max(size, self.ell or 5)

    def frame_lines(self, size):
        """Returns the lattice lines of the triangle a, b >= 0,
        a + b <= size as pairs of end points and a wall flag."""

        lines = []
        for c in range(size + 1):
            wall = bool(self.ell) and c % self.ell == 0
            lines.append(((c, 0), (c, size - c), wall))
            lines.append(((0, c), (size - c, c), wall))
            lines.append(((c, 0), (0, c), wall))
        return lines

    def render(self, marks):
        """Returns the document showing a list of marks on the lattice
        frame."""

        size = self.frame_size(marks)
        parts = [self.begin(size)]
        for start, end, wall in self.frame_lines(size):
            parts.append(self.line(project(*start), project(*end), wall))
        for mark in marks:
            parts.append(self.text(project(mark.a, mark.b), mark))
        parts.append(self.end())
        return ''.join(part for part in parts if part)

    @abstractmethod
    def begin(self, size):
        """Returns the opening of the document."""
        pass

    @abstractmethod
    def line(self, start, end, wall):
        """Returns a lattice line between two projected points."""
        pass

    @abstractmethod
    def text(self, position, mark):
        """Returns a label at a projected point."""
        pass

    @abstractmethod
    def end(self):
        """Returns the closing of the document."""
        pass
