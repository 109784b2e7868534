import xml.etree.ElementTree as ET
from BilliardsA2.dataio import base_renderer
from BilliardsA2.dataio.base_renderer import project
from BilliardsA2.dataio.picture import Picture


list_of_formats = ['svg', 'tikz']


def _num(value):
    text = '{:.2f}'.format(value)
    return '0.00' if text == '-0.00' else text


class SvgRenderer(base_renderer.Renderer):
    """Renders marks as a standalone SVG document.

    Args:
        unit: float, length of a fundamental weight in pixels.
        Other arguments as for Renderer."""

    def __init__(self, ell=None, show_seeds=True, color_merges=True,
                 unit=40):

        super(SvgRenderer, self).__init__(ell, show_seeds, color_merges)
        self.unit = unit
        self._root = None
        self._frame = None
        self._labels = None
        self._height = 0

    def _xy(self, position):
        x, y = position
        return (x * self.unit + self.unit, self._height - y * self.unit)

    def begin(self, size):
        right, top = project(size, 0)[0], project(0, size)[1]
        width = (right + 4) * self.unit
        self._height = (top + 2) * self.unit
        self._root = ET.Element('svg', xmlns='http://www.w3.org/2000/svg',
                                version='1.1',
                                width='{}px'.format(_num(width)),
                                height='{}px'.format(_num(self._height)),
                                viewBox='0 0 {} {}'.format(
                                    _num(width), _num(self._height)))
        self._frame = ET.SubElement(self._root, 'g', stroke='#999999',
                                    fill='none')
        self._labels = ET.SubElement(self._root, 'g',
                                     attrib={'font-family': 'serif',
                                             'font-size': '9'})
        return None

    def line(self, start, end, wall):
        (x1, y1), (x2, y2) = self._xy(start), self._xy(end)
        attributes = {'d': 'M{} {}L{} {}'.format(_num(x1), _num(y1),
                                                 _num(x2), _num(y2))}
        attributes['stroke-width'] = '1.5' if wall else '0.3'
        ET.SubElement(self._frame, 'path', attrib=attributes)
        return None

    def text(self, position, mark):
        x, y = self._xy(position)
        attributes = {'x': _num(x + 2), 'y': _num(y - 2 - 10 * mark.slot)}
        if mark.underline:
            attributes['text-decoration'] = 'underline'
        if mark.colour:
            attributes['fill'] = mark.colour
        ET.SubElement(self._labels, 'circle', cx=_num(x), cy=_num(y),
                      r='1.5')
        element = ET.SubElement(self._labels, 'text', attrib=attributes)
        element.text = mark.text
        return None

    def end(self):
        document = ET.tostring(self._root, encoding='unicode')
        self._root = None
        return document + '\n'


class TikzRenderer(base_renderer.Renderer):
    """Renders marks as a tikzpicture environment."""

    def begin(self, size):
        return '\\begin{tikzpicture}[scale=0.75]\n'

    def line(self, start, end, wall):
        style = 'thick' if wall else 'very thin, gray'
        return '\\draw[{}] ({},{}) -- ({},{});\n'.format(
            style, _num(start[0]), _num(start[1]), _num(end[0]),
            _num(end[1]))

    def text(self, position, mark):
        body = mark.tex or mark.text
        body = '\\underline{{{}}}'.format(body) if mark.underline else body
        options = 'font=\\tiny, anchor=south west'
        if mark.colour:
            options += ', text={}'.format(mark.colour)
        return '\\node[{}] at ({},{}) {{${}$}};\n'.format(
            options, _num(position[0]), _num(position[1] + 0.3 * mark.slot),
            body)

    def end(self):
        return '\\end{tikzpicture}\n'


renderers = {'svg': SvgRenderer, 'tikz': TikzRenderer}


def render(items, format='svg', ell=None, show_seeds=True,
           color_merges=True):
    """Draws a point multiset or a picture on the weight lattice.

    Args:
        items: PointMultiset or Picture.
        format: string, 'svg' or 'tikz'.
        ell: int or None, the walls in ell Z are drawn bold.
        show_seeds: bool, underline seeds.
        color_merges: bool, colour merged points.

    Returns:
        string, the document."""

    if format not in list_of_formats:
        raise ValueError("Incorrect format")
    renderer = renderers[format](ell, show_seeds, color_merges)
    if isinstance(items, Picture):
        marks = renderer.picture_marks(items)
    else:
        marks = renderer.point_marks(items)
    return renderer.render(marks)
