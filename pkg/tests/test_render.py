import pytest
import xml.etree.ElementTree as ET
from BilliardsA2 import dataio
from BilliardsA2.billiards.dynamics import run_dynamics
from BilliardsA2.dataio.base_renderer import project
from BilliardsA2.dataio.render import TikzRenderer
from BilliardsA2.dataio.pkl import parse_pkl_text


@pytest.fixture(scope='module')
def points():
    return run_dynamics(1, 5, 7).points


@pytest.fixture(params=['svg', 'tikz'])
def format(request):
    return request.param


def test_render_is_stable(points, format):
    first = dataio.render(points, format, 5)
    assert first == dataio.render(points.copy(), format, 5)
    assert first.endswith('\n')


def test_svg_document(points):
    document = dataio.render(points, 'svg', 5)
    root = ET.fromstring(document)
    assert root.tag.endswith('svg')
    texts = [element.text for element in root.iter()
             if element.tag.endswith('text')]
    assert len(texts) == len(points)
    assert '21(v^1)' in texts and '88(v^8)' in texts
    assert 'text-decoration="underline"' in document
    assert 'fill="blue"' in document


def test_svg_flags(points):
    document = dataio.render(points, 'svg', 5, show_seeds=False,
                             color_merges=False)
    assert 'underline' not in document
    assert 'fill="blue"' not in document


def test_tikz_document(points):
    document = dataio.render(points, 'tikz', 5)
    assert document.startswith('\\begin{tikzpicture}')
    assert document.endswith('\\end{tikzpicture}\n')
    assert '\\underline{21(v^{1})}' in document
    assert 'text=blue' in document
    assert '$18(v^{0})$' in document


def test_picture_rendering(format):
    dataset = parse_pkl_text('p 3\nx 4 : box 1 1 L : v^-1+v\n'
                             'x 4 : box 0 2 L : 1\n')
    picture = dataio.combined_picture(dataset)
    document = dataio.render(picture, format, 3)
    assert '4:v' in document
    assert '4:1' in document


def test_frame_lines():
    renderer = TikzRenderer(ell=3)
    lines = renderer.frame_lines(3)
    assert len(lines) == 12
    assert sum(1 for _, _, wall in lines if wall) == 6
    assert renderer.frame_size([]) == 3
    assert TikzRenderer().frame_size([]) == 5


def test_projection():
    x, y = project(0, 1)
    assert abs(x) < 1e-12
    assert abs(y - 1) < 1e-12


def test_incorrect_render_format(points):
    with pytest.raises(ValueError):
        dataio.render(points, 'png', 5)
