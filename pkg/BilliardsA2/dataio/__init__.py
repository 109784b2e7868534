"""Interchange of p-Kazhdan-Lusztig data, the preparation of pictures
(truncation, combined pictures, triple collapsing), the SL2 generation
fixture and the third generation heuristic, comparison reports, point
multiset exports and rendering."""
from BilliardsA2.dataio.pkl import PKLDataset
from BilliardsA2.dataio.pkl import parse_pkl
from BilliardsA2.dataio.pkl import write_pkl
from BilliardsA2.dataio.picture import Picture
from BilliardsA2.dataio.picture import combined_picture
from BilliardsA2.dataio.picture import collapse_triples
from BilliardsA2.dataio.sl2 import SL2Fixture
from BilliardsA2.dataio.sl2 import P3_FIXTURE
from BilliardsA2.dataio.sl2 import sl2_support
from BilliardsA2.dataio.sl2 import alternating_word
from BilliardsA2.dataio.heuristic import heuristic_filter
from BilliardsA2.dataio.heuristic import LeviRestriction
from BilliardsA2.dataio.diff import diff_report
from BilliardsA2.dataio.base_renderer import Renderer
from BilliardsA2.dataio.render import SvgRenderer
from BilliardsA2.dataio.render import TikzRenderer
from BilliardsA2.dataio.render import render
import BilliardsA2.dataio.multiset_io
