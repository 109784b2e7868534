"""Weight lattice and alcove geometry of type A2: coroot pairings, the
graphs Gamma, Gamma_l and Gamma_wall, corner points, alcoves and boxes,
descent sets, the sequence x_i, the elements x_mu^s and the p-dilated
dot action."""
from BilliardsA2.geometry.weights import Weight
from BilliardsA2.geometry.weights import Direction
from BilliardsA2.geometry.weights import pairing
from BilliardsA2.geometry.weights import is_dominant
from BilliardsA2.geometry.weights import is_strictly_dominant
from BilliardsA2.geometry.weights import is_corner
from BilliardsA2.geometry.weights import is_almost_corner
from BilliardsA2.geometry.weights import in_gamma
from BilliardsA2.geometry.weights import in_gamma_ell
from BilliardsA2.geometry.weights import in_wall_graph
from BilliardsA2.geometry.weights import gamma_ell_out_edges
from BilliardsA2.geometry.weights import wall_out_edges
from BilliardsA2.geometry.alcoves import Alcove
from BilliardsA2.geometry.alcoves import AffineElement
from BilliardsA2.geometry.alcoves import from_word
from BilliardsA2.geometry.alcoves import element_of
from BilliardsA2.geometry.alcoves import alcove_of_word
from BilliardsA2.geometry.alcoves import right_descents
from BilliardsA2.geometry.alcoves import left_descents
from BilliardsA2.geometry.alcoves import x_sequence
from BilliardsA2.geometry.alcoves import box_alcoves
from BilliardsA2.geometry.alcoves import x_mu_s
from BilliardsA2.geometry.alcoves import dot_p
from BilliardsA2.geometry.convert import alcove_to_address
from BilliardsA2.geometry.convert import address_to_alcove
import BilliardsA2.geometry.weights
import BilliardsA2.geometry.alcoves
