"""The corrected wall dynamics: labelled points and their multisets,
the elementary moves, the iteration of seeds, the geometric merge rule,
the assembly of Y_k and Y, the Step-3 extension interface and the
invariant suite."""
from BilliardsA2.billiards.points import LabelledPoint
from BilliardsA2.billiards.points import Provenance
from BilliardsA2.billiards.multiset import PointMultiset
from BilliardsA2.billiards.moves import rest
from BilliardsA2.billiards.moves import small_step
from BilliardsA2.billiards.moves import giant_leap
from BilliardsA2.billiards.moves import iterate_seed
from BilliardsA2.billiards.merge import MergeEvent
from BilliardsA2.billiards.merge import merge_pass
from BilliardsA2.billiards.dynamics import DynamicsRun
from BilliardsA2.billiards.dynamics import seed_point
from BilliardsA2.billiards.dynamics import run_dynamics
from BilliardsA2.billiards.dynamics import run_seeds
from BilliardsA2.billiards.dynamics import assemble_Y
from BilliardsA2.billiards.dynamics import assemble_runs
from BilliardsA2.billiards.dynamics import shift_points
from BilliardsA2.billiards.dynamics import growth_profile
from BilliardsA2.billiards.base_strategy import Step3Strategy
from BilliardsA2.billiards.step3 import WallOnlyStrategy
from BilliardsA2.billiards.step3 import extend_step3
from BilliardsA2.billiards.step3 import remove_x_seeds
from BilliardsA2.billiards.invariants import check_invariants
import BilliardsA2.billiards.invariants
