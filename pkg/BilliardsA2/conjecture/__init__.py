"""Predicted second generation elements zeta_i in Kazhdan-Lusztig
coordinates and the generation stabilization predicate."""
from BilliardsA2.conjecture.klcomb import KLCombination
from BilliardsA2.conjecture.zeta import zeta
from BilliardsA2.conjecture.zeta import predict
from BilliardsA2.conjecture.zeta import contributions
from BilliardsA2.conjecture.generations import stabilized
from BilliardsA2.conjecture.generations import stable_generation
from BilliardsA2.conjecture.generations import exact_window
from BilliardsA2.conjecture.export import export_prediction
