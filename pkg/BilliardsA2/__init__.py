"""The package simulates the corrected billiards dynamics on the dominant
weights of SL3, assembles the predicted second generation elements of
the p-canonical basis of the anti-spherical module and compares them
with computed data."""
from BilliardsA2 import geometry
from BilliardsA2 import labels
from BilliardsA2 import billiards
from BilliardsA2 import conjecture
from BilliardsA2 import dataio
