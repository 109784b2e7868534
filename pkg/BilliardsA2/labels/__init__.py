"""Exact label and Laurent polynomial arithmetic: labels n(v^k), the
symmetrization map phi and the truncation to non-negative powers."""
from BilliardsA2.labels.label import Label
from BilliardsA2.labels.laurent import LaurentPolynomial
from BilliardsA2.labels.laurent import phi
from BilliardsA2.labels.laurent import truncate_nonneg
