"""Lorentz and SOS group laws, their Kummer maps, and the reduction of those
maps to Artin-Schreier over Z[zeta_p]."""

from .exact import CycloNum, FpElem, Rational, compute_unit_w, cyclo_make, h_valuation, reduce_mod_h
from .grouplaws import (
    GroupLaw,
    UndefinedComposition,
    check_axioms,
    closed_formula,
    compose_points,
    lorentz_law,
    nfold_compose,
    sos_law,
)
from .matrices import Mat2, MinkowskiForm, conjugate_to_diagonal, mat_A, minkowski_dot, verify_cocycle_identities
from .morphisms import Morphism, alpha, beta_inv, beta_squared, kummer_phi, kummer_psi
from .cyclotomic import SpecializationReport, artin_schreier, specialize_phi, specialize_psi, verify_ramification
from .relativity import Boost, Velocity, add_velocity, beta_real, boost_matrix, galilean_limit_probe, rapidity
from .report import Check, Report
from .symbolic import MultiPoly, RatFunc, elementary_symmetric, ratfunc_eq, substitute

__version__ = "0.1.0"
