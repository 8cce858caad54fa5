"""Exact BC_n Jack polynomials, Littlewood-Richardson branching for GL(m+n)
spherical pairs, and radial-part checks for Calogero-Moser operators."""

from .laurent import LaurentPoly, NonExactDivision
from .rootdata import MultiplicityVector, half_multiplicities, lower_cone, orbit_sum, rho_vector

__all__ = [
    "LaurentPoly",
    "NonExactDivision",
    "MultiplicityVector",
    "half_multiplicities",
    "lower_cone",
    "orbit_sum",
    "rho_vector",
]
