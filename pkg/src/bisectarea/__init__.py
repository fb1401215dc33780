"""Triangles from their internal angle-bisector lengths.

Forward geometry, the inverse solver, the degree-10 polynomial satisfied
by 1/(2r), and exact certificates for irreducibility, Galois groups and
ruler-and-compass constructibility.
"""

from .exactmath import PolyQ, PolyModP, discriminant, is_square, parse_poly, resultant
from .galois import (
    constructibility_verdict,
    irreducible_over_Q,
    radical_solvability_report,
    symmetric_group_certificate,
)
from .inversesolver import SolverConfig, solve_from_bisectors
from .trianglecore import Triangle, bisectors, symmetric_invariants
from .wolff import WolffData, recover_bisectors, wolff_polynomial

__version__ = "0.1.0"
