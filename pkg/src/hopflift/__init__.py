"""Exact Hopf algebra structure constants over F_q and Galois rings.

Subpackages mirror the pipeline: coeffring (exact ring arithmetic and
solvers), tensorcalc (dense multilinear maps), hopfcore (presentations,
doubles, structural analyses), cohomology (the bialgebra bicomplex),
lifting (deformation lifting to GR(p^n, m)), arithcheck (cyclotomic
nonvanishing), cli (batch front end).
"""

from .coeffring import (
    LinearSolution,
    RingDescriptor,
    RingElement,
    arith,
    digit_lift,
    exact_div_p,
    hensel_solve,
    invert,
    make_ring,
    solve_field,
)

__all__ = [
    "LinearSolution",
    "RingDescriptor",
    "RingElement",
    "arith",
    "digit_lift",
    "exact_div_p",
    "hensel_solve",
    "invert",
    "make_ring",
    "solve_field",
]

__version__ = "0.1.0"
