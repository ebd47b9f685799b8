"""Exact arithmetic: rationals, F_p, quadratic extensions, square classes, cyclotomics."""

from fractions import Fraction

from .fields import (
    AlgClosedSymbolic,
    CountingOnly,
    DomainError,
    Field,
    FiniteField,
    NoSuchRoot,
    PrimeFieldElem,
    QuadExtElem,
    Rationals,
    RealsSymbolic,
    SquareClass,
    field_size,
    least_nonresidue,
    mult_order,
    root_of_unity,
    split_square_class,
    square_class,
)
from .numtheory import divisors, euler_phi, factorize, is_prime, squarefree_part
from .poly import IntPolynomial, cyclotomic_poly, real_cyclotomic_minpoly

BigRational = Fraction

__all__ = [
    "AlgClosedSymbolic", "BigRational", "CountingOnly", "DomainError", "Field",
    "FiniteField", "Fraction", "IntPolynomial", "NoSuchRoot", "PrimeFieldElem",
    "QuadExtElem", "Rationals", "RealsSymbolic", "SquareClass", "cyclotomic_poly",
    "divisors", "euler_phi", "factorize", "field_size", "is_prime",
    "least_nonresidue", "mult_order", "real_cyclotomic_minpoly", "root_of_unity",
    "split_square_class", "square_class", "squarefree_part",
]
