"""Exact integer powers of the loop-chain graph's adjacency matrix."""
from .closedpower import PowerBlock, det_closed, entry_closed, matrix_power_closed, power_block
from .exactnum import QuadRat, alpha, beta
from .exmatrix import ExactMatrix, IntPolynomial, char_poly, mat_det, mat_inverse, mat_mul, mat_pow
from .fib import binet_exact, fib_pair
from .graphfam import LoopChainGraph, WalkQuery, build_adjacency, count_walks
from .spectral import JordanDecomposition, jordan_form, transform_inverse, transform_matrix, verify_similarity

__version__ = "0.1.0"
