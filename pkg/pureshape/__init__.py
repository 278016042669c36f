# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""
Pure Field Integral Basis Shapes (module pureshape)

Description
-----------
The pureshape module computes and verifies the shape of the integral basis of a pure number field K = Q(theta) with
theta^n = a. Under Hypothesis H (a is n-th-power-free and, at each prime p dividing n, v_p(a) is zero or not divisible
by p) the ring of integers has a basis {1, (theta^m + beta_m) / D_m}, and the p-parts of the denominators D_m are
controlled by a single invariant per prime, d_p(a) = min(r_p(a), e_p) with r_p(a) = v_p(a^(p-1) - 1) - 1. As a result
the whole shape only depends on a modulo M(n) = prod p^(e_p + 1), and can be read off a finite lookup table.

The package builds those tables, checks empirically that M(n) is both a period and the smallest one, and provides the
supporting computations: an order-1 Newton polygon oracle for x^n - a, local discriminant valuations and their jumps,
exact sieved counts of n-th-power-free integers in arithmetic progressions next to their asymptotic main terms, shape
class densities, and the distribution of r_p over units.

Everything is exact integer arithmetic; floating point only appears when densities and main terms are evaluated.
Every operation is also exposed on the command line through the 'pureshape' console script, which prints
line-delimited JSON so results can be compared against golden files. The 'demos' folder of the project contains a
sieve convergence demonstration with optional plotting.

Core Interface
---------
global_shape - Compute the per-prime denominator exponents (and known beta corrections) of a radicand
basis_description - Render the integral basis elements (theta^m + beta_m) / D_m
build_table - Build the lookup table of shapes over residues modulo M(n)
verify_period / find_sharpness_witness / verify_minimality - Check the period M(n), its sharpness and minimality
newton_polygon / is_p_regular_order1 - Order-1 Newton polygon analysis of x^n - a at a prime
disc_report - The p-adic valuation of the discriminant
count_exact / main_term / density_shape_classes - Counting n-th-power-free radicands and shape class densities
"""

# This value determines the project version for PyPi as well
__version__ = '0.1.0'

from . import models
from . import math
from . import cookbook
from .models import *
from .cookbook import *
from .shape import *
from .newton import *
from .disc import *
from .count import *
from .table import *
from . import shape, newton, disc, count, table

__all__ = ['models', 'math', 'cookbook']
__all__ += shape.__all__
__all__ += newton.__all__
__all__ += disc.__all__
__all__ += count.__all__
__all__ += table.__all__
__all__ += models.__all__
__all__ += cookbook.__all__
