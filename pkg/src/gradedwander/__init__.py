"""Minimal homogeneous generators, graded Betti numbers, free resolutions and
Koszul homology for graded polynomial modules, in exact rational arithmetic."""

from .exactla import RatMatrix, in_span, kernel_basis, rank, rref
from .expr import ParseError, format_polynomial, format_vector, parse_expression
from .gradedmod import (FreeModuleSpec, HomogeneityError, ModuleVector, PresentedModule,
                        hilbert_function, slice_basis, times_maximal_ideal_slice,
                        vector_degree)
from .innerprod import (DA_KERNEL, HARDY_KERNEL, InnerKernel, gram_schmidt,
                        inner_product, monomial_weight)
from .koszul import (euler_index, koszul_betti_check, koszul_homology_dim,
                     koszul_homology_table, koszul_slice, koszul_totals)
from .polycore import (DimensionError, Grading, Polynomial, add, homogeneous_components,
                       monomial_basis, multiply, multiply_monomial, scale, weighted_degree)
from .resolve import (Resolution, ResolutionStep, UncertifiedResolutionError, check_exactness,
                      check_minimality, fiber_homology, fredholm_index, minimal_resolution,
                      presentation, syzygies)
from .wander import (ORTHOGONAL, SUBSET, MinimalGenerators, betti_counts, cyclicity,
                     minimize_generators, verify_minimal_orthogonality, wandering_slice)

__version__ = "0.1.0"
