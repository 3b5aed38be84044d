"""superhaar: exact invariant integration on Lie supergroups.

Given a finite-dimensional Lie superalgebra by rational structure
constants, this package computes the canonical invariant of the quotient
by the left ideal generated by the even part, and evaluates the induced
left integral on matrix elements of finite-dimensional graded
representations -- all in exact rational arithmetic, with an independent
brute-force oracle for cross-checking.
"""

from .algebra import (EVEN, ODD, EvenPartReport, InputError, LieSuperalgebra,
                      ValidationReport, Violation, ad_prime_trace,
                      change_basis, even_part_structure, lambda_values,
                      trace_condition_holds, validate_superalgebra)
from .enveloping import (PBWMonomial, UEElement, act_on_quotient, alpha,
                         alpha_inv, class_lift, counit, in_J, map_element,
                         multiply, odd_first_form, quotient_project,
                         reassemble_odd_first)
from .frobenius import (FrobeniusMatrix, InternalInvariantError, InvariantZ,
                        NoInvariantError, classes_proportional, dual_pair,
                        form, frobenius_matrix, frobenius_pi, invariant_z,
                        odd_subset_order, pi_parity, subset_monomial)
from .modules import (GradedModule, IntegralMatrix, NotSemisimpleError,
                      SemisimplicityReport, brute_force_quotient_invariants,
                      check_right_integral, check_semisimple_over_even,
                      integral_matrix, invariant_projector, module_action,
                      quotient_module, validate_module)

__version__ = "0.1.0"

__all__ = [
    "EVEN", "ODD", "EvenPartReport", "InputError", "LieSuperalgebra",
    "ValidationReport", "Violation", "ad_prime_trace", "change_basis",
    "even_part_structure", "lambda_values", "trace_condition_holds",
    "validate_superalgebra",
    "PBWMonomial", "UEElement", "act_on_quotient", "alpha", "alpha_inv",
    "class_lift", "counit", "in_J", "map_element", "multiply",
    "odd_first_form", "quotient_project", "reassemble_odd_first",
    "FrobeniusMatrix", "InternalInvariantError", "InvariantZ",
    "NoInvariantError", "classes_proportional", "dual_pair", "form",
    "frobenius_matrix", "frobenius_pi", "invariant_z", "odd_subset_order",
    "pi_parity", "subset_monomial",
    "GradedModule", "IntegralMatrix", "NotSemisimpleError",
    "SemisimplicityReport", "brute_force_quotient_invariants",
    "check_right_integral", "check_semisimple_over_even", "integral_matrix",
    "invariant_projector", "module_action", "quotient_module",
    "validate_module",
]
