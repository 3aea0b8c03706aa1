"""Exact Hilbert data of fat point schemes and the modules of Kaehler
differential k-forms of their coordinate rings.

Everything is computed over the rationals with exact arithmetic: sparse
polynomials, Buchberger Groebner bases for ideals and graded free-module
submodules, Hilbert series of leading-term data, and integer linear
algebra for vanishing conditions.
"""

from .poly import (BlockElimination, DegRevLex, Polynomial,
                   PolynomialSyntaxError, parse_polynomial)
from .groebner import (Ideal, ModuleElement, Submodule, exact_div,
                       normal_form)
from .hilbert import (HilbertFunction, NonConstantHilbertPolynomial,
                      hf_from_numerator, hilbert_numerator,
                      ideal_hilbert_function, module_hilbert_function,
                      module_graded_dims_by_row_reduction, regularity_index)
from .scheme import (FatPointScheme, ProjectivePoint, fat_scheme_ideal,
                     format_scheme, parse_scheme, point_vanishing_ideal,
                     read_scheme, scheme_hilbert_function, scheme_regularity,
                     separators, write_scheme)
from .kaehler import (KaehlerPresentation, jacobian_ideal,
                      kaehler_hilbert_function, kaehler_hp,
                      kaehler_presentation, kaehler_ri,
                      scheme_jacobian_ideal)
from .verify import (ExampleResult, VerificationReport, example_names,
                     example_scheme, example_scheme_pair, paper_example,
                     random_scheme, theorem_sweep, verify_chain_inclusion,
                     verify_colon_identity, verify_complex_exactness,
                     verify_derivative_inclusion, verify_hp_bounds,
                     verify_main_theorem, verify_p2_formulas,
                     verify_product_intersection)

__version__ = "0.1.0"
