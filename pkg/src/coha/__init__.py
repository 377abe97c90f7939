"""Exact Hall-algebra computations for quivers.

Shuffle products with kernel, semistable quotients, and the central-slope
algebra of the Kronecker quiver, all over exact rational arithmetic.
"""

from .exactpoly import (
    InvalidPermutation,
    NotDivisible,
    Poly,
    PolyParseError,
    exact_div,
    parse_poly,
    permute_slots,
    render_poly,
)
from .symmetric import (
    NotSymmetric,
    TooFewVariables,
    is_block_symmetric,
    monomial_coefficient_profile,
    monomial_symmetric,
    schur,
)
from .quiver import (
    Quiver,
    QuiverParseError,
    VertexMismatch,
    ZeroDimVector,
    builtin_quiver,
    euler_form,
    hn_types,
    parse_quiver,
    slope,
)
from .hall import (
    CohaElement,
    GammaDegree,
    InternalNotDivisible,
    NotHomogeneous,
    NotInSpan,
    QuiverMismatch,
    component_basis,
    coordinates,
    gamma_degree,
    shuffle_product,
)
from .semistable import (
    GradedSubspace,
    exterior_prediction,
    hn_dim_check,
    project,
    sst_quotient,
    sym_series_dim,
    unstable_subspace,
)
from .kronecker import (
    GenIndex,
    IndexConstraintViolated,
    closed_form_check,
    closed_form_product,
    generator_element,
    normal_order,
    parse_word,
    pbw_check,
    relation_check,
    relation_sides,
    word_to_quotient,
)
from .braiding import TensorElement, c_apply, involution_check, ybe_check
from .diffrep import e_act, e_on_generator, f_act, faithfulness_probe, operator_relation_check

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
