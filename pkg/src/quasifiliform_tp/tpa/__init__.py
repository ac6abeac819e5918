from quasifiliform_tp.tpa.base import (
    CommutativeProduct,
    DomainConstraintError,
    MissingParameterError,
    ParameterAssignment,
    ParameterError,
    SamplingError,
    TableBuilder,
    TPVariant,
    instantiate,
)
from quasifiliform_tp.tpa.checks import (
    check_associative,
    check_commutative,
    check_poisson_leibniz,
    check_transposed_leibniz,
    multiplication_operator,
    operators_in_halfderivation_space,
)
from quasifiliform_tp.tpa.registry import (
    UnknownVariantError,
    amended_keys,
    get_amendment,
    get_variant,
    list_variants,
    variants,
)
from quasifiliform_tp.tpa.sampling import sample_parameters
from quasifiliform_tp.tpa.sweep import sweep, verify_variant

__all__ = [
    "CommutativeProduct",
    "DomainConstraintError",
    "MissingParameterError",
    "ParameterAssignment",
    "ParameterError",
    "SamplingError",
    "TableBuilder",
    "TPVariant",
    "instantiate",
    "check_associative",
    "check_commutative",
    "check_poisson_leibniz",
    "check_transposed_leibniz",
    "multiplication_operator",
    "operators_in_halfderivation_space",
    "UnknownVariantError",
    "amended_keys",
    "get_amendment",
    "get_variant",
    "list_variants",
    "variants",
    "sample_parameters",
    "sweep",
    "verify_variant",
]
