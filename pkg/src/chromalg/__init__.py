"""chromalg: exact arithmetic in the chromatic algebra of planar diagrams.

The order-n algebra is spanned by noncrossing partitions of 2n boundary
points without singleton blocks; products of basis diagrams are computed by
a confluent rewriting engine over rational functions in the variable Q.
"""

from .algebra import (
    CONVENTION,
    AlgebraElement,
    basis_element,
    elem_add,
    elem_mul,
    elem_scale,
    element_from_json,
    element_to_json,
    identity_element,
    structure_constants,
)
from .diagram import (
    Diagram,
    adjacency_matrix,
    alpha,
    beta,
    diagram_from_json,
    diagram_to_json,
    diagrams_equal,
    generator_diagram,
    identity_diagram,
    stack,
)
from .errors import (
    CapExceeded,
    DiagramError,
    OrderMismatch,
    PartitionError,
    PlanarityError,
    PoleError,
)
from .genset import (
    GeneratorExpression,
    GeneratorSymbol,
    c_coeff,
    decompose_basis,
    decompose_element,
    evaluate,
    expression_from_json,
    expression_to_json,
    generators,
    symbol_element,
    symbol_partition,
)
from .ncpartition import (
    Partition,
    boundary_label,
    boundary_position,
    classify_block,
    covers,
    enumerate_basis,
    identity_partition,
    is_noncrossing,
    pad_partition,
    partition_from_json,
    partition_to_json,
    riordan,
)
from .qscalar import (
    ONE,
    POLY_ONE,
    POLY_Q,
    POLY_ZERO,
    Q_MINUS_1,
    QV,
    ZERO,
    PolynomialQ,
    RationalFunctionQ,
    poly_from_json,
    poly_gcd,
    poly_to_json,
    rf_from_json,
    rf_to_json,
    scalar_add,
    scalar_eval,
    scalar_inv,
    scalar_mul,
)
from .rewrite import KERNEL, RawCombination, normalize, normalize_combination

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "AlgebraElement",
    "CONVENTION",
    "CapExceeded",
    "Diagram",
    "DiagramError",
    "GeneratorExpression",
    "GeneratorSymbol",
    "KERNEL",
    "ONE",
    "OrderMismatch",
    "POLY_ONE",
    "POLY_Q",
    "POLY_ZERO",
    "Partition",
    "PartitionError",
    "PlanarityError",
    "PoleError",
    "PolynomialQ",
    "Q_MINUS_1",
    "QV",
    "RationalFunctionQ",
    "RawCombination",
    "ZERO",
    "adjacency_matrix",
    "alpha",
    "basis_element",
    "beta",
    "boundary_label",
    "boundary_position",
    "c_coeff",
    "classify_block",
    "covers",
    "decompose_basis",
    "decompose_element",
    "diagram_from_json",
    "diagram_to_json",
    "diagrams_equal",
    "elem_add",
    "elem_mul",
    "elem_scale",
    "element_from_json",
    "element_to_json",
    "enumerate_basis",
    "evaluate",
    "expression_from_json",
    "expression_to_json",
    "generator_diagram",
    "generators",
    "identity_diagram",
    "identity_element",
    "identity_partition",
    "is_noncrossing",
    "normalize",
    "normalize_combination",
    "pad_partition",
    "partition_from_json",
    "partition_to_json",
    "poly_from_json",
    "poly_gcd",
    "poly_to_json",
    "rf_from_json",
    "rf_to_json",
    "riordan",
    "scalar_add",
    "scalar_eval",
    "scalar_inv",
    "scalar_mul",
    "stack",
    "structure_constants",
    "symbol_element",
    "symbol_partition",
]
