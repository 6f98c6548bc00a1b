"""galcover: exact analysis of Galois covers of the line.

Enumerates and validates monodromy data, computes Jacobian decomposition
dimensions and Hodge eigenspace types with exact cyclotomic arithmetic,
and applies a delta-dimension calculus to rule out special (Shimura)
families.
"""

from ._kernel import KERNEL_NAME
from .groups import (
    FiniteGroup,
    Subgroup,
    group_from_spec,
    make_cyclic,
    make_dihedral,
    make_quaternion8,
)
from .covers import Datum, enumerate_data, genus, make_datum, validate_datum

__version__ = "0.1.0"

__all__ = [
    "KERNEL_NAME",
    "FiniteGroup",
    "Subgroup",
    "Datum",
    "group_from_spec",
    "make_cyclic",
    "make_dihedral",
    "make_quaternion8",
    "make_datum",
    "validate_datum",
    "enumerate_data",
    "genus",
    "__version__",
]
