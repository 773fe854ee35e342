"""The 15-dimensional level-zero fundamental module and its Chevalley generators."""

from g2module.basis import BASIS, DIM, BasisVector
from g2module.chevalley import (
    CHEVALLEY_TABLES,
    NILPOTENCY_DEGREE,
    Generator,
    apply_chevalley,
    dump_matrices,
    dump_matrices_json,
    generator_matrix,
)
from g2module.module_vector import ModuleVector
from g2module.verify import module_suite, verify_representation
from g2module.weights import (
    CARTAN,
    CARTAN_ROWS,
    INDICES,
    SIMPLE_ROOTS,
    WEIGHTS,
    Weight,
    cartan_entry,
    coroot_pairing,
    weight_of,
)

__all__ = [
    "BASIS",
    "CARTAN",
    "CARTAN_ROWS",
    "CHEVALLEY_TABLES",
    "DIM",
    "INDICES",
    "NILPOTENCY_DEGREE",
    "SIMPLE_ROOTS",
    "WEIGHTS",
    "BasisVector",
    "Generator",
    "ModuleVector",
    "Weight",
    "apply_chevalley",
    "cartan_entry",
    "coroot_pairing",
    "dump_matrices",
    "dump_matrices_json",
    "generator_matrix",
    "module_suite",
    "verify_representation",
    "weight_of",
]
