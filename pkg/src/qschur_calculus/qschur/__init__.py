"""Matrix model of the q-Schur algebra S_q(n,d) on tensor space."""

from .checks import (
    check_hecke,
    check_schur_presentation,
    hecke_commutation,
    iota_check,
    pi_check,
    schur_dimension,
    sigma_check,
    tau,
    tau_check,
    weyl_quotient_dimension,
)
from .matrices import AlgebraWord, BlockMatrix, TensorBasis, generator_matrix, hecke_generator, word_matrix

__all__ = [
    "AlgebraWord",
    "BlockMatrix",
    "TensorBasis",
    "check_hecke",
    "check_schur_presentation",
    "generator_matrix",
    "hecke_commutation",
    "hecke_generator",
    "iota_check",
    "pi_check",
    "schur_dimension",
    "sigma_check",
    "tau",
    "tau_check",
    "weyl_quotient_dimension",
    "word_matrix",
]
