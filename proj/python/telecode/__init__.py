"""Teleportation, superdense coding and embezzlement-based correlation checks."""

from ._core import (
    DimensionError,
    UsageError,
    ValidationError,
    catalog_names,
    check_ue,
    compose_identity_check,
    embed_word,
    embezzlement_error,
    pauli_x,
    pauli_z,
    random_density_matrix,
    random_unitary,
    realize,
    run_cli,
    shift_obstruction,
    shift_residual_closed_form,
    superdense,
    t_op,
    teleport,
    word_lambda,
    word_lambda_iterated,
)

__all__ = [
    "DimensionError",
    "UsageError",
    "ValidationError",
    "catalog_names",
    "check_ue",
    "compose_identity_check",
    "embed_word",
    "embezzlement_error",
    "pauli_x",
    "pauli_z",
    "random_density_matrix",
    "random_unitary",
    "realize",
    "run_cli",
    "shift_obstruction",
    "shift_residual_closed_form",
    "superdense",
    "t_op",
    "teleport",
    "word_lambda",
    "word_lambda_iterated",
]
