"""Codes from group-ring encodings."""

from ._grcodes import (
    Element,
    Error,
    Group,
    LinearCode,
    ParseError,
    PreconditionError,
    ResourceError,
    Side,
    best_basis,
    check_code,
    classify,
    cyclic_code,
    dihedral_double,
    dual,
    euclid_inverse,
    greedy_basis,
    is_ideal,
    is_self_dual,
    ldpc_unit_example,
    min_distance,
    orthogonal_unit,
    principal_check,
    qc_ldpc,
    rank,
    rg_matrix,
    selfdual_family,
    unit_code,
    verify_claims,
    zero_divisor_code,
)

__all__ = [name for name in dir() if not name.startswith("_")]
