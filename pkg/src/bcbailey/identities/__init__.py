"""Identity checkers, the lattice-sum harness and the registry that drives them."""
from .qseries import (Certificate, CertificateError, euler, gis_lhs, gis_rhs, multilateral_sum,
                      orthant_sum, partition_sum, pi_k, rr_product, theta)
from .multiple import epnt_lhs, theta_det, theta_det_rhs
from .registry import (BY_ID, MODES, REGISTRY, IdentityEntry, SchemaError, get_entry, grid_points,
                       run_all, run_check, run_row, validate)

__all__ = [
    "Certificate", "CertificateError", "euler", "gis_lhs", "gis_rhs", "multilateral_sum", "orthant_sum",
    "partition_sum", "pi_k", "rr_product", "theta", "epnt_lhs", "theta_det", "theta_det_rhs",
    "BY_ID", "MODES", "REGISTRY", "IdentityEntry", "SchemaError", "get_entry", "grid_points",
    "run_all", "run_check", "run_row", "validate",
]
