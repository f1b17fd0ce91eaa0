"""Order bounds for two-point AG codes on generalized GK curves."""

from ._core import (
    BoundTable,
    CurveParams,
    InvalidParameters,
    __version__,
    best_codes,
    bound,
    build_table,
    decompose,
    dim_code,
    dim_l,
    gaps_q0,
    gaps_qinf,
    new_curve,
    nu_q0,
    nu_qinf,
    tau,
    tau_inv,
    verify,
)

__all__ = [
    "BoundTable",
    "CurveParams",
    "InvalidParameters",
    "best_codes",
    "bound",
    "build_table",
    "decompose",
    "dim_code",
    "dim_l",
    "gaps_q0",
    "gaps_qinf",
    "new_curve",
    "nu_q0",
    "nu_qinf",
    "tau",
    "tau_inv",
    "verify",
]
