"""Jacobian arithmetic of curves over prime fields by linear algebra on Riemann-Roch spaces."""

from ._linjac import (
    CurveBundle,
    Engine,
    HyperellipticCurve,
    JacobianPoint,
    LinjacError,
    MumfordDivisor,
    PrimeField,
    cantor_add,
    cantor_negate,
    cantor_scalar_mul,
    gen_hyperelliptic,
    loglog_slope,
    paper_fixture,
    random_mumford,
    scale,
    suite_names,
    verify,
)

__all__ = [
    "CurveBundle",
    "Engine",
    "HyperellipticCurve",
    "JacobianPoint",
    "LinjacError",
    "MumfordDivisor",
    "PrimeField",
    "cantor_add",
    "cantor_negate",
    "cantor_scalar_mul",
    "gen_hyperelliptic",
    "loglog_slope",
    "paper_fixture",
    "random_mumford",
    "scale",
    "suite_names",
    "verify",
]
