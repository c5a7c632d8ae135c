"""Exact rational arithmetic: standard forms, integrality verdicts, and
brute-force cross-checks."""

from ._core import (
    Box,
    CounterexampleReport,
    ExprParseError,
    InvariantViolation,
    JointVerdict,
    MonicPoly,
    NotProperError,
    ProductVerdict,
    Rational,
    RecipOfZeroError,
    ReciprocalCase,
    ReciprocalVerdict,
    ScaleVerdict,
    SumVerdict,
    ZeroDenominatorError,
    add,
    classify,
    cross_validate,
    direct_is_integer,
    divides,
    enumerate_proper,
    eval_poly,
    evaluate,
    explain_json,
    gcd,
    joint_verdict,
    monic_rational_roots,
    mul,
    negate,
    normalize,
    product_verdict,
    quadratic_from_sum_product,
    reciprocal,
    reciprocal_verdict,
    scale_verdict,
    search_theorem7,
    shift_verdict,
    sum_verdict,
    verify_no_proper_root,
)

__all__ = [
    "Box",
    "CounterexampleReport",
    "ExprParseError",
    "InvariantViolation",
    "JointVerdict",
    "MonicPoly",
    "NotProperError",
    "ProductVerdict",
    "Rational",
    "RecipOfZeroError",
    "ReciprocalCase",
    "ReciprocalVerdict",
    "ScaleVerdict",
    "SumVerdict",
    "ZeroDenominatorError",
    "add",
    "classify",
    "cross_validate",
    "direct_is_integer",
    "divides",
    "enumerate_proper",
    "eval_poly",
    "evaluate",
    "explain_json",
    "gcd",
    "joint_verdict",
    "monic_rational_roots",
    "mul",
    "negate",
    "normalize",
    "product_verdict",
    "quadratic_from_sum_product",
    "reciprocal",
    "reciprocal_verdict",
    "scale_verdict",
    "search_theorem7",
    "shift_verdict",
    "sum_verdict",
    "verify_no_proper_root",
]

__version__ = "0.1.0"
