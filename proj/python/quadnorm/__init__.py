"""Exact norms of quadratic algebras over finite free ring extensions."""

from quadnorm._core import (
    Algebra,
    AlgebraError,
    Extension,
    Hom,
    Quad,
    Ring,
    RingElement,
    as_rank2_algebra,
    char_poly,
    compose,
    disc,
    find_isomorphism,
    glue_norm_json,
    inverse_hom,
    law_names,
    polarized,
    run_cli,
    sn,
    star,
    trace,
    verify,
)

__all__ = [
    "Algebra",
    "AlgebraError",
    "Extension",
    "Hom",
    "Quad",
    "Ring",
    "RingElement",
    "as_rank2_algebra",
    "char_poly",
    "compose",
    "disc",
    "find_isomorphism",
    "glue_norm_json",
    "inverse_hom",
    "law_names",
    "polarized",
    "run_cli",
    "sn",
    "star",
    "trace",
    "verify",
]
