"""Precision profiles and the common evaluation-result record.

A PrecisionProfile bundles the knobs every iterative engine consumes
(series summation, quadrature refinement, product truncation). Three named
profiles are provided; ``default`` is used when nothing else is requested,
and the CLI maps KSPECIAL_PROFILE=strict|default|fast onto these.
"""

from __future__ import annotations

from dataclasses import dataclass

# Euler-Mascheroni constant, gamma = lim (H_n - log n).
EULER_GAMMA = 0.5772156649015328606

# Tags carried by EvalResult.method. "scaling" marks closed-form reference
# evaluations, the rest name the engine that produced the value.
METHODS = frozenset({
    "limit", "integral", "scaling", "product", "series", "euler_maclaurin",
})


@dataclass(frozen=True, slots=True)
class PrecisionProfile:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_terms: int = 100_000
    max_quad_refinements: int = 12

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_terms < 1 or self.max_quad_refinements < 1:
            raise ValueError("iteration caps must be >= 1")


DEFAULT = PrecisionProfile()
STRICT = PrecisionProfile(rel_tol=1e-12, abs_tol=1e-15,
                          max_terms=500_000, max_quad_refinements=14)
FAST = PrecisionProfile(rel_tol=1e-7, abs_tol=1e-10,
                        max_terms=20_000, max_quad_refinements=9)

PROFILES = {"strict": STRICT, "default": DEFAULT, "fast": FAST}


@dataclass(frozen=True, slots=True)
class EvalResult:
    """A numeric value plus how it was obtained and how far to trust it.

    err_estimate is an a-posteriori bound-ish quantity (last refinement
    delta, first omitted term, or a tail-order bound), not a guarantee.
    """

    value: float
    err_estimate: float
    method: str
    terms_or_nodes_used: int = 0

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if self.err_estimate < 0:
            raise ValueError("err_estimate must be >= 0")
        if self.terms_or_nodes_used < 0:
            raise ValueError("terms_or_nodes_used must be >= 0")

    def __float__(self) -> float:
        return self.value
