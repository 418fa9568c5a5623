"""Series summation with a three-in-a-row stop rule.

Terms are added until |term_n| < abs_tol + rel_tol * |partial_sum| holds for
three consecutive n (one small term can be an accidental zero of an
alternating or polynomial series). err_estimate is the magnitude of the
first omitted term, which is honest only when the terms eventually decrease;
slowly converging series satisfy the rule long before the sum is accurate,
which is the caller's problem to know about.
"""

from __future__ import annotations

from .errors import NonConvergent
from .profiles import DEFAULT, EvalResult, PrecisionProfile


def sum_series(term, profile: PrecisionProfile = DEFAULT) -> EvalResult:
    """Sum term(0) + term(1) + ... under the profile's stop rule.

    term must accept consecutive integers from 0 and may be called once past
    the final included index (for the error estimate).
    """
    total = 0.0
    consecutive = 0
    for n in range(profile.max_terms):
        t = term(n)
        total += t
        if abs(t) <= profile.abs_tol + profile.rel_tol * abs(total):
            consecutive += 1
            if consecutive == 3:
                return EvalResult(total, abs(term(n + 1)), "series", n + 1)
        else:
            consecutive = 0
    raise NonConvergent(
        f"sum_series: stop rule unmet after {profile.max_terms} terms",
        last_value=total)
