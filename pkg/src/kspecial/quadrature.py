"""Double-exponential (tanh-sinh family) quadrature.

Two maps are provided:

* (0, inf):   t = exp(c sinh u),          c = pi/2   ("exp-sinh")
* (0, 1):     t = 1 / (1 + exp(-2 c sinh u))          ("tanh-sinh")

Both turn endpoint singularities that are integrable into integrands that
decay double-exponentially in u, so the trapezoid rule converges extremely
fast in the step h. The driver halves h until two successive levels agree
within the profile tolerances; err_estimate is the last inter-level delta
(a conservative bound, since convergence is much faster than linear).

Node/jacobian tables depend only on (map, level), so they are cached at
module level; evaluation cost is pure integrand calls.

The u-range is clipped to keep every intermediate double finite:
|c sinh u| <= ~671 at U = 6.75, so t itself never overflows. Integrands must
still be written so that *their* values stay finite wherever the weight has
not underflowed to zero; non-finite integrand values raise DomainError.
"""

from __future__ import annotations

import math

from .errors import DomainError, NonConvergent
from .profiles import DEFAULT, EvalResult, PrecisionProfile

_C = math.pi / 2.0
_U_MAX_HALFLINE = 6.75
_U_MAX_UNIT = 6.5
_BASE_H = 0.5  # level-0 step; level L uses h = _BASE_H / 2**L

# (kind, level) -> tuple of (u>0 nodes' data); built lazily.
_node_cache: dict[tuple[str, int], tuple] = {}


def _halfline_nodes(level: int):
    """Nodes for the exp-sinh map, level L.

    Level 0: all multiples of h0. Level L>0: odd multiples of h_L only
    (the even ones were already seen at coarser levels). Returns a tuple of
    (t, weight) with weight = t * c * cosh(u) (jacobian), for u != 0 in both
    signs, plus the u = 0 node flagged separately by the caller.
    """
    key = ("halfline", level)
    if key in _node_cache:
        return _node_cache[key]
    h = _BASE_H / (1 << level)
    out = []
    step = 1 if level == 0 else 2
    j = 1
    while True:
        u = j * h
        if u > _U_MAX_HALFLINE:
            break
        sh = _C * math.sinh(u)
        ch = _C * math.cosh(u)
        for sign in (1.0, -1.0):
            t = math.exp(sign * sh)
            out.append((t, t * ch))
        j += step
    _node_cache[key] = tuple(out)
    return _node_cache[key]


def _unit_nodes(level: int):
    """Nodes for the tanh-sinh map on (0,1): (t, 1-t, weight)."""
    key = ("unit", level)
    if key in _node_cache:
        return _node_cache[key]
    h = _BASE_H / (1 << level)
    out = []
    step = 1 if level == 0 else 2
    j = 1
    while True:
        u = j * h
        if u > _U_MAX_UNIT:
            break
        z = _C * math.sinh(u)
        ch = _C * math.cosh(u)
        # t = sigma(2z), 1-t = sigma(-2z); compute the small one stably.
        e = math.exp(-2.0 * z)  # z > 0 here
        small = e / (1.0 + e)   # = 1 - t
        big = 1.0 / (1.0 + e)   # = t
        w = 2.0 * big * small * ch  # dt/du = 2 t (1-t) c cosh u
        if w > 0.0:
            out.append((big, small, w))    # node at +u
            out.append((small, big, w))    # node at -u (t and 1-t swap)
        j += step
    _node_cache[key] = tuple(out)
    return _node_cache[key]


def _check(v: float, where: float) -> float:
    if not math.isfinite(v):
        raise DomainError(f"integrand returned non-finite value {v} at t={where}")
    return v


def quad_halfline(f, profile: PrecisionProfile = DEFAULT) -> EvalResult:
    """Integrate f over (0, inf).

    f maps t -> value and must return finite floats on (0, inf); values are
    allowed to underflow to 0. Raises NonConvergent if the refinement cap is
    hit before two successive levels agree.
    """
    # Level 0 includes the u=0 node (t=1, weight c).
    center = _check(f(1.0), 1.0) * _C
    total = center
    for t, w in _halfline_nodes(0):
        total += _check(f(t), t) * w
    prev = total * _BASE_H
    evals = 1 + len(_halfline_nodes(0))
    for level in range(1, profile.max_quad_refinements + 1):
        h = _BASE_H / (1 << level)
        add = 0.0
        nodes = _halfline_nodes(level)
        for t, w in nodes:
            add += _check(f(t), t) * w
        evals += len(nodes)
        cur = prev / 2.0 + add * h
        delta = abs(cur - prev)
        if level >= 2 and delta <= profile.rel_tol * abs(cur) + profile.abs_tol:
            return EvalResult(cur, delta, "integral", evals)
        prev = cur
    raise NonConvergent(
        f"quad_halfline: no convergence after {profile.max_quad_refinements} refinements",
        last_value=prev, last_delta=delta)


def quad_unit(f, profile: PrecisionProfile = DEFAULT) -> EvalResult:
    """Integrate f over (0, 1); f is called as f(t, 1-t).

    Passing 1-t explicitly keeps endpoint-singular factors like (1-t)**(c-1)
    accurate near t = 1, where 1-t computed by subtraction would lose all
    precision.
    """
    center = _check(f(0.5, 0.5), 0.5) * (2.0 * 0.25 * _C)
    total = center
    for t, omt, w in _unit_nodes(0):
        total += _check(f(t, omt), t) * w
    prev = total * _BASE_H
    evals = 1 + len(_unit_nodes(0))
    for level in range(1, profile.max_quad_refinements + 1):
        h = _BASE_H / (1 << level)
        add = 0.0
        nodes = _unit_nodes(level)
        for t, omt, w in nodes:
            add += _check(f(t, omt), t) * w
        evals += len(nodes)
        cur = prev / 2.0 + add * h
        delta = abs(cur - prev)
        if level >= 2 and delta <= profile.rel_tol * abs(cur) + profile.abs_tol:
            return EvalResult(cur, delta, "integral", evals)
        prev = cur
    raise NonConvergent(
        f"quad_unit: no convergence after {profile.max_quad_refinements} refinements",
        last_value=prev, last_delta=delta)
