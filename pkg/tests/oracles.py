"""Independent reference machinery for tests.

Everything here avoids the package's own engines: brute-force trapezoid
integration, direct partial sums with explicit tail corrections, and central
finite differences. Frozen constants in the test files were produced either
by these oracles or by 30-digit arbitrary-precision evaluation; the source
is noted next to each constant.
"""

from __future__ import annotations

import math


def trapezoid(f, a: float, b: float, n: int) -> float:
    h = (b - a) / n
    tot = 0.5 * (f(a) + f(b))
    for i in range(1, n):
        tot += f(a + i * h)
    return tot * h


def central_diff(f, x: float, h: float) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)


def second_diff(f, x: float, h: float) -> float:
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)


def direct_zeta2(a: float, n_terms: int = 200_000) -> float:
    """sum_{n>=0} (a+n)^-2 by direct summation plus Euler-Maclaurin tail."""
    tot = sum(1.0 / (a + n) ** 2 for n in range(n_terms))
    last = a + n_terms - 1  # tail = trigamma(last+1) expanded about last
    return tot + 1.0 / last - 1.0 / (2.0 * last * last) + 1.0 / (6.0 * last ** 3)


def rising_product(x: float, n: int, step: float) -> float:
    """x (x+step) ... (x+(n-1)step) by plain multiplication."""
    out = 1.0
    for j in range(n):
        out *= x + j * step
    return out
