#!/usr/bin/env python3
"""Tabulate the residual of the power-balanced differential relation for
log Gamma_k over a small (k, x) grid, next to the residual of the x(k+1)
right-side variant. The balanced form sits at rounding level; the
variant's residual is exactly k(x-1), which the last column makes
visible."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from kspecial import pde_residual, pde_residual_variant, psi_point

print(f"{'k':>4} {'x':>4} {'balanced residual':>18} "
      f"{'variant residual':>17} {'k(x-1)':>8}")
for k in (0.5, 1.0, 2.0):
    for x in (0.7, 1.0, 3.0):
        p = psi_point(k, x)
        print(f"{k:>4.1f} {x:>4.1f} {pde_residual(p):>18.3e} "
              f"{pde_residual_variant(p):>17.6f} {k * (x - 1.0):>8.4f}")
