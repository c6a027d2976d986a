"""Numerical kernels shared by the whole toolkit.

Three self-contained primitives: the Gaussian Q-function, fixed-order
Gauss-Legendre quadrature on a finite interval, and bisection for
monotone functions. All are pure functions with no shared mutable
state, so they are safe to call from any number of concurrent workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

__all__ = [
    "QuadratureSpec",
    "BracketError",
    "gaussian_q",
    "integrate",
    "solve_monotone",
]

_SQRT2 = math.sqrt(2.0)


class BracketError(ValueError):
    """Raised when the target value is not bracketed by f(lo) and f(hi)."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Fixed-order Gauss-Legendre rule with `node_count` abscissae.

    The integrands this toolkit cares about are smooth and bounded on
    closed intervals, so a fixed-order rule converges rapidly; 64 nodes
    give better than 1e-12 relative error on all of them.
    """

    node_count: int = 64

    def __post_init__(self) -> None:
        if self.node_count < 16:
            raise ValueError(f"node_count must be >= 16, got {self.node_count}")


DEFAULT_QUADRATURE = QuadratureSpec()


@lru_cache(maxsize=None)
def _gauss_legendre(node_count: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(node_count)


def gaussian_q(z: float) -> float:
    """Upper-tail probability P[X > z] of a standard normal X.

    Evaluated through the complementary error function, which is
    accurate to well below 1e-12 absolute over the whole real line.
    """
    if not math.isfinite(z):
        raise ValueError(f"gaussian_q requires a finite argument, got {z}")
    return 0.5 * math.erfc(z / _SQRT2)


def integrate(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Definite integral of f over [lo, hi] by fixed Gauss-Legendre quadrature.

    Endpoints are never sampled, so integrands only need to be finite on
    the open interval.
    """
    if not lo < hi:
        raise ValueError(f"integration interval requires lo < hi, got [{lo}, {hi}]")
    nodes, weights = _gauss_legendre(spec.node_count)
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    acc = 0.0
    for x, w in zip(nodes, weights):
        acc += w * f(mid + half * x)
    return half * acc


def solve_monotone(
    f: Callable[[float], float],
    target: float,
    lo: float,
    hi: float,
    tol: float,
    max_iter: int = 200,
) -> float:
    """Solve f(x) = target by bisection for f strictly monotone on [lo, hi].

    The tolerance applies to the residual |f(x) - target|, not to x.
    Bisection is used instead of Newton for unconditional convergence on
    monotone curves. Deterministic for fixed inputs.

    Raises BracketError when the target lies outside [f(lo), f(hi)],
    reporting both endpoint values.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if not lo < hi:
        raise ValueError(f"bracket requires lo < hi, got [{lo}, {hi}]")
    f_lo = f(lo)
    f_hi = f(hi)
    if not min(f_lo, f_hi) <= target <= max(f_lo, f_hi):
        raise BracketError(
            f"target {target} not bracketed: f({lo}) = {f_lo}, f({hi}) = {f_hi}"
        )
    if abs(f_lo - target) <= tol:
        return lo
    if abs(f_hi - target) <= tol:
        return hi
    increasing = f_hi > f_lo
    a, b = lo, hi
    for _ in range(max_iter):
        mid = 0.5 * (a + b)
        f_mid = f(mid)
        if abs(f_mid - target) <= tol:
            return mid
        if (f_mid < target) == increasing:
            a = mid
        else:
            b = mid
    raise ArithmeticError(
        f"bisection did not reach |f(x) - target| <= {tol} in {max_iter} iterations"
    )
