"""Hurwitz and Riemann zeta functions with s-derivatives.

Both are evaluated by Euler-Maclaurin summation: ``N`` explicit terms of
the series followed by the integral tail, the half-term and Bernoulli
corrections ``B_2 .. B_30``.  Every result carries a rigorous bound on the
truncation remainder plus a first-order estimate of the rounding error.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

__all__ = [
    "ZetaValue",
    "ZetaPoleError",
    "bernoulli_numbers",
    "hurwitz_zeta",
    "hurwitz_zeta_ds",
    "riemann_zeta",
    "riemann_zeta_ds",
    "log_gamma",
]

N_CORRECTIONS = 15  # Bernoulli terms B_2, B_4, ..., B_30
DEFAULT_TERMS = 2  # doubled until the remainder bound is met
MAX_TERMS = 1 << 16
TARGET_ERR = 1e-14
POLE_RADIUS = 1e-9


class ZetaPoleError(ValueError):
    """Raised when a zeta function is evaluated too close to s = 1."""


@dataclass(frozen=True)
class ZetaValue:
    value: complex
    err: float

    def __post_init__(self):
        if not (math.isfinite(self.err) and self.err >= 0):
            raise ValueError(f"error bound must be finite and >= 0, got {self.err!r}")

    @property
    def real(self) -> float:
        return self.value.real

    def __complex__(self) -> complex:
        return complex(self.value)


def bernoulli_numbers(m: int) -> list[Fraction]:
    """Exact ``B_0 .. B_m`` (convention ``B_1 = -1/2``)."""
    B = [Fraction(0)] * (m + 1)
    B[0] = Fraction(1)
    for k in range(1, m + 1):
        B[k] = -sum(math.comb(k + 1, i) * B[i] for i in range(k)) / (k + 1)
    return B


_B = bernoulli_numbers(2 * N_CORRECTIONS)
# B_{2m} / (2m)!  for m = 1..N_CORRECTIONS, as doubles
_BCOEF = tuple(float(_B[2 * m] / math.factorial(2 * m)) for m in range(1, N_CORRECTIONS + 1))
_BLAST = abs(_BCOEF[-1])


def _rising_pair(s: complex, k: int) -> tuple[complex, complex]:
    """``(s)_k`` and its s-derivative, by the product rule step by step."""
    p, dp = 1.0 + 0j, 0j
    for i in range(k):
        p, dp = p * (s + i), dp * (s + i) + p
    return p, dp


def _check_args(s: complex, a: float) -> complex:
    s = complex(s)
    if not (cmath.isfinite(s)):
        raise ValueError(f"s must be finite, got {s!r}")
    if abs(s - 1) < POLE_RADIUS:
        raise ZetaPoleError(f"zeta has a pole at s = 1 (got s = {s})")
    if not (0.0 < a <= 1.0):
        raise ValueError(f"a must lie in (0, 1], got {a!r}")
    if s.real + 2 * N_CORRECTIONS - 1 <= 1.0:
        raise ValueError(f"Re(s) = {s.real} is below the supported range (> {2 - 2 * N_CORRECTIONS})")
    return s


def _remainder_bound(s: complex, L: float, deriv: bool) -> float:
    """Bound on the Euler-Maclaurin remainder past ``L = N + a``."""
    k = 2 * N_CORRECTIONS
    c = s.real + k  # decay exponent of the k-th derivative of x^-s
    poch, dpoch = (abs(x) for x in _rising_pair(s, k))
    if not deriv:
        return _BLAST * poch * L ** (1.0 - c) / (c - 1.0)
    logL = math.log(L)
    tail = dpoch / (c - 1.0) + poch * (logL / (c - 1.0) + 1.0 / (c - 1.0) ** 2)
    return _BLAST * tail * L ** (1.0 - c)


def _choose_terms(s: complex, a: float, deriv: bool, tol: float) -> tuple[int, float]:
    N = DEFAULT_TERMS
    err = _remainder_bound(s, N + a, deriv)
    while err > tol and N < MAX_TERMS:
        N *= 2
        err = _remainder_bound(s, N + a, deriv)
    return N, err


def _em_value(s: complex, a: float, N: int) -> complex:
    x = np.arange(N, dtype=float) + a
    head = np.exp(-s * np.log(x)).sum()
    L = N + a
    logL = math.log(L)
    Ls = cmath.exp(-s * logL)  # L^-s
    val = head + L * Ls / (s - 1) + 0.5 * Ls
    # sum_m B_2m/(2m)! (s)_{2m-1} L^{-s-2m+1}
    poch = s  # (s)_1
    power = Ls / L
    for m, coef in enumerate(_BCOEF, start=1):
        val += coef * poch * power
        poch *= (s + 2 * m - 1) * (s + 2 * m)
        power /= L * L
    return complex(val)


def _em_deriv(s: complex, a: float, N: int) -> complex:
    x = np.arange(N, dtype=float) + a
    lx = np.log(x)
    head = -(lx * np.exp(-s * lx)).sum()
    L = N + a
    logL = math.log(L)
    Ls = cmath.exp(-s * logL)
    # d/ds [L^{1-s}/(s-1)] and d/ds [L^-s / 2]
    val = head - logL * L * Ls / (s - 1) - L * Ls / (s - 1) ** 2 - 0.5 * logL * Ls
    p, dp = s, 1.0 + 0j  # (s)_1 and its derivative
    Lk = Ls / L  # L^{-s-1}
    for m, coef in enumerate(_BCOEF, start=1):
        val += coef * (dp - p * logL) * Lk
        for i in (2 * m - 1, 2 * m):
            p, dp = p * (s + i), dp * (s + i) + p
        Lk /= L * L
    return complex(val)


def hurwitz_zeta(s: complex, a: float = 1.0) -> ZetaValue:
    """Analytic continuation of ``sum_{q>=0} (q + a)^-s`` for ``0 < a <= 1``.

    For ``Re s`` well below zero the explicit terms are large and cancel, so
    rounding error grows like ``N^{-Re s}``; ``err`` includes an estimate of it.
    """
    return _hurwitz(_check_args(s, a), float(a), False)


def hurwitz_zeta_ds(s: complex, a: float = 1.0) -> ZetaValue:
    """Partial derivative in ``s`` of :func:`hurwitz_zeta`."""
    return _hurwitz(_check_args(s, a), float(a), True)


@lru_cache(maxsize=1 << 16)
def _hurwitz(s: complex, a: float, deriv: bool) -> ZetaValue:
    N, err = _choose_terms(s, a, deriv, TARGET_ERR)
    value = _em_deriv(s, a, N) if deriv else _em_value(s, a, N)
    return ZetaValue(value, err + _rounding(s, a, N, deriv))


def _rounding(s: complex, a: float, N: int, deriv: bool) -> float:
    # 4 eps times the magnitude of everything that was added up
    x = np.arange(N + 1, dtype=float) + a
    mag = x ** -s.real
    if deriv:
        mag = mag * (1.0 + np.abs(np.log(x)))
    L = N + a
    mag_tail = L ** (1.0 - s.real) / abs(s - 1) * (1.0 + abs(math.log(L)) + 1.0 / abs(s - 1))
    return 4 * np.finfo(float).eps * float(mag.sum() + mag_tail)


def riemann_zeta(s: complex) -> ZetaValue:
    return hurwitz_zeta(s, 1.0)


def riemann_zeta_ds(s: complex) -> ZetaValue:
    return hurwitz_zeta_ds(s, 1.0)


def log_gamma(a: float) -> float:
    """``ln Gamma(a)`` for real ``a > 0``; thin wrapper over :func:`math.lgamma`."""
    if not a > 0:
        raise ValueError(f"log_gamma needs a > 0, got {a!r}")
    return math.lgamma(a)
