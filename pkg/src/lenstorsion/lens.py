"""Lens space and flat line bundle data, plus the modular helpers they need."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

MAX_N = 20


def mod_inverse(nu: int, mu: int) -> int:
    """The unique ``tau`` in ``[1, mu]`` with ``tau * nu = 1 (mod mu)``."""
    if mu < 1:
        raise ValueError(f"modulus must be >= 1, got {mu}")
    if math.gcd(nu, mu) != 1:
        raise ValueError(f"{nu} is not invertible modulo {mu}")
    if mu == 1:
        return 1
    # extended Euclid on (nu mod mu, mu)
    r0, r1 = nu % mu, mu
    x0, x1 = 1, 0
    while r1:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        x0, x1 = x1, x0 - k * x1
    return A(x0, mu)


def A(w: int, mu: int) -> int:
    """Representative of ``w`` modulo ``mu`` in ``[1, mu]`` (``mu`` itself, never 0)."""
    if mu < 1:
        raise ValueError(f"modulus must be >= 1, got {mu}")
    r = w % mu
    return mu if r == 0 else r


def unit_roots(mu: int) -> np.ndarray:
    """``exp(2 pi i k / mu)`` for ``k = 0 .. mu-1`` with quarter turns made exact."""
    k = np.arange(mu)
    z = np.exp(2j * np.pi * k / mu)
    for quarter, val in enumerate((1, 1j, -1, -1j)):
        hit = (4 * k) == quarter * mu
        z[hit] = val
    return z


@dataclass(frozen=True)
class LensSpace:
    """``S^{2n+1}`` modulo the cyclic group generated by ``exp(2 pi i nu_j / mu)``."""

    n: int
    mu: int
    nu: tuple[int, ...]
    tau: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        nu = tuple(int(v) for v in self.nu)
        object.__setattr__(self, "nu", nu)
        if not (1 <= self.n <= MAX_N):
            raise ValueError(f"n must lie in [1, {MAX_N}], got {self.n}")
        if self.mu < 1:
            raise ValueError(f"mu must be >= 1, got {self.mu}")
        if len(nu) != self.n + 1:
            raise ValueError(f"need n+1 = {self.n + 1} rotation numbers, got {len(nu)}")
        bad = [v for v in nu if math.gcd(v, self.mu) != 1]
        if bad:
            raise ValueError(f"rotation numbers {bad} are not coprime to mu = {self.mu}")
        object.__setattr__(self, "tau", tuple(mod_inverse(v, self.mu) for v in nu))

    @classmethod
    def sphere(cls, n: int) -> "LensSpace":
        return cls(n, 1, (1,) * (n + 1))

    def gamma_exponents(self, ell: int) -> tuple[int, ...]:
        """Exponents of ``gamma^ell``, i.e. ``ell * nu_j mod mu``."""
        return tuple((ell * v) % self.mu for v in self.nu)

    def reduce(self, u: int) -> int:
        return u % self.mu


@dataclass(frozen=True)
class FlatBundle:
    """Direct sum of the flat line bundles ``E_u`` for the characters in ``us``."""

    mu: int
    us: tuple[int, ...]

    def __post_init__(self):
        if self.mu < 1:
            raise ValueError(f"mu must be >= 1, got {self.mu}")
        if len(self.us) == 0:
            raise ValueError("a flat bundle needs at least one summand")
        object.__setattr__(self, "us", tuple(int(u) % self.mu for u in self.us))

    @classmethod
    def line(cls, mu: int, u: int) -> "FlatBundle":
        return cls(mu, (u,))

    @property
    def rank(self) -> int:
        return len(self.us)
