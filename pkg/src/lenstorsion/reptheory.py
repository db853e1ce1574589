"""Characters of U(n+1) irreducibles at torus points of finite order.

Two evaluation routes live here:

* :func:`character` evaluates the Jacobi-Trudi determinant in complex
  doubles at a single torus point.
* :func:`graded_characters` evaluates the same determinant exactly in the
  integer group ring ``Z[x]/(x^mu - 1)`` of the cyclic group, giving every
  ``chi(gamma^ell)`` at once.  The determinant entries grow like
  ``binom(k+n, n)`` and the float route loses ``eps * h_k^2`` to
  cancellation, which is too much for integer rounding at large weights, so
  :func:`fixed_dims` is built on the exact route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .lens import LensSpace, unit_roots

__all__ = [
    "HighestWeight",
    "TorusElement",
    "IntegralityError",
    "elementary_symmetric",
    "complete_homogeneous",
    "character",
    "graded_characters",
    "fixed_dim",
    "fixed_dims",
    "group_averages",
    "check_richardson_littlewood",
    "check_generating_identity",
    "check_f1_factorization",
]

INTEGRALITY_TOL = 1e-8


class IntegralityError(ArithmeticError):
    """A group average that should be a dimension is not an integer."""


@dataclass(frozen=True)
class HighestWeight:
    entries: tuple[int, ...]

    def __post_init__(self):
        ent = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", ent)
        if len(ent) < 1:
            raise ValueError("a highest weight needs at least one entry")
        if any(ent[k] < ent[k + 1] for k in range(len(ent) - 1)):
            raise ValueError(f"highest weight must be weakly decreasing: {ent}")

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[int, int]]) -> "HighestWeight":
        """Build from ``(value, multiplicity)`` runs; zero-length runs vanish."""
        out: list[int] = []
        for value, count in runs:
            if count < 0:
                raise ValueError(f"negative run length {count}")
            out.extend([value] * count)
        return cls(tuple(out))

    @classmethod
    def block(cls, n: int, q: int, j: int, i: int, p: int) -> "HighestWeight":
        """The weight ``(q, 1_j, 0_{n-1-i-j}, -1_i, -p)`` of U(n+1)."""
        if i < 0 or j < 0 or i + j > n - 1:
            raise ValueError(f"need i, j >= 0 and i + j <= n - 1 (n={n}, i={i}, j={j})")
        return cls.from_runs([(q, 1), (1, j), (0, n - 1 - i - j), (-1, i), (-p, 1)])

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def shifted(self) -> tuple[tuple[int, ...], int]:
        """Nonnegative weight and the determinant power ``m`` that was added."""
        m = max(0, -self.entries[-1])
        return tuple(x + m for x in self.entries), m

    def dimension(self) -> int:
        """Weyl dimension formula, exact."""
        lam = self.entries
        num, den = 1, 1
        for a in range(len(lam)):
            for b in range(a + 1, len(lam)):
                num *= lam[a] - lam[b] + b - a
                den *= b - a
        return num // den


@dataclass(frozen=True)
class TorusElement:
    """``(exp(2 pi i e_1/mu), ..., exp(2 pi i e_{n+1}/mu))``."""

    mu: int
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        object.__setattr__(self, "exps", exps)
        if self.mu < 1:
            raise ValueError(f"mu must be >= 1, got {self.mu}")
        if not all(0 <= e < self.mu for e in exps):
            raise ValueError(f"exponents must lie in [0, {self.mu}): {exps}")

    @classmethod
    def identity(cls, n: int) -> "TorusElement":
        return cls(1, (0,) * (n + 1))

    @classmethod
    def gamma_power(cls, L: LensSpace, ell: int) -> "TorusElement":
        return cls(L.mu, L.gamma_exponents(ell))

    @property
    def n(self) -> int:
        return len(self.exps) - 1

    def coords(self) -> np.ndarray:
        return unit_roots(self.mu)[list(self.exps)]

    def conjugate(self) -> "TorusElement":
        return TorusElement(self.mu, tuple((-e) % self.mu for e in self.exps))


def elementary_symmetric(t: TorusElement, j: int) -> complex:
    """``e_j`` of the coordinates of ``t``."""
    if not 0 <= j <= t.n + 1:
        raise IndexError(f"j = {j} out of range [0, {t.n + 1}]")
    return complex(_e_table(t)[j])


@lru_cache(maxsize=4096)
def _e_table(t: TorusElement) -> np.ndarray:
    e = np.zeros(t.n + 2, dtype=complex)
    e[0] = 1
    for z in t.coords():
        e[1:] = e[1:] + z * e[:-1]
    e.flags.writeable = False
    return e


def complete_homogeneous(t: TorusElement, q: int) -> complex:
    """``h_q`` of the coordinates of ``t`` (zero for negative ``q``)."""
    if q < 0:
        return 0j
    return complex(_h_table(t, _bucket(q))[q])


def _bucket(k: int) -> int:
    return max(16, 1 << k.bit_length())


@lru_cache(maxsize=4096)
def _h_table(t: TorusElement, K: int) -> np.ndarray:
    # prod_j 1/(1 - t_j X): absorb one variable at a time
    h = np.zeros(K + 1, dtype=complex)
    h[0] = 1
    for z in t.coords():
        for k in range(1, K + 1):
            h[k] += z * h[k - 1]
    h.flags.writeable = False
    return h


def _jt_indices(lam: Sequence[int]) -> np.ndarray:
    m = len(lam)
    return np.array([[lam[a] - a + b for b in range(m)] for a in range(m)])


def character(lam: HighestWeight, t: TorusElement) -> complex:
    """``chi_{V(lam)}(t)`` by Jacobi-Trudi in complex doubles."""
    if lam.n != t.n:
        raise ValueError(f"weight has {lam.n + 1} entries but torus point has {t.n + 1}")
    shifted, m = lam.shifted()
    idx = _jt_indices(shifted)
    h = _h_table(t, _bucket(int(idx.max())))
    mat = np.where(idx >= 0, h[np.clip(idx, 0, None)], 0)
    val = complex(np.linalg.det(mat))
    if m:
        val *= unit_roots(t.mu)[(-m * sum(t.exps)) % t.mu]
    return val


# exact group-ring route ---------------------------------------------------


def _ring_h_table(nu: tuple[int, ...], mu: int, K: int, dtype) -> np.ndarray:
    """``h_k`` of ``(x^nu_1, ..., x^nu_{n+1})`` in ``Z[x]/(x^mu - 1)``, shape (K+1, mu)."""
    H = np.zeros((K + 1, mu), dtype=dtype)
    H[0, 0] = 1
    for v in nu:
        shift = v % mu
        for k in range(1, K + 1):
            H[k] += np.roll(H[k - 1], shift)
    return H


def _ring_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Cyclic convolution along the last axis."""
    mu = a.shape[-1]
    out = a[..., :1] * b
    for r in range(1, mu):
        out = out + a[..., r : r + 1] * np.roll(b, r, axis=-1)
    return out


def _ring_det(entry, m: int, one: np.ndarray) -> np.ndarray:
    """Determinant by Laplace expansion with memoised minors."""
    memo: dict[tuple[int, ...], np.ndarray] = {}

    def minor(cols: tuple[int, ...]) -> np.ndarray:
        r = m - len(cols)
        if not cols:
            return one
        if cols in memo:
            return memo[cols]
        acc = None
        for pos, c in enumerate(cols):
            term = _ring_mul(entry(r, c), minor(cols[:pos] + cols[pos + 1 :]))
            acc = term if acc is None else (acc + term if pos % 2 == 0 else acc - term)
        memo[cols] = acc
        return acc

    return minor(tuple(range(m)))


def graded_characters(weights, nu: Sequence[int], mu: int) -> np.ndarray:
    """Characters of ``V(lam)`` restricted to the cyclic group, as group-ring elements.

    ``weights`` is an ``(B, n+1)`` integer array of highest weights.  Row
    ``b`` of the result holds ``c[b, r]``, the total multiplicity of weights
    ``w`` of ``V(lam_b)`` with ``sum_j w_j nu_j = r (mod mu)``, so that
    ``chi(gamma^ell) = sum_r c[b, r] exp(2 pi i r ell / mu)``.
    """
    W = np.atleast_2d(np.asarray(weights, dtype=np.int64))
    B, m = W.shape
    if len(nu) != m:
        raise ValueError(f"weights have {m} entries but {len(nu)} rotation numbers given")
    if B == 0:
        return np.zeros((0, mu), dtype=np.int64)
    if np.any(np.diff(W, axis=1) > 0):
        raise ValueError("highest weights must be weakly decreasing")
    shift = np.maximum(0, -W[:, -1])
    lam = W + shift[:, None]
    K = int(lam[:, 0].max()) + m
    n = m - 1
    # every determinant coefficient is bounded by m! * (max coefficient sum)^m
    bound = math.factorial(m) * math.comb(K + n, n) ** m
    dtype = np.int64 if bound < 2**62 else object
    H = _ring_h_table(tuple(nu), mu, K, dtype)
    zero = np.zeros((B, mu), dtype=dtype)
    one = zero.copy()
    one[:, 0] = 1

    def entry(a: int, c: int) -> np.ndarray:
        k = lam[:, a] - a + c
        out = H[np.clip(k, 0, None)]
        out[k < 0] = 0
        return out

    c = _ring_det(entry, m, one)
    # multiply by det^{-shift}: x^{-shift * sum(nu)}
    offs = (-shift * int(sum(nu))) % mu
    cols = (np.arange(mu)[None, :] + offs[:, None]) % mu
    out = np.empty_like(c)
    np.put_along_axis(out, cols, c, axis=1)
    return out


def group_averages(weights, L: LensSpace) -> tuple[np.ndarray, np.ndarray]:
    """Exact group-ring characters and the float group averages built from them.

    Returns ``(c, avg)`` where ``avg[b, u] = (1/mu) sum_ell chi_b(gamma^ell)
    alpha_u(gamma^ell)`` is evaluated in floating point, before any rounding.
    """
    mu = L.mu
    c = graded_characters(weights, L.nu, mu)
    roots = unit_roots(mu)
    k = np.arange(mu)
    table = roots[np.outer(k, k) % mu]  # table[a, b] = omega^{a b}
    chi = c.astype(float) @ table  # chi[b, ell]
    return c, chi @ table / mu


def fixed_dims(weights, L: LensSpace, *, tol: float = INTEGRALITY_TOL) -> np.ndarray:
    """``dim V(lam)^{alpha_u}`` for every weight row and every ``u`` in ``[0, mu)``.

    The group average picks out one group-ring coefficient, ``c[b, -u]``,
    which is returned exactly.  The float average is still formed and must
    sit within ``tol`` of it (widened to the float noise floor
    ``8 eps mu sum|c|`` for very large representations); otherwise
    :class:`IntegralityError` is raised.
    """
    mu = L.mu
    c, avg = group_averages(weights, L)
    exact = c[:, (-np.arange(mu)) % mu]
    if np.any(exact < 0):
        raise IntegralityError("negative fixed-subspace dimension")
    dev = np.abs(avg - exact.astype(float))
    scale = np.abs(c).sum(axis=1).astype(float)
    allowed = np.maximum(tol, 8 * np.finfo(float).eps * mu * scale)[:, None]
    if dev.size and np.any(dev > allowed):
        b, u = np.unravel_index(int((dev / allowed).argmax()), dev.shape)
        raise IntegralityError(
            f"group average {avg[b, u]} for weight {np.atleast_2d(weights)[b].tolist()}, u={u} "
            f"is {dev[b, u]:.3g} from the exact dimension {exact[b, u]}"
        )
    return exact.astype(np.int64)


def fixed_dim(lam: HighestWeight, L: LensSpace, u: int) -> int:
    if lam.n != L.n:
        raise ValueError(f"weight is for U({lam.n + 1}) but the lens space has n = {L.n}")
    return int(_fixed_dim_row(lam.entries, L)[u % L.mu])


@lru_cache(maxsize=65536)
def _fixed_dim_row(entries: tuple[int, ...], L: LensSpace) -> tuple[int, ...]:
    return tuple(int(d) for d in fixed_dims([entries], L)[0])


# identity checks ---------------------------------------------------------


def check_richardson_littlewood(t: TorusElement, q: int, j: int) -> float:
    """Residual of ``e_j h_q = chi(q, 1_j, 0..) + chi(q+1, 1_{j-1}, 0..)`` at ``t``."""
    n = t.n
    if q < 1 or not 1 <= j <= n:
        raise ValueError(f"need q >= 1 and 1 <= j <= n (q={q}, j={j}, n={n})")
    lhs = elementary_symmetric(t, j) * complete_homogeneous(t, q)
    a = HighestWeight.from_runs([(q, 1), (1, j), (0, n - j)])
    b = HighestWeight.from_runs([(q + 1, 1), (1, j - 1), (0, n - j + 1)])
    return abs(lhs - character(a, t) - character(b, t))


def _kappa_j_coeffs(n: int) -> np.ndarray:
    # (-1)^{j+1} (n+1-j) for j = 0..n
    return np.array([(-1) ** (j + 1) * (n + 1 - j) for j in range(n + 1)], dtype=float)


def check_generating_identity(t: TorusElement, X: float, *, tail_tol: float = 1e-13) -> float:
    """Residual of the generating-function identity at ``(t, X)``.

    The left side is ``(sum_j c_j e_j X^j)(sum_{q>=1} h_q X^q) + sum_{j>=1}
    c_j e_j X^j`` with ``c_j = (-1)^{j+1}(n+1-j)``; the right side is
    ``-sum_j t_j X / (1 - t_j X)``.  The ``q``-series is cut once its tail,
    bounded through ``|h_q| <= binom(q+n, n)``, drops below ``tail_tol``.
    """
    if not 0 < X < 1:
        raise ValueError(f"X must lie in (0, 1), got {X}")
    n = t.n
    z = t.coords()
    e = _e_table(t)[: n + 1]
    Xp = X ** np.arange(n + 1)
    jpart = _kappa_j_coeffs(n) * e * Xp
    jsum = jpart.sum()
    jmax = float(np.abs(_kappa_j_coeffs(n)) @ (np.array([math.comb(n + 1, j) for j in range(n + 1)]) * Xp))
    # extend the h-series until the geometric tail bound is small enough
    q = 1
    while True:
        ratio = X * (q + 1 + n) / (q + 1)
        term = math.comb(q + 1 + n, n) * X ** (q + 1)
        if ratio < 1 and jmax * term / (1 - ratio) <= tail_tol:
            break
        q += 1
    h = _h_table(t, _bucket(q))[: q + 1]
    hsum = (h[1:] * X ** np.arange(1, q + 1)).sum()
    lhs = jsum * hsum + (jsum - jpart[0])
    rhs = -(z * X / (1 - z * X)).sum()
    return float(abs(lhs - rhs))


def check_f1_factorization(t: TorusElement, X: float) -> float:
    """Residual of ``sum_j (-1)^j e_j X^j = prod_j (1 - t_j X)``."""
    e = _e_table(t)
    signs = (-1.0) ** np.arange(len(e))
    lhs = (signs * e * X ** np.arange(len(e))).sum()
    rhs = np.prod(1 - t.coords() * X)
    return float(abs(lhs - rhs))
