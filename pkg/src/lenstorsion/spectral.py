"""Spectrum of the rescaled Rumin Laplacian on lens spaces, block by block.

Each irreducible ``V(q, 1_j, 0_{n-1-i-j}, -1_i, -p)`` of U(n+1) sits in a
small set of bidegrees ``(s, t)`` of the Rumin complex on the sphere and
carries one eigenvalue.  On the lens space its multiplicity is the dimension
of the subspace fixed by the twisted group action.  Summing these by hand
gives a direct (truncated) value of the torsion function, which is the
independent oracle for the closed Hurwitz-zeta formulas.
"""

from __future__ import annotations

import enum
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .lens import LensSpace
from .reptheory import HighestWeight, fixed_dim, fixed_dims

__all__ = [
    "Case",
    "SpectralBlock",
    "ConvergenceWarning",
    "eigenvalue",
    "enumerate_blocks",
    "block_multiplicity",
    "block_coefficient",
    "kappa_direct",
    "kappa_direct_all",
    "case_partial_sums",
    "check_cancellation",
]


class ConvergenceWarning(UserWarning):
    pass


class Case(enum.IntEnum):
    I = 1
    II = 2
    III = 3
    IV = 4
    V = 5
    VI = 6
    VII = 7


def eigenvalue(n: int, q: int, j: int, i: int, p: int) -> Fraction:
    """``((p+i)(q+n-i) + (q+j)(p+n-j))^2 / (4 (n-i-j)^2)``, exactly."""
    if n - i - j == 0:
        raise ZeroDivisionError(f"eigenvalue undefined for i + j = n (n={n}, i={i}, j={j})")
    num = (p + i) * (q + n - i) + (q + j) * (p + n - j)
    return Fraction(num * num, 4 * (n - i - j) ** 2)


def _bidegrees(case: Case, n: int, i: int, j: int) -> tuple[tuple[int, int], ...]:
    if case is Case.I:
        return ((0, 0),)
    if case is Case.II:
        return ((i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1))
    if case is Case.III:
        return ((i, 0), (i + 1, 0))
    if case is Case.IV:
        return ((0, j), (0, j + 1))
    if case is Case.V:
        return ((i, j), (i + 1, j), (i, j + 1))
    if case is Case.VI:
        return ((n, 0),)
    return ((0, n),)


@dataclass(frozen=True)
class SpectralBlock:
    case: Case
    q: int
    j: int
    i: int
    p: int
    weight: HighestWeight
    bidegrees: tuple[tuple[int, int], ...]
    eigenvalue: Fraction

    @property
    def n(self) -> int:
        return self.weight.n

    def degree_count(self, k: int) -> int:
        return sum(1 for s, t in self.bidegrees if s + t == k)


def _param_list(n: int, pmax: int, qmax: int) -> list[tuple[Case, int, int, int, int]]:
    """``(case, i, j, p, q)`` in lexicographic order."""
    P = range(1, pmax + 1)
    Q = range(1, qmax + 1)
    out: list[tuple[Case, int, int, int, int]] = [(Case.I, 0, 0, 0, 0)]
    out += [(Case.II, i, j, p, q) for i in range(n - 1) for j in range(n - 1 - i) for p in P for q in Q]
    out += [(Case.III, i, 0, p, 0) for i in range(n) for p in P]
    out += [(Case.IV, 0, j, 0, q) for j in range(n) for q in Q]
    out += [(Case.V, i, n - 1 - i, p, q) for i in range(n) for p in P for q in Q]
    out += [(Case.VI, n - 1, 0, p, -1) for p in P]
    out += [(Case.VII, 0, n - 1, -1, q) for q in Q]
    return out


def enumerate_blocks(L: LensSpace | int, pmax: int, qmax: int) -> list[SpectralBlock]:
    """All blocks of Cases I-VII with ``p <= pmax`` and ``q <= qmax``.

    Cases III and IV start at ``i = 0`` and ``j = 0``: the degree-0 functions
    ``V(q, 0, .., 0)`` and ``V(0, .., 0, -p)`` belong there.
    """
    if pmax < 1 or qmax < 1:
        raise ValueError("pmax and qmax must be >= 1")
    n = L if isinstance(L, int) else L.n
    blocks = []
    for case, i, j, p, q in _param_list(n, pmax, qmax):
        blocks.append(
            SpectralBlock(
                case=case,
                q=q,
                j=j,
                i=i,
                p=p,
                weight=HighestWeight.block(n, q, j, i, p),
                bidegrees=_bidegrees(case, n, i, j),
                eigenvalue=eigenvalue(n, q, j, i, p),
            )
        )
    return blocks


def block_multiplicity(b: SpectralBlock, L: LensSpace, u: int, k: int) -> int:
    if not 0 <= k <= L.n:
        raise ValueError(f"degree k = {k} out of range [0, {L.n}]")
    count = b.degree_count(k)
    if count == 0:
        return 0
    return fixed_dim(b.weight, L, u) * count


def _degree_sign(n: int, k: int) -> int:
    return (-1) ** (k + 1) * (n + 1 - k)


def block_coefficient(b: SpectralBlock) -> int:
    """Net weight of a block in the torsion function: ``sum (-1)^{k+1}(n+1-k)`` over its bidegrees."""
    return sum(_degree_sign(b.n, s + t) for s, t in b.bidegrees)


def check_cancellation(n: int) -> bool:
    """Cases II and V have zero net coefficient for every admissible ``(i, j)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ok = True
    for i in range(n - 1):
        for j in range(n - 1 - i):
            a = i + j
            ok &= (n + 1 - a) - 2 * (n - a) + (n - 1 - a) == 0
            ok &= sum(_degree_sign(n, s + t) for s, t in _bidegrees(Case.II, n, i, j)) == 0
    ok &= (n + 1 - (n - 1)) - 2 * (n + 1 - n) == 0
    for i in range(n):
        ok &= sum(_degree_sign(n, s + t) for s, t in _bidegrees(Case.V, n, i, n - 1 - i)) == 0
    return bool(ok)


# vectorised direct summation ----------------------------------------------


@dataclass
class _BlockArrays:
    case: np.ndarray
    q: np.ndarray
    j: np.ndarray
    i: np.ndarray
    p: np.ndarray
    weights: np.ndarray  # (B, n+1)
    counts: np.ndarray  # (B, n+1): bidegrees per degree k
    lam: np.ndarray  # eigenvalues as doubles


def _block_arrays(n: int, pmax: int, qmax: int) -> _BlockArrays:
    params = np.array([(int(c), i, j, p, q) for c, i, j, p, q in _param_list(n, pmax, qmax)], dtype=np.int64)
    case, i, j, p, q = params.T
    B = len(params)
    weights = np.zeros((B, n + 1), dtype=np.int64)
    weights[:, 0] = q
    weights[:, n] = -p
    for b in range(1, n):
        # position b (1-based inside the middle) is 1 for b <= j, -1 for b >= n - i
        weights[:, b] = np.where(b <= j, 1, np.where(b >= n - i, -1, 0))
    counts = np.zeros((B, n + 1), dtype=np.int64)
    cache: dict[tuple[int, int, int], list[tuple[int, int]]] = {}
    for idx in range(B):
        key = (int(case[idx]), int(i[idx]), int(j[idx]))
        if key not in cache:
            cache[key] = _bidegrees(Case(key[0]), n, key[1], key[2])
        for s, t in cache[key]:
            counts[idx, s + t] += 1
    num = ((p + i) * (q + n - i) + (q + j) * (p + n - j)).astype(float)
    lam = num * num / (4.0 * (n - i - j) ** 2)
    return _BlockArrays(case, q, j, i, p, weights, counts, lam)


def _threads() -> int:
    env = os.environ.get("TORSION_THREADS")
    if env:
        return max(1, int(env))
    return max(1, min(8, os.cpu_count() or 1))


def _all_fixed_dims(weights: np.ndarray, L: LensSpace, threads: int | None = None) -> np.ndarray:
    threads = threads or _threads()
    chunks = np.array_split(weights, max(1, min(threads * 4, len(weights) // 2048 + 1)))
    if threads == 1 or len(chunks) == 1:
        parts = [fixed_dims(c, L) for c in chunks]
    else:
        with ThreadPoolExecutor(threads) as ex:
            parts = list(ex.map(lambda c: fixed_dims(c, L), chunks))
    # chunks are reassembled in submission order, so the reduction is fixed
    return np.concatenate(parts, axis=0)


@dataclass(frozen=True)
class DirectKappa:
    """Direct sums for every character ``u`` of one lens space."""

    s: float
    values: np.ndarray  # (mu,)
    tails: np.ndarray  # (mu,)
    degree_zetas: np.ndarray  # (n+1, mu) spectral zeta of each degree
    dims: np.ndarray  # (B, mu) fixed-subspace dimensions of each block


def _kappa_from(blocks: _BlockArrays, dims: np.ndarray, n: int, s: float, mask=None) -> tuple[np.ndarray, np.ndarray]:
    pos = blocks.lam > 0
    if mask is not None:
        pos &= mask
    w = np.zeros_like(blocks.lam)
    w[pos] = blocks.lam[pos] ** (-s)
    # zeta_k[u] = sum_b counts[b, k] * dims[b, u] * lam_b^-s
    zetas = (blocks.counts * w[:, None]).T @ dims.astype(float)
    signs = np.array([_degree_sign(n, k) for k in range(n + 1)], dtype=float)
    harmonic = dims[blocks.case == Case.I].sum(axis=0).astype(float)
    return signs @ zetas - (n + 1) * harmonic, zetas


def kappa_direct_all(L: LensSpace, s: float, pmax: int, qmax: int, *, threads: int | None = None) -> DirectKappa:
    """Truncated direct torsion function for all ``u = 0 .. mu-1`` at once.

    The tail estimate is the change between the ``(pmax//2, qmax//2)`` and
    the full truncation; for the polynomial decay at ``s >= n+2`` it bounds
    everything beyond the cut.
    """
    n = L.n
    s = float(s)
    if s < n + 2:
        raise ValueError(f"direct summation needs s >= n + 2 = {n + 2}, got {s}")
    if pmax < 16 or qmax < 16:
        raise ValueError("pmax and qmax must be >= 16")
    blocks = _block_arrays(n, pmax, qmax)
    dims = _all_fixed_dims(blocks.weights, L, threads)
    full, zetas = _kappa_from(blocks, dims, n, s)
    half_mask = (blocks.p <= pmax // 2) & (blocks.q <= qmax // 2)
    half, _ = _kappa_from(blocks, dims, n, s, half_mask)
    tails = np.abs(full - half)
    return DirectKappa(s, full, tails, zetas, dims)


def kappa_direct(L: LensSpace, u: int, s: float, pmax: int = 64, qmax: int = 64) -> tuple[float, float]:
    """Direct value of the torsion function at real ``s >= n+2`` and its tail estimate.

    Includes the constant ``-(n+1) dim V^{alpha_u}(0)`` coming from the
    harmonic block.  Warns with :class:`ConvergenceWarning` when the tail
    exceeds ``1e-4 * |value|``.
    """
    res = kappa_direct_all(L, s, pmax, qmax)
    u = u % L.mu
    value, tail = float(res.values[u]), float(res.tails[u])
    if tail > 1e-4 * abs(value):
        warnings.warn(f"direct sum not converged: tail {tail:.3g} vs value {value:.3g}", ConvergenceWarning)
    return value, tail


def case_partial_sums(L: LensSpace, s: float, pmax: int, qmax: int, cases) -> np.ndarray:
    """Signed contribution of the given cases to the direct sum, for every ``u``."""
    n = L.n
    blocks = _block_arrays(n, pmax, qmax)
    mask = np.isin(blocks.case, [int(c) for c in cases])
    dims = _all_fixed_dims(blocks.weights[mask], L)
    sub = _BlockArrays(
        blocks.case[mask], blocks.q[mask], blocks.j[mask], blocks.i[mask], blocks.p[mask],
        blocks.weights[mask], blocks.counts[mask], blocks.lam[mask],
    )
    total, _ = _kappa_from(sub, dims, n, float(s))
    return total
