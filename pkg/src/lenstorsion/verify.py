"""Seeded identity ledger: every intermediate identity, checked over a grid."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .lens import FlatBundle, LensSpace
from .reptheory import (
    TorusElement,
    check_f1_factorization,
    check_generating_identity,
    check_richardson_littlewood,
)
from .rng import SplitMix64, sample_rotations
from .specialfns import hurwitz_zeta, hurwitz_zeta_ds, log_gamma, riemann_zeta, riemann_zeta_ds
from .spectral import check_cancellation, kappa_direct_all
from .torsion import (
    contact_torsion_factor,
    corollary_report,
    kappa_closed,
    kappa_prime0,
    kappa_prime0_expected,
    section4_endpoints,
    weng_you_sphere,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_residual: float
    tol: float
    count: int

    @property
    def passed(self) -> bool:
        return self.count > 0 and self.max_residual <= self.tol

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] {self.name:<34s} max residual {self.max_residual:.3e} (tol {self.tol:.0e}, {self.count} cases)"


def lens_grid(seed: int, ns, mus, per: int = 10) -> Iterator[LensSpace]:
    """Lens spaces with up to ``per`` seeded rotation vectors per ``(n, mu)``."""
    rng = SplitMix64(seed)
    for n in ns:
        for mu in mus:
            for nu in sample_rotations(rng, n, mu, per):
                yield LensSpace(n, mu, nu)


def random_torus_point(rng: SplitMix64, n: int, mu_max: int) -> TorusElement:
    mu = rng.randint(1, mu_max)
    return TorusElement(mu, tuple(rng.randint(0, mu - 1) for _ in range(n + 1)))


def _collect(name: str, tol: float, residuals) -> CheckResult:
    res = list(residuals)
    return CheckResult(name, max(res) if res else math.inf, tol, len(res))


def richardson_littlewood(rng: SplitMix64, points: int = 100, n_max: int = 4, mu_max: int = 64) -> CheckResult:
    def gen():
        for _ in range(points):
            n = rng.randint(1, n_max)
            t = random_torus_point(rng, n, mu_max)
            yield check_richardson_littlewood(t, rng.randint(1, 12), rng.randint(1, n))

    return _collect("Richardson-Littlewood", 1e-10, gen())


def generating_identity(rng: SplitMix64, points: int = 100, n_max: int = 4, mu_max: int = 64) -> CheckResult:
    def gen():
        for _ in range(points):
            t = random_torus_point(rng, rng.randint(1, n_max), mu_max)
            X = 0.9 * (1 - rng.uniform())  # (0, 0.9]
            yield check_generating_identity(t, min(X, 0.9 - 1e-12))

    return _collect("generating-function identity", 1e-8, gen())


def f1_factorization(rng: SplitMix64, points: int = 100, n_max: int = 4, mu_max: int = 64) -> CheckResult:
    def gen():
        for _ in range(points):
            t = random_torus_point(rng, rng.randint(1, n_max), mu_max)
            yield check_f1_factorization(t, rng.uniform())

    return _collect("F1 factorization", 1e-12, gen())


def _chord_log(a: float) -> float:
    return math.log(2 * abs(math.sin(math.pi * a)))


def hurwitz_pairing(denominator: int = 64) -> list[CheckResult]:
    grid = [k / denominator for k in range(1, denominator)]
    value = (abs(hurwitz_zeta(0, a).value + hurwitz_zeta(0, 1 - a).value) for a in grid)
    deriv = (
        abs(hurwitz_zeta_ds(0, a).value.real + hurwitz_zeta_ds(0, 1 - a).value.real + _chord_log(a)) for a in grid
    )
    lerch = (abs(hurwitz_zeta_ds(0, a).value.real - (log_gamma(a) - 0.5 * math.log(2 * math.pi))) for a in grid)
    return [
        _collect("Hurwitz pairing at 0", 1e-10, value),
        _collect("Hurwitz derivative pairing at 0", 1e-9, deriv),
        _collect("Lerch formula", 1e-10, lerch),
    ]


def riemann_special_values() -> CheckResult:
    res = [abs(riemann_zeta(0).value + 0.5), abs(riemann_zeta_ds(0).value + 0.5 * math.log(2 * math.pi))]
    return _collect("zeta(0), zeta'(0)", 1e-12, res)


def cancellation(n_max: int = 16) -> CheckResult:
    return _collect("Case II/V cancellation", 0.0, (0.0 if check_cancellation(n) else 1.0 for n in range(1, n_max + 1)))


def endpoints(ns, mus) -> CheckResult:
    def gen():
        for n in ns:
            for mu in mus:
                L = LensSpace(n, mu, (1,) * (n + 1))
                h1, h0 = section4_endpoints(L)
                target = 2 * math.log(2 * math.pi ** (n + 1) / (math.factorial(n) * mu ** (n + 1)))
                yield abs(h1 + h0 - target)
                if mu == 1:
                    yield abs(h1 + h0 - 2 * math.log(weng_you_sphere(n)))

    return _collect("trivial-bundle endpoints", 1e-12, gen())


def kappa_vanishing(spaces: list[LensSpace]) -> CheckResult:
    return _collect(
        "kappa(0) = 0", 1e-10, (abs(kappa_closed(L, u, 0).value) for L in spaces for u in range(L.mu))
    )


def torsion_closed_forms(spaces: list[LensSpace]) -> list[CheckResult]:
    rel, dk = [], []
    for L in spaces:
        for u in range(L.mu):
            kp = kappa_prime0(L, u)
            rel.append(abs(math.exp(kp / 2) / contact_torsion_factor(L, u) - 1))
            dk.append(abs(kp - kappa_prime0_expected(L, u)))
    return [_collect("exp(kappa'(0)/2) = closed torsion", 1e-9, rel), _collect("kappa'(0) stated value", 1e-9, dk)]


def torsion_ratios(spaces: list[LensSpace], rng: SplitMix64, max_rank: int = 3) -> CheckResult:
    def gen():
        for L in spaces:
            for u in range(L.mu):
                yield abs(corollary_report(L, FlatBundle.line(L.mu, u)).ratio_check - 1)
            rank = rng.randint(2, max_rank)
            B = FlatBundle(L.mu, tuple(rng.randint(0, L.mu - 1) for _ in range(rank)))
            yield abs(corollary_report(L, B).ratio_check - 1)

    return _collect("torsion ratio n!^dimH0", 1e-9, gen())


def oracle_equivalence(ns, mus, seed: int, pmax: int = 32) -> CheckResult:
    def gen():
        for L in lens_grid(seed, ns, mus, per=1):
            s = L.n + 3
            direct = kappa_direct_all(L, s, pmax, pmax)
            for u in range(L.mu):
                closed = kappa_closed(L, u, s).value.real
                # report the excess over the allowed band; 0 means within
                yield max(0.0, abs(direct.values[u] - closed) - direct.tails[u])

    return _collect("direct sum vs closed form (excess)", 1e-8, gen())


def run_identity_ledger(seed: int = 0, grid_mu: int = 12, grid_n: int = 3, per: int = 10,
                        progress: Callable[[CheckResult], None] | None = None) -> list[CheckResult]:
    rng = SplitMix64(seed)
    ns = range(1, grid_n + 1)
    mus = range(1, grid_mu + 1)
    spaces = list(lens_grid(seed, ns, mus, per))
    steps: list[Callable[[], CheckResult | list[CheckResult]]] = [
        riemann_special_values,
        hurwitz_pairing,
        lambda: richardson_littlewood(rng),
        lambda: generating_identity(rng),
        lambda: f1_factorization(rng),
        cancellation,
        lambda: endpoints(ns, mus),
        lambda: kappa_vanishing(spaces),
        lambda: torsion_closed_forms(spaces),
        lambda: torsion_ratios(spaces, rng),
        lambda: oracle_equivalence(range(1, min(grid_n, 2) + 1), [m for m in (1, 2, 3, 5) if m <= grid_mu], seed),
    ]
    results: list[CheckResult] = []
    for step in steps:
        out = step()
        for r in out if isinstance(out, list) else [out]:
            results.append(r)
            if progress:
                progress(r)
    return results


__all__ = [
    "CheckResult",
    "lens_grid",
    "random_torus_point",
    "run_identity_ledger",
]

