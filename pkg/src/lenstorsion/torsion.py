"""Closed forms for the contact torsion function and the torsions of lens spaces."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .lens import A, FlatBundle, LensSpace, mod_inverse
from .specialfns import (
    ZetaPoleError,
    ZetaValue,
    hurwitz_zeta,
    hurwitz_zeta_ds,
    riemann_zeta,
    riemann_zeta_ds,
)

__all__ = [
    "A",
    "mod_inverse",
    "TorsionReport",
    "hurwitz_arguments",
    "kappa_closed",
    "kappa_closed_ds",
    "kappa_prime0",
    "kappa_prime0_expected",
    "contact_torsion",
    "contact_torsion_factor",
    "ray_singer_torsion",
    "weng_you_sphere",
    "h1_average",
    "section4_endpoints",
    "dim_H0",
    "corollary_report",
]

TORSION_RTOL = 1e-9


def _check_bundle(L: LensSpace, B: FlatBundle) -> None:
    if B.mu != L.mu:
        raise ValueError(f"bundle is for mu = {B.mu}, lens space has mu = {L.mu}")


def hurwitz_arguments(L: LensSpace, u: int) -> list[tuple[float, float]]:
    """``(A(u tau_j)/mu, A(-u tau_j)/mu)`` for each ``j``; both lie in ``(0, 1]``."""
    mu = L.mu
    return [(A(u * t, mu) / mu, A(-u * t, mu) / mu) for t in L.tau]


def kappa_closed(L: LensSpace, u: int, s: complex) -> ZetaValue:
    """The contact torsion function in closed form.

    Trivial character: ``-(n+1)(1 + 2^{2s+1} mu^{-2s} zeta(2s))``.
    Otherwise: ``-2^{2s} mu^{-2s} sum_j (zeta(2s, a_j) + zeta(2s, b_j))`` with
    the arguments of :func:`hurwitz_arguments`.
    """
    s = complex(s)
    if abs(2 * s - 1) < 2e-9:
        raise ZetaPoleError("the torsion function has a pole at s = 1/2")
    n, mu = L.n, L.mu
    scale = cmath.exp(2 * s * (math.log(2) - math.log(mu)))  # 2^{2s} mu^{-2s}
    if u % mu == 0:
        z = riemann_zeta(2 * s)
        return ZetaValue(-(n + 1) * (1 + 2 * scale * z.value), 2 * (n + 1) * abs(scale) * z.err)
    total, err = 0j, 0.0
    for a, b in hurwitz_arguments(L, u):
        za, zb = hurwitz_zeta(2 * s, a), hurwitz_zeta(2 * s, b)
        total += za.value + zb.value
        err += za.err + zb.err
    return ZetaValue(-scale * total, abs(scale) * err)


def kappa_closed_ds(L: LensSpace, u: int, s: complex) -> ZetaValue:
    """``d/ds`` of :func:`kappa_closed`, differentiated analytically."""
    s = complex(s)
    if abs(2 * s - 1) < 2e-9:
        raise ZetaPoleError("the torsion function has a pole at s = 1/2")
    n, mu = L.n, L.mu
    log_ratio = 2 * (math.log(2) - math.log(mu))
    scale = cmath.exp(s * log_ratio)
    if u % mu == 0:
        z, dz = riemann_zeta(2 * s), riemann_zeta_ds(2 * s)
        val = -2 * (n + 1) * scale * (log_ratio * z.value + 2 * dz.value)
        err = 2 * (n + 1) * abs(scale) * (abs(log_ratio) * z.err + 2 * dz.err)
        return ZetaValue(val, err)
    S, dS, err = 0j, 0j, 0.0
    for a, b in hurwitz_arguments(L, u):
        for x in (a, b):
            z, dz = hurwitz_zeta(2 * s, x), hurwitz_zeta_ds(2 * s, x)
            S += z.value
            dS += dz.value
            err += abs(log_ratio) * z.err + 2 * dz.err
    return ZetaValue(-scale * (log_ratio * S + 2 * dS), abs(scale) * err)


def kappa_prime0(L: LensSpace, u: int) -> float:
    """``kappa'(0)``, from the Euler-Maclaurin zeta derivatives."""
    return kappa_closed_ds(L, u, 0.0).value.real


def _log_chord(u: int, tau: int, mu: int) -> float:
    # log |exp(2 pi i u tau / mu) - 1| = log(2 |sin(pi u tau / mu)|)
    r = (u * tau) % mu
    return math.log(2 * abs(math.sin(math.pi * r / mu)))


def kappa_prime0_expected(L: LensSpace, u: int) -> float:
    """The two stated answers: ``2(n+1) log(4 pi/mu)`` and ``2 sum_j log|e^{2 pi i u tau_j/mu} - 1|``."""
    n, mu = L.n, L.mu
    if u % mu == 0:
        return 2 * (n + 1) * math.log(4 * math.pi / mu)
    return 2 * sum(_log_chord(u, t, mu) for t in L.tau)


def contact_torsion_factor(L: LensSpace, u: int) -> float:
    """Closed contact torsion of one line bundle ``E_u``."""
    n, mu = L.n, L.mu
    if u % mu == 0:
        return (4 * math.pi / mu) ** (n + 1)
    return math.prod(2 * abs(math.sin(math.pi * ((u * t) % mu) / mu)) for t in L.tau)


def contact_torsion(L: LensSpace, B: FlatBundle) -> float:
    """Product of the per-summand closed forms, cross-checked against ``exp(sum kappa'(0)/2)``."""
    _check_bundle(L, B)
    closed = math.prod(contact_torsion_factor(L, u) for u in B.us)
    via_kappa = math.exp(sum(kappa_prime0(L, u) for u in B.us) / 2)
    if abs(via_kappa / closed - 1) > TORSION_RTOL:
        raise ArithmeticError(f"closed torsion {closed!r} disagrees with exp(kappa'(0)/2) = {via_kappa!r}")
    return closed


def ray_singer_torsion(L: LensSpace, B: FlatBundle) -> float:
    """Ray-Singer torsion for the metric ``4 g_std``."""
    _check_bundle(L, B)
    n, mu = L.n, L.mu
    out = 1.0
    for u in B.us:
        if u == 0:
            out *= (4 * math.pi) ** (n + 1) / (math.factorial(n) * mu ** (n + 1))
        else:
            out *= contact_torsion_factor(L, u)
    return out


def weng_you_sphere(n: int) -> float:
    """Ray-Singer torsion of the round sphere ``S^{2n+1}`` (metric ``g_std``): ``2 pi^{n+1} / n!``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2 * math.pi ** (n + 1) / math.factorial(n)


def h1_average(L: LensSpace, s: complex) -> complex:
    """Group average of the twisted heat-trace term: ``-2(n+1) mu^{-2s} zeta(2s)``."""
    s = complex(s)
    return -2 * (L.n + 1) * cmath.exp(-2 * s * math.log(L.mu)) * riemann_zeta(2 * s).value


def section4_endpoints(L: LensSpace) -> tuple[float, float]:
    """``(avg h_1'(0), h_0'(0))`` for the trivial bundle in the metric ``g_std``.

    The first is differentiated from :func:`h1_average` with the zeta
    derivatives; the second is the sphere value ``2 log(2^{-n}/n!)``.
    """
    n, mu = L.n, L.mu
    # d/ds [-2(n+1) mu^{-2s} zeta(2s)] at s = 0
    h1 = -2 * (n + 1) * (-2 * math.log(mu) * riemann_zeta(0).real + 2 * riemann_zeta_ds(0).real)
    h0 = 2 * math.log(2.0**-n / math.factorial(n))
    return h1, h0


def dim_H0(L: LensSpace, B: FlatBundle) -> int:
    """Number of summands with trivial character (flat sections exist only there)."""
    _check_bundle(L, B)
    return sum(1 for u in B.us if u == 0)


@dataclass(frozen=True)
class TorsionReport:
    n: int
    mu: int
    nu: tuple[int, ...]
    us: tuple[int, ...]
    kappa0: float
    kappa_prime0: float
    T_contact: float
    T_ray_singer: float
    dim_H0: int
    ratio_check: float

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "mu": self.mu,
            "nu": list(self.nu),
            "us": list(self.us),
            "kappa0": self.kappa0,
            "kappa_prime0": self.kappa_prime0,
            "T_contact": self.T_contact,
            "T_ray_singer": self.T_ray_singer,
            "dim_H0": self.dim_H0,
            "ratio_check": self.ratio_check,
        }


def corollary_report(L: LensSpace, B: FlatBundle) -> TorsionReport:
    _check_bundle(L, B)
    k0 = sum(kappa_closed(L, u, 0.0).value.real for u in B.us)
    kp = sum(kappa_prime0(L, u) for u in B.us)
    Tc = contact_torsion(L, B)
    Trs = ray_singer_torsion(L, B)
    d = dim_H0(L, B)
    ratio = Tc / (Trs * math.factorial(L.n) ** d)
    return TorsionReport(L.n, L.mu, L.nu, B.us, k0, kp, Tc, Trs, d, ratio)
