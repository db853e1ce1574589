"""Compare the direct spectral sum with the closed form over a grid of lens spaces.

    python scripts/oracle_sweep.py --pmax 300 --ns 1,2 --mus 1,2,3,5,8
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from lenstorsion.spectral import kappa_direct_all
from lenstorsion.torsion import kappa_closed
from lenstorsion.verify import lens_grid


@dataclass
class SweepConfig:
    ns: list[int] = field(default_factory=lambda: [1, 2])
    mus: list[int] = field(default_factory=lambda: [1, 2, 3, 5, 8])
    per: int = 1
    shift: int = 3  # s = n + shift
    pmax: int = 300
    seed: int = 0


def sweep(cfg: SweepConfig) -> bool:
    ok = True
    print(f"{'n':>2} {'mu':>3} {'nu':<12} {'u':>3} {'closed':>22} {'direct':>22} {'|diff|':>9} {'tail':>9}")
    for L in lens_grid(cfg.seed, cfg.ns, cfg.mus, cfg.per):
        s = L.n + cfg.shift
        t0 = time.perf_counter()
        res = kappa_direct_all(L, s, cfg.pmax, cfg.pmax)
        dt = time.perf_counter() - t0
        for u in range(L.mu):
            closed = kappa_closed(L, u, s).real
            diff = abs(res.values[u] - closed)
            ok &= diff <= res.tails[u] + 1e-8
            nu = ",".join(map(str, L.nu))
            print(f"{L.n:>2} {L.mu:>3} {nu:<12} {u:>3} {closed:>22.15g} {res.values[u]:>22.15g} {diff:>9.2e} {res.tails[u]:>9.2e}")
        print(f"   ({dt:.2f} s)")
    return ok


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ints = lambda s: [int(x) for x in s.split(",")]
    ap.add_argument("--ns", type=ints, default=[1, 2])
    ap.add_argument("--mus", type=ints, default=[1, 2, 3, 5, 8])
    ap.add_argument("--per", type=int, default=1)
    ap.add_argument("--shift", type=int, default=3)
    ap.add_argument("--pmax", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    cfg = SweepConfig(**vars(ap.parse_args()))
    ok = sweep(cfg)
    print("all within tail + 1e-8" if ok else "MISMATCH")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
