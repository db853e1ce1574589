"""Contact (Rumin complex) and Ray-Singer torsion of lens spaces."""

from .lens import FlatBundle, LensSpace
from .specialfns import ZetaValue, hurwitz_zeta, hurwitz_zeta_ds, riemann_zeta, riemann_zeta_ds
from .spectral import enumerate_blocks, kappa_direct
from .torsion import (
    contact_torsion,
    corollary_report,
    kappa_closed,
    kappa_prime0,
    ray_singer_torsion,
)

__version__ = "0.1.0"
