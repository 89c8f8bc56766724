"""Covariants of binary forms through semi-invariants.

The package is organised bottom-up: :mod:`poly` (exact sparse polynomials),
:mod:`sl2` (the derivation D, kappa and its inverse), :mod:`transvect`,
:mod:`counting` (Cayley-Sylvester and product counts), :mod:`linalg` (exact
ranks) and :mod:`discover` (the generator pipeline).
"""

__version__ = "0.1.0"

from .poly import Poly, Ring, primitive_normalize, ring  # noqa: E402
from .sl2 import (  # noqa: E402
    FormContext,
    SemiInvariant,
    D_apply,
    context,
    is_semiinvariant,
    kappa,
    kappa_inverse,
    order,
    to_z,
)
from .transvect import semitransvectant, semitransvectant_direct, transvectant  # noqa: E402
from .counting import cs_dim, enumerate_products, sigma_count  # noqa: E402
from .linalg import MEMBER, rank, reduce_against, syzygy_dim  # noqa: E402
