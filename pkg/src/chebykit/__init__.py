"""chebykit: exact and numeric Chebyshev-exponent calculus.

Modules:
  exactcore  - integer Chebyshev polynomial algebra and basis conversions
  factorcyc  - factorization identities, Chebyshev-cyclotomic polynomials
  analytic   - complex exp/log analogues, radicals, branches, series
  solver     - equation solving in Chebyshev radicals, towers, GF(2^m)
  padic      - finite-precision p-adic arithmetic, series, Hensel lifting
  unram      - unramified-extension criteria for cubic/quartic families
  cli        - batch command-line interface
"""

from .exactcore import (
    BiPolynomial,
    ChebExpansion,
    IntPolynomial,
    ResidueElement,
    cheb_first_kind,
    cheb_mul,
    cheb_pow_ladder,
    cheb_second_kind,
    cheb_to_pow,
    cheby_transform,
    fib_lucas_polys,
    k_coeff,
    pow_to_cheb,
    u_odd_poly,
)

__version__ = "0.1.0"
