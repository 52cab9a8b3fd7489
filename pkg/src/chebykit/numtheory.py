"""Integer factorization and related helpers, sized for desk-scale inputs.

Trial division up to a bound, then Pollard rho with a Brent cycle and an
iteration budget; anything left unfactored is surfaced explicitly rather
than guessed at.  Primality is deterministic Miller-Rabin (valid far beyond
the 64-bit range).
"""

from __future__ import annotations

import math
from fractions import Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, budget: int) -> int | None:
    """One prime-or-composite factor of composite odd n, or None on budget exhaustion."""
    if n % 2 == 0:
        return 2
    for c in range(1, 20):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        count = 0
        while g == 1 and count < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
                count += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factorize(n: int, trial_bound: int = 10000, rho_budget: int = 10**8):
    """Factor |n| into {prime: exponent}; returns (factors, leftover).

    `leftover` is 1 on complete factorizations, otherwise the unfactored
    composite cofactor (never silently dropped).
    """
    n = abs(int(n))
    factors: dict[int, int] = {}
    if n <= 1:
        return factors, 1
    for p in range(2, trial_bound):
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    leftover = 1
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        # perfect power check helps rho on squares
        root = math.isqrt(m)
        if root * root == m:
            stack.extend([root, root])
            continue
        d = _pollard_brent(m, rho_budget)
        if d is None:
            leftover *= m
            continue
        stack.extend([d, m // d])
    return factors, leftover


def squarefree_kernel(q) -> tuple[int, int]:
    """Squarefree part of a nonzero rational, as (kernel, leftover).

    For q = s * k^2 with s squarefree, returns (s, 1); an unfactorable
    cofactor is reported in `leftover` (and treated as part of the kernel
    by callers only at their own peril).
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("kernel of zero")
    n = q.numerator * q.denominator  # same squarefree part as q
    sign = -1 if n < 0 else 1
    factors, leftover = factorize(abs(n))
    kernel = sign
    for p, e in factors.items():
        if e % 2:
            kernel *= p
    return kernel, leftover


def valuation(x, p: int) -> int | float:
    """p-adic valuation of a rational; +inf for zero."""
    x = Fraction(x)
    if x == 0:
        return math.inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v
