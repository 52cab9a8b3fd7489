import cmath
import math
import random
from fractions import Fraction

import pytest

from chebykit.analytic import (
    branch_combination,
    branch_equiv,
    branch_radical,
    cheb_exp,
    cheb_log,
    cheb_pow_complex,
    hypergeometric_2f1,
    ode_residuals,
    orthogonality_integral,
    principal_radical,
    puiseux_neg2,
    rational_power,
    second_kind_derivative,
    second_kind_num,
    series_cheb_pow_near2,
    series_near0,
)
from chebykit.exactcore import cheb_first_kind, cheb_pow_ladder, cheb_second_kind, u_odd_poly

E_COSH = 2.0 * math.cosh(1.0)
E_COS = 2.0 * math.cos(1.0)


def test_cheb_log_examples():
    w = cheb_log(2)
    assert w.r == pytest.approx(0, abs=1e-14) and w.theta == pytest.approx(0, abs=1e-14)
    w = cheb_log(E_COSH)
    assert w.r == pytest.approx(1, abs=1e-13) and w.theta == pytest.approx(0, abs=1e-13)
    w = cheb_log(-2)
    assert w.r == pytest.approx(0, abs=1e-6) and w.theta == pytest.approx(math.pi, abs=1e-6)
    # the negative real axis past -2 maps to r > 0, theta = pi
    w = cheb_log(-5)
    assert w.r > 0 and w.theta == pytest.approx(math.pi)


def test_cheb_exp_examples():
    assert cheb_exp(0) == pytest.approx(2)
    assert cheb_exp(1j * math.pi / 3) == pytest.approx(1)
    assert cheb_exp(1) == pytest.approx(E_COSH)
    # period 2*pi*i and evenness
    z = 0.7 + 0.3j
    assert cheb_exp(z) == pytest.approx(cheb_exp(z + 2j * math.pi))
    assert cheb_exp(z) == pytest.approx(cheb_exp(-z))


def test_log_exp_round_trip_and_invariants():
    rng = random.Random(42)
    for _ in range(1000):
        z = complex(rng.uniform(-6, 6), rng.uniform(-6, 6))
        w = cheb_log(z)
        assert w.r >= 0
        assert -math.pi < w.theta <= math.pi
        if w.r == 0:
            assert w.theta >= 0
        assert cheb_exp(w.as_complex()) == pytest.approx(z, abs=1e-9 * max(1, abs(z)))


def test_pow_complex_examples():
    assert cheb_pow_complex(3, 2) == pytest.approx(7)
    a = 0.37 - 1.2j
    assert cheb_pow_complex(a, 1) == pytest.approx(a)
    assert cheb_pow_complex(E_COS, 2) == pytest.approx(2 * math.cos(2))
    # integer exponents agree with the ladder
    rng = random.Random(1)
    for _ in range(100):
        x = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        n = rng.randint(0, 30)
        direct = complex(cheb_pow_ladder(x, n))
        assert cheb_pow_complex(x, n) == pytest.approx(
            direct, rel=1e-12, abs=1e-12 * max(1, abs(direct))
        )


def test_principal_radical():
    assert principal_radical(2, 7) == pytest.approx(2)
    assert principal_radical(7, 2) == pytest.approx(3)
    v = principal_radical(-3, 2)
    assert v == pytest.approx(1j)  # positive imaginary part on the cut
    for t in (3 + 1j, -0.5 + 2j, 5, -9):
        for n, m in ((2, 3), (3, 4), (5, 2)):
            a = principal_radical(principal_radical(t, n), m)
            b = principal_radical(principal_radical(t, m), n)
            c = principal_radical(t, n * m)
            assert a == pytest.approx(b, abs=1e-10)
            assert a == pytest.approx(c, abs=1e-10)
    v = rational_power(2.5, 1, 2)
    assert v * v - 2 == pytest.approx(2.5)


def test_radical_satisfies_power():
    rng = random.Random(3)
    for _ in range(300):
        t = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        n = rng.randint(1, 9)
        v = principal_radical(t, n)
        assert cheb_pow_ladder(v, n) == pytest.approx(t, abs=1e-10 * max(1, abs(t)))


def test_exponent_law_on_valid_domain():
    # (a^x)^y = a^(xy) requires the intermediate exponent to stay inside the
    # principal branch strip; rejection-sample accordingly.
    rng = random.Random(11)
    checked = 0
    while checked < 500:
        a = complex(rng.uniform(-6, 6), rng.uniform(-6, 6))
        if a.imag == 0 and a.real <= -2 + 0.05:
            continue
        x = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        y = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        L = cheb_log(a).as_complex()
        for w in (x * L, x * y * L):
            if not (abs(w.imag) < math.pi - 0.05 and w.real > -20):
                break
            if w.real < 0 and abs(w.real) > 0.05:
                break
        else:
            lhs = cheb_pow_complex(cheb_pow_complex(a, x), y)
            rhs = cheb_pow_complex(a, x * y)
            assert abs(lhs - rhs) < 1e-9 * max(1, abs(rhs)), (a, x, y)
            checked += 1


def test_theorem_z_identity():
    # (z + 1/z)^k = z^k + z^-k with principal powers, z off (-1, 0]
    rng = random.Random(5)
    checked = 0
    while checked < 400:
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if abs(z) < 0.2 or abs(z) > 3:
            continue
        if abs(z.imag) < 1e-3 and -1.05 < z.real < 0.05:
            continue
        k = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        lhs = cheb_pow_complex(z + 1 / z, k)
        rhs = z**k + z**-k
        assert abs(lhs - rhs) < 1e-9 * max(1, abs(rhs)), (z, k)
        checked += 1


def test_limit_definitions_exact_ladder():
    # (2 +- h^2)^(1/h) through exact rational ladders; the error decreases
    # at least first order in h (the acceptance suite runs the full range)
    errs_cosh, errs_cos = [], []
    for j in (2, 3, 4):
        n = 10**j
        h2 = Fraction(1, n * n)
        plus = cheb_pow_ladder(2 + h2, n)
        minus = cheb_pow_ladder(2 - h2, n)
        errs_cosh.append(abs(float(plus) - E_COSH))
        errs_cos.append(abs(float(minus) - E_COS))
    for errs in (errs_cosh, errs_cos):
        for a, b in zip(errs, errs[1:]):
            assert b < a / 9.0, errs  # at least first-order decay per decade


def test_branch_examples():
    roots = sorted(branch_radical(1, 3, l).real for l in (0, 2, 4))
    want = sorted(
        [2 * math.cos(math.pi / 9), 2 * math.cos(7 * math.pi / 9), 2 * math.cos(13 * math.pi / 9)]
    )
    assert roots == pytest.approx(want, abs=1e-12)
    assert branch_radical(2, 2, 0) == pytest.approx(2)
    assert branch_equiv(0, 2 * 7 - 1, 7)
    assert branch_equiv(3, 3 + 2 * 5, 5)
    assert not branch_equiv(0, 2, 5)


def test_branch_count_distinct():
    # exactly n distinct branch functions; sample a probe point
    t = 1.3 + 0.7j
    for n in range(1, 8):
        vals = [branch_radical(t, n, l) for l in range(2 * n)]
        distinct = []
        for v in vals:
            if not any(abs(v - d) < 1e-9 for d in distinct):
                distinct.append(v)
        assert len(distinct) == n, n


def test_branch_tiling():
    # even-index branches reproduce the full root multiset of C_n(x) = t
    import numpy as np

    rng = random.Random(17)
    for _ in range(200):
        t = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        n = rng.randint(1, 12)
        mine = [branch_radical(t, n, 2 * i) for i in range(n)]
        coeffs = list(cheb_first_kind(n).coeffs)
        coeffs[0] -= t
        other = list(np.roots(list(reversed(coeffs))))
        for v in mine:
            k = min(range(len(other)), key=lambda idx: abs(other[idx] - v))
            assert abs(other[k] - v) < 1e-8 * max(1, abs(v)), (t, n)
            other.pop(k)


def test_branch_combination_matches_branch():
    rng = random.Random(23)
    checked = 0
    while checked < 400:
        t = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        # stay off both cut rays, where index conventions are boundary cases
        if abs(t.imag) < 0.05 and abs(t.real) >= 1.95:
            continue
        n = rng.randint(1, 8)
        i = rng.randint(0, n - 1)
        a = branch_combination(t, n, i)
        b = branch_radical(t, n, i)
        assert abs(a - b) < 1e-9 * max(1, abs(b)), (t, n, i)
        checked += 1
    # the named on-cut cases
    assert branch_combination(-5, 2, 1) == pytest.approx(branch_radical(-5, 2, 1), abs=1e-9)
    assert branch_combination(-5, 2, 0) == pytest.approx(branch_radical(-5, 2, 0), abs=1e-9)


def test_second_kind_values():
    s, _ = second_kind_num(5, 1)
    assert s == pytest.approx(-1, abs=1e-11)
    s, _ = second_kind_num(3, 2.5)
    assert s == pytest.approx(5.25, abs=1e-11)
    _, u = second_kind_num(3, 2)
    assert u == pytest.approx(3, abs=1e-11)


def test_second_kind_matches_exact_polys():
    rng = random.Random(2)
    for k in range(1, 22):
        sk = cheb_second_kind(k)
        for _ in range(10):
            x = complex(rng.uniform(-3.5, 3.5), rng.uniform(-1, 1))
            s, _ = second_kind_num(k, x)
            exact = complex(sk(x))
            assert abs(s - exact) <= 1e-11 * max(1, abs(exact)), (k, x)
    # odd-order U agrees with the integer polynomial
    for k in range(1, 22, 2):
        uk = u_odd_poly(k)
        for x in (0.5, -1.2, 2.0005, 3.1, 1 + 0.5j):
            _, u = second_kind_num(k, x)
            assert abs(u - complex(uk(x))) <= 1e-11 * max(1, abs(uk(x))), (k, x)


def test_derivative_law():
    # (x^k)' = k S_k(x), probed by finite differences
    rng = random.Random(31)
    for _ in range(100):
        k = rng.uniform(-4, 4)
        x = rng.uniform(-4, 4)
        if min(abs(x - 2), abs(x + 2)) < 0.15:
            continue
        h = 1e-6
        fd = (cheb_pow_complex(x + h, k) - cheb_pow_complex(x - h, k)) / (2 * h)
        s, _ = second_kind_num(k, x)
        assert abs(fd - k * s) < 1e-6 * max(1, abs(k * s)), (k, x)


def test_series_near2():
    assert series_cheb_pow_near2(2, 3.7) == pytest.approx(2)
    assert series_cheb_pow_near2(3, 4) == pytest.approx(47, abs=1e-12)
    assert series_cheb_pow_near2(2.5, 0.5) == pytest.approx(math.sqrt(4.5), abs=1e-12)
    with pytest.raises(ValueError):
        series_cheb_pow_near2(6.5, 1.0)
    # agreement with the closed form inside the well conditioned region
    rng = random.Random(4)
    for _ in range(200):
        r = rng.uniform(0, 1.5)
        phi = rng.uniform(-math.pi / 2, math.pi / 2)
        x = 2 + r * cmath.exp(1j * phi)
        k = complex(rng.uniform(-4, 4), rng.uniform(-2, 2))
        a = series_cheb_pow_near2(x, k)
        b = cheb_pow_complex(x, k)
        assert abs(a - b) < 1e-10 * max(1, abs(b)), (x, k)


def test_series_hypergeometric_cross_check():
    for x in (2.5, 1.2, 3.9, 2 + 1j, 0.5):
        for k in (0.5, 2.2, -1.3, 1 + 0.5j):
            z = (2 - complex(x)) / 4
            if abs(z) >= 1:
                continue
            a = series_cheb_pow_near2(x, k)
            b = 2 * hypergeometric_2f1(k, -k, 0.5, z)
            assert abs(a - b) < 1e-10 * max(1, abs(a)), (x, k)


def test_hypergeometric_derivative_formula():
    # d^n/dx^n of the power equals (n-1)! k C(k+n-1, 2n-1) F(n+k, n-k, n+1/2, (2-x)/4)
    def gen_binom(a, m):
        out = 1.0
        for j in range(m):
            out *= (a - j) / (j + 1)
        return out

    rng = random.Random(6)
    for _ in range(40):
        k = rng.uniform(0.3, 3)
        x = rng.uniform(1.2, 2.8)
        h = 1e-4
        f = lambda z: cheb_pow_complex(z, k)
        d1 = (f(x + h) - f(x - h)) / (2 * h)
        d2 = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h)
        for n, fd in ((1, d1), (2, d2)):
            pref = math.factorial(n - 1) * k * gen_binom(k + n - 1, 2 * n - 1)
            val = pref * hypergeometric_2f1(n + k, n - k, n + 0.5, (2 - x) / 4)
            tol = 1e-5 if n == 1 else 1e-3
            assert abs(fd - val) < tol * max(1, abs(val)), (k, x, n)


def test_series_near0_and_puiseux():
    for k in (3, 0.5, 1.7, 2 + 0.3j):
        for x in (0.7, -1.2, 0.3 + 0.4j, 1.2):
            b = cheb_pow_complex(x, k)
            assert abs(series_near0(x, k) - b) < 1e-9 * max(1, abs(b)), ("near0", k, x)
            assert abs(puiseux_neg2(x, k) - b) < 1e-9 * max(1, abs(b)), ("pui", k, x)
    # 0^k = 2 cos(pi k / 2); at k = 1 this is 0
    assert abs(series_near0(0, 1)) < 1e-14
    assert series_near0(0, 0.5) == pytest.approx(2 * math.cos(math.pi / 4))
    # ramified point: (-2)^(1/3) = 2 cos(pi/3) = 1
    assert puiseux_neg2(-2, 1 / 3) == pytest.approx(1, abs=1e-9)
    assert series_near0(1.2, 3) == pytest.approx(cheb_first_kind(3)(1.2), abs=1e-9)


def test_u_series_identity_odd_integers():
    # the series evaluation of U_k matches the exact polynomial, k odd <= 21
    rng = random.Random(8)
    for k in range(1, 22, 2):
        uk = u_odd_poly(k)
        for _ in range(10):
            x = 2 + rng.uniform(-3.9, 3.9)
            _, u = second_kind_num(k, x)
            assert abs(u - uk(x)) < 1e-11 * max(1, abs(uk(x))), (k, x)


def test_orthogonality():
    assert orthogonality_integral(3, 5) == pytest.approx(0, abs=1e-9)
    assert orthogonality_integral(4, 4) == pytest.approx(2 * math.pi, abs=1e-9)
    assert orthogonality_integral(0, 0) == pytest.approx(4 * math.pi, abs=1e-9)
    for n in range(0, 12, 3):
        for m in range(0, 12, 2):
            got = orthogonality_integral(n, m)
            if n != m:
                assert abs(got) < 1e-9, (n, m)
            elif n == 0:
                assert got == pytest.approx(4 * math.pi, abs=1e-9)
            else:
                assert got == pytest.approx(2 * math.pi, abs=1e-9)


def test_ode_residuals():
    r1, r2 = ode_residuals(3, 1.5)
    assert abs(r1) < 1e-8 and abs(r2) < 1e-8
    r1, r2 = ode_residuals(0.5, 3)
    assert abs(r1) < 1e-7 and abs(r2) < 1e-7
    _, r2 = ode_residuals(0.7, 2.5, solution="neg_pow")
    assert abs(r2) < 1e-7
    _, r2 = ode_residuals(1.3, 2.7, solution="second_kind")
    assert abs(r2) < 1e-7


def test_second_kind_derivative_closed_form():
    rng = random.Random(13)
    for _ in range(60):
        k = rng.uniform(-3, 3)
        x = rng.uniform(-4, 4)
        if min(abs(x - 2), abs(x + 2)) < 0.2:
            continue
        h = 1e-5
        fd = (second_kind_num(k, x + h)[0] - second_kind_num(k, x - h)[0]) / (2 * h)
        assert abs(second_kind_derivative(k, x) - fd) < 1e-5 * max(1, abs(fd)), (k, x)


def test_log_limit_of_second_kind():
    # (1/k) sqrt(x^2-4) S_k(x) -> +-2 log_c(x) as k -> 0
    for x in (3.0, -4.0, 1.0 + 2.0j, 0.3):
        target = 2 * cheb_log(x).as_complex()
        errs = []
        for j in (3, 4, 5, 6):
            k = 10.0**-j
            val = cmath.sqrt(complex(x) ** 2 - 4) * second_kind_num(k, x)[0] / k
            errs.append(min(abs(val - target), abs(val + target)))
        assert errs[-1] < 1e-6, (x, errs)
        assert errs[0] < 1e-4
