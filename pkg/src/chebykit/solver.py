"""Equation solving with Chebyshev radicals.

The pieces: indexed root sets for C_n(x) = t and the linear algebra that
recovers all roots from two of them; the depressed cubic solved by
third-order Chebyshev radicals; explicit tower witnesses converting between
ordinary and Chebyshev radical extensions (complex-numeric side); the
characteristic-two constructions over GF(2^m), where Chebyshev radicals
solve strictly more (Artin-Schreier quadratics); and the degree-12
difference resolvent used to put D4 quartics into biquadratic form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .analytic import cheb_exp, cheb_log, principal_radical
from .exactcore import IntPolynomial, cheb_second_kind
from .gf2m import GF2m, GF2mElement, embed, retract


# ---------------------------------------------------------------------------
# Indexed root sets


@dataclass(frozen=True)
class IndexedRootSet:
    """The n roots of C_n(x) = t written r_i = zeta^i u + zeta^-i / u.

    zeta is the primitive n-th root of unity exp(2*pi*i/n), u solves
    u + 1/u = r_0 with r_0 the principal Chebyshev root of t, and
    mu = zeta + 1/zeta.  Index arithmetic is mod n and satisfies
    r_{k+i} + r_{k-i} = C_i(mu) * r_k.
    """

    t: complex
    n: int
    zeta: complex
    u: complex
    mu: complex
    roots: tuple

    def root(self, i: int) -> complex:
        return self.roots[i % self.n]


def indexed_roots(t, n: int) -> IndexedRootSet:
    if n < 1:
        raise ValueError("order must be positive")
    w = cheb_log(t).as_complex() / n
    u = cmath.exp(w)
    zeta = cmath.exp(2j * cmath.pi / n)
    roots = tuple(zeta**i * u + zeta**-i / u for i in range(n))
    return IndexedRootSet(complex(t), n, zeta, u, zeta + 1 / zeta, roots)


def _mu_pow(rs: IndexedRootSet, i: int) -> complex:
    """C_i(mu) = zeta^i + zeta^-i, computed trigonometrically for stability."""
    return 2.0 * math.cos(2.0 * math.pi * (i % rs.n) / rs.n)


def sibling_quadratic(rs: IndexedRootSet, k: int, i: int):
    """Monic quadratic with roots r_{k+i} and r_{k-i}.

    Coefficients (1, -C_i(mu) * r_k, C_2(r_k) + C_{2i}(mu)).
    """
    rk = rs.root(k)
    b = -_mu_pow(rs, i) * rk
    c = (rk * rk - 2.0) + _mu_pow(rs, 2 * i)
    return (1.0, b, c)


def recover_root(rs: IndexedRootSet, i: int, j: int, k: int) -> complex:
    """r_{i + k(j-i)} as S_k(C_e(mu)) r_j - S_{k-1}(C_e(mu)) r_i, e = j - i."""
    e = j - i
    me = _mu_pow(rs, e)
    sk = complex(cheb_second_kind(abs(k))(me)) if k >= 0 else -complex(cheb_second_kind(-k)(me))
    skm = (
        complex(cheb_second_kind(k - 1)(me))
        if k - 1 >= 0
        else -complex(cheb_second_kind(1 - k)(me))
    )
    return sk * rs.root(j) - skm * rs.root(i)


def recover_all(rs: IndexedRootSet, i: int, j: int) -> list:
    """All n roots from r_i and r_j; needs the step j - i prime to n."""
    e = (j - i) % rs.n
    if math.gcd(e, rs.n) != 1:
        raise ValueError(f"step {e} is not prime to the order {rs.n}")
    return [recover_root(rs, i, j, k) for k in range(rs.n)]


# ---------------------------------------------------------------------------
# The depressed cubic in Chebyshev radicals


def cubic_eps(b, c):
    """The discriminant data (delta, epsilon) of x^3 + b x + c.

    delta = -4b^3 - 27c^2 and epsilon = -2 - 27 c^2 / b^3; the identity
    epsilon = 2 + delta/b^3 is asserted exactly.
    """
    b, c = Fraction(b), Fraction(c)
    if b == 0:
        raise ValueError("b must be nonzero")
    delta = -4 * b**3 - 27 * c**2
    eps = -2 - 27 * c**2 / b**3
    assert eps == 2 + delta / b**3
    return delta, eps


def cubic_cheb_solve(b, c):
    """The three roots of x^3 + b x + c via Chebyshev cube radicals.

    Substituting z = sqrt(-3/b) x turns the equation into C_3(z) = h with
    h = -c (-3/b)^(3/2); the roots are then z1 = radical(h), z2 =
    -radical(-h), z3 = -z1 - z2, pulled back through the substitution.
    """
    b, c = complex(b), complex(c)
    if b == 0:
        raise ValueError("b = 0 is a pure cube root; use rational_power")
    w = cmath.sqrt(-3.0 / b)
    h = -c * w**3
    z1 = principal_radical(h, 3)
    z2 = -principal_radical(-h, 3)
    z3 = -z1 - z2
    return tuple(z / w for z in (z1, z2, z3))


# ---------------------------------------------------------------------------
# Tower witnesses


@dataclass(frozen=True)
class TowerStep:
    kind: str  # "ordinary-root" | "chebyshev-root" | "square-root"
    degree: int
    radicand: complex
    value: complex

    def residual(self) -> float:
        if self.kind == "chebyshev-root":
            from .exactcore import cheb_pow_ladder

            got = cheb_pow_ladder(self.value, self.degree)
        elif self.kind == "square-root":
            got = self.value * self.value
        else:
            got = self.value**self.degree
        return abs(got - self.radicand)


@dataclass
class TowerWitness:
    """An explicit chain of radical adjunctions solving one equation.

    `steps` list the adjunctions in order; `roots` are the final solutions
    of the target relation, and `note` records degenerate handling.
    """

    kind: str
    target: dict
    steps: list = field(default_factory=list)
    roots: list = field(default_factory=list)
    note: str = ""

    def max_step_residual(self) -> float:
        return max((s.residual() for s in self.steps), default=0.0)

    def to_json(self):
        return {
            "kind": self.kind,
            "target": {k: _c2j(v) if isinstance(v, complex) else v for k, v in self.target.items()},
            "steps": [
                {
                    "kind": s.kind,
                    "degree": s.degree,
                    "radicand": _c2j(s.radicand),
                    "value": _c2j(s.value),
                }
                for s in self.steps
            ],
            "roots": [_c2j(r) for r in self.roots],
            "note": self.note,
        }


def _c2j(z: complex):
    z = complex(z)
    return [z.real, z.imag]


def cheb_to_radical_witness(q: int, t) -> TowerWitness:
    """Solve C_q(x) = t with ordinary radicals (q an odd prime).

    Adjoin a primitive q-th root of unity, s = sqrt(t^2 - 4), and the
    ordinary q-th root r of (s + t)/2; then zeta^i r + zeta^-i / r run
    through the q solutions.  t = +-2 degenerates to the closed cosine
    forms.
    """
    t = complex(t)
    wit = TowerWitness(kind="cheb-to-radical", target={"relation": f"C_{q}(x) = t", "t": t})
    if abs(t - 2.0) < 1e-13 or abs(t + 2.0) < 1e-13:
        sign = 1.0 if t.real > 0 else -1.0
        base = 0.0 if sign > 0 else math.pi / q
        roots = [2.0 * math.cos(base + 2.0 * math.pi * k / q) for k in range(q)]
        wit.roots = [complex(r) for r in roots]
        wit.note = f"degenerate t = {int(sign) * 2}: closed cosine forms"
        return wit
    zeta = cmath.exp(2j * cmath.pi / q)
    wit.steps.append(TowerStep("ordinary-root", q, complex(1.0), zeta))
    s = cmath.sqrt(t * t - 4.0)
    wit.steps.append(TowerStep("square-root", 2, t * t - 4.0, s))
    r = cmath.exp(cmath.log((s + t) / 2.0) / q)
    wit.steps.append(TowerStep("ordinary-root", q, (s + t) / 2.0, r))
    wit.roots = [zeta**i * r + zeta**-i / r for i in range(q)]
    return wit


def radical_to_cheb_witness(q: int, t) -> TowerWitness:
    """Solve x^q = t with Chebyshev radicals (q an odd prime, t != 0).

    The tower: mu != 2 with C_q(mu) = 2; lambda with C_2(lambda) =
    C_2(mu) - 4, giving the root of unity zeta = (mu + lambda)/2; then s
    with C_q(s) = t + 1/t and r with C_2(r) = C_2(s) - 4, so w = (s + r)/2
    satisfies w^q = t or w^-q = t.
    """
    t = complex(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    wit = TowerWitness(kind="radical-to-cheb", target={"relation": f"x^{q} = t", "t": t})
    mu = 2.0 * math.cos(2.0 * math.pi / q)  # a nontrivial Chebyshev root of two
    wit.steps.append(TowerStep("chebyshev-root", q, complex(2.0), mu))
    lam = cheb_exp(cheb_log((mu * mu - 2.0) - 4.0).as_complex() / 2.0)
    wit.steps.append(TowerStep("chebyshev-root", 2, (mu * mu - 2.0) - 4.0, lam))
    zeta = (mu + lam) / 2.0
    s = principal_radical(t + 1.0 / t, q)
    wit.steps.append(TowerStep("chebyshev-root", q, t + 1.0 / t, s))
    r = cheb_exp(cheb_log((s * s - 2.0) - 4.0).as_complex() / 2.0)
    wit.steps.append(TowerStep("chebyshev-root", 2, (s * s - 2.0) - 4.0, r))
    w = (s + r) / 2.0
    if abs(w**q - t) > abs(w ** (-q) - t):
        w = 1.0 / w
    wit.roots = [zeta**i * w for i in range(q)]
    return wit


# ---------------------------------------------------------------------------
# Characteristic two


@dataclass
class Char2Result:
    value: GF2mElement
    extended: bool  # True when the answer lives in the quadratic extension
    helper: GF2mElement | None = None  # the Chebyshev radical used


_CUBE_TABLES: dict = {}


def _cheb_cube_values(F: GF2m) -> dict:
    """Map v -> list of b in F with C_3(b) = b^3 + b = v (char 2), cached per field."""
    key = (F.m, F.modulus)
    table = _CUBE_TABLES.get(key)
    if table is None:
        table = {}
        for b in F.elements():
            v = (b * b * b + b).bits
            table.setdefault(v, []).append(b)
        _CUBE_TABLES[key] = table
    return table


def char2_unit_quadratic(a: GF2mElement, allow_extension: bool = True) -> Char2Result:
    """Solve c^2 + a c + 1 = 0 by a Chebyshev cube radical (char 2, a not in {0,1}).

    Takes b with C_3(b) = a/(a+1)^3 and b != a/(a+1); then c = (a+1) b.
    When no such b exists in the field of a, the construction moves to the
    quadratic extension (reported via `extended`); with allow_extension
    False that case raises instead.
    """
    F = a.field
    one = F.one()
    if a.is_zero() or a == one:
        raise ValueError("a must differ from 0 and 1")
    target = a / (a + one) ** 3
    excluded = a / (a + one)
    for b in _cheb_cube_values(F).get(target.bits, []):
        if b != excluded:
            c = (a + one) * b
            assert (c * c + a * c + one).is_zero()
            return Char2Result(c, extended=False, helper=b)
    if not allow_extension:
        raise ValueError("no suitable Chebyshev cube root in the base field")
    big = GF2m(2 * F.m)
    a2 = embed(a, big)
    one2 = big.one()
    target2 = a2 / (a2 + one2) ** 3
    excluded2 = a2 / (a2 + one2)
    for b in _cheb_cube_values(big).get(target2.bits, []):
        if b != excluded2:
            c = (a2 + one2) * b
            assert (c * c + a2 * c + one2).is_zero()
            return Char2Result(c, extended=True, helper=b)
    raise AssertionError("construction failed even in the quadratic extension")


def char2_artin_schreier(t: GF2mElement) -> Char2Result:
    """Solve w^2 + w + t = 0 over GF(2^m) by Chebyshev radicals.

    For t not 1: s = sqrt(t + 1) (inverse Frobenius), then r with
    C_3(r) = t / s^3 and r != 1/s gives w = s r.  For t = 1 the roots of
    x^2 + x + 1 are the nonzero solutions of C_5(x) = 0.  The root lies in
    the base field exactly when the absolute trace of t vanishes; otherwise
    the same construction runs in the quadratic extension and `extended`
    is set.
    """
    F = t.field
    one = F.one()
    if t.is_zero():
        return Char2Result(F.zero(), extended=False)

    def attempt(field: GF2m, tt: GF2mElement) -> GF2mElement | None:
        o = field.one()
        if tt == o:
            # x^2+x+1 divides C_5(x)/x in char 2; scan its nonzero roots
            for x in field.elements():
                if not x.is_zero() and (x * x + x + o).is_zero():
                    return x
            return None
        s = (tt + o).sqrt()
        if s.is_zero():
            return None
        target = tt / (s * s * s)
        banned = s.inverse()
        for r in _cheb_cube_values(field).get(target.bits, []):
            if r != banned:
                w = s * r
                if (w * w + w + tt).is_zero():
                    return w
        return None

    w = attempt(F, t)
    if w is not None:
        return Char2Result(w, extended=False)
    big = GF2m(2 * F.m)
    w2 = attempt(big, embed(t, big))
    if w2 is None:
        raise AssertionError("Artin-Schreier construction failed in the extension")
    back = retract(w2, F)
    if back is not None:
        return Char2Result(back, extended=False)
    return Char2Result(w2, extended=True)


# ---------------------------------------------------------------------------
# Degree-12 difference resolvent for quartics


def _frac_poly_divmod(num, den):
    """Division of Fraction-coefficient polynomials (lists, ascending)."""
    num = list(num)
    dn = len(den) - 1
    while den and den[-1] == 0:
        den = den[:-1]
        dn -= 1
    q = [Fraction(0)] * max(0, len(num) - dn)
    inv = Fraction(1) / den[-1]
    for i in range(len(num) - dn - 1, -1, -1):
        coef = num[i + dn] * inv
        q[i] = coef
        for j, d in enumerate(den):
            num[i + j] -= coef * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


def _sylvester_resultant(a, b):
    """Resultant of two Fraction polynomials via exact Gaussian elimination."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    mat = [[Fraction(0)] * size for _ in range(size)]
    for i in range(n):
        for j, c in enumerate(reversed(a)):
            mat[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(reversed(b)):
            mat[n + i][i + j] = c
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for row in range(col, size):
            if mat[row][col] != 0:
                pivot = row
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = Fraction(1) / mat[col][col]
        for row in range(col + 1, size):
            if mat[row][col] != 0:
                factor = mat[row][col] * inv
                for j in range(col, size):
                    mat[row][j] -= factor * mat[col][j]
    return det


def _poly_roots_dk(coeffs, iterations=600):
    """Durand-Kerner roots of a complex-coefficient polynomial (ascending)."""
    n = len(coeffs) - 1
    lead = coeffs[-1]
    monic = [complex(c) / lead for c in coeffs]
    radius = 1.0 + max(abs(c) for c in monic[:-1])
    roots = [radius * cmath.exp(2j * cmath.pi * (k + 0.25) / n) for k in range(n)]
    for _ in range(iterations):
        shift = 0.0
        new = []
        for i, r in enumerate(roots):
            num = _ceval(monic, r)
            den = complex(1.0)
            for j, s in enumerate(roots):
                if j != i:
                    den *= r - s
            delta = num / den if den != 0 else 0.0
            new.append(r - delta)
            shift = max(shift, abs(delta))
        roots = new
        if shift < 1e-14:
            break
    return roots


def _ceval(coeffs, x):
    acc = complex(0.0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass
class D4ResolventReport:
    resolvent: list  # Fraction coefficients, even polynomial of degree 12
    biquadratic: tuple | None  # (B, C) with z^4 + B z^2 + C | resolvent
    is_d4: bool
    detail: str

    def resolvent_int(self) -> IntPolynomial | None:
        if all(c.denominator == 1 for c in self.resolvent):
            return IntPolynomial(tuple(int(c) for c in self.resolvent))
        return None

    def to_json(self):
        return {
            "resolvent": [str(c) for c in self.resolvent],
            "biquadratic": None
            if self.biquadratic is None
            else [str(self.biquadratic[0]), str(self.biquadratic[1])],
            "is_d4": self.is_d4,
            "detail": self.detail,
        }


def _difference_resolvent(fcoeffs):
    """Q(w) of degree 6 with Res_y(f(y), f(y+z))/z^4 = Q(z^2), exactly.

    Evaluated at seven integer points and interpolated over Q; f is the
    monic quartic with ascending Fraction coefficients.
    """
    points = []
    for z0 in range(1, 8):
        shifted = _shift_poly(fcoeffs, Fraction(z0))
        res = _sylvester_resultant(fcoeffs, shifted)
        points.append((Fraction(z0 * z0), res / Fraction(z0) ** 4))
    # Lagrange interpolation, degree 6 through 7 points
    out = [Fraction(0)] * 7
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            basis = _poly_mul_frac(basis, [-xj, Fraction(1)])
            denom *= xi - xj
        scale = yi / denom
        for k, c in enumerate(basis):
            out[k] += scale * c
    return out


def _shift_poly(coeffs, a):
    """f(y + a) for ascending Fraction coefficients."""
    out = [Fraction(0)] * len(coeffs)
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        for j in range(i + 1):
            out[j] += c * math.comb(i, j) * a ** (i - j)
    return out


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _rationalize(x: float, max_den: int = 10**6) -> Fraction | None:
    fr = Fraction(x).limit_denominator(max_den)
    if abs(float(fr) - x) < 1e-6 * max(1.0, abs(x)):
        return fr
    return None


def _quartic_disc(f):
    """Discriminant of a monic quartic (ascending Fraction coefficients)."""
    df = [i * c for i, c in enumerate(f)][1:]
    return _sylvester_resultant(f, df)


def _splits_over_quadratic(f, kernel: int, roots) -> bool:
    """Whether the quartic factors into conjugate quadratics over Q(sqrt(kernel)).

    Candidates come from numeric root pairings; a candidate counts only when
    the exact product over Q(sqrt(kernel)) reproduces f.  Elements of the
    quadratic field are (a, b) = a + b*sqrt(kernel) with Fraction parts.
    """
    sq = cmath.sqrt(complex(kernel))

    def decompose(v1, v2):
        # v1 = u + w, v2 = u - w with u rational and w a rational multiple of sq
        mid = (v1 + v2) / 2
        if abs(mid.imag) > 1e-6 * max(1.0, abs(mid)):
            return None
        u = _rationalize(mid.real)
        wc = (v1 - v2) / 2
        if abs(sq) < 1e-12:
            return None
        ratio = wc / sq
        if abs(ratio.imag) > 1e-6 * max(1.0, abs(ratio)):
            return None
        b = _rationalize(ratio.real)
        if u is None or b is None:
            return None
        return u, b

    def qmul(x, y):
        return (
            x[0] * y[0] + x[1] * y[1] * kernel,
            x[0] * y[1] + x[1] * y[0],
        )

    for (i, j), (k, l) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        s1, s2 = roots[i] + roots[j], roots[k] + roots[l]
        p1, p2 = roots[i] * roots[j], roots[k] * roots[l]
        ds = decompose(s1, s2)
        dp = decompose(p1, p2)
        if ds is None or dp is None:
            continue
        s = (ds[0], ds[1])
        pr = (dp[0], dp[1])
        s_conj = (ds[0], -ds[1])
        p_conj = (dp[0], -dp[1])
        # (x^2 - s x + p)(x^2 - s' x + p') expanded over the field
        c3 = (-(s[0] + s_conj[0]), -(s[1] + s_conj[1]))
        c2_f = qmul(s, s_conj)
        c2 = (c2_f[0] + pr[0] + p_conj[0], c2_f[1] + pr[1] + p_conj[1])
        t1 = qmul(s, p_conj)
        t2 = qmul(s_conj, pr)
        c1 = (-(t1[0] + t2[0]), -(t1[1] + t2[1]))
        c0 = qmul(pr, p_conj)
        got = [c0, c1, c2, c3]
        if all(part[1] == 0 for part in got) and [part[0] for part in got] == list(f[:4]):
            # nontrivial only when the factors genuinely need sqrt(kernel)
            if ds[1] != 0 or dp[1] != 0:
                return True
    return False


def d4_resolvent(a1, a2, a3, a4) -> D4ResolventReport:
    """Difference resolvent of x^4 + a1 x^3 + a2 x^2 + a3 x + a4.

    Computes the degree-12 polynomial with roots r_i - r_j (i != j) exactly
    via resultants, then extracts a rational biquadratic factor
    z^4 + B z^2 + C whose roots are the diagonal differences; candidates
    come from numeric root pairings and are certified by exact division.

    The square-group verdict combines the factor shape with the group
    tests it cannot see alone: multiple (or no) pairing factors reject
    immediately (Klein group, irreducible-resolvent groups); a square
    discriminant rejects; and the cyclic group -- which produces the same
    (4)(4)^2 shape as some square-group quartics -- is excluded by an
    exact splitting of the quartic into conjugate quadratics over
    Q(sqrt(disc)).
    """
    f = [Fraction(a4), Fraction(a3), Fraction(a2), Fraction(a1), Fraction(1)]
    q6 = _difference_resolvent(f)
    resolvent = [Fraction(0)] * 13
    for i, c in enumerate(q6):
        resolvent[2 * i] = c

    roots = _poly_roots_dk([complex(c) for c in f])
    pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]
    found = []
    for (i, j), (k, l) in pairings:
        wa = (roots[i] - roots[j]) ** 2
        wb = (roots[k] - roots[l]) ** 2
        s, pr = wa + wb, wa * wb
        if abs(s.imag) > 1e-6 * max(1.0, abs(s)) or abs(pr.imag) > 1e-6 * max(1.0, abs(pr)):
            continue
        sq = _rationalize(s.real)
        pq = _rationalize(pr.real)
        if sq is None or pq is None:
            continue
        cand = [pq, -sq, Fraction(1)]  # w^2 - s w + p
        quot, rem = _frac_poly_divmod(list(q6), cand)
        if rem:
            continue
        if (sq, pq) not in [(x[0], x[1]) for x in found]:
            found.append((sq, pq, quot))
    if len(found) != 1:
        return D4ResolventReport(
            resolvent,
            None,
            False,
            f"no D4 split: {len(found)} rational biquadratic factors from disjoint pairings",
        )
    s, pr, _ = found[0]
    bi = (-s, pr)  # z^4 + B z^2 + C

    # reducibility over Q kills the transitive-group reading outright
    from .factorcyc import rational_roots
    from .numtheory import squarefree_kernel

    lcm = 1
    for c in f:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    if rational_roots(IntPolynomial(tuple(int(c * lcm) for c in f))):
        return D4ResolventReport(resolvent, bi, False, "no D4 split: rational root")

    disc = _quartic_disc(f)
    if disc == 0:
        return D4ResolventReport(resolvent, bi, False, "no D4 split: repeated roots")
    kernel, leftover = squarefree_kernel(disc)
    if leftover != 1:
        return D4ResolventReport(resolvent, bi, False, "undecided: discriminant kernel unfactored")
    if kernel == 1:
        return D4ResolventReport(
            resolvent, bi, False, "no D4 split: square discriminant (Klein/alternating side)"
        )
    if _splits_over_quadratic(f, kernel, roots):
        return D4ResolventReport(
            resolvent, bi, False, "no D4 split: splits over Q(sqrt(disc)) (cyclic quartic)"
        )

    zroots = []
    for i in range(4):
        for j in range(4):
            if i != j:
                zroots.append(roots[i] - roots[j])
    quartics = _rational_quartic_factors(zroots, resolvent, bi)
    if quartics == "d4":
        return D4ResolventReport(resolvent, bi, True, "degree-8 cofactor has no rational quartic split")
    if quartics == "d4-repeated":
        return D4ResolventReport(resolvent, bi, True, "degree-8 cofactor is a repeated rational quartic")
    return D4ResolventReport(resolvent, bi, False, quartics)


def _rational_quartic_factors(zroots, resolvent, bi):
    """Shape of resolvent / (z^4 + B z^2 + C) via bounded rational-quartic search."""
    b, c = bi
    factor = [c, Fraction(0), b, Fraction(0), Fraction(1)]
    cofactor, rem = _frac_poly_divmod([Fraction(x) for x in resolvent], factor)
    assert not rem
    # numeric roots of the cofactor: remove four roots of the biquadratic factor
    remaining = list(zroots)
    for w_root in _poly_roots_dk([complex(c), 0j, complex(b), 0j, 1 + 0j]):
        best = min(range(len(remaining)), key=lambda idx: abs(remaining[idx] - w_root))
        remaining.pop(best)
    assert len(remaining) == 8
    import itertools

    divisors = []
    for combo in itertools.combinations(range(8), 4):
        poly = [1 + 0j]
        for idx in combo:
            poly = _poly_mul_c(poly, [-remaining[idx], 1 + 0j])
        coeffs = []
        ok = True
        for cc in poly:
            if abs(cc.imag) > 1e-5 * max(1.0, abs(cc)):
                ok = False
                break
            r = _rationalize(cc.real)
            if r is None:
                ok = False
                break
            coeffs.append(r)
        if not ok:
            continue
        quot, rem = _frac_poly_divmod(list(cofactor), coeffs)
        if not rem and coeffs not in [d[0] for d in divisors]:
            divisors.append((coeffs, quot))
    if not divisors:
        return "d4"
    if len(divisors) == 1:
        coeffs, quot = divisors[0]
        # repeated factor: quotient equals the factor again
        if [Fraction(x) for x in quot] == coeffs:
            return "d4-repeated"
    return f"no D4 split: degree-8 cofactor has {len(divisors)} rational quartic factor(s)"


def _poly_mul_c(a, b):
    out = [0j] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out
