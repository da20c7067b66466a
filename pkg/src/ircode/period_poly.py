"""Closed-form roots of the reduced period polynomial of small order.

For N2 in SUPPORTED_ORDERS, the roots xi_j = 1 + N2*eta_j of the reduced
period polynomial of GF(p^k) are given by explicit integer formulas. These
formulas are built from a handful of prime representations (see
``diophantine``) and are dispatched on p mod N2. Every formula is evaluated in
exact arithmetic, and each result is checked against the two identities every
factorization must satisfy.

Sign conventions fix the choice among conjugate representations. They are
tied to an integer generator g of GF(p)*, which we take to be the norm of the
field's primitive element: g = alpha^((r-1)/(p-1)). The root multiset does not
depend on this choice; only the labelling of the roots does.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import isprime

from . import diophantine as dio
from .cyclotomy import PeriodFactorization
from .errors import HypothesisViolated, IntegralityFailure, NotPrime, ParameterError, UnsupportedOrder
from .finite_field import build_field

SUPPORTED_ORDERS = frozenset({1, 2, 3, 4, 5, 6, 8, 12})


def _sign(e):
    """(-1)^e for any integer e."""
    return -1 if e % 2 else 1


def _exact(x, what="root"):
    x = Fraction(x)
    if x.denominator != 1:
        raise IntegralityFailure(f"{what} evaluates to {x}, not an integer")
    return x.numerator


def multiplicative_order_mod(p, n):
    if n == 1:
        return 1
    x, o = p % n, 1
    while x != 1:
        x = x * p % n
        o += 1
        if o > n:
            raise ValueError(f"{p} is not invertible mod {n}")
    return o


def is_semiprimitive(p, N2):
    """True when N2 > 2 and -1 is a power of p modulo N2."""
    if N2 <= 2 or p % N2 == 0 or N2 % p == 0:
        return False
    o = multiplicative_order_mod(p, N2)
    return o % 2 == 0 and pow(p, o // 2, N2) == N2 - 1


def has_closed_form(p, N2):
    return N2 in SUPPORTED_ORDERS or is_semiprimitive(p, N2)


class _Field:
    """Lazy access to GF(p^k) for the generator-dependent sign rules."""

    def __init__(self, p, k, generator=None):
        self.p, self.k = p, k
        self._ctx = None
        self._g = generator

    @property
    def ctx(self):
        if self._ctx is None:
            self._ctx = build_field(self.p, self.k)
        return self._ctx

    @property
    def generator(self):
        if self._g is None:
            ctx = self.ctx
            self._g = ctx.prime_subfield_integer(ctx.alpha_pow((ctx.r - 1) // (self.p - 1)))
        return self._g

    def sqrt_minus_two(self):
        """beta - 1/beta for beta of order 8 in GF(p^k); squares to -2 in GF(p)."""
        ctx = self.ctx
        beta = ctx.alpha_pow((ctx.r - 1) // 8)
        return ctx.prime_subfield_integer(ctx.sub(beta, ctx.inv(beta)))


def semiprimitive_factorization(p, k, N2):
    """Two-valued factorization when p^j = -1 (mod N2) for some j.

    With o = ord_N2(p), the roots are eps*sqrt(r) (N2-1 times) and
    -(N2-1)*eps*sqrt(r) once, where eps = (-1)^(k/o).
    """
    if not is_semiprimitive(p, N2):
        raise HypothesisViolated(f"p={p} is not semi-primitive modulo N2={N2}")
    o = multiplicative_order_mod(p, N2)
    if k % o:
        raise HypothesisViolated(f"ord_{N2}({p}) = {o} does not divide k={k}")
    eps = _sign(k // o)
    root = p ** (k // 2)
    fac = PeriodFactorization.from_values([eps * root] * (N2 - 1) + [-(N2 - 1) * eps * root], N2)
    fac.check()
    return fac


# ---------------------------------------------------------------------------
# one function per order, each returning the list of N2 roots


def _order2(p, k, field):
    root = p ** (k // 2)
    return [root, -root]


def _order3(p, k, field):
    R = p ** (k // 3)
    c, d = dio.solve_cd(R, p)
    return [
        c * R,
        _exact(Fraction(-(c + 9 * d), 2) * R),
        _exact(Fraction(-(c - 9 * d), 2) * R),
    ]


def _order4(p, k, field):
    half, quarter = p ** (k // 2), p ** (k // 4)
    u, v = dio.solve_uv(half, p)
    return [-half - 2 * quarter * u, -half + 2 * quarter * u, half - 4 * quarter * v, half + 4 * quarter * v]


def _order5(p, k, field):
    P = p ** (k // 5)
    orbit = dio.solve_dickson(P, p)
    x = orbit[0][0]
    roots = [_exact(Fraction(-P, 16) * (x**3 - 25 * dio.dickson_L(orbit[0])))]
    roots += [_exact(Fraction(P, 64) * (x**3 - 25 * dio.dickson_M(sol))) for sol in orbit]
    return roots


def _order6(p, k, field):
    rs = dio.solve_r3s3(p, field.generator)
    r3, s3 = rs["r3"], rs["s3"]
    t = (p - 1) // 6
    eps = _sign(t * k // 2)
    return [
        -eps * p ** (k // 6) * dio.sequence_V(j, 2 * k // 3, r3, s3)
        - p ** (k // 3) * dio.sequence_V(2 * j, k // 3, r3, s3)
        - _sign(j) * eps * p ** (k // 2)
        for j in range(6)
    ]


def _order8_p1(p, k, field):
    g = field.generator
    ab4 = dio.solve_a4b4(p, g)
    ab8 = dio.solve_a8b8(p, dio.a8b8_multiplier(p, g))
    a4, b4, a8, b8 = ab4["a4"], ab4["b4"], ab8["a8"], ab8["b8"]
    half, quarter, eighth = p ** (k // 2), p ** (k // 4), p ** (k // 8)
    T, S = dio.sequence_TS(k // 2, a8, b8)
    Q0, P0 = dio.sequence_QP(0, k // 4, a4, b4)
    roots = []
    for j in range(8):
        if j % 2 == 0:
            A = dio.sequence_QP(j // 2, k // 4, a4, b4)[0]
            B = T
        else:
            A = _sign(j // 4) * Q0 + _sign((j - 2) // 4) * P0
            B = S
        Qj = dio.sequence_QP(j, k // 2, a4, b4)[0]
        # the quadratic character term picks up (-1)^j from zeta_8^(-4j)
        roots.append(-_sign(j) * half - quarter * Qj - eighth * A * B)
    return roots


def _order8_p3(p, k, field):
    ab8 = dio.solve_a8b8(p, field.sqrt_minus_two())
    T, S = dio.sequence_TS(k // 2, ab8["a8"], ab8["b8"])
    half, quarter = p ** (k // 2), p ** (k // 4)
    x1, x2 = half - 2 * quarter * S, half + 2 * quarter * S
    return [x1, x1, x2, x2, half, half, 2 * quarter * T - 3 * half, -2 * quarter * T - 3 * half]


def _order8_p5(p, k, field):
    ab4 = dio.solve_a4b4(p, field.generator)
    a4, b4 = ab4["a4"], ab4["b4"]
    half, quarter, three_eighths = p ** (k // 2), p ** (k // 4), p ** (3 * k // 8)
    Qh, Ph = dio.sequence_QP(0, k // 2, a4, b4)
    Qq, Pq = dio.sequence_QP(0, k // 4, a4, b4)
    x1, x2 = half - quarter * Ph, half + quarter * Ph
    return [
        x1, x1, x2, x2,
        -half - quarter * Qh - 2 * three_eighths * Qq,
        -half - quarter * Qh + 2 * three_eighths * Qq,
        -half + quarter * Qh - 2 * three_eighths * Pq,
        -half + quarter * Qh + 2 * three_eighths * Pq,
    ]


def _order8(p, k, field):
    branch = {1: _order8_p1, 3: _order8_p3, 5: _order8_p5}[p % 8]
    return branch(p, k, field)


def _order12(p, k, field):
    half, third, quarter, sixth = p ** (k // 2), p ** (k // 3), p ** (k // 4), p ** (k // 6)
    g = field.generator
    if p % 12 in (1, 7):
        rs = dio.solve_r3s3(p, g)

        def V(j, n):
            return dio.sequence_V(j, n, rs["r3"], rs["s3"])

    if p % 12 == 1:
        ab4 = dio.solve_a4b4(p, g)

        def Q(j, n):
            return dio.sequence_QP(j, n, ab4["a4"], ab4["b4"])[0]

        twelfth = p ** (k // 12)
        return [
            -twelfth * Q(j, k // 2) * V(-j, k // 3)
            - quarter * Q(j, k // 2)
            - sixth * V(j, 2 * k // 3)
            - third * V(2 * j, k // 3)
            - _sign(j) * half
            for j in range(12)
        ]
    if p % 12 == 5:
        ab4 = dio.solve_a4b4(p, g)
        Q, P = dio.sequence_QP(0, k // 2, ab4["a4"], ab4["b4"])
        e = _sign(k // 4)
        pairs = [
            Q * quarter * (e - 1) + half,
            -Q * quarter * (e - 1) + half,
            P * quarter * (e + 1) + half,
            -P * quarter * (e + 1) + half,
        ]
        singles = [
            P * quarter * (2 * e - 1) + half,
            -P * quarter * (2 * e - 1) + half,
            Q * quarter * (2 * e + 1) - 5 * half,
            -Q * quarter * (2 * e + 1) - 5 * half,
        ]
        return [x for x in pairs for _ in range(2)] + singles
    # p = 7 (mod 12)
    e = _sign(k // 2)
    rho = 2 * _sign(k * (p + 5) // 6)
    roots = []
    for j in range(12):
        lead = -e * sixth * V(j, 2 * k // 3)
        if j % 2:
            roots.append(lead - third * V(2 * j, k // 3) + e * half)
        elif j % 4 == 2:
            roots.append(lead + (rho - 1) * third * V(2 * j, k // 3) + (rho - e) * half)
        else:
            roots.append(lead - (rho + 1) * third * V(2 * j, k // 3) - (rho + e) * half)
    return roots


# residues of p mod N2 that have a dedicated (non semi-primitive) formula
_GENERAL = {
    2: (1,),
    3: (1,),
    4: (1,),
    5: (1,),
    6: (1,),
    8: (1, 3, 5),
    12: (1, 5, 7),
}

# k must be divisible by this (default N2); implied by the hypothesis, checked anyway
_K_DIVISOR = {(8, 3): 4, (12, 5): 4, (12, 7): 6}

_FORMULAS = {2: _order2, 3: _order3, 4: _order4, 5: _order5, 6: _order6, 8: _order8, 12: _order12}


def factorize_reduced_period(p, s, m, N2, generator=None):
    """Roots and multiplicities of the reduced period polynomial of order N2 over GF(p^(sm)).

    ``generator`` overrides the integer generator of GF(p)* that fixes sign
    conventions; by default it is derived from the field's primitive element.
    """
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if min(s, m, N2) < 1:
        raise ParameterError("s, m and N2 must be positive")
    if not has_closed_form(p, N2):
        raise UnsupportedOrder(
            f"no closed form for N2={N2}: not in {sorted(SUPPORTED_ORDERS)} and p={p} is not "
            f"semi-primitive modulo {N2}"
        )
    k = s * m
    r = p**k
    if ((r - 1) // (p - 1)) % N2:
        raise HypothesisViolated(f"N2={N2} does not divide (r-1)/(p-1) for r={p}^{k}")
    if N2 not in SUPPORTED_ORDERS:
        return semiprimitive_factorization(p, k, N2)
    if N2 == 1:
        fac = PeriodFactorization(roots=((0, 1),), N2=1)
        fac.check()
        return fac
    if p % N2 not in _GENERAL[N2]:
        return semiprimitive_factorization(p, k, N2)
    needed = _K_DIVISOR.get((N2, p % N2), N2)
    if k % needed:
        raise HypothesisViolated(f"the formula for N2={N2}, p={p} (mod {N2}) requires {needed} | k, k={k}")
    field = _Field(p, k, generator)
    roots = _FORMULAS[N2](p, k, field)
    fac = PeriodFactorization.from_values(roots, N2)
    try:
        fac.check()
    except AssertionError as exc:
        raise IntegralityFailure(f"closed form for (p={p}, k={k}, N2={N2}) is inconsistent: {fac}") from exc
    return fac
