"""Integer representations of primes and their powers, and the power sums built on them.

All solvers are bounded exhaustive searches.  Exhaustiveness is deliberate:
besides finding a solution it proves the uniqueness claims the closed forms
rely on, and the arguments involved are small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AmbiguousOrbit, IrrationalResidue, NoSolution

# ---------------------------------------------------------------------------
# imaginary quadratic rings


GAUSSIAN = "Z[i]"
SQRT_M2 = "Z[sqrt-2]"
EISENSTEIN = "Z[(1+sqrt-3)/2]"

_RING_D = {GAUSSIAN: -1, SQRT_M2: -2, EISENSTEIN: -3}


@dataclass(frozen=True)
class QuadraticRingElement:
    """a + b*sqrt(D), halved for the Eisenstein ring: (a + b*sqrt(-3))/2."""

    ring: str
    a: int
    b: int

    def __post_init__(self):
        if self.ring == EISENSTEIN and (self.a - self.b) % 2:
            raise ValueError(f"({self.a} + {self.b}*sqrt(-3))/2 is not an Eisenstein integer")

    @property
    def d(self):
        return _RING_D[self.ring]

    @property
    def halved(self):
        return self.ring == EISENSTEIN

    def _make(self, a, b):
        return QuadraticRingElement(self.ring, a, b)

    def __add__(self, other):
        return self._make(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return self._make(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return self._make(-self.a, -self.b)

    def __mul__(self, other):
        a = self.a * other.a + self.d * self.b * other.b
        b = self.a * other.b + self.b * other.a
        if self.halved:
            a, b = a // 2, b // 2
        return self._make(a, b)

    def __pow__(self, e):
        result = self.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def one(self):
        return self._make(2, 0) if self.halved else self._make(1, 0)

    def conj(self):
        return self._make(self.a, -self.b)

    def norm(self):
        n = self.a * self.a - self.d * self.b * self.b
        return n // 4 if self.halved else n

    def rational_part(self):
        """The element as an integer; it must have no sqrt(D) component."""
        if self.b:
            raise IrrationalResidue(f"{self} has nonzero irrational part")
        if self.halved:
            if self.a % 2:
                raise IrrationalResidue(f"{self} is not a rational integer")
            return self.a // 2
        return self.a


def unit_power(ring, j):
    """zeta_6^j in the Eisenstein ring, or i^j in Z[i]."""
    if ring == EISENSTEIN:
        return QuadraticRingElement(EISENSTEIN, 1, 1) ** (j % 6)
    if ring == GAUSSIAN:
        return QuadraticRingElement(GAUSSIAN, 0, 1) ** (j % 4)
    raise ValueError(f"no unit of order > 2 in {ring}")


# ---------------------------------------------------------------------------
# representation solvers


@dataclass(frozen=True)
class RepSolution:
    kind: str  # CD, UV, R3S3, A4B4, A8B8, DICKSON
    values: dict

    def __getitem__(self, key):
        return self.values[key]


def _isqrt_exact(n):
    if n < 0:
        return None
    s = math.isqrt(n)
    return s if s * s == n else None


def _two_square_forms(total, coeff):
    """All (x, y >= 0) with x^2 + coeff*y^2 == total."""
    out = []
    y = 0
    while coeff * y * y <= total:
        x = _isqrt_exact(total - coeff * y * y)
        if x is not None:
            out.append((x, y))
            if x:
                out.append((-x, y))
        y += 1
    return out


def _unique(cands, what):
    if not cands:
        raise NoSolution(f"no admissible {what}")
    if len(set(cands)) != 1:
        raise NoSolution(f"admissible {what} not unique: {sorted(set(cands))}")
    return cands[0]


def solve_cd(P, p):
    """(c, |d|) with 4P = c^2 + 27d^2, c = 1 (mod 3), gcd(c, p) = 1."""
    cands = [
        (c, d) for c, d in _two_square_forms(4 * P, 27) if c % 3 == 1 and math.gcd(c, p) == 1
    ]
    c, d = _unique(cands, f"c for 4*{P} = c^2 + 27d^2")
    return c, d


def solve_uv(P, p):
    """(u, |v|) with P = u^2 + 4v^2, u = 1 (mod 4), gcd(u, p) = 1."""
    cands = [
        (u, v) for u, v in _two_square_forms(P, 4) if u % 4 == 1 and math.gcd(u, p) == 1
    ]
    u, v = _unique(cands, f"u for {P} = u^2 + 4v^2")
    return u, v


def _signed(pairs):
    for x, y in pairs:
        yield x, y
        if y:
            yield x, -y


def discrete_log(g, target, p):
    """Least positive Z with g^Z = target (mod p)."""
    x = 1
    for z in range(1, p):
        x = x * g % p
        if x == target % p:
            return z
    raise NoSolution(f"{target} is not a power of {g} mod {p}")


def solve_r3s3(p, g):
    """4p = r3^2 + 3 s3^2 with r3 = 1 (3), s3 = 0 (3), 3 s3 = (2 g^((p-1)/3) + 1) r3 (mod p).

    ``g`` is a generator of GF(p)* given as an integer.
    """
    if p % 3 != 1:
        raise NoSolution(f"p={p} is not 1 mod 3")
    omega = pow(g, (p - 1) // 3, p)
    cands = [
        (r3, s3)
        for r3, s3 in _signed(_two_square_forms(4 * p, 3))
        if r3 % 3 == 1 and s3 % 3 == 0 and (3 * s3 - (2 * omega + 1) * r3) % p == 0
    ]
    r3, s3 = _unique(cands, f"(r3, s3) for p={p}")
    return RepSolution("R3S3", {"r3": r3, "s3": s3})


def solve_a4b4(p, g):
    """p = a4^2 + b4^2, a4 = -(-1)^Z (mod 4), b4 = a4 g^((p-1)/4) (mod p), g^Z = 2."""
    if p % 4 != 1:
        raise NoSolution(f"p={p} is not 1 mod 4")
    Z = discrete_log(g, 2, p)
    a_class = -((-1) ** Z) % 4
    i_p = pow(g, (p - 1) // 4, p)
    cands = [
        (a, b)
        for a, b in _signed(_two_square_forms(p, 1))
        if a % 4 == a_class and (b - a * i_p) % p == 0
    ]
    a4, b4 = _unique(cands, f"(a4, b4) for p={p}")
    return RepSolution("A4B4", {"a4": a4, "b4": b4, "Z": Z})


def a8b8_multiplier(p, g):
    """zeta + zeta^3 for zeta = g^((p-1)/8); a square root of -2 mod p when p = 1 (mod 8)."""
    e = (p - 1) // 8
    return (pow(g, e, p) + pow(g, 3 * e, p)) % p


def solve_a8b8(p, multiplier):
    """p = a8^2 + 2 b8^2 with the residue-class sign rule and 2 b8 = multiplier * a8 (mod p).

    a8 = -1 (mod 4) when p = 1 (mod 8); a8 = (-1)^((p-3)/8) (mod 4) when
    p = 3 (mod 8).  ``multiplier`` is the square root of -2 mod p that fixes
    the sign of b8.
    """
    if p % 8 == 1:
        a_class = 3
    elif p % 8 == 3:
        a_class = (-1) ** ((p - 3) // 8) % 4
    else:
        raise NoSolution(f"p={p} is not 1 or 3 mod 8")
    cands = [
        (a, b)
        for a, b in _signed(_two_square_forms(p, 2))
        if a % 4 == a_class and (2 * b - multiplier * a) % p == 0
    ]
    a8, b8 = _unique(cands, f"(a8, b8) for p={p}")
    return RepSolution("A8B8", {"a8": a8, "b8": b8})


# ---------------------------------------------------------------------------
# power sums


def sequence_V(j, n, r3, s3):
    """zeta_6^-j lambda^n + conj, lambda = (r3 + s3 sqrt(-3))/2."""
    lam = QuadraticRingElement(EISENSTEIN, r3, s3)
    x = unit_power(EISENSTEIN, -j) * lam**n
    return (x + x.conj()).rational_part()


def sequence_QP(j, n, a4, b4):
    """(Q_{j,n}, P_{j,n}) for pi = a4 + b4 i."""
    pi = QuadraticRingElement(GAUSSIAN, a4, b4)
    x = unit_power(GAUSSIAN, -j) * pi**n
    minus_i = QuadraticRingElement(GAUSSIAN, 0, -1)
    return (x + x.conj()).rational_part(), (minus_i * (x - x.conj())).rational_part()


def sequence_TS(n, a8, b8):
    """(T_n, S_n) for sigma = a8 + b8 sqrt(-2)."""
    sigma = QuadraticRingElement(SQRT_M2, a8, b8)
    x = sigma**n
    diff = x - x.conj()  # 2B sqrt(-2)
    if diff.a:
        raise IrrationalResidue(f"{diff} has a rational part")
    return (x + x.conj()).rational_part(), diff.b


# ---------------------------------------------------------------------------
# Dickson's system for quintic periods


def dickson_sigma(sol):
    x, w, v, u = sol
    return (x, -w, -u, v)


def dickson_L(sol):
    x, w, v, u = sol
    return 2 * x * (v * v + u * u) + 5 * w * (11 * v * v - 4 * v * u - 11 * u * u)


def dickson_M(sol):
    x, w, v, u = sol
    return (
        2 * x * x * u + 7 * x * v * v + 20 * x * v * u - 3 * x * u * u
        + 125 * w**3 + 200 * w * w * v - 150 * w * w * u + 5 * w * v * v
        - 20 * w * v * u - 105 * w * u * u
        - 40 * v**3 - 60 * v * v * u + 120 * v * u * u + 20 * u**3
    )


def dickson_orbit(sol):
    orbit = [sol]
    for _ in range(3):
        orbit.append(dickson_sigma(orbit[-1]))
    return orbit


def dickson_solutions(P, p):
    """Every admissible (x, w, v, u) of the quintic system for P = p^(k/5)."""
    total = 16 * P
    bound = math.isqrt(total)
    sols = []
    for x in range(-bound, bound + 1):
        if x % 5 != 4:
            continue
        rest_x = total - x * x
        wmax = math.isqrt(rest_x // 125)
        for w in range(-wmax, wmax + 1):
            rest = rest_x - 125 * w * w
            if rest % 50:
                continue
            rest //= 50  # v^2 + u^2
            for v, u0 in _two_square_forms(rest, 1):
                for u in {u0, -u0}:
                    if x * w == v * v - 4 * v * u - u * u and (x * x - 125 * w * w) % p:
                        sols.append((x, w, v, u))
    return sorted(set(sols))


def solve_dickson(P, p):
    """The sigma-orbit of admissible Dickson solutions, as a list of four tuples."""
    if p % 5 != 1:
        raise NoSolution(f"p={p} is not 1 mod 5")
    sols = dickson_solutions(P, p)
    if not sols:
        raise NoSolution(f"Dickson's system has no admissible solution for P={P}")
    orbit = dickson_orbit(sols[0])
    stray = set(sols) - set(orbit)
    if stray:
        raise AmbiguousOrbit(f"solutions outside one sigma-orbit: {sorted(stray)}")
    return orbit
