"""Weight distributions of irreducible cyclic codes C(r, N) over GF(q).

A nonzero codeword c(beta) has weight (q-1)(r - eta*)/(qN), where eta* is
the reduced Gauss period of order N2 = gcd(N, (r-1)/(q-1)) attached to the
class of beta.  So the whole distribution follows from the roots of the
reduced period polynomial of order N2, each root xi with multiplicity e
contributing e(r-1)/N2 codewords.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint, isprime

from . import cyclotomy, period_poly
from .errors import (
    DimensionMismatch,
    IntegralityFailure,
    NotDividing,
    NotPrime,
    ParameterError,
    UndefinedExponent,
    UnsupportedOrder,
)
from .finite_field import DEFAULT_CAP, build_field


@dataclass(frozen=True)
class CodeSpec:
    p: int
    s: int
    m: int
    N: int
    q: int
    r: int
    k: int
    n: int
    N2: int
    m0: int

    @property
    def dimension(self):
        return self.m0


def multiplicative_order(a, n, bound):
    """Order of a modulo n, given that a^bound == 1 (mod n)."""
    if n == 1:
        return 1
    order = bound
    for ell in factorint(bound):
        while order % ell == 0 and pow(a, order // ell, n) == 1:
            order //= ell
    return order


def code_params(p, s, m, N):
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if min(s, m, N) < 1:
        raise ParameterError("s, m and N must be positive")
    q = p**s
    r = q**m
    if (r - 1) % N:
        raise NotDividing(f"N={N} does not divide r-1={r - 1}")
    n = (r - 1) // N
    N2 = math.gcd(N, (r - 1) // (q - 1))
    m0 = multiplicative_order(q, n, m)
    if m0 != m:
        raise DimensionMismatch(
            f"ord_{n}({q}) = {m0} != m = {m}: the code has dimension {m0}, not {m}"
        )
    return CodeSpec(p=p, s=s, m=m, N=N, q=q, r=r, k=s * m, n=n, N2=N2, m0=m0)


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    m: int
    q: int
    entries: tuple  # ((weight, frequency), ...) ascending by weight

    @property
    def r(self):
        return self.q**self.m

    @property
    def min_distance(self):
        return self.entries[0][0]

    @property
    def weights(self):
        return [w for w, _ in self.entries]

    def check(self):
        r, q = self.r, self.q
        assert sum(f for _, f in self.entries) == r - 1, "frequencies do not sum to r-1"
        first_moment = sum(w * f for w, f in self.entries)
        assert first_moment * q == self.n * r * (q - 1), "first moment identity fails"
        assert all(0 < w <= self.n for w, _ in self.entries), "weight out of range"
        assert [w for w, _ in self.entries] == sorted({w for w, _ in self.entries})

    def polynomial(self):
        """Render as '1+f1x^w1+f2x^w2+...'."""
        return "1" + "".join(f"+{f}x^{w}" for w, f in self.entries)

    def to_json(self):
        return {
            "n": str(self.n),
            "dimension": self.m,
            "q": self.q,
            "entries": [{"weight": str(w), "frequency": str(f)} for w, f in self.entries],
        }


def merge_entries(pairs):
    acc = {}
    for w, f in pairs:
        acc[w] = acc.get(w, 0) + f
    return tuple(sorted(acc.items()))


def weight_from_root(spec, xi):
    value = Fraction((spec.q - 1) * (spec.r - xi), spec.q * spec.N)
    if value.denominator != 1:
        raise IntegralityFailure(f"weight for root {xi} is {value}, not an integer")
    return value.numerator


def distribution_from_factorization(spec, fac):
    if fac.N2 != spec.N2:
        raise ValueError(f"factorization has order {fac.N2}, code needs {spec.N2}")
    unit = (spec.r - 1) // spec.N2
    entries = merge_entries((weight_from_root(spec, xi), e * unit) for xi, e in fac.roots)
    dist = WeightDistribution(n=spec.n, m=spec.m, q=spec.q, entries=entries)
    dist.check()
    return dist


def factorization(spec, method="closed", cap=DEFAULT_CAP):
    if method == "closed":
        return period_poly.factorize_reduced_period(spec.p, spec.s, spec.m, spec.N2)
    if method == "direct":
        ctx = build_field(spec.p, spec.k, cap=cap)
        return cyclotomy.reduced_period_polynomial_direct(ctx, spec.N2)
    raise ValueError(f"unknown method {method!r}")


def resolve_method(spec, method, cap=DEFAULT_CAP):
    """Pick the concrete method for 'auto'."""
    if method != "auto":
        return method
    if period_poly.has_closed_form(spec.p, spec.N2):
        return "closed"
    if spec.r <= cap:
        return "direct"
    raise UnsupportedOrder(
        f"N2={spec.N2} has no closed form for p={spec.p} and r={spec.r} exceeds the direct cap {cap}"
    )


def weight_distribution(p, s, m, N, method="auto", cap=DEFAULT_CAP):
    spec = code_params(p, s, m, N)
    chosen = resolve_method(spec, method, cap)
    dist = distribution_from_factorization(spec, factorization(spec, chosen, cap))
    if method == "auto" and chosen == "closed" and spec.r <= cap:
        direct = distribution_from_factorization(spec, factorization(spec, "direct", cap))
        if direct != dist:
            raise AssertionError(
                f"closed form disagrees with direct periods for {(p, s, m, N)}: "
                f"{dist.polynomial()} vs {direct.polynomial()}"
            )
    return dist


class Classification(enum.Enum):
    ONE_WEIGHT = "OneWeight"
    MAX_WEIGHTS = "MaxWeights"
    TWO_WEIGHT_SEMIPRIMITIVE = "TwoWeightSemiPrimitive"
    OTHER = "Other"


def classify(spec, dist=None):
    """Classify by the one-weight and maximal-weight criteria.

    If ``dist`` is given its distinct-weight count must agree with the
    classification; a mismatch raises AssertionError.
    """
    N2, p = spec.N2, spec.p
    if N2 == 1:
        label = Classification.ONE_WEIGHT
    elif p % N2 == 1:
        label = Classification.MAX_WEIGHTS
    elif period_poly.is_semiprimitive(p, N2):
        label = Classification.TWO_WEIGHT_SEMIPRIMITIVE
    else:
        label = Classification.OTHER
    if dist is not None:
        count = len(dist.entries)
        if label is Classification.ONE_WEIGHT:
            assert count == 1, (spec, dist)
        elif label is Classification.MAX_WEIGHTS:
            assert count == N2, (spec, dist)
        else:
            assert 1 < count < N2, (spec, dist)
            if label is Classification.TWO_WEIGHT_SEMIPRIMITIVE:
                assert count == 2, (spec, dist)
    return label


def describe_classification(spec, label):
    if label is Classification.MAX_WEIGHTS:
        return f"{label.value} (N2={spec.N2}, p≡1 mod {spec.N2})"
    return f"{label.value} (N2={spec.N2})"


def q_valuation(w, q):
    v = 0
    while w % q == 0:
        w //= q
        v += 1
    return v


@dataclass(frozen=True)
class DivisibilityReport:
    exponent: int
    valuations: tuple  # ((weight, v_q(weight)), ...)

    @property
    def passed(self):
        return all(v == self.exponent for _, v in self.valuations)


def divisibility_exponent(spec, dist):
    """Check that every nonzero weight is exactly divisible by q^(m/N2 - 1)."""
    if spec.p % spec.N2 != 1 % spec.N2:
        raise UndefinedExponent(f"p={spec.p} is not 1 mod N2={spec.N2}")
    if spec.m % spec.N2:
        raise UndefinedExponent(f"N2={spec.N2} does not divide m={spec.m}")
    exponent = spec.m // spec.N2 - 1
    vals = tuple((w, q_valuation(w, spec.q)) for w in dist.weights)
    return DivisibilityReport(exponent=exponent, valuations=vals)
