"""Arithmetic in GF(p^k) with a fixed primitive element.

Elements are tuples of k integers in [0, p), the coefficients of a polynomial
in X of degree < k (lowest degree first), reduced modulo a monic irreducible
``modulus``.  The prime subfield is embedded as the constant polynomials.

Every element (and every monic polynomial) also has an integer *code*:
``sum(c_i * p**i)``.  Codes define the total order used to pick the modulus
and the primitive element, so that the same (p, k) always yields the same
field presentation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime

from .errors import BadSubfield, CapExceeded, NotInPrimeField, NotPrime

DEFAULT_CAP = 2**27


# ---------------------------------------------------------------------------
# polynomials over GF(p): lists of ints, lowest degree first, no trailing zeros

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_sub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([c % p for c in out])


def poly_divmod(a, b, p):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    quot = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            quot[i - db] = c
            for j, bj in enumerate(b):
                a[i - db + j] = (a[i - db + j] - c * bj) % p
    return _trim(quot), _trim(a[:db])


def poly_mod(a, b, p):
    return poly_divmod(a, b, p)[1]


def poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def poly_powmod(a, e, f, p):
    result = [1]
    base = poly_mod(a, f, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), f, p)
        base = poly_mod(poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(f, p):
    """Rabin's test for a monic polynomial f over GF(p)."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    frob = [x]  # frob[i] = X^(p^i) mod f
    for _ in range(k):
        frob.append(poly_powmod(frob[-1], p, f, p))
    if poly_sub(frob[k], x, p) != []:
        return False
    for ell in factorint(k):
        g = poly_gcd(f, poly_sub(frob[k // ell], x, p), p)
        if len(g) > 1:
            return False
    return True


def poly_from_code(code, p, length):
    out = []
    for _ in range(length):
        code, c = divmod(code, p)
        out.append(c)
    return out


def first_irreducible(p, k, skip=0):
    """The (skip+1)-th monic irreducible polynomial of degree k in code order."""
    for code in range(p**k):
        f = poly_from_code(code, p, k) + [1]
        if is_irreducible(f, p):
            if skip == 0:
                return tuple(f)
            skip -= 1
    raise ValueError(f"fewer than {skip + 1} irreducible polynomials of degree {k} over GF({p})")


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldContext:
    p: int
    k: int
    modulus: tuple
    alpha: tuple
    r: int
    cap: int = DEFAULT_CAP
    log_table: np.ndarray | None = field(default=None, compare=False, repr=False)
    antilog_table: np.ndarray | None = field(default=None, compare=False, repr=False)

    # -- element constructors and codes -----------------------------------
    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def element(self, value):
        """Embed an integer of the prime field."""
        return (value % self.p,) + (0,) * (self.k - 1)

    def from_code(self, code):
        return tuple(poly_from_code(code, self.p, self.k))

    def code(self, x):
        c = 0
        for coeff in reversed(x):
            c = c * self.p + coeff
        return c

    # -- arithmetic --------------------------------------------------------
    def add(self, x, y):
        p = self.p
        return tuple((a + b) % p for a, b in zip(x, y))

    def sub(self, x, y):
        p = self.p
        return tuple((a - b) % p for a, b in zip(x, y))

    def neg(self, x):
        p = self.p
        return tuple(-a % p for a in x)

    def scale(self, c, x):
        p = self.p
        return tuple(c * a % p for a in x)

    def mul(self, x, y):
        p, k, f = self.p, self.k, self.modulus
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] += a * b
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * f[j]
        return tuple(c % p for c in prod[:k])

    def mul_x(self, x):
        """Multiply by the polynomial-basis generator X."""
        p, f = self.p, self.modulus
        top = x[-1]
        shifted = (0,) + x[:-1]
        if not top:
            return shifted
        return tuple((s - top * fj) % p for s, fj in zip(shifted, f))

    def pow(self, x, e):
        if e < 0:
            x = self.inv(x)
            e = -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def inv(self, x):
        if not any(x):
            raise ZeroDivisionError("inverse of zero")
        return self.pow(x, self.r - 2)

    def alpha_pow(self, e):
        return self.pow(self.alpha, e % (self.r - 1))

    def frobenius(self, x, times=1):
        for _ in range(times):
            x = self.pow(x, self.p)
        return x

    def order(self, x):
        """Multiplicative order of a nonzero element."""
        n = self.r - 1
        for ell, mult in factorint(n).items():
            for _ in range(mult):
                if self.pow(x, n // ell) == self.one:
                    n //= ell
                else:
                    break
        return n

    def in_subfield(self, x, d):
        return self.pow(x, self.p**d) == x

    def trace(self, x, sub_degree=1):
        """Trace from GF(p^k) down to GF(p^sub_degree)."""
        d = sub_degree
        if d < 1 or self.k % d:
            raise BadSubfield(f"{d} does not divide extension degree {self.k}")
        total = x
        y = x
        for _ in range(self.k // d - 1):
            y = self.frobenius(y, d)
            total = self.add(total, y)
        return total

    def prime_subfield_integer(self, x):
        if any(x[1:]):
            raise NotInPrimeField(f"{x} is not in GF({self.p})")
        return x[0]

    def trace_to_prime(self, x):
        return self.prime_subfield_integer(self.trace(x, 1))

    @property
    def basis_traces(self):
        """Tr_{r/p}(X^l) for l = 0..k-1; the trace as a linear form."""
        out = []
        xl = self.one
        for _ in range(self.k):
            out.append(self.trace_to_prime(xl))
            xl = self.mul_x(xl)
        return tuple(out)


def build_field(p, k, cap=DEFAULT_CAP, tables=False, modulus=None):
    """Construct GF(p^k) deterministically.

    The modulus is the first monic irreducible polynomial of degree k in code
    order (unless given), and alpha is the primitive element with the smallest
    code.  ``tables=True`` additionally builds log/antilog arrays, which is
    only allowed for p^k <= cap.
    """
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    r = p**k
    if tables and r > cap:
        raise CapExceeded(f"table construction for r={r} exceeds cap {cap}")
    if modulus is None:
        modulus = first_irreducible(p, k)
    else:
        modulus = tuple(modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1 or not is_irreducible(list(modulus), p):
            raise ValueError(f"{modulus} is not a monic irreducible polynomial of degree {k}")
    ctx = FieldContext(p=p, k=k, modulus=modulus, alpha=(1,) + (0,) * (k - 1), r=r, cap=cap)
    n = r - 1
    primes = list(factorint(n))
    for code in range(1, r):
        x = ctx.from_code(code)
        if all(ctx.pow(x, n // ell) != ctx.one for ell in primes):
            ctx = replace(ctx, alpha=x)
            break
    if tables:
        antilog = power_codes(ctx)
        log = np.zeros(r, dtype=np.int64)
        log[antilog] = np.arange(n, dtype=np.int64)
        log[0] = -1
        ctx = replace(ctx, log_table=log, antilog_table=antilog)
    return ctx


# ---------------------------------------------------------------------------
# vectorised sweeps over the multiplicative group

def _multiplication_matrix(ctx, gamma):
    """k x k matrix M with coords(gamma * x) = M @ coords(x)."""
    cols = []
    y = gamma
    for _ in range(ctx.k):
        cols.append(y)
        y = ctx.mul_x(y)
    return np.array(cols, dtype=np.int64).T


def _baby_steps(ctx, count):
    out = np.empty((count, ctx.k), dtype=np.int64)
    x = ctx.one
    for a in range(count):
        out[a] = x
        x = ctx.mul(x, ctx.alpha)
    return out, x


def _sweep_blocks(ctx):
    """Yield (start, baby, giant) so that coords(alpha^(start+a)) = giant @ baby[a]."""
    n = ctx.r - 1
    step = max(1, math.isqrt(n))
    baby, jump = _baby_steps(ctx, step)
    gamma = ctx.one
    for start in range(0, n, step):
        yield start, baby, gamma
        gamma = ctx.mul(gamma, jump)


def trace_sequence(ctx):
    """Array t with t[j] = Tr_{r/p}(alpha^j) for j = 0..r-2.

    Baby-step/giant-step: with alpha^(a + bB) = gamma_b * alpha^a, the trace
    of that element is a linear form in coords(alpha^a) whose coefficients
    depend only on gamma_b.  Each giant step therefore costs O(k^2) scalar
    work plus one vectorised dot product.
    """
    if ctx.r > ctx.cap:
        raise CapExceeded(f"r={ctx.r} exceeds sweep cap {ctx.cap}")
    return _trace_sequence_cached(ctx)


@lru_cache(maxsize=8)
def _trace_sequence_cached(ctx):
    n = ctx.r - 1
    p = ctx.p
    tau = np.array(ctx.basis_traces, dtype=np.int64)
    dtype = np.uint8 if p < 256 else np.int64
    out = np.empty(n, dtype=dtype)
    for start, baby, gamma in _sweep_blocks(ctx):
        w = tau @ _multiplication_matrix(ctx, gamma)
        stop = min(start + len(baby), n)
        out[start:stop] = ((baby[: stop - start] @ w) % p).astype(dtype)
    return out


def power_codes(ctx):
    """Array c with c[j] = code(alpha^j) for j = 0..r-2."""
    if ctx.r > ctx.cap:
        raise CapExceeded(f"r={ctx.r} exceeds sweep cap {ctx.cap}")
    n = ctx.r - 1
    weights = np.array([ctx.p**i for i in range(ctx.k)], dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    for start, baby, gamma in _sweep_blocks(ctx):
        m = _multiplication_matrix(ctx, gamma)
        stop = min(start + len(baby), n)
        coords = (baby[: stop - start] @ m.T) % ctx.p
        out[start:stop] = coords @ weights
    return out
