"""Gauss periods computed straight from their definition.

eta_i = sum over x in alpha^i <alpha^N> of zeta_p^Tr(x).  Instead of complex
arithmetic we count, per cyclotomic class, how many elements have each trace
value.  When GF(p)* lies inside <alpha^N> the counts are uniform over the
nonzero trace values, and the period collapses to the integer
counts[i][0] - counts[i][1].
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import NonIntegralPeriod, NotDividing
from .finite_field import trace_sequence


@dataclass(frozen=True)
class TraceClassTable:
    N: int
    p: int
    counts: tuple  # counts[i][t] = #{x in C_i : Tr_{r/p}(x) = t}


@dataclass(frozen=True)
class PeriodFactorization:
    """psi*(X) = prod (X - xi)^e, stored as ascending ((xi, e), ...)."""

    roots: tuple
    N2: int

    @classmethod
    def from_values(cls, values, N2=None):
        values = list(values)
        grouped = sorted(Counter(int(v) for v in values).items())
        return cls(roots=tuple(grouped), N2=len(values) if N2 is None else N2)

    def multiset(self):
        return sorted(xi for xi, e in self.roots for _ in range(e))

    @property
    def distinct(self):
        return len(self.roots)

    def check(self):
        assert sum(e for _, e in self.roots) == self.N2, self
        assert sum(xi * e for xi, e in self.roots) == 0, self

    def to_json(self):
        return {"N2": self.N2, "roots": [{"xi": str(xi), "multiplicity": e} for xi, e in self.roots]}


def trace_class_table(ctx, N):
    n = ctx.r - 1
    if N < 1 or n % N:
        raise NotDividing(f"N={N} does not divide r-1={n}")
    t = trace_sequence(ctx).reshape(n // N, N)
    counts = tuple(
        tuple(int(c) for c in np.bincount(t[:, i], minlength=ctx.p)) for i in range(N)
    )
    return TraceClassTable(N=N, p=ctx.p, counts=counts)


def gauss_period(table, i):
    row = table.counts[i % table.N]
    off_zero = set(row[1:])
    if len(off_zero) != 1:
        raise NonIntegralPeriod(
            f"class {i} has non-uniform nonzero trace counts {row[1:]}; "
            "GF(p)* is not contained in the index-N subgroup"
        )
    return row[0] - row[1]


def gauss_periods(table):
    return [gauss_period(table, i) for i in range(table.N)]


def reduced_period_polynomial_direct(ctx, N2):
    table = trace_class_table(ctx, N2)
    fac = PeriodFactorization.from_values((1 + N2 * eta for eta in gauss_periods(table)), N2)
    fac.check()
    return fac
