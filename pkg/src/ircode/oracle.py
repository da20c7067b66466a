"""Brute-force weight distributions, and the machinery that compares them.

The oracle evaluates the code by its definition. The coordinates of the
codeword for beta = alpha^c are Tr_{r/q}(alpha^(c + N t)) for t < n. So its
weight is n minus the number of trace zeros in residue class c mod N. Every
beta in the same class gives a cyclic shift of the same word, so each class
contributes n codewords. No period or closed form is consulted.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import published
from .errors import CapExceeded, IrcodeError, UnsupportedOrder
from .finite_field import DEFAULT_CAP, build_field, trace_sequence
from .period_poly import SUPPORTED_ORDERS
from .weights import (
    WeightDistribution,
    code_params,
    distribution_from_factorization,
    factorization,
    merge_entries,
)


@lru_cache(maxsize=16)
def _field(p, k, cap):
    return build_field(p, k, cap=cap)


def relative_trace_zero_mask(ctx, s):
    """Boolean array z with z[j] true iff Tr_{r/q}(alpha^j) = 0, q = p^s.

    With G = alpha^((r-1)/(q-1)) generating GF(q)*, the powers 1, G, ..., G^(s-1)
    form a GF(p)-basis of GF(q). So Tr_{r/q}(x) vanishes iff
    Tr_{r/p}(G^i x) = 0 for every i < s.
    """
    if ctx.k % s:
        raise ValueError(f"s={s} does not divide k={ctx.k}")
    zero = trace_sequence(ctx) == 0
    step = (ctx.r - 1) // (ctx.p**s - 1)
    mask = zero.copy()
    for i in range(1, s):
        mask &= np.roll(zero, -i * step)
    return mask


def oracle_weight_distribution(p, s, m, N, cap=DEFAULT_CAP, modulus=None):
    spec = code_params(p, s, m, N)
    if spec.r > cap:
        raise CapExceeded(f"r={spec.r} exceeds oracle cap {cap}")
    ctx = _field(p, spec.k, cap) if modulus is None else build_field(p, spec.k, cap=cap, modulus=modulus)
    zeros = relative_trace_zero_mask(ctx, s).reshape(spec.n, N).sum(axis=0)
    entries = merge_entries((spec.n - int(z), spec.n) for z in zeros)
    dist = WeightDistribution(n=spec.n, m=m, q=spec.q, entries=entries)
    dist.check()
    return dist


# ---------------------------------------------------------------------------
# verification reports


PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass
class VerificationReport:
    params: tuple  # (p, s, m, N)
    verdict: str
    reason: str = ""
    N2: int | None = None
    closed: WeightDistribution | None = None
    oracle: WeightDistribution | None = None
    roots: object = None  # PeriodFactorization
    diff: tuple = ()  # ((weight, closed_freq, oracle_freq), ...) where they differ
    published: str | None = None
    published_match: bool | None = None
    erratum: str | None = None
    timings: dict = field(default_factory=dict)

    def summary_line(self):
        p, s, m, N = self.params
        line = f"{self.verdict} p={p} s={s} m={m} N={N}"
        if self.N2 is not None:
            line += f" N2={self.N2}"
        if self.closed is not None:
            line += f" {self.closed.polynomial()}"
        if self.reason:
            line += f" ({self.reason})"
        if self.erratum:
            line += f" [published text differs: {self.erratum}]"
        return line

    def to_json(self):
        def dist(d):
            return None if d is None else d.to_json()

        return {
            "params": list(self.params),
            "verdict": self.verdict,
            "reason": self.reason,
            "N2": self.N2,
            "closed": dist(self.closed),
            "oracle": dist(self.oracle),
            "roots": None if self.roots is None else self.roots.to_json(),
            "diff": [[str(w), str(a), str(b)] for w, a, b in self.diff],
            "published": self.published,
            "published_match": self.published_match,
            "erratum": self.erratum,
            "timings": {k: round(v, 4) for k, v in self.timings.items()},
        }


def distribution_diff(a, b):
    fa, fb = dict(a.entries), dict(b.entries)
    return tuple(
        (w, fa.get(w, 0), fb.get(w, 0)) for w in sorted(fa.keys() | fb.keys()) if fa.get(w) != fb.get(w)
    )


def _timed(timings, name, fn, *args, **kwargs):
    t0 = time.perf_counter()
    try:
        return fn(*args, **kwargs)
    finally:
        timings[name] = time.perf_counter() - t0


def verify(p, s, m, N, cap=DEFAULT_CAP):
    """Closed form versus oracle, plus a comparison with the published text if any.

    The verdict concerns closed form versus oracle only. A disagreement with
    published text is reported in ``published_match`` and, for a known
    misprint, in ``erratum``.
    """
    params = (p, s, m, N)
    timings = {}
    try:
        spec = code_params(p, s, m, N)
    except IrcodeError as exc:
        return VerificationReport(params, SKIP, reason=f"{type(exc).__name__}: {exc}")
    report = VerificationReport(params, SKIP, N2=spec.N2, timings=timings)

    try:
        report.roots = _timed(timings, "closed", factorization, spec, "closed")
        report.closed = distribution_from_factorization(spec, report.roots)
    except UnsupportedOrder as exc:
        report.reason = f"UnsupportedOrder: {exc}"
        return report

    if spec.r <= cap:
        report.oracle = _timed(timings, "oracle", oracle_weight_distribution, p, s, m, N, cap)
        report.diff = distribution_diff(report.closed, report.oracle)
        report.verdict = FAIL if report.diff else PASS
        if report.diff:
            report.reason = "closed form and oracle disagree"
    else:
        report.reason = f"r={spec.r} exceeds oracle cap {cap}; closed form only"

    if params in published.PUBLISHED:
        report.published = published.PUBLISHED[params]
        report.published_match = published.published_entries(params) == report.closed.entries
        if params in published.ERRATA:
            corrected, note = published.ERRATA[params]
            if published.parse_polynomial(corrected) == report.closed.entries:
                report.erratum = note
    return report


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class Grid:
    primes: tuple
    s_values: tuple = (1, 2)
    m_max: int = 8
    N_values: tuple = tuple(range(1, 13))
    max_r: int = 10**6
    orders: frozenset = SUPPORTED_ORDERS

    def tuples(self):
        """(p, s, m, N) in deterministic order; excludes N not dividing r-1 and unsupported N2."""
        for p in sorted(self.primes):
            for s in sorted(self.s_values):
                for m in range(1, self.m_max + 1):
                    r = p ** (s * m)
                    if r > self.max_r:
                        break
                    q = p**s
                    for N in sorted(self.N_values):
                        if (r - 1) % N:
                            continue
                        if math.gcd(N, (r - 1) // (q - 1)) not in self.orders:
                            continue
                        yield p, s, m, N


def _verify_args(args):
    return verify(*args)


def sweep(grid, cap=DEFAULT_CAP, jobs=1):
    """Verify every tuple of ``grid``; reports come back in grid order."""
    pending = [(*t, cap) for t in grid.tuples()]
    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_args, pending, chunksize=4))
    return [verify(*args) for args in pending]


def summarize(reports):
    counts = {PASS: 0, FAIL: 0, SKIP: 0}
    for rep in reports:
        counts[rep.verdict] += 1
    return counts


def format_summary(counts):
    return f"PASS={counts[PASS]}, FAIL={counts[FAIL]}, SKIP={counts[SKIP]}"

