"""Weight distributions as they appear in the published example tables.

Entries are the printed text, verbatim, keyed by (p, s, m, N). Known
misprints are listed separately together with the value the computation
produces. They stay visible in every report rather than being silently
patched.
"""

from __future__ import annotations

import re

from .weights import WeightDistribution, code_params, merge_entries


def _equal_freq(freq, weights):
    return "1" + "".join(f"+{freq}x^{w}" for w in weights)


PUBLISHED = {
    (11, 1, 2, 5): "1+120x^22",
    (7, 2, 2, 5): "1+480x^432+1920x^480",
    (19, 1, 4, 5): "1+104256x^24624+26064x^24966",
    (11, 1, 5, 5): _equal_freq(32210, [29050, 29200, 29300, 29400, 29460]),
    (7, 1, 5, 6): "1+16806x^2401",
    (7, 1, 2, 6): "1+24x^6+24x^8",
    (7, 1, 3, 6): "1+114x^45+114x^48+114x^54",
    (5, 2, 3, 6): "1+5208x^2460+10416x^2520",
    (7, 1, 6, 6): _equal_freq(19608, [16596, 16776, 16812, 16836, 16866, 16956]),
    (11, 1, 2, 6): "1+20x^10+100x^20",
    (17, 1, 3, 8): "1+4912x^578",
    (7, 2, 2, 8): "1+1200x^288+1200x^300",
    (17, 1, 4, 8): _equal_freq(20880, [9760, 9800, 9824, 9920]),
    (11, 1, 2, 8): "1+30x^10+90x^15",
    (17, 1, 8, 8): _equal_freq(
        871969680,
        [820657856, 820663680, 820666436, 820675268, 820694592, 820702148, 820704836, 820732560],
    ),
    (3, 1, 4, 8): "1+20x^4+20x^6+30x^8+10x^10",
    (5, 1, 8, 8): (
        "1+97656x^38880+48828x^38940+48828x^38960+97656x^39120+48828x^39240+48828x^39360"
    ),
    (7, 1, 4, 8): "1+2100x^252+300x^294",
    (13, 1, 5, 12): "1+371292x^28561",
    (13, 1, 3, 12): "1+732x^162+732x^171+732x^174",
    (5, 2, 3, 12): "1+5202x^1230+10416x^1260",
    (13, 1, 4, 12): _equal_freq(7140, [2160, 2200, 2208, 2220]),
    (7, 1, 2, 12): "1+12x^2+36x^4",
    (13, 1, 6, 12): _equal_freq(804468, [370692, 371112, 371232, 371322, 371448, 371952]),
    (17, 1, 2, 12): "1+48x^16+240x^24",
    (13, 1, 12, 12): _equal_freq(
        1941507093540,
        [
            1792157710608, 1792159338564, 1792159386480, 1792159451424,
            1792160074992, 1792160674272, 1792160747136, 1792160770896,
            1792160847072, 1792161442512, 1792161902664, 1792162381824,
        ],
    ),
    (5, 1, 4, 12): "1+52x^32+104x^36+208x^40+104x^44+104x^48+52x^52",
    (7, 1, 6, 12): (
        "1+9804x^8256+9804x^8280+9804x^8340+9804x^8730+19608x^8388"
        "+19608x^8418+19608x^8478+9804x^8496+9804x^8532"
    ),
    (23, 1, 2, 12): "1+44x^22+484x^44",
}

# key -> (corrected text, explanation). Each correction is backed by the
# oracle or, where the oracle cannot reach, by an identity the printed
# distribution fails.
ERRATA = {
    (5, 2, 3, 12): (
        "1+5208x^1230+10416x^1260",
        "printed frequency 5202 should be (r-1)/3 = 5208; frequencies must sum to r-1 = 15624",
    ),
    (7, 1, 6, 12): (
        "1+9804x^8256+9804x^8280+9804x^8340+9804x^8370+19608x^8388"
        "+19608x^8418+19608x^8478+9804x^8496+9804x^8532",
        "printed weight 8730 should be 8370 (transposed digits); the printed list "
        "is out of order and misses the first-moment identity by 9804*360",
    ),
    (17, 1, 8, 8): (
        _equal_freq(
            871969680,
            [820646784, 820655616, 820657856, 820663680, 820682496, 820685184, 820694592, 820732560],
        ),
        "printed list fails the first-moment identity (its eight period values do not "
        "sum to zero); four of the eight weights differ from the computed ones",
    ),
}

_TERM = re.compile(r"\+(\d+)x\^(\d+)")


def parse_polynomial(text):
    """'1+f1x^w1+...' -> merged ((w, f), ...) ascending by weight."""
    text = re.sub(r"\s+", "", text)
    if not text.startswith("1"):
        raise ValueError(f"enumerator must start with the zero codeword term: {text!r}")
    body = text[1:]
    terms = _TERM.findall(body)
    if "".join(f"+{f}x^{w}" for f, w in terms) != body:
        raise ValueError(f"cannot parse enumerator {text!r}")
    return merge_entries((int(w), int(f)) for f, w in terms)


def published_entries(key):
    return parse_polynomial(PUBLISHED[key])


def published_distribution(key):
    spec = code_params(*key)
    return WeightDistribution(n=spec.n, m=spec.m, q=spec.q, entries=published_entries(key))


def consistency_problems(key):
    """Identities the printed distribution violates, as human-readable strings."""
    dist = published_distribution(key)
    problems = []
    total = sum(f for _, f in dist.entries)
    if total != dist.r - 1:
        problems.append(f"frequencies sum to {total}, not r-1 = {dist.r - 1}")
    moment = sum(w * f for w, f in dist.entries) * dist.q
    expected = dist.n * dist.r * (dist.q - 1)
    if moment != expected:
        problems.append(
            f"first moment is off by {(moment - expected) // dist.q} "
            "(sum of w*f must equal n*r*(q-1)/q)"
        )
    return problems
