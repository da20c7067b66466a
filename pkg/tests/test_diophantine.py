from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import primitive_root, primerange

from ircode import diophantine as dio
from ircode.errors import AmbiguousOrbit, IrrationalResidue, NoSolution

PRIMES_1_MOD_3 = [p for p in primerange(5, 400) if p % 3 == 1]
PRIMES_1_MOD_4 = [p for p in primerange(5, 400) if p % 4 == 1]
PRIMES_1_MOD_8 = [p for p in primerange(5, 800) if p % 8 == 1]
PRIMES_3_MOD_8 = [p for p in primerange(3, 400) if p % 8 == 3]


def gaussian(a, b):
    return dio.QuadraticRingElement(dio.GAUSSIAN, a, b)


# -- ring arithmetic ---------------------------------------------------------

small = st.integers(-50, 50)


@given(small, small, small, small)
def test_norm_is_multiplicative(a, b, c, d):
    for ring in (dio.GAUSSIAN, dio.SQRT_M2):
        x = dio.QuadraticRingElement(ring, a, b)
        y = dio.QuadraticRingElement(ring, c, d)
        assert (x * y).norm() == x.norm() * y.norm()
    if (a - b) % 2 == 0 and (c - d) % 2 == 0:
        x = dio.QuadraticRingElement(dio.EISENSTEIN, a, b)
        y = dio.QuadraticRingElement(dio.EISENSTEIN, c, d)
        assert (x * y).norm() == x.norm() * y.norm()


def test_units():
    assert dio.unit_power(dio.EISENSTEIN, 6) == dio.unit_power(dio.EISENSTEIN, 0)
    assert dio.unit_power(dio.EISENSTEIN, 3).rational_part() == -1
    assert dio.unit_power(dio.GAUSSIAN, 2).rational_part() == -1
    assert dio.unit_power(dio.GAUSSIAN, 1) * dio.unit_power(dio.GAUSSIAN, 3) == gaussian(1, 0)


def test_irrational_residue():
    with pytest.raises(IrrationalResidue):
        gaussian(1, 1).rational_part()


def test_not_an_eisenstein_integer():
    with pytest.raises(ValueError):
        dio.QuadraticRingElement(dio.EISENSTEIN, 1, 0)


# -- solvers -----------------------------------------------------------------


@pytest.mark.parametrize("p", PRIMES_1_MOD_3[:12])
@pytest.mark.parametrize("e", [1, 2, 3])
def test_solve_cd(p, e):
    P = p**e
    c, d = dio.solve_cd(P, p)
    assert 4 * P == c * c + 27 * d * d
    assert c % 3 == 1 and c % p


@pytest.mark.parametrize("p", PRIMES_1_MOD_4[:12])
@pytest.mark.parametrize("e", [1, 2, 3])
def test_solve_uv(p, e):
    P = p**e
    u, v = dio.solve_uv(P, p)
    assert P == u * u + 4 * v * v
    assert u % 4 == 1 and u % p


def test_solve_uv_small_square():
    # 13^2 = 169 = 5^2 + 4*6^2 with 5 = 1 (mod 4)
    assert dio.solve_uv(169, 13) == (5, 6)


@pytest.mark.parametrize("p", PRIMES_1_MOD_3)
def test_solve_r3s3(p):
    g = primitive_root(p)
    sol = dio.solve_r3s3(p, g)
    r3, s3 = sol["r3"], sol["s3"]
    assert 4 * p == r3 * r3 + 3 * s3 * s3
    assert r3 % 3 == 1 and s3 % 3 == 0
    assert (3 * s3 - (2 * pow(g, (p - 1) // 3, p) + 1) * r3) % p == 0


@pytest.mark.parametrize("p", PRIMES_1_MOD_4)
def test_solve_a4b4(p):
    g = primitive_root(p)
    sol = dio.solve_a4b4(p, g)
    a4, b4, Z = sol["a4"], sol["b4"], sol["Z"]
    assert p == a4 * a4 + b4 * b4
    assert pow(g, Z, p) == 2
    assert a4 % 4 == -((-1) ** Z) % 4
    assert (b4 - a4 * pow(g, (p - 1) // 4, p)) % p == 0


@pytest.mark.parametrize("p", PRIMES_1_MOD_8)
def test_solve_a8b8_one_mod_eight(p):
    mult = dio.a8b8_multiplier(p, primitive_root(p))
    assert mult * mult % p == p - 2
    sol = dio.solve_a8b8(p, mult)
    a8, b8 = sol["a8"], sol["b8"]
    assert p == a8 * a8 + 2 * b8 * b8
    assert a8 % 4 == 3
    assert (2 * b8 - mult * a8) % p == 0


@pytest.mark.parametrize("p", PRIMES_3_MOD_8)
def test_solve_a8b8_three_mod_eight(p):
    mult = next(x for x in range(p) if x * x % p == p - 2)
    sol = dio.solve_a8b8(p, mult)
    a8, b8 = sol["a8"], sol["b8"]
    assert p == a8 * a8 + 2 * b8 * b8
    assert a8 % 4 == (-1) ** ((p - 3) // 8) % 4
    assert (2 * b8 - mult * a8) % p == 0


def test_a8_for_three():
    assert dio.solve_a8b8(3, 1)["a8"] == 1


def test_wrong_residue_classes():
    with pytest.raises(NoSolution):
        dio.solve_r3s3(11, 2)
    with pytest.raises(NoSolution):
        dio.solve_a4b4(7, 3)
    with pytest.raises(NoSolution):
        dio.solve_a8b8(5, 1)
    with pytest.raises(NoSolution):
        dio.solve_dickson(7, 7)


def test_discrete_log():
    assert dio.discrete_log(3, 1, 7) == 6
    assert pow(3, dio.discrete_log(3, 2, 7), 7) == 2
    with pytest.raises(NoSolution):
        dio.discrete_log(2, 3, 7)  # 2 generates only the squares mod 7


# -- power sums --------------------------------------------------------------


def test_initial_values():
    assert dio.sequence_V(0, 0, 1, 3) == 2
    assert dio.sequence_QP(0, 0, 1, 2) == (2, 0)
    assert dio.sequence_TS(0, 3, 2) == (2, 0)
    assert dio.sequence_QP(0, 1, -1, 4) == (-2, 8)


def test_V_against_its_recurrence_for_seven():
    sol = dio.solve_r3s3(7, primitive_root(7))
    r3, s3 = sol["r3"], sol["s3"]
    v0, v1 = dio.sequence_V(1, 0, r3, s3), dio.sequence_V(1, 1, r3, s3)
    assert dio.sequence_V(1, 2, r3, s3) == r3 * v1 - 7 * v0


@pytest.mark.parametrize("p", [7, 13, 31, 37])
@pytest.mark.parametrize("j", range(6))
def test_V_recurrence(p, j):
    sol = dio.solve_r3s3(p, primitive_root(p))
    V = [dio.sequence_V(j, n, sol["r3"], sol["s3"]) for n in range(52)]
    for n in range(1, 51):
        assert V[n + 1] == sol["r3"] * V[n] - p * V[n - 1]


@pytest.mark.parametrize("p", [5, 13, 17, 29])
@pytest.mark.parametrize("j", range(4))
def test_QP_recurrence(p, j):
    sol = dio.solve_a4b4(p, primitive_root(p))
    a4, b4 = sol["a4"], sol["b4"]
    seq = [dio.sequence_QP(j, n, a4, b4) for n in range(52)]
    for n in range(1, 51):
        for idx in (0, 1):
            assert seq[n + 1][idx] == 2 * a4 * seq[n][idx] - p * seq[n - 1][idx]
    # Q^2 + P^2 = 4 p^n
    for n, (Q, P) in enumerate(seq):
        assert Q * Q + P * P == 4 * p**n


@pytest.mark.parametrize("p", [3, 11, 17, 19, 41])
def test_TS_recurrence(p):
    a8 = next(a for a in range(-20, 21) if (p - a * a) > 0 and (p - a * a) % 2 == 0
              and int(((p - a * a) // 2) ** 0.5) ** 2 == (p - a * a) // 2)
    b8 = int(((p - a8 * a8) // 2) ** 0.5)
    seq = [dio.sequence_TS(n, a8, b8) for n in range(52)]
    for n in range(1, 51):
        for idx in (0, 1):
            assert seq[n + 1][idx] == 2 * a8 * seq[n][idx] - p * seq[n - 1][idx]
    for n, (T, S) in enumerate(seq):
        assert T * T + 2 * S * S == 4 * p**n


# -- Dickson's system --------------------------------------------------------


def check_dickson(sol, P, p):
    x, w, v, u = sol
    assert 16 * P == x * x + 125 * w * w + 50 * v * v + 50 * u * u
    assert x * w == v * v - 4 * v * u - u * u
    assert x % 5 == 4
    assert (x * x - 125 * w * w) % p


def dickson_roots(start, P):
    """Roots from an orbit listed from ``start``."""
    x = start[0]
    orbit = dio.dickson_orbit(start)
    roots = [Fraction(-P, 16) * (x**3 - 25 * dio.dickson_L(start))]
    roots += [Fraction(P, 64) * (x**3 - 25 * dio.dickson_M(s)) for s in orbit]
    return sorted(roots)


@pytest.mark.parametrize("p,P", [(11, 11), (31, 31), (41, 41), (61, 61), (71, 71), (11, 121), (31, 961)])
def test_dickson_orbit(p, P):
    orbit = dio.solve_dickson(P, p)
    assert len(orbit) == 4
    for sol in orbit:
        check_dickson(sol, P, p)
    sigma = dio.dickson_sigma
    assert sigma(sigma(sigma(sigma(orbit[0])))) == orbit[0]
    assert len({dio.dickson_L(s) for s in orbit}) == 1
    reference = dickson_roots(orbit[0], P)
    assert all(r.denominator == 1 for r in reference)
    for start in orbit[1:]:
        assert dickson_roots(start, P) == reference
    assert sum(reference) == 0


def test_dickson_exhaustive_for_eleven():
    # |x| <= 13 for 16*11 = 176; every admissible solution sits in one orbit
    sols = dio.dickson_solutions(11, 11)
    assert all(abs(x) <= 13 for x, *_ in sols)
    assert set(sols) == set(dio.solve_dickson(11, 11))


def test_ambiguous_orbit_is_reported(monkeypatch):
    extra = (-1, 1, 1, 1)
    real = dio.dickson_solutions

    def with_stray(P, p):
        return real(P, p) + [extra]

    monkeypatch.setattr(dio, "dickson_solutions", with_stray)
    with pytest.raises(AmbiguousOrbit):
        dio.solve_dickson(11, 11)
