import random

import pytest

from monocubic import jks
from monocubic.arith import factor, is_squarefree
from monocubic.jks import (
    JksCase,
    Verdict,
    dedekind_prime_check,
    h_polynomials,
    jks_prime_analysis,
    monogenicity_report,
)
from monocubic.polycore import Cubic, Irreducibility, Trinomial, is_irreducible, reduce_mod, swan_discriminant


@pytest.mark.parametrize(
    "t, q, case, ok",
    [
        (Trinomial(3, 1, -3, 1), 3, JksCase.C2, True),
        (Trinomial(3, 1, -4, 4), 2, JksCase.C1, False),
        (Trinomial(3, 1, 1, 6), 2, JksCase.C3, False),
        (Trinomial(4, 2, 3, 1), 2, JksCase.C4, True),
        (Trinomial(3, 1, 1, 79), 7, JksCase.C5, False),
    ],
)
def test_case_examples(t, q, case, ok):
    a = jks_prime_analysis(t, q)
    assert (a.case, a.index_free) == (case, ok)


def test_example_arithmetic():
    assert swan_discriminant(Trinomial(3, 1, -4, 4)) == -176
    assert 4 * 1 + 27 * 79**2 == 168511 == 49 * 3439
    # H1 = x^2 + x + 1 and H2 = x + 1 mod 2 for x^4 + 3x^2 + 1
    h1, h2, wit = h_polynomials(Trinomial(4, 2, 3, 1), 2)
    assert reduce_mod(h1, 2) == [1, 1, 1]
    assert reduce_mod(h2, 2) == [1, 1]
    assert wit["k"] == 1


def test_analysis_domain_errors():
    t = Trinomial(3, 1, -3, 1)
    with pytest.raises(ValueError):
        jks_prime_analysis(t, 2)
    with pytest.raises(ValueError):
        jks_prime_analysis(t, 9)


def test_report_examples():
    r = monogenicity_report(Trinomial(3, 1, -3, 1))
    assert r.verdict is Verdict.MONOGENIC and r.cyclic_cubic is True
    assert r.discriminant == 81 and r.discriminant_square_root == 9
    r = monogenicity_report(Trinomial(3, 2, 3, -3))
    assert r.verdict is Verdict.MONOGENIC and r.cyclic_cubic is True
    r = monogenicity_report(Trinomial(3, 1, -4, 4))
    assert r.verdict is Verdict.NOT_MONOGENIC
    assert r.cyclic_cubic is False
    assert "2" in r.reason


def test_report_reducible_and_repeated_root():
    r = monogenicity_report(Trinomial(3, 1, 1, 30))
    assert r.irreducible is Irreducibility.NO
    assert r.verdict is Verdict.NOT_MONOGENIC
    # x^3 - 3x + 2 = (x - 1)^2 (x + 2)
    r = monogenicity_report(Trinomial(3, 1, -3, 2))
    assert r.discriminant == 0
    assert r.verdict is Verdict.NOT_MONOGENIC
    assert r.reason == "repeated root / not separable"


def test_report_unknown_when_factoring_gives_up(monkeypatch):
    # the discriminant is -(2719892137 * 9926864263), out of reach of trial division
    monkeypatch.setattr(jks, "RHO_BUDGET", 0)
    t = Trinomial(3, 1, 1, 1000000001)
    assert -swan_discriminant(t) == 2719892137 * 9926864263
    r = monogenicity_report(t)
    cofactors = [a for a in r.prime_analyses if a.case is JksCase.NOT_APPLICABLE]
    assert [a.q for a in cofactors] == [2719892137 * 9926864263]
    assert r.verdict is Verdict.UNKNOWN
    assert all(a.index_free is None for a in cofactors)


def test_report_aggregation_invariants():
    rng = random.Random(3)
    for _ in range(400):
        m = rng.choice((1, 2))
        t = Trinomial(3, m, rng.randint(-300, 300) or 1, rng.randint(-300, 300) or 1)
        r = monogenicity_report(t)
        if r.discriminant == 0:
            continue
        assert sorted(a.q for a in r.prime_analyses) == factor(r.discriminant).primes
        if r.irreducible is Irreducibility.YES:
            expected = all(a.index_free for a in r.prime_analyses)
            assert r.is_monogenic == expected
            # squarefree discriminant forces index 1
            if is_squarefree(r.discriminant):
                assert r.verdict is Verdict.MONOGENIC
        assert r.cyclic_cubic == (r.irreducible is Irreducibility.YES and r.discriminant_square_root is not None)


@pytest.mark.parametrize(
    "c, q, ok",
    [(Cubic(0, -3, 1), 3, True), (Cubic(0, -4, 4), 2, False), (Cubic(0, 1, 79), 7, False)],
)
def test_dedekind_examples(c, q, ok):
    assert dedekind_prime_check(c, q) is ok


def test_dedekind_worked_example():
    # x^3 - 3x + 1 = (x + 1)^3 mod 3, so F = ((x + 1)^3 - f) / 3 = x^2 + 2x
    assert [(a - b) // 3 for a, b in zip([1, 3, 3, 1], [1, -3, 0, 1])] == [0, 2, 1, 0]
    assert (-1) ** 2 + 2 * (-1) == -1


def test_jks_matches_dedekind_small_box():
    for m in (1, 2):
        for A in range(-25, 26):
            for B in range(-25, 26):
                if not (A and B):
                    continue
                t = Trinomial(3, m, A, B)
                if is_irreducible(t) is not Irreducibility.YES:
                    continue
                disc = swan_discriminant(t)
                for q in factor(disc).primes:
                    assert jks_prime_analysis(t, q, disc).index_free == dedekind_prime_check(t.as_cubic(), q), (t, q)


def _sympy_field_discriminant(t):
    sympy = pytest.importorskip("sympy")
    from sympy.polys.numberfields.basis import round_two

    x = sympy.Symbol("x")
    poly = sympy.Poly(x**t.N + t.A * x**t.M + t.B, x, domain="ZZ")
    try:
        _, dK = round_two(poly)
    except Exception:
        return None
    return int(dK)


def test_higher_degree_against_integral_basis():
    rng = random.Random(11)
    checked = 0
    for _ in range(120):
        N = rng.randint(4, 6)
        t = Trinomial(N, rng.randint(1, N - 1), rng.choice([-6, -4, -3, -2, -1, 1, 2, 3, 4, 6]), rng.choice([-6, -3, -2, -1, 1, 2, 3, 5, 6]))
        if is_irreducible(t) is not Irreducibility.YES:
            continue
        dK = _sympy_field_discriminant(t)
        if dK is None:
            continue
        r = monogenicity_report(t)
        assert r.is_monogenic == (dK == r.discriminant), t
        checked += 1
    assert checked >= 30
