import itertools
import random

import pytest

from monocubic.polycore import (
    Cubic,
    GaloisType,
    Irreducibility,
    Trinomial,
    cubic_rational_roots,
    cubic_trinomial_discriminant,
    galois_type_cubic,
    gcd_mod,
    generic_cubic_discriminant,
    is_irreducible,
    is_irreducible_mod,
    poly_mul,
    resultant_discriminant,
    swan_discriminant,
)

NONZERO_50 = [v for v in range(-50, 51) if v]


def test_trinomial_validation():
    t = Trinomial(6, 4, 1, 1)
    assert (t.d, t.N1, t.M1) == (2, 3, 2)
    assert t.coeffs() == [1, 0, 0, 0, 1, 0, 1]
    for bad in [(1, 0, 1, 1), (3, 3, 1, 1), (3, 0, 1, 1), (3, 1, 0, 1), (3, 1, 1, 0)]:
        with pytest.raises(ValueError):
            Trinomial(*bad)


def test_swan_examples():
    assert swan_discriminant(Trinomial(3, 1, -3, 1)) == 81
    assert swan_discriminant(Trinomial(3, 2, 3, -3)) == 81
    assert -4 * (-39) ** 3 - 27 * 91**2 == 13689 == 81 * 13**2
    assert swan_discriminant(Trinomial(3, 1, -39, 91)) == 13689


def test_cubic_trinomial_discriminant_examples():
    assert cubic_trinomial_discriminant(1, -7, 7) == 49
    assert cubic_trinomial_discriminant(2, -3, 1) == 81
    assert cubic_trinomial_discriminant(1, -4, 4) == -176
    with pytest.raises(ValueError):
        cubic_trinomial_discriminant(3, 1, 1)


def test_generic_cubic_examples():
    assert generic_cubic_discriminant(Cubic(0, -3, 1)) == 81
    assert generic_cubic_discriminant(Cubic(-1, -4, -1)) == 169
    assert generic_cubic_discriminant(Cubic(0, 0, -1)) == -27


def test_resultant_examples():
    assert resultant_discriminant([1, -3, 0, 1]) == 81
    assert resultant_discriminant([1, 2, 1]) == 0
    assert resultant_discriminant([1, 0, 3, 0, 1]) == 400
    # x^2 + bx + c has discriminant b^2 - 4c
    assert resultant_discriminant([3, 5, 1]) == 25 - 12
    with pytest.raises(ValueError):
        resultant_discriminant([1, 2, 2])
    with pytest.raises(ValueError):
        resultant_discriminant([1] + [0] * 8 + [1])


def test_swan_matches_resultant_sampled():
    rng = random.Random(7)
    for _ in range(1000):
        N = rng.randint(2, 8)
        t = Trinomial(N, rng.randint(1, N - 1), rng.choice(NONZERO_50), rng.choice(NONZERO_50))
        assert swan_discriminant(t) == resultant_discriminant(t.coeffs()), t


def test_closed_forms_match_swan():
    for A in range(-200, 201, 3):
        for B in range(-200, 201):
            if A and B:
                for m in (1, 2):
                    assert cubic_trinomial_discriminant(m, A, B) == swan_discriminant(Trinomial(3, m, A, B))


def test_generic_cubic_matches_resultant():
    for a, b, c in itertools.product(range(-20, 21, 2), range(-20, 21), range(-20, 21, 3)):
        assert generic_cubic_discriminant(Cubic(a, b, c)) == resultant_discriminant([c, b, a, 1])


def test_repeated_roots_have_zero_discriminant():
    for r, s in itertools.product(range(-6, 7), repeat=2):
        coeffs = poly_mul(poly_mul([-r, 1], [-r, 1]), [-s, 1])
        c = Cubic(coeffs[2], coeffs[1], coeffs[0])
        assert generic_cubic_discriminant(c) == 0
        assert resultant_discriminant(coeffs) == 0


def test_rational_roots():
    assert cubic_rational_roots(Cubic(0, -3, 1)) == []
    assert (-3) ** 3 + (-3) + 30 == 0
    assert cubic_rational_roots(Cubic(0, 1, 30)) == [-3]
    assert cubic_rational_roots(Cubic(-3, 0, 3)) == []
    # (x-1)(x-2)(x+3) = x^3 - 7x + 6
    assert cubic_rational_roots(Cubic(0, -7, 6)) == [-3, 1, 2]
    with pytest.raises(ValueError):
        cubic_rational_roots(Cubic(1, 1, 0))


def _brute_quartic_splits(coeffs, box=12):
    c0, c1, c2, c3 = coeffs[:4]
    for u, b, v, e in itertools.product(range(-box, box + 1), repeat=4):
        if b * e == c0 and u + v == c3 and u * v + b + e == c2 and u * e + v * b == c1:
            return True
    return False


def test_irreducible_examples():
    assert is_irreducible(Trinomial(3, 1, -3, 1)) is Irreducibility.YES
    assert is_irreducible(Trinomial(3, 1, 1, 30)) is Irreducibility.NO
    assert is_irreducible(Trinomial(4, 2, 3, 1)) is Irreducibility.YES
    assert not _brute_quartic_splits([1, 0, 3, 0, 1])


def test_quartic_irreducibility_against_brute_force():
    # x^4 + A x^2 + B with small coefficients; no integer roots means
    # reducibility is exactly a split into integer quadratics
    for A in range(-6, 7):
        for B in range(-6, 7):
            if A and B:
                t = Trinomial(4, 2, A, B)
                has_root = any(r**4 + A * r * r + B == 0 for r in range(-6, 7))
                expected = Irreducibility.NO if (has_root or _brute_quartic_splits(t.coeffs(), 7)) else Irreducibility.YES
                assert is_irreducible(t) is expected, t


def test_higher_degree_certificates():
    # x^5 - x - 1 is irreducible mod 5 (Artin-Schreier)
    assert is_irreducible(Trinomial(5, 1, -1, -1)) is Irreducibility.YES
    # x^5 + x + 1 = (x^2 + x + 1)(x^3 - x^2 + 1): no root and no certificate
    assert is_irreducible(Trinomial(5, 1, 1, 1)) is Irreducibility.UNKNOWN
    assert is_irreducible(Trinomial(5, 1, 1, -2)) is Irreducibility.NO


def test_irreducible_mod_p_by_enumeration():
    p = 3
    monics = {}
    for deg in (1, 2):
        for tail in itertools.product(range(p), repeat=deg):
            monics.setdefault(deg, []).append(list(tail) + [1])
    for tail in itertools.product(range(p), repeat=4):
        f = list(tail) + [1]
        reducible = any(
            len(gcd_mod(f, g, p)) == len(g) for deg in (1, 2) for g in monics[deg]
        )
        assert is_irreducible_mod(f, p) == (not reducible), f


def test_galois_type_examples():
    assert galois_type_cubic(Cubic(0, -7, 7)) is GaloisType.C3
    assert galois_type_cubic(Cubic(0, 1, 1)) is GaloisType.S3
    assert galois_type_cubic(Cubic(0, 0, -1)) is GaloisType.REDUCIBLE
    assert galois_type_cubic(Cubic(1, 1, 0)) is GaloisType.REDUCIBLE
