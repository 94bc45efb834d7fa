"""
Integer utilities: square roots, primality, factorization, valuations.

Everything here is exact.  Factorization is trial division up to
``TRIAL_BOUND`` followed by Brent's variant of Pollard rho with a fixed
schedule of polynomial constants, so the same input always takes the same
path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

TRIAL_BOUND = 10**6

# Strong-pseudoprime bases that make Miller-Rabin deterministic below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981

_SQUARES_MOD_64 = frozenset(i * i % 64 for i in range(64))


class IncompleteFactorization(ArithmeticError):
    """Raised when the Pollard rho budget runs out before n is fully split."""

    def __init__(self, n: int, found: list[tuple[int, int]], remaining: list[int]):
        super().__init__(f"could not fully factor {n}; composite cofactors {remaining}")
        self.n = n
        self.found = found
        self.remaining = remaining


@dataclass(frozen=True)
class FactoredInteger:
    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or 1")
        if self.sign == 0 and self.factors:
            raise ValueError("zero has no factorization")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(e <= 0 for _, e in self.factors):
            raise ValueError("exponents must be positive")

    @property
    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __str__(self) -> str:
        if not self.factors:
            return str(self.sign)
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        return ("-" if self.sign < 0 else "") + body


def isqrt(n: int) -> int:
    """
    Floor of the square root.

    >>> isqrt(13688)
    116
    """
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def as_perfect_square(n: int) -> int | None:
    """Return r >= 0 with r*r == n, or None."""
    if n < 0:
        return None
    if n & 63 not in _SQUARES_MOD_64:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


@lru_cache(maxsize=1)
def small_primes(bound: int = TRIAL_BOUND) -> tuple[int, ...]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1
    if as_perfect_square(n) is not None:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(x):
        return (x + n if x % 2 else x) // 2 % n

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """
    Deterministic below 3.3e24 (Miller-Rabin with fixed bases); above that,
    Baillie-PSW, which has no known counterexample.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    if n < _MR_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def _brent(n: int, c: int, budget: int) -> int | None:
    """One Pollard-Brent run with x -> x^2 + c; returns a nontrivial factor or None."""
    y, r, q, m = 2, 1, 1, 128
    g = 1
    spent = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        spent += r
        r *= 2
        if spent > budget:
            return None
    if g == n:
        # backtrack one step at a time from the saved state
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _split(n: int, budget: int | None) -> int | None:
    # c = 1, 2, 3, ... in order: identical inputs take identical paths
    if budget is None:
        constants, per_try = range(1, 1 << 20), 1 << 62
    else:
        constants, per_try = range(1, 5), max(budget // 4, 1)
    for c in constants:
        g = _brent(n, c, per_try)
        if g is not None:
            return g
    return None


def factor(n: int, rho_budget: int | None = None) -> FactoredInteger:
    """
    Complete factorization of a nonzero integer.

    ``rho_budget`` caps Pollard rho iterations per cofactor; when it is
    exhausted an :class:`IncompleteFactorization` is raised instead of
    guessing.  With no budget the search runs until it succeeds.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    m = abs(n)
    counts: dict[int, int] = {}
    for p in small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            counts[p] = e
    stack = [m] if m > 1 else []
    remaining = []
    while stack:
        r = stack.pop()
        if r == 1:
            continue
        if r <= TRIAL_BOUND**2 or is_prime(r):
            # anything left below the square of the trial bound is prime
            counts[r] = counts.get(r, 0) + 1
            continue
        root = as_perfect_square(r)
        if root is not None:
            stack += [root, root]
            continue
        g = _split(r, rho_budget)
        if g is None:
            remaining.append(r)
            continue
        stack += [g, r // g]
    found = sorted(counts.items())
    if remaining:
        raise IncompleteFactorization(n, found, sorted(remaining))
    return FactoredInteger(sign, tuple(found))


def is_squarefree(n: int) -> bool:
    if n == 0:
        raise ValueError("squarefreeness of 0 is undefined here")
    return all(e == 1 for _, e in factor(n).factors)


def valuation(n: int, q: int) -> int:
    """Exponent of the prime q in n."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    e = 0
    while n % q == 0:
        n //= q
        e += 1
    return e


def divisors(fi: FactoredInteger) -> list[int]:
    """Positive divisors, ascending."""
    divs = [1]
    for p, e in fi.factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)
