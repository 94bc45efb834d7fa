"""
Integer polynomials: trinomials, discriminants, irreducibility, cubic Galois type.

Dense polynomials are plain lists of ints, constant term first.  Helpers
ending in ``_mod`` work over the prime field F_p with coefficients kept in
``range(p)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .arith import as_perfect_square, divisors, factor, is_prime, small_primes


@dataclass(frozen=True)
class Trinomial:
    """x^N + A x^M + B."""

    N: int
    M: int
    A: int
    B: int

    def __post_init__(self):
        if self.N < 2:
            raise ValueError(f"degree must be at least 2, got {self.N}")
        if not 0 < self.M < self.N:
            raise ValueError(f"need 0 < M < N, got M={self.M}, N={self.N}")
        if self.A == 0 or self.B == 0:
            raise ValueError("trinomial needs A != 0 and B != 0")

    @property
    def d(self) -> int:
        return math.gcd(self.N, self.M)

    @property
    def N1(self) -> int:
        return self.N // self.d

    @property
    def M1(self) -> int:
        return self.M // self.d

    def coeffs(self) -> list[int]:
        c = [0] * (self.N + 1)
        c[0] += self.B
        c[self.M] += self.A
        c[self.N] = 1
        return c

    def as_cubic(self) -> Cubic:
        if self.N != 3:
            raise ValueError("not a cubic trinomial")
        c = self.coeffs()
        return Cubic(c[2], c[1], c[0])

    def __str__(self) -> str:
        return format_poly(self.coeffs())


@dataclass(frozen=True)
class Cubic:
    """x^3 + a x^2 + b x + c."""

    a: int
    b: int
    c: int

    def coeffs(self) -> list[int]:
        return [self.c, self.b, self.a, 1]

    def __call__(self, x):
        return ((x + self.a) * x + self.b) * x + self.c

    def __str__(self) -> str:
        return format_poly(self.coeffs())


class Irreducibility(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class GaloisType(str, Enum):
    REDUCIBLE = "reducible"
    C3 = "C3"
    S3 = "S3"


def format_poly(coeffs: list[int], var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        body = str(mag) if (mag != 1 or i == 0) else ""
        if body and mono:
            body += "*"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body + mono))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


# ---------------------------------------------------------------- discriminants


def swan_discriminant(t: Trinomial) -> int:
    N, M, A, B, d = t.N, t.M, t.A, t.B, t.d
    sign = -1 if (N * (N - 1) // 2) % 2 else 1
    inner = N ** (N // d) * B ** ((N - M) // d) - (-1) ** (N // d) * (N - M) ** (
        (N - M) // d
    ) * M ** (M // d) * A ** (N // d)
    return sign * B ** (M - 1) * inner**d


def cubic_trinomial_discriminant(m: int, A: int, B: int) -> int:
    """Discriminant of x^3 + A x^m + B for m in {1, 2}."""
    if m == 1:
        return -4 * A**3 - 27 * B**2
    if m == 2:
        return -B * (4 * A**3 + 27 * B)
    raise ValueError(f"m must be 1 or 2, got {m}")


def generic_cubic_discriminant(c: Cubic) -> int:
    a, b, k = c.a, c.b, c.c
    return 18 * a * b * k - 4 * a**3 * k + a * a * b * b - 4 * b**3 - 27 * k * k


def _bareiss_det(mat: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    m = [row[:] for row in mat]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_matrix(f: list[int], g: list[int]) -> list[list[int]]:
    """Sylvester matrix of f, g given constant-first; rows use leading-first order."""
    n, m = len(f) - 1, len(g) - 1
    fr, gr = f[::-1], g[::-1]
    size = n + m
    rows = []
    for i in range(m):
        rows.append([0] * i + fr + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gr + [0] * (size - m - 1 - i))
    return rows


def resultant_discriminant(coeffs: list[int]) -> int:
    """
    Discriminant of a monic integer polynomial (constant term first) as
    (-1)^(n(n-1)/2) Res(f, f').  Test oracle, degree 2..8.
    """
    n = len(coeffs) - 1
    if not 2 <= n <= 8:
        raise ValueError(f"degree {n} outside 2..8")
    if coeffs[-1] != 1:
        raise ValueError("polynomial must be monic")
    deriv = [i * coeffs[i] for i in range(1, n + 1)]
    res = _bareiss_det(sylvester_matrix(coeffs, deriv))
    return res if (n * (n - 1) // 2) % 2 == 0 else -res


# ---------------------------------------------------------------- roots, irreducibility


def integer_roots(coeffs: list[int]) -> list[int]:
    """Integer roots of a monic integer polynomial with nonzero constant term."""
    c0 = coeffs[0]
    if c0 == 0:
        raise ValueError("constant term is 0")
    roots = []
    for dv in divisors(factor(c0)):
        for r in (-dv, dv):
            if poly_eval(coeffs, r) == 0:
                roots.append(r)
    return sorted(roots)


def cubic_rational_roots(c: Cubic) -> list[int]:
    if c.c == 0:
        raise ValueError("constant term is 0")
    return integer_roots(c.coeffs())


def _has_quadratic_factor(coeffs: list[int]) -> bool:
    """Whether a monic integer quartic splits as two monic integer quadratics."""
    c0, c1, c2, c3 = coeffs[0], coeffs[1], coeffs[2], coeffs[3]
    # (x^2 + u x + b)(x^2 + v x + e): u + v = c3, uv = c2 - b - e, ue + vb = c1, be = c0
    for dv in divisors(factor(c0)):
        for b in (dv, -dv):
            e = c0 // b
            disc = c3 * c3 - 4 * (c2 - b - e)
            r = as_perfect_square(disc)
            if r is None or (c3 + r) % 2:
                continue
            for u in {(c3 + r) // 2, (c3 - r) // 2}:
                v = c3 - u
                if u * e + v * b == c1:
                    return True
    return False


def is_irreducible(t: Trinomial, certificate_prime_bound: int = 100) -> Irreducibility:
    """
    Irreducibility over Q.

    Decisive for N <= 4 (integer roots, plus quadratic splittings for
    quartics).  For larger N a prime p not dividing the discriminant whose
    reduction is irreducible over F_p certifies irreducibility; otherwise the
    answer is UNKNOWN.
    """
    coeffs = t.coeffs()
    if integer_roots(coeffs):
        return Irreducibility.NO
    if t.N <= 3:
        return Irreducibility.YES
    if t.N == 4:
        return Irreducibility.NO if _has_quadratic_factor(coeffs) else Irreducibility.YES
    disc = swan_discriminant(t)
    for p in small_primes():
        if p > certificate_prime_bound:
            break
        if disc % p and is_irreducible_mod(coeffs, p):
            return Irreducibility.YES
    return Irreducibility.UNKNOWN


def galois_type_cubic(c: Cubic) -> GaloisType:
    if c.c == 0 or cubic_rational_roots(c):
        return GaloisType.REDUCIBLE
    if as_perfect_square(generic_cubic_discriminant(c)) is not None:
        return GaloisType.C3
    return GaloisType.S3


# ---------------------------------------------------------------- dense polynomial helpers


def poly_eval(coeffs: list[int], x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_add(f: list[int], g: list[int]) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    out = f[:]
    for i, c in enumerate(g):
        out[i] += c
    return trim(out)


def poly_mul(f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def poly_pow(f: list[int], e: int) -> list[int]:
    out = [1]
    base = f[:]
    while e:
        if e & 1:
            out = poly_mul(out, base)
        base = poly_mul(base, base)
        e >>= 1
    return out


def reduce_mod(f: list[int], p: int) -> list[int]:
    return trim([c % p for c in f])


def divmod_mod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder over F_p; g must be nonzero mod p."""
    r = reduce_mod(f, p)
    g = reduce_mod(g, p)
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    inv = pow(g[-1], -1, p)
    dg = len(g) - 1
    q = [0] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and r:
        shift = len(r) - 1 - dg
        coef = r[-1] * inv % p
        q[shift] = coef
        for i, c in enumerate(g):
            r[i + shift] = (r[i + shift] - coef * c) % p
        trim(r)
    return trim(q), r


def monic_mod(f: list[int], p: int) -> list[int]:
    f = reduce_mod(f, p)
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def gcd_mod(f: list[int], g: list[int], p: int) -> list[int]:
    """Monic gcd over F_p (empty list means the zero polynomial)."""
    a, b = monic_mod(f, p), monic_mod(g, p)
    while b:
        _, r = divmod_mod(a, b, p)
        a, b = b, monic_mod(r, p)
    return a


def mulmod_mod(f: list[int], g: list[int], m: list[int], p: int) -> list[int]:
    return divmod_mod(reduce_mod(poly_mul(f, g), p), m, p)[1]


def powmod_mod(f: list[int], e: int, m: list[int], p: int) -> list[int]:
    out = [1]
    base = divmod_mod(f, m, p)[1]
    while e:
        if e & 1:
            out = mulmod_mod(out, base, m, p)
        base = mulmod_mod(base, base, m, p)
        e >>= 1
    return out


def is_irreducible_mod(f: list[int], p: int) -> bool:
    """Rabin's test for a polynomial over F_p whose leading coefficient is a unit."""
    f = monic_mod(f, p)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    # x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) == 1 for prime r | n
    h = x
    powers = {}
    for i in range(1, n + 1):
        h = powmod_mod(h, p, f, p)
        powers[i] = h
    if reduce_mod(poly_add(powers[n], [0, -1]), p):
        return False
    for r in (q for q in range(2, n + 1) if n % q == 0 and is_prime(q)):
        diff = reduce_mod(poly_add(powers[n // r], [0, -1]), p)
        if len(gcd_mod(diff, f, p)) > 1:
            return False
    return True


def exact_div_scalar(f: list[int], q: int) -> list[int]:
    out = []
    for c in f:
        if c % q:
            raise ArithmeticError(f"coefficient {c} not divisible by {q}")
        out.append(c // q)
    return out

