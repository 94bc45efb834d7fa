"""
Arithmetic in Q(alpha) = Q[x]/(f) for a monic irreducible cubic f, and an
exact test for equality of cyclic cubic fields.

Elements are stored as integer coordinates on 1, alpha, alpha^2 over a
positive common denominator.  Elements of Z[alpha] have denominator 1 and
never leave it under +, -, *.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .arith import factor
from .jks import dedekind_prime_check
from .polycore import Cubic, GaloisType, galois_type_cubic, generic_cubic_discriminant

START_PRECISION = 128
MAX_PRECISION = 2048


class IndeterminateError(ArithmeticError):
    """Numerical precision ran out before candidates could be separated."""


@dataclass(frozen=True)
class RingElement:
    modulus: Cubic
    coords: tuple[int, int, int]
    denominator: int = 1

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        g = math.gcd(self.denominator, *self.coords)
        if g > 1:
            object.__setattr__(self, "coords", tuple(c // g for c in self.coords))
            object.__setattr__(self, "denominator", self.denominator // g)

    @classmethod
    def constant(cls, modulus: Cubic, n: int) -> RingElement:
        return cls(modulus, (n, 0, 0))

    @classmethod
    def generator(cls, modulus: Cubic) -> RingElement:
        return cls(modulus, (0, 1, 0))

    @property
    def is_rational(self) -> bool:
        return self.coords[1] == 0 and self.coords[2] == 0

    @property
    def is_zero(self) -> bool:
        return self.coords == (0, 0, 0)

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coords[0], self.denominator)

    def _coerce(self, other) -> RingElement:
        if isinstance(other, int):
            return RingElement.constant(self.modulus, other)
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.modulus != self.modulus:
            raise ValueError("elements live in different quotient rings")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self.denominator, other.denominator
        coords = tuple(a * d2 + b * d1 for a, b in zip(self.coords, other.coords))
        return RingElement(self.modulus, coords, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.modulus, tuple(-c for c in self.coords), self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        u, v = self.coords, other.coords
        prod = [0] * 5
        for i in range(3):
            for j in range(3):
                prod[i + j] += u[i] * v[j]
        a, b, c = self.modulus.a, self.modulus.b, self.modulus.c
        # alpha^3 = -a alpha^2 - b alpha - c
        for deg in (4, 3):
            top = prod[deg]
            prod[deg] = 0
            prod[deg - 1] -= a * top
            prod[deg - 2] -= b * top
            prod[deg - 3] -= c * top
        return RingElement(self.modulus, tuple(prod[:3]), self.denominator * other.denominator)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = RingElement.constant(self.modulus, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __str__(self) -> str:
        parts = []
        for c, mono in zip(self.coords, ("", "a", "a^2")):
            if c and mono:
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
            elif c:
                parts.append(str(c))
        body = " + ".join(parts).replace("+ -", "- ") or "0"
        return body if self.denominator == 1 else f"({body})/{self.denominator}"


def ring_add(u: RingElement, v: RingElement) -> RingElement:
    return u + v


def ring_mul(u: RingElement, v: RingElement) -> RingElement:
    return u * v


def evaluate_at(c: Cubic, x: RingElement) -> RingElement:
    return ((x + c.a) * x + c.b) * x + c.c


def verify_split(g: Cubic, roots: list[RingElement]) -> bool:
    """Whether (x - r1)(x - r2)(x - r3) expands to exactly g."""
    if len(roots) != 3:
        raise ValueError("need exactly three roots")
    r1, r2, r3 = roots
    if not (r1.modulus == r2.modulus == r3.modulus):
        raise ValueError("roots live in different quotient rings")
    e1 = r1 + r2 + r3
    e2 = r1 * r2 + r1 * r3 + r2 * r3
    e3 = r1 * r2 * r3
    if not (e1.is_rational and e2.is_rational and e3.is_rational):
        return False
    return (-e1.rational_value(), e2.rational_value(), -e3.rational_value()) == (g.a, g.b, g.c)


# ---------------------------------------------------------------- real roots


@dataclass(frozen=True)
class RootInterval:
    """A real root known to lie in the open interval (lo, hi)."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.mid)


def _sturm_chain(c: Cubic) -> list[list[Fraction]]:
    def rem(f, g):
        f = f[:]
        while len(f) >= len(g):
            coef = f[-1] / g[-1]
            shift = len(f) - len(g)
            for i, x in enumerate(g):
                f[i + shift] -= coef * x
            f.pop()
        while f and f[-1] == 0:
            f.pop()
        return f

    f = [Fraction(x) for x in c.coeffs()]
    chain = [f, [f[1], 2 * f[2], 3 * f[3]]]
    while True:
        r = rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-x for x in r])
    return chain


def _sign_changes(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = Fraction(0)
        for coef in reversed(p):
            v = v * x + coef
        if v:
            signs.append(v > 0)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def real_roots(c: Cubic, precision_bits: int = START_PRECISION) -> list[RootInterval]:
    """
    The three real roots of a cubic with positive discriminant, descending,
    each enclosed in an interval of width at most 2**-precision_bits.
    """
    if generic_cubic_discriminant(c) <= 0:
        raise ValueError("need a positive discriminant (three distinct real roots)")
    chain = _sturm_chain(c)
    R = Fraction(1 + max(abs(c.a), abs(c.b), abs(c.c)))
    isolated = []
    stack = [(-R, R)]
    while stack:
        lo, hi = stack.pop()
        count = _sign_changes(chain, lo) - _sign_changes(chain, hi)
        if count == 0:
            continue
        if count == 1:
            isolated.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack += [(lo, mid), (mid, hi)]
    roots = [_refine(c, lo, hi, precision_bits) for lo, hi in isolated]
    return sorted(roots, key=lambda r: r.lo, reverse=True)


def _refine(c: Cubic, lo: Fraction, hi: Fraction, bits: int) -> RootInterval:
    # bisect on exact signs of f at dyadic points m / 2^p
    if c(lo) == 0:
        return RootInterval(lo, lo)
    if c(hi) == 0:
        return RootInterval(hi, hi)
    # isolation endpoints are dyadic, so they are exact at this scale
    p = max(bits + 2, lo.denominator.bit_length(), hi.denominator.bit_length())
    scale = 1 << p
    m_lo, m_hi = int(lo * scale), int(hi * scale)
    sign_lo = c(lo) > 0
    a, b, k = c.a, c.b, c.c
    s1, s2, s3 = scale, scale * scale, scale**3
    while m_hi - m_lo > 1:
        m = (m_lo + m_hi) // 2
        v = m * m * m + a * m * m * s1 + b * m * s2 + k * s3
        if v == 0:
            return RootInterval(Fraction(m, scale), Fraction(m, scale))
        if (v > 0) == sign_lo:
            m_lo = m
        else:
            m_hi = m
    return RootInterval(Fraction(m_lo, scale), Fraction(m_hi, scale))


# ---------------------------------------------------------------- field equality


def index_bound(f: Cubic) -> int:
    """
    A multiple of [Z_K : Z[alpha]]: product of q^floor(e/2) over q^e || disc(f)
    for the primes q that Dedekind's criterion cannot clear.
    """
    bound = 1
    for q, e in factor(generic_cubic_discriminant(f)).factors:
        if e >= 2 and not dedekind_prime_check(f, q):
            bound *= q ** (e // 2)
    return bound


def _check_cyclic(c: Cubic) -> None:
    if galois_type_cubic(c) is not GaloisType.C3:
        raise ValueError(f"{c} is not an irreducible cyclic cubic")


def _to_mpf(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def _propose(g: Cubic, f: Cubic, bits: int, denom: int) -> tuple[list, bool]:
    """Candidate coordinate vectors (scaled by denom); flag says precision ran short."""
    alphas = real_roots(f, bits)
    betas = real_roots(g, bits)
    eps = mpmath.mpf(2) ** (-bits)
    short = False
    out = []
    with mpmath.workprec(bits + 64):
        a = [_to_mpf(r.mid) for r in alphas]
        V = mpmath.matrix([[1, x, x * x] for x in a])
        Vinv = mpmath.inverse(V)
        inv_norm = mpmath.mnorm(Vinv, "inf")
        amax = max(abs(x) for x in a) + 1
        for perm in itertools.permutations(range(3)):
            rhs = mpmath.matrix([_to_mpf(betas[i].mid) for i in perm])
            x = Vinv * rhs
            xmax = max(abs(v) for v in x) + 1
            # first-order perturbation bound, doubled for slack
            err = 2 * inv_norm * eps * ((1 + 2 * amax) * xmax + 1) * denom
            if err >= mpmath.mpf(1) / 8:
                short = True
                continue
            scaled = [v * denom for v in x]
            rounded = [int(mpmath.nint(v)) for v in scaled]
            if all(abs(v - r) < mpmath.mpf(1) / 4 for v, r in zip(scaled, rounded)):
                out.append(tuple(rounded))
    return out, short


def express_root(g: Cubic, f: Cubic, precision_bits: int = START_PRECISION) -> RingElement | None:
    """
    A root of g written in Q(alpha), alpha a root of f, or None if g has no
    root there.  Numerics only propose candidates; every returned element is
    checked exactly by substituting into g.
    """
    _check_cyclic(f)
    _check_cyclic(g)
    denom = index_bound(f)
    bits = precision_bits
    while bits <= MAX_PRECISION:
        candidates, short = _propose(g, f, bits, denom)
        for coords in candidates:
            elem = RingElement(f, coords, denom)
            if evaluate_at(g, elem).is_zero:
                return elem
        if not short:
            return None
        bits *= 2
    raise IndeterminateError(f"could not separate candidates for {g} over {f} at {MAX_PRECISION} bits")


def fields_equal(f: Cubic, g: Cubic) -> bool:
    """Whether two cyclic cubics have the same splitting field."""
    return express_root(g, f) is not None
