"""
Monogenicity of trinomials.

For f = x^N + A x^M + B irreducible with root theta, a prime q divides the
index [Z_K : Z[theta]] only if q divides disc(f).  ``jks_prime_analysis``
decides each such prime by the Jakhar-Khanduja-Sangwan conditions, which
split on whether q divides A, B and M.  ``dedekind_prime_check`` answers the
same question for any monic cubic by Dedekind's criterion and serves as an
independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .arith import IncompleteFactorization, as_perfect_square, factor, is_prime, valuation
from .polycore import (
    Cubic,
    Irreducibility,
    Trinomial,
    divmod_mod,
    exact_div_scalar,
    gcd_mod,
    is_irreducible,
    monic_mod,
    poly_add,
    poly_mul,
    poly_pow,
    reduce_mod,
    swan_discriminant,
)

# Pollard rho iterations spent per cofactor before a report gives up.
RHO_BUDGET = 2_000_000


class JksCase(str, Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    NOT_APPLICABLE = "not_applicable"


class Verdict(str, Enum):
    MONOGENIC = "monogenic"
    NOT_MONOGENIC = "not_monogenic"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class JksPrimeAnalysis:
    q: int
    case: JksCase
    index_free: bool | None
    witnesses: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class MonogenicityReport:
    trinomial: Trinomial
    irreducible: Irreducibility
    discriminant: int
    discriminant_square_root: int | None
    cyclic_cubic: bool | None
    prime_analyses: tuple[JksPrimeAnalysis, ...]
    verdict: Verdict
    reason: str = ""

    @property
    def is_monogenic(self) -> bool:
        return self.verdict is Verdict.MONOGENIC


def _case_c2(t: Trinomial, q: int) -> tuple[bool, dict]:
    N, A, B = t.N, t.A, t.B
    j = valuation(N, q)
    A2 = A // q
    B1 = (B + (-B) ** (q**j)) // q
    assert (B + (-B) ** (q**j)) % q == 0
    first = A2 % q == 0 and B1 % q != 0
    second = (A2 * ((-B) ** t.M1 * A2**t.N1 - (-B1) ** t.N1)) % q != 0
    return first or second, {"j": j, "A2": A2, "B1": B1}


def _case_c3(t: Trinomial, q: int) -> tuple[bool, dict]:
    N, M, A, B = t.N, t.M, t.A, t.B
    ell = valuation(N - M, q)
    A1 = (A + (-A) ** (q**ell)) // q
    assert (A + (-A) ** (q**ell)) % q == 0
    B2 = B // q
    first = A1 % q == 0 and B2 % q != 0
    N1, M1 = t.N1, t.M1
    quantity = A1 * B2 ** (M - 1) * ((-A) ** M1 * A1 ** (N1 - M1) - (-B2) ** (N1 - M1))
    second = quantity % q != 0
    return first or second, {"l": ell, "A1": A1, "B2": B2}


def h_polynomials(t: Trinomial, q: int) -> tuple[list[int], list[int], dict]:
    """H1 and H2 over the integers for the case q | M, q not dividing AB."""
    N, M, A, B = t.N, t.M, t.A, t.B
    k = min(valuation(N, q), valuation(M, q))
    qk = q**k
    s_prime, s = N // qk, M // qk
    H1 = [0] * (s_prime + 1)
    H1[0] += B
    H1[s] += A
    H1[s_prime] += 1
    inner = [0] * (s + 1)
    inner[0] = -B
    inner[s] += -A
    numerator = [0] * (s * qk + 1)
    numerator[0] = B
    numerator[s * qk] += A
    numerator = poly_add(numerator, poly_pow(inner, qk))
    H2 = exact_div_scalar(numerator, q)
    return H1, H2, {"k": k, "s_prime": s_prime, "s": s}


def _case_c4(t: Trinomial, q: int) -> tuple[bool, dict]:
    H1, H2, wit = h_polynomials(t, q)
    g = gcd_mod(H1, H2, q)
    wit.update({"H1": reduce_mod(H1, q), "H2": reduce_mod(H2, q)})
    # the zero polynomial shares every factor with H1
    return len(g) == 1, wit


def _case_c5(t: Trinomial, q: int) -> tuple[bool, dict]:
    A, B, N1, M1 = t.A, t.B, t.N1, t.M1
    value = B ** (N1 - M1) * N1**N1 - (-1) ** M1 * A**N1 * M1**M1 * (M1 - N1) ** (N1 - M1)
    return value % (q * q) != 0, {"value": value}


def jks_prime_analysis(t: Trinomial, q: int, discriminant: int | None = None) -> JksPrimeAnalysis:
    """Decide whether the prime q (dividing the discriminant) is coprime to the index."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    disc = swan_discriminant(t) if discriminant is None else discriminant
    if disc % q:
        raise ValueError(f"{q} does not divide the discriminant {disc}")
    qA, qB = t.A % q == 0, t.B % q == 0
    if qA and qB:
        case, ok, wit = JksCase.C1, t.B % (q * q) != 0, {}
    elif qA:
        case = JksCase.C2
        ok, wit = _case_c2(t, q)
    elif qB:
        case = JksCase.C3
        ok, wit = _case_c3(t, q)
    elif t.M % q == 0:
        case = JksCase.C4
        ok, wit = _case_c4(t, q)
    else:
        case = JksCase.C5
        ok, wit = _case_c5(t, q)
    return JksPrimeAnalysis(q, case, ok, wit)


def _discriminant_primes(disc: int) -> tuple[list[int], list[int]]:
    """Prime divisors of disc plus any composite cofactors left unsplit."""
    root = as_perfect_square(disc)
    target = root if root is not None and root > 1 else disc
    try:
        return factor(target, rho_budget=RHO_BUDGET).primes, []
    except IncompleteFactorization as exc:
        return [p for p, _ in exc.found], exc.remaining


def monogenicity_report(t: Trinomial) -> MonogenicityReport:
    disc = swan_discriminant(t)
    irreducible = is_irreducible(t)
    root = as_perfect_square(disc)
    cyclic = None
    if t.N == 3:
        cyclic = irreducible is Irreducibility.YES and root is not None
    if disc == 0:
        return MonogenicityReport(
            t, irreducible, 0, 0, cyclic, (), Verdict.NOT_MONOGENIC,
            "repeated root / not separable",
        )
    primes, leftover = _discriminant_primes(disc)
    analyses = [jks_prime_analysis(t, q, disc) for q in primes]
    analyses += [JksPrimeAnalysis(r, JksCase.NOT_APPLICABLE, None) for r in leftover]

    failing = [a.q for a in analyses if a.index_free is False]
    if irreducible is Irreducibility.NO:
        verdict, reason = Verdict.NOT_MONOGENIC, "reducible over Q"
    elif failing:
        verdict = Verdict.NOT_MONOGENIC
        reason = "index divisible by " + ", ".join(map(str, failing))
    elif leftover:
        verdict, reason = Verdict.UNKNOWN, "discriminant not fully factored"
    elif irreducible is Irreducibility.UNKNOWN:
        verdict, reason = Verdict.UNKNOWN, "irreducibility not certified"
    else:
        verdict, reason = Verdict.MONOGENIC, ""
    return MonogenicityReport(t, irreducible, disc, root, cyclic, tuple(analyses), verdict, reason)


# ---------------------------------------------------------------- Dedekind oracle


def _cubic_radical_mod(f: list[int], q: int) -> list[int]:
    """Product of the distinct monic irreducible factors of a monic cubic over F_q."""
    if q > 3:
        # q exceeds the degree, so the derivative detects repeated factors
        deriv = [(i * f[i]) % q for i in range(1, len(f))]
        g = gcd_mod(f, deriv, q)
        return monic_mod(divmod_mod(f, g, q)[0], q)
    # tiny fields: strip linear factors by enumeration
    rad = [1]
    rest = monic_mod(f, q)
    for r in range(q):
        lin = [(-r) % q, 1]
        _, rem = divmod_mod(rest, lin, q)
        if rem:
            continue
        rad = reduce_mod(poly_mul(rad, lin), q)
        while True:
            quo, rem = divmod_mod(rest, lin, q)
            if rem:
                break
            rest = quo
    # what remains has no roots, hence is 1 or irreducible
    return monic_mod(poly_mul(rad, rest), q)


def dedekind_prime_check(c: Cubic, q: int) -> bool:
    """True iff q does not divide [Z_K : Z[theta]] for theta a root of the cubic c."""
    f = c.coeffs()
    fbar = reduce_mod(f, q)
    g = _cubic_radical_mod(fbar, q)
    h, rem = divmod_mod(fbar, g, q)
    assert not rem
    # lifts with coefficients in range(q)
    F = exact_div_scalar(poly_add(poly_mul(g, h), [-x for x in f]), q)
    common = gcd_mod(gcd_mod(F, g, q), h, q)
    return len(common) == 1
