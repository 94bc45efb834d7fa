"""
One-shot reproduction of the published claims about monogenic cyclic cubic
trinomials.  Each check returns a :class:`CheckResult`; nothing raises on a
failed claim.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arith import factor
from .families import THE_FOUR, simplest_cubic
from .jks import dedekind_prime_check, jks_prime_analysis
from .numfield import IndeterminateError, RingElement, fields_equal, verify_split
from .polycore import (
    Cubic,
    Irreducibility,
    Trinomial,
    cubic_trinomial_discriminant,
    generic_cubic_discriminant,
    is_irreducible,
    resultant_discriminant,
    swan_discriminant,
)
from .scan import (
    discriminant_collisions,
    family_audit,
    reproduce_final_remarks,
    reproduce_theorem_item2,
)

T = Cubic(0, -3, 1)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    data: dict = field(default_factory=dict)


def check_discriminant_oracle(samples: int = 1000, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    nonzero = [v for v in range(-50, 51) if v]
    mismatches = []
    for _ in range(samples):
        N = rng.randint(2, 8)
        t = Trinomial(N, rng.randint(1, N - 1), rng.choice(nonzero), rng.choice(nonzero))
        if swan_discriminant(t) != resultant_discriminant(t.coeffs()):
            mismatches.append(str(t))
    for a in range(-6, 7):
        for b in range(-6, 7):
            for c in range(-6, 7):
                if generic_cubic_discriminant(Cubic(a, b, c)) != resultant_discriminant([c, b, a, 1]):
                    mismatches.append(f"cubic {a},{b},{c}")
    return CheckResult(
        "discriminant oracle",
        not mismatches,
        f"{samples} trinomials + 2197 cubics, {len(mismatches)} mismatches",
        {"mismatches": mismatches[:10]},
    )


def check_constants() -> CheckResult:
    values = {str(Trinomial(3, 1, -3, 1)): cubic_trinomial_discriminant(1, -3, 1)}
    for t in THE_FOUR:
        values[str(t)] = cubic_trinomial_discriminant(2, t.A, t.B)
    values[str(Trinomial(3, 1, -7, 7))] = cubic_trinomial_discriminant(1, -7, 7)
    expected = [81] * 5 + [49]
    ok = list(values.values()) == expected
    return CheckResult("reference discriminants", ok, ", ".join(f"{k}: {v}" for k, v in values.items()))


def check_family_audit(k_min: int, k_max: int) -> CheckResult:
    s = family_audit(k_min, k_max)
    return CheckResult(
        "family audit",
        s.ok,
        f"k in [{k_min}, {k_max}]: {s.members_checked} generated, "
        f"{s.in_F1} in F1, {s.in_F2} in F2, {len(s.violations)} violations",
        {"violations": s.violations[:10]},
    )


def check_exactly_four(bound: int, threads: int = 1) -> CheckResult:
    rep = reproduce_theorem_item2(bound, threads=threads)
    found = [str(t) for t in rep.trinomials]
    return CheckResult(
        "exactly four x^3+Ax^2+B",
        rep.matches,
        f"|A|,|B| <= {bound}: count={len(found)}: {'; '.join(found)}",
        {"found": found},
    )


def check_final_remarks() -> CheckResult:
    bad = []
    collisions = []
    for res in reproduce_final_remarks():
        if not {"monogenic", "cyclic", "exceptional"} <= res.tags or res.family is not None:
            bad.append(str(res.trinomial))
        for col in discriminant_collisions(res.trinomial):
            collisions.append(
                f"{res.trinomial} ~ {col.family.value}(k={col.k}) {col.member}: "
                f"equal discriminant, same field={col.same_field}"
            )
    detail = f"6 trinomials, {len(bad)} failures"
    if collisions:
        detail += "; " + "; ".join(collisions)
    return CheckResult("sporadic trinomials", not bad, detail, {"failures": bad, "collisions": collisions})


# alpha is a root of T = x^3 - 3x + 1; each row lists the three roots of g
def _split_identities():
    a = RingElement.generator(T)
    a2 = a * a
    return [
        (T, [a, a2 - 2, -a2 - a + 2]),
        (Cubic(3, 0, -3), [-a - 1, -a2 + 1, a2 + a - 3]),
        (Cubic(-3, 0, 3), [a + 1, a2 - 1, -a2 - a + 3]),
        (Cubic(-3, 0, 1), [-a + 1, -a2 + 3, a2 + a - 1]),
        (Cubic(3, 0, -1), [a - 1, a2 - 3, -a2 - a + 1]),
    ]


def check_split_identities() -> CheckResult:
    results = [(str(g), verify_split(g, roots)) for g, roots in _split_identities()]
    failed = [g for g, ok in results if not ok]
    return CheckResult("factorizations over Q(alpha)", not failed, f"{len(results) - len(failed)}/5 verified")


def check_equivalences() -> CheckResult:
    outcomes = {}
    ok = True
    try:
        for t in THE_FOUR:
            same = fields_equal(T, t.as_cubic())
            outcomes[f"T vs {t}"] = same
            ok &= same
        same = fields_equal(T, Cubic(0, -7, 7))
        outcomes["T vs x^3 - 7*x + 7"] = same
        ok &= not same
        f, g = Cubic(0, -921, -10745), Cubic(0, -6447, 199243)
        same = fields_equal(f, g)
        outcomes[f"{f} vs {g} (both discriminant 7634169)"] = same
    except IndeterminateError as exc:
        return CheckResult("equivalence", False, f"indeterminate: {exc}")
    detail = "; ".join(f"{k}: {'equal' if v else 'distinct'}" for k, v in outcomes.items())
    return CheckResult("equivalence", ok, detail, {"outcomes": outcomes})


def oracle_sweep(bound: int = 60, q_max: int = 10**5) -> tuple[int, list[str]]:
    """Compare the JKS verdict with Dedekind's criterion on every irreducible cubic trinomial in the box."""
    compared = 0
    mismatches = []
    for m in (1, 2):
        for A in range(-bound, bound + 1):
            for B in range(-bound, bound + 1):
                if A == 0 or B == 0:
                    continue
                t = Trinomial(3, m, A, B)
                if is_irreducible(t) is not Irreducibility.YES:
                    continue
                disc = swan_discriminant(t)
                for q in factor(disc).primes:
                    if q > q_max:
                        continue
                    compared += 1
                    if jks_prime_analysis(t, q, disc).index_free != dedekind_prime_check(t.as_cubic(), q):
                        mismatches.append(f"{t} at q={q}")
    return compared, mismatches


def check_oracle_sweep(bound: int = 60) -> CheckResult:
    compared, mismatches = oracle_sweep(bound)
    return CheckResult(
        "JKS vs Dedekind",
        not mismatches,
        f"|A|,|B| <= {bound}: {compared} prime verdicts compared, {len(mismatches)} disagreements",
        {"mismatches": mismatches[:10]},
    )


def check_simplest_cubics(lo: int = -50, hi: int = 50) -> CheckResult:
    bad = []
    for t in range(lo, hi + 1):
        try:
            if generic_cubic_discriminant(simplest_cubic(t)) != (t * t + 3 * t + 9) ** 2:
                bad.append(t)
        except AssertionError:
            bad.append(t)
    return CheckResult("simplest cubics", not bad, f"t in [{lo}, {hi}], {len(bad)} failures")


def run_all(bound: int = 1000, k_range: tuple[int, int] = (-200, 200), sweep_bound: int = 60,
            threads: int = 1):
    yield check_discriminant_oracle()
    yield check_constants()
    yield check_family_audit(*k_range)
    yield check_exactly_four(bound, threads)
    yield check_final_remarks()
    yield check_split_identities()
    yield check_equivalences()
    yield check_oracle_sweep(sweep_bound)
    yield check_simplest_cubics()
