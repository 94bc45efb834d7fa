"""
The two one-parameter families of monogenic cyclic cubic trinomials,
the four x^3 + A x^2 + B exceptions, and Shanks' simplest cubics.

    F1:  f_{1,k} = x^3 - 3 d1 x + (6k+1) d1,   d1 = 9k^2 + 3k + 1
    F2:  f_{2,k} = x^3 - d2 x + (2k+1) d2,     d2 = 27k^2 + 27k + 7

Membership requires the d value to be squarefree, and k >= 0 for F2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import as_perfect_square, is_squarefree
from .polycore import (
    Cubic,
    Trinomial,
    generic_cubic_discriminant,
    swan_discriminant,
)


class Family(str, Enum):
    F1 = "F1"
    F2 = "F2"


@dataclass(frozen=True)
class FamilyMember:
    family: Family
    k: int
    delta: int
    trinomial: Trinomial
    delta_squarefree: bool
    in_family_set: bool

    @property
    def discriminant(self) -> int:
        return swan_discriminant(self.trinomial)


def delta1(k: int) -> int:
    return 9 * k * k + 3 * k + 1


def delta2(k: int) -> int:
    return 27 * k * k + 27 * k + 7


def family1(k: int) -> FamilyMember:
    d = delta1(k)
    t = Trinomial(3, 1, -3 * d, (6 * k + 1) * d)
    assert swan_discriminant(t) == 81 * d * d
    sf = is_squarefree(d)
    return FamilyMember(Family.F1, k, d, t, sf, sf)


def family2(k: int) -> FamilyMember:
    d = delta2(k)
    t = Trinomial(3, 1, -d, (2 * k + 1) * d)
    assert swan_discriminant(t) == d * d
    sf = is_squarefree(d)
    return FamilyMember(Family.F2, k, d, t, sf, sf and k >= 0)


def family_member(family: Family | str | int, k: int) -> FamilyMember:
    family = Family(f"F{family}" if isinstance(family, int) else family)
    return family1(k) if family is Family.F1 else family2(k)


def _solve_k(delta: int, lead: int, lin: int, const: int) -> list[int]:
    """Integer k with lead*k^2 + lin*k + const == delta."""
    disc = lin * lin - 4 * lead * (const - delta)
    r = as_perfect_square(disc)
    if r is None:
        return []
    ks = set()
    for num in (-lin + r, -lin - r):
        if num % (2 * lead) == 0:
            ks.add(num // (2 * lead))
    return sorted(ks)


def family_parameters(A: int, B: int) -> list[tuple[Family, int]]:
    """Every (family, k) whose generator produces x^3 + A x + B, ignoring membership."""
    hits = []
    if A % 3 == 0:
        d = -A // 3
        for k in _solve_k(d, 9, 3, 1):
            if (6 * k + 1) * d == B:
                hits.append((Family.F1, k))
    for k in _solve_k(-A, 27, 27, 7):
        if (2 * k + 1) * (-A) == B:
            hits.append((Family.F2, k))
    return hits


def classify_member(A: int, B: int) -> tuple[Family, int] | None:
    """(family, k) if x^3 + A x + B lies in F1 or F2, else None."""
    if A == 0 or B == 0:
        raise ValueError("need AB != 0")
    for fam, k in family_parameters(A, B):
        if family_member(fam, k).in_family_set:
            return fam, k
    return None


THE_FOUR = (
    Trinomial(3, 2, 3, -3),
    Trinomial(3, 2, -3, 3),
    Trinomial(3, 2, -3, 1),
    Trinomial(3, 2, 3, -1),
)


def the_four_exceptional() -> list[Trinomial]:
    """The only monogenic cyclic trinomials of shape x^3 + A x^2 + B."""
    from .jks import monogenicity_report

    for t in THE_FOUR:
        report = monogenicity_report(t)
        assert report.is_monogenic and report.cyclic_cubic, t
    return list(THE_FOUR)


def simplest_cubic(t: int) -> Cubic:
    c = Cubic(-t, -(t + 3), -1)
    assert generic_cubic_discriminant(c) == (t * t + 3 * t + 9) ** 2
    return c


def equal_discriminant(f: Trinomial, g: Trinomial) -> bool:
    """
    Necessary condition for two monogenic cyclic cubics to share a splitting
    field.  Not sufficient: use ``numfield.fields_equal`` to decide.
    """
    if f.N != 3 or g.N != 3:
        raise ValueError("equal_discriminant compares cubic trinomials")
    return swan_discriminant(f) == swan_discriminant(g)
