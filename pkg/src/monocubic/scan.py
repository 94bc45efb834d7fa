"""
Coefficient-box searches over x^3 + A x^m + B and the reproduction suites
built on them.
"""

from __future__ import annotations

import itertools
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import NamedTuple

from .arith import as_perfect_square, is_squarefree
from .families import (
    THE_FOUR,
    Family,
    classify_member,
    equal_discriminant,
    family1,
    family2,
    family_member,
)
from .jks import MonogenicityReport, Verdict, monogenicity_report
from .numfield import fields_equal
from .polycore import (
    GaloisType,
    Trinomial,
    cubic_trinomial_discriminant,
    galois_type_cubic,
    integer_roots,
    reduce_mod,
)

TAGS = ("monogenic", "cyclic", "in_F1", "in_F2", "exceptional")

FINAL_REMARKS = (
    Trinomial(3, 1, -6447, 199243),
    Trinomial(3, 1, -23907, 1422773),
    Trinomial(3, 1, -66063, 6535601),
    Trinomial(3, 1, -123411, 16687025),
    Trinomial(3, 1, -1738191, 882052345),
    Trinomial(3, 1, -47970741, 127882981837),
)


@dataclass(frozen=True)
class ScanResult:
    trinomial: Trinomial
    report: MonogenicityReport
    family: tuple[Family, int] | None
    tags: frozenset[str]

    @property
    def sort_key(self) -> tuple[int, int]:
        return self.trinomial.A, self.trinomial.B


@dataclass
class ScanStats:
    evaluated: int = 0
    pruned: int = 0
    emitted: int = 0


# ---------------------------------------------------------------- tag filters

_TOKEN = re.compile(r"\s*(?:(\w+)|(.))")


class FilterError(ValueError):
    pass


def parse_filter(text: str | None):
    """
    Parse a tag expression such as ``monogenic&cyclic&!in_F1``.

    Grammar: ``|`` binds loosest, then ``&``, then prefix ``!``; parentheses
    group.  Returns a nested tuple tree, or None for "accept everything".
    """
    if text is None or not text.strip():
        return None
    tokens = []
    for word, sym in _TOKEN.findall(text):
        if word:
            if word not in TAGS:
                raise FilterError(f"unknown tag {word!r}; expected one of {', '.join(TAGS)}")
            tokens.append(word)
        elif sym.strip():
            if sym not in "&|!()":
                raise FilterError(f"unexpected character {sym!r}")
            tokens.append(sym)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        node = term()
        while peek() == "|":
            take()
            node = ("or", node, term())
        return node

    def term():
        node = atom()
        while peek() == "&":
            take()
            node = ("and", node, atom())
        return node

    def atom():
        tok = take()
        if tok == "!":
            return ("not", atom())
        if tok == "(":
            node = expr()
            if take() != ")":
                raise FilterError("unbalanced parentheses")
            return node
        if tok in TAGS:
            return ("tag", tok)
        raise FilterError(f"unexpected token {tok!r}")

    tree = expr()
    if pos != len(tokens):
        raise FilterError(f"trailing input at {tokens[pos]!r}")
    return tree


def eval_filter(tree, lookup) -> bool:
    if tree is None:
        return True
    op = tree[0]
    if op == "tag":
        return lookup(tree[1])
    if op == "not":
        return not eval_filter(tree[1], lookup)
    if op == "and":
        return eval_filter(tree[1], lookup) and eval_filter(tree[2], lookup)
    return eval_filter(tree[1], lookup) or eval_filter(tree[2], lookup)


def _consistent(tags: dict[str, bool]) -> bool:
    if tags["in_F1"] and tags["in_F2"]:
        return False
    if (tags["in_F1"] or tags["in_F2"]) and not (tags["monogenic"] and tags["cyclic"]):
        return False
    if tags["exceptional"] != (
        tags["monogenic"] and tags["cyclic"] and not (tags["in_F1"] or tags["in_F2"])
    ):
        return False
    return True


def required_tags(tree) -> frozenset[str]:
    """Tags that every match of the filter must carry."""
    if tree is None:
        return frozenset()
    sat = []
    for values in itertools.product((False, True), repeat=len(TAGS)):
        tags = dict(zip(TAGS, values))
        if _consistent(tags) and eval_filter(tree, tags.__getitem__):
            sat.append(tags)
    return frozenset(t for t in TAGS if all(s[t] for s in sat))


# ---------------------------------------------------------------- evaluation


@lru_cache(maxsize=1 << 16)
def _squarefree(n: int) -> bool:
    return is_squarefree(n)


def _prunable_m2(A: int, B: int, need_cyclic: bool) -> bool:
    """Necessary conditions for x^3 + A x^2 + B to be monogenic (and cyclic)."""
    if not _squarefree(B):
        return True
    if not need_cyclic:
        return False
    if A % 9 == 0 and B % 3:
        return True
    # a prime of 4A^3 + 27B outside AB would need q^2 | disc, failing C5
    rest = 4 * A**3 + 27 * B
    g = gcd(rest, A * B)
    while g > 1:
        rest //= g
        g = gcd(rest, g)
    return abs(rest) > 1


def _is_cyclic(t: Trinomial) -> bool:
    disc = cubic_trinomial_discriminant(t.M, t.A, t.B)
    if as_perfect_square(disc) is None:
        return False
    return not integer_roots(t.coeffs())


def evaluate(t: Trinomial) -> ScanResult:
    report = monogenicity_report(t)
    fam = classify_member(t.A, t.B) if t.M == 1 else None
    return ScanResult(t, report, fam, _tags(report, fam))


def _tags(report: MonogenicityReport, fam) -> frozenset[str]:
    tags = set()
    mono = report.verdict is Verdict.MONOGENIC
    if mono:
        tags.add("monogenic")
    if report.cyclic_cubic:
        tags.add("cyclic")
    if fam is not None:
        tags.add("in_F1" if fam[0] is Family.F1 else "in_F2")
    if mono and report.cyclic_cubic and fam is None:
        tags.add("exceptional")
    return frozenset(tags)


def _scan_chunk(m, a_values, b_lo, b_hi, filter_text, prune):
    tree = parse_filter(filter_text)
    need = required_tags(tree)
    need_cyclic = bool(need & {"cyclic", "in_F1", "in_F2", "exceptional"})
    need_mono = bool(need & {"monogenic", "in_F1", "in_F2", "exceptional"})
    results = []
    evaluated = pruned = 0
    for A in a_values:
        if A == 0:
            continue
        for B in range(b_lo, b_hi + 1):
            if B == 0:
                continue
            evaluated += 1
            if prune and need_mono and m == 2 and _prunable_m2(A, B, need_cyclic):
                pruned += 1
                continue
            t = Trinomial(3, m, A, B)
            if need_cyclic and not _is_cyclic(t):
                continue
            res = evaluate(t)
            if eval_filter(tree, res.tags.__contains__):
                results.append(res)
    return results, evaluated, pruned


def default_threads() -> int:
    env = os.environ.get("MONOCUBIC_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def scan_form(
    m: int,
    A_range: tuple[int, int],
    B_range: tuple[int, int],
    filter: str | None = None,
    *,
    prune: bool = True,
    threads: int = 1,
    stats: ScanStats | None = None,
) -> list[ScanResult]:
    """
    Every x^3 + A x^m + B with (A, B) in the closed box and AB != 0 whose
    tags satisfy ``filter``, ordered by (A, B).
    """
    if m not in (1, 2):
        raise ValueError(f"m must be 1 or 2, got {m}")
    (a_lo, a_hi), (b_lo, b_hi) = A_range, B_range
    if a_lo > a_hi or b_lo > b_hi:
        raise ValueError("empty coefficient range")
    parse_filter(filter)
    a_values = list(range(a_lo, a_hi + 1))
    threads = max(1, threads)
    if threads == 1 or len(a_values) < 2 * threads:
        chunks = [_scan_chunk(m, a_values, b_lo, b_hi, filter, prune)]
    else:
        # strided chunks balance cost, which grows with |A|
        parts = [a_values[i::threads * 4] for i in range(threads * 4)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(
                pool.map(
                    _scan_chunk,
                    itertools.repeat(m),
                    parts,
                    itertools.repeat(b_lo),
                    itertools.repeat(b_hi),
                    itertools.repeat(filter),
                    itertools.repeat(prune),
                )
            )
    results = sorted((r for chunk in chunks for r in chunk[0]), key=lambda r: r.sort_key)
    if stats is not None:
        stats.evaluated += sum(c[1] for c in chunks)
        stats.pruned += sum(c[2] for c in chunks)
        stats.emitted += len(results)
    return results


# ---------------------------------------------------------------- reproduction suites


class Item2Reproduction(NamedTuple):
    trinomials: list[Trinomial]
    matches: bool


def reproduce_theorem_item2(bound: int = 1000, *, prune: bool = True, threads: int = 1) -> Item2Reproduction:
    """Monogenic cyclic x^3 + A x^2 + B with |A|, |B| <= bound; expect exactly four."""
    if bound < 3:
        raise ValueError("bound must be at least 3")
    found = [
        r.trinomial
        for r in scan_form(2, (-bound, bound), (-bound, bound), "monogenic&cyclic", prune=prune, threads=threads)
    ]
    return Item2Reproduction(found, set(found) == set(THE_FOUR) and len(found) == 4)


@dataclass(frozen=True)
class Collision:
    """An in-family trinomial sharing a discriminant with some other trinomial."""

    family: Family
    k: int
    member: Trinomial
    same_field: bool


def discriminant_collisions(t: Trinomial) -> list[Collision]:
    """
    In-family members whose discriminant equals disc(t), found by inverting
    81 d1^2 = disc and d2^2 = disc, with the field-equality verdict for each.
    """
    root = as_perfect_square(cubic_trinomial_discriminant(t.M, t.A, t.B))
    if root is None:
        return []
    hits = []
    candidates = []
    if root % 9 == 0:
        d = root // 9
        candidates += [(Family.F1, k) for k in _roots_of(9, 3, 1 - d)]
    candidates += [(Family.F2, k) for k in _roots_of(27, 27, 7 - root) if k >= 0]
    for fam, k in candidates:
        member = family_member(fam, k)
        if not member.in_family_set or member.trinomial == t:
            continue
        assert equal_discriminant(member.trinomial, t)
        hits.append(Collision(fam, k, member.trinomial, fields_equal(member.trinomial.as_cubic(), t.as_cubic())))
    return hits


def _roots_of(a: int, b: int, c: int) -> list[int]:
    r = as_perfect_square(b * b - 4 * a * c)
    if r is None:
        return []
    return sorted({n // (2 * a) for n in (-b + r, -b - r) if n % (2 * a) == 0})


def reproduce_final_remarks() -> list[ScanResult]:
    return [evaluate(t) for t in FINAL_REMARKS]


@dataclass
class AuditSummary:
    k_min: int
    k_max: int
    members_checked: int = 0
    in_F1: int = 0
    in_F2: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def family_audit(k_min: int, k_max: int) -> AuditSummary:
    """Per-member, disjointness and distinct-discriminant checks over k_min..k_max."""
    if k_min > k_max:
        raise ValueError("k_min must not exceed k_max")
    summary = AuditSummary(k_min, k_max)
    bad = summary.violations
    coeffs = {Family.F1: set(), Family.F2: set()}
    discs: dict[int, tuple[Family, int]] = {}
    for k in range(k_min, k_max + 1):
        for member in (family1(k), family2(k)):
            summary.members_checked += 1
            t, d, tag = member.trinomial, member.delta, f"{member.family.value}(k={k})"
            disc = cubic_trinomial_discriminant(1, t.A, t.B)
            expected = 81 * d * d if member.family is Family.F1 else d * d
            if disc != expected:
                bad.append(f"{tag}: discriminant {disc} != {expected}")
            if reduce_mod(t.coeffs(), 2) != [1, 1, 0, 1]:
                bad.append(f"{tag}: does not reduce to x^3 + x + 1 mod 2")
            if galois_type_cubic(t.as_cubic()) is not GaloisType.C3:
                bad.append(f"{tag}: Galois group is not C3")
            mono = monogenicity_report(t).verdict is Verdict.MONOGENIC
            if mono != member.delta_squarefree:
                bad.append(f"{tag}: monogenic={mono} but delta squarefree={member.delta_squarefree}")
            coeffs[member.family].add((t.A, t.B))
            if member.in_family_set:
                if member.family is Family.F1:
                    summary.in_F1 += 1
                else:
                    summary.in_F2 += 1
                if classify_member(t.A, t.B) != (member.family, k):
                    bad.append(f"{tag}: parameter inversion failed")
                if disc in discs:
                    other = discs[disc]
                    bad.append(f"{tag}: same discriminant as {other[0].value}(k={other[1]})")
                discs[disc] = (member.family, k)
    for A, B in sorted(coeffs[Family.F1] & coeffs[Family.F2]):
        bad.append(f"x^3 + {A}x + {B} lies in both families")
    return summary
