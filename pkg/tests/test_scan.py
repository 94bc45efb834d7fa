import pytest

from monocubic import output
from monocubic.arith import as_perfect_square
from monocubic.families import THE_FOUR, Family
from monocubic.polycore import Trinomial, cubic_trinomial_discriminant, integer_roots
from monocubic.scan import (
    FINAL_REMARKS,
    FilterError,
    ScanStats,
    discriminant_collisions,
    eval_filter,
    family_audit,
    parse_filter,
    reproduce_final_remarks,
    reproduce_theorem_item2,
    required_tags,
    scan_form,
)


def serialize(results):
    return "\n".join(output.dumps(output.scan_payload(r)) for r in results)


def test_parse_filter():
    assert parse_filter(None) is None
    assert parse_filter("") is None
    tree = parse_filter("monogenic & !(in_F1 | in_F2)")
    tags = {"monogenic", "in_F2"}
    assert not eval_filter(tree, tags.__contains__)
    assert eval_filter(tree, {"monogenic"}.__contains__)
    for bad in ("monogenic &", "(cyclic", "bogus", "cyclic cyclic", "&", "cyclic)"):
        with pytest.raises(FilterError):
            parse_filter(bad)


def test_required_tags():
    assert required_tags(parse_filter("monogenic&cyclic")) == {"monogenic", "cyclic"}
    assert required_tags(parse_filter("exceptional")) == {"monogenic", "cyclic", "exceptional"}
    assert required_tags(parse_filter("in_F1|in_F2")) == {"monogenic", "cyclic"}
    assert required_tags(parse_filter("cyclic|monogenic")) == frozenset()
    assert required_tags(parse_filter("!cyclic")) == frozenset()


def test_scan_examples():
    res = scan_form(2, (-10, 10), (-10, 10), "monogenic&cyclic")
    assert [r.trinomial for r in res] == sorted(THE_FOUR, key=lambda t: (t.A, t.B))
    res = scan_form(1, (-3, -3), (1, 1))
    assert len(res) == 1
    assert {"monogenic", "cyclic", "in_F1"} <= res[0].tags
    assert res[0].family == (Family.F1, 0)
    res = scan_form(1, (-7, -7), (7, 7), "cyclic")
    assert [str(r.trinomial) for r in res] == ["x^3 - 7*x + 7"]


def test_cyclic_filter_matches_brute_force():
    for bound in (2, 12):
        expected = []
        for A in range(-bound, bound + 1):
            for B in range(-bound, bound + 1):
                if A and B:
                    disc = -4 * A**3 - 27 * B * B
                    has_root = any(r**3 + A * r + B == 0 for r in range(-bound - 1, bound + 2))
                    if disc > 0 and as_perfect_square(disc) is not None and not has_root:
                        expected.append((A, B))
        got = [(r.trinomial.A, r.trinomial.B) for r in scan_form(1, (-bound, bound), (-bound, bound), "cyclic")]
        assert got == expected
    assert scan_form(1, (-2, 2), (-2, 2), "cyclic") == []


def test_completeness_counts():
    stats = ScanStats()
    res = scan_form(1, (-4, 5), (-3, 3), stats=stats)
    assert stats.evaluated == 9 * 6 == len(res) == stats.emitted
    stats = ScanStats()
    scan_form(2, (-20, 20), (-20, 20), "monogenic&cyclic", stats=stats)
    assert stats.evaluated == 40 * 40
    assert 0 < stats.pruned < stats.evaluated


def test_soundness_spot_check():
    for r in scan_form(1, (-40, 40), (-40, 40), "monogenic"):
        assert all(a.index_free for a in r.report.prime_analyses)
        if "cyclic" in r.tags:
            assert as_perfect_square(r.report.discriminant) is not None
            assert not integer_roots(r.trinomial.coeffs())


def test_determinism():
    first = serialize(scan_form(1, (-30, 30), (-30, 30), "cyclic"))
    second = serialize(scan_form(1, (-30, 30), (-30, 30), "cyclic"))
    assert first == second and first


@pytest.mark.parametrize("filt", ["monogenic&cyclic", "monogenic", "exceptional", None])
def test_pruning_does_not_change_results(filt):
    box = (-25, 25)
    assert serialize(scan_form(2, box, box, filt, prune=True)) == serialize(scan_form(2, box, box, filt, prune=False))


def test_parallel_matches_serial():
    box = (-30, 30)
    serial = serialize(scan_form(2, box, box, "monogenic", threads=1))
    parallel = serialize(scan_form(2, box, box, "monogenic", threads=2))
    assert serial == parallel


def test_scan_domain_errors():
    with pytest.raises(ValueError):
        scan_form(3, (1, 2), (1, 2))
    with pytest.raises(ValueError):
        scan_form(1, (2, 1), (1, 2))
    with pytest.raises(FilterError):
        scan_form(1, (1, 2), (1, 2), "cyclic &&")


@pytest.mark.parametrize("bound", [3, 10])
def test_reproduce_item2_small(bound):
    rep = reproduce_theorem_item2(bound)
    assert rep.matches
    assert set(rep.trinomials) == set(THE_FOUR)


def test_reproduce_item2_rejects_tiny_bound():
    with pytest.raises(ValueError):
        reproduce_theorem_item2(2)


def test_final_remarks():
    results = reproduce_final_remarks()
    assert [r.trinomial for r in results] == list(FINAL_REMARKS)
    for r in results:
        assert r.tags == {"monogenic", "cyclic", "exceptional"}
        assert r.family is None
    assert results[0].report.discriminant == 7634169 == cubic_trinomial_discriminant(1, -6447, 199243)
    assert str(results[1].trinomial) == "x^3 - 23907*x + 1422773"


def test_collision_with_family_member():
    cols = discriminant_collisions(Trinomial(3, 1, -6447, 199243))
    assert [(c.family, c.k) for c in cols] == [(Family.F1, -6)]
    assert str(cols[0].member) == "x^3 - 921*x - 10745"
    assert cols[0].same_field is False


def test_family_audit_examples():
    s = family_audit(0, 0)
    assert s.members_checked == 2 and s.ok
    s = family_audit(-6, -6)
    assert s.ok and s.in_F1 == 1
    s = family_audit(-30, 30)
    assert s.ok
    with pytest.raises(ValueError):
        family_audit(1, 0)
