"""Ideal predicates, special subsets, quotients, and the hom theorems."""

import pytest

import wbk
from wbk import NotAHom, NotAnIdeal, OrderTooLarge
from wbk.ideals import additive_center, is_normal_subsemigroup, mul_center


def test_z6_special_subsets(z6):
    assert wbk.socle(z6) == frozenset({0, 2, 4})
    assert wbk.fix(z6) == frozenset({0, 3})
    assert wbk.left_center(z6) == frozenset({0, 3})
    assert wbk.annihilator(z6) == frozenset({0})
    assert additive_center(z6) == frozenset(range(6))
    assert mul_center(z6) == frozenset({0})


def test_glued_special_subsets(c3_sym3, c2_c4):
    assert wbk.fix(c3_sym3) == frozenset(range(9))
    assert wbk.socle(c3_sym3) == frozenset({0, 3})
    assert wbk.left_center(c3_sym3) == frozenset({0, 3})
    assert wbk.annihilator(c3_sym3) == frozenset({0, 3})
    # both components abelian and trivial: everything is central
    assert wbk.socle(c2_c4) == frozenset(range(6))
    assert wbk.annihilator(c2_c4) == frozenset(range(6))


def test_special_subsets_are_ideals_or_left_ideals(all_structures):
    for name, s in all_structures:
        assert wbk.is_ideal(s, wbk.socle(s)), name
        assert wbk.is_ideal(s, wbk.annihilator(s)), name
        assert wbk.is_left_ideal(s, wbk.fix(s)), name
        assert wbk.is_strong_left_ideal(s, wbk.left_center(s)), name


def test_z6_ideal_lattice(z6):
    enum = wbk.enumerate_ideals(z6)
    assert [sorted(x) for x in enum.ideals] == [[0], [0, 2, 4], [0, 1, 2, 3, 4, 5]]
    assert enum.mode == "exhaustive"
    closure = wbk.enumerate_ideals(z6, mode="closure")
    assert set(closure.ideals) == set(enum.ideals)


def test_z6_subgroup_0_3_is_left_but_not_ideal(z6):
    x = frozenset({0, 3})
    assert wbk.is_left_ideal(z6, x)
    assert wbk.is_strong_left_ideal(z6, x)
    chk = wbk.is_ideal(z6, x)
    assert not chk
    assert chk.law == "not_normal"
    assert chk.witness == (1, 3)
    # and the failure really is on the mul side
    assert is_normal_subsemigroup(z6, x, "add")
    assert not is_normal_subsemigroup(z6, x, "mul")


def test_ideal_check_witnesses(z6):
    chk = wbk.is_ideal(z6, frozenset({2, 4}))
    assert chk.law == "missing_idempotent" and chk.witness == (0,)
    chk = wbk.is_ideal(z6, frozenset({0, 2}))
    assert chk.law in ("no_inverse", "not_closed")


def test_member_range_guard(z6):
    with pytest.raises(ValueError):
        wbk.is_ideal(z6, frozenset({0, 6}))
    with pytest.raises(ValueError):
        wbk.product_set(z6, {0, -1}, {0})


def test_ideal_closure_is_minimal(z6, c3_sym3):
    for s in (z6, c3_sym3):
        for x in wbk.enumerate_ideals(s).ideals:
            assert wbk.ideal_closure(s, x) == x
    assert wbk.ideal_closure(z6, {1}) == frozenset(range(6))
    assert wbk.ideal_closure(z6, {2}) == frozenset({0, 2, 4})


def test_sum_of_ideals(z6):
    small = frozenset({0})
    mid = frozenset({0, 2, 4})
    assert wbk.sum_of_ideals(z6, small, mid) == mid
    assert wbk.sum_of_ideals(z6, mid, frozenset(range(6))) == frozenset(range(6))
    with pytest.raises(NotAnIdeal):
        wbk.sum_of_ideals(z6, frozenset({0, 3}), mid)


def test_product_and_commutator_sets(z6, c3_sym3):
    # S.S for the exotic brace is the even part; repeated product shrinks to 0
    full = frozenset(range(6))
    ss = wbk.product_set(z6, full, full)
    assert ss == frozenset({0, 2, 4})
    assert wbk.product_set(z6, ss, full) == frozenset({0})
    assert wbk.commutator_set(z6, full, full) == frozenset({0})
    nine = frozenset(range(9))
    assert wbk.product_set(c3_sym3, nine, nine) == frozenset({0, 3})
    assert wbk.commutator_set(c3_sym3, nine, nine) == frozenset({0, 3, 6, 7})


def test_quotient_z6(z6):
    q = wbk.quotient(z6, frozenset({0, 2, 4}))
    assert q.quotient.order == 2
    assert q.projection == (0, 1, 0, 1, 0, 1)
    assert q.class_rep == (0, 1)
    with pytest.raises(NotAnIdeal):
        wbk.quotient(z6, frozenset({0, 3}))


def test_quotient_glued(c3_sym3):
    # collapse the sym3 component's alternating part
    i = frozenset({0, 3, 6, 7})
    assert wbk.is_ideal(c3_sym3, i)
    q = wbk.quotient(c3_sym3, i)
    assert q.quotient.order == 5
    assert len(q.quotient.idempotents) == 2


def test_verify_hom_and_kernel(z6):
    c2 = wbk.catalog_get("c2_trivial").as_dual()
    f = (0, 1, 0, 1, 0, 1)
    assert wbk.verify_hom(z6, c2, f) == f
    assert wbk.kernel(z6, c2, f) == frozenset({0, 2, 4})
    assert wbk.image(z6, c2, f) == frozenset({0, 1})
    assert wbk.first_isomorphism_check(z6, c2, f)
    with pytest.raises(NotAHom) as exc:
        wbk.verify_hom(z6, c2, (0, 1, 1, 0, 0, 1))
    assert exc.value.side in ("add", "mul")


def test_sub_structure(z6):
    sub, labels = wbk.sub_structure(z6, {0, 2, 4})
    assert labels == (0, 2, 4)
    assert sub.order == 3
    assert wbk.annihilator(sub) == frozenset(range(3))
    chk = wbk.is_sub_dual_weak_brace(z6, {0, 2})
    assert not chk and chk.law == "no_inverse" and chk.witness == (2,)
    chk = wbk.is_sub_dual_weak_brace(z6, {0, 1, 5})  # inverse-closed, 1+1=2 escapes
    assert not chk and chk.law == "not_closed" and chk.witness == (1, 1)
    chk = wbk.is_sub_dual_weak_brace(z6, set())
    assert not chk and chk.law == "empty"


def test_sub_structure_needs_zero_parts(c3_sym3):
    # {3..8} is operation-closed (bottom component) and is a sub-structure,
    # but not a strict one: it misses the top idempotent
    chk = wbk.is_sub_dual_weak_brace(c3_sym3, set(range(3, 9)))
    assert chk
    strict = wbk.is_sub_dual_weak_brace(c3_sym3, set(range(3, 9)), strict=True)
    assert not strict and strict.law == "missing_idempotent"


def test_enumerate_ideals_modes_agree(all_structures):
    for name, s in all_structures:
        ex = wbk.enumerate_ideals(s, mode="exhaustive")
        cl = wbk.enumerate_ideals(s, mode="closure")
        assert ex.ideals == cl.ideals, name


def test_enumerate_ideals_order_guard(monkeypatch):
    monkeypatch.setenv("WBK_MAX_ORDER", "4")
    z6 = wbk.catalog_get("z6_exotic").as_dual()
    with pytest.raises(OrderTooLarge):
        wbk.enumerate_ideals(z6)


def test_ideal_decomposition(c2_c4, c3_sym3):
    dec = wbk.ideal_decomposition(c2_c4, frozenset({0, 2, 4}))
    assert dec.locals_ == (frozenset({0}), frozenset({0, 2}))
    dec = wbk.ideal_decomposition(c3_sym3, frozenset({0, 3, 6, 7}))
    assert dec.locals_ == (frozenset({0}), frozenset({0, 3, 4}))
    with pytest.raises(NotAnIdeal):
        wbk.ideal_decomposition(c3_sym3, frozenset({0, 3, 4}))
