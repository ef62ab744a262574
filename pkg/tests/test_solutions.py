"""Braid checks, periods, weak inverses, regularity, and solution gluing."""

from math import lcm

import pytest

import wbk
from wbk import NoPeriod, SolutionTable, ValidationError
from wbk.solutions import is_bijective, solution_table, strong_semilattice_of_solutions

# bijective pair map on Z3 that is not a solution; fails at (0,0,1)
NOT_A_SOLUTION = solution_table(3, lambda a, b: (b, (a + b) % 3))

# pair map with a genuine pre-period: r^3 == r^2 but r^2 != r
EVENTUALLY_PERIODIC = SolutionTable(
    2, (((0, 0), (1, 0)), ((0, 0), (0, 0)))
)


def test_braid_holds_on_all_catalog_structures(all_structures):
    for name, s in all_structures:
        r = wbk.solution_of(s)
        assert wbk.check_braid(r) is None, name
        # only skew braces give bijective solutions; gluing collapses pairs
        assert is_bijective(r) == s.is_skew(), name


def test_braid_failure_witness():
    assert wbk.check_braid(NOT_A_SOLUTION) == (0, 0, 1)
    assert is_bijective(NOT_A_SOLUTION)


def test_identity_and_composition():
    r = wbk.solution_of(wbk.catalog_get("z6_exotic").as_dual())
    ident = wbk.identity_solution(6)
    assert wbk.compose_solutions(r, ident) == r
    assert wbk.compose_solutions(ident, r) == r
    assert wbk.check_braid(ident) is None


def test_periods():
    z6 = wbk.solution_of(wbk.catalog_get("z6_exotic").as_dual())
    assert wbk.period(z6) == 2
    sym3 = wbk.solution_of(wbk.catalog_get("sym3_trivial").as_dual())
    assert wbk.period(sym3) == 12
    c3 = wbk.solution_of(wbk.catalog_get("c3_trivial").as_dual())
    assert wbk.period(c3) == 2  # the flip
    swap_one = wbk.solution_of(wbk.catalog_get("c2_trivial").as_dual())
    assert wbk.period(swap_one) == 2


def test_period_of_glued_solutions(c3_sym3, c2_c4):
    assert wbk.period(wbk.solution_of(c3_sym3)) == 12
    assert wbk.period(wbk.solution_of(c2_c4)) == 2


def test_no_period_raises():
    with pytest.raises(NoPeriod) as exc:
        wbk.period(EVENTUALLY_PERIODIC)
    assert exc.value.tail == 1
    assert exc.value.cycle == 1


def test_weak_inverse_relations(all_structures):
    for name, s in all_structures:
        rep = wbk.check_weak_inverses(s)
        assert rep.holds, name
        assert rep.r_sandwich and rep.rop_sandwich and rep.commute, name
        if s.is_skew():
            assert rep.inverse_pair is True, name
        else:
            assert rep.inverse_pair is None, name


def test_regularity(all_structures):
    for name, s in all_structures:
        rep = wbk.check_regularity(s)
        assert rep.ok, name
        assert rep.witness is None
        if s.is_skew():
            # on a skew brace both derived families are permutations
            assert all(rep.lambda_bijective), name
            assert all(rep.rho_bijective), name


def test_gluing_reproduces_composed_solution():
    for name, spec in wbk.catalog_specs():
        glued = strong_semilattice_of_solutions(
            spec.y,
            tuple(wbk.solution_of(b.as_dual()) for b in spec.braces),
            dict(spec.homs),
        )
        direct = wbk.solution_of(wbk.compose(spec))
        assert glued == direct, name


def test_gluing_validates_maps():
    spec = wbk.catalog_get("c3_sym3")
    sols = tuple(wbk.solution_of(b.as_dual()) for b in spec.braces)
    with pytest.raises(ValidationError) as exc:
        strong_semilattice_of_solutions(spec.y, sols, {})
    assert exc.value.law == "missing_hom"
    # a non-equivariant map: send the generator to a transposition
    with pytest.raises(ValidationError) as exc:
        strong_semilattice_of_solutions(spec.y, sols, {(0, 1): (0, 1, 2)})
    assert exc.value.law == "equivariance"


def test_period_law_for_glued_solution():
    spec = wbk.catalog_get("c3_sym3")
    comp_periods = [wbk.period(wbk.solution_of(b.as_dual())) for b in spec.braces]
    assert comp_periods == [2, 12]
    p = lcm(*comp_periods)
    r = wbk.solution_of(wbk.compose(spec))
    power = r
    for _ in range(p):
        power = wbk.compose_solutions(power, r)
    assert power == r  # r^(lcm+1) == r


def test_cubic_solution_for_abelian_trivial_components(c2_c4):
    r = wbk.solution_of(c2_c4)
    r3 = wbk.compose_solutions(wbk.compose_solutions(r, r), r)
    assert r3 == r
    r2 = wbk.compose_solutions(r, r)
    assert r2 != r  # not idempotent, genuinely cubic
