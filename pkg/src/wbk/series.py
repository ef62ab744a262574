"""Nilpotency series: right, socle, annihilator (upper), gamma (lower).

Each series runs until it hits its target set or repeats; the report keeps
the whole chain, whether it terminated, and the index (first chain position
of the target).  Elementwise socle/annihilator steps are cross-checked
against the quotient-based definition at every step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braces import DualWeakBrace
from .errors import InternalInvariantBroken, NotAnIdeal, NotAnnihilatorSeries
from .ideals import (
    annihilator,
    commutator_set,
    generated_full_inverse_subsemigroup,
    is_ideal,
    product_set,
    quotient,
    socle,
    sum_of_ideals,
)


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # right | socle | annihilator-upper | gamma-lower
    chain: tuple[frozenset, ...]
    terminated: bool
    index: int | None


def _run_descending(kind: str, s: DualWeakBrace, start: frozenset, step) -> SeriesReport:
    target = frozenset(s.idempotents)
    chain = [start]
    while chain[-1] != target:
        nxt = step(chain[-1])
        if nxt == chain[-1]:
            break
        if not nxt <= chain[-1]:
            raise InternalInvariantBroken(f"{kind} series is not descending")
        chain.append(nxt)
    terminated = chain[-1] == target
    index = chain.index(target) if terminated else None
    return SeriesReport(kind, tuple(chain), terminated, index)


def _run_ascending(kind: str, s: DualWeakBrace, step) -> SeriesReport:
    target = frozenset(range(s.order))
    chain = [frozenset(s.idempotents)]
    while chain[-1] != target:
        nxt = step(chain[-1])
        if nxt == chain[-1]:
            break
        if not nxt >= chain[-1]:
            raise InternalInvariantBroken(f"{kind} series is not ascending")
        chain.append(nxt)
    terminated = chain[-1] == target
    index = chain.index(target) if terminated else None
    return SeriesReport(kind, tuple(chain), terminated, index)


def right_series(s: DualWeakBrace) -> SeriesReport:
    """S(1) = S, S(n+1) = S(n).S; chain position m holds S(m+1)."""
    full = frozenset(range(s.order))
    return _run_descending("right", s, full, lambda prev: product_set(s, prev, full))


def _socle_step(s: DualWeakBrace, prev: frozenset, use_right_dots: bool) -> frozenset:
    n = s.order
    out = set()
    for a in range(n):
        ok = all(s.dot(a, b) in prev and s.add_commutator(a, b) in prev for b in range(n))
        if ok and use_right_dots:
            ok = all(s.dot(b, a) in prev for b in range(n))
        if ok:
            out.add(a)
    return frozenset(out)


def _quotient_pullback(s: DualWeakBrace, prev: frozenset, special) -> frozenset:
    q = quotient(s, prev)
    marked = special(q.quotient)
    return frozenset(a for a in range(s.order) if q.projection[a] in marked)


def socle_series(s: DualWeakBrace) -> SeriesReport:
    """Soc_0 = E(S); Soc_n pulls back Soc of the quotient by Soc_{n-1}."""

    def step(prev: frozenset) -> frozenset:
        elementwise = _socle_step(s, prev, use_right_dots=False)
        pulled = _quotient_pullback(s, prev, socle)
        if elementwise != pulled:
            raise InternalInvariantBroken("socle step: elementwise and quotient forms differ")
        return elementwise

    return _run_ascending("socle", s, step)


def annihilator_series(s: DualWeakBrace) -> SeriesReport:
    """Ann_0 = E(S); Ann_k adds two-sided dots and commutators into Ann_{k-1}."""

    def step(prev: frozenset) -> frozenset:
        elementwise = _socle_step(s, prev, use_right_dots=True)
        pulled = _quotient_pullback(s, prev, annihilator)
        if elementwise != pulled:
            raise InternalInvariantBroken(
                "annihilator step: elementwise and quotient forms differ"
            )
        return elementwise

    return _run_ascending("annihilator-upper", s, step)


def gamma_step(s: DualWeakBrace, prev: frozenset) -> frozenset:
    full = frozenset(range(s.order))
    gens = set(product_set(s, prev, full))
    gens |= product_set(s, full, prev)
    gens |= commutator_set(s, prev, full)
    return generated_full_inverse_subsemigroup(s, gens)


def gamma_series(s: DualWeakBrace, start=None) -> SeriesReport:
    """Gamma_0 = start (default S); Gamma_k closes dots both ways plus
    commutators against the whole structure."""
    if start is None:
        start = frozenset(range(s.order))
    start = frozenset(start)
    chk = is_ideal(s, start)
    if not chk:
        raise NotAnIdeal(chk.law, chk.witness)
    return _run_descending("gamma-lower", s, start, lambda prev: gamma_step(s, prev))


@dataclass(frozen=True)
class SandwichReport:
    ok: bool
    chain: tuple[frozenset, ...]
    annihilator_chain: tuple[frozenset, ...]
    gamma_chain: tuple[frozenset, ...]


def verify_sandwich(s: DualWeakBrace, chain) -> SandwichReport:
    """Given an annihilator series, check Gamma_{k-j} <= I_j <= Ann_j for all j,
    plus the consecutive-step and sum identities behind the theorem."""
    chain = tuple(frozenset(x) for x in chain)
    full = frozenset(range(s.order))
    target = frozenset(s.idempotents)
    if not chain or chain[0] != target:
        raise NotAnnihilatorSeries(0, ("must_start_at_idempotents",))
    if chain[-1] != full:
        raise NotAnnihilatorSeries(len(chain) - 1, ("must_end_at_full_set",))
    for j, member in enumerate(chain):
        chk = is_ideal(s, member)
        if not chk:
            raise NotAnnihilatorSeries(j, (chk.law, chk.witness))
        if j and not chain[j - 1] <= member:
            raise NotAnnihilatorSeries(j, ("not_ascending",))
    for j in range(len(chain) - 1):
        q = quotient(s, chain[j])
        ann_q = annihilator(q.quotient)
        for a in sorted(chain[j + 1]):
            if q.projection[a] not in ann_q:
                raise NotAnnihilatorSeries(j, (a,))

    ann = annihilator_series(s)
    gam = gamma_series(s)
    if not (ann.terminated and gam.terminated):
        raise InternalInvariantBroken(
            "a valid annihilator series exists but a canonical series stalls"
        )

    def at(report: SeriesReport, i: int) -> frozenset:
        return report.chain[min(i, len(report.chain) - 1)]

    k = len(chain) - 1
    for j in range(k + 1):
        if not at(gam, k - j) <= chain[j]:
            raise InternalInvariantBroken("lower bound of the sandwich fails")
        if not chain[j] <= at(ann, j):
            raise InternalInvariantBroken("upper bound of the sandwich fails")
    for j in range(k):
        if not gamma_step(s, chain[j + 1]) <= chain[j]:
            raise InternalInvariantBroken("one-step gamma containment fails")
    for i in range(k + 1):
        for j in range(k + 1):
            lhs = gamma_step(s, sum_of_ideals(s, chain[i], chain[j]))
            rhs = frozenset(
                s.plus(a, b)
                for a in gamma_step(s, chain[i])
                for b in gamma_step(s, chain[j])
            )
            if lhs != rhs:
                raise InternalInvariantBroken("gamma of a sum differs from sum of gammas")
    return SandwichReport(True, chain, ann.chain, gam.chain)


@dataclass(frozen=True)
class ComponentClassification:
    order: int
    right: SeriesReport
    socle: SeriesReport
    annihilator: SeriesReport
    gamma: SeriesReport


@dataclass(frozen=True)
class Classification:
    order: int
    idempotent_count: int
    is_skew: bool
    is_brace: bool
    right: SeriesReport
    socle: SeriesReport
    annihilator: SeriesReport
    gamma: SeriesReport
    components: tuple[ComponentClassification, ...]


def _classify_one(s: DualWeakBrace) -> tuple[SeriesReport, SeriesReport, SeriesReport, SeriesReport]:
    r = right_series(s)
    so = socle_series(s)
    an = annihilator_series(s)
    ga = gamma_series(s)
    if so.terminated:
        if not r.terminated or r.index > so.index:
            raise InternalInvariantBroken("socle-nilpotent structure fails right-index bound")
    if an.terminated != ga.terminated:
        raise InternalInvariantBroken("upper and lower annihilator series disagree")
    if an.terminated and an.index != ga.index:
        raise InternalInvariantBroken("upper and lower annihilator indices differ")
    return r, so, an, ga


def classify(s: DualWeakBrace) -> Classification:
    """Series on s and on every component, with the index relations asserted."""
    from .compose import decompose

    r, so, an, ga = _classify_one(s)
    comps = []
    for b in decompose(s).braces:
        d = b.as_dual()
        cr, cso, can, cga = _classify_one(d)
        comps.append(ComponentClassification(b.order, cr, cso, can, cga))
    if so.terminated:
        idx = [c.socle.index for c in comps]
        if any(i is None for i in idx) or max(idx) != so.index:
            raise InternalInvariantBroken("socle index is not the component maximum")
    if all(c.socle.terminated for c in comps):
        if not so.terminated or so.index != max(c.socle.index for c in comps):
            raise InternalInvariantBroken("component socle indices do not assemble")
    if an.terminated:
        idx = [c.annihilator.index for c in comps]
        if any(i is None for i in idx) or max(idx) != an.index:
            raise InternalInvariantBroken("annihilator index is not the component maximum")
    if all(c.annihilator.terminated for c in comps):
        if not an.terminated or an.index != max(c.annihilator.index for c in comps):
            raise InternalInvariantBroken("component annihilator indices do not assemble")
    return Classification(
        s.order,
        len(s.idempotents),
        s.is_skew(),
        s.is_brace(),
        r,
        so,
        an,
        ga,
        tuple(comps),
    )
