"""Set-theoretic solution tables and their identities.

r(a,b) = (lam_a(b), rho_b(a)) turns every dual weak brace into a map on
pairs; the checks here verify the braid identity, the pseudo-inverse
relations against the opposite structure, regularity of the derived maps,
and power periodicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .braces import DualWeakBrace
from .errors import NoPeriod, ValidationError
from .tables import SemilatticeTable


@dataclass(frozen=True)
class SolutionTable:
    order: int
    pairs: tuple[tuple[tuple[int, int], ...], ...]

    def apply(self, a: int, b: int) -> tuple[int, int]:
        return self.pairs[a][b]


def solution_table(order: int, fn) -> SolutionTable:
    return SolutionTable(
        order, tuple(tuple(fn(a, b) for b in range(order)) for a in range(order))
    )


def solution_of(s: DualWeakBrace) -> SolutionTable:
    return solution_table(s.order, lambda a, b: (s.lam(a, b), s.rho(b, a)))


def identity_solution(n: int) -> SolutionTable:
    return solution_table(n, lambda a, b: (a, b))


def compose_solutions(r2: SolutionTable, r1: SolutionTable) -> SolutionTable:
    """(r2 after r1) as maps on pairs."""
    return solution_table(r1.order, lambda a, b: r2.apply(*r1.apply(a, b)))


def check_braid(r: SolutionTable) -> tuple[int, int, int] | None:
    """First triple violating the braid identity, or None when it holds."""

    def r12(t):
        u, v = r.pairs[t[0]][t[1]]
        return (u, v, t[2])

    def r23(t):
        u, v = r.pairs[t[1]][t[2]]
        return (t[0], u, v)

    for a, b, c in product(range(r.order), repeat=3):
        t = (a, b, c)
        if r12(r23(r12(t))) != r23(r12(r23(t))):
            return t
    return None


def is_bijective(r: SolutionTable) -> bool:
    return len({p for row in r.pairs for p in row}) == r.order * r.order


@dataclass(frozen=True)
class WeakInverseReport:
    holds: bool
    r_sandwich: bool        # r r_op r == r
    rop_sandwich: bool      # r_op r r_op == r_op
    commute: bool           # r r_op == r_op r
    r_bijective: bool
    inverse_pair: bool | None   # r r_op == id, only checked when |E(S)| == 1


def check_weak_inverses(s: DualWeakBrace) -> WeakInverseReport:
    """Relations between r and the solution of the opposite structure."""
    r = solution_of(s)
    rop = solution_of(s.opposite())
    r_rop = compose_solutions(r, rop)
    rop_r = compose_solutions(rop, r)
    r_sandwich = compose_solutions(r, rop_r) == r
    rop_sandwich = compose_solutions(rop, r_rop) == rop
    commute = r_rop == rop_r
    inverse_pair = None
    if s.is_skew():
        inverse_pair = r_rop == identity_solution(s.order)
    holds = r_sandwich and rop_sandwich and commute and (inverse_pair is not False)
    return WeakInverseReport(holds, r_sandwich, rop_sandwich, commute, is_bijective(r), inverse_pair)


@dataclass(frozen=True)
class RegularityReport:
    ok: bool
    witness: tuple | None
    lambda_bijective: tuple[bool, ...]
    rho_bijective: tuple[bool, ...]


def check_regularity(s: DualWeakBrace) -> RegularityReport:
    """Pointwise f f' f = f, f' f f' = f', f f' = f' f for every lam_a and
    rho_a, with f' the map of the mul-inverse element.  Bijectivity of each
    map is reported as a diagnostic only."""
    n = s.order
    lam_rows = [tuple(s.lam(a, b) for b in range(n)) for a in range(n)]
    rho_rows = [tuple(s.rho(a, b) for b in range(n)) for a in range(n)]

    def comp(f, g):
        return tuple(f[g[x]] for x in range(n))

    witness = None
    for a in range(n):
        ai = s.minv(a)
        for name, rows in (("lambda", lam_rows), ("rho", rho_rows)):
            f, g = rows[a], rows[ai]
            if comp(comp(f, g), f) != f:
                witness = witness or (name, "sandwich", a)
            if comp(comp(g, f), g) != g:
                witness = witness or (name, "sandwich_inv", a)
            if comp(f, g) != comp(g, f):
                witness = witness or (name, "commute", a)
    lam_bij = tuple(len(set(row)) == n for row in lam_rows)
    rho_bij = tuple(len(set(row)) == n for row in rho_rows)
    return RegularityReport(witness is None, witness, lam_bij, rho_bij)


def period(r: SolutionTable) -> int:
    """Smallest p >= 1 with r^(p+1) == r; NoPeriod if r never recurs."""
    seen = {r.pairs: 1}
    power, k = r, 1
    while True:
        power = compose_solutions(power, r)
        k += 1
        j = seen.get(power.pairs)
        if j is not None:
            if j == 1:
                return k - 1
            raise NoPeriod(tail=j - 1, cycle=k - j)
        seen[power.pairs] = k


def strong_semilattice_of_solutions(
    y: SemilatticeTable,
    solutions: tuple[SolutionTable, ...],
    maps: dict,
) -> SolutionTable:
    """Glue component solutions along equivariant index-lowering maps.

    maps: (alpha, beta) -> image tuple for alpha > beta.  Verifies map
    presence, transitive composition, and equivariance before gluing.
    """
    if len(solutions) != y.size:
        raise ValidationError("component_count_mismatch", (len(solutions), y.size))
    homs = {}
    for alpha, beta in y.comparable_pairs():
        if (alpha, beta) not in maps:
            raise ValidationError("missing_hom", (alpha, beta))
        f = tuple(maps[(alpha, beta)])
        if len(f) != solutions[alpha].order or any(
            not 0 <= v < solutions[beta].order for v in f
        ):
            raise ValidationError("not_a_hom", ((alpha, beta), None))
        homs[(alpha, beta)] = f
    for alpha, beta in y.comparable_pairs():
        for gamma in range(y.size):
            if gamma not in (alpha, beta) and y.ge(beta, gamma):
                fab, fbg, fag = homs[(alpha, beta)], homs[(beta, gamma)], homs[(alpha, gamma)]
                for x in range(solutions[alpha].order):
                    if fbg[fab[x]] != fag[x]:
                        raise ValidationError("composition", (alpha, beta, gamma, x))
    for alpha, beta in y.comparable_pairs():
        f, ra, rb = homs[(alpha, beta)], solutions[alpha], solutions[beta]
        for x in range(ra.order):
            for z in range(ra.order):
                u, v = ra.apply(x, z)
                if rb.apply(f[x], f[z]) != (f[u], f[v]):
                    raise ValidationError("equivariance", (alpha, beta, x, z))

    offs, acc = [], 0
    for r in solutions:
        offs.append(acc)
        acc += r.order
    owner = []
    for alpha, r in enumerate(solutions):
        owner.extend((alpha, i) for i in range(r.order))

    def glue(a, b):
        alpha, i = owner[a]
        beta, j = owner[b]
        gamma = y.meet[alpha][beta]
        fi = i if gamma == alpha else homs[(alpha, gamma)][i]
        fj = j if gamma == beta else homs[(beta, gamma)][j]
        u, v = solutions[gamma].apply(fi, fj)
        return (offs[gamma] + u, offs[gamma] + v)

    return solution_table(acc, glue)
