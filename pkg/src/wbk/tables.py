"""Finite operation tables: groups, meet-semilattices, Clifford semigroups.

Structures live on {0, ..., n-1} and are given as dense row-major tables.
Validation is exhaustive and eager; a failure reports the first violated
axiom with the lexicographically smallest witness tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InternalInvariantBroken, ValidationError


def _frozen_table(raw) -> tuple[tuple[int, ...], ...]:
    """Shape- and range-check a raw table, freezing it to nested tuples."""
    n = len(raw)
    if n == 0:
        raise ValidationError("not_closed", ())
    rows = []
    for a, row in enumerate(raw):
        row = tuple(row)
        if len(row) != n:
            raise ValidationError("not_closed", (a,))
        for b, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise ValidationError("not_closed", (a, b))
        rows.append(row)
    return tuple(rows)


def _first_nonassoc(op) -> tuple[int, int, int] | None:
    n = len(op)
    for a, b, c in product(range(n), repeat=3):
        if op[op[a][b]][c] != op[a][op[b][c]]:
            return (a, b, c)
    return None


@dataclass(frozen=True)
class FiniteGroupTable:
    """A finite group as a Cayley table with precomputed identity and inverses."""

    order: int
    op: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]

    def mul(self, a: int, b: int) -> int:
        return self.op[a][b]

    def exponent(self) -> int:
        """lcm of all element orders."""
        from math import lcm

        out = 1
        for a in range(self.order):
            k, x = 1, a
            while x != self.identity:
                x = self.op[x][a]
                k += 1
            out = lcm(out, k)
        return out

    def is_abelian(self) -> bool:
        return all(
            self.op[a][b] == self.op[b][a] for a in range(self.order) for b in range(self.order)
        )


@dataclass(frozen=True)
class SemilatticeTable:
    """A meet-semilattice; alpha >= beta means meet(alpha, beta) == beta."""

    size: int
    meet: tuple[tuple[int, ...], ...]

    def ge(self, a: int, b: int) -> bool:
        return self.meet[a][b] == b

    def comparable_pairs(self) -> list[tuple[int, int]]:
        """All (alpha, beta) with alpha >= beta and alpha != beta."""
        return [
            (a, b)
            for a in range(self.size)
            for b in range(self.size)
            if a != b and self.ge(a, b)
        ]


@dataclass(frozen=True)
class CliffordTable:
    """A Clifford semigroup: inverse semigroup with a a' = a' a for all a."""

    order: int
    op: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    idempotents: tuple[int, ...]

    def mul(self, a: int, b: int) -> int:
        return self.op[a][b]

    def zero_of(self, a: int) -> int:
        """The idempotent a a' of a's group component."""
        return self.op[a][self.inv[a]]

    def transpose(self) -> "CliffordTable":
        t = tuple(tuple(self.op[b][a] for b in range(self.order)) for a in range(self.order))
        return CliffordTable(self.order, t, self.inv, self.idempotents)


def validate_group(raw) -> FiniteGroupTable:
    """Check closure, identity, inverses, associativity; raise on first failure."""
    op = _frozen_table(raw)
    n = len(op)
    ident = next(
        (e for e in range(n) if all(op[e][x] == x and op[x][e] == x for x in range(n))),
        None,
    )
    if ident is None:
        raise ValidationError("no_identity")
    inv = []
    for a in range(n):
        x = next((x for x in range(n) if op[a][x] == ident and op[x][a] == ident), None)
        if x is None:
            raise ValidationError("no_inverse", (a,))
        inv.append(x)
    bad = _first_nonassoc(op)
    if bad is not None:
        raise ValidationError("not_associative", bad)
    return FiniteGroupTable(n, op, ident, tuple(inv))


def validate_semilattice(raw) -> SemilatticeTable:
    """Check idempotency, commutativity, associativity of a meet table."""
    meet = _frozen_table(raw)
    n = len(meet)
    for a in range(n):
        if meet[a][a] != a:
            raise ValidationError("not_idempotent", (a,))
    for a in range(n):
        for b in range(a + 1, n):
            if meet[a][b] != meet[b][a]:
                raise ValidationError("not_commutative", (a, b))
    bad = _first_nonassoc(meet)
    if bad is not None:
        raise ValidationError("not_associative", bad)
    return SemilatticeTable(n, meet)


def validate_clifford(raw) -> CliffordTable:
    """Check associativity, unique pseudo-inverses, and a a' = a' a."""
    op = _frozen_table(raw)
    n = len(op)
    bad = _first_nonassoc(op)
    if bad is not None:
        raise ValidationError("not_associative", bad)
    inv = []
    for a in range(n):
        cands = [
            x
            for x in range(n)
            if op[op[a][x]][a] == a and op[op[x][a]][x] == x
        ]
        if len(cands) != 1:
            raise ValidationError("not_inverse", (a,))
        inv.append(cands[0])
    for a in range(n):
        if op[a][inv[a]] != op[inv[a]][a]:
            raise ValidationError("not_clifford", (a,))
    idems = tuple(e for e in range(n) if op[e][e] == e)
    return CliffordTable(n, op, tuple(inv), idems)


def clifford_of_group(g: FiniteGroupTable) -> CliffordTable:
    # a group is Clifford with E = {identity}; no re-validation needed
    return CliffordTable(g.order, g.op, g.inv, (g.identity,))


def _close(op, seed: set[int]) -> set[int]:
    members = set(seed)
    work = list(members)
    while work:
        x = work.pop()
        for y in tuple(members):
            for z in (op[x][y], op[y][x]):
                if z not in members:
                    members.add(z)
                    work.append(z)
    return members


def generating_set(g: FiniteGroupTable) -> list[int]:
    """Greedy generating set: repeatedly adjoin the least element not yet reached."""
    gens: list[int] = []
    reach = {g.identity}
    while len(reach) < g.order:
        x = min(a for a in range(g.order) if a not in reach)
        gens.append(x)
        reach = _close(g.op, reach | {x})
    return gens


def enumerate_group_homs(a: FiniteGroupTable, b: FiniteGroupTable) -> list[tuple[int, ...]]:
    """All homomorphisms a -> b, as image tuples, sorted lexicographically.

    Backtracks over images of a generating set, extending each partial
    assignment through product closure and pruning on conflict.
    """
    gens = generating_set(a)
    found: list[tuple[int, ...]] = []

    def extend(partial: dict[int, int], x0: int, y0: int) -> dict[int, int] | None:
        fmap = dict(partial)
        stack = [(x0, y0)]
        while stack:
            x, y = stack.pop()
            cur = fmap.get(x)
            if cur is not None:
                if cur != y:
                    return None
                continue
            fmap[x] = y
            for z, w in list(fmap.items()):
                stack.append((a.op[x][z], b.op[y][w]))
                stack.append((a.op[z][x], b.op[w][y]))
        return fmap

    def backtrack(i: int, partial: dict[int, int]) -> None:
        if i == len(gens):
            found.append(tuple(partial[x] for x in range(a.order)))
            return
        for img in range(b.order):
            ext = extend(partial, gens[i], img)
            if ext is not None:
                backtrack(i + 1, ext)

    backtrack(0, {a.identity: b.identity})
    for f in found:
        for x in range(a.order):
            for y in range(a.order):
                if f[a.op[x][y]] != b.op[f[x]][f[y]]:
                    raise InternalInvariantBroken(f"hom closure produced a non-hom at {(x, y)}")
    found.sort()
    return found
