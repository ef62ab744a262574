"""Skew braces and dual weak braces as twin tables on one element set.

A skew brace pairs two group tables sharing an identity; a dual weak brace
pairs two Clifford tables sharing their idempotents.  Both satisfy
a*(b+c) = a*b - a + a*c; dual weak braces additionally satisfy
a*a' = -a + a, which ties the two notions of "loss of invertibility"
together.  Derived maps (lam, rho, dot, commutators) live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InternalInvariantBroken, ValidationError
from .tables import (
    CliffordTable,
    FiniteGroupTable,
    SemilatticeTable,
    clifford_of_group,
    validate_clifford,
    validate_group,
    validate_semilattice,
)


@dataclass(frozen=True)
class SkewBrace:
    add: FiniteGroupTable
    mul: FiniteGroupTable

    @property
    def order(self) -> int:
        return self.add.order

    def as_dual(self) -> "DualWeakBrace":
        """Reinterpret as a dual weak brace with a one-point semilattice."""
        n = self.order
        return DualWeakBrace(
            clifford_of_group(self.add),
            clifford_of_group(self.mul),
            (self.add.identity,),
            (0,) * n,
        )

    def is_brace(self) -> bool:
        return self.add.is_abelian()


@dataclass(frozen=True)
class DualWeakBrace:
    add: CliffordTable
    mul: CliffordTable
    idempotents: tuple[int, ...]
    component_of: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.add.order

    # -- element operations -------------------------------------------------

    def plus(self, a: int, b: int) -> int:
        return self.add.op[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul.op[a][b]

    def neg(self, a: int) -> int:
        return self.add.inv[a]

    def minv(self, a: int) -> int:
        return self.mul.inv[a]

    def lam(self, a: int, b: int) -> int:
        """lam_a(b) = -a + a*b."""
        return self.add.op[self.add.inv[a]][self.mul.op[a][b]]

    def rho(self, b: int, a: int) -> int:
        """rho_b(a) = (lam_a(b))' * a * b, inverses taken in mul."""
        lab = self.lam(a, b)
        return self.mul.op[self.mul.op[self.mul.inv[lab]][a]][b]

    def dot(self, a: int, b: int) -> int:
        """a.b = -a + a*b - b, the gap between the two operations."""
        return self.add.op[self.lam(a, b)][self.add.inv[b]]

    def add_commutator(self, a: int, b: int) -> int:
        """[a,b]+ = -a - b + a + b."""
        na, nb = self.add.inv[a], self.add.inv[b]
        return self.add.op[self.add.op[self.add.op[na][nb]][a]][b]

    def zero_part(self, a: int) -> int:
        return self.add.op[a][self.add.inv[a]]

    # -- structure-level helpers --------------------------------------------

    def is_skew(self) -> bool:
        return len(self.idempotents) == 1

    def is_brace(self) -> bool:
        return self.is_skew() and all(
            self.add.op[a][b] == self.add.op[b][a]
            for a in range(self.order)
            for b in range(self.order)
        )

    def semilattice(self) -> SemilatticeTable:
        """Meet table of the idempotents, indexed by component."""
        idx = {e: i for i, e in enumerate(self.idempotents)}
        meet = tuple(
            tuple(idx[self.add.op[e][f]] for f in self.idempotents) for e in self.idempotents
        )
        return validate_semilattice(meet)

    def component_members(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.idempotents]
        for a in range(self.order):
            out[self.component_of[a]].append(a)
        return tuple(tuple(m) for m in out)

    def opposite(self) -> "DualWeakBrace":
        """Same mul, transposed add; always a dual weak brace again."""
        try:
            return validate_dual_weak_brace(self.add.transpose().op, self.mul.op)
        except ValidationError as err:
            raise InternalInvariantBroken(f"opposite failed validation: {err}") from err


def _check_compatibility(add: CliffordTable, mul: CliffordTable) -> None:
    n = add.order
    for a, b, c in product(range(n), repeat=3):
        lhs = mul.op[a][add.op[b][c]]
        rhs = add.op[add.op[mul.op[a][b]][add.inv[a]]][mul.op[a][c]]
        if lhs != rhs:
            raise ValidationError("compatibility", (a, b, c))


def validate_skew_brace(add_raw, mul_raw) -> SkewBrace:
    """Validate both group tables, the shared identity, and compatibility."""
    try:
        add = validate_group(add_raw)
    except ValidationError as err:
        raise ValidationError(err.law, err.witness, side="add") from None
    try:
        mul = validate_group(mul_raw)
    except ValidationError as err:
        raise ValidationError(err.law, err.witness, side="mul") from None
    if add.order != mul.order:
        raise ValidationError("order_mismatch", (add.order, mul.order))
    if add.identity != mul.identity:
        raise ValidationError("identity_mismatch", (add.identity, mul.identity))
    _check_compatibility(clifford_of_group(add), clifford_of_group(mul))
    return SkewBrace(add, mul)


def validate_dual_weak_brace(add_raw, mul_raw) -> DualWeakBrace:
    """Validate both Clifford tables, idempotent agreement, compatibility,
    and a*a' = -a + a; fill the component map from zero parts."""
    try:
        add = validate_clifford(add_raw)
    except ValidationError as err:
        raise ValidationError(err.law, err.witness, side="add") from None
    try:
        mul = validate_clifford(mul_raw)
    except ValidationError as err:
        raise ValidationError(err.law, err.witness, side="mul") from None
    if add.order != mul.order:
        raise ValidationError("order_mismatch", (add.order, mul.order))
    if add.idempotents != mul.idempotents:
        diff = set(add.idempotents) ^ set(mul.idempotents)
        raise ValidationError("idempotent_set_mismatch", tuple(sorted(diff)))
    n = add.order
    # cheap axiom first: a*a' must be the shared zero part -a + a = a + -a
    for a in range(n):
        circ = mul.op[a][mul.inv[a]]
        if circ != add.op[add.inv[a]][a] or circ != add.op[a][add.inv[a]]:
            raise ValidationError("second_axiom", (a,))
    _check_compatibility(add, mul)
    comp_idx = {e: i for i, e in enumerate(add.idempotents)}
    component_of = tuple(comp_idx[add.op[a][add.inv[a]]] for a in range(n))
    return DualWeakBrace(add, mul, add.idempotents, component_of)


def trivial_brace(g: FiniteGroupTable) -> SkewBrace:
    """The skew brace with add = mul = g (always compatible)."""
    return SkewBrace(g, g)


def relabel(s: DualWeakBrace, perm: tuple[int, ...]) -> DualWeakBrace:
    """Transport s along a bijection old-index -> new-index and revalidate."""
    n = s.order
    add = [[0] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            add[perm[a]][perm[b]] = perm[s.add.op[a][b]]
            mul[perm[a]][perm[b]] = perm[s.mul.op[a][b]]
    return validate_dual_weak_brace(add, mul)
