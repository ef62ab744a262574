"""Strong semilattices of skew braces: build, take apart, compare.

compose glues disjoint skew braces along a semilattice of index-lowering
homomorphisms; decompose recovers that data from any dual weak brace.
Global element order is always (semilattice index, local index).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .braces import DualWeakBrace, SkewBrace, validate_dual_weak_brace, validate_skew_brace
from .errors import InternalInvariantBroken, ValidationError
from .tables import SemilatticeTable, enumerate_group_homs, validate_semilattice


@dataclass(frozen=True)
class StrongSemilatticeSpec:
    """A semilattice y, one skew brace per y-element, and connecting homs
    for every comparable pair (alpha, beta) with alpha > beta."""

    y: SemilatticeTable
    braces: tuple[SkewBrace, ...]
    homs: dict

    def hom(self, alpha: int, beta: int) -> tuple[int, ...]:
        if alpha == beta:
            return tuple(range(self.braces[alpha].order))
        return self.homs[(alpha, beta)]


def _check_brace_hom(a: SkewBrace, b: SkewBrace, f) -> tuple[int, int] | None:
    """First pair where f fails to preserve add or mul, else None."""
    for x in range(a.order):
        for y in range(a.order):
            if f[a.add.op[x][y]] != b.add.op[f[x]][f[y]]:
                return (x, y)
            if f[a.mul.op[x][y]] != b.mul.op[f[x]][f[y]]:
                return (x, y)
    return None


def validate_spec(y_raw, braces_raw, homs_raw) -> StrongSemilatticeSpec:
    """Validate the semilattice, each brace, each hom, and transitivity.

    braces_raw: sequence of (add, mul) raw tables or SkewBrace, indexed by
    y-element.  homs_raw: map (alpha, beta) -> image tuple for alpha > beta.
    """
    y = y_raw if isinstance(y_raw, SemilatticeTable) else validate_semilattice(y_raw)
    braces = tuple(
        b if isinstance(b, SkewBrace) else validate_skew_brace(*b) for b in braces_raw
    )
    if len(braces) != y.size:
        raise ValidationError("component_count_mismatch", (len(braces), y.size))
    homs: dict = {}
    for alpha, beta in y.comparable_pairs():
        if (alpha, beta) not in homs_raw:
            raise ValidationError("missing_hom", (alpha, beta))
        f = tuple(homs_raw[(alpha, beta)])
        src, dst = braces[alpha], braces[beta]
        if len(f) != src.order or any(not 0 <= v < dst.order for v in f):
            raise ValidationError("not_a_hom", ((alpha, beta), None))
        bad = _check_brace_hom(src, dst, f)
        if bad is not None:
            raise ValidationError("not_a_hom", ((alpha, beta), bad))
        homs[(alpha, beta)] = f
    for key in homs_raw:
        if key not in homs:
            raise ValidationError("unexpected_hom", tuple(key))
    for alpha, beta in y.comparable_pairs():
        for gamma in range(y.size):
            if gamma != beta and gamma != alpha and y.ge(beta, gamma):
                fab, fbg, fag = homs[(alpha, beta)], homs[(beta, gamma)], homs[(alpha, gamma)]
                for x in range(braces[alpha].order):
                    if fbg[fab[x]] != fag[x]:
                        raise ValidationError("composition", (alpha, beta, gamma, x))
    return StrongSemilatticeSpec(y, braces, homs)


def _offsets(spec: StrongSemilatticeSpec) -> list[int]:
    out, acc = [], 0
    for b in spec.braces:
        out.append(acc)
        acc += b.order
    return out


def compose(spec: StrongSemilatticeSpec) -> DualWeakBrace:
    """Glue the components into one dual weak brace on the disjoint union."""
    offs = _offsets(spec)
    n = offs[-1] + spec.braces[-1].order
    owner = []
    for alpha, b in enumerate(spec.braces):
        owner.extend((alpha, i) for i in range(b.order))

    def table(pick):
        t = [[0] * n for _ in range(n)]
        for a in range(n):
            alpha, i = owner[a]
            for b in range(n):
                beta, j = owner[b]
                gamma = spec.y.meet[alpha][beta]
                gi = spec.hom(alpha, gamma)[i]
                gj = spec.hom(beta, gamma)[j]
                t[a][b] = offs[gamma] + pick(spec.braces[gamma])[gi][gj]
        return t

    s = validate_dual_weak_brace(table(lambda b: b.add.op), table(lambda b: b.mul.op))
    if len(s.idempotents) != spec.y.size:
        raise InternalInvariantBroken("composed structure has wrong idempotent count")
    if s.semilattice().meet != spec.y.meet:
        raise InternalInvariantBroken("composed idempotents do not reproduce the semilattice")
    return s


def decompose(s: DualWeakBrace) -> StrongSemilatticeSpec:
    """Recover the semilattice, components, and connecting homs from s.

    Components are the zero-part fibers; the hom toward a lower component
    is a |-> a + e (cross-checked against a * e).
    """
    y = s.semilattice()
    members = s.component_members()
    rank = {}
    for comp in members:
        for i, a in enumerate(comp):
            rank[a] = i

    braces = []
    for comp in members:
        def local(table):
            out = []
            for a in comp:
                row = []
                for b in comp:
                    v = table[a][b]
                    if s.component_of[v] != s.component_of[a]:
                        raise InternalInvariantBroken("component not closed under operation")
                    row.append(rank[v])
                out.append(row)
            return out

        try:
            braces.append(validate_skew_brace(local(s.add.op), local(s.mul.op)))
        except ValidationError as err:
            raise InternalInvariantBroken(f"component is not a skew brace: {err}") from err

    homs = {}
    for alpha, beta in y.comparable_pairs():
        e = s.idempotents[beta]
        img = []
        for a in members[alpha]:
            v = s.add.op[a][e]
            if v != s.mul.op[a][e]:
                raise InternalInvariantBroken("a + e and a * e disagree on a comparable pair")
            img.append(rank[v])
        homs[(alpha, beta)] = tuple(img)
    return validate_spec(y, braces, homs)


def enumerate_skew_brace_homs(a: SkewBrace, b: SkewBrace) -> list[tuple[int, ...]]:
    """All maps preserving both tables, sorted lexicographically.

    Backtracks over mul-side generator images; add preservation is checked
    on the closed map (the mul closure pins every value).
    """
    out = []
    for f in enumerate_group_homs(a.mul, b.mul):
        ok = True
        for x in range(a.order):
            for y in range(a.order):
                if f[a.add.op[x][y]] != b.add.op[f[x]][f[y]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(f)
    return out


@dataclass(frozen=True)
class IsomorphismWitness:
    eta: tuple[int, ...]
    thetas: tuple[tuple[int, ...], ...]
    global_map: tuple[int, ...]


def _invariant_vector(spec: StrongSemilatticeSpec):
    return sorted(
        (b.order, b.mul.exponent(), b.add.exponent(), b.add.is_abelian(), b.mul.is_abelian())
        for b in spec.braces
    )


def are_isomorphic(s: DualWeakBrace, t: DualWeakBrace) -> IsomorphismWitness | None:
    """Search for a structure isomorphism; None when none exists.

    The witness is the first found in canonical order: eta by lexicographic
    permutation order, thetas by hom enumeration order.
    """
    if s.order != t.order or len(s.idempotents) != len(t.idempotents):
        return None
    ds, dt = decompose(s), decompose(t)
    if _invariant_vector(ds) != _invariant_vector(dt):
        return None
    k = ds.y.size
    iso_cache: dict[tuple[int, int], list[tuple[int, ...]]] = {}

    def isos(alpha: int, beta: int) -> list[tuple[int, ...]]:
        if (alpha, beta) not in iso_cache:
            ba, bb = ds.braces[alpha], dt.braces[beta]
            if ba.order != bb.order:
                iso_cache[(alpha, beta)] = []
            else:
                iso_cache[(alpha, beta)] = [
                    f for f in enumerate_skew_brace_homs(ba, bb) if len(set(f)) == ba.order
                ]
        return iso_cache[(alpha, beta)]

    for eta in permutations(range(k)):
        if any(
            eta[ds.y.meet[i][j]] != dt.y.meet[eta[i]][eta[j]]
            for i in range(k)
            for j in range(k)
        ):
            continue
        if any(ds.braces[i].order != dt.braces[eta[i]].order for i in range(k)):
            continue

        def compatible(alpha, theta, chosen):
            for beta, other in chosen.items():
                if ds.y.ge(alpha, beta) and alpha != beta:
                    pab = ds.hom(alpha, beta)
                    qab = dt.hom(eta[alpha], eta[beta])
                    if any(other[pab[x]] != qab[theta[x]] for x in range(len(theta))):
                        return False
                if ds.y.ge(beta, alpha) and alpha != beta:
                    pba = ds.hom(beta, alpha)
                    qba = dt.hom(eta[beta], eta[alpha])
                    if any(theta[pba[x]] != qba[other[x]] for x in range(len(other))):
                        return False
            return True

        def search(alpha: int, chosen: dict) -> dict | None:
            if alpha == k:
                return chosen
            for theta in isos(alpha, eta[alpha]):
                if compatible(alpha, theta, chosen):
                    hit = search(alpha + 1, {**chosen, alpha: theta})
                    if hit is not None:
                        return hit
            return None

        chosen = search(0, {})
        if chosen is None:
            continue
        offs_s, offs_t = _offsets(ds), _offsets(dt)
        mem_s, mem_t = s.component_members(), t.component_members()
        g = [0] * s.order
        for alpha in range(k):
            theta = chosen[alpha]
            for i, a in enumerate(mem_s[alpha]):
                g[a] = mem_t[eta[alpha]][theta[i]]
        for a in range(s.order):
            for b in range(s.order):
                if g[s.add.op[a][b]] != t.add.op[g[a]][g[b]] or g[s.mul.op[a][b]] != t.mul.op[g[a]][g[b]]:
                    raise InternalInvariantBroken("assembled isomorphism fails on a pair")
        return IsomorphismWitness(
            tuple(eta), tuple(chosen[alpha] for alpha in range(k)), tuple(g)
        )
    return None
