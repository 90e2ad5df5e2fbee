"""Skew braces on Cayley tables: axioms, the lambda map, star products,
substructure classification, ideals, quotients, socle/centre, opposites and
the lambda semidirect product.

A skew brace couples two groups (B,+) and (B,o) on the same index set through
skew left distributivity a o (b+c) = a o b - a + a o c.  Everything here is
exhaustively validated at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BoundExceededError,
    CosetMismatchError,
    DistributivityError,
    IdentityMismatchError,
    NotAnIdealError,
    NotASubgroupError,
)
from .groups import (
    FiniteGroup,
    find_identity,
    is_subgroup,
    max_order_bound,
    normalize_table,
    semidirect_product,
    subgroup_closure,
    Automorphism,
)

SEMIDIRECT_MAX_SIZE = 4096


def _validate_brace(add: FiniteGroup, mul: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Check all brace axioms and return the lambda table lam[a][b] = -a + a o b."""
    n = add.order
    A = np.array(add.table, dtype=np.int64)
    M = np.array(mul.table, dtype=np.int64)
    neg = np.array(add.inverse, dtype=np.int64)
    rng = np.arange(n)

    # skew left distributivity, all triples
    lhs = M[:, A]                               # lhs[a,b,c] = a o (b+c)
    partial = A[M, neg[:, None]]                # partial[a,b] = (a o b) - a
    rhs = A[partial[:, :, None], M[:, None, :]] # rhs[a,b,c] = (a o b) - a + (a o c)
    if not np.array_equal(lhs, rhs):
        a, b, c = (int(v) for v in np.argwhere(lhs != rhs)[0])
        raise DistributivityError(a, b, c)

    lam = A[neg[:, None], M]                    # lam[a,b] = -a + (a o b)
    # each lambda_a is a bijection
    if not np.all(np.sort(lam, axis=1) == rng):
        bad = int(np.nonzero(np.any(np.sort(lam, axis=1) != rng, axis=1))[0][0])
        raise DistributivityError(bad, 0, 0)
    # each lambda_a is an additive homomorphism
    lam_of_sum = lam[:, A]                            # [a,b,c] = lam_a(b+c)
    sum_of_lam = A[lam[:, :, None], lam[:, None, :]]  # [a,b,c] = lam_a(b)+lam_a(c)
    if not np.array_equal(lam_of_sum, sum_of_lam):
        raise DistributivityError(*(int(v) for v in np.argwhere(lam_of_sum != sum_of_lam)[0]))
    # lambda is a homomorphism from (B,o) to Aut(B,+)
    lam_of_prod = lam[M]                              # [a,b,c] = lam_{a o b}(c)
    composed = lam[rng[:, None, None], lam[None, :, :]]
    if not np.array_equal(lam_of_prod, composed):
        raise DistributivityError(*(int(v) for v in np.argwhere(lam_of_prod != composed)[0]))
    # the three defining identities
    lam_inv = np.empty_like(lam)
    for a in range(n):
        lam_inv[a, lam[a]] = rng
    if not np.array_equal(A, M[rng[:, None], lam_inv]):
        raise DistributivityError(0, 0, 0)
    if not np.array_equal(M, A[rng[:, None], lam]):
        raise DistributivityError(0, 0, 0)
    minv = np.array(mul.inverse, dtype=np.int64)
    if not np.array_equal(neg, lam[rng, minv]):
        raise DistributivityError(0, 0, 0)
    return tuple(tuple(int(x) for x in row) for row in lam)


class SkewBrace:
    """Two group structures sharing the index set and identity 0, with the
    lambda table cached at construction."""

    __slots__ = ("order", "add", "mul", "lam")

    def __init__(self, add: FiniteGroup, mul: FiniteGroup):
        if add.order != mul.order:
            raise IdentityMismatchError(
                f"group orders differ: {add.order} vs {mul.order}"
            )
        lam = _validate_brace(add, mul)
        object.__setattr__(self, "order", add.order)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "lam", lam)

    def __setattr__(self, name, value):
        raise AttributeError("SkewBrace is immutable")

    def plus(self, a: int, b: int) -> int:
        return self.add.table[a][b]

    def circ(self, a: int, b: int) -> int:
        return self.mul.table[a][b]

    def neg(self, a: int) -> int:
        return self.add.inverse[a]

    def inv(self, a: int) -> int:
        return self.mul.inverse[a]

    def star(self, a: int, b: int) -> int:
        """a * b = lambda_a(b) - b."""
        return self.add.table[self.lam[a][b]][self.add.inverse[b]]

    def lambda_perm(self, a: int) -> tuple[int, ...]:
        return self.lam[a]

    def is_trivial(self) -> bool:
        return self.add.table == self.mul.table

    def is_abelian_type(self) -> bool:
        return self.add.is_abelian()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewBrace)
            and self.add.table == other.add.table
            and self.mul.table == other.mul.table
        )

    def __hash__(self) -> int:
        return hash((self.add.table, self.mul.table))

    def __repr__(self) -> str:
        return f"SkewBrace(order={self.order})"


def build_brace(add_table, mul_table) -> SkewBrace:
    """Validate the two tables and their interaction; raise on the first failure.

    IdentityMismatchError is raised when either table has its identity sitting
    at an index other than 0 (the shared-identity convention of all formats).
    """
    at = normalize_table(add_table)
    mt = normalize_table(mul_table)
    e_add, e_mul = find_identity(at), find_identity(mt)
    if e_add is not None and e_mul is not None and (e_add != 0 or e_mul != 0):
        raise IdentityMismatchError(
            f"identities sit at indices {e_add} (add) and {e_mul} (mul), expected 0"
        )
    return SkewBrace(FiniteGroup(at), FiniteGroup(mt))


@dataclass(frozen=True)
class SubStructure:
    """An element subset with its classification flags.

    The flags imply each other downward: ideal => strong left ideal =>
    left ideal => sub-brace.
    """

    elements: tuple[int, ...]
    is_sub_brace: bool
    is_left_ideal: bool
    is_strong_left_ideal: bool
    is_ideal: bool

    @property
    def size(self) -> int:
        return len(self.elements)


def brace_closure(B: SkewBrace, seed) -> tuple[int, ...]:
    """Smallest sub-skew brace containing seed (closure under both operations)."""
    members = {0} | set(seed)
    queue = list(members - {0})
    at, mt = B.add.table, B.mul.table
    while queue:
        x = queue.pop()
        for y in (B.add.inverse[x], B.mul.inverse[x]):
            if y not in members:
                members.add(y)
                queue.append(y)
        for y in list(members):
            for z in (at[x][y], at[y][x], mt[x][y], mt[y][x]):
                if z not in members:
                    members.add(z)
                    queue.append(z)
    return tuple(sorted(members))


def classify_substructure(B: SkewBrace, elems) -> SubStructure:
    """Compute the four flags directly from the definitions.

    Sets that are not closed come back with every flag false rather than as
    errors, so lattice searches can probe arbitrary subsets.
    """
    s = set(elems)
    members = tuple(sorted(s))
    if 0 not in s:
        return SubStructure(members, False, False, False, False)
    add_sub = is_subgroup(B.add, s)
    mul_sub = is_subgroup(B.mul, s)
    sub_brace = add_sub and mul_sub
    lam_invariant = add_sub and all(
        B.lam[b][x] in s for b in range(B.order) for x in s
    )
    left_ideal = add_sub and lam_invariant
    add_normal = all(B.add.conjugate(g, x) in s for g in range(B.order) for x in s)
    strong = left_ideal and add_normal
    mul_normal = all(B.mul.conjugate(g, x) in s for g in range(B.order) for x in s)
    ideal = strong and mul_normal
    return SubStructure(members, sub_brace, left_ideal, strong, ideal)


def star_span(B: SkewBrace, xs, ys) -> tuple[int, ...]:
    """Additive subgroup generated by all x * y with x in xs, y in ys."""
    gens = {B.star(x, y) for x in xs for y in ys}
    return subgroup_closure(B.add, gens)


def sub_skew_braces(B: SkewBrace, bound: int | None = None) -> list[SubStructure]:
    """The complete lattice of sub-skew braces.

    Generated by closing every singleton, then repeatedly closing unions of
    pairs until a fixpoint; exponential subset enumeration is never used.
    """
    limit = max_order_bound() if bound is None else bound
    if B.order > limit:
        raise BoundExceededError(f"sub_skew_braces: order {B.order} exceeds {limit}")
    found = {frozenset({0})}
    found.update(frozenset(brace_closure(B, [x])) for x in range(B.order))
    frontier = set(found)
    while frontier:
        fresh = set()
        for s in frontier:
            for u in list(found):
                if s <= u or u <= s:
                    continue
                j = frozenset(brace_closure(B, s | u))
                if j not in found and j not in fresh:
                    fresh.add(j)
        found |= fresh
        frontier = fresh
    subs = [classify_substructure(B, s) for s in found]
    return sorted(subs, key=lambda t: (t.size, t.elements))


def three_of_four_ideal(B: SkewBrace, elems) -> tuple[bool, tuple[int, ...] | None]:
    """Test whether some three of the four ideal conditions hold on a subgroup.

    Conditions: (1) additively normal, (2) lambda-invariant, (3)
    multiplicatively normal, (4) S * B contained in S.  Returns the first
    satisfied 3-subset (1-based labels) and cross-checks that the set really
    is an ideal whenever the test reports true.
    """
    s = set(elems)
    if not (is_subgroup(B.add, s) or is_subgroup(B.mul, s)):
        raise NotASubgroupError(
            "expected an additive or multiplicative subgroup of the brace"
        )
    conds = {
        1: all(B.add.conjugate(g, x) in s for g in range(B.order) for x in s),
        2: all(B.lam[b][x] in s for b in range(B.order) for x in s),
        3: all(B.mul.conjugate(g, x) in s for g in range(B.order) for x in s),
        4: set(star_span(B, s, range(B.order))) <= s,
    }
    held = tuple(k for k in (1, 2, 3, 4) if conds[k])
    if len(held) >= 3:
        if not classify_substructure(B, s).is_ideal:
            raise AssertionError(
                f"three-of-four held {held} but the set is not an ideal: {sorted(s)}"
            )
        return True, held
    return False, None


def ideal_generated(B: SkewBrace, seed) -> SubStructure:
    """Smallest ideal containing seed: fixpoint closure under both operations,
    inverses, lambda images and both conjugations."""
    members = {0} | set(seed)
    queue = list(members - {0})
    at, mt = B.add.table, B.mul.table
    n = B.order
    while queue:
        x = queue.pop()
        new = {B.add.inverse[x], B.mul.inverse[x]}
        for y in list(members):
            new.update((at[x][y], at[y][x], mt[x][y], mt[y][x]))
        for b in range(n):
            new.add(B.lam[b][x])
            new.add(B.add.conjugate(b, x))
            new.add(B.mul.conjugate(b, x))
        for z in new:
            if z not in members:
                members.add(z)
                queue.append(z)
    sub = classify_substructure(B, members)
    assert sub.is_ideal, "closure under all ideal operations must yield an ideal"
    return sub


def quotient_brace(B: SkewBrace, ideal) -> tuple[SkewBrace, tuple[int, ...]]:
    """Quotient by an ideal: (brace on cosets, projection).  Coset of 0 is 0.

    Asserts that additive and multiplicative coset partitions coincide before
    building; CosetMismatchError would signal a logic bug.
    """
    if isinstance(ideal, SubStructure):
        sub = ideal
    else:
        sub = classify_substructure(B, ideal)
    if not sub.is_ideal:
        raise NotAnIdealError(f"{list(sub.elements)} is not an ideal")
    s = sub.elements
    at, mt = B.add.table, B.mul.table
    add_cosets = {frozenset(at[a][x] for x in s) for a in range(B.order)}
    mul_cosets = {frozenset(mt[a][x] for x in s) for a in range(B.order)}
    if add_cosets != mul_cosets:
        raise CosetMismatchError(
            "additive and multiplicative cosets differ for a verified ideal"
        )
    cosets = sorted((tuple(sorted(c)) for c in add_cosets), key=lambda c: c[0])
    proj = [-1] * B.order
    for i, c in enumerate(cosets):
        for e in c:
            proj[e] = i
    m = len(cosets)
    reps = [c[0] for c in cosets]
    qadd = [[proj[at[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    qmul = [[proj[mt[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    Q = build_brace(qadd, qmul)
    for a in range(B.order):
        for b in range(B.order):
            if proj[at[a][b]] != Q.add.table[proj[a]][proj[b]]:
                raise CosetMismatchError("projection does not preserve addition")
            if proj[mt[a][b]] != Q.mul.table[proj[a]][proj[b]]:
                raise CosetMismatchError("projection does not preserve multiplication")
    return Q, tuple(proj)


def induced_sub_brace(B: SkewBrace, elems) -> tuple[SkewBrace, tuple[int, ...]]:
    """The brace structure induced on a sub-skew brace, with its element map.

    Returns (C, carrier) where carrier[i] is the B-element behind index i of C.
    """
    s = tuple(sorted(set(elems)))
    sub = classify_substructure(B, s)
    if not sub.is_sub_brace:
        raise NotASubgroupError(f"{list(s)} is not a sub-skew brace")
    pos = {e: i for i, e in enumerate(s)}
    at = [[pos[B.add.table[a][b]] for b in s] for a in s]
    mt = [[pos[B.mul.table[a][b]] for b in s] for a in s]
    return build_brace(at, mt), s


def kernel_of_lambda(B: SkewBrace) -> tuple[int, ...]:
    ident = tuple(range(B.order))
    return tuple(a for a in range(B.order) if B.lam[a] == ident)


def socle_and_centre(B: SkewBrace) -> tuple[SubStructure, SubStructure, SubStructure]:
    """(Ker lambda, socle, centre) with classification flags.

    Soc(B) = Ker(lambda) meet Z(B,+); Z(B) = Soc(B) meet Z(B,o).  The socle
    and the centre are asserted to be ideals.
    """
    ker = set(kernel_of_lambda(B))
    soc = ker & set(B.add.center())
    cen = soc & set(B.mul.center())
    ker_s = classify_substructure(B, ker)
    soc_s = classify_substructure(B, soc)
    cen_s = classify_substructure(B, cen)
    assert soc_s.is_ideal and cen_s.is_ideal, "socle and centre must be ideals"
    return ker_s, soc_s, cen_s


@dataclass(frozen=True)
class BracePredicates:
    trivial: bool
    almost_trivial: bool
    bi_skew: bool
    abelian_type: bool


def opposite_brace(B: SkewBrace) -> SkewBrace:
    """The brace with the additive operation reversed."""
    n = B.order
    opp = [[B.add.table[b][a] for b in range(n)] for a in range(n)]
    return build_brace(opp, B.mul.table)


def is_bi_skew(B: SkewBrace) -> bool:
    """Whether swapping the two operations again yields a skew brace."""
    at, mt = B.add.table, B.mul.table
    minv = B.mul.inverse
    n = B.order
    for a in range(n):
        for b in range(n):
            ab = at[a][b]
            for c in range(n):
                if at[a][mt[b][c]] != mt[mt[ab][minv[a]]][at[a][c]]:
                    return False
    return True


def brace_predicates(B: SkewBrace) -> BracePredicates:
    n = B.order
    almost = all(
        B.mul.table[a][b] == B.add.table[b][a] for a in range(n) for b in range(n)
    )
    return BracePredicates(
        trivial=B.is_trivial(),
        almost_trivial=almost,
        bi_skew=is_bi_skew(B),
        abelian_type=B.is_abelian_type(),
    )


def lambda_semidirect(B: SkewBrace, bound: int | None = None) -> FiniteGroup:
    """The group (B,+) x| (B,o) acting through lambda, on pairs (a, b) with
    index b*n + a.  The commutator identity [(0,a),(b,0)] = (a*b, 0) is
    verified for every pair before returning."""
    limit = SEMIDIRECT_MAX_SIZE if bound is None else bound
    n = B.order
    if n * n > limit:
        raise BoundExceededError(
            f"lambda_semidirect: size {n * n} exceeds bound {limit}"
        )
    action = [Automorphism(B.lam[b]) for b in range(n)]
    G = semidirect_product(B.add, B.mul, action)
    for a in range(n):
        x = a * n          # (0, a)
        for b in range(n):
            y = b          # (b, 0)
            if G.commutator(x, y) != B.star(a, b):
                raise AssertionError(
                    f"semidirect commutator identity fails at (a,b)=({a},{b})"
                )
    return G
