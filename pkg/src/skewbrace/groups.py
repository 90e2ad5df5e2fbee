"""Finite groups as Cayley tables on 0..n-1 with the identity pinned to index 0.

Provides validated table groups, a catalog of all isomorphism classes up to
order 15 (plus the standard prime-power / dihedral families beyond), subgroup
closure, quotients, semidirect products, automorphism groups, and group
isomorphism testing for small orders.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import (
    BoundExceededError,
    NotAGroupError,
    NotAnActionError,
    NotNormalError,
    OutOfCatalogError,
)

Table = tuple[tuple[int, ...], ...]

DEFAULT_MAX_ORDER = 64
CATALOG_MAX_ORDER = 15


def max_order_bound() -> int:
    """Default order cap for exhaustive operations (env BRACE_MAX_ORDER overrides)."""
    raw = os.environ.get("BRACE_MAX_ORDER", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_ORDER
    except ValueError:
        return DEFAULT_MAX_ORDER


def _check_bound(n: int, bound: int | None, what: str) -> None:
    limit = max_order_bound() if bound is None else bound
    if n > limit:
        raise BoundExceededError(f"{what}: order {n} exceeds bound {limit}")


def normalize_table(rows) -> Table:
    """Coerce to a square tuple-of-tuples with entries in 0..n-1."""
    table = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(table)
    if n == 0:
        raise NotAGroupError("empty table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotAGroupError("table not square", witness=i)
        for x in row:
            if not 0 <= x < n:
                raise NotAGroupError("entry out of range", witness=(i, x))
    return table


def find_identity(table: Table) -> int | None:
    """Index of a two-sided identity, or None."""
    n = len(table)
    for e in range(n):
        if all(table[e][j] == j for j in range(n)) and all(
            table[i][e] == i for i in range(n)
        ):
            return e
    return None


class FiniteGroup:
    """A group on indices 0..n-1 given by its Cayley table; identity is 0.

    The constructor validates every axiom (identity at 0, Latin-square rows
    and columns, associativity, two-sided inverses) and caches the inverse
    array, element orders and the set of primes occurring as element orders.
    Instances are immutable and hashable.
    """

    __slots__ = ("order", "table", "inverse", "element_orders", "primes")

    def __init__(self, table):
        t = normalize_table(table)
        n = len(t)
        arr = np.array(t, dtype=np.int64)
        ref = np.arange(n)
        if not (np.array_equal(arr[0], ref) and np.array_equal(arr[:, 0], ref)):
            raise NotAGroupError("index 0 is not a two-sided identity")
        bad_rows = np.nonzero(np.any(np.sort(arr, axis=1) != ref, axis=1))[0]
        if bad_rows.size:
            raise NotAGroupError("row is not a permutation", witness=int(bad_rows[0]))
        bad_cols = np.nonzero(np.any(np.sort(arr, axis=0) != ref[:, None], axis=0))[0]
        if bad_cols.size:
            raise NotAGroupError("column is not a permutation", witness=int(bad_cols[0]))
        for i in range(n):
            left = arr[arr[i]]      # left[j, k] = t[t[i][j]][k]
            right = arr[i][arr]     # right[j, k] = t[i][t[j][k]]
            if not np.array_equal(left, right):
                j, k = (int(v) for v in np.argwhere(left != right)[0])
                raise NotAGroupError("associativity fails", witness=(i, j, k))
        inv = [0] * n
        for i in range(n):
            j = int(np.nonzero(arr[i] == 0)[0][0])
            if t[j][i] != 0:
                raise NotAGroupError("inverse is not two-sided", witness=i)
            inv[i] = j

        orders = [1] * n
        for i in range(1, n):
            cur, k = i, 1
            while cur != 0:
                cur = t[cur][i]
                k += 1
            orders[i] = k
        primes: set[int] = set()
        for o in orders:
            d, m = 2, o
            while d * d <= m:
                if m % d == 0:
                    primes.add(d)
                    while m % d == 0:
                        m //= d
                d += 1
            if m > 1:
                primes.add(m)

        object.__setattr__(self, "order", n)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "inverse", tuple(inv))
        object.__setattr__(self, "element_orders", tuple(orders))
        object.__setattr__(self, "primes", tuple(sorted(primes)))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteGroup is immutable")

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        out = 0
        for _ in range(k):
            out = self.table[out][a]
        return out

    def element_order(self, a: int) -> int:
        return self.element_orders[a]

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a * b * a^-1 * b^-1."""
        t = self.table
        return t[t[t[a][b]][self.inverse[a]]][self.inverse[b]]

    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n))

    def is_cyclic(self) -> bool:
        return self.order in self.element_orders or self.order == 1

    def center(self) -> tuple[int, ...]:
        t = self.table
        n = self.order
        return tuple(
            a for a in range(n) if all(t[a][b] == t[b][a] for b in range(n))
        )

    def generating_set(self) -> tuple[int, ...]:
        """Greedy minimal generating set: smallest element outside the closure so far."""
        gens: list[int] = []
        closed = {0}
        while len(closed) < self.order:
            g = min(set(range(self.order)) - closed)
            gens.append(g)
            closed = set(subgroup_closure(self, gens))
        return tuple(gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def build_group(table) -> FiniteGroup:
    """Validate a Cayley table and return the group, or raise NotAGroupError."""
    return FiniteGroup(table)


def subgroup_closure(G: FiniteGroup, seed) -> tuple[int, ...]:
    """Smallest subgroup of G containing seed (closure under product and inverse)."""
    t = G.table
    members = {0}
    queue = [s for s in set(seed)]
    members.update(queue)
    while queue:
        x = queue.pop()
        for y in (G.inverse[x],):
            if y not in members:
                members.add(y)
                queue.append(y)
        for y in list(members):
            for z in (t[x][y], t[y][x]):
                if z not in members:
                    members.add(z)
                    queue.append(z)
    return tuple(sorted(members))


def is_subgroup(G: FiniteGroup, elems) -> bool:
    s = set(elems)
    if 0 not in s:
        return False
    return all(G.table[a][b] in s for a in s for b in s) and all(
        G.inverse[a] in s for a in s
    )


def subgroup_lattice(G: FiniteGroup, bound: int | None = None) -> list[tuple[int, ...]]:
    """All subgroups of G, generated by closing singletons and joining pairs."""
    _check_bound(G.order, bound, "subgroup_lattice")
    found = {frozenset({0})}
    found.update(frozenset(subgroup_closure(G, [x])) for x in range(G.order))
    frontier = set(found)
    while frontier:
        fresh = set()
        for s in frontier:
            for u in list(found):
                if s <= u or u <= s:
                    continue
                j = frozenset(subgroup_closure(G, s | u))
                if j not in found and j not in fresh:
                    fresh.add(j)
        found |= fresh
        frontier = fresh
    return sorted((tuple(sorted(s)) for s in found), key=lambda s: (len(s), s))


def is_normal(G: FiniteGroup, elems) -> tuple[int, int] | None:
    """None if elems is a normal subset; else a witness (g, x) with gxg^-1 outside."""
    s = set(elems)
    for g in range(G.order):
        for x in s:
            if G.conjugate(g, x) not in s:
                return (g, x)
    return None


def quotient_group(G: FiniteGroup, subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Quotient by a normal subgroup: (group on cosets, projection). Coset of 0 is 0."""
    s = set(subgroup)
    if not is_subgroup(G, s):
        raise NotNormalError(0, min(s - {0}) if s - {0} else 0)
    witness = is_normal(G, s)
    if witness is not None:
        raise NotNormalError(*witness)
    t = G.table
    cosets: list[tuple[int, ...]] = []
    proj = [-1] * G.order
    for a in range(G.order):
        if proj[a] >= 0:
            continue
        coset = tuple(sorted(t[a][x] for x in s))
        cosets.append(coset)
        for e in coset:
            proj[e] = len(cosets) - 1
    order_key = sorted(range(len(cosets)), key=lambda i: cosets[i][0])
    relabel = {old: new for new, old in enumerate(order_key)}
    proj = [relabel[p] for p in proj]
    reps = [0] * len(cosets)
    for e in range(G.order - 1, -1, -1):
        reps[proj[e]] = e
    m = len(cosets)
    qtable = [[proj[t[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    return FiniteGroup(qtable), tuple(proj)


@dataclass(frozen=True)
class Automorphism:
    """A bijection of 0..n-1 fixing 0 that preserves the Cayley table."""

    perm: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.perm[i]


def is_automorphism(G: FiniteGroup, perm) -> bool:
    p = tuple(perm)
    n = G.order
    if len(p) != n or sorted(p) != list(range(n)) or p[0] != 0:
        return False
    t = G.table
    return all(p[t[i][j]] == t[p[i]][p[j]] for i in range(n) for j in range(n))


def _bfs_derivations(G: FiniteGroup, gens) -> list[tuple[int, int, int]]:
    """(element, parent, generator-slot) triples covering the group, BFS from 0."""
    seen = {0}
    out: list[tuple[int, int, int]] = []
    queue = [0]
    while queue:
        e = queue.pop(0)
        for slot, g in enumerate(gens):
            e2 = G.table[e][g]
            if e2 not in seen:
                seen.add(e2)
                out.append((e2, e, slot))
                queue.append(e2)
    return out


def automorphisms(G: FiniteGroup, bound: int | None = None) -> list[Automorphism]:
    """The full automorphism group, by backtracking on images of a generating set.

    Every found map is re-verified as a table homomorphism, and the returned
    set is checked to be closed under composition and inverse.
    """
    _check_bound(G.order, bound, "automorphisms")
    n = G.order
    t = G.table
    gens = G.generating_set()
    if not gens:
        return [Automorphism(tuple(range(n)))]
    derivations = _bfs_derivations(G, gens)
    candidates = [
        [x for x in range(n) if G.element_orders[x] == G.element_orders[g]]
        for g in gens
    ]
    found: list[Automorphism] = []
    for images in product(*candidates):
        perm = [-1] * n
        perm[0] = 0
        ok = True
        for slot, g in enumerate(gens):
            if perm[g] == -1:
                perm[g] = images[slot]
            elif perm[g] != images[slot]:
                ok = False
                break
        if not ok:
            continue
        for e, parent, slot in derivations:
            v = t[perm[parent]][images[slot]]
            if perm[e] == -1:
                perm[e] = v
            elif perm[e] != v:
                ok = False
                break
        if not ok or sorted(perm) != list(range(n)):
            continue
        if all(perm[t[i][j]] == t[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            found.append(Automorphism(tuple(perm)))
    perms = {a.perm for a in found}
    assert tuple(range(n)) in perms
    for a in found:
        inv = [0] * n
        for i, v in enumerate(a.perm):
            inv[v] = i
        assert tuple(inv) in perms, "automorphism set not closed under inverse"
        for b in found:
            comp = tuple(a.perm[b.perm[i]] for i in range(n))
            assert comp in perms, "automorphism set not closed under composition"
    return sorted(found, key=lambda a: a.perm)


def semidirect_product(
    N: FiniteGroup, H: FiniteGroup, action
) -> FiniteGroup:
    """Semidirect product N x| H for a homomorphism H -> Aut(N).

    action[h] is the automorphism of N attached to h in H.  Element (a, h)
    is encoded as index h*|N| + a; multiplication is
    (a, h) * (c, d) = (a + action[h](c), h*d).
    """
    acts = [a.perm if isinstance(a, Automorphism) else tuple(a) for a in action]
    if len(acts) != H.order:
        raise NotAnActionError(("length", len(acts)))
    for h, p in enumerate(acts):
        if not is_automorphism(N, p):
            raise NotAnActionError(("not an automorphism", h))
    for h1 in range(H.order):
        for h2 in range(H.order):
            composed = tuple(acts[h1][acts[h2][i]] for i in range(N.order))
            if composed != acts[H.table[h1][h2]]:
                raise NotAnActionError((h1, h2))
    n, m = N.order, H.order
    size = n * m
    table = [[0] * size for _ in range(size)]
    for a, h, c, d in product(range(n), range(m), range(n), range(m)):
        table[h * n + a][d * n + c] = H.table[h][d] * n + N.table[a][acts[h][c]]
    return FiniteGroup(table)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    identity = Automorphism(tuple(range(G.order)))
    return semidirect_product(G, H, [identity] * H.order)


def group_isomorphism(G: FiniteGroup, H: FiniteGroup) -> tuple[int, ...] | None:
    """A table-preserving bijection G -> H fixing 0, or None.

    Refutes quickly on the element-order multiset, then backtracks over images
    of a generating set of G.
    """
    if G.order != H.order:
        return None
    if sorted(G.element_orders) != sorted(H.element_orders):
        return None
    n = G.order
    gens = G.generating_set()
    if not gens:
        return tuple(range(n))
    derivations = _bfs_derivations(G, gens)
    by_order: dict[int, list[int]] = {}
    for x in range(n):
        by_order.setdefault(H.element_orders[x], []).append(x)
    candidates = [by_order.get(G.element_orders[g], []) for g in gens]
    tG, tH = G.table, H.table
    for images in product(*candidates):
        perm = [-1] * n
        perm[0] = 0
        ok = True
        for slot, g in enumerate(gens):
            if perm[g] == -1:
                perm[g] = images[slot]
            elif perm[g] != images[slot]:
                ok = False
                break
        if not ok:
            continue
        for e, parent, slot in derivations:
            v = tH[perm[parent]][images[slot]]
            if perm[e] == -1:
                perm[e] = v
            elif perm[e] != v:
                ok = False
                break
        if not ok or sorted(perm) != list(range(n)):
            continue
        if all(
            perm[tG[i][j]] == tH[perm[i]][perm[j]] for i in range(n) for j in range(n)
        ):
            return tuple(perm)
    return None


# --- explicit constructors -------------------------------------------------

def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)])


def elementary_abelian_group(p: int, k: int) -> FiniteGroup:
    n = p**k
    def add(i, j):
        out, mult = 0, 1
        for _ in range(k):
            out += ((i % p + j % p) % p) * mult
            i //= p
            j //= p
            mult *= p
        return out
    return FiniteGroup([[add(i, j) for j in range(n)] for i in range(n)])


def dihedral_group(m: int) -> FiniteGroup:
    """Dihedral group of order 2m: rotations 0..m-1, reflections m..2m-1."""
    n = 2 * m
    def mul(a, b):
        i1, j1 = a % m, a // m
        i2, j2 = b % m, b // m
        if j1 == 0:
            return ((i1 + i2) % m) + m * j2
        return ((i1 - i2) % m) + m * ((1 + j2) % 2)
    return FiniteGroup([[mul(a, b) for b in range(n)] for a in range(n)])


def dicyclic_group(m: int) -> FiniteGroup:
    """Dicyclic group of order 4m (m=2 gives the quaternion group)."""
    n = 4 * m
    def mul(a, b):
        i1, j1 = a % (2 * m), a // (2 * m)
        i2, j2 = b % (2 * m), b // (2 * m)
        if j1 == 0:
            i, j = i1 + i2, j2
        else:
            i, j = i1 - i2, 1 + j2
        if j >= 2:
            i, j = i + m, j % 2
        return (i % (2 * m)) + 2 * m * j
    return FiniteGroup([[mul(a, b) for b in range(n)] for a in range(n)])


def quaternion_group() -> FiniteGroup:
    return dicyclic_group(2)


def alternating_group_4() -> FiniteGroup:
    perms = sorted(
        p for p in product(range(4), repeat=4) if sorted(p) == [0, 1, 2, 3] and _even(p)
    )
    index = {p: i for i, p in enumerate(perms)}
    def mul(a, b):
        pa, pb = perms[a], perms[b]
        return index[tuple(pa[pb[i]] for i in range(4))]
    return FiniteGroup([[mul(a, b) for b in range(12)] for a in range(12)])


def _even(p) -> bool:
    inversions = sum(
        1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]
    )
    return inversions % 2 == 0


def _prime_power(n: int) -> tuple[int, int] | None:
    for p in range(2, n + 1):
        if n % p == 0:
            k = 0
            m = n
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return None


def _catalog_entries(order: int) -> list[tuple[str, object]]:
    if order < 1:
        raise OutOfCatalogError(f"no groups of order {order}")
    small: dict[int, list[tuple[str, object]]] = {
        1: [("Z1", lambda: cyclic_group(1))],
        4: [("Z4", lambda: cyclic_group(4)),
            ("Z2xZ2", lambda: elementary_abelian_group(2, 2))],
        6: [("Z6", lambda: cyclic_group(6)),
            ("D3", lambda: dihedral_group(3))],
        8: [("Z8", lambda: cyclic_group(8)),
            ("Z4xZ2", lambda: direct_product(cyclic_group(4), cyclic_group(2))),
            ("Z2xZ2xZ2", lambda: elementary_abelian_group(2, 3)),
            ("D4", lambda: dihedral_group(4)),
            ("Q8", quaternion_group)],
        9: [("Z9", lambda: cyclic_group(9)),
            ("Z3xZ3", lambda: elementary_abelian_group(3, 2))],
        10: [("Z10", lambda: cyclic_group(10)),
             ("D5", lambda: dihedral_group(5))],
        12: [("Z12", lambda: cyclic_group(12)),
             ("Z6xZ2", lambda: direct_product(cyclic_group(6), cyclic_group(2))),
             ("D6", lambda: dihedral_group(6)),
             ("A4", alternating_group_4),
             ("Dic3", lambda: dicyclic_group(3))],
        14: [("Z14", lambda: cyclic_group(14)),
             ("D7", lambda: dihedral_group(7))],
    }
    if order <= CATALOG_MAX_ORDER:
        if order in small:
            return small[order]
        return [(f"Z{order}", lambda: cyclic_group(order))]
    entries: list[tuple[str, object]] = []
    pk = _prime_power(order)
    if pk is not None:
        p, k = pk
        entries.append((f"Z{order}", lambda: cyclic_group(order)))
        if k >= 2:
            entries.append((f"Z{p}^{k}", lambda: elementary_abelian_group(p, k)))
    if order % 2 == 0 and order >= 6:
        entries.append((f"D{order // 2}", lambda: dihedral_group(order // 2)))
    if not entries:
        raise OutOfCatalogError(
            f"order {order} beyond the classified range and not in a built-in family"
        )
    return entries


def catalog_size(order: int) -> int:
    return len(_catalog_entries(order))


def catalog_names(order: int) -> list[str]:
    return [name for name, _ in _catalog_entries(order)]


def catalog_group(order: int, index: int) -> FiniteGroup:
    """The index-th isomorphism class of the given order (complete for order <= 15)."""
    entries = _catalog_entries(order)
    if not 0 <= index < len(entries):
        raise OutOfCatalogError(
            f"order {order} has catalog indices 0..{len(entries) - 1}, got {index}"
        )
    return entries[index][1]()
