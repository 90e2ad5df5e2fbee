"""Exhaustive enumeration of skew braces of small order, and isomorphism testing.

Enumeration runs per additive group: backtrack over assignments of an
automorphism lambda_a to each element, propagating the functional equation
lambda_{a + lambda_a(b)} = lambda_a lambda_b from a growing assigned set and
pruning on the first conflict.  Complete assignments are rebuilt through the
full brace validator, so the group axioms of the circle operation are
re-checked rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braces import SkewBrace, build_brace
from .errors import BoundExceededError
from .groups import (
    FiniteGroup,
    automorphisms,
    catalog_group,
    catalog_names,
    catalog_size,
    group_isomorphism,
)

ENUMERATION_MAX_ORDER = 15


@dataclass(frozen=True)
class LambdaAssignment:
    """A complete lambda map on a base group, one row per element."""

    group: FiniteGroup
    perms: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        n = self.group.order
        if self.perms[0] != tuple(range(n)):
            raise ValueError("lambda_0 must be the identity")
        t = self.group.table
        for a in range(n):
            pa = self.perms[a]
            for b in range(n):
                c = t[a][pa[b]]
                pb = self.perms[b]
                if self.perms[c] != tuple(pa[pb[i]] for i in range(n)):
                    raise ValueError(f"functional equation fails at ({a},{b})")

    def to_brace(self) -> SkewBrace:
        self.validate()
        t = self.group.table
        n = self.group.order
        mul = [[t[a][self.perms[a][b]] for b in range(n)] for a in range(n)]
        return build_brace(self.group.table, mul)


def _search_lambda(G: FiniteGroup, element_order) -> list[tuple[int, ...]]:
    """All lambda assignments on G as tuples of automorphism indices."""
    n = G.order
    auts = [a.perm for a in automorphisms(G)]
    index = {p: i for i, p in enumerate(auts)}
    k = len(auts)
    comp = [[index[tuple(p[q[i]] for i in range(n))] for q in auts] for p in auts]
    table = G.table
    order = list(element_order) if element_order is not None else list(range(n))

    lam: list[int | None] = [None] * n
    lam[0] = index[tuple(range(n))]
    assigned = [0]
    results: list[tuple[int, ...]] = []

    def close(start: int) -> bool:
        qi = start
        while qi < len(assigned):
            c_new = assigned[qi]
            for d in list(assigned):
                for a, b in ((c_new, d), (d, c_new)):
                    la = lam[a]
                    c = table[a][auts[la][b]]
                    v = comp[la][lam[b]]
                    if lam[c] is None:
                        lam[c] = v
                        assigned.append(c)
                    elif lam[c] != v:
                        return False
            qi += 1
        return True

    def undo(mark: int) -> None:
        while len(assigned) > mark:
            lam[assigned.pop()] = None

    def rec() -> None:
        free = next((e for e in order if lam[e] is None), None)
        if free is None:
            results.append(tuple(lam))  # type: ignore[arg-type]
            return
        for v in range(k):
            mark = len(assigned)
            lam[free] = v
            assigned.append(free)
            if close(mark):
                rec()
            undo(mark)

    mark0 = len(assigned)
    if close(0):
        rec()
    else:
        undo(mark0)
    return sorted(results)


def enumerate_on_additive(
    G: FiniteGroup,
    element_order=None,
    bound: int | None = None,
) -> list[SkewBrace]:
    """All skew braces whose additive group is exactly G (no iso-dedup).

    element_order optionally fixes the branching order of the backtracker;
    the result set is independent of it.
    """
    limit = ENUMERATION_MAX_ORDER if bound is None else bound
    if G.order > limit:
        raise BoundExceededError(
            f"enumerate_on_additive: order {G.order} exceeds bound {limit}"
        )
    auts = [a.perm for a in automorphisms(G)]
    braces = []
    for lam_idx in _search_lambda(G, element_order):
        assignment = LambdaAssignment(G, tuple(auts[i] for i in lam_idx))
        braces.append(assignment.to_brace())
    braces.sort(key=lambda b: b.mul.table)
    return braces


def _relabeled_mul(mul, perm) -> tuple[tuple[int, ...], ...]:
    n = len(mul)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        pa = perm[a]
        row = mul[a]
        for b in range(n):
            out[pa][perm[b]] = perm[row[b]]
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class EnumerationResult:
    order: int
    classes: tuple[SkewBrace, ...]
    counts: dict
    labeled_counts: dict

    def total_classes(self) -> int:
        return len(self.classes)


def enumerate_all(order: int, bound: int | None = None) -> EnumerationResult:
    """Iso-class representatives of all skew braces of the given order.

    Braces found on the same additive table are isomorphic exactly when an
    additive automorphism carries one circle table to the other, so classes
    are the orbits of the found multiplication tables under Aut(G, +); braces
    over different catalog groups have non-isomorphic additive groups.  The
    representative of each class is its lexicographically least found member.
    """
    limit = ENUMERATION_MAX_ORDER if bound is None else bound
    if order > limit:
        raise BoundExceededError(f"enumerate_all: order {order} exceeds bound {limit}")
    names = catalog_names(order)
    classes: list[SkewBrace] = []
    counts: dict[tuple[str, str], int] = {}
    labeled: dict[str, int] = {}
    for idx in range(catalog_size(order)):
        G = catalog_group(order, idx)
        auts = [a.perm for a in automorphisms(G)]
        found = enumerate_on_additive(G, bound=bound)
        labeled[names[idx]] = len(found)
        seen: set = set()
        for brace in found:
            if brace.mul.table in seen:
                continue
            orbit = {_relabeled_mul(brace.mul.table, p) for p in auts}
            seen.update(orbit)
            rep = build_brace(G.table, min(orbit))
            classes.append(rep)
            mul_name = _iso_type_name(rep.mul, order)
            key = (names[idx], mul_name)
            counts[key] = counts.get(key, 0) + 1
    classes.sort(key=lambda b: (b.add.table, b.mul.table))
    return EnumerationResult(order, tuple(classes), counts, labeled)


def _iso_type_name(G: FiniteGroup, order: int) -> str:
    for idx, name in enumerate(catalog_names(order)):
        if group_isomorphism(catalog_group(order, idx), G) is not None:
            return name
    return f"unknown-{order}"


@dataclass(frozen=True)
class IsoCertificate:
    isomorphic: bool
    bijection: tuple[int, ...] | None
    refuted_by: str | None


def _element_profile(B: SkewBrace, a: int) -> tuple:
    n = B.order
    perm = B.lam[a]
    seen = tuple(range(n))
    k, cur = 1, perm
    while cur != seen:
        cur = tuple(perm[cur[i]] for i in range(n))
        k += 1
    star_row = sorted(B.add.element_orders[B.star(a, b)] for b in range(n))
    star_col = sorted(B.add.element_orders[B.star(b, a)] for b in range(n))
    return (
        B.add.element_orders[a],
        B.mul.element_orders[a],
        k,
        B.add.element_orders[B.star(a, a)],
        tuple(star_row),
        tuple(star_col),
    )


def are_isomorphic(B1: SkewBrace, B2: SkewBrace) -> IsoCertificate:
    """Brace isomorphism test: invariant refutation, then backtracking over
    images of an additive generating set; any found bijection is re-verified
    on both tables before being returned."""
    if B1.order != B2.order:
        return IsoCertificate(False, None, "order")
    if group_isomorphism(B1.add, B2.add) is None:
        return IsoCertificate(False, None, "additive group type")
    if group_isomorphism(B1.mul, B2.mul) is None:
        return IsoCertificate(False, None, "multiplicative group type")
    n = B1.order
    prof1 = [_element_profile(B1, a) for a in range(n)]
    prof2 = [_element_profile(B2, a) for a in range(n)]
    if sorted(prof1) != sorted(prof2):
        return IsoCertificate(False, None, "lambda/star signature")
    from .braces import kernel_of_lambda, socle_and_centre

    for name, f in (
        ("kernel size", lambda B: len(kernel_of_lambda(B))),
        ("socle size", lambda B: socle_and_centre(B)[1].size),
        ("centre size", lambda B: socle_and_centre(B)[2].size),
    ):
        if f(B1) != f(B2):
            return IsoCertificate(False, None, name)

    gens = B1.add.generating_set()
    if not gens:
        return IsoCertificate(True, tuple(range(n)), None)
    by_profile: dict[tuple, list[int]] = {}
    for x in range(n):
        by_profile.setdefault(prof2[x], []).append(x)
    t1a, t2a = B1.add.table, B2.add.table
    t1m, t2m = B1.mul.table, B2.mul.table

    from .groups import _bfs_derivations

    derivations = _bfs_derivations(B1.add, gens)

    def extend(images):
        perm = [-1] * n
        perm[0] = 0
        for slot, g in enumerate(gens):
            if perm[g] == -1:
                perm[g] = images[slot]
            elif perm[g] != images[slot]:
                return None
        for e, parent, slot in derivations:
            v = t2a[perm[parent]][images[slot]]
            if perm[e] == -1:
                perm[e] = v
            elif perm[e] != v:
                return None
        if sorted(perm) != list(range(n)):
            return None
        for i in range(n):
            pi = perm[i]
            for j in range(n):
                if perm[t1a[i][j]] != t2a[pi][perm[j]]:
                    return None
                if perm[t1m[i][j]] != t2m[pi][perm[j]]:
                    return None
        return tuple(perm)

    from itertools import product

    candidates = [by_profile.get(prof1[g], []) for g in gens]
    for images in product(*candidates):
        perm = extend(images)
        if perm is not None:
            return IsoCertificate(True, perm, None)
    return IsoCertificate(False, None, "no generator image assignment extends")


def brute_force_brace_count(add_table, all_mul_tables) -> int:
    """Independent oracle: count multiplication tables forming a skew brace
    with the given additive table, by testing distributivity directly."""
    n = len(add_table)
    neg = [add_table[i].index(0) for i in range(n)]
    count = 0
    for mul in all_mul_tables:
        ok = True
        for a in range(n):
            ra, na = mul[a], neg[a]
            for b in range(n):
                ab = add_table[ra[b]][na]
                for c in range(n):
                    if ra[add_table[b][c]] != add_table[ab][ra[c]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def all_group_tables(order: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every Cayley table of the given order with identity 0, generated by
    relabeling the catalog representatives through all permutations fixing 0."""
    from itertools import permutations

    tables: set = set()
    for idx in range(catalog_size(order)):
        base = catalog_group(order, idx).table
        for rest in permutations(range(1, order)):
            perm = (0,) + rest
            tables.add(_relabeled_mul(base, perm))
    return sorted(tables)
