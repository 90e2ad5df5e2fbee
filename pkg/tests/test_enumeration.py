import random

import pytest

from skewbrace.braces import build_brace
from skewbrace.enumeration import (
    LambdaAssignment,
    all_group_tables,
    are_isomorphic,
    brute_force_brace_count,
    enumerate_all,
    enumerate_on_additive,
    _relabeled_mul,
)
from skewbrace.errors import BoundExceededError
from skewbrace.families import trivial_brace
from skewbrace.groups import FiniteGroup, cyclic_group, elementary_abelian_group


class TestEnumerateOnAdditive:
    def test_z4_has_exactly_two(self):
        found = enumerate_on_additive(cyclic_group(4))
        assert len(found) == 2
        muls = {b.mul.table for b in found}
        assert cyclic_group(4).table in muls  # the trivial brace

    def test_z2_single(self):
        assert len(enumerate_on_additive(cyclic_group(2))) == 1

    def test_klein_four_contains_cyclic_multiplication(self):
        found = enumerate_on_additive(elementary_abelian_group(2, 2))
        assert any(b.mul.is_cyclic() for b in found)

    def test_all_validate(self):
        for b in enumerate_on_additive(cyclic_group(6)):
            assert build_brace(b.add.table, b.mul.table) == b

    def test_element_order_invariance(self):
        rng = random.Random(20240808)
        base = enumerate_on_additive(elementary_abelian_group(2, 2))
        for _ in range(3):
            order = list(range(4))
            rng.shuffle(order)
            shuffled = enumerate_on_additive(
                elementary_abelian_group(2, 2), element_order=order
            )
            assert shuffled == base

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            enumerate_on_additive(cyclic_group(16))


class TestLambdaAssignment:
    def test_invalid_assignment_rejected(self):
        g = cyclic_group(4)
        neg = tuple((-i) % 4 for i in range(4))
        ident = tuple(range(4))
        with pytest.raises(ValueError):
            LambdaAssignment(g, (ident, ident, neg, ident)).validate()
        with pytest.raises(ValueError):
            LambdaAssignment(g, (neg, ident, ident, ident)).validate()

    def test_parity_assignment_builds_sign_brace(self, b4):
        g = cyclic_group(4)
        neg = tuple((-i) % 4 for i in range(4))
        ident = tuple(range(4))
        assert LambdaAssignment(g, (ident, neg, ident, neg)).to_brace() == b4


class TestEnumerateAll:
    def test_small_class_counts(self, corpus):
        assert len(corpus(1)) == 1
        assert len(corpus(2)) == 1
        assert len(corpus(3)) == 1
        assert len(corpus(4)) == 4
        assert len(corpus(5)) == 1
        assert len(corpus(6)) == 6

    def test_counts_keyed_by_group_types(self):
        result = enumerate_all(4)
        assert result.counts[("Z4", "Z4")] == 1
        assert result.counts[("Z4", "Z2xZ2")] == 1
        assert result.counts[("Z2xZ2", "Z2xZ2")] == 1
        assert result.counts[("Z2xZ2", "Z4")] == 1

    def test_representatives_pairwise_non_isomorphic(self, corpus):
        reps = corpus(6)
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                assert not are_isomorphic(reps[i], reps[j]).isomorphic

    def test_every_found_brace_matches_a_representative(self):
        result = enumerate_all(4)
        for G in (cyclic_group(4), elementary_abelian_group(2, 2)):
            for b in enumerate_on_additive(G):
                assert any(are_isomorphic(b, rep).isomorphic for rep in result.classes)


class TestBruteForceOracle:
    def test_order_4_against_search(self):
        tables = all_group_tables(4)
        assert len(tables) == 4  # three labelings of Z4-type, one Klein
        brute = sum(brute_force_brace_count(t, tables) for t in tables)
        search = sum(
            len(enumerate_on_additive(FiniteGroup(t))) for t in tables
        )
        assert brute == search == 10

    def test_labeled_counts_scale_with_automorphisms(self):
        # |found on a relabeled table| is independent of the labeling
        base = cyclic_group(4).table
        relabeled = _relabeled_mul(base, (0, 3, 2, 1))
        assert len(enumerate_on_additive(FiniteGroup(relabeled))) == 2


class TestAreIsomorphic:
    def test_refutes_trivial_vs_sign(self, b4):
        cert = are_isomorphic(trivial_brace(cyclic_group(4)), b4)
        assert not cert.isomorphic and cert.refuted_by is not None

    def test_relabeled_copy_found(self, b9):
        rng = random.Random(7)
        perm = [0] + rng.sample(range(1, 9), 8)
        copy = build_brace(
            _relabeled_mul(b9.add.table, perm), _relabeled_mul(b9.mul.table, perm)
        )
        cert = are_isomorphic(b9, copy)
        assert cert.isomorphic
        f = cert.bijection
        for a in range(9):
            for b in range(9):
                assert f[b9.plus(a, b)] == copy.plus(f[a], f[b])
                assert f[b9.circ(a, b)] == copy.circ(f[a], f[b])

    def test_identical_braces(self, b8):
        cert = are_isomorphic(b8, b8)
        assert cert.isomorphic

    def test_different_orders(self, b4, b8):
        assert are_isomorphic(b4, b8).refuted_by == "order"
