import pytest

from skewbrace.braces import classify_substructure, socle_and_centre
from skewbrace.families import trivial_brace, two_power_brace
from skewbrace.groups import alternating_group_4, catalog_group, cyclic_group
from skewbrace.series import (
    analyze,
    central_class,
    derived_series,
    is_dedekind,
    is_supersoluble,
    multipermutation_level,
    star_series,
    upper_central_series,
    upper_socle_series,
)


def centre_chain_oracle(B):
    """Set-level iterated centre, independent of the quotient machinery:
    a lifts into the next term iff all of a*b, [a,b]_+ and [a,b]_o fall in
    the current one."""
    chain = [frozenset({0})]
    while True:
        z = chain[-1]
        nxt = frozenset(
            a
            for a in range(B.order)
            if all(
                B.star(a, b) in z
                and B.add.commutator(a, b) in z
                and B.mul.commutator(a, b) in z
                for b in range(B.order)
            )
        )
        if nxt == z:
            return chain
        chain.append(nxt)


def socle_chain_oracle(B):
    chain = [frozenset({0})]
    while True:
        z = chain[-1]
        nxt = frozenset(
            a
            for a in range(B.order)
            if all(
                B.star(a, b) in z and B.add.commutator(a, b) in z
                for b in range(B.order)
            )
        )
        if nxt == z:
            return chain
        chain.append(nxt)


class TestUpperCentral:
    def test_trivial_abelian(self):
        b = trivial_brace(cyclic_group(6))
        assert central_class(b) == 1

    def test_b9(self, b9):
        chain = upper_central_series(b9)
        assert [s.elements for s in chain.steps] == [
            (0,),
            (0, 3, 6),
            tuple(range(9)),
        ]
        assert chain.terminal and chain.length == 2

    def test_b8_matches_oracle(self, b8):
        oracle = centre_chain_oracle(b8)
        chain = upper_central_series(b8)
        assert [set(s.elements) for s in chain.steps] == [set(s) for s in oracle]
        assert chain.length == 3 and chain.terminal

    def test_oracle_agreement_across_corpus(self, corpus):
        for B in corpus(6) + corpus(8):
            oracle = centre_chain_oracle(B)
            chain = upper_central_series(B)
            got = [set(s.elements) for s in chain.steps]
            if chain.terminal:
                assert got == [set(s) for s in oracle]
            else:
                assert got == [set(s) for s in oracle][: len(got)]

    def test_every_step_is_an_ideal(self, b8, b27_nonabelian):
        for B in (b8, b27_nonabelian):
            for s in upper_central_series(B).steps:
                assert s.is_ideal

    def test_nonterminal_for_almost_trivial_s3(self, almost_trivial_s3):
        chain = upper_central_series(almost_trivial_s3)
        assert not chain.terminal and central_class(almost_trivial_s3) is None


class TestUpperSocle:
    def test_trivial_abelian_level_1(self):
        assert multipermutation_level(trivial_brace(cyclic_group(4))) == 1

    def test_b8_level_2(self, b8):
        chain = upper_socle_series(b8)
        assert chain.terminal and chain.length == 2
        assert chain.steps[1].elements == (0, 2, 4, 6)

    def test_b9_level_2(self, b9):
        assert multipermutation_level(b9) == 2

    def test_oracle_agreement(self, b4, b8, b9, b27_cyclic):
        for B in (b4, b8, b9, b27_cyclic):
            oracle = socle_chain_oracle(B)
            chain = upper_socle_series(B)
            assert [set(s.elements) for s in chain.steps] == [set(s) for s in oracle]

    def test_central_below_socle_stagewise(self, corpus):
        for B in corpus(8):
            zc = upper_central_series(B).steps
            sc = upper_socle_series(B).steps
            for i in range(min(len(zc), len(sc))):
                assert set(zc[i].elements) <= set(sc[i].elements)


class TestStarSeries:
    def test_trivial(self, trivial_s3):
        left = star_series(trivial_s3, "left")
        assert left.nilpotent and len(left.steps) == 2

    def test_b9_both_sides(self, b9):
        for side in ("left", "right"):
            s = star_series(b9, side)
            assert s.steps == (tuple(range(9)), (0, 3, 6), (0,))
            assert s.nilpotent

    def test_b8_right(self, b8):
        s = star_series(b8, "right")
        assert s.nilpotent and len(s.steps) <= 3
        assert s.steps[1] == (0, 2, 4, 6)

    def test_bad_side(self, b8):
        with pytest.raises(ValueError):
            star_series(b8, "middle")


class TestDerived:
    def test_trivial_abelian_is_soluble_immediately(self):
        d = derived_series(trivial_brace(cyclic_group(4)))
        assert d.soluble and len(d.steps) == 2

    def test_trivial_s3(self, trivial_s3):
        d = derived_series(trivial_s3)
        assert d.soluble
        assert [len(s) for s in d.steps] == [6, 3, 1]

    def test_b8(self, b8):
        assert derived_series(b8).soluble

    def test_trivial_a4_is_soluble_as_a_brace(self):
        # the brace derived series follows the group derived series here
        d = derived_series(trivial_brace(alternating_group_4()))
        assert [len(s) for s in d.steps] == [12, 4, 1]
        assert d.soluble


class TestSupersoluble:
    def test_all_order_6_braces(self, corpus):
        for B in corpus(6):
            ok, chain = is_supersoluble(B)
            assert ok
            sizes = [len(c) for c in chain]
            for small, big in zip(sizes, sizes[1:]):
                assert big // small in (2, 3) and big % small == 0

    def test_trivial_a4_not_supersoluble(self):
        ok, chain = is_supersoluble(trivial_brace(alternating_group_4()))
        assert not ok and chain is None

    def test_b8_chain_through_2z(self, b8):
        ok, chain = is_supersoluble(b8)
        assert ok
        assert chain[1] == (0, 4)
        for c in chain:
            assert classify_substructure(b8, c).is_ideal

    def test_certificate_factors_prime(self, corpus):
        for B in corpus(8) + corpus(12):
            ok, chain = is_supersoluble(B)
            if not ok:
                continue
            sizes = [len(c) for c in chain]
            for small, big in zip(sizes, sizes[1:]):
                ratio = big // small
                assert big % small == 0 and ratio in (2, 3, 5, 7, 11)


class TestDedekind:
    def test_b8(self, b8):
        ok, witness = is_dedekind(b8)
        assert ok and witness is None

    def test_trivial_s3_witness(self, trivial_s3, s3_group):
        ok, witness = is_dedekind(trivial_s3)
        assert not ok
        assert len(witness.elements) == 2
        assert not witness.is_ideal

    def test_trivial_abelian(self):
        ok, _ = is_dedekind(trivial_brace(cyclic_group(12)))
        assert ok


class TestAnalyze:
    def test_b9_report(self, b9):
        r = analyze(b9)
        assert r.central_class == 2
        assert r.multipermutation_level == 2
        assert r.dedekind and r.bi_skew
        assert r.cyclic_add and r.cyclic_mul

    def test_b4_report(self, b4):
        r = analyze(b4)
        assert r.central_class == 2 and r.multipermutation_level == 2 and r.dedekind

    def test_order_one_report(self):
        r = analyze(trivial_brace(cyclic_group(1)))
        assert r.central_class == 0 and r.multipermutation_level == 0
        assert r.soluble and r.dedekind and r.supersoluble

    def test_report_round_trips_to_json(self, b8):
        import json

        doc = json.loads(json.dumps(analyze(b8).to_dict()))
        assert doc["central_class"] == 3
        assert doc["upper_socle_sizes"] == [1, 4, 8]

    def test_nilpotency_implications(self, corpus):
        # centrally nilpotent => soluble => finite level => both star series vanish
        for order in (4, 6, 8, 9):
            for B in corpus(order):
                r = analyze(B)
                if r.central_class is not None:
                    assert r.soluble
                    assert r.multipermutation_level is not None
                    assert r.left_nilpotent and r.right_nilpotent
