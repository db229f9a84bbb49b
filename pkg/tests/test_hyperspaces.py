import itertools

import pytest

from oracles import brute_force_topologies, slow_subbase_closure
from topolab.bitsets import is_subset, nonempty_subsets
from topolab.errors import NotOpen
from topolab.filters import FilterOnCarrier, subsets_carrier
from topolab.hyperspaces import (
    closeds,
    compacts,
    hit,
    lower_limits,
    lower_vietoris,
    miss,
    upper_vietoris,
    vietoris,
    vietoris_basic,
)
from topolab.spaces import discrete_space, indiscrete_space, sierpinski_space

S = sierpinski_space()
P2 = tuple(nonempty_subsets(2))  # {0},{1},X as masks 1,2,3


class TestHitMiss:
    def test_hit_examples(self):
        assert hit(P2, 0b10) == (0b10, 0b11)
        assert hit(P2, 0) == ()
        assert hit(P2, 0b11) == P2

    def test_miss_examples(self):
        assert miss(P2, 0b10) == (0b01,)
        assert miss(P2, 0) == P2

    def test_partition(self):
        for m in range(4):
            h, mi = hit(P2, m), miss(P2, m)
            assert set(h) | set(mi) == set(P2)
            assert not set(h) & set(mi)

    def test_monotone(self):
        for a in range(4):
            for b in range(4):
                if is_subset(a, b):
                    assert set(hit(P2, a)) <= set(hit(P2, b))
                    assert set(miss(P2, b)) <= set(miss(P2, a))


class TestVietorisVariants:
    def test_lower_sierpinski(self):
        hy = lower_vietoris(S, P2)
        # hyperpoints {0},{1},X at indices 0,1,2: opens are {}, {{1},X}, everything
        assert hy.topology.opens == (0, 0b110, 0b111)

    def test_lower_indiscrete(self):
        hy = lower_vietoris(indiscrete_space(2), P2)
        assert len(hy.topology.opens) == 2

    def test_lower_discrete_matches_closure_oracle(self):
        hy = lower_vietoris(discrete_space(2), P2)
        subbase = [0b101, 0b110, 0b111]  # {0}^- , {1}^- , X^-
        assert hy.topology.opens == slow_subbase_closure(3, subbase)

    def test_upper_sierpinski(self):
        hy = upper_vietoris(S, P2)
        assert hy.topology.opens == (0, 0b010, 0b111)

    def test_upper_singleton_family(self):
        hy = upper_vietoris(S, (0b11,))
        assert len(hy.topology.opens) == 2

    def test_vietoris_join_is_minimal(self):
        got = vietoris(S, P2)
        lo = lower_vietoris(S, P2)
        up = upper_vietoris(S, P2)
        assert set(lo.topology.opens) <= set(got.topology.opens)
        assert set(up.topology.opens) <= set(got.topology.opens)
        # join oracle: literal closure of the union of both subbases
        subbase = [0b110, 0b111, 0b010]  # {1}^-, X^-, and {A : A <= {1}}
        assert got.topology.opens == slow_subbase_closure(3, subbase)
        # minimality against every topology on the 3 hyperpoints
        for members in brute_force_topologies(3):
            ms = set(members)
            if set(lo.topology.opens) <= ms and set(up.topology.opens) <= ms:
                assert set(got.topology.opens) <= ms

    def test_discrete_base_gives_discrete_hyperspace(self):
        for n in (1, 2, 3):
            d = discrete_space(n)
            hy = vietoris(d, compacts(d))
            assert len(hy.topology.opens) == 1 << len(hy.family)

    def test_single_member_family(self):
        hy = vietoris(S, (0b11,))
        assert hy.topology.opens == (0, 1)


class TestVietorisBasic:
    def test_examples(self):
        d = discrete_space(2)
        assert vietoris_basic(d, P2, (0b01, 0b10)) == (0b11,)
        assert vietoris_basic(d, P2, (0b11,)) == P2
        assert vietoris_basic(d, P2, (0b01,)) == (0b01,)

    def test_not_open_rejected(self):
        with pytest.raises(NotOpen):
            vietoris_basic(S, P2, (0b01,))

    def test_equals_miss_hit_combination(self, corpus3):
        from topolab.bitsets import complement

        for _, _, sp in corpus3:
            fam = tuple(nonempty_subsets(sp.n))
            for r in (1, 2):
                for cover in itertools.combinations(sp.opens, r):
                    union = 0
                    for u in cover:
                        union |= u
                    expected = set(miss(fam, complement(union, sp.n)))
                    for u in cover:
                        expected &= set(hit(fam, u))
                    assert set(vietoris_basic(sp, fam, cover)) == expected

    def test_basics_are_open_and_span(self, corpus_n3):
        # every basic set is Vietoris-open; every Vietoris open is a union of basics
        for sp in corpus_n3[:10]:
            fam = tuple(nonempty_subsets(sp.n))
            hy = vietoris(sp, fam)
            index = {a: i for i, a in enumerate(fam)}
            basics = set()
            for r in range(1, len(sp.opens) + 1):
                for cover in itertools.combinations(sp.opens, r):
                    b = 0
                    for a in vietoris_basic(sp, fam, cover):
                        b |= 1 << index[a]
                    basics.add(b)
            for b in basics:
                assert hy.topology.is_open(b)
            for o in hy.topology.opens:
                u = 0
                for b in basics:
                    if is_subset(b, o):
                        u |= b
                assert u == o


class TestFamilies:
    def test_compacts_two_points(self):
        for sp in (S, discrete_space(2), indiscrete_space(2)):
            assert compacts(sp) == P2

    def test_closeds(self):
        assert closeds(S) == (0b01, 0b11)
        assert closeds(discrete_space(2)) == P2


class TestLowerLimits:
    def test_contains_the_point_filter_target(self):
        c = subsets_carrier(2)
        for i, a in enumerate(P2):
            phi = FilterOnCarrier(c, frozenset({i}))
            assert a in lower_limits(S, P2, phi)

    def test_downward_closed(self, corpus3):
        for _, _, sp in corpus3:
            fam = tuple(nonempty_subsets(sp.n))
            c = subsets_carrier(sp.n)
            for kernel_bits in range(1, 1 << len(fam)):
                phi = FilterOnCarrier(
                    c, frozenset(i for i in range(len(fam)) if kernel_bits >> i & 1)
                )
                lim = set(lower_limits(sp, fam, phi))
                for b in lim:
                    for a in fam:
                        if is_subset(a, b):
                            assert a in lim
