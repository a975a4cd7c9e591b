"""2-cyclotomic cosets: tables, permutation lemma, size/weight classes."""

import numpy as np
import pytest

from bincyclic.cosets import (
    build_table,
    classify_by_size,
    coset_of,
    is_union_of_cosets,
    pi,
    pi_inv,
    rho,
    weight_classes,
)

# Complete coset decomposition of Z_63, worked out by hand once and frozen.
M6_COSETS = {
    0: (0,),
    1: (1, 2, 4, 8, 16, 32),
    3: (3, 6, 12, 24, 33, 48),
    5: (5, 10, 17, 20, 34, 40),
    7: (7, 14, 28, 35, 49, 56),
    9: (9, 18, 36),
    11: (11, 22, 25, 37, 44, 50),
    13: (13, 19, 26, 38, 41, 52),
    15: (15, 30, 39, 51, 57, 60),
    21: (21, 42),
    23: (23, 29, 43, 46, 53, 58),
    27: (27, 45, 54),
    31: (31, 47, 55, 59, 61, 62),
}


class TestCosetOf:
    def test_frozen_orbits(self):
        assert coset_of(11, 63) == {11, 22, 44, 25, 50, 37}
        assert coset_of(0, 63) == {0}
        assert coset_of(9, 63) == {9, 18, 36}

    def test_orbit_closure(self):
        for n in (15, 31, 63):
            for x in range(n):
                orbit = coset_of(x, n)
                assert {(2 * y) % n for y in orbit} == orbit


class TestBuildTable:
    def test_m6_decomposition_matches_frozen_oracle(self):
        table = build_table(6)
        assert tuple(int(x) for x in table.leaders) == tuple(sorted(M6_COSETS))
        for leader, members in M6_COSETS.items():
            assert table.members(leader) == members
            assert table.size_of(leader) == len(members)

    def test_m5_leaders(self):
        assert tuple(int(x) for x in build_table(5).leaders) == (0, 1, 3, 5, 7, 11, 15)

    def test_leader_of_is_orbit_minimum(self):
        for m in (4, 5, 6, 7):
            table = build_table(m)
            n = table.n
            for x in range(n):
                assert int(table.leader_of[x]) == min(coset_of(x, n))

    @pytest.mark.parametrize(
        "m,census",
        [
            (6, {1: 1, 2: 1, 3: 2, 6: 9}),
            (15, {1: 1, 3: 2, 5: 6, 15: 2182}),
        ],
    )
    def test_census(self, m, census):
        table = build_table(m)
        hist: dict[int, int] = {}
        for size in table.sizes:
            hist[int(size)] = hist.get(int(size), 0) + 1
        assert hist == census

    def test_union_mask(self):
        table = build_table(6)
        mask = table.union_mask((1, 9))
        expected = np.zeros(63, dtype=bool)
        expected[list(M6_COSETS[1] + M6_COSETS[9])] = True
        assert np.array_equal(mask, expected)

    def test_leaders_of_size(self):
        table = build_table(6)
        assert tuple(int(x) for x in table.leaders_of_size(3)) == (9, 27)
        assert tuple(int(x) for x in table.leaders_of_size(2)) == (21,)


class TestPermutationLemma:
    @pytest.mark.parametrize("m", [3, 4, 5, 6, 9])
    def test_right_rotation_doubles(self, m):
        n = (1 << m) - 1
        for x in range(n):
            assert pi_inv(rho(pi(x, m))) == (2 * x) % n

    def test_pi_roundtrip(self):
        for m in (4, 7):
            for x in range((1 << m) - 1):
                assert pi_inv(pi(x, m)) == x

    def test_pi_validation(self):
        with pytest.raises(ValueError):
            pi(16, 4)
        with pytest.raises(ValueError):
            pi_inv(())
        with pytest.raises(ValueError):
            rho(())


class TestNegatedCosets:
    @pytest.mark.parametrize("m", [5, 7, 9, 11, 13, 15, 17, 19])
    def test_odd_m_no_orbit_meets_its_negation(self, m):
        table = build_table(m)
        n = table.n
        lead = table.leader_of
        neg_lead = lead[(n - np.arange(n, dtype=np.int64)) % n]
        assert not np.any(lead[1:] == neg_lead[1:])

    def test_even_m_has_self_negated_orbits(self):
        # for m = 4: the orbit of 5 is {5, 10} and -5 = 10 falls inside it
        table = build_table(4)
        assert int(table.leader_of[15 - 5]) == int(table.leader_of[5])


class TestClassification:
    def test_two_prime_shape(self):
        sizes = classify_by_size(build_table(6), 2, 3)
        assert sizes.size_two_leader == 21
        assert sizes.size_p2_leaders == (9, 27)
        assert sizes.size_full_leaders == (1, 3, 5, 7, 11, 13, 15, 23, 31)
        assert sizes.zero_leader == 0

    def test_odd_pq_shape(self):
        sizes = classify_by_size(build_table(15), 3, 5)
        assert sizes.size_p1_leaders == (4681, 14043)
        assert sizes.size_p2_leaders == (1057, 3171, 5285, 7399, 11627, 15855)
        assert len(sizes.size_full_leaders) == 2182


class TestWeightClasses:
    @pytest.mark.parametrize("m", [4, 5, 6, 9])
    def test_partition_and_sizes(self, m):
        view = weight_classes(m)
        n = (1 << m) - 1
        s0, s1 = view.mask(0), view.mask(1)
        # Z_n misses the all-ones word, whose weight parity is that of m
        if m % 2 == 0:
            assert s0.sum() == 2 ** (m - 1) - 2
            assert s1.sum() == 2 ** (m - 1)
        else:
            assert s0.sum() == 2 ** (m - 1) - 1
            assert s1.sum() == 2 ** (m - 1) - 1
        assert not s0[0] and not s1[0]
        assert np.array_equal(s0 | s1, np.arange(n) != 0)
        assert not np.any(s0 & s1)

    def test_parity_semantics(self):
        view = weight_classes(6)
        assert view.contains(0, 3)  # weight 2
        assert view.contains(1, 7)  # weight 3
        assert not view.contains(0, 7)

    def test_classes_are_unions_of_cosets(self):
        view = weight_classes(7)
        n = 127
        for i in (0, 1):
            assert is_union_of_cosets(view.members(i), n)


class TestIsUnionOfCosets:
    def test_accepts_closed_sets(self):
        assert is_union_of_cosets({1, 2, 4, 8, 16, 32}, 63)
        assert is_union_of_cosets(set(), 63)

    def test_rejects_open_sets(self):
        assert not is_union_of_cosets({1, 2}, 63)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            is_union_of_cosets({63}, 63)
