"""Box diagram combinatorics: enumeration, cyclic orbits, ranks."""

import random
from math import comb, gcd

import pytest

from grex.diagrams import (
    Box,
    BoxedDiagram,
    cyclic_step,
    enumerate_diagrams,
    is_minimal_upper_triangular,
    is_strictly_upper_triangular,
    is_upper_triangular,
    non_minimal_upper,
    orbit_of,
    residual_rank,
    theta,
)

B36 = Box(3, 6)


def d(parts, box=B36):
    return BoxedDiagram(tuple(parts), box)


class TestY36:
    def test_upper_set(self):
        got = [x.parts for x in enumerate_diagrams(B36, "upper")]
        assert got == [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 0, 0), (2, 1, 0)]

    def test_strictly_upper_set(self):
        got = [x.parts for x in enumerate_diagrams(B36, "strictly_upper")]
        assert got == [(0, 0, 0), (1, 0, 0)]

    def test_minimal_set_excludes_two_rows(self):
        got = [x.parts for x in enumerate_diagrams(B36, "minimal_upper")]
        assert got == [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 0)]

    def test_orbit_structure(self):
        lengths = sorted(
            orbit_of(x).length for x in enumerate_diagrams(B36, "minimal_upper")
        )
        assert lengths == [2, 6, 6, 6]


class TestCyclicStep:
    def test_adds_column(self):
        assert cyclic_step(d((1, 0, 0))).parts == (2, 1, 1)

    def test_full_first_row_shifts(self):
        assert cyclic_step(d((3, 2, 2))).parts == (2, 2, 0)

    def test_empty_goes_to_column(self):
        assert cyclic_step(d((0, 0, 0))).parts == (1, 1, 1)

    @pytest.mark.parametrize("k,n", [(2, 5), (3, 6), (4, 9)])
    def test_n_fold_iteration_is_identity(self, k, n):
        box = Box(k, n)
        rng = random.Random(k * 100 + n)
        pool = enumerate_diagrams(box, "all")
        for x in rng.sample(pool, min(10, len(pool))):
            cur = x
            for _ in range(n):
                cur = cyclic_step(cur)
            assert cur == x


class TestOrbits:
    def test_short_orbit_members(self):
        orb = orbit_of(d((2, 1, 0)))
        assert orb.length == 2
        assert [m.parts for m in orb.members] == [(2, 1, 0), (3, 2, 1)]
        assert orb.representative.parts == (2, 1, 0)

    def test_representative_of_full_orbit(self):
        orb = orbit_of(d((2, 0, 0)))
        assert orb.length == 6
        assert orb.representative.parts == (1, 1, 0)

    def test_coprime_orbits_are_free(self):
        box = Box(3, 7)
        for x in enumerate_diagrams(box, "all"):
            assert orbit_of(x).length == 7

    def test_members_chain_by_cyclic_step(self):
        orb = orbit_of(d((1, 0, 0)))
        for i, m in enumerate(orb.members):
            assert cyclic_step(m) == orb.members[(i + 1) % orb.length]


class TestEnumeration:
    def test_single_row_box(self):
        got = [x.parts for x in enumerate_diagrams(Box(1, 4), "all")]
        assert got == [(0,), (1,), (2,), (3,)]

    def test_short_minimal_upper_g48(self):
        got = [x.parts for x in enumerate_diagrams(Box(4, 8), "short_minimal_upper")]
        assert got == [(2, 2, 0, 0), (3, 2, 1, 0)]

    def test_counts_match_binomials(self):
        for n in range(2, 14):
            for k in range(1, n):
                assert len(enumerate_diagrams(Box(k, n), "all")) == comb(n, k)

    def test_bad_selection_rejected(self):
        with pytest.raises(ValueError):
            enumerate_diagrams(B36, "everything")


class TestOrbitInvariants:
    @pytest.mark.parametrize("k,n", [(2, 4), (2, 6), (3, 6), (3, 9), (4, 8), (4, 10)])
    def test_orbit_lengths_partition_the_box(self, k, n):
        box = Box(k, n)
        seen = set()
        total = 0
        minimal_count = 0
        for x in enumerate_diagrams(box, "all"):
            if x.parts in seen:
                continue
            orb = orbit_of(x)
            seen.update(m.parts for m in orb.members)
            total += orb.length
            assert n % orb.length == 0
            assert (n // orb.length) in [e for e in range(1, gcd(k, n) + 1) if gcd(k, n) % e == 0]
            uppers = [m for m in orb.members if is_upper_triangular(m)]
            assert uppers, "every orbit has an upper triangular member"
            minimal = [m for m in orb.members if is_minimal_upper_triangular(m)]
            assert len(minimal) == 1
            minimal_count += 1
            if gcd(k, n) == 1:
                assert len(uppers) == 1
        assert total == comb(n, k)
        assert minimal_count == len(enumerate_diagrams(box, "minimal_upper"))

    @pytest.mark.parametrize("k,n", [(2, 4), (3, 6), (3, 9), (4, 8)])
    def test_strictly_upper_implies_minimal(self, k, n):
        box = Box(k, n)
        for x in enumerate_diagrams(box, "strictly_upper"):
            assert is_minimal_upper_triangular(x)

    @pytest.mark.parametrize("k,n", [(2, 4), (2, 6), (3, 6), (4, 8), (4, 12)])
    def test_short_orbit_sizes_sum_to_rank(self, k, n):
        box = Box(k, n)
        total = sum(
            orbit_of(x).length
            for x in enumerate_diagrams(box, "short_minimal_upper")
        )
        assert total == residual_rank(box)


class TestResidualRank:
    def test_spot_values(self):
        assert residual_rank(Box(3, 6)) == 2
        assert residual_rank(Box(3, 7)) == 0
        assert residual_rank(Box(4, 8)) == 6
        assert residual_rank(Box(6, 12), "brute_force") == 24

    def test_methods_agree_small(self):
        for n in range(2, 12):
            for k in range(1, n):
                box = Box(k, n)
                assert residual_rank(box, "mobius") == residual_rank(box, "brute_force")

    def test_coprime_vanishes(self):
        for k, n in [(2, 5), (3, 8), (4, 9), (5, 12)]:
            assert residual_rank(Box(k, n)) == 0

    def test_bad_method(self):
        with pytest.raises(ValueError):
            residual_rank(B36, "guess")


class TestTheta:
    def test_values(self):
        assert theta(3, 2).parts == (2, 1, 0)
        assert theta(4, 2).parts == (3, 2, 1, 0)
        assert theta(2, 1).parts == (0, 0)
        assert theta(2, 1).box == Box(2, 2)

    @pytest.mark.parametrize("k,m", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
    def test_orbit_length_is_m_and_minimal(self, k, m):
        t = theta(k, m)
        assert orbit_of(t).length == m
        assert is_minimal_upper_triangular(t)


class TestNonMinimalUpper:
    def test_g36(self):
        assert [x.parts for x in non_minimal_upper(B36)] == [(2, 0, 0)]

    def test_g39(self):
        got = [x.parts for x in non_minimal_upper(Box(3, 9))]
        assert got == [(4, 0, 0), (4, 1, 0)]

    def test_g24_empty(self):
        assert non_minimal_upper(Box(2, 4)) == []

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_g3_3m_pattern(self, m):
        got = [x.parts for x in non_minimal_upper(Box(3, 3 * m))]
        assert got == [(2 * (m - 1), i, 0) for i in range(m - 1)]


class TestValidationAndJson:
    def test_bad_box(self):
        with pytest.raises(ValueError):
            Box(0, 3)
        with pytest.raises(ValueError):
            Box(4, 3)

    def test_bad_diagram(self):
        with pytest.raises(ValueError):
            BoxedDiagram((1, 2, 0), B36)
        with pytest.raises(ValueError):
            BoxedDiagram((4, 0, 0), B36)
        with pytest.raises(ValueError):
            BoxedDiagram((1, 0), B36)

    def test_json(self):
        assert d((2, 1, 0)).to_json() == [2, 1, 0]
        assert B36.to_json() == {"k": 3, "n": 6}
        assert Box.from_json({"k": 3, "n": 6}) == B36

    def test_contains(self):
        assert d((2, 1, 0)).contains(d((1, 1, 0)))
        assert not d((1, 1, 0)).contains(d((2, 0, 0)))
