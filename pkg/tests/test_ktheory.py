"""K-theory: Gram matrices, classes, mutations, residual reports."""

import random

import pytest

from grex.bott import TwistedSchur, euler_char
from grex.diagrams import Box, enumerate_diagrams, orbit_length, residual_rank, theta
from grex.ktheory import (
    basis,
    class_of,
    euler_pairing,
    fullness_determinant,
    is_zero_combination,
    kapranov_gram,
    mutate_left,
    residual_report,
    twist_class,
)
from grex.staircase import build_theta_staircase


def ts(w, t, box):
    return TwistedSchur(tuple(w), t, box)


def unit(box, index):
    n = len(basis(box))
    return tuple(1 if i == index else 0 for i in range(n))


class TestKapranovGram:
    @pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
    def test_matches_general_euler_path(self, k, n):
        box = Box(k, n)
        ws = [d.parts for d in basis(box)]
        g = kapranov_gram(box)
        for i, a in enumerate(ws):
            for j, b in enumerate(ws):
                assert g[i][j] == euler_char(ts(a, 0, box), ts(b, 0, box))

    @pytest.mark.parametrize("k,n", [(2, 4), (3, 6), (2, 7), (4, 8)])
    def test_upper_unitriangular(self, k, n):
        g = kapranov_gram(Box(k, n))
        for i in range(len(g)):
            assert g[i][i] == 1
            for j in range(i):
                assert g[i][j] == 0


class TestClassOf:
    def test_structure_sheaf_is_a_unit_vector(self):
        box = Box(3, 6)
        assert class_of(ts((0, 0, 0), 0, box)) == unit(box, 0)

    def test_basis_bundles_are_unit_vectors(self):
        box = Box(2, 5)
        for i, d in enumerate(basis(box)):
            assert class_of(ts(d.parts, 0, box)) == unit(box, i)

    def test_twisted_line_bundle_on_p1(self):
        box = Box(1, 2)
        assert class_of(ts((2,), 0, box)) == (-1, 2)

    def test_pairing_is_a_section_of_euler_char(self):
        rng = random.Random(19)
        for k, n in [(2, 4), (2, 5), (3, 6)]:
            box = Box(k, n)
            for _ in range(6):
                w1 = tuple(sorted((rng.randint(0, box.width) for _ in range(k)), reverse=True))
                w2 = tuple(sorted((rng.randint(0, box.width) for _ in range(k)), reverse=True))
                e = ts(w1, rng.randint(-3, 3), box)
                f = ts(w2, rng.randint(-3, 3), box)
                assert euler_pairing(box, class_of(e), class_of(f)) == euler_char(e, f)


class TestEulerPairing:
    def test_unit_vectors(self):
        box = Box(2, 4)
        assert euler_pairing(box, unit(box, 0), unit(box, 0)) == 1

    def test_line_bundle_value(self):
        box = Box(2, 4)
        x = class_of(ts((0, 0), 0, box))
        y = class_of(ts((0, 0), 1, box))
        assert euler_pairing(box, x, y) == 6

    def test_bilinearity(self):
        rng = random.Random(8)
        box = Box(2, 5)
        n = len(basis(box))
        for _ in range(5):
            x = tuple(rng.randint(-4, 4) for _ in range(n))
            y = tuple(rng.randint(-4, 4) for _ in range(n))
            z = tuple(rng.randint(-4, 4) for _ in range(n))
            xy = tuple(a + b for a, b in zip(x, y))
            assert euler_pairing(box, xy, z) == euler_pairing(box, x, z) + euler_pairing(box, y, z)


class TestTwistClass:
    def test_agrees_with_twisted_bundle(self):
        box = Box(2, 5)
        for d in basis(box)[:5]:
            for t in (0, 1, -2):
                x = class_of(ts(d.parts, t, box))
                assert twist_class(box, x) == class_of(ts(d.parts, t + 1, box))


class TestMutateLeft:
    def test_empty_projectors(self):
        box = Box(2, 4)
        x = class_of(ts((1, 0), 1, box))
        assert mutate_left(box, [], x) == x

    def test_projecting_out_self(self):
        box = Box(2, 4)
        e = unit(box, 2)
        zero = (0,) * len(basis(box))
        assert mutate_left(box, [e], e) == zero

    def test_p1_example(self):
        box = Box(1, 2)
        e0 = unit(box, 0)
        x = class_of(ts((1,), 0, box))
        result = mutate_left(box, [e0], x)
        assert result == tuple(a - 2 * b for a, b in zip(x, e0))
        assert euler_pairing(box, e0, result) == 0

    def test_rejects_wrong_order(self):
        box = Box(1, 3)
        e0, e1 = unit(box, 0), unit(box, 1)
        # chi(O(1), O) = 0 but chi(O, O(1)) != 0: the reversed list breaks
        # unitriangularity and must be rejected
        mutate_left(box, [e0, e1], unit(box, 2))
        with pytest.raises(ValueError):
            mutate_left(box, [e1, e0], unit(box, 2))

    def test_rejects_non_exceptional_projector(self):
        box = Box(1, 2)
        with pytest.raises(ValueError):
            mutate_left(box, [(2, 0)], unit(box, 1))


class TestResidualReport:
    def test_g24(self):
        report = residual_report(Box(2, 4))
        assert len(report.residual_classes) == 2
        assert report.gram_is_identity
        assert report.sign_exponents == (2,)
        assert report.tau_all_ok

    def test_g37_empty(self):
        report = residual_report(Box(3, 7))
        assert report.short_diagrams == ()
        assert report.residual_classes == ()
        assert report.residual_gram == ()
        assert report.tau_all_ok

    def test_g36(self):
        report = residual_report(Box(3, 6))
        assert [d.parts for d, _ in report.short_diagrams] == [(2, 1, 0)]
        assert len(report.residual_classes) == 2
        assert report.gram_is_identity
        assert report.sign_exponents == (3,)
        assert report.tau_all_ok
        assert abs(report.fullness_det) == 1

    @pytest.mark.parametrize("k,n", [(2, 4), (2, 6), (3, 6)])
    def test_rank_accounting(self, k, n):
        box = Box(k, n)
        report = residual_report(box, include_fullness=False)
        assert len(report.residual_classes) == residual_rank(box)

    def test_json_fields(self):
        data = residual_report(Box(2, 4)).to_json()
        for key in (
            "short_diagrams",
            "residual_classes",
            "residual_gram",
            "tau_orbit_ok",
            "fullness_det",
            "residual_rank",
        ):
            assert key in data


class TestConeClassConsistency:
    @pytest.mark.parametrize("k,m", [(2, 2), (3, 2), (2, 3)])
    def test_cone_class_matches_staircase_expansion(self, k, m):
        # [S^mu U*] - (-1)^(k(n-k)/d) [S^mu U*(-n/d)] equals the alternating
        # sum of the middle staircase terms, as classes
        box = Box(k, k * m)
        mu = theta(k, m)
        o = orbit_length(box, mu.parts)
        d = box.n // o
        sign_exp = k * (box.n - k) // d
        sign = -1 if sign_exp % 2 else 1
        sc, _ = build_theta_staircase(k, m)
        combo = sc.k_class_combination()
        head = combo[0]
        tail = combo[-1]
        assert head[1].reduced().weight == mu.parts
        cone = [(1, head[1]), (-sign, tail[1])]
        assert is_zero_combination(box, cone + combo[1:-1])


class TestFullness:
    @pytest.mark.parametrize("k,n", [(2, 4), (2, 6), (3, 6)])
    def test_unimodular(self, k, n):
        assert abs(fullness_determinant(Box(k, n))) == 1


class TestZeroCombination:
    def test_detects_nonzero(self):
        box = Box(2, 4)
        assert not is_zero_combination(box, [(1, ts((1, 0), 0, box))])

    def test_cancellation(self):
        box = Box(2, 4)
        e = ts((1, 1), -1, box)
        assert is_zero_combination(box, [(3, e), (-3, e)])

    def test_perturbed_staircase_detected(self):
        from grex.diagrams import BoxedDiagram
        from grex.staircase import build_staircase

        box = Box(2, 4)
        sc = build_staircase(box, BoxedDiagram((2, 1), box))
        combo = sc.k_class_combination()
        combo[1] = (combo[1][0] + 1, combo[1][1])
        assert not is_zero_combination(box, combo)
