"""Bracket evaluation, framing factors, torus invariants, symmetries."""

import pytest

from skeinlab.exactring import LaurentQT, RationalQT, q_bracket, t_bracket
from skeinlab.partitions import EMPTY, Partition, PartitionPair, pairs_of_total
from skeinlab.skein import (
    LabelCountMismatch,
    LinkSpec,
    evaluate,
    framing_factor,
    full_invariant_value,
    meridian_eigenvalue,
    power_value,
    torus_framed,
    torus_full_invariant,
    unknot_full,
)
from skeinlab.symfun import SymFunc

P = Partition


def pair(a, b=()):
    return PartitionPair(P(a), P(b))


def mono(eq, et, c=1):
    return RationalQT(LaurentQT.monomial(c, eq, et))


UNKNOT_SCALAR = RationalQT(t_bracket(1), q_bracket(1))


class TestSpec:
    def test_torus_validation(self):
        with pytest.raises(ValueError):
            LinkSpec.torus(2, 4, 1)
        with pytest.raises(ValueError):
            LinkSpec.torus(2, 3, 2, framing=(0,))
        with pytest.raises(ValueError):
            LinkSpec.torus(1, 1, 2, reversed_={5})

    def test_writhes(self):
        assert LinkSpec.torus(2, 3, 1).writhes == (6,)
        assert LinkSpec.torus_diagram(2, 3).writhes == (3,)
        assert LinkSpec.torus_diagram(2, 4).writhes == (0, 0)
        assert LinkSpec.torus_diagram(3, 3).writhes == (0, 0, 0)
        assert LinkSpec.unknot(-2).writhes == (-2,)

    def test_torus_diagram_splits_gcd(self):
        spec = LinkSpec.torus_diagram(2, 6)
        assert (spec.m, spec.n, spec.L) == (1, 3, 2)


class TestEvaluate:
    def test_power_sums(self):
        assert evaluate(SymFunc.power_pair([1])) == UNKNOT_SCALAR
        assert evaluate(SymFunc.power_pair([2])) == RationalQT(t_bracket(2), q_bracket(2))
        assert evaluate(SymFunc.power_pair([], [2])) == RationalQT(t_bracket(2), q_bracket(2))
        assert evaluate(SymFunc.one()) == RationalQT(1)

    def test_multiplicative(self):
        a = SymFunc.power_pair([2, 1])
        b = SymFunc.power_pair([], [3])
        assert evaluate(a * b) == evaluate(a) * evaluate(b)


class TestUnknot:
    def test_fundamental(self):
        assert unknot_full(P([1])) == UNKNOT_SCALAR

    def test_empty(self):
        assert unknot_full(EMPTY, EMPTY) == RationalQT(1)

    def test_mixed_pair_is_alternating_combination(self):
        lhs = unknot_full(P([1]), P([1]))
        rhs = UNKNOT_SCALAR * UNKNOT_SCALAR - RationalQT(1)
        assert lhs == rhs

    def test_agrees_with_power_sum_evaluation(self):
        for n in range(5):
            for pr in pairs_of_total(n):
                assert unknot_full(pr.pos, pr.neg) == evaluate(
                    SymFunc.composite(pr.pos, pr.neg)
                )


class TestFraming:
    def test_row_two(self):
        assert framing_factor(P([2])) == LaurentQT.monomial(1, 2, 2)

    def test_mixed_pair_cancels_kappa(self):
        assert framing_factor(P([1]), P([1])) == LaurentQT.monomial(1, 0, 2)

    def test_empty(self):
        assert framing_factor(EMPTY, EMPTY) == LaurentQT.one()


class TestMeridian:
    def test_empty_label(self):
        assert meridian_eigenvalue(EMPTY, EMPTY) == UNKNOT_SCALAR

    def test_single_cell(self):
        expected = RationalQT(q_bracket(1) * LaurentQT.monomial(1, 0, 1)) + UNKNOT_SCALAR
        assert meridian_eigenvalue(P([1]), EMPTY) == expected

    def test_distinct_up_to_three(self):
        values = []
        for n in range(4):
            for pr in pairs_of_total(n):
                values.append((pr, meridian_eigenvalue(pr.pos, pr.neg)))
        for i, (pa, va) in enumerate(values):
            for pb, vb in values[i + 1 :]:
                assert va != vb, (pa, pb)


class TestFramedBrackets:
    def test_single_twist_unknot(self):
        spec = LinkSpec.torus(1, 1, 1)
        for pr in pairs_of_total(2):
            dec = SymFunc.composite(pr.pos, pr.neg)
            expected = RationalQT(framing_factor(pr.pos, pr.neg)) * unknot_full(
                pr.pos, pr.neg
            )
            assert torus_framed(spec, [dec]) == expected

    def test_kinked_unknot(self):
        for f in (-2, 0, 3):
            spec = LinkSpec.unknot(f)
            for pr in pairs_of_total(2):
                dec = SymFunc.composite(pr.pos, pr.neg)
                tau = RationalQT(framing_factor(pr.pos, pr.neg))
                assert torus_framed(spec, [dec]) == tau**f * unknot_full(pr.pos, pr.neg)

    def test_trefoil_diagram_bracket(self):
        # writhe-3 planar diagram: t^3 * (2 t^-2 - t^-4 + t^-2 z^2) * unknot scalar,
        # and 2 t^-2 + t^-2 z^2 collapses to t^-2 (q^2 + q^-2)
        spec = LinkSpec.torus_diagram(2, 3)
        hand = RationalQT(LaurentQT({(2, -2): 1, (-2, -2): 1, (0, -4): -1}))
        expected = mono(0, 3) * hand * UNKNOT_SCALAR
        got = torus_framed(spec, [SymFunc.composite([1])])
        assert got == expected

    def test_label_count(self):
        with pytest.raises(LabelCountMismatch):
            torus_framed(LinkSpec.torus(1, 1, 2), [SymFunc.composite([1])])

    def test_decoration_linearity(self):
        spec = LinkSpec.torus(2, 3, 1)
        dec = SymFunc.composite([1]) + SymFunc.composite([], [1]).scaled(3)
        got = torus_framed(spec, [dec])
        split = torus_framed(spec, [SymFunc.composite([1])]) + torus_framed(
            spec, [SymFunc.composite([], [1])]
        ) * 3
        assert got == split


class TestFullInvariant:
    def test_unknot_any_framing(self):
        for f in (-1, 0, 2):
            res = torus_full_invariant(LinkSpec.unknot(f), [pair([2], [1])])
            assert res.value == unknot_full(P([2]), P([1]))
            assert res.normalized

    def test_framing_independence(self):
        labels = [pair([1], [1])]
        a = full_invariant_value(LinkSpec.torus(2, 3, 1), labels)
        b = full_invariant_value(LinkSpec.torus(2, 3, 1, framing=5), labels)
        c = full_invariant_value(LinkSpec.torus_diagram(2, 3), labels)
        assert a == b == c

    def test_hopf_mixed_orientation(self):
        spec = LinkSpec.torus(1, 1, 2)
        got = full_invariant_value(spec, [pair([2]), pair((), [2])])
        expected = (
            unknot_full(P([2]), P([2]))
            + mono(-4, -2) * unknot_full(P([1]), P([1]))
            + mono(-4, -4)
        )
        assert got == expected

    def test_reversed_component_swaps_label(self):
        spec = LinkSpec.torus(1, 1, 2, reversed_={1})
        direct = full_invariant_value(spec, [pair([2]), pair([2])])
        swapped = full_invariant_value(
            LinkSpec.torus(1, 1, 2), [pair([2]), pair((), [2])]
        )
        assert direct == swapped

    def test_pair_swap_symmetry(self):
        for spec in (LinkSpec.torus(2, 3, 1), LinkSpec.torus(1, 1, 2)):
            for total in range(4):
                for pr in pairs_of_total(total):
                    labels = [pr] * spec.L
                    swapped = [p.swap() for p in labels]
                    assert full_invariant_value(spec, labels) == full_invariant_value(
                        spec, swapped
                    )

    def test_conjugation_symmetry(self):
        for spec in (LinkSpec.torus(2, 3, 1), LinkSpec.torus(1, 1, 2)):
            for total in range(4):
                for pr in pairs_of_total(total):
                    labels = [pr] * spec.L
                    conj = [p.conjugate() for p in labels]
                    assert (
                        full_invariant_value(spec, labels)
                        == full_invariant_value(spec, conj).conj_q()
                    )

    def test_mirror_convention(self):
        for pr in pairs_of_total(2):
            assert (
                full_invariant_value(LinkSpec.torus(2, 3, 1), [pr]).mirror()
                == full_invariant_value(LinkSpec.torus(2, -3, 1), [pr])
            )

    def test_label_count(self):
        with pytest.raises(LabelCountMismatch):
            torus_full_invariant(LinkSpec.torus(2, 3, 1), [pair([1]), pair([1])])
