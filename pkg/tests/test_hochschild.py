from fractions import Fraction

import pytest

from HomCat.Bracket.moyBracket import bracket, closed_form_A1
from HomCat.core import TriPoincare, WebError
from HomCat.Hochschild.hhhComputation import HHHComputation, euler_bracket, h12, h12_shift, hhh
from HomCat.Hochschild.koszul import close_web, hh_dims, koszul_closure, trace_reduced_closure
from HomCat.Oracle.hochschildOracles import kink_braids
from HomCat.Presentations.ringPres import RingPres
from HomCat.Webs.colouredBraid import ColouredBraid


UNKNOT_1 = {(0, 0, 0): 1, (0, 0, 4): 1, (0, 0, 8): 1, (0, -2, 2): 1, (0, -2, 6): 1}


def test_koszul_closure_counts(presentations):
    assert len(koszul_closure(presentations("arc2"))) == 2
    assert len(koszul_closure(presentations("dumbbell22"))) == 4
    factors = koszul_closure(presentations("dumbbell21"), strands = [2])
    assert [(factor.strand, factor.index, factor.q_shift) for factor in factors] == [(2, 1, 1)]
    assert [factor.q_shift for factor in koszul_closure(presentations("arc2"))] == [1, 3]


def test_koszul_closure_needs_matching_strands(presentations):
    with pytest.raises(WebError):
        koszul_closure(presentations("h2213"))
    with pytest.raises(WebError):
        koszul_closure(presentations("dumbbell21"), strands = [3])


def test_closed_arc(presentations):
    table = close_web(presentations("arc1"), 6)
    assert table.dims() == {(0, 0): 1, (0, 4): 1, (0, 8): 1, (0, 12): 1, (-2, 2): 1, (-2, 6): 1, (-2, 10): 1}
    assert table.dim(-1, 3) == 1
    assert table.dim(-1, 2) == 0


@pytest.mark.parametrize("k", [1, 2, 3])
def test_closed_arcs_match_closed_form(presentations, k):
    assert close_web(presentations(f"arc{k}"), 6).poincare() == closed_form_A1(k, 6)


def test_hh_dims_without_factors_is_the_bimodule(presentations):
    table = hh_dims(presentations("arc1"), [], 6)
    assert table.dims() == {(0, 0): 1, (0, 4): 1, (0, 8): 1, (0, 12): 1}
    assert table.dim(0, 1) == 0


def test_q_shift_moves_the_table(presentations):
    shifted = close_web(presentations("arc1"), 6, q_shift = 2)
    assert shifted.dim(0, 2) == 1
    assert shifted.dim(0, 0) == 0


def test_unknot_homology():
    table = hhh(ColouredBraid((1,)), 4)
    assert table.entries == UNKNOT_1
    assert table.qmax == 4


def test_positive_kink_matches_unknot():
    computation = HHHComputation(ColouredBraid((1, 1), (1,)), 4, threads = 1)
    assert len(computation.complex.objects) == 2
    assert computation.table.entries == UNKNOT_1


def test_negative_kink_is_shifted_unknot():
    kink = hhh(ColouredBraid((1, 1), (-1,)), 3)
    unknot = hhh(ColouredBraid((1,)), 4)
    assert kink.agrees_with(unknot.shift(2, -2, -2))


def test_open_braid_is_rejected():
    with pytest.raises(WebError):
        hhh(ColouredBraid((2, 1), (1,)), 2)


@pytest.mark.parametrize("colours, word, shift", [((2, 2), (1, 1), (0, 0, 0)), ((2,), (), (-2, 2, 2)), ((1, 1), (-1,), (-3, 3, 3))])
def test_h12_shift(colours, word, shift):
    assert h12_shift(ColouredBraid(colours, word)) == shift


def test_normalized_unknot_has_half_integer_degrees():
    table = h12(ColouredBraid((1,)), 3)
    assert table.dim(-1, 1, 1) == 1
    assert table.qmax == Fraction(7, 2)


def test_euler_bracket():
    table = TriPoincare({(0, 0, 0): 1, (2, 0, 2): 1, (-4, -2, 4): 2}, 8)
    series = euler_bracket(table)
    assert series.terms == {(0, 0): 1, (2, 0): -1, (4, -2): 2}
    assert series.qmax2 == 8
    with pytest.raises(ValueError):
        euler_bracket(TriPoincare({(1, 0, 0): 1}, 2))


def test_euler_characteristic_matches_bracket():
    braid = ColouredBraid((1, 1), (1, 1))
    assert euler_bracket(hhh(braid, 3)) == bracket(braid, 3)


@pytest.mark.slow
def test_hopf_euler_characteristic():
    braid = ColouredBraid((2, 2), (1, 1))
    assert euler_bracket(hhh(braid, 2)) == bracket(braid, 2)


@pytest.mark.parametrize("name", ["arc2", "twoarcs21", "dumbbell22"])
def test_trace_reduced_closure_splits_off_one_factor(presentations, name):
    pres = presentations(name)
    factors = trace_reduced_closure(pres)
    assert len(factors) == len(koszul_closure(pres)) - 1
    assert all((factor.strand, factor.index) != (1, 1) for factor in factors)
    full = close_web(pres, 6)
    reduced = hh_dims(pres, factors, 6)
    for hh in range(0, -len(factors) - 2, -1):
        for q in range(0, 7):
            assert full.dim(hh, q) == reduced.dim(hh, q) + reduced.dim(hh + 1, q - 1)


def test_trace_reduced_closure_needs_cancelling_traces(xy):
    x_var, y_var, x, y = xy
    pres = RingPres([x_var, y_var], [], bottom = [(x,)], top = [(y,)], name = "free")
    with pytest.raises(ValueError):
        trace_reduced_closure(pres)


@pytest.mark.parametrize("k", [1, 2])
def test_unknot_matches_closed_form_up_to_q12(k):
    assert euler_bracket(hhh(ColouredBraid((k,)), 12)) == closed_form_A1(k, 12)


def _kink_tables(kink, unknot, shift, qmax):
    return hhh(kink, qmax), hhh(unknot, qmax - shift[2] // 2).shift(*shift)


@pytest.mark.slow
@pytest.mark.parametrize("label, kink, unknot, shift", kink_braids(), ids = lambda case: case if isinstance(case, str) else None)
def test_kinks_up_to_q8(label, kink, unknot, shift):
    table, expected = _kink_tables(kink, unknot, shift, 8)
    assert table.agrees_with(expected, 16)
    assert euler_bracket(table) == bracket(kink, 8)


BRAID_MOVES = [
    pytest.param((1, 1), (1, -1), (), 8, id = "RII (1,1)"),
    pytest.param((2, 2), (1, -1), (), 6, id = "RII (2,2)"),
    pytest.param((1, 1, 1), (1, 2, 1), (2, 1, 2), 6, id = "RIII (1,1,1)"),
    pytest.param((1, 2, 1), (1, 2, 1), (2, 1, 2), 4, id = "RIII (1,2,1)"),
    pytest.param((2, 2), (1, -1, 1), (-1, 1, 1), 6, id = "conjugation (2,2)"),
]


@pytest.mark.slow
@pytest.mark.parametrize("colours, left, right, qmax", BRAID_MOVES)
def test_braid_moves_preserve_homology(colours, left, right, qmax):
    left_braid, right_braid = ColouredBraid(colours, left), ColouredBraid(colours, right)
    left_table, right_table = hhh(left_braid, qmax), hhh(right_braid, qmax)
    assert left_table.entries == right_table.entries
    assert euler_bracket(left_table) == bracket(left_braid, qmax)
    assert euler_bracket(right_table) == bracket(right_braid, qmax)
