from fractions import Fraction
import math

import pytest
from hypothesis import given, settings, strategies as st

import jimm
from jimm import QuadSurd


def test_sqrt2():
    assert jimm.jimm(QuadSurd.sqrt(2)) == QuadSurd(1, 1, 2)
    assert str(jimm.jimm("(0+1*sqrt(2))/1")) == "(1+1*sqrt(2))/1"


def test_surd_goldens():
    assert jimm.jimm(QuadSurd(3, 5, 2, 7)) == QuadSurd(-3, 2, 95, 7)
    assert jimm.jimm(QuadSurd.sqrt(11)) == QuadSurd(15, 1, 901, 26)
    assert jimm.jimm(-QuadSurd.sqrt(11)) == QuadSurd(15, -1, 901, 26)


def test_golden_section_goes_to_infinity():
    assert jimm.jimm("phi") == math.inf
    assert jimm.is_noble(QuadSurd(1, 1, 5, 2))


def test_pi_and_e():
    assert jimm.jimm_decimal("pi", 30) == "1.723770792548027607969932649493"
    assert jimm.jimm_decimal("e", 30) == "1.310575292846625521582249549693"
    assert jimm.jimm_stream_prefix("e", 6) == [1, 3, 4, 1, 1, 4]


def test_continued_fractions():
    cf = jimm.continued_fraction(QuadSurd.sqrt(11))
    assert (cf["preperiod"], cf["period"]) == ([3], [3, 6])
    assert jimm.from_continued_fraction([2], [2, 1, 4, 5]) == QuadSurd(-3, 2, 95, 7)
    assert jimm.rational_cf(Fraction(22, 7)) == [3, 7]
    assert jimm.jimm_cf("[1;(2)]")["text"] == "[(2)]"


def test_rationals_and_jumps():
    assert jimm.jimm_q(Fraction(5, 2)) == Fraction(4, 3)
    assert jimm.jimm_q(1) == 1
    j = jimm.jump(2)
    assert j["delta"] == -QuadSurd.sqrt(5)
    assert j["right"] - j["left"] == j["delta"]
    assert jimm.delta_formula(3) == QuadSurd(0, 1, 5, 5)


def test_matrices_and_words():
    assert jimm.jimm_matrix([[16, 1], [15, 1]]) == [[987, 1597], [377, 610]]
    assert jimm.jimm_matrix("[[40,3],[13,1]]") == [[898, 1453], [521, 843]]
    assert jimm.jimm_word("T V K") == "T~ S K"
    assert jimm.orbit_fixed_point("T") == QuadSurd.sqrt(2)


def test_boundary_words():
    assert jimm.xor_words("(0011)", "(01)") == jimm.xor_words("011(0011)", "(0)")
    assert jimm.boundary_word("[(1)]") == "(01)"
    assert jimm.word_value("(0011)") == QuadSurd(1, 1, 2)


def test_dynamics():
    x = QuadSurd.sqrt(2) - QuadSurd(1, 0, 1)
    value, branch = jimm.farey_map(x)
    assert value == QuadSurd(0, 1, 2, 2) and branch == "low"
    assert jimm.t_jimm(jimm.from_continued_fraction([0, 1, 1, 3], [2])) == jimm.from_continued_fraction([0, 2], [2])
    assert jimm.measure_residual(Fraction(1, 2), 40) < 1e-12


def test_structure_and_experiments():
    assert jimm.count_automorphisms(2) == 2 ** 7
    assert jimm.box_graph_csv(2).splitlines()[0] == "x_lo,x_hi,y_lo,y_hi"
    report = jimm.beatty("sqrt(2)", 1000)
    assert report["partition"] and report["dual_partition"]


def test_suite_runs():
    assert "matrix-table" in jimm.suite_names()
    assert jimm.run_suite("matrix-table")["passed"]


def test_errors():
    with pytest.raises(ValueError):
        jimm.jimm_decimal("5/2")
    with pytest.raises(ValueError):
        jimm.beatty("phi", 10)
    with pytest.raises(TypeError):
        jimm.jimm_q(0.5)


surds = st.builds(
    QuadSurd,
    st.integers(-30, 30),
    st.integers(1, 6),
    st.sampled_from([2, 3, 6, 7, 10, 11, 13, 14, 15, 17]),
    st.integers(1, 9),
).filter(lambda x: not jimm.is_noble(x))


@settings(max_examples=60, deadline=None)
@given(surds)
def test_involution(x):
    assert jimm.jimm(jimm.jimm(x)) == x


@settings(max_examples=60, deadline=None)
@given(surds)
def test_reflection_law(x):
    one = QuadSurd(1, 0, 1)
    assert jimm.jimm(one - x) == one - jimm.jimm(x)


@settings(max_examples=200, deadline=None)
@given(st.builds(Fraction, st.integers(1, 1000), st.integers(1, 1000)))
def test_rational_involution(q):
    assert jimm.jimm_q(jimm.jimm_q(q)) == q


def test_big_integers():
    a, b = 0, 1
    for _ in range(20000):
        a, b = b, a + b
    assert jimm.jimm_q(19999) == Fraction(a, b - a)
    assert QuadSurd(-(10 ** 5000), 1, 2).p == -(10 ** 5000)
