from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from rigidroots.coxeter import coxeter_w, eval_word, format_word, is_reflection_word
from rigidroots.errors import UsageError
from rigidroots.lattice_words import (
    SpiralForm,
    Step,
    crossing_word,
    dyck_path,
    dyck_word,
    mirrored_word,
    segment_word,
    shift,
    sigma_conjugate_check,
    spiral_normalize,
)
from rigidroots.rank2_roots import LatticeVector, sigma1, sigma2
from rigidroots.verify import closed_form_word, fn_failures, dyck_failures, shift_failures

P_PLUS_60 = [(a, b) for a in range(1, 60) for b in range(1, 61 - a) if gcd(a, b) == 1]


@pytest.mark.parametrize(
    "v, word",
    [((1, 1), "2"), ((5, 3), "2321232321232"), ((4, 1), "2323232"), ((2, 1), "232")],
)
def test_crossing_word_examples(v, word):
    assert format_word(crossing_word(v)) == word


def test_crossing_word_rejects_bad_input():
    for v in [(2, 4), (0, 1), (-1, 2), (3, 0)]:
        with pytest.raises(UsageError):
            crossing_word(v)


def test_crossing_word_shape_exhaustive():
    for a, b in P_PLUS_60:
        w = crossing_word((a, b))
        assert len(w) == 2 * (a + b) - 3
        assert is_reflection_word(w)
        assert w.count(3) == a - 1
        assert w.count(1) == b - 1
        assert w.count(2) == a + b - 1


def test_axis_swap_exhaustive():
    for a, b in P_PLUS_60:
        assert crossing_word((b, a)) == mirrored_word(crossing_word((a, b)))


def _float_word(a, b):
    # floating-point oracle: parameters are far apart for small inputs
    ev = [(i / a, 3) for i in range(1, a)]
    ev += [(j / b, 1) for j in range(1, b)]
    ev += [(k / (a + b), 2) for k in range(1, a + b)]
    return tuple(lab for _, lab in sorted(ev))


@given(st.integers(1, 200), st.integers(1, 200))
def test_crossing_word_float_oracle(a, b):
    assume(gcd(a, b) == 1)
    assert crossing_word((a, b)) == _float_word(a, b)


def test_segment_word_other_quadrants():
    assert format_word(segment_word(-2, 3)) == "131"
    with pytest.raises(UsageError):
        segment_word(-2, 2)


def test_dyck_paths():
    assert dyck_path(1, 1).steps == (Step.H, Step.V)
    assert str(dyck_path(2, 1)) == "HHV"
    corners = [(0, 0), (3, 0), (3, 1), (6, 1), (6, 2), (8, 2), (8, 3), (11, 3), (11, 4), (13, 4), (13, 5)]
    assert dyck_path(13, 5).corners() == corners
    with pytest.raises(UsageError):
        dyck_path(2, 3)


@given(st.integers(1, 80), st.integers(1, 80))
def test_dyck_path_is_maximal_below_diagonal(w, h):
    assume(w >= h)
    path = dyck_path(w, h)
    assert path.steps.count(Step.H) == w and path.steps.count(Step.V) == h
    pts = path.vertices()
    assert all(y * w <= x * h for x, y in pts)
    # the top of each column sits one unit short of crossing the diagonal
    top = {}
    for x, y in pts:
        top[x] = max(top.get(x, 0), y)
    for x, y in top.items():
        assert (y + 1) * w > x * h


def test_dyck_words():
    assert format_word(dyck_word(2, 1)) == "232321"
    assert format_word(dyck_word(1, 1)) == "2321"
    assert format_word(dyck_word(3, 1)) == "23232321"
    p = coxeter_w(3)
    assert eval_word(p, crossing_word((3, 1))) == eval_word(p, (3, 2) + dyck_word(3, 1) + (1,))


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_dyck_identities(m):
    fails = dyck_failures(m, 25)
    assert fails == {"dyck_crossing": [], "dyck_conjugate": [], "sigma_conjugate": []}


@pytest.mark.parametrize("m", [2, 3, 4])
def test_closed_forms_and_orders(m):
    assert fn_failures(m, 8) == {"closed_F": [], "closed_E": [], "order_m": []}


def test_closed_form_shapes():
    assert format_word(closed_form_word("F", 3)) == "1231"
    assert format_word(closed_form_word("F", 5)) == "1321231231"
    assert format_word(closed_form_word("E", 4)) == "13231231"


def test_shift_examples():
    assert shift((1, 1), 1, 3) == LatticeVector(4, 1)
    assert shift((1, 1), 1, 2) == LatticeVector(3, 1)
    assert shift((5, 3), 0, 7) == LatticeVector(5, 3)
    p2 = coxeter_w(2)
    assert eval_word(p2, crossing_word((3, 1))) == eval_word(p2, crossing_word((1, 1)))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_shift_identity(m):
    assert shift_failures(m, 5, 10) == []


def test_sigma_conjugate_examples():
    assert sigma_conjugate_check((2, 1), 3) == ((13, 5), True)
    assert sigma_conjugate_check((1, 1), 2) == ((1, 1), True)
    assert sigma_conjugate_check((3, 1), 4) == ((41, 11), True)
    with pytest.raises(UsageError):
        sigma_conjugate_check((1, 2), 3)


def test_spiral_examples():
    assert spiral_normalize(SpiralForm(0, "plain", 5, 3), 3) == (5, 3)
    assert spiral_normalize(SpiralForm(0, "three", -2, 3), 3) == (7, 3)
    with pytest.raises(UsageError):
        SpiralForm(0, "three", -5, 3)
    with pytest.raises(UsageError):
        SpiralForm(0, "plain", -1, 3)


@st.composite
def spiral_forms(draw):
    variant = draw(st.sampled_from(["plain", "three", "threetwo"]))
    d = draw(st.integers(1, 6))
    if variant == "plain":
        c = draw(st.integers(1, 12))
    elif variant == "three":
        assume(d > 1)
        c = draw(st.integers(-d + 1, -1))
    else:
        c = draw(st.integers(-40, -d - 1))
    assume(gcd(c, d) == 1)
    return SpiralForm(draw(st.integers(0, 2)), variant, c, d, draw(st.booleans()))


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_spiral_normalize_matches_word(m):
    p = coxeter_w(m)

    @given(spiral_forms())
    def check(form):
        v = spiral_normalize(form, m)
        assert v.a >= 1 and v.b >= 1 and gcd(*v) == 1
        assert eval_word(p, form.word()) == eval_word(p, crossing_word(v))

    check()


def test_spiral_threetwo_slides_to_positive():
    form = SpiralForm(0, "threetwo", -8, 3)
    v = spiral_normalize(form, 3)
    assert v == (10, 3)
    p = coxeter_w(3)
    assert eval_word(p, form.word()) == eval_word(p, crossing_word((1, 3)))


def test_sigma_formula():
    assert sigma2((2, 1), 3) == (2, 5)
    assert sigma1((2, 5), 3) == (13, 5)
