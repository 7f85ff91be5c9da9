import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from toag.errors import DomainError, MixedInstanceError
from toag.groups import (GROUPS, INTEGERS, LEX_QZ, LEX_ZZ, RATIONALS, Cmp,
                         divide_with_remainder, group_add, group_cmp, group_sub)


def test_add_examples():
    assert group_add(INTEGERS, 3, 4) == 7
    assert group_add(LEX_ZZ, (1, -2), (0, 5)) == (1, 3)
    assert group_add(LEX_QZ, (F(1, 2), 3), (F(1, 2), -3)) == (F(1), 0)


def test_sub_examples():
    assert group_sub(INTEGERS, 5, 2) == 3
    assert group_sub(LEX_ZZ, (1, 0), (0, 4)) == (1, -4)
    assert group_sub(RATIONALS, F(1, 3), F(1, 2)) == F(-1, 6)


def test_cmp_examples():
    assert group_cmp(LEX_ZZ, (0, 10**6), (1, -10**6)) is Cmp.LT
    assert group_cmp(LEX_QZ, (F(1, 2), 0), (F(1, 2), 1)) is Cmp.LT
    assert group_cmp(INTEGERS, 4, 4) is Cmp.EQ


def test_division_examples():
    assert divide_with_remainder(INTEGERS, 22, 5) == (4, 2)
    q, r = divide_with_remainder(LEX_QZ, (F(1), -1), 3)
    assert (q, r) == ((F(1, 3), -1), 2)
    assert group_add(LEX_QZ, LEX_QZ.scale(q, 3), LEX_QZ.from_int(r)) == (F(1), -1)
    assert divide_with_remainder(LEX_ZZ, (1, 0), 2) is None


def test_division_rejects_bad_divisor():
    with pytest.raises(DomainError):
        divide_with_remainder(INTEGERS, 5, 0)
    with pytest.raises(DomainError):
        divide_with_remainder(INTEGERS, 5, -2)


@pytest.mark.parametrize("op", [group_add, group_sub, group_cmp])
def test_mixed_instances_rejected(op):
    with pytest.raises(MixedInstanceError):
        op(INTEGERS, 1, F(1, 2))
    with pytest.raises(MixedInstanceError):
        op(LEX_ZZ, (1, 0), (F(1, 2), 0))
    with pytest.raises(MixedInstanceError):
        op(LEX_QZ, (F(1), 0), 3)


def test_least_positive_elements():
    assert INTEGERS.one == 1
    assert LEX_ZZ.one == (0, 1)
    assert LEX_QZ.one == (F(0), 1)
    assert RATIONALS.one is None


def test_rationals_stay_normalized():
    x = group_add(RATIONALS, F(2, 4), F(-6, 8))
    assert (x.numerator, x.denominator) == (-1, 4)


def test_integer_division_matches_divmod():
    for a in range(0, 1001):
        for n in range(1, 13):
            assert divide_with_remainder(INTEGERS, a, n) == divmod(a, n)


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_group_laws_sampled(name):
    g = GROUPS[name]
    rng = random.Random(f"laws:{name}")
    hi = g.parse("(50,0)") if name.startswith("Lex") else g.parse("50")
    draw = lambda: g.sub(g.sample(rng, hi), g.sample(rng, hi))
    for _ in range(10_000):
        a, b, c = draw(), draw(), draw()
        assert g.add(g.add(a, b), c) == g.add(a, g.add(b, c))
        assert g.add(a, b) == g.add(b, a)
        lo, up = min(a, b), max(a, b)
        assert g.add(lo, c) <= g.add(up, c)
        assert g.add(g.sub(a, b), b) == a
        assert g.add(a, g.sub(g.zero, a)) == g.zero


def test_lexqz_division_total(rng):
    for _ in range(5_000):
        a = LEX_QZ.sample(rng, (F(7), 0))
        n = rng.randint(1, 30)
        q, r = divide_with_remainder(LEX_QZ, a, n)
        assert 0 <= r < n
        assert LEX_QZ.add(LEX_QZ.scale(q, n), LEX_QZ.from_int(r)) == a


def test_lexzz_division_exists_iff_first_coordinate_divisible(rng):
    for _ in range(2_000):
        a = (rng.randint(0, 40), rng.randint(-40, 40))
        n = rng.randint(1, 9)
        res = LEX_ZZ.divide_with_remainder(a, n)
        assert (res is not None) == (a[0] % n == 0)
        if res is not None:
            q, r = res
            assert LEX_ZZ.add(LEX_ZZ.scale(q, n), (0, r)) == a


ints = st.integers(-10**6, 10**6)
rats = st.fractions(max_denominator=1000)


@given(rats, rats, rats)
def test_rational_order_translation_invariant(a, b, c):
    if a <= b:
        assert group_add(RATIONALS, a, c) <= group_add(RATIONALS, b, c)


@given(st.tuples(rats, ints), st.tuples(rats, ints))
def test_lexqz_sub_inverts_add(a, b):
    assert group_add(LEX_QZ, group_sub(LEX_QZ, a, b), b) == a


@given(st.tuples(ints, ints), st.tuples(ints, ints))
def test_lex_order_is_lexicographic(a, b):
    expected = Cmp.LT if a < b else Cmp.GT if a > b else Cmp.EQ
    assert group_cmp(LEX_ZZ, a, b) is expected


@pytest.mark.parametrize("name,text,value", [
    ("Integers", "7", 7),
    ("Rationals", "1/2", F(1, 2)),
    ("LexZZ", "(1,-3)", (1, -3)),
    ("LexQZ", "(1/2, 3)", (F(1, 2), 3)),
])
def test_parse(name, text, value):
    assert GROUPS[name].parse(text) == value
