import random
from fractions import Fraction as F

import pytest

from toag.axioms import Verdict
from toag.errors import DomainError
from toag.groups import LEX_QZ, LEX_ZZ, RATIONALS
from toag.presburger import (TypeSignature, elementarily_equivalent, euclidean_division,
                             is_discrete_with_successors, is_presburger_toag,
                             realize_signature, type_signature)
from toag.structure import Truncation, integer_truncation, saturating_table

Z6 = integer_truncation(6)
Q1 = Truncation(RATIONALS, F(1))
ZZ10 = Truncation(LEX_ZZ, (1, 0))
QZ10 = Truncation(LEX_QZ, (F(1), 0))
QZ06 = Truncation(LEX_QZ, (F(0), 6))


def test_discreteness():
    assert is_discrete_with_successors(Z6).passed
    r = is_discrete_with_successors(Q1)
    assert r.verdict is Verdict.FAIL
    e, half = r.witness
    assert F(0) < half < e
    # LexZZ is discrete with successors; it fails on division instead
    assert is_discrete_with_successors(ZZ10).passed


def test_division_examples():
    assert euclidean_division(Z6, 5, 3) == (1, 2)
    T5 = integer_truncation(5)
    sols = [(y, m) for y in range(6) for m in range(3)
            if T5.add(T5.n_times(y, 3), T5.n_times(1, m)) == 5]
    assert len(sols) > 1 and min(sols) == (1, 2)
    assert euclidean_division(T5, 5, 3) == (1, 2)
    assert euclidean_division(ZZ10, (1, -1), 2) is None


def test_division_errors():
    with pytest.raises(DomainError):
        euclidean_division(Z6, 3, 0)
    with pytest.raises(DomainError):
        euclidean_division(Q1, F(1, 2), 2)
    with pytest.raises(DomainError):
        euclidean_division(Z6, 9, 2)


@pytest.mark.parametrize("T", [integer_truncation(9), QZ10, Truncation(LEX_QZ, (F(5, 7), -2))],
                         ids=repr)
def test_division_is_correct(T):
    rng = random.Random("div")
    for _ in range(300):
        x = T.sample(rng)
        n = rng.randint(1, 12)
        y, m = euclidean_division(T, x, n)
        assert 0 <= m < n
        assert T.add(T.n_times(y, n), T.n_times(T.one, m)) == x


def test_recognition():
    assert is_presburger_toag(Z6).passed
    r = is_presburger_toag(QZ10)
    assert r.passed and not r.exhaustive
    assert "up to budget" in r.render(QZ10)
    assert is_presburger_toag(Q1).condition == 1
    bad = is_presburger_toag(ZZ10)
    assert bad.verdict is Verdict.FAIL and bad.condition == 2
    x, n = bad.witness
    assert euclidean_division(ZZ10, x, n) is None


def test_signatures():
    s = type_signature(Z6, n_max=4)
    assert (s.standard, s.value, s.residues) == (True, 5, {2: 1, 3: 2, 4: 1})
    s = type_signature(QZ10, n_max=3)
    assert (s.standard, s.value, s.residues) == (False, None, {2: 1, 3: 2})
    s = type_signature(QZ06, n_max=4)
    assert (s.standard, s.value, s.residues) == (True, 5, {2: 1, 3: 2, 4: 1})
    assert s.render() == "standard=true value=5 residues={2:1,3:2,4:1}"
    with pytest.raises(DomainError):
        type_signature(Q1)


def test_equivalence():
    assert elementarily_equivalent(Z6, QZ06).equivalent
    r = elementarily_equivalent(Z6, integer_truncation(7))
    assert not r.equivalent and r.reason == "value"
    r = elementarily_equivalent(Z6, QZ10)
    assert not r.equivalent and r.reason == "standardness"
    r = elementarily_equivalent(QZ10, Truncation(LEX_QZ, (F(3), 0)))
    assert r.equivalent and not r.exact
    r = elementarily_equivalent(QZ10, Truncation(LEX_QZ, (F(1), 1)))
    assert not r.equivalent and r.reason == "residue_mod_2"


def test_coherence():
    assert TypeSignature(True, 5, {2: 1, 3: 2, 4: 1}).coherent()
    assert not TypeSignature(True, 5, {2: 0}).coherent()
    assert not TypeSignature(False, None, {2: 1, 4: 2}).coherent()
    assert not TypeSignature(False, None, {2: 2}).coherent()
    assert not TypeSignature(False, 3, {}).coherent()


@pytest.mark.parametrize("T", [Z6, QZ10, QZ06, Truncation(LEX_QZ, (F(2), 17))], ids=repr)
def test_computed_signatures_are_coherent(T):
    assert type_signature(T).coherent()


def test_realize_examples():
    assert realize_signature(TypeSignature(True, 5, {})) == Z6
    sig = type_signature(QZ10)
    T = realize_signature(sig)
    assert T.tau == (F(1), 0)
    assert type_signature(T) == sig
    sig = TypeSignature(False, None, {2: 0, 3: 2}, 3)
    T = realize_signature(sig)
    assert T.tau == (F(1), 3)
    assert type_signature(T, n_max=3).residues == {2: 0, 3: 2}
    with pytest.raises(DomainError):
        realize_signature(TypeSignature(False, None, {2: 1, 4: 2}))


@pytest.mark.parametrize("s", [-40, -7, -1, 0, 1, 2, 13, 59, 1000])
def test_realize_round_trip_shift_form(s):
    sig = TypeSignature(False, None, {n: (s - 1) % n for n in range(2, 31)}, 30)
    assert type_signature(realize_signature(sig)) == sig


@pytest.mark.parametrize("v", [0, 1, 5, 29])
def test_realize_round_trip_standard(v):
    sig = type_signature(integer_truncation(v + 1))
    assert type_signature(realize_signature(sig)) == sig


@pytest.mark.parametrize("n", range(1, 9))
def test_signature_isomorphism_invariant(n):
    assert type_signature(saturating_table(n)) == type_signature(integer_truncation(n))
