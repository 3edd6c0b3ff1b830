"""Fibre products, connected sums, socle generators, and apolarity."""

import random

import numpy as np
import pytest

from artinsum import (GF, QQ, PolyRing, algebra_from_text, apolar_algebra,
                      apolar_sum_check, connected_sum, fibre_product, modulo_socle,
                      parse_polynomial, socle_generator)
from artinsum.errors import (BadSocleError, CharacteristicError,
                             NotGorensteinError, RingMismatchError)
from artinsum.grobner import IdealPresentation

from corpus import random_pair


def gb_strings(A):
    return sorted(str(g) for g in A.pres.groebner_basis())


def test_fibre_product_of_quadrics():
    R = algebra_from_text("field QQ; vars Y; ideal Y^2")
    S = algebra_from_text("field QQ; vars Z; ideal Z^2")
    P = fibre_product(R, S)
    assert not P.trivial
    assert gb_strings(P.algebra) == ["Y*Z", "Y^2", "Z^2"]
    assert P.algebra.length == 3


def test_fibre_product_trivial():
    from artinsum.quotient import residue_field_algebra
    R = algebra_from_text("field QQ; vars Y; ideal Y^3")
    res = fibre_product(R, residue_field_algebra(QQ))
    assert res.trivial and res.algebra is R


def test_fibre_product_hilbert_additivity():
    R = algebra_from_text("field QQ; vars Y1 Y2; ideal Y1^2, Y2^2")
    S = algebra_from_text("field QQ; vars Z; ideal Z^3")
    P = fibre_product(R, S).algebra
    hr, hs, hp = R.hilbert_function(), S.hilbert_function(), P.hilbert_function()
    for i in range(1, len(hp)):
        a = hr[i] if i < len(hr) else 0
        b = hs[i] if i < len(hs) else 0
        assert hp[i] == a + b


def test_socle_generator_examples():
    assert str(socle_generator(algebra_from_text("field QQ; vars Y; ideal Y^3"))) == "Y^2"
    assert str(socle_generator(algebra_from_text("field QQ; vars Y; ideal Y^4"))) == "Y^3"
    ci = algebra_from_text("field QQ; vars Y1 Y2; ideal Y1^2, Y2^2")
    assert str(socle_generator(ci)) == "Y1*Y2"
    with pytest.raises(NotGorensteinError):
        socle_generator(algebra_from_text("field QQ; vars Y Z; ideal Y^2, Z^2, Y*Z"))


def test_connected_sum_of_cubics():
    R = algebra_from_text("field QQ; vars Y; ideal Y^3")
    S = algebra_from_text("field QQ; vars Z; ideal Z^3")
    Q = connected_sum(R, S)
    assert gb_strings(Q.algebra) == ["Y*Z", "Y^2 - Z^2", "Z^3"]
    assert Q.algebra.length == 4
    assert Q.algebra.hilbert_function() == (1, 2, 1)


def test_connected_sum_stretched():
    R = algebra_from_text("field QQ; vars Y; ideal Y^4")
    S = algebra_from_text("field QQ; vars Z; ideal Z^3")
    Q = connected_sum(R, S)
    assert gb_strings(Q.algebra) == ["Y*Z", "Y^3 - Z^2", "Z^3"]
    assert Q.algebra.hilbert_function() == (1, 2, 1, 1)
    from artinsum import classify
    assert classify(Q.algebra).stretched


def test_connected_sum_trivial():
    R = algebra_from_text("field QQ; vars Y; ideal Y^3")
    S = algebra_from_text("field QQ; vars Z; ideal Z^2")
    res = connected_sum(R, S)
    assert res.trivial and res.algebra is R


def test_connected_sum_unit():
    R = algebra_from_text("field QQ; vars Y; ideal Y^3")
    S = algebra_from_text("field QQ; vars Z; ideal Z^3")
    Q = connected_sum(R, S, unit=2)
    assert "Y^2 - 2*Z^2" in gb_strings(Q.algebra)


def test_connected_sum_custom_socle():
    R = algebra_from_text("field QQ; vars Y; ideal Y^3")
    S = algebra_from_text("field QQ; vars Z; ideal Z^3")
    expr = parse_polynomial("3*Y^2", R.ring)
    Q = connected_sum(R, S, socle_left=expr)
    assert "Y^2 - 1/3*Z^2" in gb_strings(Q.algebra)
    with pytest.raises(BadSocleError):
        connected_sum(R, S, socle_left=parse_polynomial("Y", R.ring))


def test_variable_collision_rejected():
    R = algebra_from_text("field QQ; vars Y; ideal Y^3")
    S = algebra_from_text("field QQ; vars Y; ideal Y^4")
    with pytest.raises(RingMismatchError):
        connected_sum(R, S)


def test_sum_invariants_random_corpus():
    rng = random.Random(41)
    for _ in range(10):
        R, S = random_pair(rng)
        P = fibre_product(R, S)
        assert P.algebra.length == R.length + S.length - 1
        assert P.algebra.edim == R.edim + S.edim
        assert P.algebra.type == R.type + S.type
        assert not P.algebra.is_gorenstein()
        Q = connected_sum(R, S)
        if Q.trivial:
            assert min(R.length, S.length) == 2
            continue
        assert Q.algebra.is_gorenstein()
        assert Q.algebra.length == R.length + S.length - 2
        if R.loewy_length >= 2 and S.loewy_length >= 2:
            assert Q.algebra.edim == R.edim + S.edim


def test_quotient_by_socle_splits_as_fibre_product():
    R = algebra_from_text("field QQ; vars Y; ideal Y^3")
    S = algebra_from_text("field QQ; vars Z; ideal Z^3")
    Q = connected_sum(R, S).algebra
    lhs = modulo_socle(Q).pres
    rhs = fibre_product(modulo_socle(R), modulo_socle(S)).algebra.pres
    assert lhs == rhs


def test_apolar_sum_of_squares():
    dual = PolyRing(QQ, ("Z1", "Z2"))
    A = apolar_algebra(parse_polynomial("Z1^2+Z2^2", dual))
    assert A.ring.names == ("X1", "X2")
    assert gb_strings(A) == ["X1*X2", "X1^2 - X2^2", "X2^3"]


def test_apolar_single_variable():
    dual = PolyRing(QQ, ("Y",))
    A = apolar_algebra(parse_polynomial("Y^2", dual))
    assert A.ring.names == ("X",)
    assert gb_strings(A) == ["X^3"]


def test_apolar_mixed_degrees():
    dual = PolyRing(QQ, ("Y", "Z"))
    A = apolar_algebra(parse_polynomial("Y^3+Z^2", dual), ("U", "V"))
    assert gb_strings(A) == ["U*V", "U^3 - 3*V^2", "V^3"]
    B = connected_sum(algebra_from_text("field QQ; vars U; ideal U^4"),
                      algebra_from_text("field QQ; vars V; ideal V^3"),
                      unit=3).algebra
    assert A.pres == B.pres


def test_apolar_characteristic_guard():
    dual = PolyRing(GF(3), ("Y",))
    with pytest.raises(CharacteristicError):
        apolar_algebra(parse_polynomial("Y^3", dual))


def test_apolar_length_invariant_under_linear_substitution():
    rng = random.Random(13)
    k = GF(101)
    dual = PolyRing(k, ("w1", "w2"))
    F = parse_polynomial("w1^3 + w1*w2^2 + w2^2", dual)
    base = apolar_algebra(F, ("X1", "X2")).length
    for _ in range(5):
        while True:
            a, b, c, d = (rng.randrange(101) for _ in range(4))
            if (a * d - b * c) % 101:
                break
        w1 = dual.var(0).scale(a) + dual.var(1).scale(b)
        w2 = dual.var(0).scale(c) + dual.var(1).scale(d)
        moved = F.compose(dual, [w1, w2])
        assert apolar_algebra(moved, ("X1", "X2")).length == base


def test_apolar_sum_check_examples():
    ring_y = PolyRing(QQ, ("Y",))
    ring_z = PolyRing(QQ, ("Z",))
    cubic_pair = apolar_sum_check(parse_polynomial("Y^3", ring_y),
                                  parse_polynomial("Z^3", ring_z))
    assert cubic_pair.matched and cubic_pair.unit == 1
    stretched = apolar_sum_check(parse_polynomial("Y^3", ring_y),
                                 parse_polynomial("Z^2", ring_z))
    assert stretched.matched
    quadrics = apolar_sum_check(parse_polynomial("Y^2", ring_y),
                                parse_polynomial("Z^2", ring_z))
    assert quadrics.matched and quadrics.unit == 1
