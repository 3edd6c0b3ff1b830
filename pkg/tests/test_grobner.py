"""Groebner engine: golden bases, normal forms, contraction, zero-dimensionality."""

import random

import pytest

from artinsum import GF, QQ, Block, Grevlex, IdealPresentation, PolyRing, normal_form
from artinsum import parse_presentation
from artinsum.errors import ResourceGuardError
from artinsum.grobner import s_polynomial
from artinsum.quotient import build_algebra

from oracles import ideal_member, same_ideal, subring_quotient_dimension


def ideal_of(text):
    ring, gens = parse_presentation(text)
    return IdealPresentation(ring, gens)


def test_principal_monomial_ideal():
    I = ideal_of("field QQ; vars X; ideal X")
    assert [str(g) for g in I.groebner_basis()] == ["X"]


def test_hand_run_basis():
    # one S-polynomial (Z^3) completes the basis; verified by membership both ways
    I = ideal_of("field QQ; vars Y Z; ideal Y*Z, Z^2-Y^3")
    gb = I.groebner_basis()
    assert sorted(str(g) for g in gb) == ["Y*Z", "Y^3 - Z^2", "Z^3"]
    basis_ideal = IdealPresentation(I.ring, list(gb))
    assert same_ideal(I, basis_ideal)


def test_elimination_golden_case():
    I = ideal_of("field QQ; vars Y1 Z1 Z2; ideal Y1*Z1-Z2^2, Y1^2, Z1^2")
    order = Block((0,), (1, 2))
    gb = I.groebner_basis(order)
    in_back = [g for g in gb if 0 not in g.support_vars()]
    assert sorted(str(g) for g in in_back) == ["Z1*Z2^2", "Z1^2", "Z2^4"]


def test_normal_form_membership():
    I = ideal_of("field QQ; vars Y Z; ideal Y*Z, Z^2-Y^3")
    ring = I.ring
    y, z = ring.gens()
    f = (y ** 2) * (y * z) + z.scale(3) * (z * z - y ** 3)
    assert I.normal_form(f).is_zero()


def test_normal_form_explicit_cofactors():
    # Y^4 = Y*(Y^3 - Z^2) + Z*(Y*Z), checked by expansion
    ring, _ = parse_presentation("field QQ; vars Y Z; ideal Y*Z")
    y, z = ring.gens()
    expansion = y * (y ** 3 - z ** 2) + z * (y * z)
    assert expansion == y ** 4
    I = ideal_of("field QQ; vars Y Z; ideal Y*Z, Z^2-Y^3")
    assert I.normal_form(y ** 4).is_zero()


def test_normal_form_standard_monomial():
    I = ideal_of("field QQ; vars Y Z; ideal Y*Z, Z^2-Y^3")
    ring = I.ring
    z = ring.var(1)
    assert I.normal_form(z * z) == z * z


def test_contract_golden():
    I = ideal_of("field QQ; vars Y1 Z1 Z2; ideal Y1*Z1-Z2^2, Y1^2, Z1^2")
    C = I.contract(["Z1", "Z2"])
    assert sorted(str(g) for g in C.groebner_basis()) == ["Z1*Z2^2", "Z1^2", "Z2^4"]


def test_contract_derived():
    I = ideal_of("field QQ; vars Y Z; ideal Y*Z, Y^3-Z^2")
    C = I.contract(["Y"])
    assert [str(g) for g in C.groebner_basis()] == ["Y^4"]
    # minimality: Y^3 is not in the ideal
    assert not I.contains(I.ring.var(0) ** 3)


def test_contract_trivial():
    I = ideal_of("field QQ; vars Y Z; ideal Y^2")
    C = I.contract(["Z"])
    assert C.generators == ()


def test_contract_empty_keep():
    I = ideal_of("field QQ; vars Y Z; ideal Y^2")
    C = I.contract([])
    assert C.generators == ()
    J = ideal_of("field QQ; vars Y; ideal Y, Y-1")
    assert J.contract([]).generators != ()


def test_zero_dimensionality():
    assert ideal_of("field QQ; vars Y Z; ideal Y^2, Z^2, Y*Z").is_zero_dimensional()
    assert not ideal_of("field QQ; vars Y Z; ideal Y*Z").is_zero_dimensional()
    assert ideal_of(
        "field QQ; vars Y1 Z1 Z2; ideal Y1*Z1-Z2^2, Y1^2, Z1^2").is_zero_dimensional()


def test_buchberger_fixed_point_and_idempotence():
    I = ideal_of("field GF(101); vars Y1 Z1 Z2; ideal Y1*Z1-Z2^2, Y1^2+Z1*Z2, Z1^3")
    gb = I.groebner_basis()
    order = I.ring.order
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            s = s_polynomial(gb[i], gb[j], order)
            assert normal_form(s, list(gb), order).is_zero()
    again = IdealPresentation(I.ring, list(gb)).groebner_basis()
    assert again == gb


def test_membership_oracle_random_cofactors():
    rng = random.Random(11)
    I = ideal_of("field GF(101); vars Y Z; ideal Y*Z, Z^2-Y^3")
    ring = I.ring
    monos = [m for d in range(3) for m in ring.monomials_of_degree(d)]
    for _ in range(25):
        f = ring.zero
        for g in I.generators:
            mono = monos[rng.randrange(len(monos))]
            f = f + g.mul_term(mono, rng.randrange(101))
        assert I.normal_form(f).is_zero()


def test_contraction_soundness_and_completeness():
    rng = random.Random(23)
    ring = PolyRing(GF(101), ("Y", "Z1", "Z2"))
    for _ in range(8):
        gens = [ring.var(0) ** 2, ring.var(1) ** 2, ring.var(2) ** 3]
        mixer = ring.zero
        for d in (2, 3):
            for m in ring.monomials_of_degree(d):
                c = rng.randrange(101)
                if c and rng.random() < 0.4:
                    mixer = mixer + ring.monomial(m, c)
        if not mixer.is_zero():
            gens.append(mixer)
        I = IdealPresentation(ring, gens)
        if not I.is_zero_dimensional() or I.is_unit_ideal():
            continue
        keep = ["Z1", "Z2"]
        C = I.contract(keep)
        # soundness: every contraction generator lies in I and only uses kept vars
        for g in C.generators:
            lifted = g.rename_into(ring)
            assert I.contains(lifted)
            assert g.support_vars() <= {0, 1}
        # completeness: standard-monomial count equals the subalgebra dimension
        A = build_algebra(I)
        expected = subring_quotient_dimension(A, keep)
        assert len(C.standard_monomials()) == expected


def test_degree_guard_trips():
    I = ideal_of("field QQ; vars Y Z; ideal Y*Z, Z^2-Y^3")
    with pytest.raises(ResourceGuardError):
        I.groebner_basis(max_degree=2)


def test_ideal_membership_oracle_is_two_sided():
    ring, gens = parse_presentation("field QQ; vars Y Z; ideal Y*Z, Z^2-Y^3")
    y, z = ring.gens()
    assert ideal_member(z ** 3, gens)
    assert not ideal_member(z ** 2, gens)
