"""Associated graded rings, linear-socle splitting, the filtration quotient, classifiers."""

import random

import pytest

from artinsum import (GF, QQ, PolyRing, algebra_from_text, apolar_algebra,
                      associated_graded, classify, connected_sum, fibre_product,
                      gls_split, iarrobino, is_gls, parse_polynomial)
from artinsum.errors import PreconditionError
from artinsum.graded import compressed_hilbert
from artinsum.grobner import IdealPresentation

from corpus import random_pair

STRETCHED = "field QQ; vars Y Z; ideal Y*Z, Z^2-Y^3"


def gb_strings(graded):
    return sorted(str(g) for g in graded.presentation.groebner_basis())


def test_initial_forms_of_stretched_example():
    A = algebra_from_text(STRETCHED)
    G = associated_graded(A)
    assert gb_strings(G) == ["Y*Z", "Y^4", "Z^2"]
    assert G.hilbert_function() == A.hilbert_function() == (1, 2, 1, 1)


def test_graded_input_is_fixed_point():
    A = algebra_from_text("field QQ; vars Y; ideal Y^3")
    G = associated_graded(A)
    assert G.presentation == A.pres
    assert G.length == A.length


def test_gr_of_sum_with_unequal_loewy_lengths_splits():
    # factors with Loewy lengths 4 and 2: gr(Q) = gr(R) x_k gr(S/soc S)
    R = algebra_from_text("field QQ; vars Y1 Y2; ideal Y1^2*Y2, Y1^3-Y2^2")
    S = algebra_from_text("field QQ; vars Z; ideal Z^3")
    Q = connected_sum(R, S).algebra
    G = associated_graded(Q)
    gr_r = associated_graded(R)
    s_mod_socle = algebra_from_text("field QQ; vars Z; ideal Z^2")
    fp = fibre_product(gr_r.algebra, s_mod_socle).algebra
    assert G.presentation == fp.pres


def test_graded_socle_degrees():
    A = algebra_from_text(STRETCHED)
    G = associated_graded(A)
    socle = G.socle_by_degree()
    assert {d: r.shape[0] for d, r in socle.items()} == {1: 1, 3: 1}
    assert G.socle_interior_dimension() == 1

    B = associated_graded(algebra_from_text("field QQ; vars Y; ideal Y^3"))
    assert {d: r.shape[0] for d, r in B.socle_by_degree().items()} == {2: 1}
    assert B.linear_socle_rows().shape[0] == 0

    big = associated_graded(algebra_from_text(
        "field QQ; vars Y1 Y2 Z; ideal Y1*Z, Y2*Z, Y1^2*Y2, Y2^2, Y1^4-Z^4"))
    assert big.type == 2
    assert big.socle_interior_dimension() == 2  # one in degree 2, one in degree 4


def test_is_gls_examples():
    G = associated_graded(algebra_from_text(STRETCHED))
    flag, witness = is_gls(G)
    assert flag
    assert witness.tolist() == [[0, 1]]  # the class of Z

    H = associated_graded(algebra_from_text("field QQ; vars Y Z; ideal Y^2, Y*Z, Z^3"))
    flag, witness = is_gls(H)
    assert flag and witness.shape[0] == 1

    flat = associated_graded(algebra_from_text("field QQ; vars Y Z; ideal Y^2, Y*Z, Z^2"))
    with pytest.raises(PreconditionError):
        is_gls(flat)  # Loewy length 1 is outside the contract


def test_gls_split_stretched():
    G = associated_graded(algebra_from_text(STRETCHED))
    split = gls_split(G)
    assert [str(g) for g in split.gorenstein_part.presentation.groebner_basis()] == ["Y^4"]
    assert split.square_zero_part.edim == 1
    assert split.eliminated == ("Z",)
    assert split.gorenstein_part.loewy_length == G.loewy_length


def test_gls_split_gorenstein_input_is_trivial():
    G = associated_graded(algebra_from_text("field QQ; vars Y; ideal Y^4"))
    split = gls_split(G)
    assert split.gorenstein_part.presentation == G.presentation
    assert split.square_zero_part.edim == 0
    assert split.square_zero_part.length == 1


def test_gls_split_short_ring():
    # H = (1, h, n, 1) short: the Gorenstein part has embedding dimension n
    k = GF(101)
    dual = PolyRing(k, ("w1", "w2"))
    R = apolar_algebra(parse_polynomial("w1^3 + w2^3 + w1*w2^2", dual), ("Y1", "Y2"))
    assert R.hilbert_function() == (1, 2, 2, 1)
    S = apolar_algebra(parse_polynomial("u1^2+u2^2", PolyRing(k, ("u1", "u2"))),
                       ("Z1", "Z2"))
    Q = connected_sum(R, S).algebra
    H = Q.hilbert_function()
    assert len(H) == 4 and H[2] >= 2 and H[3] == 1  # short
    G = associated_graded(Q)
    split = gls_split(G)
    assert split.gorenstein_part.edim == H[2]


def _fibre_presentation(a_part, b_part):
    return fibre_product(a_part.algebra, b_part.algebra).algebra.pres


def test_gls_three_way_equivalences():
    # (i) interior socle dim 1; (ii) G = A x_k B after straightening the
    # witness coordinates; (iii) the projection kills nothing in degrees >= 2
    instances = [
        algebra_from_text(STRETCHED),
        algebra_from_text("field QQ; vars Y Z; ideal Y*Z, Y^4-Z^2"),
    ]
    rng = random.Random(17)
    for _ in range(3):
        R, S = random_pair(rng, max_edim=2, max_ll=4, min_ll=2)
        if R.loewy_length >= 3 and S.loewy_length == 2:
            instances.append(connected_sum(R, S).algebra)
    for Q in instances:
        G = associated_graded(Q)
        flag, witness = is_gls(G)
        if not flag:
            continue
        split = gls_split(G)
        A, B = split.gorenstein_part, split.square_zero_part
        # (iii): dimensions drop only in degree one
        ha, hg = A.hilbert_function(), G.hilbert_function()
        n = len(split.witness_forms)
        assert hg[1] == ha[1] + n
        assert all(hg[i] == (ha[i] if i < len(ha) else 0) for i in range(2, len(hg)))
        # (ii): straighten coordinates so the witnesses become the pivots
        ring = G.ring
        images = [ring.var(i) for i in range(ring.nvars)]
        for name, expr in split.substitution.items():
            idx = ring.index[name]
            images[idx] = ring.var(idx) + expr.rename_into(ring)
        moved = [g.compose(ring, images) for g in G.presentation.generators]
        ordered = PolyRing(ring.field, A.ring.names + B.ring.names)
        moved_ideal = IdealPresentation(
            ordered, [g.rename_into(ordered) for g in moved])
        assert moved_ideal == _fibre_presentation(A, B)


def test_iarrobino_values():
    A = algebra_from_text(STRETCHED)
    data, q0 = iarrobino(A)
    assert q0.hilbert_function() == (1, 1, 1, 1)
    assert data.dim == 1

    k = GF(101)
    R = apolar_algebra(parse_polynomial("w1^3 + w2^3 + w1*w2^2", PolyRing(k, ("w1", "w2"))),
                       ("Y1", "Y2"))
    S = apolar_algebra(parse_polynomial("u1^2", PolyRing(k, ("u1",))), ("Z1",))
    Q = connected_sum(R, S).algebra
    assert Q.hilbert_function() == (1, 3, 2, 1)
    _, q0_short = iarrobino(Q)
    assert q0_short.hilbert_function() == (1, 2, 2, 1)

    graded_gor = algebra_from_text("field QQ; vars Y; ideal Y^4")
    data, q0 = iarrobino(graded_gor)
    assert data.dim == 0
    assert q0.presentation == associated_graded(graded_gor).presentation


def test_classify_patterns():
    st = classify(algebra_from_text(STRETCHED))
    assert (st.short, st.stretched, st.compressed) == (False, True, False)
    ci = classify(algebra_from_text("field QQ; vars X1 X2 X3; ideal X1^2, X2^2, X3^2"))
    assert (ci.short, ci.stretched, ci.compressed) == (True, False, True)
    hyp = classify(algebra_from_text("field QQ; vars Y; ideal Y^3"))
    assert (hyp.short, hyp.stretched, hyp.compressed) == (False, True, True)


def test_compressed_hilbert_values():
    assert compressed_hilbert(2, 3) == (1, 2, 2, 1)
    assert compressed_hilbert(3, 4) == (1, 3, 6, 3, 1)


def test_gr_of_fibre_product_is_fibre_of_gr():
    pairs = [(algebra_from_text("field QQ; vars Y; ideal Y^3"),
              algebra_from_text("field QQ; vars Z1 Z2; ideal Z1^2, Z2^2"))]
    rng = random.Random(29)
    pairs.append(random_pair(rng, max_edim=2, max_ll=3))
    for R, S in pairs:
        P = fibre_product(R, S).algebra
        lhs = associated_graded(P).presentation
        rhs = _fibre_presentation(associated_graded(R), associated_graded(S))
        assert lhs == rhs
