"""Constructors: fibre products, connected sums, and apolar algebras.

Trivial cases (a residue-field factor, or a length-two connected-sum factor)
return the surviving algebra with an explicit flag rather than erroring.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (ArtinsumError, BadSocleError, CharacteristicError,
                     NotGorensteinError, PreconditionError, RingMismatchError)
from .grobner import IdealPresentation
from .poly import Polynomial, PolyRing
from .quotient import ArtinAlgebra, build_algebra, quotient_algebra


@dataclass
class SumResult:
    """Outcome of a fibre product or connected sum."""

    algebra: ArtinAlgebra
    trivial: bool = False
    unit: object = None
    socle_left: Polynomial = None
    socle_right: Polynomial = None
    left_names: tuple = ()
    right_names: tuple = ()


def _combined_ring(R, S):
    if R.field != S.field:
        raise RingMismatchError("factors over different fields")
    overlap = set(R.ring.names) & set(S.ring.names)
    if overlap:
        raise RingMismatchError(f"variable collision between factors: {sorted(overlap)}")
    return PolyRing(R.field, R.ring.names + S.ring.names)


def _embed(poly, big, offset):
    index_map = [offset + i for i in range(poly.ring.nvars)]
    return poly.rename_into(big, index_map)


def fibre_product(R, S):
    """R x_k S as a quotient of the concatenated polynomial ring.

    The defining ideal joins both factors' ideals with all cross products of
    their variables.  A residue-field factor gives the trivial product.
    """
    if R.length == 1:
        return SumResult(S, trivial=True)
    if S.length == 1:
        return SumResult(R, trivial=True)
    big = _combined_ring(R, S)
    m = R.ring.nvars
    gens = [_embed(g, big, 0) for g in R.pres.generators]
    gens += [_embed(g, big, m) for g in S.pres.generators]
    gens += [big.var(i) * big.var(m + j) for i in range(m) for j in range(S.ring.nvars)]
    P = build_algebra(big, gens)
    if P.length != R.length + S.length - 1:
        raise ArtinsumError("fibre product length identity failed")
    if P.edim != R.edim + S.edim or P.type != R.type + S.type:
        raise ArtinsumError("fibre product additivity failed")
    return SumResult(P, trivial=False,
                     left_names=R.ring.names, right_names=S.ring.names)


def socle_generator(A):
    """Deterministic socle generator of a Gorenstein algebra, lifted verbatim.

    The unique echelon representative, scaled so its largest standard
    monomial under the default order has coefficient one.
    """
    if not A.is_gorenstein():
        raise NotGorensteinError(f"socle has dimension {A.type}, not 1")
    vec = A.socle().rows[0]
    lead = max(i for i, c in enumerate(vec) if c != A.field.zero)
    inv = A.field.inv(vec[lead])
    vec = np.asarray([A.field.mul(inv, c) for c in vec], dtype=vec.dtype)
    return A.lift(vec)


def _validate_socle(A, poly, side):
    vec = A.vector(poly)
    if not np.any(vec != A.field.zero):
        raise BadSocleError(f"{side} socle expression vanishes in the quotient")
    if not A.socle().contains(vec):
        raise BadSocleError(f"{side} socle expression does not lie in the socle")
    return A.lift(vec)


def connected_sum(R, S, unit=1, socle_left=None, socle_right=None):
    """The connected sum of two Gorenstein factors along chosen socle generators.

    Quotients the fibre product by (socle_left - unit * socle_right).  When a
    factor has length two the sum collapses to the other factor, returned
    with the trivial flag.
    """
    for A in (R, S):
        if not A.is_gorenstein():
            raise NotGorensteinError("connected sum requires Gorenstein factors")
        if A.length == 1:
            raise PreconditionError("connected sum factors must differ from the base field")
    unit = R.field.coerce(unit)
    if unit == R.field.zero:
        raise PreconditionError("the socle-matching unit must be nonzero")
    if S.length == 2:
        return SumResult(R, trivial=True, unit=unit)
    if R.length == 2:
        return SumResult(S, trivial=True, unit=unit)
    delta_r = socle_generator(R) if socle_left is None else _validate_socle(R, socle_left, "left")
    delta_s = socle_generator(S) if socle_right is None else _validate_socle(S, socle_right, "right")
    big = _combined_ring(R, S)
    m = R.ring.nvars
    gens = [_embed(g, big, 0) for g in R.pres.generators]
    gens += [_embed(g, big, m) for g in S.pres.generators]
    gens += [big.var(i) * big.var(m + j) for i in range(m) for j in range(S.ring.nvars)]
    gens.append(_embed(delta_r, big, 0) - _embed(delta_s, big, m).scale(unit))
    Q = build_algebra(big, gens)
    if not Q.is_gorenstein():
        raise ArtinsumError("connected sum is not Gorenstein")
    if Q.length != R.length + S.length - 2:
        raise ArtinsumError("connected sum length identity failed")
    if R.loewy_length >= 2 and S.loewy_length >= 2 and Q.edim != R.edim + S.edim:
        raise ArtinsumError("connected sum embedding-dimension identity failed")
    return SumResult(Q, trivial=False, unit=unit,
                     socle_left=delta_r, socle_right=delta_s,
                     left_names=R.ring.names, right_names=S.ring.names)


def modulo_socle(A):
    """A / soc(A); for Gorenstein input this kills the single socle generator."""
    return quotient_algebra(A, A.socle().lifts())


# ---------------------------------------------------------------------------
# apolar algebras (Macaulay inverse systems, differentiation action)

def default_operator_names(n):
    return ("X",) if n == 1 else tuple(f"X{i + 1}" for i in range(n))


def _apply_operator(exps, F):
    out = F
    for i, e in enumerate(exps):
        for _ in range(e):
            out = out.derivative(i)
            if out.is_zero():
                return out
    return out


def apolar_algebra(F, operator_names=None):
    """k[X] / Ann(F) with the variables acting on F by partial differentiation.

    Needs characteristic zero or larger than deg F.  The dimension equals the
    span of F and its iterated derivatives, and the socle degree is deg F.
    """
    if F.is_zero():
        raise PreconditionError("the dual polynomial must be nonzero")
    dual = F.ring
    field = dual.field
    degree = F.total_degree()
    if field.char != 0 and field.char <= degree:
        raise CharacteristicError(
            f"characteristic {field.char} too small for dual degree {degree}")
    names = tuple(operator_names) if operator_names else default_operator_names(dual.nvars)
    if len(names) != dual.nvars:
        raise ValueError("one operator name per dual variable required")
    ops = PolyRing(field, names)
    cap = degree + 1
    monos = []
    for d in range(cap + 1):
        monos.extend(ops.monomials_of_degree(d))
    dual_monos = []
    seen = set()
    derived = [_apply_operator(m, F) for m in monos]
    for p in derived:
        for t in p.terms:
            if t not in seen:
                seen.add(t)
                dual_monos.append(t)
    col = {t: j for j, t in enumerate(dual_monos)}
    mat = linalg.zeros(field, (len(monos), max(len(dual_monos), 1)))
    for i, p in enumerate(derived):
        for t, c in p.terms.items():
            mat[i, col[t]] = c
    rows = linalg.left_kernel(field, mat)
    gens = [Polynomial(ops, {m: c for m, c in zip(monos, r) if c != field.zero})
            for r in rows]
    A = build_algebra(ops, gens)
    inverse_system_dim = len(monos) - rows.shape[0]
    if A.length != inverse_system_dim:
        raise ArtinsumError("apolar dimension disagrees with the derivative span")
    if A.loewy_length != degree or not A.is_gorenstein():
        raise ArtinsumError("apolar algebra failed the duality sanity checks")
    return A


@dataclass
class ApolarSumReport:
    matched: bool
    unit: object
    combined: IdealPresentation
    reconstructed: IdealPresentation
    detail: str = ""


def apolar_sum_check(F, G):
    """Compare apolar(F + G) with the connected sum of apolar(F) and apolar(G).

    Operator variables are numbered consecutively across the two factors so
    both sides live in the same ring; the matching unit is recovered from the
    socle images and reported.  A mismatch is reported, not raised.
    """
    if set(F.ring.names) & set(G.ring.names):
        raise RingMismatchError("dual variable sets must be disjoint")
    if F.ring.field != G.ring.field:
        raise RingMismatchError("dual polynomials over different fields")
    m, n = F.ring.nvars, G.ring.nvars
    all_ops = tuple(f"X{i + 1}" for i in range(m + n))
    R = apolar_algebra(F, all_ops[:m])
    S = apolar_algebra(G, all_ops[m:])
    dual = PolyRing(F.ring.field, F.ring.names + G.ring.names)
    H = _embed(F, dual, 0) + _embed(G, dual, m)
    combined = apolar_algebra(H, all_ops)
    delta_r = _embed(socle_generator(R), combined.ring, 0)
    delta_s = _embed(socle_generator(S), combined.ring, m)
    vr = combined.vector(delta_r)
    vs = combined.vector(delta_s)
    lead = [i for i, c in enumerate(vs) if c != combined.field.zero]
    if not lead or not np.any(vr != combined.field.zero):
        return ApolarSumReport(False, None, combined.pres, None,
                               detail="socle images vanish in the combined algebra")
    unit = combined.field.div(vr[lead[0]], vs[lead[0]])
    scaled = np.asarray([combined.field.mul(unit, c) for c in vs], dtype=vs.dtype)
    if np.any(scaled != vr):
        return ApolarSumReport(False, None, combined.pres, None,
                               detail="socle images are not proportional")
    result = connected_sum(R, S, unit=unit)
    lhs = combined.pres.groebner_basis()
    rhs = result.algebra.pres.groebner_basis()
    matched = (combined.ring == result.algebra.ring and lhs == rhs)
    return ApolarSumReport(matched, unit, combined.pres, result.algebra.pres)
