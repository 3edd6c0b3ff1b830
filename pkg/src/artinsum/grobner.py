"""Reduced Groebner bases (Buchberger), normal forms, and elimination.

The pair strategy is the normal one (smallest lcm degree first, ties broken
by the term order and then pair indices) with the coprime-lcm and chain
criteria.  Bases are fully reduced and monic, so they are unique per order
and ideal equality is basis equality.
"""

import os

from .errors import ResourceGuardError, RingMismatchError
from .poly import (Block, Grevlex, Polynomial, PolyRing, mono_coprime, mono_deg,
                   mono_div, mono_lcm, mono_mul)

DEFAULT_MAX_DEGREE = 64


def degree_guard():
    """Total-degree cap for intermediate polynomials; env-overridable."""
    value = os.environ.get("ARTINSUM_MAX_DEGREE")
    return int(value) if value else DEFAULT_MAX_DEGREE


def _check_degree(poly, cap):
    if poly.total_degree() > cap:
        raise ResourceGuardError(
            f"intermediate polynomial degree {poly.total_degree()} exceeds guard {cap}")


def normal_form(f, basis, order=None, max_degree=None):
    """Unique remainder of f under full reduction by `basis`.

    Zero iff f lies in the ideal when `basis` is a Groebner basis; every
    term of the remainder is then a standard monomial.
    """
    ring = f.ring
    order = order or ring.order
    cap = max_degree if max_degree is not None else degree_guard()
    for g in basis:
        if g.ring != ring:
            raise RingMismatchError("normal form arguments in different rings")
    leads = [(g.leading(order)) for g in basis]
    fld = ring.field
    remainder = {}
    work = dict(f.terms)
    while work:
        m = order.max_term(work)
        c = work[m]
        for g, (lm, lc) in zip(basis, leads):
            q = mono_div(m, lm)
            if q is not None:
                factor = fld.div(c, lc)
                del work[m]
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    key = mono_mul(q, gm)
                    if mono_deg(key) > cap:
                        raise ResourceGuardError(
                            f"reduction exceeded the degree guard {cap}")
                    s = fld.sub(work.get(key, fld.zero), fld.mul(factor, gc))
                    if s == fld.zero:
                        work.pop(key, None)
                    else:
                        work[key] = s
                break
        else:
            remainder[m] = c
            del work[m]
    return Polynomial(ring, remainder)


def s_polynomial(f, g, order):
    lm_f, lc_f = f.leading(order)
    lm_g, lc_g = g.leading(order)
    lcm = mono_lcm(lm_f, lm_g)
    fld = f.ring.field
    a = f.mul_term(mono_div(lcm, lm_f), fld.inv(lc_f))
    b = g.mul_term(mono_div(lcm, lm_g), fld.inv(lc_g))
    return a - b


def _minimalize(basis, order):
    kept = []
    for f in sorted(basis, key=lambda h: order.key(h.leading(order)[0])):
        lm = f.leading(order)[0]
        if all(mono_div(lm, g.leading(order)[0]) is None for g in kept):
            kept.append(f)
    return kept


def _interreduce(basis, order, cap):
    out = []
    for i, f in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        r = normal_form(f, others, order, cap)
        if not r.is_zero():
            out.append(r.monic(order))
    return sorted(out, key=lambda h: order.key(h.leading(order)[0]))


def buchberger(generators, order, max_degree=None):
    """The unique reduced Groebner basis of the given generators."""
    cap = max_degree if max_degree is not None else degree_guard()
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return []
    basis = []
    for g in gens:
        _check_degree(g, cap)
        basis.append(g.monic(order))
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def pair_key(p):
        lcm = mono_lcm(basis[p[0]].leading(order)[0], basis[p[1]].leading(order)[0])
        return (mono_deg(lcm), order.key(lcm), p)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        lm_i = basis[i].leading(order)[0]
        lm_j = basis[j].leading(order)[0]
        if mono_coprime(lm_i, lm_j):
            continue
        lcm = mono_lcm(lm_i, lm_j)
        # chain criterion: an element whose lead divides the lcm, with both
        # companion pairs already handled, makes this pair redundant
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_div(lcm, basis[k].leading(order)[0]) is not None:
                a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            continue
        s = s_polynomial(basis[i], basis[j], order)
        r = normal_form(s, basis, order, cap)
        if not r.is_zero():
            _check_degree(r, cap)
            basis.append(r.monic(order))
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))
    return _interreduce(_minimalize(basis, order), order, cap)


class IdealPresentation:
    """An ideal of a polynomial ring, with cached reduced Groebner bases."""

    def __init__(self, ring, generators):
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator outside the ambient ring")
        self.ring = ring
        self.generators = tuple(g for g in generators if not g.is_zero())
        self._gb_cache = {}

    def groebner_basis(self, order=None, max_degree=None):
        order = order or self.ring.order
        cached = self._gb_cache.get(order)
        if cached is None:
            cached = tuple(buchberger(list(self.generators), order, max_degree))
            self._gb_cache[order] = cached
        return cached

    def normal_form(self, f, order=None):
        order = order or self.ring.order
        return normal_form(f, self.groebner_basis(order), order)

    def contains(self, f):
        return self.normal_form(f).is_zero()

    def is_unit_ideal(self):
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].total_degree() == 0

    def leading_monomials(self, order=None):
        order = order or self.ring.order
        return [g.leading(order)[0] for g in self.groebner_basis(order)]

    def is_zero_dimensional(self):
        """True iff every variable has a pure power among the leading terms."""
        if self.ring.nvars == 0:
            return True
        leads = self.leading_monomials()
        for i in range(self.ring.nvars):
            if not any(m[i] > 0 and all(e == 0 for k, e in enumerate(m) if k != i)
                       for m in leads):
                return False
        return True

    def contract(self, keep):
        """Generators of the contraction to the subring on the kept variables.

        `keep` is a list of variable names or indices; the elimination runs
        under a block order with the dropped variables in front.
        """
        ring = self.ring
        keep_idx = []
        for v in keep:
            keep_idx.append(ring.index[v] if isinstance(v, str) else int(v))
        keep_idx = sorted(set(keep_idx))
        drop_idx = [i for i in range(ring.nvars) if i not in set(keep_idx)]
        sub = PolyRing(ring.field, [ring.names[i] for i in keep_idx])
        if not keep_idx:
            gens = [sub.one] if self.is_unit_ideal() else []
            return IdealPresentation(sub, gens)
        order = Block(drop_idx, keep_idx) if drop_idx else ring.order
        gb = self.groebner_basis(order)
        drop = set(drop_idx)
        index_map = {old: new for new, old in enumerate(keep_idx)}
        kept = []
        for g in gb:
            if g.support_vars() & drop:
                continue
            kept.append(g.rename_into(sub, [index_map.get(i, 0) for i in range(ring.nvars)]))
        result = IdealPresentation(sub, kept)
        # the elimination theorem hands us a reduced basis already; reduce
        # once more so the cache is canonical under the subring order
        result._gb_cache[sub.order] = tuple(buchberger(kept, sub.order))
        return result

    def standard_monomials(self, order=None):
        """All monomials outside the leading-term ideal, sorted ascending."""
        order = order or self.ring.order
        if not self.is_zero_dimensional():
            return None
        if self.is_unit_ideal():
            return []
        leads = self.leading_monomials(order)
        n = self.ring.nvars
        if n == 0:
            return [()]
        bounds = []
        for i in range(n):
            powers = [m[i] for m in leads
                      if m[i] > 0 and all(e == 0 for k, e in enumerate(m) if k != i)]
            bounds.append(min(powers))
        out = []

        def rec(prefix):
            if len(prefix) == n:
                m = tuple(prefix)
                if all(mono_div(m, lm) is None for lm in leads):
                    out.append(m)
                return
            for e in range(bounds[len(prefix)]):
                rec(prefix + [e])

        rec([])
        out.sort(key=order.key)
        return out

    def __eq__(self, other):
        """Ideal equality: same ring and identical reduced default-order bases."""
        if not isinstance(other, IdealPresentation):
            return NotImplemented
        return self.ring == other.ring and self.groebner_basis() == other.groebner_basis()

    def __hash__(self):
        return hash((self.ring, self.groebner_basis()))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"<ideal ({gens}) of {self.ring}>"
