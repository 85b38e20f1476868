"""Quandle coverings at desk scale: the covering predicate, lifting
biquandle structures along coverings by direct search, and the related
automorphism checks.

Lifting is solved by constraint search over fiber-constant automorphism
families, not through fundamental-group machinery; a failed search is
reported as "not found within search", never as non-existence.
"""

from __future__ import annotations

import numpy as np

from .automorphisms import quandle_aut
from .core import FiniteQuandle, Permutation
from .errors import DomainError
from .structures import BiquandleStructure, biquandle_from_structure

_UNSET = object()


def is_quandle_covering(p, qt: FiniteQuandle, q: FiniteQuandle) -> bool:
    """p is a surjective homomorphism and collapses right translations:
    p(x) = p(y) implies the columns of x and y coincide."""
    p = np.asarray(p, dtype=np.int64)
    if p.shape != (qt.n,) or p.min() < 0 or p.max() >= q.n:
        raise DomainError("p must map the covering's elements into the base")
    if len(set(p.tolist())) != q.n:
        return False
    if not np.array_equal(p[qt.table], q.table[np.ix_(p, p)]):
        return False
    cols = {}
    for x in range(qt.n):
        key = int(p[x])
        col = qt.table[:, x].tobytes()
        if cols.setdefault(key, col) != col:
            return False
    return True


def image_quandle_SQ(q: FiniteQuandle):
    """The quandle on the distinct right translations with conjugation
    operation A*B = B A B^{-1}, together with the natural projection.

    Returns (image quandle, p) with p[x] the class of x's translation;
    p is always a covering of the result.
    """
    classes = {}
    p = np.empty(q.n, dtype=np.int64)
    reps = []
    for x in range(q.n):
        key = q.table[:, x].tobytes()
        if key not in classes:
            classes[key] = len(reps)
            reps.append(x)
        p[x] = classes[key]
    m = len(reps)
    t = np.empty((m, m), dtype=np.int64)
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            t[i, j] = p[q.op(x, y)]
    return FiniteQuandle(t), p


def lift_structure_search(p, qt: FiniteQuandle, q: FiniteQuandle, a: BiquandleStructure):
    """First fiber-constant automorphism family on the covering satisfying
    the commuting squares p(alpha_y(x)) = beta_{p(y)}(p(x)) and the two
    structure conditions, in deterministic order; None when the search is
    exhausted without a hit."""
    p = np.asarray(p, dtype=np.int64)
    if not is_quandle_covering(p, qt, q):
        raise DomainError("p is not a quandle covering")
    if a.base != q:
        raise DomainError("structure must live on the covering's base")
    aut = sorted(quandle_aut(qt).elements)
    beta_arr = [b.array() for b in a.betas]
    # candidates per base element: lifts of beta_y through p
    cand = []
    for y in range(q.n):
        by = beta_arr[y]
        cand.append([g for g in aut if np.array_equal(p[g.array()], by[p])])
        if not cand[-1]:
            return None
    chosen = [None] * q.n

    def rec(y):
        if y == q.n:
            betas = tuple(chosen[int(p[x])] for x in range(qt.n))
            try:
                return BiquandleStructure(qt, betas)
            except DomainError:
                return None
        for g in cand[y]:
            chosen[y] = g
            got = rec(y + 1)
            if got is not None:
                return got
        chosen[y] = None
        return None

    return rec(0)


def verify_covering_biquandle_hom(p, lifted: BiquandleStructure, base: BiquandleStructure) -> bool:
    """p preserves both operations between the induced biquandles."""
    p = np.asarray(p, dtype=np.int64)
    bt = biquandle_from_structure(lifted)
    bb = biquandle_from_structure(base)
    ok_u = np.array_equal(p[bt.under], bb.under[np.ix_(p, p)])
    ok_o = np.array_equal(p[bt.over], bb.over[np.ix_(p, p)])
    return bool(ok_u and ok_o)


def verify_lift_normalizer(p, lifted: BiquandleStructure, base: BiquandleStructure):
    """Whether every automorphism of the base biquandle lifts through p to
    an automorphism of the covering normalizing the lifted family.

    Returns True/False, or None (inconclusive) when some automorphism of
    the base biquandle admits no lift at all.
    """
    from .automorphisms import biquandle_aut

    p = np.asarray(p, dtype=np.int64)
    qt = lifted.base
    bb = biquandle_from_structure(base)
    aut_b = biquandle_aut(bb)
    aut_t = sorted(quandle_aut(qt).elements)
    fam = set(lifted.betas)
    result = True
    for phi in sorted(aut_b.elements):
        phi_arr = phi.array()
        lifts = [g for g in aut_t if np.array_equal(p[g.array()], phi_arr[p])]
        if not lifts:
            return None
        if not any({g * f * g.inverse() for f in fam} == fam for g in lifts):
            result = False
    return result
