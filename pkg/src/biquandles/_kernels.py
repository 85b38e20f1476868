"""Hot loops over operation tables: axiom sweeps, Yang-Baxter checks, map closure.

Every kernel has two implementations with identical semantics: a numba
``@njit`` loop (default) and a pure-numpy batched fallback.  Set the
environment variable ``BIQUANDLES_NO_NUMBA=1`` before import to force the
numpy path; it is also taken automatically when numba is unavailable.
Both paths report the lexicographically first witness, so they are
interchangeable bit for bit.
"""

from __future__ import annotations

import os

import numpy as np

_NO_NUMBA = os.environ.get("BIQUANDLES_NO_NUMBA", "") not in ("", "0")

try:
    if _NO_NUMBA:
        raise ImportError("numba disabled by BIQUANDLES_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the env flag
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


# ---------------------------------------------------------------------------
# right self-distributivity: (a*b)*c == (a*c)*(b*c)


@njit(cache=True)
def _r2_violation_loop(t):
    n = t.shape[0]
    for a in range(n):
        for b in range(n):
            ab = t[a, b]
            for c in range(n):
                if t[ab, c] != t[t[a, c], t[b, c]]:
                    return a, b, c
    return -1, -1, -1


def _r2_violation_np(t):
    n = t.shape[0]
    for a in range(n):
        lhs = t[t[a]]                      # lhs[b, c] = (a*b)*c
        rhs = t[t[a][None, :], t]          # rhs[b, c] = (a*c)*(b*c)
        bad = lhs != rhs
        if bad.any():
            b, c = np.unravel_index(int(np.argmax(bad)), bad.shape)
            return a, int(b), int(c)
    return -1, -1, -1


# ---------------------------------------------------------------------------
# biquandle exchange identities; codes 0, 1, 2 for the three shapes
#   0: (x u y) u (z u y) == (x u z) u (y o z)
#   1: (x u y) o (z u y) == (x o z) u (y o z)
#   2: (x o y) o (z o y) == (x o z) o (y u z)
# with u = under table, o = over table


@njit(cache=True)
def _exchange_violation_loop(u, o):
    n = u.shape[0]
    for x in range(n):
        for y in range(n):
            xuy = u[x, y]
            xoy = o[x, y]
            for z in range(n):
                zuy = u[z, y]
                zoy = o[z, y]
                if u[xuy, zuy] != u[u[x, z], o[y, z]]:
                    return 0, x, y, z
                if o[xuy, zuy] != u[o[x, z], o[y, z]]:
                    return 1, x, y, z
                if o[xoy, zoy] != o[o[x, z], u[y, z]]:
                    return 2, x, y, z
    return -1, -1, -1, -1


def _exchange_violation_np(u, o):
    n = u.shape[0]
    for x in range(n):
        xu = u[x][:, None]                 # column over y
        xo = o[x][:, None]
        bad0 = u[xu, u.T] != u[u[x][None, :], o]   # [y, z] grids
        bad1 = o[xu, u.T] != u[o[x][None, :], o]
        bad2 = o[xo, o.T] != o[o[x][None, :], u]
        if bad0.any() or bad1.any() or bad2.any():
            best = None
            for code, bad in ((0, bad0), (1, bad1), (2, bad2)):
                if bad.any():
                    y, z = np.unravel_index(int(np.argmax(bad)), bad.shape)
                    key = (int(y), int(z), code)
                    if best is None or key < best:
                        best = key
            y, z, code = best
            return code, x, y, z
    return -1, -1, -1, -1


# ---------------------------------------------------------------------------
# Yang-Baxter braid relation for r(a, b) = (w, u[a, w]) with w = oinv[b, a],
# where oinv[v, y] is the inverse of the over-table column y.
# Checks (r x id)(id x r)(r x id) == (id x r)(r x id)(id x r) on all triples.


@njit(cache=True)
def _ybe_violation_loop(u, o, oinv):
    n = u.shape[0]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                # left composite, innermost (r x id) first
                w = oinv[b, a]
                p, q, r_ = w, u[a, w], c
                w = oinv[r_, q]
                q, r_ = w, u[q, w]
                w = oinv[q, p]
                l1, l2, l3 = w, u[p, w], r_
                # right composite, innermost (id x r) first
                w = oinv[c, b]
                p, q, r_ = a, w, u[b, w]
                w = oinv[q, p]
                p, q = w, u[p, w]
                w = oinv[r_, q]
                r1, r2, r3 = p, w, u[q, w]
                if l1 != r1 or l2 != r2 or l3 != r3:
                    return a, b, c
    return -1, -1, -1


def _ybe_violation_np(u, o, oinv):
    n = u.shape[0]
    idx = np.arange(n)

    def rmap(x, y):
        w = oinv[y, x]
        return w, u[x, w]

    for a in range(n):
        B, C = np.meshgrid(idx, idx, indexing="ij")
        A = np.full_like(B, a)
        p, q = rmap(A, B)
        q, r_ = rmap(q, C)
        l1, l2 = rmap(p, q)
        l3 = r_
        q2, r2_ = rmap(B, C)
        p2, q2 = rmap(A, q2)
        q3, r3 = rmap(q2, r2_)
        bad = (l1 != p2) | (l2 != q3) | (l3 != r3)
        if bad.any():
            b, c = np.unravel_index(int(np.argmax(bad)), bad.shape)
            return a, int(b), int(c)
    return -1, -1, -1


# ---------------------------------------------------------------------------
# closure propagation for bijective-homomorphism search (aut / iso engine).
#
# tA, tB: stacked operation tables, shape (k, n, n).  img maps A-indices to
# B-indices (-1 unassigned), pre is its partial inverse.  Propagates img over
# all products until a fixpoint or a conflict; True on success.


@njit(cache=True)
def _closure_loop(tA, tB, img, pre, dom, ndom, stack, nstack):
    k = tA.shape[0]
    while nstack > 0:
        nstack -= 1
        a = stack[nstack]
        fa = img[a]
        di = 0
        while di < ndom[0]:
            d = dom[di]
            fd = img[d]
            for t in range(k):
                c = tA[t, a, d]
                fc = tB[t, fa, fd]
                if img[c] == -1:
                    if pre[fc] != -1:
                        return False
                    img[c] = fc
                    pre[fc] = c
                    dom[ndom[0]] = c
                    ndom[0] += 1
                    stack[nstack] = c
                    nstack += 1
                elif img[c] != fc:
                    return False
                c = tA[t, d, a]
                fc = tB[t, fd, fa]
                if img[c] == -1:
                    if pre[fc] != -1:
                        return False
                    img[c] = fc
                    pre[fc] = c
                    dom[ndom[0]] = c
                    ndom[0] += 1
                    stack[nstack] = c
                    nstack += 1
                elif img[c] != fc:
                    return False
            di += 1
    return True


def _closure_np(tA, tB, img, pre):
    k = tA.shape[0]
    dom = np.flatnonzero(img >= 0)
    new = dom
    while new.size:
        before = img >= 0
        for t in range(k):
            for rows, cols in ((new, dom), (dom, new)):
                P = tA[t][np.ix_(rows, cols)].ravel()
                I = tB[t][np.ix_(img[rows], img[cols])].ravel()
                unm = img[P] == -1
                img[P[unm]] = I[unm]
                if not np.array_equal(img[P], I):
                    return False
                pre[I[unm]] = P[unm]
                if not np.array_equal(pre[I], P):
                    return False
        now = img >= 0
        new = np.flatnonzero(now & ~before)
        dom = np.flatnonzero(now)
    # batch assignment can overwrite pre on a collision whose older witness
    # is absent from the batch; a final mutual-consistency sweep catches it
    mapped = np.flatnonzero(img >= 0)
    return bool(np.array_equal(pre[img[mapped]], mapped))


def closure_extend(tA, tB, img, pre):
    """Propagate a partial bijective homomorphism to its closure in place.

    Returns False (img/pre then undefined) on conflict.
    """
    if HAVE_NUMBA:
        n = img.shape[0]
        dom0 = np.flatnonzero(img >= 0).astype(np.int64)
        dom = np.empty(n, dtype=np.int64)
        dom[: dom0.size] = dom0
        ndom = np.array([dom0.size], dtype=np.int64)
        stack = np.empty(n, dtype=np.int64)
        stack[: dom0.size] = dom0
        return bool(_closure_loop(tA, tB, img, pre, dom, ndom, stack, dom0.size))
    return _closure_np(tA, tB, img, pre)


def r2_violation(table):
    """First (a, b, c) violating (a*b)*c == (a*c)*(b*c), or None."""
    fn = _r2_violation_loop if HAVE_NUMBA else _r2_violation_np
    a, b, c = fn(table)
    return None if a < 0 else (int(a), int(b), int(c))


def exchange_violation(under, over):
    """First violated exchange identity as (code, x, y, z), or None."""
    fn = _exchange_violation_loop if HAVE_NUMBA else _exchange_violation_np
    code, x, y, z = fn(under, over)
    return None if code < 0 else (int(code), int(x), int(y), int(z))


def ybe_violation(under, over, over_inv):
    """First triple breaking the braid relation of the pair map, or None."""
    fn = _ybe_violation_loop if HAVE_NUMBA else _ybe_violation_np
    a, b, c = fn(under, over, over_inv)
    return None if a < 0 else (int(a), int(b), int(c))
