"""Operation-table quandles and biquandles, axiom verification, and the
quandle <-> biquandle functors.

Conventions, fixed once for the whole package:
  * elements are dense indices 0..n-1;
  * tables are row-major with table[a][b] = a op b (row = left operand);
  * for a quandle, column b is the right translation S_b : a -> a*b;
  * for a biquandle, under[a][b] = a u b and over[a][b] = a o b, so the
    column maps are alpha_b (under) and beta_b (over).
All values are immutable after validated construction; operations are pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import AxiomError, DomainError, MalformedInput


def as_table(obj, what="table"):
    """Coerce to a read-only square int64 array or raise MalformedInput."""
    try:
        t = np.asarray(obj, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise MalformedInput(f"{what} is not an integer matrix: {e}") from None
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise MalformedInput(f"{what} must be square and nonempty, got shape {t.shape}")
    t = t.copy()
    t.setflags(write=False)
    return t


def _columns_are_permutations(t):
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        return False
    return bool((np.sort(t, axis=0) == np.arange(n)[:, None]).all())


def _first_bad_column(t):
    n = t.shape[0]
    target = np.arange(n)
    for b in range(n):
        col = t[:, b]
        if col.min() < 0 or col.max() >= n or not np.array_equal(np.sort(col), target):
            return b
    return None


def _invert_columns(t):
    """inv with inv[t[a, b], b] = a for every column b."""
    n = t.shape[0]
    inv = np.empty_like(t)
    rows = np.broadcast_to(np.arange(n)[:, None], (n, n))
    cols = np.broadcast_to(np.arange(n)[None, :], (n, n))
    inv[t, cols] = rows
    inv.setflags(write=False)
    return inv


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an axiom sweep: passed iff violations is empty.

    Each violation is (axiom id, witness tuple); by default at most one
    witness per axiom is recorded.
    """

    passed: bool
    violations: tuple = ()

    @staticmethod
    def from_violations(violations):
        vs = tuple(violations)
        return AxiomReport(passed=not vs, violations=vs)


def check_quandle(table, all_witnesses=False):
    """Verify entry range, idempotency (q1), column bijectivity (r1) and
    right self-distributivity (r2); report one witness per violated axiom
    (all witnesses when all_witnesses is set)."""
    t = as_table(table)
    n = t.shape[0]
    bad = []
    inrange = (t >= 0) & (t < n)
    if not inrange.all():
        if all_witnesses:
            bad += [("entry-range", (int(a), int(b))) for a, b in np.argwhere(~inrange)]
        else:
            a, b = np.argwhere(~inrange)[0]
            bad.append(("entry-range", (int(a), int(b))))
        return AxiomReport.from_violations(bad)
    diag = np.diagonal(t) != np.arange(n)
    if diag.any():
        ws = np.flatnonzero(diag)
        bad += [("q1", (int(a),)) for a in (ws if all_witnesses else ws[:1])]
    target = np.arange(n)
    badcols = [b for b in range(n) if not np.array_equal(np.sort(t[:, b]), target)]
    if badcols:
        bad += [("r1", (int(b),)) for b in (badcols if all_witnesses else badcols[:1])]
    if all_witnesses:
        for a in range(n):
            lhs = t[t[a]]
            rhs = t[t[a][None, :], t]
            for b, c in np.argwhere(lhs != rhs):
                bad.append(("r2", (a, int(b), int(c))))
    else:
        w = _kernels.r2_violation(t)
        if w is not None:
            bad.append(("r2", w))
    return AxiomReport.from_violations(bad)


def check_biquandle(under, over, all_witnesses=False):
    """Verify the diagonal axiom, bijectivity of both column families and of
    the pair map S(x, y) = (y o x, x u y), and the three exchange identities
    (3a), (3b), (3c); one witness per axiom unless all_witnesses."""
    u = as_table(under, "under")
    o = as_table(over, "over")
    if u.shape != o.shape:
        raise MalformedInput(f"table sizes differ: {u.shape} vs {o.shape}")
    n = u.shape[0]
    bad = []
    inr = (u >= 0) & (u < n) & (o >= 0) & (o < n)
    if not inr.all():
        a, b = np.argwhere(~inr)[0]
        return AxiomReport.from_violations([("entry-range", (int(a), int(b)))])
    d = np.flatnonzero(np.diagonal(u) != np.diagonal(o))
    if d.size:
        bad += [("b1", (int(a),)) for a in (d if all_witnesses else d[:1])]
    for name, t in (("b2-under-columns", u), ("b2-over-columns", o)):
        if all_witnesses:
            tgt = np.arange(n)
            bad += [
                (name, (int(b),))
                for b in range(n)
                if not np.array_equal(np.sort(t[:, b]), tgt)
            ]
        else:
            b = _first_bad_column(t)
            if b is not None:
                bad.append((name, (int(b),)))
    cols_ok = _columns_are_permutations(u) and _columns_are_permutations(o)
    if cols_ok:
        # pair map S(x, y) = (over[y, x], under[x, y]) on n^2 points
        codes = (o.T * n + u).ravel()
        if not np.array_equal(np.sort(codes), np.arange(n * n)):
            seen = np.zeros(n * n, dtype=bool)
            for x in range(n):
                for y in range(n):
                    cd = codes[x * n + y]
                    if seen[cd]:
                        bad.append(("b2-pairmap", (x, y)))
                        if not all_witnesses:
                            break
                    seen[cd] = True
                else:
                    continue
                break
        names = {0: "b3a", 1: "b3b", 2: "b3c"}
        if all_witnesses:
            for x in range(n):
                xu = u[x][:, None]
                xo = o[x][:, None]
                for code, badm in (
                    (0, u[xu, u.T] != u[u[x][None, :], o]),
                    (1, o[xu, u.T] != u[o[x][None, :], o]),
                    (2, o[xo, o.T] != o[o[x][None, :], u]),
                ):
                    for y, z in np.argwhere(badm):
                        bad.append((names[code], (x, int(y), int(z))))
        else:
            w = _kernels.exchange_violation(u, o)
            if w is not None:
                code, x, y, z = w
                bad.append((names[code], (x, y, z)))
    return AxiomReport.from_violations(bad)


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0..n-1}, stored as its image tuple."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise MalformedInput(f"not a permutation of 0..{n - 1}: {self.images}")

    @staticmethod
    def identity(n):
        return Permutation(tuple(range(n)))

    @staticmethod
    def from_array(a):
        return Permutation(tuple(int(x) for x in a))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        """Composition: (p * q)(x) = p(q(x))."""
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self):
        inv = [0] * self.n
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.images))

    def array(self):
        return np.array(self.images, dtype=np.int64)

    def cycles(self):
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return tuple(sorted(len(c) for c in self.cycles()))

    def cycle_notation(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cyc)


def mulclose(gens, degree):
    """Closure of a set of permutations under composition (includes id)."""
    els = {Permutation.identity(degree)}
    bdy = list(set(gens))
    els.update(bdy)
    while bdy:
        new = []
        for g in gens:
            for h in bdy:
                p = g * h
                if p not in els:
                    els.add(p)
                    new.append(p)
        bdy = new
    return els


@dataclass(frozen=True)
class PermutationGroup:
    """Explicit permutation group: generators plus the full element set."""

    degree: int
    generators: tuple
    elements: frozenset

    @staticmethod
    def generate(degree, gens):
        gens = tuple(gens)
        for g in gens:
            if g.n != degree:
                raise MalformedInput("generator degree mismatch")
        return PermutationGroup(degree, gens, frozenset(mulclose(gens, degree)))

    @staticmethod
    def from_elements(degree, elements):
        """Wrap an explicit element set, picking a small generating set."""
        els = frozenset(elements)
        ident = Permutation.identity(degree)
        gens = []
        span = {ident}
        for p in sorted(els):
            if p in span:
                continue
            gens.append(p)
            span = mulclose(gens, degree)
            if len(span) == len(els):
                break
        if span != els:
            raise MalformedInput("element set is not closed under composition")
        return PermutationGroup(degree, tuple(gens), els)

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, p):
        return p in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def is_subgroup_of(self, other):
        return self.elements <= other.elements

    def same_elements(self, other):
        return self.degree == other.degree and self.elements == other.elements


# ---------------------------------------------------------------------------
# quandles


class FiniteQuandle:
    """A finite quandle as its validated operation table."""

    __slots__ = ("n", "table", "tinv")

    def __init__(self, table):
        t = as_table(table)
        report = check_quandle(t)
        if not report.passed:
            raise AxiomError(report)
        self.n = t.shape[0]
        self.table = t
        self.tinv = _invert_columns(t)  # tinv[a, b] = S_b^{-1}(a)

    def op(self, a, b):
        return int(self.table[a, b])

    def op_inv(self, a, b):
        return int(self.tinv[a, b])

    def sx(self, x):
        """The right translation S_x as a permutation."""
        return Permutation(tuple(int(v) for v in self.table[:, x]))

    def __eq__(self, other):
        return isinstance(other, FiniteQuandle) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"FiniteQuandle(n={self.n})"

    def to_dict(self):
        return {"n": self.n, "table": self.table.tolist()}

    @staticmethod
    def from_dict(d):
        try:
            n, table = d["n"], d["table"]
        except (KeyError, TypeError):
            raise MalformedInput("quandle JSON needs keys 'n' and 'table'") from None
        q = FiniteQuandle(table)
        if q.n != n:
            raise MalformedInput(f"declared n={n} but table is {q.n}x{q.n}")
        return q

    def to_json(self):
        return json.dumps(self.to_dict())

    @staticmethod
    def from_json(s):
        try:
            d = json.loads(s)
        except json.JSONDecodeError as e:
            raise MalformedInput(f"bad JSON: {e}") from None
        return FiniteQuandle.from_dict(d)


class FiniteBiquandle:
    """A finite biquandle as its validated pair of operation tables."""

    __slots__ = ("n", "under", "over", "under_inv", "over_inv", "sinv_x", "sinv_y")

    def __init__(self, under, over):
        u = as_table(under, "under")
        o = as_table(over, "over")
        report = check_biquandle(u, o)
        if not report.passed:
            raise AxiomError(report)
        self.n = u.shape[0]
        self.under = u
        self.over = o
        self.under_inv = _invert_columns(u)  # alpha_b^{-1}
        self.over_inv = _invert_columns(o)   # beta_b^{-1}
        n = self.n
        sx = np.empty((n, n), dtype=np.int64)
        sy = np.empty((n, n), dtype=np.int64)
        X = np.broadcast_to(np.arange(n)[:, None], (n, n))
        Y = np.broadcast_to(np.arange(n)[None, :], (n, n))
        sx[o.T, u] = X  # S(x, y) = (over[y, x], under[x, y])
        sy[o.T, u] = Y
        sx.setflags(write=False)
        sy.setflags(write=False)
        self.sinv_x = sx
        self.sinv_y = sy

    def op_under(self, a, b):
        return int(self.under[a, b])

    def op_over(self, a, b):
        return int(self.over[a, b])

    def alpha(self, y):
        return Permutation(tuple(int(v) for v in self.under[:, y]))

    def beta(self, y):
        return Permutation(tuple(int(v) for v in self.over[:, y]))

    def __eq__(self, other):
        return (
            isinstance(other, FiniteBiquandle)
            and np.array_equal(self.under, other.under)
            and np.array_equal(self.over, other.over)
        )

    def __hash__(self):
        return hash((self.under.tobytes(), self.over.tobytes()))

    def __repr__(self):
        return f"FiniteBiquandle(n={self.n})"

    def to_dict(self):
        return {"n": self.n, "under": self.under.tolist(), "over": self.over.tolist()}

    @staticmethod
    def from_dict(d):
        try:
            n, under, over = d["n"], d["under"], d["over"]
        except (KeyError, TypeError):
            raise MalformedInput("biquandle JSON needs keys 'n', 'under', 'over'") from None
        b = FiniteBiquandle(under, over)
        if b.n != n:
            raise MalformedInput(f"declared n={n} but tables are {b.n}x{b.n}")
        return b

    def to_json(self):
        return json.dumps(self.to_dict())

    @staticmethod
    def from_json(s):
        try:
            d = json.loads(s)
        except json.JSONDecodeError as e:
            raise MalformedInput(f"bad JSON: {e}") from None
        return FiniteBiquandle.from_dict(d)


# ---------------------------------------------------------------------------
# structural predicates and invariants


def inner_group(q: FiniteQuandle) -> PermutationGroup:
    """Closure of the right translations {S_x} under composition."""
    gens = tuple(q.sx(x) for x in range(q.n))
    # dedupe generators but keep one per distinct map
    uniq = tuple(sorted(set(gens)))
    return PermutationGroup.generate(q.n, uniq)


def orbits(q: FiniteQuandle):
    """Orbit partition of the inner-group action, sorted by smallest member."""
    n = q.n
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        orb = [s]
        seen[s] = True
        stack = [s]
        while stack:
            a = stack.pop()
            for x in range(n):
                for b in (int(q.table[a, x]), int(q.tinv[a, x])):
                    if not seen[b]:
                        seen[b] = True
                        orb.append(b)
                        stack.append(b)
        out.append(sorted(orb))
    return out


def is_connected(q: FiniteQuandle) -> bool:
    return len(orbits(q)) == 1


def is_faithful(q: FiniteQuandle) -> bool:
    cols = {q.table[:, x].tobytes() for x in range(q.n)}
    return len(cols) == q.n


def is_involutory_quandle(q: FiniteQuandle) -> bool:
    """S_x^2 == id for all x."""
    return bool((q.table[q.table, np.arange(q.n)[None, :]] == np.arange(q.n)[:, None]).all())


def is_involutory_biquandle(b: FiniteBiquandle) -> bool:
    """All four involutory identities hold for all pairs."""
    u, o = b.under, b.over
    n = b.n
    X = np.arange(n)[:, None]
    Y = np.arange(n)[None, :]
    c1 = u[X, o[Y, X]] == u[X, Y]       # x u (y o x) == x u y
    c2 = o[X, u[Y, X]] == o[X, Y]       # x o (y u x) == x o y
    c3 = u[u, Y] == X                   # (x u y) u y == x
    c4 = o[o, Y] == X                   # (x o y) o y == x
    return bool(c1.all() and c2.all() and c3.all() and c4.all())


def associated_quandle(b: FiniteBiquandle) -> FiniteQuandle:
    """The quandle with x*y = (x u y) o^{-1} y extracted from a biquandle."""
    n = b.n
    Y = np.broadcast_to(np.arange(n)[None, :], (n, n))
    table = b.over_inv[b.under, Y]
    return FiniteQuandle(table)


def biquandle_of_quandle(q: FiniteQuandle) -> FiniteBiquandle:
    """Embed a quandle as the biquandle with trivial over operation."""
    over = np.broadcast_to(np.arange(q.n)[:, None], (q.n, q.n)).copy()
    return FiniteBiquandle(q.table, over)


def yang_baxter_map(b: FiniteBiquandle):
    """The pair map r(u, v) = (w, u_table[u, w]) with w = beta_u^{-1}(v),
    returned as two n x n coordinate tables (first, second)."""
    n = b.n
    U = np.broadcast_to(np.arange(n)[:, None], (n, n))
    W = b.over_inv.T  # W[u, v] = over_inv[v, u] = beta_u^{-1}(v)
    first = W.copy()
    second = b.under[U, W]
    first.setflags(write=False)
    second.setflags(write=False)
    return first, second


def ybe_witness(under, over):
    """First braid-relation violation on raw tables, or None.

    Requires every over column to be a permutation (so the pair map is
    defined); raises DomainError otherwise.
    """
    u = as_table(under, "under")
    o = as_table(over, "over")
    if u.shape != o.shape:
        raise MalformedInput(f"table sizes differ: {u.shape} vs {o.shape}")
    if not _columns_are_permutations(o) or not _columns_are_permutations(u):
        raise DomainError("pair map undefined: a column is not a permutation")
    return _kernels.ybe_violation(u, o, _invert_columns(o))


def check_ybe(b) -> bool:
    """True when the braid relation holds on all triples."""
    if isinstance(b, FiniteBiquandle):
        return _kernels.ybe_violation(b.under, b.over, b.over_inv) is None
    under, over = b
    return ybe_witness(under, over) is None
