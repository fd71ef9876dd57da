"""Exact checks on explicit points ``(x, t, s)`` of framed quiver representations.

All matrices are :class:`~sympy.polys.matrices.DomainMatrix` over ``QQ``.
The map attached to an arrow ``h: i -> j`` is a ``dim V_j x dim V_i``
matrix, ``t_i`` is ``dim W_i x dim V_i`` and ``s_i`` is ``dim V_i x dim W_i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from sympy import Poly, Symbol
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .cartan import BorcherdsCartanDatum, QuiverPresentation, Weight, pair
from .errors import IrrationalSpectrum, ShapeMismatch, UnknownIndex

_X = Symbol("x")


# ------------------------------------------------------------ matrix helpers


def rational(v) -> QQ:
    """Exact rational from an int, a Fraction or a string such as ``"-3/4"``."""
    if isinstance(v, float):
        raise ValueError("floating point entries are not accepted; use 'p/q' strings")
    fr = v if isinstance(v, Fraction) else Fraction(str(v).strip())
    return QQ(fr.numerator, fr.denominator)


def to_fraction(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def qmatrix(rows, shape: tuple[int, int] | None = None) -> DomainMatrix:
    if isinstance(rows, DomainMatrix):
        m = rows.convert_to(QQ)
    else:
        rows = [list(r) for r in rows]
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
            raise ShapeMismatch(f"matrix {rows} does not have shape {shape}")
        m = DomainMatrix([[rational(v) for v in r] for r in rows], shape, QQ)
    if shape is not None and m.shape != tuple(shape):
        raise ShapeMismatch(f"matrix has shape {m.shape}, expected {tuple(shape)}")
    return m


def zeros(r: int, c: int) -> DomainMatrix:
    return DomainMatrix.zeros((r, c), QQ).to_dense()


def eye(n: int) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ).to_dense()


def trace(m: DomainMatrix) -> Fraction:
    rows = m.to_list()
    return sum((to_fraction(rows[k][k]) for k in range(m.shape[0])), Fraction(0))


def kernel(m: DomainMatrix) -> DomainMatrix:
    """Column basis of the null space of ``m``."""
    r, c = m.shape
    if c == 0:
        return zeros(0, 0)
    if r == 0:
        return eye(c)
    ns = m.to_dense().nullspace()
    if ns.shape[0] == 0:
        return zeros(c, 0)
    return ns.transpose()


def column_basis(m: DomainMatrix) -> DomainMatrix:
    r, c = m.shape
    if r == 0 or c == 0:
        return zeros(r, 0)
    return m.to_dense().columnspace()


def rank(m: DomainMatrix) -> int:
    if 0 in m.shape:
        return 0
    return m.to_dense().rank()


def hstack(mats, rows: int) -> DomainMatrix:
    mats = [m for m in mats if m.shape[1] > 0]
    if not mats:
        return zeros(rows, 0)
    return mats[0].hstack(*mats[1:]) if len(mats) > 1 else mats[0]


def vstack(mats, cols: int) -> DomainMatrix:
    mats = [m for m in mats if m.shape[0] > 0]
    if not mats:
        return zeros(0, cols)
    return DomainMatrix.vstack(*mats) if len(mats) > 1 else mats[0]


def rational_eigenvalues(m: DomainMatrix) -> list:
    """Distinct eigenvalues of ``m``; raises if any eigenvalue is irrational."""
    if m.shape[0] == 0:
        return []
    poly = Poly(m.charpoly(), _X, domain=QQ)
    roots = []
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() > 1:
            raise IrrationalSpectrum(f"characteristic polynomial has the irreducible factor {factor.as_expr()}")
        a, b = factor.all_coeffs()
        roots.append(-QQ.from_sympy(b) / QQ.from_sympy(a))
    return sorted(set(roots))


# ------------------------------------------------------------------- points


@dataclass(frozen=True)
class RepPoint:
    quiver: QuiverPresentation
    dims: Mapping[str, int]
    framing: Mapping[str, int]
    x: Mapping[str, DomainMatrix] = field(hash=False)
    t: Mapping[str, DomainMatrix] = field(hash=False)
    s: Mapping[str, DomainMatrix] = field(hash=False)

    def __post_init__(self):
        q = self.quiver
        for v in q.vertices:
            if self.dims.get(v, 0) < 0 or self.framing.get(v, 0) < 0:
                raise ShapeMismatch(f"negative dimension at vertex {v}")
        for a in q.arrows:
            m = self.x.get(a.id)
            want = (self.dim(a.target), self.dim(a.source))
            if m is None or m.shape != want:
                raise ShapeMismatch(f"x[{a.id}] has shape {None if m is None else m.shape}, expected {want}")
        for v in q.vertices:
            tv, sv = self.t.get(v), self.s.get(v)
            if tv is None or tv.shape != (self.fdim(v), self.dim(v)):
                raise ShapeMismatch(f"t[{v}] must be {self.fdim(v)}x{self.dim(v)}")
            if sv is None or sv.shape != (self.dim(v), self.fdim(v)):
                raise ShapeMismatch(f"s[{v}] must be {self.dim(v)}x{self.fdim(v)}")

    def dim(self, v: str) -> int:
        return self.dims.get(v, 0)

    def fdim(self, v: str) -> int:
        return self.framing.get(v, 0)

    @property
    def dimension_vector(self) -> tuple[int, ...]:
        return tuple(self.dim(v) for v in self.quiver.vertices)

    @classmethod
    def build(cls, quiver: QuiverPresentation, dims, framing=None, x=None, t=None, s=None) -> RepPoint:
        """Construct a point, filling every map not given with zeros."""
        dims = {str(k): int(v) for k, v in dims.items()}
        framing = {str(k): int(v) for k, v in (framing or {}).items()}
        for v in quiver.vertices:
            dims.setdefault(v, 0)
            framing.setdefault(v, 0)
        x, t, s = dict(x or {}), dict(t or {}), dict(s or {})
        xs = {}
        for a in quiver.arrows:
            shape = (dims[a.target], dims[a.source])
            xs[a.id] = qmatrix(x.pop(a.id), shape) if a.id in x else zeros(*shape)
        if x:
            raise ShapeMismatch(f"maps given for unknown arrows: {sorted(x)}")
        ts, ss = {}, {}
        for v in quiver.vertices:
            ts[v] = qmatrix(t[v], (framing[v], dims[v])) if v in t else zeros(framing[v], dims[v])
            ss[v] = qmatrix(s[v], (dims[v], framing[v])) if v in s else zeros(dims[v], framing[v])
        return cls(quiver, dims, framing, xs, ts, ss)

    @classmethod
    def from_json(cls, doc: Mapping) -> RepPoint:
        quiver = QuiverPresentation.from_json(doc["quiver"])
        return cls.build(
            quiver,
            doc.get("dims", {}),
            doc.get("framing", {}),
            {str(k): v for k, v in doc.get("x", {}).items()},
            {str(k): v for k, v in doc.get("t", {}).items()},
            {str(k): v for k, v in doc.get("s", {}).items()},
        )

    def to_json(self) -> dict:
        def enc(m):
            return [[str(to_fraction(v)) for v in row] for row in m.to_list()]

        q = self.quiver
        return {
            "quiver": {
                "vertices": list(q.vertices),
                "arrow_pairs": [{"id": a.id, "from": a.source, "to": a.target} for a in q.arrows if a.id in q.orientation],
            },
            "dims": dict(self.dims),
            "framing": dict(self.framing),
            "x": {h: enc(m) for h, m in self.x.items()},
            "t": {v: enc(m) for v, m in self.t.items()},
            "s": {v: enc(m) for v, m in self.s.items()},
        }

    def replace(self, x=None, t=None, s=None) -> RepPoint:
        return RepPoint(self.quiver, self.dims, self.framing, x or self.x, t or self.t, s or self.s)


def gl_action(p: RepPoint, g: Mapping[str, DomainMatrix]) -> RepPoint:
    """``g . (x, t, s) = (g_in x_h g_out^-1, t_i g_i^-1, g_i s_i)``."""
    inv = {v: g[v].inv() if p.dim(v) else g[v] for v in p.quiver.vertices}
    x = {a.id: g[a.target] * p.x[a.id] * inv[a.source] for a in p.quiver.arrows}
    t = {v: p.t[v] * inv[v] for v in p.quiver.vertices}
    s = {v: g[v] * p.s[v] for v in p.quiver.vertices}
    return p.replace(x, t, s)


# ------------------------------------------------------------ moment map, form


def moment_map(p: RepPoint, framed: bool = True) -> dict[str, DomainMatrix]:
    """``mu_i = sum_{out(h) = i} eps(h) x_hbar x_h + s_i t_i``."""
    q = p.quiver
    mu = {v: zeros(p.dim(v), p.dim(v)) for v in q.vertices}
    for a in q.arrows:
        term = p.x[q.bar[a.id]] * p.x[a.id]
        mu[a.source] = mu[a.source] + term if q.sign(a.id) > 0 else mu[a.source] - term
    if framed:
        for v in q.vertices:
            mu[v] = mu[v] + p.s[v] * p.t[v]
    return mu


def _same_shape(p: RepPoint, r: RepPoint):
    if p.quiver != r.quiver or p.dimension_vector != r.dimension_vector or any(
        p.fdim(v) != r.fdim(v) for v in p.quiver.vertices
    ):
        raise ShapeMismatch("points live in different spaces")


def symplectic_form(p: RepPoint, r: RepPoint) -> Fraction:
    """``sum_h eps(h) Tr(x_hbar x'_h) + sum_i Tr(s_i t'_i - s'_i t_i)``."""
    _same_shape(p, r)
    q = p.quiver
    total = Fraction(0)
    for a in q.arrows:
        total += q.sign(a.id) * trace(p.x[q.bar[a.id]] * r.x[a.id])
    for v in q.vertices:
        total += trace(p.s[v] * r.t[v]) - trace(r.s[v] * p.t[v])
    return total


# --------------------------------------------------- membership in N(alpha)


def check_regular_semisimple(m) -> bool:
    """Squarefree characteristic polynomial, i.e. distinct eigenvalues."""
    m = qmatrix(m)
    if m.shape[0] != m.shape[1]:
        raise ShapeMismatch("regular semisimplicity needs a square matrix")
    if m.shape[0] <= 1:
        return True
    poly = Poly(m.charpoly(), _X, domain=QQ)
    return poly.gcd(poly.diff(_X)).degree() == 0


@dataclass
class FlagResult:
    exists: bool
    flag: list = field(default_factory=list)  # (vertex, vector) pairs; F_k is the span of the first k

    def __bool__(self):
        return self.exists


def _barred_loops(q: QuiverPresentation, v: str):
    return [a.id for a in q.loops_at(v) if a.id not in q.orientation]


def _lowering_out(q: QuiverPresentation, v: str):
    """Arrows out of ``v`` that must lower the flag: all but the barred loops."""
    barred = set(_barred_loops(q, v))
    return [a.id for a in q.arrows if a.source == v and a.id not in barred]


def check_flag_condition(p: RepPoint) -> FlagResult:
    """Decide whether a graded complete flag adapted to ``x`` exists.

    Barred loops must preserve each ``F_k`` and every other arrow must map
    ``F_k`` into ``F_{k-1}``.  Such a flag is a composition series whose factors
    are one-dimensional with the lowering arrows acting by zero; by
    Jordan-Hoelder any admissible first line can be taken, so the search
    is greedy: find a line killed by the lowering arrows and spanned by a
    common eigenvector of the barred loops, pass to the quotient, repeat.
    """
    q = p.quiver
    for v in q.vertices:
        for h in _barred_loops(q, v):
            rational_eigenvalues(p.x[h])

    x = dict(p.x)
    dims = {v: p.dim(v) for v in q.vertices}
    lift = {v: eye(dims[v]) for v in q.vertices}
    flag = []
    while any(dims.values()):
        pick = None
        for v in q.vertices:
            if not dims[v]:
                continue
            low = vstack([x[h] for h in _lowering_out(q, v)], dims[v])
            space = kernel(low)
            if space.shape[1] == 0:
                continue
            candidates = [space]
            for h in _barred_loops(q, v):
                nxt = []
                for basis in candidates:
                    restricted = x[h] * basis
                    for c in rational_eigenvalues(x[h]):
                        coeffs = kernel(restricted - basis * c)
                        if coeffs.shape[1]:
                            nxt.append(basis * coeffs)
                candidates = nxt
            if candidates:
                col = candidates[0].to_list()
                pick = (v, [row[0] for row in col])
                break
        if pick is None:
            return FlagResult(False)
        v, vec = pick
        d = dims[v]
        pivot = next(k for k, c in enumerate(vec) if c)
        cols = [vec] + [[QQ(1) if r == k else QQ(0) for r in range(d)] for k in range(d) if k != pivot]
        T = DomainMatrix([list(row) for row in zip(*cols)], (d, d), QQ)
        Tinv = T.inv()
        flag.append((v, [to_fraction(c) for c in (lift[v] * DomainMatrix([[c] for c in vec], (d, 1), QQ)).to_list_flat()]))
        for a in q.arrows:
            m = x[a.id]
            if a.target == v:
                m = (Tinv * m)[1:, :]
            if a.source == v:
                m = (m * T)[:, 1:]
            x[a.id] = m
        lift[v] = (lift[v] * T)[:, 1:]
        dims[v] = d - 1
    return FlagResult(True, flag)


@dataclass
class MembershipReport:
    moment_map_zero: bool
    flag: bool
    regular_semisimple: bool

    @property
    def member(self) -> bool:
        return self.moment_map_zero and self.flag and self.regular_semisimple


def check_membership_N(p: RepPoint) -> MembershipReport:
    """Conditions (moment map, flag, regular semisimple barred loops) on ``x`` alone."""
    mu = moment_map(p, framed=False)
    mu_zero = all(m.is_zero_matrix for m in mu.values())
    rs = all(check_regular_semisimple(p.x[h]) for v in p.quiver.vertices for h in _barred_loops(p.quiver, v))
    return MembershipReport(mu_zero, check_flag_condition(p).exists, rs)


# ---------------------------------------------------------------- stability


@dataclass
class StabilityResult:
    stable: bool
    witness: dict = field(default_factory=dict)  # vertex -> column basis of U_i

    def __bool__(self):
        return self.stable


def _annihilator(basis: DomainMatrix, d: int) -> DomainMatrix:
    """Rows spanning the linear forms vanishing on the column span of ``basis``."""
    if basis.shape[1] == 0:
        return eye(d)
    return kernel(basis.transpose()).transpose()


def check_stability(p: RepPoint) -> StabilityResult:
    """Largest ``x``-stable graded subspace inside ``ker t``; stable iff it is zero.

    Greatest fixpoint of ``U_i <- {u in U_i : x_h u in U_in(h) for h out of i}``
    started at ``U_i = ker t_i``.  The ``s`` maps play no role.
    """
    q = p.quiver
    U = {v: kernel(p.t[v]) if p.dim(v) else zeros(0, 0) for v in q.vertices}
    changed = True
    while changed:
        changed = False
        for v in q.vertices:
            B = U[v]
            if B.shape[1] == 0:
                continue
            conds = []
            for a in q.arrows:
                if a.source != v:
                    continue
                ann = _annihilator(U[a.target], p.dim(a.target))
                if ann.shape[0]:
                    conds.append(ann * p.x[a.id] * B)
            if not conds:
                continue
            coeffs = kernel(vstack(conds, B.shape[1]))
            if coeffs.shape[1] < B.shape[1]:
                U[v] = B * coeffs if coeffs.shape[1] else zeros(p.dim(v), 0)
                changed = True
    witness = {v: b for v, b in U.items() if b.shape[1] > 0}
    return StabilityResult(not witness, witness)


# ---------------------------------------------------------------- eps_omega


def eps_omega(p: RepPoint, i: str) -> int:
    """Codimension in ``V_i`` of the loop-algebra closure of the incoming images."""
    q = p.quiver
    i = str(i)
    if i not in q.vertices:
        raise UnknownIndex(f"unknown vertex {i!r}")
    d = p.dim(i)
    incoming = [p.x[a.id] for a in q.arrows if a.target == i and a.source != i]
    loops = [p.x[a.id] for a in q.loops_at(i)]
    span = column_basis(hstack(incoming, d))
    while True:
        grown = column_basis(hstack([span] + [m * span for m in loops], d))
        if grown.shape[1] == span.shape[1]:
            break
        span = grown
    return d - span.shape[1]


# ----------------------------------------------------- nonemptiness condition


def check_eps_condition(datum: BorcherdsCartanDatum, lam, alpha, i, l: int) -> bool:
    """Whether ``(lambda, alpha, i, l)`` satisfies the nonemptiness condition.

    Real ``i`` needs ``<h_i, lambda - alpha> >= l``; imaginary ``i`` with
    ``l > 0`` needs ``<h_i, lambda - alpha> > 0``.
    """
    i = datum.index(i)
    base = tuple(lam.base) if isinstance(lam, Weight) else tuple(lam)
    w = Weight(base, tuple(alpha))
    value = pair(datum, w, i)
    if datum.is_real(i):
        return value >= l
    return l == 0 or value > 0


def random_gl(p: RepPoint, rng, entry_range: int = 3) -> dict[str, DomainMatrix]:
    """A random invertible rational matrix per vertex, drawn from ``rng``."""
    g = {}
    for v in p.quiver.vertices:
        d = p.dim(v)
        while True:
            rows = [[QQ(rng.randint(-entry_range, entry_range), rng.randint(1, 2)) for _ in range(d)] for _ in range(d)]
            m = DomainMatrix(rows, (d, d), QQ) if d else zeros(0, 0)
            if d == 0 or rank(m) == d:
                break
        g[v] = m
    return g
