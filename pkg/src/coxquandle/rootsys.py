"""Geometric representation, root systems and the root rack.

Roots are float vectors in the basis of simple roots. Two vectors closer than
``SNAP_TOL`` in every coordinate are the same root; after closure the minimum
distance between distinct roots is asserted to exceed ``MIN_GAP``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from .errors import RootCapExceeded
from .graph import INF, CoxeterMatrix
from .report import check

if TYPE_CHECKING:
    from .engine import CoxeterGroup, GroupElement
    from .quandle import Reflection

SNAP_TOL = 1e-8
MIN_GAP = 1e-6
POS_TOL = 1e-9


def bilinear_form(M: CoxeterMatrix) -> np.ndarray:
    """B(a_s, a_t) = -cos(pi / m(s, t)), and -1 for an infinite bond."""
    n = M.n
    B = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            m = M.m[i][j]
            B[i, j] = -1.0 if m == INF else -math.cos(math.pi / m)
    return B


def is_finite_type(M: CoxeterMatrix) -> bool:
    """W is finite exactly when its Coxeter form is positive definite."""
    return bool(np.linalg.eigvalsh(bilinear_form(M)).min() > 1e-9)


def form(B: np.ndarray, x: np.ndarray, y: np.ndarray) -> float:
    return float(x @ B @ y)


def reflect(B: np.ndarray, alpha: np.ndarray, lam: np.ndarray) -> np.ndarray:
    """lam - 2 B(alpha, lam) alpha."""
    return lam - 2.0 * (alpha @ B @ lam) * alpha


def _key(v: np.ndarray) -> tuple:
    return tuple(np.round(v / SNAP_TOL).astype(np.int64).tolist())


@dataclass(frozen=True)
class RootClosure:
    """Raw output of the orbit computation, before any group-theoretic labelling.

    ``origin[i] = (word, s)`` records that root ``i`` equals ``w(alpha_s)`` where
    ``w`` is the product of the generators in ``word``.
    """

    coords: np.ndarray
    positive: np.ndarray
    gen_perm: np.ndarray
    simple: tuple[int, ...]
    neg_of: np.ndarray
    origin: tuple[tuple[tuple[int, ...], int], ...]
    form: np.ndarray
    lookup: dict = field(repr=False, compare=False)

    def __len__(self):
        return len(self.coords)

    def index_of(self, v: np.ndarray) -> int:
        idx = self.lookup.get(_key(v))
        if idx is None:
            # rounding can straddle a grid line; fall back to a nearest search
            d = np.abs(self.coords - v).max(axis=1)
            j = int(d.argmin())
            if d[j] > SNAP_TOL * 10:
                raise KeyError("vector is not a root")
            return j
        return idx


def root_closure(M: CoxeterMatrix, cap: int = 100_000) -> RootClosure:
    """Orbit of the simple roots under the simple reflections, breadth first."""
    if not is_finite_type(M):
        raise RootCapExceeded(
            "Coxeter form is not positive definite, so the root system is infinite"
        )
    n = M.n
    B = bilinear_form(M)
    eye = np.eye(n)
    coords: list[np.ndarray] = []
    origin: list[tuple[tuple[int, ...], int]] = []
    lookup: dict = {}

    def add(v, org):
        k = _key(v)
        if k in lookup:
            return lookup[k]
        if len(coords) >= cap:
            raise RootCapExceeded(f"more than {cap} roots")
        lookup[k] = len(coords)
        coords.append(v)
        origin.append(org)
        return lookup[k]

    simple = tuple(add(eye[s].copy(), ((), s)) for s in range(n))
    head = 0
    while head < len(coords):
        v = coords[head]
        word, s0 = origin[head]
        for s in range(n):
            add(reflect(B, eye[s], v), ((s,) + word, s0))
        head += 1

    C = np.array(coords)
    N = len(C)
    closure = RootClosure(
        coords=C,
        positive=(C >= -POS_TOL).all(axis=1),
        gen_perm=np.zeros((n, N), dtype=np.int64),
        simple=simple,
        neg_of=np.zeros(N, dtype=np.int64),
        origin=tuple(origin),
        form=B,
        lookup=lookup,
    )
    for s in range(n):
        for i in range(N):
            closure.gen_perm[s, i] = closure.index_of(reflect(B, eye[s], C[i]))
    for i in range(N):
        closure.neg_of[i] = closure.index_of(-C[i])
    if N > 1:
        gaps = np.abs(C[:, None, :] - C[None, :, :]).max(axis=2)
        np.fill_diagonal(gaps, np.inf)
        assert gaps.min() > MIN_GAP, f"roots closer than {MIN_GAP}: {gaps.min()}"
    assert (closure.positive ^ closure.positive[closure.neg_of]).all(), \
        "a root and its negative must have opposite signs"
    return closure


def group_order(M: CoxeterMatrix, cap: int | None = None) -> int:
    """|W| for finite W, as |W_J| * |W / W_J| with J = all generators but the last.

    The coset count is the orbit size of a vector whose stabiliser is exactly
    W_J: the solution of B(lam, a_t) = 0 for t in J and B(lam, a_last) = 1.
    """
    if not is_finite_type(M):
        raise RootCapExceeded("Coxeter form is not positive definite, so W is infinite")
    n = M.n
    if n == 1:
        return 2
    B = bilinear_form(M)
    eye = np.eye(n)
    lam = np.linalg.solve(B, eye[n - 1])
    seen = {_key(lam)}
    frontier = [lam]
    points = [lam]
    while frontier:
        nxt = []
        for v in frontier:
            for t in range(n):
                u = reflect(B, eye[t], v)
                k = _key(u)
                if k not in seen:
                    seen.add(k)
                    if cap is not None and len(seen) > cap:
                        raise RootCapExceeded(f"coset orbit larger than {cap}")
                    nxt.append(u)
                    points.append(u)
        frontier = nxt
    P = np.array(points)
    if len(P) > 1 and len(P) <= 5000:
        gaps = np.abs(P[:, None, :] - P[None, :, :]).max(axis=2)
        np.fill_diagonal(gaps, np.inf)
        assert gaps.min() > MIN_GAP, f"orbit points closer than {MIN_GAP}"
    sub = CoxeterMatrix(M.labels[:-1], tuple(row[:-1] for row in M.m[:-1]))
    return len(seen) * group_order(sub, cap)


# -- root system with its rack structure --------------------------------------

class RootSystem:
    """Finite root system with the rack operation a * b = t_b(a) and the map p."""

    def __init__(self, group: "CoxeterGroup", closure: RootClosure):
        from .quandle import Reflection

        self.group = group
        self.closure = closure
        self.B = closure.form
        classes = group.odd.class_of
        refl = []
        for word, s in closure.origin:
            # alpha = w(alpha_s)  =>  t_alpha = w s w^-1
            g = group.element(word + (s,) + tuple(reversed(word)))
            refl.append(Reflection(g, classes[s]))
        self._refl_of = tuple(refl)
        self._op: np.ndarray | None = None

    @property
    def coords(self) -> np.ndarray:
        return self.closure.coords

    @property
    def neg_of(self) -> np.ndarray:
        return self.closure.neg_of

    def __len__(self):
        return len(self.closure)

    def sign(self, a: int) -> int:
        return 1 if self.closure.positive[a] else -1

    def rack_op(self, a: int, b: int) -> int:
        if self._op is not None:
            return int(self._op[a, b])
        C = self.coords
        return self.closure.index_of(reflect(self.B, C[b], C[a]))

    def op_table(self) -> np.ndarray:
        if self._op is None:
            N = len(self)
            op = np.empty((N, N), dtype=np.int64)
            for a in range(N):
                for b in range(N):
                    op[a, b] = self.rack_op(a, b)
            self._op = op
        return self._op

    def project_p(self, a: int) -> "Reflection":
        return self._refl_of[a]

    def reflection_of(self, a: int) -> "GroupElement":
        return self._refl_of[a].element


def build_root_system(group: "CoxeterGroup", cap: int | None = None) -> RootSystem:
    closure = group.root_closure() if cap is None else root_closure(group.matrix, cap)
    return RootSystem(group, closure)


# -- checks ---------------------------------------------------------------------

def root_rack_check(rs: RootSystem, q=None, tol: float = 1e-8, seed: int = 0):
    """Rack axioms, form preservation, and p as a two-to-one rack morphism."""
    op = rs.op_table()
    N = len(rs)
    idx = np.arange(N)
    if N <= 120:
        lhs = op[op[:, :, None], idx[None, None, :]]
        rhs = op[op[:, None, :], op[None, :, :]]
        distributive = bool((lhs == rhs).all())
    else:
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, N, size=(3, 20_000))
        distributive = bool((op[op[x, y], z] == op[op[x, z], op[y, z]]).all())
    bijective = all(len(set(op[:, b].tolist())) == N for b in range(N))
    not_quandle = bool((op[idx, idx] == rs.neg_of).all())

    B, C = rs.B, rs.coords
    n = B.shape[0]
    eye = np.eye(n)
    gram = C @ B @ C.T
    form_err = 0.0
    for s in range(n):
        img = np.array([reflect(B, eye[s], c) for c in C])
        form_err = max(form_err, float(np.abs(img @ B @ img.T - gram).max()))
    unit_norm = bool(np.abs(np.diag(gram) - 1).max() < tol)

    fibres: dict = {}
    for a in range(N):
        fibres.setdefault(rs.reflection_of(a), set()).add(a)
    two_to_one = all(f == {a, int(rs.neg_of[a])} for f in fibres.values() for a in f)
    g = rs.group
    morphism = all(
        rs.reflection_of(int(op[a, b])) == g.product(rs.reflection_of(b), rs.reflection_of(a),
                                                     rs.reflection_of(b))
        for a in range(N) for b in range(N)
    )
    counts = True
    if q is not None:
        counts = N == 2 * len(q) and set(fibres) == {x.element for x in q.items}
    ok = (distributive and bijective and not_quandle and form_err < tol and unit_norm
          and two_to_one and morphism and counts)
    return check("root_rack", ok, f"{N} roots, {len(fibres)} reflections, form error {form_err:.1e}",
                 distributive=distributive, bijective=bijective, not_quandle=not_quandle,
                 form_error=form_err, two_to_one=two_to_one, morphism=morphism, counts=counts)


def root_adjoint_check(rs: RootSystem, model):
    """e_a -> e_{p(a)} respects e_{a*b} = e_b^-1 e_a e_b and e_{-a} = e_a."""
    op = rs.op_table()
    N = len(rs)
    emb = [model.embed_generator(rs.project_p(a)) for a in range(N)]
    inv = [model.ad_inv(e) for e in emb]
    bad = [(a, b) for a in range(N) for b in range(N)
           if emb[int(op[a, b])] != model.product(inv[b], emb[a], emb[b])]
    collapse = all(emb[int(rs.neg_of[a])] == emb[a] for a in range(N))
    return check("root_adjoint", not bad and collapse, f"{N * N} root pairs",
                 failures=bad[:10], fibre_collapse=collapse)
