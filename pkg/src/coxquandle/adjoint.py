"""The adjoint group of the Coxeter quandle as a central extension of W.

An element is a pair ``(v, w)`` with ``v`` in Z^c (c = number of reflection
classes) and ``w`` in W, multiplied by

    (v1, w1)(v2, w2) = (v1 + v2 + c(w1, w2), w1 w2),
    c(w1, w2)_k = (l_k(w1) + l_k(w2) - l_k(w1 w2)) / 2,

where ``l_k(w)`` counts letters of class ``k`` in a reduced word of ``w``. The
generator ``e_s`` is ``(0, s)``; more generally ``(0, w)`` is the product of
the ``e_s`` along any reduced word of ``w``. The central subgroup is
``{(v, 1)}``, with ``e_s^2 = (u_k, 1)`` for ``s`` in class ``k``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .engine import CoxeterGroup, GroupElement, GroupTable
from .errors import EnumerationCapExceeded, NotSingleClass, ParityError
from .graph import INF
from .intlinalg import solve_integer
from .quandle import QuandleTable, Reflection
from .report import CheckResult, check

Vec = tuple[int, ...]


@dataclass(frozen=True)
class AdElement:
    v: Vec
    w: GroupElement


def _halve(x: Sequence[int], what: str) -> Vec:
    out = []
    for a in x:
        if a % 2:
            raise ParityError(f"{what}: {tuple(x)} is not divisible by 2")
        out.append(a // 2)
    return tuple(out)


class AdjointModel:
    def __init__(self, group: CoxeterGroup):
        self.group = group
        self.rank = group.odd.count
        self.class_of = group.odd.class_of
        self.representatives = group.odd.representatives

    # -- class lengths and cocycles -------------------------------------------

    def unit(self, k: int) -> Vec:
        return tuple(int(i == k) for i in range(self.rank))

    @property
    def zero(self) -> Vec:
        return (0,) * self.rank

    def class_length(self, w: GroupElement | Sequence[int]) -> Vec:
        """Letters of each class in a reduced word. ``w`` must already be reduced."""
        word = w.word if isinstance(w, GroupElement) else w
        v = [0] * self.rank
        for s in word:
            v[self.class_of[s]] += 1
        return tuple(v)

    def cocycle_c(self, w1: GroupElement, w2: GroupElement) -> Vec:
        w12 = self.group.multiply(w1, w2)
        a, b, ab = self.class_length(w1), self.class_length(w2), self.class_length(w12)
        return _halve([x + y - z for x, y, z in zip(a, b, ab)], "c(w1, w2)")

    def tau_rho(self, w1: GroupElement, w2: GroupElement) -> int:
        """1 when both lengths are odd, else 0. Needs a single reflection class."""
        if self.rank != 1:
            raise NotSingleClass(f"parity cocycle needs c(W) = 1, got {self.rank}")
        return int(len(w1) % 2 == 1 and len(w2) % 2 == 1)

    # -- the group Ad(Q_W) -----------------------------------------------------

    @property
    def identity(self) -> AdElement:
        return AdElement(self.zero, self.group.identity)

    def lift(self, w: GroupElement) -> AdElement:
        """The Matsumoto section: product of the e_s along a reduced word of w."""
        return AdElement(self.zero, w)

    def e(self, s: int) -> AdElement:
        return self.lift(self.group.gen(s))

    def central(self, v: Sequence[int]) -> AdElement:
        return AdElement(tuple(int(x) for x in v), self.group.identity)

    def ad_mul(self, a: AdElement, b: AdElement) -> AdElement:
        c = self.cocycle_c(a.w, b.w)
        v = tuple(x + y + z for x, y, z in zip(a.v, b.v, c))
        return AdElement(v, self.group.multiply(a.w, b.w))

    def ad_inv(self, a: AdElement) -> AdElement:
        winv = self.group.inverse(a.w)
        c = self.cocycle_c(winv, a.w)
        return AdElement(tuple(-x - y for x, y in zip(a.v, c)), winv)

    def product(self, *elems: AdElement) -> AdElement:
        out = self.identity
        for a in elems:
            out = self.ad_mul(out, a)
        return out

    def power(self, a: AdElement, k: int) -> AdElement:
        if k < 0:
            a, k = self.ad_inv(a), -k
        out, base = self.identity, a
        while k:
            if k & 1:
                out = self.ad_mul(out, base)
            base = self.ad_mul(base, base)
            k >>= 1
        return out

    def conj(self, x: AdElement, y: AdElement) -> AdElement:
        """y^-1 x y."""
        return self.product(self.ad_inv(y), x, y)

    def phi(self, a: AdElement) -> GroupElement:
        return a.w

    def ab(self, a: AdElement) -> Vec:
        """Abelianization Ad(Q_W) -> Z^c, (v, w) -> 2v + l(w)."""
        return tuple(2 * x + y for x, y in zip(a.v, self.class_length(a.w)))

    def embed_generator(self, x: Reflection | GroupElement) -> AdElement:
        """e_x for a reflection x: the unique (v, x) whose abelianization is u_class(x)."""
        if isinstance(x, Reflection):
            elem, k = x.element, x.class_index
        else:
            elem, k = x, self.reflection_class(x)
        cl = self.class_length(elem)
        v = _halve([u - l for u, l in zip(self.unit(k), cl)], "embedding of a reflection")
        return AdElement(v, elem)

    def reflection_class(self, x: GroupElement) -> int:
        """Class of a reflection: the unique class with an odd letter count."""
        odd = [k for k, l in enumerate(self.class_length(x)) if l % 2]
        if len(odd) != 1:
            raise ValueError(f"{self.group.format(x)!r} is not a reflection")
        return odd[0]

    def is_reflection(self, x: GroupElement) -> bool:
        # a reflection longer than 1 always has a conjugate by some s that is 2 shorter
        g = self.group
        while len(x) > 1:
            for s in range(g.n):
                y = g.conjugate(x, g.gen(s))
                if len(y) < len(x):
                    x = y
                    break
            else:
                return False
        return len(x) == 1


# -- tables over a finite group ----------------------------------------------

@dataclass(frozen=True, eq=False)
class CocycleTable:
    """Values ``c[i, j]`` in Z^rank for every pair of element indices."""

    c: np.ndarray
    normalized: bool

    @property
    def rank(self) -> int:
        return self.c.shape[2]


def class_length_array(model: AdjointModel, table: GroupTable) -> np.ndarray:
    return np.array([model.class_length(g) for g in table.elements], dtype=np.int64).reshape(
        len(table), model.rank)


def cocycle_table(model: AdjointModel, table: GroupTable) -> CocycleTable:
    mt = table.mult_table()
    L = class_length_array(model, table)
    twice = L[:, None, :] + L[None, :, :] - L[mt]
    if (twice % 2).any():
        raise ParityError("class-length defect is odd somewhere")
    c = twice // 2
    return CocycleTable(c, bool((c[0] == 0).all() and (c[:, 0] == 0).all()))


def tau_table(model: AdjointModel, table: GroupTable) -> CocycleTable:
    if model.rank != 1:
        raise NotSingleClass(f"parity cocycle needs c(W) = 1, got {model.rank}")
    odd = table.lengths() % 2
    t = (odd[:, None] * odd[None, :]).astype(np.int64)[:, :, None]
    return CocycleTable(t, True)


def zero_table(model: AdjointModel, table: GroupTable) -> CocycleTable:
    N = len(table)
    return CocycleTable(np.zeros((N, N, model.rank), dtype=np.int64), True)


def scaled(t: CocycleTable, k: int) -> CocycleTable:
    return CocycleTable(t.c * k, t.normalized)


def cocycle_identity_defect(t: CocycleTable, table: GroupTable, triples=None) -> int:
    """Number of triples (exhaustive, or the given index arrays) where the identity fails."""
    mt = table.mult_table()
    c = t.c
    if triples is not None:
        a, b, d = (np.asarray(x) for x in triples)
        lhs = c[a, b] + c[mt[a, b], d]
        rhs = c[b, d] + c[a, mt[b, d]]
        return int((lhs != rhs).any(axis=-1).sum())
    bad = 0
    N = len(table)
    j = np.arange(N)
    for i in range(N):
        # rows: w1 = i, axes [w2, w3]
        lhs = c[i, j][:, None, :] + c[mt[i, j][:, None], j[None, :]]
        rhs = c + c[i, mt]
        bad += int((lhs != rhs).any(axis=-1).sum())
    return bad


def coboundary(b: np.ndarray, table: GroupTable) -> np.ndarray:
    """(db)(w1, w2) = b(w1) + b(w2) - b(w1 w2)."""
    mt = table.mult_table()
    return b[:, None, :] + b[None, :, :] - b[mt]


def coboundary_solve(table: GroupTable, f: CocycleTable | np.ndarray,
                     g: CocycleTable | np.ndarray) -> np.ndarray | None:
    """Integer b: W -> Z^rank with b(1) = 0 and f - g = db, or None.

    A solution is pinned down by its values on the generators, because
    b(ws) = b(w) + b(s) - d(w, s). Substituting that parametrisation into every
    pair equation leaves an integer system in n unknowns per coordinate, which
    is solved exactly.
    """
    fc = f.c if isinstance(f, CocycleTable) else np.asarray(f)
    gc = g.c if isinstance(g, CocycleTable) else np.asarray(g)
    if fc.shape != gc.shape:
        raise ValueError(f"cocycle shapes differ: {fc.shape} vs {gc.shape}")
    d_all = (fc - gc).astype(np.int64)
    N, _, rank = d_all.shape
    n = table.right.shape[1]
    mt = table.mult_table()
    words = [g_.word for g_ in table.elements]
    parent = np.zeros(N, dtype=np.int64)
    last = np.zeros(N, dtype=np.int64)
    for i in range(1, N):
        parent[i] = table.index[words[i][:-1]]
        last[i] = words[i][-1]
    coef = np.zeros((N, n), dtype=np.int64)
    for i in range(1, N):
        coef[i] = coef[parent[i]]
        coef[i, last[i]] += 1
    gen_idx = table.right[0]
    pair_coef = (coef[:, None, :] + coef[None, :, :] - coef[mt]).reshape(N * N, n)

    b = np.zeros((N, rank), dtype=np.int64)
    for k in range(rank):
        d = d_all[:, :, k]
        const = np.zeros(N, dtype=np.int64)
        for i in range(1, N):
            if len(words[i]) > 1:
                const[i] = const[parent[i]] - d[parent[i], gen_idx[last[i]]]
        rhs = (d - const[:, None] - const[None, :] + const[mt]).reshape(N * N)
        system = np.unique(np.column_stack([pair_coef, rhs]), axis=0)
        x = solve_integer(system[:, :n].tolist(), system[:, n].tolist())
        if x is None:
            return None
        b[:, k] = coef @ np.array(x, dtype=np.int64) + const
    return b


# -- structural checks ---------------------------------------------------------

def braid_relations(model: AdjointModel) -> CheckResult:
    """(e_s e_t)_m == (e_t e_s)_m for every finite bond."""
    g = model.group
    M = g.matrix
    failures = []
    count = 0
    for s in range(g.n):
        for t in range(s + 1, g.n):
            m = M.m[s][t]
            if m == INF:
                continue
            lhs = model.product(*[model.e((s, t)[k % 2]) for k in range(m)])
            rhs = model.product(*[model.e((t, s)[k % 2]) for k in range(m)])
            count += 1
            if lhs != rhs:
                failures.append((M.labels[s], M.labels[t]))
    return check("braid_relations", not failures, f"{count} relations", failures=failures)


def verify_adjoint_relations(model: AdjointModel, q: QuandleTable) -> CheckResult:
    """e_y^-1 e_x e_y = e_{x*y} and e_y e_x e_y^-1 = e_{x*y} for all reflection pairs."""
    emb = [model.embed_generator(x) for x in q.items]
    inv = [model.ad_inv(e) for e in emb]
    failures = []
    N = len(q)
    for i in range(N):
        for j in range(N):
            target = emb[q.star(i, j)]
            left = model.product(inv[j], emb[i], emb[j])
            right = model.product(emb[j], emb[i], inv[j])
            if left != target or right != target:
                failures.append((i, j))
    squares = all(model.ad_mul(e, e) == model.central(model.unit(x.class_index))
                  for e, x in zip(emb, q.items))
    braid = braid_relations(model)
    ok = not failures and squares and braid.passed
    return check("adjoint_relations", ok,
                 f"{N * N} reflection pairs, {braid.detail}",
                 failures=failures[:10], squares=squares, braid=braid.passed)


def abelianization_check(model: AdjointModel, table: GroupTable | None = None,
                         samples: int = 2000, box: int = 3, seed: int = 0) -> CheckResult:
    """Ab(v, w) = 2v + l(w) is a homomorphism onto Z^c and the kernel of phi is central."""
    g = model.group
    rng = random.Random(seed)
    if table is not None:
        elems = list(table.elements)
    else:
        elems = [g.element([rng.randrange(g.n) for _ in range(rng.randint(0, 8))])
                 for _ in range(200)]

    def rand_ad():
        v = tuple(rng.randint(-box, box) for _ in range(model.rank))
        return AdElement(v, rng.choice(elems))

    hom = True
    for _ in range(samples):
        a, b = rand_ad(), rand_ad()
        lhs = model.ab(model.ad_mul(a, b))
        rhs = tuple(x + y for x, y in zip(model.ab(a), model.ab(b)))
        if lhs != rhs:
            hom = False
            break
    # images of the representative generators form the standard basis
    basis = [model.ab(model.e(s)) for s in model.representatives]
    onto = basis == [model.unit(k) for k in range(model.rank)]
    squares = all(model.ad_mul(model.e(s), model.e(s)) == model.central(model.unit(model.class_of[s]))
                  for s in range(g.n))
    central = True
    for k in range(model.rank):
        z = model.central(model.unit(k))
        for w in elems:
            a = model.lift(w)
            if model.ad_mul(z, a) != model.ad_mul(a, z):
                central = False
                break
    ok = hom and onto and squares and central
    return check("adjoint_abelianization", ok,
                 f"homomorphism on {samples} pairs, rank {model.rank}",
                 homomorphism=hom, onto=onto, squares=squares, central=central)


def nonsplit_witness(model: AdjointModel, box: int = 3) -> CheckResult:
    """Every element above a generator has infinite order, so phi has no section.

    (v, s)^2 = (2v + u_class(s), 1) always has an odd coordinate, hence is a
    non-trivial central element; its powers never return to the identity.
    """
    g = model.group
    bad = []
    checked = 0
    rng = random.Random(0)
    vs = [tuple(rng.randint(-box, box) for _ in range(model.rank)) for _ in range(50)]
    vs.append(model.zero)
    for s in range(g.n):
        k = model.class_of[s]
        for v in vs:
            a = AdElement(v, g.gen(s))
            sq = model.ad_mul(a, a)
            expected = tuple(2 * x + u for x, u in zip(v, model.unit(k)))
            checked += 1
            if sq.w != g.identity or sq.v != expected or sq.v[k] % 2 != 1:
                bad.append((s, v))
    return check("nonsplit", not bad,
                 f"{checked} lifts of generators square to non-trivial central elements",
                 failures=bad[:10])


def commutator_check(model: AdjointModel, pair_samples: int = 20_000, box: int = 2,
                     seed: int = 0) -> CheckResult:
    """phi maps [Ad, Ad] isomorphically onto [W, W]; for one class, Ad = [W, W] x| Z."""
    g = model.group
    table = g.enumerate()
    N = len(table)
    L = class_length_array(model, table)
    derived = table.commutator_subgroup()
    even = {i for i in range(N) if not (L[i] % 2).any()}
    part_a = derived == even

    # kernel of Ab, a subset of Z^c x W parametrised by [W, W]
    K = {AdElement(tuple(int(x) for x in -L[i] // 2), table.elements[i]) for i in derived}
    in_kernel = all(not any(model.ab(k)) for k in K)

    # brute-force [Ad, Ad]: close the commutators of lifts under multiplication
    rng = random.Random(seed)
    if N * N <= pair_samples:
        pairs = [(i, j) for i in range(N) for j in range(N)]
    else:
        pairs = [(rng.randrange(N), rng.randrange(N)) for _ in range(pair_samples)]
    gens = set()
    for i, j in pairs:
        a, b = model.lift(table.elements[i]), model.lift(table.elements[j])
        gens.add(model.product(a, b, model.ad_inv(a), model.ad_inv(b)))
    gens.discard(model.identity)
    closure = {model.identity}
    frontier = [model.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for y in gens:
                z = model.ad_mul(x, y)
                if z not in closure:
                    closure.add(z)
                    if len(closure) > 4 * N:
                        raise EnumerationCapExceeded("commutator closure in Ad(Q_W) did not stop")
                    nxt.append(z)
        frontier = nxt
    part_b = closure == K and len({k.w for k in K}) == len(K) == len(derived)

    data = {"commutator_order": len(derived), "kernel_order": len(K), "closure_order": len(closure)}
    part_c = True
    if model.rank == 1:
        z = model.e(model.representatives[0])
        powers_ok = all(model.power(z, k) not in K for k in range(-2 * N, 2 * N + 1) if k)
        zinv = model.ad_inv(z)
        normal = all(model.product(zinv, k, z) in K for k in K)
        generate = True
        for w in table.elements:
            for v in range(-box, box + 1):
                a = AdElement((v,), w)
                n_ = model.ab(a)[0]
                if model.ad_mul(model.power(z, -n_), a) not in K:
                    generate = False
        part_c = powers_ok and normal and generate
        data.update(split_powers=powers_ok, split_normal=normal, split_generate=generate)
    ok = part_a and in_kernel and part_b and part_c
    return check("commutator", ok, f"|[W,W]| = {len(derived)}, |[Ad,Ad]| = {len(closure)}", **data)


def pullback_check(model: AdjointModel, box: int = 3, samples: int = 10_000,
                   seed: int = 0) -> CheckResult:
    """(v, w) -> (w, 2v + l(w)) is an isomorphism onto the fibre product over W_Ab."""
    g = model.group
    table = g.enumerate()
    rng = random.Random(seed)
    rank = model.rank

    def box_vectors():
        return itertools.product(range(-box, box + 1), repeat=rank)

    parity = True
    images = set()
    count = 0
    for w in table.elements:
        cl = model.class_length(w)
        for v in box_vectors():
            a = tuple(2 * x + y for x, y in zip(v, cl))
            if any((x - y) % 2 for x, y in zip(a, cl)):
                parity = False
            images.add((w, a))
            count += 1
    injective = len(images) == count

    def fibre_preimage(w, a):
        cl = model.class_length(w)
        return AdElement(_halve([x - y for x, y in zip(a, cl)], "fibre product"), w)

    surjective = all(model.ab(fibre_preimage(w, a)) == a for (w, a) in images)

    hom = True
    elems = table.elements
    for _ in range(samples):
        a = AdElement(tuple(rng.randint(-box, box) for _ in range(rank)), rng.choice(elems))
        b = AdElement(tuple(rng.randint(-box, box) for _ in range(rank)), rng.choice(elems))
        p = model.ad_mul(a, b)
        if p.w != g.multiply(a.w, b.w) or model.ab(p) != tuple(
                x + y for x, y in zip(model.ab(a), model.ab(b))):
            hom = False
            break
    ok = parity and injective and surjective and hom
    return check("pullback", ok, f"{count} box elements, {samples} sampled products",
                 parity=parity, injective=injective, surjective=surjective, homomorphism=hom)
