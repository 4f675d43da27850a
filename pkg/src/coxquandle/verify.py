"""The named verification suite run by ``coxq verify``.

Each check returns a ``CheckResult``. Checks that need the whole group are
skipped for infinite W; the rest fall back to sampled words of bounded length.
"""
from __future__ import annotations

import functools
import random
import time
from typing import Callable

import numpy as np

from . import adjoint as ad
from .engine import CoxeterGroup
from .errors import ResourceCapExceeded
from .quandle import (brute_conjugacy_classes, check_axioms, conjugacy_classes, reflections,
                      w_abelianization)
from .report import CheckResult, check, skipped
from .rootsys import build_root_system, root_adjoint_check, root_rack_check

EXHAUSTIVE_ORDER = 200
SAMPLED_TRIPLES = 50_000
WORD_TRIPLES = 1_000
WORD_LENGTH = 8
MATSUMOTO_LENGTH = 12


class Context:
    """Lazily built objects shared between checks."""

    def __init__(self, group: CoxeterGroup, seed: int = 0):
        self.group = group
        self.model = ad.AdjointModel(group)
        self.seed = seed
        self._cache: dict = {}

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    @property
    def table(self):
        return self._get("table", self.group.enumerate)

    @property
    def quandle(self):
        return self._get("quandle", lambda: reflections(self.group))

    @property
    def roots(self):
        return self._get("roots", lambda: build_root_system(self.group))

    @property
    def cocycles(self):
        return self._get("cocycles", lambda: ad.cocycle_table(self.model, self.table))

    def random_words(self, count: int, max_len: int = WORD_LENGTH, seed_offset: int = 0):
        rng = random.Random(self.seed + seed_offset)
        n = self.group.n
        return [[rng.randrange(n) for _ in range(rng.randint(0, max_len))] for _ in range(count)]

    def random_elements(self, count: int, max_len: int = WORD_LENGTH, seed_offset: int = 0):
        return [self.group.element(w) for w in self.random_words(count, max_len, seed_offset)]


def _finite_only(fn):
    @functools.wraps(fn)
    def wrapper(ctx: Context) -> CheckResult:
        if not ctx.group.finite:
            return skipped(fn.__name__[len("check_"):], "W is infinite")
        return fn(ctx)
    return wrapper


@_finite_only
def check_odd_components(ctx):
    q = ctx.quandle
    brute = brute_conjugacy_classes(ctx.group, q)
    table_orbits = conjugacy_classes(q)
    odd = ctx.group.odd
    labelled = all(len({q.items[i].class_index for i in cls}) == 1 for cls in brute)
    gens_ok = all(
        q.items[q.idx(ctx.group.gen(s))].class_index == odd.class_of[s] for s in range(ctx.group.n))
    ok = len(brute) == odd.count and brute == table_orbits and labelled and gens_ok
    return check("odd_components", ok, f"{len(brute)} classes, {odd.count} odd components",
                 class_sizes=[len(c) for c in brute])


def check_abelianization_w(ctx):
    g = ctx.group
    abw = w_abelianization(g.matrix)
    if g.finite:
        T = ctx.table
        images = np.array([abw(x.word) for x in T.elements]).reshape(len(T), abw.rank)
        mt = T.mult_table()
        hom = bool(((images[:, None, :] + images[None, :, :]) % 2 == images[mt]).all())
        onto = len({tuple(v) for v in images.tolist()}) == 2 ** abw.rank
        kernel = {i for i, v in enumerate(images.tolist()) if not any(v)}
        ker_ok = kernel == T.commutator_subgroup()
        ok = hom and onto and ker_ok
        return check("abelianization_w", ok, f"W_Ab = {abw.describe()}",
                     homomorphism=hom, onto=onto, kernel_is_commutator=ker_ok)
    words = ctx.random_words(500)
    hom = True
    for u, v in zip(words[::2], words[1::2]):
        uv = g.element(u + v)
        if abw(uv.word) != tuple((a + b) % 2 for a, b in zip(abw(u), abw(v))):
            hom = False
    onto = {abw((s,)) for s in abw.basis} == {
        tuple(int(i == k) for i in range(abw.rank)) for k in range(abw.rank)}
    return check("abelianization_w", hom and onto, f"W_Ab = {abw.describe()} (sampled words)",
                 homomorphism=hom, onto=onto)


@_finite_only
def check_quandle_axioms(ctx):
    res = check_axioms(ctx.quandle)
    return check("quandle_axioms", all(res.values()), f"|Q| = {len(ctx.quandle)}", **res)


def check_class_length_invariance(ctx):
    g, m = ctx.group, ctx.model
    if g.finite:
        elems = [x for x in ctx.table.elements if len(x) <= MATSUMOTO_LENGTH][:2000]
    else:
        elems = g.ball(WORD_LENGTH)
    bad = []
    words = 0
    for x in elems:
        orbit = g.all_reduced_words(x)
        words += len(orbit)
        cls = {m.class_length(u) for u in orbit}
        if len(cls) != 1 or any(len(u) != len(x) for u in orbit):
            bad.append(g.format(x))
    return check("class_length_invariance", not bad,
                 f"{len(elems)} elements, {words} reduced words", failures=bad[:10])


def check_cocycle(ctx):
    g, m = ctx.group, ctx.model
    gen_sq = all(m.cocycle_c(g.gen(s), g.gen(s)) == m.unit(m.class_of[s]) for s in range(g.n))
    if g.finite:
        T = ctx.table
        N = len(T)
        ct = ctx.cocycles
        nonneg = bool((ct.c >= 0).all())
        if N <= EXHAUSTIVE_ORDER:
            defect = ad.cocycle_identity_defect(ct, T)
            detail = f"exhaustive: {N * N} pairs / {N ** 3} triples"
        else:
            rng = np.random.default_rng(ctx.seed)
            triples = rng.integers(0, N, size=(3, SAMPLED_TRIPLES))
            defect = ad.cocycle_identity_defect(ct, T, triples)
            detail = f"{N * N} pairs, {SAMPLED_TRIPLES} sampled triples"
        ok = ct.normalized and defect == 0 and gen_sq and nonneg
        return check("cocycle", ok, detail, normalized=ct.normalized, identity_failures=defect,
                     generator_squares=gen_sq, nonnegative=nonneg)
    elems = ctx.random_elements(3 * WORD_TRIPLES)
    defect = 0
    normalized = True
    for a, b, c in zip(elems[0::3], elems[1::3], elems[2::3]):
        ab, bc = g.multiply(a, b), g.multiply(b, c)
        lhs = [x + y for x, y in zip(m.cocycle_c(a, b), m.cocycle_c(ab, c))]
        rhs = [x + y for x, y in zip(m.cocycle_c(b, c), m.cocycle_c(a, bc))]
        defect += lhs != rhs
        normalized &= m.cocycle_c(g.identity, a) == m.zero == m.cocycle_c(a, g.identity)
    ok = defect == 0 and normalized and gen_sq
    return check("cocycle", ok, f"{WORD_TRIPLES} sampled word triples (length <= {WORD_LENGTH})",
                 normalized=normalized, identity_failures=defect, generator_squares=gen_sq)


@_finite_only
def check_adjoint_relations(ctx):
    return ad.verify_adjoint_relations(ctx.model, ctx.quandle)


def check_braid_relations(ctx):
    return ad.braid_relations(ctx.model)


def check_adjoint_abelianization(ctx):
    table = ctx.table if ctx.group.finite else None
    return ad.abelianization_check(ctx.model, table, seed=ctx.seed)


def check_nonsplit(ctx):
    return ad.nonsplit_witness(ctx.model)


def _single_class_finite(fn):
    @functools.wraps(fn)
    def wrapper(ctx):
        if ctx.model.rank != 1:
            return skipped(fn.__name__[len("check_"):],
                           f"c(W) = {ctx.model.rank}, the parity cocycle needs c(W) = 1")
        return fn(ctx)
    return _finite_only(wrapper)


@_single_class_finite
def check_coboundary_tau(ctx):
    T, m = ctx.table, ctx.model
    b = ad.coboundary_solve(T, ctx.cocycles, ad.tau_table(m, T))
    if b is None:
        return check("coboundary_tau", False, "no integer witness for c - tau = db")
    half = (T.lengths() // 2)[:, None]
    residual = ad.coboundary(b - half, T)
    ok = not residual.any() and not b[0].any()
    return check("coboundary_tau", ok, "c - tau = d(floor(l/2))",
                 witness_is_half_length=bool((b == half).all()))


@_single_class_finite
def check_h2_order_two(ctx):
    T, m = ctx.table, ctx.model
    zero = ad.zero_table(m, T)
    once = ad.coboundary_solve(T, ctx.cocycles, zero)
    twice = ad.coboundary_solve(T, ad.scaled(ctx.cocycles, 2), zero)
    ok = once is None and twice is not None
    return check("h2_order_two", ok, "[c] != 0 and 2[c] = 0",
                 c_is_coboundary=once is not None, twice_c_is_coboundary=twice is not None)


@_finite_only
def check_commutator(ctx):
    return ad.commutator_check(ctx.model, seed=ctx.seed)


@_finite_only
def check_pullback(ctx):
    return ad.pullback_check(ctx.model, seed=ctx.seed)


@_finite_only
def check_root_rack(ctx):
    return root_rack_check(ctx.roots, ctx.quandle)


@_finite_only
def check_root_adjoint(ctx):
    return root_adjoint_check(ctx.roots, ctx.model)


SUITE: dict[str, Callable[[Context], CheckResult]] = {
    fn.__name__[len("check_"):]: fn
    for fn in sorted([
        check_abelianization_w, check_adjoint_abelianization, check_adjoint_relations,
        check_braid_relations, check_class_length_invariance, check_coboundary_tau,
        check_cocycle, check_commutator, check_h2_order_two, check_nonsplit,
        check_odd_components, check_pullback, check_quandle_axioms, check_root_adjoint,
        check_root_rack,
    ], key=lambda f: f.__name__)
}


def run_suite(group: CoxeterGroup, only: set[str] | None = None, seed: int = 0
              ) -> tuple[list[CheckResult], dict[str, float]]:
    ctx = Context(group, seed)
    results, timings = [], {}
    unknown = set(only or ()) - set(SUITE)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    for name, fn in SUITE.items():
        if only is not None and name not in only:
            results.append(skipped(name, "not selected"))
            continue
        t0 = time.perf_counter()
        try:
            res = fn(ctx)
        except ResourceCapExceeded as exc:
            res = skipped(name, f"resource cap: {exc}")
        timings[name] = round((time.perf_counter() - t0) * 1000, 3)
        results.append(res)
    return results, timings
