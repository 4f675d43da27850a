"""The Coxeter quandle: reflections of W under x * y = y x y."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .engine import CoxeterGroup, GroupElement
from .errors import EnumerationCapExceeded
from .graph import CoxeterMatrix, odd_components


@dataclass(frozen=True)
class Reflection:
    element: GroupElement
    class_index: int


@dataclass(frozen=True, eq=False)
class QuandleTable:
    items: tuple[Reflection, ...]
    op: np.ndarray
    index: dict

    def __len__(self):
        return len(self.items)

    def idx(self, x: GroupElement) -> int:
        return self.index[x.word]

    def star(self, i: int, j: int) -> int:
        return int(self.op[i, j])


def reflection_orbits(group: CoxeterGroup, limit: int | None = None) -> dict[GroupElement, int]:
    """Reflections found by closing S under conjugation by generators.

    Each reflection maps to the generator it was first reached from.
    """
    limit = limit if limit is not None else group.limits.max_elements
    found: dict[GroupElement, int] = {}
    frontier = []
    for s in range(group.n):
        g = group.gen(s)
        if g not in found:
            found[g] = s
            frontier.append(g)
    while frontier:
        nxt = []
        for x in frontier:
            for t in range(group.n):
                y = group.conjugate(x, group.gen(t))
                if y not in found:
                    found[y] = found[x]
                    if len(found) > limit:
                        raise EnumerationCapExceeded(f"more than {limit} reflections")
                    nxt.append(y)
        frontier = nxt
    return found


def reflections(group: CoxeterGroup) -> QuandleTable:
    """All reflections with the conjugation operation table (finite W)."""
    if not group.finite:
        raise EnumerationCapExceeded("infinitely many reflections")
    orbits = reflection_orbits(group)
    classes = group.odd.class_of
    items = sorted(orbits, key=GroupElement.sort_key)
    refl = tuple(Reflection(x, classes[orbits[x]]) for x in items)
    index = {x.word: i for i, x in enumerate(items)}
    N = len(items)
    op = np.empty((N, N), dtype=np.int64)
    for i, x in enumerate(items):
        for j, y in enumerate(items):
            op[i, j] = index[group.product(y, x, y).word]
    return QuandleTable(refl, op, index)


def conjugacy_classes(q: QuandleTable) -> list[list[int]]:
    """Orbits of the inner action, found by union-find on the operation table.

    Conjugation by all of W and by all reflections give the same orbits
    because reflections generate W.
    """
    N = len(q)
    parent = list(range(N))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(N):
        for j in range(N):
            a, b = find(i), find(int(q.op[i, j]))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(N):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def check_axioms(q: QuandleTable, exhaustive_limit: int = 60, samples: int = 10_000,
                 seed: int = 0) -> dict[str, bool]:
    op = q.op
    N = len(q)
    idem = bool((op[np.arange(N), np.arange(N)] == np.arange(N)).all())
    bij = all(len(set(op[:, j].tolist())) == N for j in range(N))
    if N <= exhaustive_limit:
        # axes are [x, y, z]
        lhs = op[op[:, :, None], np.arange(N)[None, None, :]]
        rhs = op[op[:, None, :], op[None, :, :]]
        dist = bool((lhs == rhs).all())
    else:
        rng = random.Random(seed)
        dist = True
        for _ in range(samples):
            x, y, z = rng.randrange(N), rng.randrange(N), rng.randrange(N)
            if op[op[x, y], z] != op[op[x, z], op[y, z]]:
                dist = False
                break
    return {"idempotent": idem, "right_bijective": bij, "self_distributive": dist}


@dataclass(frozen=True)
class WAbelianization:
    """W_Ab = (Z/2)^rank with basis the classes of the representative generators."""

    matrix: CoxeterMatrix
    rank: int
    basis: tuple[int, ...]
    class_of: tuple[int, ...]

    def __call__(self, word: Sequence[int]) -> tuple[int, ...]:
        """Image of any word (reduced or not): letter counts per class, mod 2."""
        v = [0] * self.rank
        for s in word:
            v[self.class_of[s]] ^= 1
        return tuple(v)

    def describe(self) -> str:
        return f"(Z/2)^{self.rank}"


def w_abelianization(M: CoxeterMatrix) -> WAbelianization:
    odd = odd_components(M)
    return WAbelianization(M, odd.count, odd.representatives, odd.class_of)


def brute_conjugacy_classes(group: CoxeterGroup, q: QuandleTable) -> list[list[int]]:
    """Classes under conjugation by every element of W (independent of the table)."""
    table = group.enumerate()
    remaining = set(range(len(q)))
    out = []
    while remaining:
        i = min(remaining)
        x = q.items[i].element
        cls = {q.idx(group.conjugate(x, w)) for w in table.elements}
        out.append(sorted(cls))
        remaining -= cls
    return sorted(out)
