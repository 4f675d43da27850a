"""Exact arithmetic in a Coxeter group.

Every element is stored as its ShortLex-least reduced word. Two backends compute
that normal form:

* ``WordEngine`` works for any Coxeter group. It keeps the complete set of
  reduced words of an element (its braid-move orbit) and multiplies by one
  generator at a time: ``s`` is a right descent of ``w`` iff some reduced word
  of ``w`` ends in ``s``.
* ``PermEngine`` is for finite groups. It acts on the root system by
  permutations and peels off the smallest left descent until it reaches the
  identity.
"""
from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT_LIMITS, Limits
from .errors import EnumerationCapExceeded, WordProblemBudgetExceeded
from .graph import INF, CoxeterMatrix, odd_components
from .rootsys import RootClosure, group_order, is_finite_type, root_closure

Word = tuple[int, ...]


@dataclass(frozen=True)
class GroupElement:
    word: Word

    def __len__(self):
        return len(self.word)

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def sort_key(self):
        return (len(self.word), self.word)


class BoundedCache:
    """Thread-safe LRU map."""

    def __init__(self, maxsize: int):
        self.maxsize = maxsize
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            value = self._data.get(key)
            if value is not None:
                self._data.move_to_end(key)
            return value

    def put(self, key, value):
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.maxsize:
                self._data.popitem(last=False)

    def __len__(self):
        return len(self._data)


def free_reduce(word: Iterable[int]) -> Word:
    """Cancel adjacent equal letters until none remain."""
    out: list[int] = []
    for s in word:
        if out and out[-1] == s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def braid_moves(M: CoxeterMatrix, word: Word):
    """Yield every word reachable from ``word`` by one braid move."""
    L = len(word)
    for i in range(L - 1):
        a, b = word[i], word[i + 1]
        if a == b:
            continue
        m = M.m[a][b]
        if m == INF or i + m > L:
            continue
        ok = True
        for k in range(2, m):
            if word[i + k] != (a if k % 2 == 0 else b):
                ok = False
                break
        if ok:
            swapped = tuple(b if k % 2 == 0 else a for k in range(m))
            yield word[:i] + swapped + word[i + m:]


def braid_closure(M: CoxeterMatrix, seeds: Iterable[Word], budget: int) -> frozenset:
    """All words reachable from ``seeds`` by braid moves, capped at ``budget`` states."""
    seen = set(seeds)
    stack = list(seen)
    while stack:
        u = stack.pop()
        for v in braid_moves(M, u):
            if v not in seen:
                seen.add(v)
                if len(seen) > budget:
                    raise WordProblemBudgetExceeded(
                        f"braid orbit exceeds {budget} words (length {len(u)})"
                    )
                stack.append(v)
    return frozenset(seen)


class WordEngine:
    name = "word"

    def __init__(self, M: CoxeterMatrix, limits: Limits):
        self.M = M
        self.budget = limits.word_budget
        self._orbits = BoundedCache(max(16, limits.cache_size // 16))
        self._step = BoundedCache(limits.cache_size)

    def orbit(self, canon: Word) -> frozenset:
        orb = self._orbits.get(canon)
        if orb is None:
            orb = braid_closure(self.M, [canon], self.budget)
            self._orbits.put(canon, orb)
        return orb

    def right_mul(self, canon: Word, s: int) -> Word:
        key = (canon, s)
        out = self._step.get(key)
        if out is not None:
            return out
        orb = self.orbit(canon)
        shorter = [u[:-1] for u in orb if u[-1] == s] if canon else []
        if shorter:
            out = min(shorter)
            if self._orbits.get(out) is None:
                self._orbits.put(out, frozenset(shorter))
        else:
            new_orbit = braid_closure(self.M, [u + (s,) for u in orb], self.budget)
            out = min(new_orbit)
            self._orbits.put(out, new_orbit)
        self._step.put(key, out)
        return out

    def canonical(self, word: Sequence[int]) -> Word:
        canon: Word = ()
        for s in free_reduce(word):
            canon = self.right_mul(canon, s)
        return canon

    def multiply(self, a: Word, b: Word) -> Word:
        canon = a
        for s in b:
            canon = self.right_mul(canon, s)
        return canon


class PermEngine:
    name = "perm"

    def __init__(self, M: CoxeterMatrix, limits: Limits, closure: RootClosure):
        self.M = M
        self.closure = closure
        self.perms = closure.gen_perm
        self.simple = np.array(closure.simple)
        self.positive = closure.positive
        self.size = len(closure)
        self._cache = BoundedCache(limits.cache_size)

    def perm_of(self, word: Sequence[int]) -> np.ndarray:
        """Permutation of root indices induced by the product of ``word``."""
        p = np.arange(self.size)
        for s in word:
            p = p[self.perms[s]]
        return p

    def canonical_from_inverse(self, q: np.ndarray) -> Word:
        # q is the permutation of w^-1; s is a left descent of w iff w^-1(alpha_s) < 0
        out: list[int] = []
        while True:
            neg = ~self.positive[q[self.simple]]
            if not neg.any():
                return tuple(out)
            s = int(np.argmax(neg))
            out.append(s)
            q = q[self.perms[s]]

    def canonical(self, word: Sequence[int]) -> Word:
        word = free_reduce(word)
        hit = self._cache.get(word)
        if hit is not None:
            return hit
        out = self.canonical_from_inverse(self.perm_of(word[::-1]))
        self._cache.put(word, out)
        return out

    def multiply(self, a: Word, b: Word) -> Word:
        return self.canonical(a + b)


@dataclass(frozen=True, eq=False)
class GroupTable:
    """All elements of a finite W in ShortLex order, with the right Cayley graph."""

    elements: tuple[GroupElement, ...]
    index: dict
    right: np.ndarray

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def idx(self, g: GroupElement) -> int:
        return self.index[g.word]

    def lengths(self) -> np.ndarray:
        return np.array([len(g) for g in self.elements])

    def mul_idx(self, i: int, j: int) -> int:
        mt = self.__dict__.get("_mult")
        if mt is not None:
            return int(mt[i, j])
        for s in self.elements[j].word:
            i = self.right[i, s]
        return int(i)

    def mult_table(self, limit: int = 6000) -> np.ndarray:
        """Full |W| x |W| product table; refused above ``limit`` elements."""
        mt = self.__dict__.get("_mult")
        if mt is None:
            N = len(self)
            if N > limit:
                raise EnumerationCapExceeded(f"multiplication table for {N} elements refused")
            mt = np.empty((N, N), dtype=np.int32)
            col0 = np.arange(N)
            for j, g in enumerate(self.elements):
                col = col0
                for s in g.word:
                    col = self.right[col, s]
                mt[:, j] = col
            object.__setattr__(self, "_mult", mt)
        return mt

    def inverses(self) -> np.ndarray:
        inv = self.__dict__.get("_inv")
        if inv is None:
            inv = np.empty(len(self), dtype=np.int64)
            for i, g in enumerate(self.elements):
                k = 0
                for s in reversed(g.word):
                    k = self.right[k, s]
                inv[i] = k
            object.__setattr__(self, "_inv", inv)
        return inv

    def subgroup_closure(self, gens: Iterable[int]) -> set[int]:
        """Subgroup generated by the given element indices."""
        gens = sorted(set(int(g) for g in gens))
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for i in frontier:
                for g in gens:
                    j = self.mul_idx(i, g)
                    if j not in seen:
                        seen.add(j)
                        nxt.append(j)
            frontier = nxt
        return seen

    def commutator_subgroup(self) -> set[int]:
        """Brute force: close the set of all commutators g h g^-1 h^-1."""
        mt = self.mult_table()
        inv = self.inverses()
        gh = mt
        ginv_hinv = mt[inv[:, None], inv[None, :]]
        comms = np.unique(mt[gh, ginv_hinv])
        return self.subgroup_closure(comms.tolist())


class CoxeterGroup:
    """A Coxeter group with a chosen arithmetic backend.

    ``engine`` is ``"perm"`` (finite groups only), ``"word"`` or ``"auto"``,
    which picks the permutation engine whenever the group is finite.
    """

    def __init__(self, matrix: CoxeterMatrix, engine: str = "auto", limits: Limits = DEFAULT_LIMITS):
        self.matrix = matrix
        self.limits = limits
        self.n = matrix.n
        self.odd = odd_components(matrix)
        self.finite = is_finite_type(matrix)
        if engine == "auto":
            engine = "perm" if self.finite else "word"
        self._closure: RootClosure | None = None
        if engine == "perm":
            if not self.finite:
                raise ValueError("the permutation engine needs a finite group")
            self.engine = PermEngine(matrix, limits, self.root_closure())
        elif engine == "word":
            self.engine = WordEngine(matrix, limits)
        else:
            raise ValueError(f"unknown engine {engine!r}")
        self._table: GroupTable | None = None
        self._order: int | None = None
        self._lock = threading.Lock()

    def __repr__(self):
        return f"CoxeterGroup({list(self.matrix.labels)}, engine={self.engine.name!r})"

    # -- elements ----------------------------------------------------------

    @property
    def identity(self) -> GroupElement:
        return GroupElement(())

    def gen(self, i: int) -> GroupElement:
        return GroupElement((i,))

    @property
    def generators(self) -> tuple[GroupElement, ...]:
        return tuple(self.gen(i) for i in range(self.n))

    def element(self, word: Sequence[int]) -> GroupElement:
        """Normal form of the product of ``word``."""
        return GroupElement(self.engine.canonical(tuple(word)))

    def parse(self, text: str) -> GroupElement:
        return self.element(self.matrix.parse_word(text))

    def format(self, g: GroupElement) -> str:
        return self.matrix.format_word(g.word)

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        t = self._table
        if t is not None:
            return t.elements[t.mul_idx(t.index[a.word], t.index[b.word])]
        return GroupElement(self.engine.multiply(a.word, b.word))

    def inverse(self, a: GroupElement) -> GroupElement:
        return self.element(a.word[::-1])

    def conjugate(self, x: GroupElement, y: GroupElement) -> GroupElement:
        """y^-1 x y."""
        return self.element(y.word[::-1] + x.word + y.word)

    def product(self, *elements: GroupElement) -> GroupElement:
        out = self.identity
        for g in elements:
            out = self.multiply(out, g)
        return out

    def words_equal(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return self.engine.canonical(tuple(u)) == self.engine.canonical(tuple(v))

    def all_reduced_words(self, g: GroupElement) -> frozenset:
        if isinstance(self.engine, WordEngine):
            return self.engine.orbit(g.word)
        return braid_closure(self.matrix, [g.word], self.limits.word_budget)

    def ball(self, radius: int) -> list[GroupElement]:
        """Every element of length at most ``radius``, in ShortLex order."""
        layer = [self.identity]
        out = [self.identity]
        seen = {self.identity}
        for _ in range(radius):
            nxt = []
            for g in layer:
                for s in range(self.n):
                    h = self.multiply(g, self.gen(s))
                    if len(h) > len(g) and h not in seen:
                        seen.add(h)
                        nxt.append(h)
                        if len(seen) > self.limits.max_elements:
                            raise EnumerationCapExceeded(f"ball of radius {radius} too large")
            nxt.sort(key=GroupElement.sort_key)
            out.extend(nxt)
            layer = nxt
        return out

    def right_descents(self, g: GroupElement) -> tuple[int, ...]:
        return tuple(s for s in range(self.n)
                     if len(self.multiply(g, self.gen(s))) < len(g))

    # -- finite machinery ------------------------------------------------------

    def root_closure(self) -> RootClosure:
        if self._closure is None:
            self._closure = root_closure(self.matrix, self.limits.max_roots)
        return self._closure

    def enumerate(self) -> GroupTable:
        with self._lock:
            if self._table is None:
                self._table = self._enumerate()
            return self._table

    @property
    def table(self) -> GroupTable | None:
        return self._table

    def order(self) -> int:
        """|W| without enumerating, by a chain of parabolic coset counts."""
        if self._order is None:
            if not self.finite:
                raise EnumerationCapExceeded("W is infinite")
            self._order = group_order(self.matrix)
        return self._order

    def _enumerate(self) -> GroupTable:
        cap = self.limits.max_elements
        if not self.finite:
            raise EnumerationCapExceeded(
                "Coxeter form is not positive definite, so W is infinite"
            )
        if self.order() > cap:
            raise EnumerationCapExceeded(f"|W| = {self.order()} exceeds the cap of {cap} elements")
        n = self.n
        words: list[Word] = [()]
        right_rows: list[list[int]] = []
        if isinstance(self.engine, PermEngine):
            perms = self.engine.perms
            state = [np.arange(self.engine.size, dtype=np.int32)]
            seen = {state[0].tobytes(): 0}
            head = 0
            while head < len(words):
                p = state[head]
                row = []
                for s in range(n):
                    q = p[perms[s]]
                    k = q.tobytes()
                    j = seen.get(k)
                    if j is None:
                        j = len(words)
                        if j >= cap:
                            raise EnumerationCapExceeded(f"more than {cap} elements")
                        seen[k] = j
                        words.append(words[head] + (s,))
                        state.append(q)
                    row.append(j)
                right_rows.append(row)
                head += 1
        else:
            seen = {(): 0}
            head = 0
            while head < len(words):
                row = []
                for s in range(n):
                    w = self.engine.right_mul(words[head], s)
                    j = seen.get(w)
                    if j is None:
                        j = len(words)
                        if j >= cap:
                            raise EnumerationCapExceeded(f"more than {cap} elements")
                        seen[w] = j
                        words.append(w)
                    row.append(j)
                right_rows.append(row)
                head += 1
        elements = tuple(GroupElement(w) for w in words)
        index = {w: i for i, w in enumerate(words)}
        return GroupTable(elements, index, np.array(right_rows, dtype=np.int64))


def make_group(M: CoxeterMatrix, engine: str = "auto", limits: Limits = DEFAULT_LIMITS) -> CoxeterGroup:
    return CoxeterGroup(M, engine, limits)
