"""Brute-force reference computations that share no code with the package.

Groups are realised as explicit real matrices in the geometric representation
(built here from scratch) and closed under multiplication. Matrices are
compared after rounding, which is safe at the sizes used in the tests.
"""
from __future__ import annotations

import math
from itertools import product

import numpy as np


def form_matrix(m):
    n = len(m)
    B = np.empty((n, n))
    for i, j in product(range(n), repeat=2):
        B[i, j] = -1.0 if m[i][j] == 0 else -math.cos(math.pi / m[i][j])
    return B


def generator_matrices(m):
    """Matrices of the simple reflections acting on column vectors."""
    B = form_matrix(m)
    n = len(m)
    gens = []
    for s in range(n):
        S = np.eye(n)
        S[s, :] -= 2 * B[s, :]
        gens.append(S)
    return gens


def _key(A):
    return tuple(np.round(A, 6).ravel().tolist())


class MatrixGroup:
    def __init__(self, m, cap=20000):
        self.m = m
        self.gens = generator_matrices(m)
        n = len(m)
        self.elements = [np.eye(n)]
        self.index = {_key(self.elements[0]): 0}
        head = 0
        while head < len(self.elements):
            A = self.elements[head]
            for S in self.gens:
                C = A @ S
                k = _key(C)
                if k not in self.index:
                    if len(self.elements) >= cap:
                        raise RuntimeError("oracle cap")
                    self.index[k] = len(self.elements)
                    self.elements.append(C)
            head += 1

    def __len__(self):
        return len(self.elements)

    def idx(self, A):
        return self.index[_key(A)]

    def reflections(self):
        out = set()
        for g in self.elements:
            ginv = np.linalg.inv(g)
            for S in self.gens:
                out.add(self.idx(ginv @ S @ g))
        return out

    def reflection_classes(self):
        refl = self.reflections()
        classes = []
        seen = set()
        for r in sorted(refl):
            if r in seen:
                continue
            R = self.elements[r]
            cls = {self.idx(np.linalg.inv(g) @ R @ g) for g in self.elements}
            seen |= cls
            classes.append(cls)
        return classes

    def commutator_subgroup_order(self):
        E = self.elements
        inv = [np.linalg.inv(g) for g in E]
        comms = {self.idx(E[i] @ E[j] @ inv[i] @ inv[j])
                 for i in range(len(E)) for j in range(len(E))}
        closure = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for c in comms:
                    k = self.idx(E[a] @ E[c])
                    if k not in closure:
                        closure.add(k)
                        nxt.append(k)
            frontier = nxt
        return len(closure)

    def root_count(self):
        n = len(self.m)
        vecs = set()
        for g in self.elements:
            for s in range(n):
                vecs.add(tuple(np.round(g[:, s], 6).tolist()))
        return len(vecs)


def odd_component_count(m):
    n = len(m)
    seen = set()
    count = 0
    for s in range(n):
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            a = stack.pop()
            for b in range(n):
                if b not in seen and m[a][b] not in (0, 2) and m[a][b] % 2 == 1:
                    seen.add(b)
                    stack.append(b)
    return count


def perm_compose(p, q):
    """(p q)(i) = p(q(i)); permutations as tuples."""
    return tuple(p[i] for i in q)


def symmetric_group_elements(n):
    from itertools import permutations
    return list(permutations(range(n)))


def shortlex_words(m, cap=20000):
    """Map matrix key -> ShortLex-least word, by trying all words length by length."""
    gens = generator_matrices(m)
    n = len(m)
    best = {_key(np.eye(n)): ()}
    layer = [((), np.eye(n))]
    while layer:
        nxt = []
        for word, A in layer:  # layer is in lexicographic order
            for s in range(n):
                C = A @ gens[s]
                k = _key(C)
                if k not in best:
                    best[k] = word + (s,)
                    nxt.append((word + (s,), C))
        if len(best) > cap:
            raise RuntimeError("oracle cap")
        layer = nxt
    return best


def word_matrix(m, word):
    gens = generator_matrices(m)
    A = np.eye(len(m))
    for s in word:
        A = A @ gens[s]
    return A


def matrix_key(A):
    return _key(A)
