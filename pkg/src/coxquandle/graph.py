"""Coxeter matrices: parsing, validation, the named catalog and the odd subgraph.

Bond orders are stored as Python ints, with ``INF`` (``math.inf``) standing for
an infinite bond. In the JSON interchange format an infinite bond is written 0.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import GraphSyntaxError, ValidationError

INF = math.inf


def is_odd_bond(m) -> bool:
    return m != INF and m >= 3 and m % 2 == 1


@dataclass(frozen=True)
class CoxeterMatrix:
    labels: tuple[str, ...]
    m: tuple[tuple, ...]

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise ValidationError("a Coxeter system needs at least one generator")
        if len(set(self.labels)) != n:
            raise ValidationError(f"duplicate generator labels in {list(self.labels)}")
        if len(self.m) != n or any(len(row) != n for row in self.m):
            raise ValidationError(f"bond matrix must be {n}x{n}")
        for i in range(n):
            if self.m[i][i] != 1:
                raise ValidationError(f"m({self.labels[i]},{self.labels[i]}) must be 1")
            for j in range(i + 1, n):
                a, b = self.m[i][j], self.m[j][i]
                if a != b:
                    raise ValidationError(
                        f"asymmetric bond m({self.labels[i]},{self.labels[j]})={a} "
                        f"but m({self.labels[j]},{self.labels[i]})={b}"
                    )
                if a != INF and (not isinstance(a, int) or a < 2):
                    raise ValidationError(
                        f"m({self.labels[i]},{self.labels[j]})={a}; off-diagonal "
                        "bond orders must be integers >= 2 (or 0 for infinity)"
                    )

    @property
    def n(self) -> int:
        return len(self.labels)

    def bond(self, i: int, j: int):
        return self.m[i][j]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown generator {label!r}") from None

    def parse_word(self, text: str) -> tuple[int, ...]:
        """Space-separated generator labels to a tuple of indices."""
        return tuple(self.index(tok) for tok in text.split())

    def format_word(self, word: Sequence[int]) -> str:
        return " ".join(self.labels[i] for i in word)

    def is_finite_bonds(self) -> bool:
        return all(x != INF for row in self.m for x in row)

    def to_json(self) -> dict:
        return {
            "generators": list(self.labels),
            "m": [[0 if x == INF else int(x) for x in row] for row in self.m],
        }

    def relabel(self, perm: Sequence[int]) -> "CoxeterMatrix":
        """Matrix with generator ``perm[k]`` moved to position ``k``."""
        labels = tuple(self.labels[p] for p in perm)
        m = tuple(tuple(self.m[p][q] for q in perm) for p in perm)
        return CoxeterMatrix(labels, m)


def from_bonds(labels: Sequence[str], rows: Sequence[Sequence[int]]) -> CoxeterMatrix:
    """Build from an integer matrix where 0 encodes an infinite bond."""
    m = []
    for row in rows:
        out = []
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError(f"bond order {x!r} is not an integer")
            out.append(INF if x == 0 else x)
        m.append(tuple(out))
    return CoxeterMatrix(tuple(labels), tuple(m))


def parse_graph(text: str) -> CoxeterMatrix:
    """Parse the JSON interchange format or a ``coxeter <name>`` alias."""
    stripped = text.strip()
    if stripped.startswith("coxeter "):
        return catalog(stripped[len("coxeter "):].strip())
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "generators" not in doc or "m" not in doc:
        raise GraphSyntaxError('expected an object with keys "generators" and "m"')
    gens, rows = doc["generators"], doc["m"]
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise GraphSyntaxError('"generators" must be a list of strings')
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise GraphSyntaxError('"m" must be a list of lists')
    if any(not g or any(ch.isspace() for ch in g) for g in gens):
        raise ValidationError("generator labels must be non-empty and contain no whitespace")
    return from_bonds(gens, rows)


# -- catalog ---------------------------------------------------------------

def _from_edges(n: int, edges: dict, first: int = 1) -> CoxeterMatrix:
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (i, j), b in edges.items():
        rows[i][j] = rows[j][i] = b
    return from_bonds([f"s{k + first}" for k in range(n)], rows)


def _path(n: int, bonds: dict | None = None) -> dict:
    edges = {(i, i + 1): 3 for i in range(n - 1)}
    edges.update(bonds or {})
    return edges


def _type_E(n: int) -> dict:
    # Bourbaki labelling: 1-3-4-5-...-n with 2 hanging off 4
    edges = {(0, 2): 3, (1, 3): 3}
    edges.update({(i, i + 1): 3 for i in range(2, n - 1)})
    return edges


def _single(name: str, first: int) -> CoxeterMatrix:
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", name)
    if name.lower().startswith("tilde-"):
        m2 = re.fullmatch(r"tilde-A(\d+)", name, flags=re.IGNORECASE)
        if not m2 or int(m2.group(1)) < 1:
            raise ValidationError(f"unknown affine type {name!r}")
        k = int(m2.group(1))
        if k == 1:
            return _from_edges(2, {(0, 1): 0}, first)
        edges = _path(k + 1)
        edges[(0, k)] = 3
        return _from_edges(k + 1, edges, first)
    dihedral = re.fullmatch(r"I2\((\d+)\)", name, flags=re.IGNORECASE)
    if dihedral:
        b = int(dihedral.group(1))
        if b < 2:
            raise ValidationError("I2(m) needs m >= 2")
        return _from_edges(2, {(0, 1): b}, first)
    if not m:
        raise ValidationError(f"unknown Coxeter type {name!r}")
    family, k = m.group(1).upper(), int(m.group(2))
    if family == "A" and k >= 1:
        return _from_edges(k, _path(k), first)
    if family == "B" and k >= 2:
        return _from_edges(k, _path(k, {(k - 2, k - 1): 4}), first)
    if family == "D" and k >= 4:
        edges = _path(k - 1)
        edges[(k - 3, k - 1)] = 3
        return _from_edges(k, edges, first)
    if family == "E" and k in (6, 7, 8):
        return _from_edges(k, _type_E(k), first)
    if family == "F" and k == 4:
        return _from_edges(4, _path(4, {(1, 2): 4}), first)
    if family == "G" and k == 2:
        return _from_edges(2, {(0, 1): 6}, first)
    if family == "H" and k in (3, 4):
        return _from_edges(k, _path(k, {(0, 1): 5}), first)
    raise ValidationError(f"unknown Coxeter type {name!r}")


def catalog(name: str) -> CoxeterMatrix:
    """Expand a catalog name such as ``A3``, ``I2(5)``, ``tilde-A2`` or ``A1xB2``.

    Generators are labelled ``s1, s2, ...`` across all factors of a product.
    """
    parts = [p.strip() for p in name.strip().split("x")]
    if not all(parts):
        raise ValidationError(f"malformed type name {name!r}")
    mats, first = [], 1
    for part in parts:
        mat = _single(part, first)
        mats.append(mat)
        first += mat.n
    if len(mats) == 1:
        return mats[0]
    labels = tuple(l for mat in mats for l in mat.labels)
    n = len(labels)
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    off = 0
    for mat in mats:
        for i in range(mat.n):
            for j in range(mat.n):
                rows[off + i][off + j] = mat.m[i][j]
        off += mat.n
    return CoxeterMatrix(labels, tuple(tuple(r) for r in rows))


def load_graph(source: str) -> CoxeterMatrix:
    """Resolve a CLI argument: inline JSON, ``coxeter <name>``, catalog name or file path."""
    import os

    text = source.strip()
    if text.startswith("{") or text.startswith("coxeter "):
        return parse_graph(text)
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    return catalog(text)


# -- odd subgraph ----------------------------------------------------------

@dataclass(frozen=True)
class OddComponents:
    count: int
    class_of: tuple[int, ...]
    representatives: tuple[int, ...]

    def members(self, k: int) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.class_of) if c == k)


def odd_components(M: CoxeterMatrix) -> OddComponents:
    """Connected components of the graph with an edge wherever the bond is odd.

    Components are numbered by their smallest generator index, so the
    representative of component ``k`` is its smallest member and
    representatives come out strictly increasing.
    """
    n = M.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if is_odd_bond(M.m[i][j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    roots = [find(i) for i in range(n)]
    reps = sorted(set(roots))
    number = {r: k for k, r in enumerate(reps)}
    return OddComponents(len(reps), tuple(number[r] for r in roots), tuple(reps))
