"""Tree quivers, weight vectors, and exact graph classification.

A quiver here is a finite directed graph whose underlying undirected graph
is a tree.  Vertex order is the declaration order and every vector
quantity (dimension vectors, characters) is aligned with it.  The
quadratic form and the Dynkin / extended Dynkin / wild trichotomy are
computed in exact integer arithmetic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    DuplicateId,
    NotATree,
    SelfLoop,
    UnknownVertex,
    ZeroVector,
)

Parity = str  # "even" | "odd"


@dataclass(frozen=True)
class Arrow:
    id: str
    tail: str
    head: str


class Quiver:
    """Directed tree: distinct string vertices plus oriented arrows.

    Rejects self-loops, duplicate ids, parallel edges, cycles and
    disconnected inputs.  Immutable by convention.
    """

    def __init__(self, vertices: Iterable[str], arrows: Iterable):
        verts = [str(v) for v in vertices]
        if not verts:
            raise NotATree("quiver has no vertices")
        seen: set[str] = set()
        for v in verts:
            if v in seen:
                raise DuplicateId(f"duplicate vertex id {v!r}", element=v)
            seen.add(v)
        self.vertices: tuple[str, ...] = tuple(verts)
        self.index: dict[str, int] = {v: i for i, v in enumerate(verts)}

        parsed: list[Arrow] = []
        arrow_ids: set[str] = set()
        for a in arrows:
            if isinstance(a, Arrow):
                aid, tail, head = a.id, a.tail, a.head
            elif isinstance(a, Mapping):
                aid, tail, head = str(a["id"]), str(a["tail"]), str(a["head"])
            else:
                aid, tail, head = (str(x) for x in a)
            if aid in arrow_ids:
                raise DuplicateId(f"duplicate arrow id {aid!r}", element=aid)
            arrow_ids.add(aid)
            if tail == head:
                raise SelfLoop(f"arrow {aid!r} is a self-loop at {tail!r}", element=aid)
            for end in (tail, head):
                if end not in self.index:
                    raise UnknownVertex(
                        f"arrow {aid!r} references unknown vertex {end!r}", element=aid
                    )
            parsed.append(Arrow(aid, tail, head))
        self.arrows: tuple[Arrow, ...] = tuple(parsed)

        n = len(self.vertices)
        if len(self.arrows) != n - 1:
            raise NotATree(
                f"a tree on {n} vertices needs {n - 1} arrows, got {len(self.arrows)}"
            )
        # union-find cycle check; with the count above this also forces connectivity
        parent = list(range(n))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for a in self.arrows:
            ri, rj = find(self.index[a.tail]), find(self.index[a.head])
            if ri == rj:
                raise NotATree(f"arrow {a.id!r} closes a cycle", element=a.id)
            parent[ri] = rj

        nbrs: list[list[str]] = [[] for _ in range(n)]
        tails: list[list[Arrow]] = [[] for _ in range(n)]
        heads: list[list[Arrow]] = [[] for _ in range(n)]
        for a in self.arrows:
            nbrs[self.index[a.tail]].append(a.head)
            nbrs[self.index[a.head]].append(a.tail)
            tails[self.index[a.tail]].append(a)
            heads[self.index[a.head]].append(a)
        self._neighbors = tuple(tuple(x) for x in nbrs)
        self._tail_arrows = tuple(tuple(x) for x in tails)
        self._head_arrows = tuple(tuple(x) for x in heads)

    # --- structure queries ----------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self._neighbors[self.index[v]]

    def tail_arrows(self, v: str) -> tuple[Arrow, ...]:
        """Arrows leaving v."""
        return self._tail_arrows[self.index[v]]

    def head_arrows(self, v: str) -> tuple[Arrow, ...]:
        """Arrows entering v."""
        return self._head_arrows[self.index[v]]

    def arrow(self, aid: str) -> Arrow:
        for a in self.arrows:
            if a.id == aid:
                return a
        raise UnknownVertex(f"no arrow with id {aid!r}", element=aid)

    def degree(self, v: str) -> int:
        return len(self._neighbors[self.index[v]])

    def edge_index_pairs(self) -> np.ndarray:
        """(n-1, 2) vertex indices (tail, head) per arrow, declaration order."""
        if not self.arrows:
            return np.zeros((0, 2), dtype=np.int64)
        return np.array(
            [(self.index[a.tail], self.index[a.head]) for a in self.arrows],
            dtype=np.int64,
        )

    # --- vector coercion --------------------------------------------------

    def vector(self, data, dtype=np.float64) -> np.ndarray:
        """Align a mapping or sequence with the vertex order."""
        if isinstance(data, Mapping):
            missing = [v for v in self.vertices if v not in data]
            if missing:
                raise UnknownVertex(f"value missing for vertex {missing[0]!r}")
            extra = [k for k in data if k not in self.index]
            if extra:
                raise UnknownVertex(f"value for unknown vertex {extra[0]!r}")
            arr = np.array([data[v] for v in self.vertices], dtype=dtype)
        else:
            arr = np.asarray(data, dtype=dtype)
            if arr.shape != (len(self.vertices),):
                raise UnknownVertex(
                    f"expected {len(self.vertices)} entries, got shape {arr.shape}"
                )
        if not np.all(np.isfinite(arr)):
            raise ZeroVector("vector has non-finite entries")
        return arr

    def dims_vector(self, data) -> np.ndarray:
        arr = self.vector(data, dtype=np.float64)
        rounded = np.rint(arr)
        if np.any(np.abs(arr - rounded) > 0) or np.any(rounded < 0):
            raise ZeroVector("dimension vector must have nonnegative integer entries")
        return rounded.astype(np.int64)

    def char_vector(self, data, require_valid: bool = True) -> np.ndarray:
        arr = self.vector(data, dtype=np.float64)
        if require_valid:
            if np.any(arr < 0):
                raise ZeroVector("character values must be nonnegative")
            if not np.any(arr > 0):
                raise ZeroVector("character must not be identically zero")
        return arr

    def as_dict(self, vec: Sequence) -> dict:
        return {v: vec[i] for i, v in enumerate(self.vertices)}


def validate_quiver(raw) -> Quiver:
    """Build a Quiver from a mapping {"vertices": [...], "arrows": [...]}."""
    if isinstance(raw, Quiver):
        return raw
    if isinstance(raw, Mapping):
        return Quiver(raw.get("vertices", ()), raw.get("arrows", ()))
    vertices, arrows = raw
    return Quiver(vertices, arrows)


def bipartition(quiver: Quiver) -> tuple[frozenset[str], frozenset[str]]:
    """2-color the tree; the lexicographically smallest vertex id is even."""
    start = min(quiver.vertices)
    color = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in quiver.neighbors(v):
            if w not in color:
                color[w] = 1 - color[v]
                queue.append(w)
    even = frozenset(v for v, c in color.items() if c == 0)
    odd = frozenset(v for v, c in color.items() if c == 1)
    return even, odd


def parity_classes(quiver: Quiver) -> dict[str, frozenset[str]]:
    even, odd = bipartition(quiver)
    return {"even": even, "odd": odd}


def is_even_mask(quiver: Quiver) -> np.ndarray:
    even, _ = bipartition(quiver)
    return np.array([v in even for v in quiver.vertices], dtype=bool)


def tits_form(quiver: Quiver, dims) -> int:
    """q(d) = sum_v d_v^2 - sum_arrows d_tail * d_head (orientation-free)."""
    d = quiver.dims_vector(dims) if not isinstance(dims, np.ndarray) else dims
    d = np.asarray(d, dtype=np.int64)
    total = int(np.sum(d.astype(object) ** 2))
    for a in quiver.arrows:
        total -= int(d[quiver.index[a.tail]]) * int(d[quiver.index[a.head]])
    return total


def symmetrized_matrix(quiver: Quiver) -> list[list[int]]:
    """Integer matrix M with M_vv = 2 and M_vw = -1 iff v,w adjacent."""
    n = len(quiver.vertices)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
    for a in quiver.arrows:
        i, j = quiver.index[a.tail], quiver.index[a.head]
        m[i][j] = -1
        m[j][i] = -1
    return m


def _int_det(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [r[:] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_principal_minors(m: list[list[int]]) -> tuple[int, ...]:
    n = len(m)
    return tuple(_int_det([row[: k + 1] for row in m[: k + 1]]) for k in range(n))


@dataclass(frozen=True)
class GraphClass:
    """Trichotomy verdict with the exact minor certificate."""

    tag: str  # "Dynkin" | "ExtendedDynkin" | "Wild"
    name: str | None
    certificate: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"tag": self.tag, "name": self.name, "certificate": list(self.certificate)}


def _arm_lengths(quiver: Quiver, center: str) -> list[int]:
    """Edge counts of the branch-free paths hanging off `center`."""
    arms = []
    for first in quiver.neighbors(center):
        length = 1
        prev, cur = center, first
        while True:
            nxt = [w for w in quiver.neighbors(cur) if w != prev]
            if len(nxt) != 1:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def _shape_name(quiver: Quiver, tag: str) -> str | None:
    n = len(quiver.vertices)
    branch = [v for v in quiver.vertices if quiver.degree(v) >= 3]
    if tag == "Dynkin":
        if not branch:
            return f"A{n}"
        if len(branch) == 1 and quiver.degree(branch[0]) == 3:
            arms = _arm_lengths(quiver, branch[0])
            if arms[:2] == [1, 1]:
                return f"D{n}"
            if arms == [1, 2, 2]:
                return "E6"
            if arms == [1, 2, 3]:
                return "E7"
            if arms == [1, 2, 4]:
                return "E8"
    elif tag == "ExtendedDynkin":
        if len(branch) == 1:
            c = branch[0]
            arms = _arm_lengths(quiver, c)
            if quiver.degree(c) == 4 and arms == [1, 1, 1, 1]:
                return "D4~"
            if quiver.degree(c) == 3:
                if arms == [2, 2, 2]:
                    return "E6~"
                if arms == [1, 3, 3]:
                    return "E7~"
                if arms == [1, 2, 5]:
                    return "E8~"
        if len(branch) == 2 and all(quiver.degree(v) == 3 for v in branch):
            return f"D{n - 1}~"
    return None


def classify(quiver: Quiver) -> GraphClass:
    """Dynkin / extended Dynkin / wild by exact leading principal minors.

    For a connected graph the symmetrized form is positive definite iff
    all leading minors are positive (Sylvester); it is positive
    semidefinite with a one-dimensional radical iff the first n-1 minors
    are positive and the determinant vanishes (interlacing plus the
    Perron-Frobenius simplicity of the top adjacency eigenvalue).
    """
    minors = leading_principal_minors(symmetrized_matrix(quiver))
    if all(m > 0 for m in minors):
        tag = "Dynkin"
    elif all(m > 0 for m in minors[:-1]) and minors[-1] == 0:
        tag = "ExtendedDynkin"
    else:
        tag = "Wild"
    return GraphClass(tag=tag, name=_shape_name(quiver, tag), certificate=minors)
