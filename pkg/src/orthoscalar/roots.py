"""Reflections, Coxeter transformations, and root enumeration.

Dimension vectors live in the integer lattice indexed by the vertices;
the simple reflection at vertex a replaces d_a by the neighbor sum minus
d_a and fixes everything else.  A Coxeter transformation reflects a whole
parity class at once, which is well defined because a tree is bipartite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import NotDynkin, NotExtendedDynkin, UnknownVertex, ZeroVector
from .quiver import Quiver, classify, parity_classes, tits_form


@dataclass(frozen=True)
class RootType:
    """Tag is "Real" (q=1), "Imaginary" (q<=0) or "NotRoot"; support must
    be connected for either root tag."""

    tag: str
    tits_value: int

    def as_dict(self) -> dict:
        return {"tag": self.tag, "tits_value": self.tits_value}


def reflect_dim(quiver: Quiver, dims, vertex: str) -> np.ndarray:
    """Simple reflection at one vertex; the result may go negative."""
    if vertex not in quiver.index:
        raise UnknownVertex(f"unknown vertex {vertex!r}", element=vertex)
    d = np.array(quiver.vector(dims, dtype=np.int64))
    i = quiver.index[vertex]
    d[i] = sum(d[quiver.index[w]] for w in quiver.neighbors(vertex)) - d[i]
    return d


def _support_connected(quiver: Quiver, d: np.ndarray) -> bool:
    support = {v for v in quiver.vertices if d[quiver.index[v]] != 0}
    if not support:
        return False
    stack = [next(iter(sorted(support)))]
    seen = set(stack)
    while stack:
        v = stack.pop()
        for w in quiver.neighbors(v):
            if w in support and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == support


def root_type(quiver: Quiver, dims) -> RootType:
    d = quiver.vector(dims, dtype=np.int64)
    if not np.any(d):
        raise ZeroVector("root type of the zero vector is undefined")
    q = tits_form(quiver, d)
    connected = _support_connected(quiver, d)
    if q == 1 and connected:
        return RootType("Real", q)
    if q <= 0 and connected:
        return RootType("Imaginary", q)
    return RootType("NotRoot", q)


def positive_roots(quiver: Quiver) -> set[tuple[int, ...]]:
    """All positive roots of a Dynkin tree, by reflection closure of the
    simple roots (kept only while componentwise nonnegative)."""
    if classify(quiver).tag != "Dynkin":
        raise NotDynkin("positive root enumeration requires a Dynkin tree")
    n = len(quiver.vertices)
    simples = {tuple(int(x) for x in row) for row in np.eye(n, dtype=np.int64)}
    roots = set(simples)
    frontier = set(simples)
    while frontier:
        new = set()
        for d in frontier:
            for v in quiver.vertices:
                r = tuple(int(x) for x in reflect_dim(quiver, np.array(d), v))
                if min(r) >= 0 and r not in roots:
                    new.add(r)
        roots |= new
        frontier = new
    return roots


def _rational_kernel(m: list[list[int]]) -> list[list[Fraction]]:
    """Basis of the kernel of an integer matrix, exact."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, n) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = a[row][col]
        a[row] = [x / inv for x in a[row]]
        for r in range(n):
            if r != row and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -a[r][f]
        basis.append(vec)
    return basis


def minimal_imaginary_root(quiver: Quiver) -> np.ndarray:
    """Primitive strictly positive integer generator of the radical."""
    from .quiver import symmetrized_matrix

    if classify(quiver).tag != "ExtendedDynkin":
        raise NotExtendedDynkin("minimal imaginary root requires an extended Dynkin tree")
    basis = _rational_kernel(symmetrized_matrix(quiver))
    if len(basis) != 1:
        raise NotExtendedDynkin(f"radical has dimension {len(basis)}, expected 1")
    vec = basis[0]
    denom_lcm = 1
    for x in vec:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    if sum(ints) < 0:
        ints = [-x for x in ints]
    delta = np.array(ints, dtype=np.int64)
    if np.any(delta <= 0):
        raise NotExtendedDynkin("radical generator is not strictly positive")
    return delta


def _class_vertices(quiver: Quiver, parity: str) -> frozenset[str]:
    classes = parity_classes(quiver)
    if parity not in classes:
        raise ZeroVector(f"parity must be 'even' or 'odd', got {parity!r}")
    return classes[parity]


def coxeter_dim(quiver: Quiver, dims, parity: str) -> np.ndarray:
    """Reflect simultaneously at every vertex of one parity class."""
    d = np.array(quiver.vector(dims, dtype=np.int64))
    out = d.copy()
    for v in _class_vertices(quiver, parity):
        i = quiver.index[v]
        out[i] = sum(d[quiver.index[w]] for w in quiver.neighbors(v)) - d[i]
    return out


def coxeter_char(quiver: Quiver, chi, parity: str) -> np.ndarray:
    """Character transform paired with coxeter_dim: values at the reflected
    parity are kept, values at the opposite parity become the neighbor sum
    minus the old value.  Involution for a fixed parity; may go negative."""
    x = np.array(quiver.vector(chi, dtype=np.float64))
    reflected = _class_vertices(quiver, parity)
    out = x.copy()
    for v in quiver.vertices:
        if v in reflected:
            continue
        i = quiver.index[v]
        out[i] = sum(x[quiver.index[w]] for w in quiver.neighbors(v)) - x[i]
    return out


def _tits_values(quiver: Quiver, block: np.ndarray) -> np.ndarray:
    vals = np.sum(block * block, axis=1)
    for a in quiver.arrows:
        vals -= block[:, quiver.index[a.tail]] * block[:, quiver.index[a.head]]
    return vals


def real_roots_up_to(quiver: Quiver, bound: int) -> list[tuple[int, ...]]:
    """All real roots in the box 0 <= d_v <= bound, lexicographic order."""
    if bound < 1:
        raise ZeroVector("bound must be at least 1")
    n = len(quiver.vertices)
    out: list[tuple[int, ...]] = []
    chunk = 200_000
    it = itertools.product(range(bound + 1), repeat=n)
    while True:
        block = np.array(list(itertools.islice(it, chunk)), dtype=np.int64)
        if block.size == 0:
            break
        vals = _tits_values(quiver, block)
        for row in block[vals == 1]:
            if _support_connected(quiver, row):
                out.append(tuple(int(x) for x in row))
    return out
