"""Builders for the standard tree shapes used throughout tests and demos.

All arrows point toward the branch vertex (or along the path); orientation
never affects classification or root data.
"""

from __future__ import annotations

from .quiver import Quiver


def path_quiver(n: int, prefix: str = "v") -> Quiver:
    """A_n: path on n vertices, arrows v1 -> v2 -> ... -> vn."""
    if n < 1:
        raise ValueError("need at least one vertex")
    vertices = [f"{prefix}{i}" for i in range(1, n + 1)]
    arrows = [
        (f"e{i}", f"{prefix}{i}", f"{prefix}{i + 1}") for i in range(1, n)
    ]
    return Quiver(vertices, arrows)


def star_quiver(leaves: int) -> Quiver:
    """Center c with `leaves` arms of length one, arrows li -> c."""
    vertices = ["c"] + [f"l{i}" for i in range(1, leaves + 1)]
    arrows = [(f"a{i}", f"l{i}", "c") for i in range(1, leaves + 1)]
    return Quiver(vertices, arrows)


def spider_quiver(arm_lengths: tuple[int, ...] | list[int]) -> Quiver:
    """Center c with one path per arm, arrows pointing toward c.

    spider_quiver((1, 2, 2)) is E6, ((2, 2, 2)) is the extended E6 tree.
    """
    vertices = ["c"]
    arrows = []
    for k, length in enumerate(arm_lengths, start=1):
        prev = "c"
        for j in range(1, length + 1):
            v = f"b{k}_{j}"
            vertices.append(v)
            arrows.append((f"a{k}_{j}", v, prev))
            prev = v
    return Quiver(vertices, arrows)


def dtilde_quiver(n: int) -> Quiver:
    """Extended D-type tree on n+1 vertices (n >= 4).

    n = 4 is the four-leaf star; n >= 5 is a path of n-3 middle vertices
    with a pair of leaves attached at each end.
    """
    if n < 4:
        raise ValueError("extended D-type needs n >= 4")
    if n == 4:
        return star_quiver(4)
    middles = [f"m{i}" for i in range(1, n - 2)]
    vertices = middles + ["p1", "p2", "q1", "q2"]
    arrows = [(f"e{i}", middles[i - 1], middles[i]) for i in range(1, len(middles))]
    arrows += [("ep1", "p1", middles[0]), ("ep2", "p2", middles[0])]
    arrows += [("eq1", "q1", middles[-1]), ("eq2", "q2", middles[-1])]
    return Quiver(vertices, arrows)


_SPIDERS = {
    "D4": (1, 1, 1),
    "D5": (1, 1, 2),
    "D6": (1, 1, 3),
    "E6": (1, 2, 2),
    "E7": (1, 2, 3),
    "E8": (1, 2, 4),
    "E6~": (2, 2, 2),
    "E7~": (1, 3, 3),
    "E8~": (1, 2, 5),
}


def by_name(name: str) -> Quiver:
    """Quiver for a standard name: "A3", "D5", "E8", "D4~", "E6~", ..."""
    name = name.strip()
    if name.startswith("A") and not name.endswith("~"):
        return path_quiver(int(name[1:]))
    if name in _SPIDERS:
        return spider_quiver(_SPIDERS[name])
    if name.startswith("D") and name.endswith("~"):
        return dtilde_quiver(int(name[1:-1]))
    raise ValueError(f"unknown catalog name {name!r}")
