"""Deterministic constructions of the named graph families."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, GraphError


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)))


def star(n: int) -> Graph:
    """K_{1,n-1} on n vertices, center 0."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def wheel(n: int) -> Graph:
    """W_n = C_{n-1} joined with K_1; the hub is vertex n-1."""
    if n < 4:
        raise GraphError("wheel needs n >= 4")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph(n, tuple(edges))


def grid(m: int, n: int) -> Graph:
    """m x n grid; vertex (r, c) is r*n + c."""
    if m < 1 or n < 1:
        raise GraphError("grid needs m, n >= 1")
    edges = []
    for r in range(m):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < m:
                edges.append((v, v + n))
    return Graph(m * n, tuple(sorted(edges)))


def complete_multipartite(*parts: int) -> Graph:
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise GraphError("complete multipartite needs k >= 2 parts of size >= 1")
    label = []
    for i, p in enumerate(parts):
        label += [i] * p
    n = len(label)
    return Graph(n, tuple((u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]))


FAMILIES = {
    "petersen": (petersen, 0),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "grid": (grid, 2),
    "complete_multipartite": (complete_multipartite, None),
}


def generate(family: str, *params: int) -> Graph:
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}") from None
    if arity is not None and len(params) != arity:
        raise GraphError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def parse_family_spec(spec: str) -> Graph:
    """Parse ``name`` or ``name:p1,p2,...`` (e.g. ``wheel:6``, ``grid:2,3``)."""
    name, _, rest = spec.partition(":")
    try:
        params = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise GraphError(f"bad family parameters in {spec!r}") from None
    return generate(name.strip().replace("-", "_"), *params)
