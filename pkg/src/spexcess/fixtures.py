"""Built-in fixture graphs used by the test suite and the `fixtures` command.

Edge lists are emitted in sorted order so the written files are byte-stable
across runs.
"""

from __future__ import annotations

import os

from .graphs import Graph, graph6_bytes


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    # the a side (vertices 0..a-1) has degree b
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def circulant(n: int, steps) -> Graph:
    edges = set()
    for s in steps:
        for i in range(n):
            j = (i + s) % n
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, sorted(edges))


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer pentagon
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        edges.append((i, 5 + i))                # spokes
    return Graph.from_edges(10, edges)


def k23() -> Graph:
    return complete_bipartite(2, 3)


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


BUNDLED = {
    "k23": k23,
    "petersen": petersen,
    "p3": lambda: path(3),
    "c4": lambda: cycle(4),
    "c5": lambda: cycle(5),
    "c6": lambda: cycle(6),
    "c7": lambda: cycle(7),
    "c8": lambda: cycle(8),
    "k2": lambda: complete(2),
    "k3": lambda: complete(3),
    "k4": lambda: complete(4),
    "k5": lambda: complete(5),
    "c8_12": lambda: circulant(8, (1, 2)),
}


def named(name: str) -> Graph:
    try:
        return BUNDLED[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; have {sorted(BUNDLED)}") from None


def edgelist_bytes(g: Graph) -> bytes:
    lines = [f"{u} {v}\n" for u, v in g.edges]
    return "".join(lines).encode("ascii")


def write_fixtures(outdir) -> list[str]:
    """Write every bundled fixture as .el and .g6; returns the file names."""
    os.makedirs(outdir, exist_ok=True)
    written = []
    for name in sorted(BUNDLED):
        g = BUNDLED[name]()
        for ext, payload in ((".el", edgelist_bytes(g)), (".g6", graph6_bytes(g) + b"\n")):
            fname = name + ext
            with open(os.path.join(outdir, fname), "wb") as fh:
                fh.write(payload)
            written.append(fname)
    return written
