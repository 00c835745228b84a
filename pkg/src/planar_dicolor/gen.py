"""Seeded plane graphs, planar digraphs of bounded digirth, and golden solids.

Plane graphs are grown as triangulations by inserting vertices into random
triangular faces, mixed and degree-repaired by edge flips, and then thinned
by deleting random edges while keeping connectivity and the degree floor.
Everything is driven by one ``random.Random(seed)`` so output is a pure
function of the :class:`GenSpec`.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from typing import Optional, Union

from .digraph import Digraph, shortest_cycle
from .embedding import PlanarEmbedding
from .errors import GenerationError

# rotations are clockwise seen from outside the solid
OCTAHEDRON = {
    0: (1, 4, 3, 2),
    1: (0, 2, 5, 4),
    2: (0, 3, 5, 1),
    3: (0, 4, 5, 2),
    4: (0, 1, 5, 3),
    5: (1, 2, 3, 4),
}
CUBE = {
    0: (1, 4, 2),
    1: (0, 3, 5),
    2: (0, 6, 3),
    3: (1, 2, 7),
    4: (0, 5, 6),
    5: (1, 7, 4),
    6: (2, 4, 7),
    7: (3, 6, 5),
}
ICOSAHEDRON = {
    0: (1, 7, 5, 6, 2),
    1: (0, 2, 8, 3, 7),
    2: (0, 6, 4, 8, 1),
    3: (1, 8, 9, 11, 7),
    4: (2, 6, 10, 9, 8),
    5: (0, 7, 11, 10, 6),
    6: (0, 5, 10, 4, 2),
    7: (0, 1, 3, 11, 5),
    8: (1, 2, 4, 9, 3),
    9: (3, 8, 4, 10, 11),
    10: (4, 6, 5, 11, 9),
    11: (3, 9, 10, 5, 7),
}
DODECAHEDRON = {
    0: (8, 10, 9),
    1: (9, 16, 11),
    2: (10, 14, 12),
    3: (12, 17, 16),
    4: (8, 15, 13),
    5: (11, 19, 15),
    6: (13, 18, 14),
    7: (17, 18, 19),
    8: (0, 4, 14),
    9: (0, 1, 15),
    10: (0, 2, 16),
    11: (1, 17, 5),
    12: (2, 18, 3),
    13: (4, 19, 6),
    14: (2, 8, 6),
    15: (4, 9, 5),
    16: (1, 10, 3),
    17: (3, 7, 11),
    18: (6, 7, 12),
    19: (5, 7, 13),
}
SOLIDS = {
    "octahedron": OCTAHEDRON,
    "cube": CUBE,
    "icosahedron": ICOSAHEDRON,
    "dodecahedron": DODECAHEDRON,
}
_DICYCLE = re.compile(r"dicycle\((\d+)\)$")


def dicycle(k: int) -> Digraph:
    """Directed ``k``-cycle ``0 -> 1 -> ... -> k-1 -> 0``."""
    if k < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    emb = PlanarEmbedding({i: ((i - 1) % k, (i + 1) % k) for i in range(k)})
    return Digraph.from_embedding(emb, [(i, (i + 1) % k) for i in range(k)])


def golden(name: str) -> Union[PlanarEmbedding, Digraph]:
    """Canonical instances: the four solids by name, or ``"dicycle(k)"``."""
    if name in SOLIDS:
        return PlanarEmbedding(SOLIDS[name])
    m = _DICYCLE.match(name)
    if m:
        return dicycle(int(m.group(1)))
    raise KeyError(f"unknown golden instance {name!r}")


@dataclass(frozen=True)
class GenSpec:
    n: int
    min_degree: int = 0
    digirth_min: Optional[float] = None
    seed: int = 0
    max_repair_rounds: Optional[int] = None
    edge_deletion: Optional[float] = None

    def validate(self) -> None:
        if self.n < 3:
            raise GenerationError("n must be at least 3")
        if not 0 <= self.min_degree <= 5:
            raise GenerationError("min_degree must lie in 0..5 for plane graphs")
        if self.digirth_min is not None and self.digirth_min not in (3, 4, 5, math.inf):
            raise GenerationError("digirth_min must be 3, 4, 5 or infinity")
        if self.edge_deletion is not None and not 0.0 <= self.edge_deletion <= 1.0:
            raise GenerationError("edge_deletion is a probability")


# ---------------------------------------------------------------------------
# rotation-system surgery on plain dicts of lists


def _insert_after(rot: dict, v: int, after: int, new: int) -> None:
    r = rot[v]
    r.insert(r.index(after) + 1, new)


def _follows(rot: dict, v: int, u: int) -> int:
    r = rot[v]
    return r[(r.index(u) + 1) % len(r)]


def _triangle_faces(rot: dict) -> list[tuple[int, int, int]]:
    """Every face as ``(a, b, c)`` with darts ``a->b->c->a`` (all are triangles)."""
    seen = set()
    faces = []
    for a in sorted(rot):
        for b in rot[a]:
            if (a, b) in seen:
                continue
            c = _follows(rot, b, a)
            seen.update(((a, b), (b, c), (c, a)))
            faces.append((a, b, c))
    return faces


def _stack_insert(rot: dict, face: tuple[int, int, int], x: int) -> None:
    a, b, c = face
    _insert_after(rot, b, a, x)
    _insert_after(rot, c, b, x)
    _insert_after(rot, a, c, x)
    rot[x] = [a, c, b]


def _flip(rot: dict, a: int, b: int) -> bool:
    """Replace edge ``ab`` by the other diagonal of its quadrilateral."""
    c = _follows(rot, b, a)  # face a->b->c
    d = _follows(rot, a, b)  # face b->a->d
    if c == d or d in rot[c]:
        return False
    rot[a].remove(b)
    rot[b].remove(a)
    _insert_after(rot, c, b, d)
    _insert_after(rot, d, a, c)
    return True


def _connected_without(rot: dict, u: int, v: int) -> bool:
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in rot[x]:
            if (x, y) in ((u, v), (v, u)):
                continue
            if y == v:
                return True
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def _triangulation(spec: GenSpec, rng: random.Random) -> dict:
    rot: dict = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    for x in range(3, spec.n):
        faces = _triangle_faces(rot)
        _stack_insert(rot, faces[rng.randrange(len(faces))], x)
    if spec.n < 4:
        return rot
    for _ in range(3 * spec.n):
        a = rng.randrange(spec.n)
        b = rng.choice(rot[a])
        if len(rot[a]) > 3 and len(rot[b]) > 3:
            _flip(rot, a, b)
    return rot


def _repair_degrees(rot: dict, floor: int, rounds: int, rng: random.Random) -> None:
    """Random walk on edge flips that never increases the total degree deficit."""

    def deficit(v: int, change: int = 0) -> int:
        return max(0, floor - len(rot[v]) - change)

    total = sum(deficit(v) for v in rot)
    verts = sorted(rot)
    for _ in range(rounds):
        if total == 0:
            return
        a = rng.choice(verts)
        b = rng.choice(rot[a])
        if len(rot[a]) <= 3 or len(rot[b]) <= 3:
            continue
        c = _follows(rot, b, a)
        d = _follows(rot, a, b)
        if c == d or d in rot[c]:
            continue
        delta = (
            deficit(a, -1) - deficit(a) + deficit(b, -1) - deficit(b)
            + deficit(c, 1) - deficit(c) + deficit(d, 1) - deficit(d)
        )
        if delta <= 0:
            _flip(rot, a, b)
            total += delta
    if total:
        raise GenerationError(
            f"could not reach minimum degree {floor} within {rounds} repair rounds"
        )


def random_plane_graph(spec: GenSpec) -> PlanarEmbedding:
    """Connected simple plane graph with minimum degree at least ``spec.min_degree``."""
    return _plane_graph(spec, random.Random(spec.seed))


def _plane_graph(spec: GenSpec, rng: random.Random) -> PlanarEmbedding:
    spec.validate()
    floor = spec.min_degree
    # no plane graph of minimum degree 5 has fewer than 12 or exactly 13 vertices
    impossible = floor >= spec.n or (floor == 4 and spec.n < 6) or (floor == 5 and (spec.n < 12 or spec.n == 13))
    if impossible:
        raise GenerationError(f"no plane graph on {spec.n} vertices has minimum degree {floor}")
    rot = _triangulation(spec, rng)
    rounds = spec.max_repair_rounds if spec.max_repair_rounds is not None else 50 * 3 * spec.n
    if floor > 3:
        _repair_degrees(rot, floor, rounds, rng)
    p = spec.edge_deletion if spec.edge_deletion is not None else rng.uniform(0.0, 0.5)
    keep = max(floor, 1)
    edges = sorted((u, v) for u in rot for v in rot[u] if u < v)
    rng.shuffle(edges)
    for u, v in edges:
        if rng.random() >= p:
            continue
        if len(rot[u]) > keep and len(rot[v]) > keep and _connected_without(rot, u, v):
            rot[u].remove(v)
            rot[v].remove(u)
    return PlanarEmbedding(rot)


def random_planar_digraph(spec: GenSpec) -> Digraph:
    """Random orientation of :func:`random_plane_graph` repaired to the digirth floor.

    While a directed cycle shorter than ``spec.digirth_min`` exists, one arc of
    a shortest such cycle, chosen by the seed, is reversed.  An infinite
    request orients edges along a random linear order instead.
    """
    if spec.digirth_min is None:
        raise GenerationError("random_planar_digraph needs digirth_min")
    rng = random.Random(spec.seed)
    emb = _plane_graph(spec, rng)
    edges = emb.edges()
    if spec.digirth_min == math.inf:
        order = list(emb.vertices)
        rng.shuffle(order)
        rank = {v: i for i, v in enumerate(order)}
        return Digraph.from_embedding(emb, [(u, v) if rank[u] < rank[v] else (v, u) for u, v in edges])
    arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in edges]
    D = Digraph.from_embedding(emb, arcs)
    limit = spec.max_repair_rounds if spec.max_repair_rounds is not None else 50 * len(edges)
    bound = int(spec.digirth_min) - 1
    for _ in range(limit + 1):
        cyc = shortest_cycle(D, max_length=bound)
        if cyc is None:
            return D
        i = rng.randrange(len(cyc))
        D = D.flip(cyc[i], cyc[(i + 1) % len(cyc)])
    raise GenerationError(f"digirth {spec.digirth_min} not reached within {limit} arc flips")


def corpus(
    count: int,
    n_range: tuple[int, int],
    min_degree: int = 3,
    digirth_min: Optional[float] = 5,
    seed: int = 0,
) -> list[tuple[GenSpec, Digraph]]:
    """``count`` generated digraphs from consecutive seeds; failures are skipped.

    The vertex count cycles through ``n_range`` (inclusive) with the seed.
    """
    lo, hi = n_range
    out = []
    s = seed
    while len(out) < count:
        spec = GenSpec(n=lo + s % (hi - lo + 1), min_degree=min_degree, digirth_min=digirth_min, seed=s)
        s += 1
        try:
            out.append((spec, random_planar_digraph(spec)))
        except GenerationError:
            if s - seed > 20 * count + 100:
                raise
    return out
