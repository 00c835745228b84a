"""Arc orientations over plane graphs, directed cycles and coloring checks."""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Collection, Hashable, Iterable, Mapping, Optional, Sequence

from .embedding import PlanarEmbedding
from .errors import ColoringError, EmbeddingError

Vertex = Hashable
Color = Hashable
Coloring = Mapping[Vertex, Color]
ListAssignment = Mapping[Vertex, Collection[Color]]


class Digraph:
    """A digraph without digons, optionally carrying a plane embedding.

    Digraphs built with :meth:`from_embedding` orient every edge of the
    embedding exactly once.  Induced subdigraphs drop the embedding, since
    removing vertices can disconnect the underlying plane graph.
    """

    def __init__(
        self,
        vertices: Iterable[Vertex],
        arcs: Iterable[tuple[Vertex, Vertex]],
        embedding: Optional[PlanarEmbedding] = None,
    ):
        self._vertices = tuple(sorted(set(vertices)))
        vs = set(self._vertices)
        out: dict[Vertex, set] = {v: set() for v in self._vertices}
        inn: dict[Vertex, set] = {v: set() for v in self._vertices}
        arc_set = set()
        for u, v in arcs:
            if u not in vs or v not in vs:
                raise EmbeddingError(f"arc {u!r}->{v!r} uses an unknown vertex")
            if u == v:
                raise EmbeddingError(f"loop at {u!r}")
            if (u, v) in arc_set:
                raise EmbeddingError(f"duplicate arc {u!r}->{v!r}")
            if (v, u) in arc_set:
                raise EmbeddingError(f"digon between {u!r} and {v!r}")
            arc_set.add((u, v))
            out[u].add(v)
            inn[v].add(u)
        self._arcs = frozenset(arc_set)
        self._out = {v: frozenset(s) for v, s in out.items()}
        self._in = {v: frozenset(s) for v, s in inn.items()}
        self.embedding = embedding

    @classmethod
    def from_embedding(
        cls, emb: PlanarEmbedding, arcs: Iterable[tuple[Vertex, Vertex]]
    ) -> "Digraph":
        arcs = list(arcs)
        for u, v in arcs:
            if not emb.has_edge(u, v):
                raise EmbeddingError(f"arc {u!r}->{v!r} is not an edge of the embedding")
        if len(arcs) != emb.num_edges:
            seen = {frozenset(a) for a in arcs}
            missing = [e for e in emb.edges() if frozenset(e) not in seen]
            if missing:
                raise EmbeddingError(f"edge {missing[0]!r} has no orientation")
        return cls(emb.vertices, arcs, embedding=emb)

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def arcs(self) -> frozenset:
        return self._arcs

    def out_neighbors(self, v: Vertex) -> frozenset:
        return self._out[v]

    def in_neighbors(self, v: Vertex) -> frozenset:
        return self._in[v]

    def neighbors(self, v: Vertex) -> frozenset:
        return self._out[v] | self._in[v]

    def degree(self, v: Vertex) -> int:
        return len(self._out[v]) + len(self._in[v])

    def has_arc(self, u: Vertex, v: Vertex) -> bool:
        return (u, v) in self._arcs

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return (u, v) in self._arcs or (v, u) in self._arcs

    def subdigraph(self, keep: Iterable[Vertex]) -> "Digraph":
        keep = set(keep)
        return Digraph(keep, [(u, v) for u, v in self._arcs if u in keep and v in keep])

    def remove_vertex(self, v: Vertex) -> "Digraph":
        return self.subdigraph(w for w in self._vertices if w != v)

    def flip(self, u: Vertex, v: Vertex) -> "Digraph":
        """Copy with arc ``u->v`` reversed."""
        if (u, v) not in self._arcs:
            raise EmbeddingError(f"no arc {u!r}->{v!r}")
        arcs = (self._arcs - {(u, v)}) | {(v, u)}
        return Digraph(self._vertices, arcs, embedding=self.embedding)

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self._vertices == other._vertices
            and self._arcs == other._arcs
        )

    def __hash__(self) -> int:
        return hash((self._vertices, self._arcs))

    def __repr__(self) -> str:
        return f"Digraph(|V|={len(self._vertices)}, |A|={len(self._arcs)})"


@dataclass(frozen=True)
class MonoCycle:
    """A directed cycle all of whose vertices carry ``color``."""

    cycle: tuple[Vertex, ...]
    color: Color

    def __len__(self) -> int:
        return len(self.cycle)

    def arcs(self) -> list[tuple[Vertex, Vertex]]:
        c = self.cycle
        return [(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


def shortest_path(
    D: Digraph, source: Vertex, target: Vertex, allowed: Optional[Collection[Vertex]] = None
) -> Optional[list[Vertex]]:
    """Shortest directed path from ``source`` to ``target`` inside ``allowed``."""
    parent = {source: None}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        if x == target:
            path = []
            while x is not None:
                path.append(x)
                x = parent[x]
            return path[::-1]
        for y in sorted(D.out_neighbors(x)):
            if y not in parent and (allowed is None or y in allowed or y == target):
                parent[y] = x
                queue.append(y)
    return None


def shortest_cycle_through(
    D: Digraph, v: Vertex, allowed: Optional[Collection[Vertex]] = None
) -> Optional[tuple[Vertex, ...]]:
    """Shortest directed cycle through ``v`` whose other vertices lie in ``allowed``."""
    best: Optional[list[Vertex]] = None
    for w in sorted(D.out_neighbors(v)):
        if allowed is not None and w not in allowed:
            continue
        path = shortest_path(D, w, v, allowed)
        if path is not None and (best is None or len(path) < len(best)):
            best = path
    if best is None:
        return None
    return (v,) + tuple(best[:-1])


def shortest_cycle(
    D: Digraph, allowed: Optional[Collection[Vertex]] = None, max_length: Optional[int] = None
) -> Optional[tuple[Vertex, ...]]:
    """A shortest directed cycle, found by one BFS per arc.

    With ``max_length`` only cycles of at most that length are reported.
    """
    best: Optional[tuple[Vertex, ...]] = None
    for u, v in sorted(D.arcs):
        if allowed is not None and (u not in allowed or v not in allowed):
            continue
        path = shortest_path(D, v, u, allowed)
        if path is None:
            continue
        if best is None or len(path) < len(best):
            best = tuple(path)
            if len(best) == 3:
                break
    if best is not None and max_length is not None and len(best) > max_length:
        return None
    return best


def digirth(D: Digraph) -> float:
    """Length of a shortest directed cycle, ``math.inf`` when acyclic."""
    cyc = shortest_cycle(D)
    return math.inf if cyc is None else len(cyc)


def is_acyclic_set(D: Digraph, S: Iterable[Vertex]) -> bool:
    """True iff the subdigraph induced by ``S`` has no directed cycle."""
    S = set(S)
    indeg = {v: sum(1 for u in D.in_neighbors(v) if u in S) for v in S}
    queue = deque(v for v, d in indeg.items() if d == 0)
    removed = 0
    while queue:
        v = queue.popleft()
        removed += 1
        for w in D.out_neighbors(v):
            if w in S:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
    return removed == len(S)


@dataclass
class ColoringReport:
    """Outcome of :func:`validate_coloring`; truthy iff the coloring is valid."""

    off_list: list[Vertex] = field(default_factory=list)
    cycles: list[MonoCycle] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.off_list and not self.cycles

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        parts = [f"vertex {v!r} colored outside its list" for v in self.off_list]
        parts += [
            f"monochromatic {len(c)}-cycle in color {c.color!r}: {' -> '.join(map(str, c.cycle))}"
            for c in self.cycles
        ]
        return "; ".join(parts)


def color_classes(phi: Coloring) -> dict[Color, set]:
    classes: dict[Color, set] = {}
    for v, c in phi.items():
        classes.setdefault(c, set()).add(v)
    return classes


def validate_coloring(D: Digraph, L: ListAssignment, phi: Coloring) -> ColoringReport:
    """Check list membership and acyclicity of every color class.

    Each cyclic class contributes one shortest monochromatic cycle to the
    report.
    """
    missing = [v for v in D.vertices if v not in phi]
    if missing:
        raise ColoringError(f"coloring is partial: {missing[0]!r} uncolored")
    report = ColoringReport()
    report.off_list = [v for v in D.vertices if phi[v] not in L[v]]
    classes = color_classes({v: phi[v] for v in D.vertices})
    for c in sorted(classes, key=repr):
        S = classes[c]
        if not is_acyclic_set(D, S):
            cyc = shortest_cycle(D, allowed=S)
            report.cycles.append(MonoCycle(cyc, c))
    return report


def is_valid_partial(D: Digraph, L: ListAssignment, phi: Coloring) -> bool:
    """Validity of a possibly partial coloring on the vertices it colors."""
    if any(phi[v] not in L[v] for v in phi):
        return False
    return all(is_acyclic_set(D, S) for S in color_classes(phi).values())


def uniform_lists(D: Digraph, colors: Iterable[Color] = (1, 2)) -> dict[Vertex, frozenset]:
    colors = frozenset(colors)
    return {v: colors for v in D.vertices}


def random_lists(
    D: Digraph, k: int, palette: Sequence[Color], rng: random.Random
) -> dict[Vertex, frozenset]:
    """Independent uniformly random ``k``-subsets of ``palette`` per vertex."""
    palette = list(palette)
    return {v: frozenset(rng.sample(palette, k)) for v in D.vertices}
