"""Rotation-system plane graphs, face tracing and the degree/face taxonomy.

A plane graph is given by its rotation system: for every vertex the cyclic,
clockwise sequence of its neighbours.  Faces are traced with one fixed
convention: the dart following ``(u, v)`` on its face is ``(v, w)`` where
``w`` is the neighbour that comes right after ``u`` in the rotation at ``v``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, NamedTuple, Sequence

from .errors import EmbeddingError

Vertex = Hashable
Dart = tuple[Vertex, Vertex]

MAJOR_FACE_SIZE = 5


@dataclass(frozen=True)
class Face:
    """One facial walk, identified by its index in the embedding."""

    index: int
    darts: tuple[Dart, ...]

    @property
    def size(self) -> int:
        return len(self.darts)

    @property
    def walk(self) -> tuple[Vertex, ...]:
        """Vertices of the walk in traversal order (repeats kept)."""
        return tuple(u for u, _ in self.darts)

    @property
    def is_major(self) -> bool:
        return self.size >= MAJOR_FACE_SIZE

    @property
    def is_minor(self) -> bool:
        return self.size < MAJOR_FACE_SIZE

    @property
    def is_triangle(self) -> bool:
        return self.size == 3


class TriangleType(NamedTuple):
    degrees: tuple[int, int, int]
    major_faces: int
    bad: bool


class PlanarEmbedding:
    """Immutable connected simple plane graph given by a rotation system.

    ``rotations`` maps each vertex to its neighbours in clockwise order.
    Vertex identifiers must be hashable and mutually sortable.
    """

    def __init__(self, rotations: Mapping[Vertex, Sequence[Vertex]]):
        rot: dict[Vertex, tuple[Vertex, ...]] = {}
        for v, nbrs in rotations.items():
            rot[v] = tuple(nbrs)
        try:
            self._vertices = tuple(sorted(rot))
        except TypeError as exc:
            raise EmbeddingError("vertex identifiers must be mutually sortable") from exc
        self._rot = {v: rot[v] for v in self._vertices}
        self._pos = {v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in self._rot.items()}
        self._check_consistency()
        self._check_connected()
        self._faces, self._dart_face = self._trace_faces()
        euler = len(self._vertices) - self.num_edges + len(self._faces)
        if euler != 2:
            raise EmbeddingError(
                f"Euler relation violated: |V|-|E|+|F| = {euler}; rotation data is not a plane embedding"
            )

    # construction checks -------------------------------------------------

    def _check_consistency(self) -> None:
        if not self._rot:
            raise EmbeddingError("embedding needs at least one vertex")
        for v, nbrs in self._rot.items():
            if len(set(nbrs)) != len(nbrs):
                raise EmbeddingError(f"vertex {v!r} lists a neighbour twice (multigraph)")
            for w in nbrs:
                if w == v:
                    raise EmbeddingError(f"loop at {v!r}")
                if w not in self._rot:
                    raise EmbeddingError(f"vertex {v!r} references undeclared vertex {w!r}")
                if v not in self._pos[w]:
                    raise EmbeddingError(f"{v!r} lists {w!r} but {w!r} omits {v!r}")

    def _check_connected(self) -> None:
        start = self._vertices[0]
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in self._rot[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(self._vertices):
            raise EmbeddingError("graph is disconnected")

    def _trace_faces(self) -> tuple[tuple[Face, ...], dict[Dart, int]]:
        if self.num_edges == 0:
            # a lone vertex: the whole plane is one face with an empty walk
            return (Face(0, ()),), {}
        dart_face: dict[Dart, int] = {}
        faces: list[Face] = []
        for u in self._vertices:
            for v in self._rot[u]:
                if (u, v) in dart_face:
                    continue
                darts = []
                d = (u, v)
                while d not in dart_face:
                    dart_face[d] = len(faces)
                    darts.append(d)
                    d = self.next_dart(d)
                if d != (u, v):
                    raise EmbeddingError("face tracing did not close up")
                faces.append(Face(len(faces), tuple(darts)))
        return tuple(faces), dart_face

    # basic queries --------------------------------------------------------

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def rotations(self) -> dict[Vertex, tuple[Vertex, ...]]:
        return dict(self._rot)

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._faces

    @property
    def num_edges(self) -> int:
        return sum(len(n) for n in self._rot.values()) // 2

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        """Undirected edges as ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u in self._vertices for v in self._rot[u] if u < v)

    def darts(self) -> list[Dart]:
        return [(u, v) for u in self._vertices for v in self._rot[u]]

    def rotation(self, v: Vertex) -> tuple[Vertex, ...]:
        return self._rot[v]

    def neighbors(self, v: Vertex) -> frozenset:
        return frozenset(self._rot[v])

    def degree(self, v: Vertex) -> int:
        return len(self._rot[v])

    def min_degree(self) -> int:
        return min(len(n) for n in self._rot.values())

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._pos and v in self._pos[u]

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        rot_v = self._rot[v]
        return (v, rot_v[(self._pos[v][u] + 1) % len(rot_v)])

    def face_of(self, dart: Dart) -> Face:
        return self._faces[self._dart_face[dart]]

    def face_walk_from(self, dart: Dart) -> tuple[Dart, ...]:
        """The facial walk containing ``dart``, rotated to start at it."""
        f = self.face_of(dart)
        i = f.darts.index(dart)
        return f.darts[i:] + f.darts[:i]

    def faces_at(self, v: Vertex) -> list[Face]:
        """Faces incident with ``v``, one entry per angle, in rotation order."""
        return [self.face_of((v, w)) for w in self._rot[v]]

    def triangles_at(self, v: Vertex) -> list[Face]:
        seen: dict[int, Face] = {}
        for f in self.faces_at(v):
            if f.is_triangle:
                seen.setdefault(f.index, f)
        return list(seen.values())

    def across(self, face: Face) -> list[Face]:
        """For each edge of ``face`` (in walk order) the face on its other side."""
        return [self.face_of((v, u)) for u, v in face.darts]

    def without_edge(self, u: Vertex, v: Vertex) -> "PlanarEmbedding":
        if not self.has_edge(u, v):
            raise EmbeddingError(f"no edge {u!r}-{v!r}")
        rot = {x: list(n) for x, n in self._rot.items()}
        rot[u].remove(v)
        rot[v].remove(u)
        return PlanarEmbedding(rot)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlanarEmbedding) and self._rot == other._rot

    def __hash__(self) -> int:
        return hash(tuple(self._rot.items()))

    def __repr__(self) -> str:
        return (
            f"PlanarEmbedding(|V|={len(self._vertices)}, |E|={self.num_edges}, "
            f"|F|={len(self._faces)})"
        )


def build_embedding(rotation_data: Mapping[Vertex, Sequence[Vertex]]) -> PlanarEmbedding:
    """Validate rotation data and trace its faces."""
    return PlanarEmbedding(rotation_data)


def from_drawing(
    positions: Mapping[Vertex, tuple[float, float]], edges: Iterable[tuple[Vertex, Vertex]]
) -> PlanarEmbedding:
    """Rotation system of a straight-line drawing.

    Neighbours are ordered clockwise by the angle of the segment at each
    vertex.  The caller is responsible for the drawing having no crossings;
    a crossing drawing usually fails the Euler check.
    """
    nbrs: dict[Vertex, set] = {v: set() for v in positions}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)

    def angle(v: Vertex, w: Vertex) -> float:
        (x0, y0), (x1, y1) = positions[v], positions[w]
        return math.atan2(y1 - y0, x1 - x0)

    rot = {v: sorted(ns, key=lambda w, v=v: -angle(v, w)) for v, ns in nbrs.items()}
    return PlanarEmbedding(rot)


def face_sizes(emb: PlanarEmbedding) -> list[int]:
    """Sizes of all faces, sorted ascending; they sum to ``2|E|``."""
    return sorted(f.size for f in emb.faces)


def classify_triangle(emb: PlanarEmbedding, face: Face) -> TriangleType:
    """Degree triple (descending), number of major neighbours and badness.

    Major neighbours are counted per edge of the triangle.  A triangle is bad
    when it is a 5-4-4 triangle with at most two major neighbours.
    """
    if not face.is_triangle:
        raise EmbeddingError(f"face {face.index} has size {face.size}, not 3")
    degrees = tuple(sorted((emb.degree(v) for v in face.walk), reverse=True))
    majors = sum(1 for g in emb.across(face) if g.is_major)
    bad = degrees == (5, 4, 4) and majors <= 2
    return TriangleType(degrees, majors, bad)  # type: ignore[arg-type]
