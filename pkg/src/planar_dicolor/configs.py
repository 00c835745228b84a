"""Plane configurations with constrained degrees and a containment matcher.

A configuration is a plane pattern graph ``C`` with one designated unbounded
face and a degree prescription ``delta`` on a subset ``U`` of its vertices.
A host ``G`` contains it through a map ``h: V(C) -> V(G)`` when

* every pattern edge maps to an edge,
* every bounded facial walk maps to a facial walk of ``G`` (same traversal
  direction, any cyclic starting point),
* ``deg_G(h(a)) == delta(a)`` for every ``a`` in ``U``,
* ``h`` is injective on the neighbourhood of every pattern vertex.

The ``.cfg`` text format::

    cfg 1
    name Q3
    provenance "free text"
    v <id> <neighbours, clockwise>
    u <id> <delta>
    outer <u> <v>      # a dart of the unbounded face

Several configurations can follow each other; each starts at ``name``.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Hashable, Iterator, Mapping, Optional, Union

from .embedding import Dart, Face, PlanarEmbedding
from .errors import CapExceeded, EmbeddingError, FormatError

Vertex = Hashable

BRUTE_PATTERN_CAP = 8
BRUTE_HOST_CAP = 16


class Configuration:
    def __init__(
        self,
        name: str,
        pattern: PlanarEmbedding,
        constrained: Mapping[Vertex, int],
        outer: Optional[Dart] = None,
        provenance: str = "",
    ):
        self.name = name
        self.pattern = pattern
        self.constrained = dict(constrained)
        self.provenance = provenance
        for v, d in self.constrained.items():
            if v not in pattern.vertices:
                raise FormatError(f"{name}: constrained vertex {v!r} is not in the pattern")
            if d < pattern.degree(v):
                raise FormatError(
                    f"{name}: delta({v!r}) = {d} is below its pattern degree {pattern.degree(v)}"
                )
        if pattern.num_edges == 0:
            if outer is not None:
                raise FormatError(f"{name}: edgeless pattern has no dart {outer!r}")
            self.outer_face = pattern.faces[0]
        else:
            if outer is None:
                raise FormatError(f"{name}: missing outer-face dart")
            outer = tuple(outer)  # type: ignore[assignment]
            if not pattern.has_edge(*outer):
                raise FormatError(f"{name}: outer dart {outer!r} is not a dart of the pattern")
            self.outer_face = pattern.face_of(outer)  # type: ignore[arg-type]
        self.outer = outer

    @property
    def bounded_faces(self) -> list[Face]:
        return [f for f in self.pattern.faces if f.index != self.outer_face.index]

    def unconstrained(self, keep: Optional[set] = None) -> "Configuration":
        """Copy keeping only the constraints on ``keep``."""
        keep = set() if keep is None else keep
        return Configuration(
            self.name,
            self.pattern,
            {v: d for v, d in self.constrained.items() if v in keep},
            self.outer,
            self.provenance,
        )

    def __repr__(self) -> str:
        return f"Configuration({self.name!r}, |V|={len(self.pattern.vertices)}, U={sorted(self.constrained)})"


@dataclass(frozen=True)
class Match:
    """A containment witness ``h``, stored as sorted ``(pattern, host)`` pairs."""

    pairs: tuple[tuple[Vertex, Vertex], ...]

    @classmethod
    def of(cls, h: Mapping[Vertex, Vertex]) -> "Match":
        return cls(tuple(sorted(h.items())))

    @property
    def h(self) -> dict[Vertex, Vertex]:
        return dict(self.pairs)

    def __getitem__(self, a: Vertex) -> Vertex:
        return self.h[a]

    def describe(self) -> str:
        return " ".join(f"{a}->{b}" for a, b in self.pairs)


@dataclass
class MatchCheck:
    edges: bool
    faces: bool
    degrees: bool
    local_injective: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.edges and self.faces and self.degrees and self.local_injective

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# catalog files


def parse_catalog(text: str) -> list[Configuration]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            toks = shlex.split(stripped, comments=True)
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
        if toks:
            lines.append((lineno, toks))
    if not lines or lines[0][1] != ["cfg", "1"]:
        raise FormatError("missing 'cfg 1' header")
    blocks: list[list[tuple[int, list[str]]]] = []
    for lineno, toks in lines[1:]:
        if toks[0] == "name":
            blocks.append([])
        elif not blocks:
            raise FormatError(f"line {lineno}: statement before the first 'name'")
        blocks[-1].append((lineno, toks))
    return [_parse_block(b) for b in blocks]


def _parse_block(block: list[tuple[int, list[str]]]) -> Configuration:
    name = " ".join(block[0][1][1:])
    if not name:
        raise FormatError(f"line {block[0][0]}: empty configuration name")
    provenance = ""
    rot: dict[str, list[str]] = {}
    delta: dict[str, int] = {}
    outer: Optional[tuple[str, str]] = None
    for lineno, toks in block[1:]:
        kind = toks[0]
        if kind == "provenance":
            provenance = " ".join(toks[1:])
        elif kind == "v":
            if len(toks) < 2 or toks[1] in rot:
                raise FormatError(f"line {lineno}: bad or repeated vertex declaration")
            rot[toks[1]] = toks[2:]
        elif kind == "u":
            if len(toks) != 3:
                raise FormatError(f"line {lineno}: 'u' takes a vertex and a degree")
            try:
                delta[toks[1]] = int(toks[2])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: degree must be an integer") from exc
        elif kind == "outer":
            if len(toks) != 3:
                raise FormatError(f"line {lineno}: 'outer' takes one dart (two vertices)")
            outer = (toks[1], toks[2])
        else:
            raise FormatError(f"line {lineno}: unknown statement {kind!r}")
    tokens = set(rot) | {w for ns in rot.values() for w in ns} | set(delta)
    if outer:
        tokens |= set(outer)
    if tokens - set(rot):
        raise FormatError(f"{name}: undeclared vertex {sorted(tokens - set(rot))[0]!r}")
    try:
        ids = {t: int(t) for t in tokens}
    except ValueError:
        ids = {t: t for t in tokens}
    try:
        pattern = PlanarEmbedding({ids[v]: [ids[w] for w in ns] for v, ns in rot.items()})
    except EmbeddingError as exc:
        raise FormatError(f"{name}: {exc}") from exc
    return Configuration(
        name,
        pattern,
        {ids[v]: d for v, d in delta.items()},
        (ids[outer[0]], ids[outer[1]]) if outer else None,
        provenance,
    )


def format_catalog(configs: list[Configuration]) -> str:
    out = ["cfg 1"]
    for cfg in configs:
        out.append(f"name {cfg.name}")
        if cfg.provenance:
            out.append(f"provenance {shlex.quote(cfg.provenance)}")
        for v in cfg.pattern.vertices:
            out.append(" ".join(["v", str(v)] + [str(w) for w in cfg.pattern.rotation(v)]))
        for v in sorted(cfg.constrained):
            out.append(f"u {v} {cfg.constrained[v]}")
        if cfg.outer is not None:
            out.append(f"outer {cfg.outer[0]} {cfg.outer[1]}")
    return "\n".join(out) + "\n"


def load_catalog(path: Union[str, Path]) -> list[Configuration]:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return parse_catalog(text)


def shipped_catalog() -> list[Configuration]:
    """The catalog bundled with the package (the triangle and fan entries)."""
    text = resources.files("planar_dicolor").joinpath("data/catalog.cfg").read_text()
    return parse_catalog(text)


def shipped_catalog_path() -> Path:
    return Path(str(resources.files("planar_dicolor").joinpath("data/catalog.cfg")))


# ---------------------------------------------------------------------------
# matching


def _search_order(C: PlanarEmbedding) -> list[Vertex]:
    order = [C.vertices[0]]
    placed = {order[0]}
    i = 0
    while i < len(order):
        for w in sorted(C.neighbors(order[i])):
            if w not in placed:
                placed.add(w)
                order.append(w)
        i += 1
    return order


def _image_is_face(G: PlanarEmbedding, f: Face, h: Mapping[Vertex, Vertex]) -> bool:
    darts = [(h[a], h[b]) for a, b in f.darts]
    for d in darts:
        if not G.has_edge(*d):
            return False
    for d, e in zip(darts, darts[1:] + darts[:1]):
        if G.next_dart(d) != e:
            return False
    return G.face_of(darts[0]).size == len(darts)


def _iter_matches(G: PlanarEmbedding, cfg: Configuration) -> Iterator[dict]:
    C = cfg.pattern
    order = _search_order(C)
    pos = {a: i for i, a in enumerate(order)}
    # faces are checked as soon as their last vertex is placed
    face_at: dict[int, list[Face]] = {}
    for f in cfg.bounded_faces:
        face_at.setdefault(max(pos[a] for a in f.walk), []).append(f)
    earlier = {a: [b for b in C.neighbors(a) if pos[b] < pos[a]] for a in order}

    def degree_ok(a: Vertex, x: Vertex) -> bool:
        if a in cfg.constrained:
            return G.degree(x) == cfg.constrained[a]
        return G.degree(x) >= C.degree(a)

    h: dict[Vertex, Vertex] = {}

    def injective_ok(a: Vertex, x: Vertex) -> bool:
        for c in C.neighbors(a):
            for b in C.neighbors(c):
                if b != a and b in h and h[b] == x:
                    return False
        return True

    def rec(i: int) -> Iterator[dict]:
        if i == len(order):
            yield dict(h)
            return
        a = order[i]
        if earlier[a]:
            anchor = h[earlier[a][0]]
            cands = sorted(G.neighbors(anchor))
        else:
            cands = list(G.vertices)
        for x in cands:
            if not degree_ok(a, x):
                continue
            if any(not G.has_edge(h[b], x) for b in earlier[a]):
                continue
            if not injective_ok(a, x):
                continue
            h[a] = x
            if all(_image_is_face(G, f, h) for f in face_at.get(i, ())):
                yield from rec(i + 1)
            del h[a]

    yield from rec(0)


def contains(G: PlanarEmbedding, cfg: Configuration) -> list[Match]:
    """All containment witnesses, in a deterministic order."""
    return [Match.of(h) for h in _iter_matches(G, cfg)]


def first_match(G: PlanarEmbedding, cfg: Configuration) -> Optional[Match]:
    for h in _iter_matches(G, cfg):
        return Match.of(h)
    return None


def _facial_tuples(G: PlanarEmbedding) -> set[tuple]:
    out = set()
    for f in G.faces:
        w = f.walk
        for i in range(len(w)):
            out.add(w[i:] + w[:i])
    return out


def verify_match(
    G: PlanarEmbedding, cfg: Configuration, h: Union[Match, Mapping[Vertex, Vertex]]
) -> MatchCheck:
    """Check the four containment conditions independently.

    Faces are compared as vertex sequences against every cyclic rotation of
    every facial walk of ``G``, which is not how :func:`contains` tests them.
    """
    hm = h.h if isinstance(h, Match) else dict(h)
    C = cfg.pattern
    failures = []
    missing = [a for a in C.vertices if a not in hm]
    if missing:
        raise ValueError(f"map is not total: {missing[0]!r} unmapped")
    edges = True
    for a, b in C.edges():
        if not G.has_edge(hm[a], hm[b]):
            edges = False
            failures.append(f"(i) edge {a}-{b} maps to non-edge {hm[a]}-{hm[b]}")
    facial = _facial_tuples(G)
    faces = True
    for f in cfg.bounded_faces:
        image = tuple(hm[a] for a in f.walk)
        if image not in facial:
            faces = False
            failures.append(f"(ii) bounded face {f.walk} maps to non-facial walk {image}")
    degrees = True
    for a, d in sorted(cfg.constrained.items()):
        if G.degree(hm[a]) != d:
            degrees = False
            failures.append(f"(iii) deg({hm[a]}) = {G.degree(hm[a])}, required {d}")
    local = True
    for a in C.vertices:
        images = [hm[b] for b in C.neighbors(a)]
        if len(set(images)) != len(images):
            local = False
            failures.append(f"(iv) neighbours of {a} collide")
    return MatchCheck(edges, faces, degrees, local, failures)


def brute_contains(
    G: PlanarEmbedding,
    cfg: Configuration,
    pattern_cap: int = BRUTE_PATTERN_CAP,
    host_cap: int = BRUTE_HOST_CAP,
) -> list[Match]:
    """Exhaustive oracle: every map, pruned only on pattern edges, then verified."""
    C = cfg.pattern
    if len(C.vertices) > pattern_cap or len(G.vertices) > host_cap:
        raise CapExceeded(
            f"oracle limited to |V(C)| <= {pattern_cap} and |V(G)| <= {host_cap}"
        )
    vs = list(C.vertices)
    found = []
    h: dict[Vertex, Vertex] = {}

    def rec(i: int) -> None:
        if i == len(vs):
            if verify_match(G, cfg, h):
                found.append(Match.of(h))
            return
        a = vs[i]
        for x in G.vertices:
            if all(G.has_edge(h[b], x) for b in C.neighbors(a) if b in h):
                h[a] = x
                rec(i + 1)
                del h[a]

    rec(0)
    return found
