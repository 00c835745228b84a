"""The ``.pdg`` plane-digraph text format, list files and witness lines.

::

    pdg 1
    # comment
    v <id> <neighbour ids, clockwise>
    a <u> <v>        # arc u->v, exactly one per edge (optional block)

Identifiers are integers when every token parses as one, strings otherwise.
"""

from __future__ import annotations

from pathlib import Path
from typing import Hashable, Optional, Union

from .digraph import Coloring, Digraph, ListAssignment
from .embedding import PlanarEmbedding
from .errors import EmbeddingError, FormatError

PathLike = Union[str, Path]


def _statements(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line.split()))
    return out


def _coerce(tokens: list[str]) -> dict[str, Hashable]:
    try:
        return {t: int(t) for t in tokens}
    except ValueError:
        return {t: t for t in tokens}


def parse_pdg(text: str) -> tuple[PlanarEmbedding, Optional[Digraph]]:
    """Parse ``.pdg`` text into the embedding and, if arcs are given, the digraph."""
    stmts = _statements(text)
    if not stmts or stmts[0][1] != ["pdg", "1"]:
        raise FormatError("missing 'pdg 1' header")
    rot_tokens: dict[str, list[str]] = {}
    arc_tokens: list[tuple[int, str, str]] = []
    for lineno, toks in stmts[1:]:
        kind = toks[0]
        if kind == "v":
            if len(toks) < 2:
                raise FormatError(f"line {lineno}: 'v' needs an identifier")
            if toks[1] in rot_tokens:
                raise FormatError(f"line {lineno}: vertex {toks[1]} declared twice")
            rot_tokens[toks[1]] = toks[2:]
        elif kind == "a":
            if len(toks) != 3:
                raise FormatError(f"line {lineno}: 'a' takes exactly two vertices")
            arc_tokens.append((lineno, toks[1], toks[2]))
        else:
            raise FormatError(f"line {lineno}: unknown statement {kind!r}")
    all_tokens = set(rot_tokens)
    for nbrs in rot_tokens.values():
        all_tokens.update(nbrs)
    for _, u, v in arc_tokens:
        all_tokens.update((u, v))
    undeclared = sorted(all_tokens - set(rot_tokens))
    if undeclared:
        raise FormatError(f"undeclared vertex {undeclared[0]!r}")
    ids = _coerce(sorted(all_tokens))
    try:
        emb = PlanarEmbedding({ids[v]: [ids[w] for w in n] for v, n in rot_tokens.items()})
    except EmbeddingError as exc:
        raise FormatError(str(exc)) from exc
    if not arc_tokens:
        return emb, None
    seen: dict[frozenset, int] = {}
    arcs = []
    for lineno, u, v in arc_tokens:
        key = frozenset((u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: edge {u}-{v} already oriented on line {seen[key]}")
        seen[key] = lineno
        arcs.append((ids[u], ids[v]))
    try:
        D = Digraph.from_embedding(emb, arcs)
    except EmbeddingError as exc:
        raise FormatError(str(exc)) from exc
    return emb, D


def format_pdg(obj: Union[PlanarEmbedding, Digraph]) -> str:
    """Canonical ``.pdg`` text; byte-identical for equal inputs."""
    if isinstance(obj, Digraph):
        if obj.embedding is None:
            raise FormatError("digraph has no embedding to serialise")
        emb, arcs = obj.embedding, sorted(obj.arcs)
    else:
        emb, arcs = obj, []
    lines = ["pdg 1"]
    for v in emb.vertices:
        lines.append(" ".join(["v", str(v)] + [str(w) for w in emb.rotation(v)]))
    for u, v in arcs:
        lines.append(f"a {u} {v}")
    return "\n".join(lines) + "\n"


def read_pdg(path: PathLike) -> tuple[PlanarEmbedding, Optional[Digraph]]:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return parse_pdg(text)


def write_pdg(obj: Union[PlanarEmbedding, Digraph], path: PathLike) -> None:
    Path(path).write_text(format_pdg(obj))


def parse_lists(text: str, D: Digraph) -> dict[Hashable, frozenset]:
    """Parse ``l <vertex> <color> ...`` lines; every vertex needs a list."""
    by_token = {str(v): v for v in D.vertices}
    stmts = _statements(text)
    color_tokens = sorted({t for _, toks in stmts for t in toks[2:]})
    colors = _coerce(color_tokens)
    lists: dict[Hashable, frozenset] = {}
    for lineno, toks in stmts:
        if toks[0] != "l" or len(toks) < 3:
            raise FormatError(f"line {lineno}: expected 'l <vertex> <colors...>'")
        if toks[1] not in by_token:
            raise FormatError(f"line {lineno}: unknown vertex {toks[1]!r}")
        lists[by_token[toks[1]]] = frozenset(colors[c] for c in toks[2:])
    absent = [v for v in D.vertices if v not in lists]
    if absent:
        raise FormatError(f"no list for vertex {absent[0]!r}")
    return lists


def format_lists(L: ListAssignment) -> str:
    return "".join(
        " ".join(["l", str(v)] + [str(c) for c in sorted(L[v], key=str)]) + "\n"
        for v in sorted(L)
    )


def format_coloring(phi: Coloring) -> list[str]:
    return [f"c {v} {phi[v]}" for v in sorted(phi)]


def parse_coloring(lines: list[str], D: Digraph) -> dict[Hashable, Hashable]:
    by_token = {str(v): v for v in D.vertices}
    toks = [ln.split() for ln in lines if ln.startswith("c ")]
    colors = _coerce(sorted({t[2] for t in toks}))
    return {by_token[t[1]]: colors[t[2]] for t in toks}

