"""Exact list-dicoloring, brute-force oracles and local recoloring checks.

The exact search works in two phases.  First, vertices that can be colored
safely are peeled off: if some color ``c`` of ``L(v)`` cannot occur on any
remaining in-neighbour (or on any remaining out-neighbour) of ``v``, then
``v`` colored ``c`` never lies on a color-``c`` cycle.  The remaining kernel
is searched depth-first with forward checking: after ``v`` receives ``c``, a
color ``c`` is deleted from the domain of every uncolored ``w`` that would
close a color-``c`` cycle through ``v``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Hashable, Iterable, Mapping, Optional

from .digraph import (
    Coloring,
    Digraph,
    ListAssignment,
    MonoCycle,
    is_acyclic_set,
    shortest_cycle,
    shortest_cycle_through,
    uniform_lists,
    validate_coloring,
)
from .errors import CapExceeded, ColoringError

Vertex = Hashable
Color = Hashable

DEFAULT_BUDGET = 10**7
BRUTE_FORCE_CAP = 2**24
ACYCLIC_CAP = 20
DICHROMATIC_CAP = 24
RECOLOR_DEPTH = 8


class Status(str, Enum):
    COLORED = "colored"
    UNSATISFIABLE = "unsatisfiable"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass
class SolveOutcome:
    status: Status
    witness: Optional[dict] = None
    nodes: int = 0
    backtracks: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def colored(self) -> bool:
        return self.status is Status.COLORED

    def summary(self) -> dict:
        return {"status": self.status.value, "nodes": self.nodes, "backtracks": self.backtracks}


class _BudgetExhausted(Exception):
    pass


class _Counter:
    def __init__(self, budget: Optional[int]):
        self.budget = budget
        self.nodes = 0
        self.backtracks = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted


def _sorted_colors(colors: Iterable[Color]) -> list:
    return sorted(colors, key=repr)


# ---------------------------------------------------------------------------
# exact search


def peel_safe_vertices(D: Digraph, L: ListAssignment) -> tuple[list[tuple[Vertex, Color]], set]:
    """Repeatedly remove vertices owning a color absent on one side.

    Returns the peeled ``(vertex, color)`` pairs in removal order and the
    kernel that still needs search.  Coloring each peeled vertex with its
    color never creates a monochromatic cycle, whatever the kernel gets.
    """
    remaining = set(D.vertices)
    peeled: list[tuple[Vertex, Color]] = []
    changed = True
    while changed:
        changed = False
        for v in sorted(remaining):
            ins = [u for u in D.in_neighbors(v) if u in remaining]
            outs = [u for u in D.out_neighbors(v) if u in remaining]
            for c in _sorted_colors(L[v]):
                if all(c not in L[u] for u in ins) or all(c not in L[u] for u in outs):
                    peeled.append((v, c))
                    remaining.discard(v)
                    changed = True
                    break
    return peeled, remaining


def branching_order(D: Digraph, vertices: Iterable[Vertex], seed: Optional[int] = None) -> list:
    """Degree descending, ties by identifier (or by a seeded shuffle)."""
    vertices = sorted(vertices)
    if seed is not None:
        rng = random.Random(seed)
        rng.shuffle(vertices)
        tie = {v: i for i, v in enumerate(vertices)}
        return sorted(vertices, key=lambda v: (-D.degree(v), tie[v]))
    return sorted(vertices, key=lambda v: (-D.degree(v), v))


def _reach(D: Digraph, start: Vertex, members: set, forward: bool) -> set:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        nbrs = D.out_neighbors(x) if forward else D.in_neighbors(x)
        for y in nbrs:
            if y in members and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _search_kernel(
    D: Digraph,
    L: ListAssignment,
    kernel: set,
    counter: _Counter,
    seed: Optional[int],
    fix_first: bool,
) -> Optional[dict]:
    order = branching_order(D, kernel, seed)
    rng = random.Random(seed) if seed is not None else None
    dom = {v: set(L[v]) for v in kernel}
    color: dict = {}
    classes: dict = {}
    n = len(order)
    entry: list = [None] * n
    pos = [0] * n
    trail: list = [None] * n

    def assign(v: Vertex, c: Color) -> tuple[list, bool]:
        color[v] = c
        members = classes.setdefault(c, set())
        members.add(v)
        reach_out = _reach(D, v, members, forward=True)
        reach_in = _reach(D, v, members, forward=False)
        removed = []
        for w in order:
            if w in color or c not in dom[w]:
                continue
            if D.out_neighbors(w) & reach_in and D.in_neighbors(w) & reach_out:
                dom[w].discard(c)
                removed.append(w)
                if not dom[w]:
                    return removed, False
        return removed, True

    def unassign(v: Vertex, removed: list) -> None:
        c = color.pop(v)
        classes[c].discard(v)
        for w in removed:
            dom[w].add(c)

    i = 0
    while i >= 0:
        if i == n:
            return dict(color)
        v = order[i]
        if entry[i] is None:
            values = _sorted_colors(dom[v])
            if rng is not None:
                rng.shuffle(values)
            if i == 0 and fix_first:
                values = values[:1]
            entry[i] = values
            pos[i] = 0
        elif trail[i] is not None:
            unassign(v, trail[i])
            trail[i] = None
        if pos[i] >= len(entry[i]):
            entry[i] = None
            counter.backtracks += 1
            i -= 1
            continue
        c = entry[i][pos[i]]
        pos[i] += 1
        counter.tick()
        removed, ok = assign(v, c)
        trail[i] = removed
        if ok:
            i += 1
    return None


def solve(
    D: Digraph,
    L: ListAssignment,
    budget: Optional[int] = DEFAULT_BUDGET,
    seed: Optional[int] = None,
) -> SolveOutcome:
    """Exact L-coloring search; ``budget`` bounds the number of search nodes.

    ``seed`` only perturbs tie-breaking and value order; identical inputs and
    seed give identical outcomes and statistics.
    """
    counter = _Counter(budget)
    if any(len(L[v]) == 0 for v in D.vertices):
        return SolveOutcome(Status.UNSATISFIABLE)
    peeled, kernel = peel_safe_vertices(D, L)
    fix_first = len({frozenset(L[v]) for v in D.vertices}) == 1
    try:
        kernel_coloring = _search_kernel(D, L, kernel, counter, seed, fix_first)
    except _BudgetExhausted:
        return SolveOutcome(Status.BUDGET_EXHAUSTED, None, counter.nodes, counter.backtracks)
    if kernel_coloring is None:
        return SolveOutcome(Status.UNSATISFIABLE, None, counter.nodes, counter.backtracks)
    witness = dict(kernel_coloring)
    witness.update(peeled)
    witness = {v: witness[v] for v in D.vertices}
    return SolveOutcome(
        Status.COLORED, witness, counter.nodes, counter.backtracks, {"peeled": len(peeled)}
    )


def brute_force(D: Digraph, L: ListAssignment, cap: int = BRUTE_FORCE_CAP) -> SolveOutcome:
    """Enumerate every assignment in list order; ground truth for :func:`solve`."""
    vertices = list(D.vertices)
    lists = [_sorted_colors(L[v]) for v in vertices]
    total = math.prod(len(x) for x in lists)
    if total > cap:
        raise CapExceeded(f"{total} assignments exceed the brute-force cap {cap}")
    index = {v: i for i, v in enumerate(vertices)}
    out_mask = [0] * len(vertices)
    for u, v in D.arcs:
        out_mask[index[u]] |= 1 << index[v]

    def acyclic(mask: int) -> bool:
        while mask:
            m = mask
            while m:
                bit = m & -m
                if out_mask[bit.bit_length() - 1] & mask == 0:
                    mask ^= bit
                    break
                m ^= bit
            else:
                return False
        return True

    nodes = 0
    for combo in itertools.product(*lists):
        nodes += 1
        masks: dict = {}
        for i, c in enumerate(combo):
            masks[c] = masks.get(c, 0) | (1 << i)
        if all(acyclic(m) for m in masks.values()):
            return SolveOutcome(Status.COLORED, dict(zip(vertices, combo)), nodes, 0)
    return SolveOutcome(Status.UNSATISFIABLE, None, nodes, 0)


def dichromatic_number(D: Digraph, cap: int = DICHROMATIC_CAP) -> int:
    """Least ``k`` such that the vertices split into ``k`` acyclic sets."""
    if len(D) > cap:
        raise CapExceeded(f"{len(D)} vertices exceed the dichromatic-number cap {cap}")
    if is_acyclic_set(D, D.vertices):
        return 1
    k = 2
    while True:
        if solve(D, uniform_lists(D, range(1, k + 1)), budget=None).colored:
            return k
        k += 1


# ---------------------------------------------------------------------------
# extension, shortcuts and the colors around a 4-vertex


def _check_rest(D: Digraph, v: Vertex, phi: Coloring, L: ListAssignment) -> dict:
    rest = {x: phi[x] for x in D.vertices if x != v and x in phi}
    if len(rest) != len(D) - 1:
        raise ColoringError("phi must color every vertex except the one being extended")
    report = validate_coloring(D.remove_vertex(v), L, rest)
    if not report.ok:
        raise ColoringError(f"phi is not valid on D - {v!r}: {report.describe()}")
    return rest


def _blocking_cycles(D: Digraph, v: Vertex, rest: Mapping, colors: Iterable[Color]) -> dict:
    verdict = {}
    for c in _sorted_colors(colors):
        members = {x for x, col in rest.items() if col == c}
        cyc = shortest_cycle_through(D, v, allowed=members)
        verdict[c] = None if cyc is None else MonoCycle(cyc, c)
    return verdict


def check_extension(
    D: Digraph, v: Vertex, phi: Coloring, L: ListAssignment, validate: bool = True
) -> dict:
    """For each ``c`` in ``L(v)``: ``None`` if coloring ``v`` with ``c`` keeps
    ``phi`` valid, otherwise the shortest blocking color-``c`` cycle through ``v``.

    A color missing among the out-neighbours or the in-neighbours of ``v``
    always extends, since any blocking cycle needs both.
    """
    if validate:
        rest = _check_rest(D, v, phi, L)
    else:
        rest = {x: c for x, c in phi.items() if x != v}
    return _blocking_cycles(D, v, rest, L[v])


def local_contexts(D: Digraph, v: Vertex) -> list[tuple]:
    """Triangles ``(v, u, w)`` and 4-cycles ``(v, w, u, x)`` through ``v``.

    4-cycles are listed under both namings of ``v``'s two neighbours since
    the forbidden pattern is not symmetric in them.
    """
    nbrs = sorted(D.neighbors(v))
    out = []
    for u, w in itertools.combinations(nbrs, 2):
        if D.has_edge(u, w):
            out.append((v, u, w))
    for w, x in itertools.permutations(nbrs, 2):
        for u in sorted(D.neighbors(w) & D.neighbors(x)):
            if u != v:
                out.append((v, w, u, x))
    return out


def _require_chord(D: Digraph, a: Vertex, b: Vertex) -> None:
    if D.has_arc(b, a):
        raise ValueError(f"arc {b!r}->{a!r} closes a directed 3- or 4-cycle: digirth precondition violated")
    if not D.has_arc(a, b):
        raise ValueError(f"context is not a cycle of D: no edge {a!r}-{b!r}")


def shortcut_check(D: Digraph, cycle: MonoCycle, context: tuple) -> Optional[MonoCycle]:
    """Detect the forbidden ways a color cycle through ``v`` meets a short cycle.

    ``context`` is a triangle ``(v, u, w)`` or a 4-cycle ``(v, w, u, x)``.  When
    the cycle uses both triangle edges at ``v``, or the path ``u x v w`` of the
    4-cycle, the chord ``uw`` yields a shorter cycle of the same color avoiding
    ``v``; that cycle is returned.  ``None`` means the cycle is legal.
    """
    cyc = cycle.cycle
    k = len(cyc)
    v = context[0]
    if v not in cyc:
        raise ValueError(f"cycle does not pass through {v!r}")
    i = cyc.index(v)
    pred, succ = cyc[(i - 1) % k], cyc[(i + 1) % k]
    if len(context) == 3:
        _, u, w = context
        if {pred, succ} != {u, w}:
            return None
        a, b = pred, succ
        _require_chord(D, a, b)
        # drop v, close with a->b
        path = [cyc[(i + 1 + j) % k] for j in range(k - 1)]
        return MonoCycle(tuple(path), cycle.color)
    if len(context) == 4:
        _, w, u, x = context
        before = cyc[(i - 2) % k]
        after = cyc[(i + 2) % k]
        if pred == x and succ == w and before == u:
            a, b = u, w
            drop = {x, v}
        elif pred == w and succ == x and after == u:
            a, b = w, u
            drop = {v, x}
        else:
            return None
        _require_chord(D, a, b)
        start = cyc.index(b)
        path = [cyc[(start + j) % k] for j in range(k)]
        return MonoCycle(tuple(p for p in path if p not in drop), cycle.color)
    raise ValueError("context must be a triangle or a 4-cycle")


@dataclass
class PartnerProfile:
    """What happens at a 4-neighbour ``w`` after swapping the uncolored vertex to it."""

    vertex: Vertex
    swap_valid: bool
    blocked: bool
    lists_equal: bool

    @property
    def holds(self) -> bool:
        return self.swap_valid and (not self.blocked or self.lists_equal)


@dataclass
class TriangleProfile:
    extending: list
    cycles: dict
    neighbor_colors: dict
    one_per_side: bool = True
    touching: Optional[bool] = None
    triangle_split: bool = True
    partners: list = field(default_factory=list)

    @property
    def forced(self) -> bool:
        return not self.extending

    @property
    def holds(self) -> bool:
        """True when not forced, or when every forced pattern is present."""
        if not self.forced:
            return True
        return (
            self.one_per_side
            and self.touching is not False
            and self.triangle_split
            and all(p.holds for p in self.partners)
        )

    def describe(self) -> str:
        if not self.forced:
            return "not forced: extension exists"
        return "forced pattern holds" if self.holds else "forced pattern violated"


def _touching(D: Digraph, v: Vertex, pairs: list[tuple]) -> Optional[bool]:
    if D.embedding is None or len(pairs) != 2:
        return None
    rot = D.embedding.rotation(v)
    pos = {w: i for i, w in enumerate(rot)}
    a, b = sorted(pos[x] for x in pairs[0])
    inside = [a < pos[x] < b for x in pairs[1]]
    return inside[0] == inside[1]


def triangle_color_profile(
    D: Digraph, T: tuple, phi: Coloring, L: ListAssignment
) -> TriangleProfile:
    """Colors around a 4-vertex ``v`` on a triangle ``T = (v, u, w)``.

    When no color of ``L(v)`` extends ``phi``, the two blocking cycles use one
    in- and one out-neighbour each, do not cross at ``v``, and split ``u`` and
    ``w``.  For a 4-neighbour on the triangle, moving the uncolored slot to it
    and finding it blocked as well forces its list to equal ``L(v)``.
    """
    v, u, w = T
    if D.degree(v) != 4:
        raise ValueError(f"profile needs a 4-vertex, {v!r} has degree {D.degree(v)}")
    if not (D.has_edge(v, u) and D.has_edge(v, w) and D.has_edge(u, w)):
        raise ValueError(f"{T!r} is not a triangle")
    if len(L[v]) != 2:
        raise ValueError("profile needs a 2-element list at v")
    rest = _check_rest(D, v, phi, L)
    verdict = _blocking_cycles(D, v, rest, L[v])
    nbr_colors = {x: rest[x] for x in sorted(D.neighbors(v))}
    profile = TriangleProfile(
        extending=[c for c, cyc in verdict.items() if cyc is None],
        cycles={c: cyc for c, cyc in verdict.items() if cyc is not None},
        neighbor_colors=nbr_colors,
    )
    if not profile.forced:
        return profile
    ins, outs = D.in_neighbors(v), D.out_neighbors(v)
    profile.one_per_side = all(
        sum(1 for x in ins if rest[x] == c) == 1 and sum(1 for x in outs if rest[x] == c) == 1
        for c in L[v]
    )
    pairs = [tuple(x for x in nbr_colors if rest[x] == c) for c in _sorted_colors(L[v])]
    if all(len(p) == 2 for p in pairs):
        profile.touching = _touching(D, v, pairs)
    profile.triangle_split = rest[u] != rest[w]
    for x in (u, w):
        if D.degree(x) != 4:
            continue
        swapped = {y: c for y, c in rest.items() if y != x}
        swapped[v] = rest[x]
        if not validate_coloring(D.remove_vertex(x), L, swapped).ok:
            profile.partners.append(PartnerProfile(x, False, False, False))
            continue
        blocked = all(cyc is not None for cyc in _blocking_cycles(D, x, swapped, L[x]).values())
        profile.partners.append(
            PartnerProfile(x, True, blocked, frozenset(L[x]) == frozenset(L[v]))
        )
    return profile


# ---------------------------------------------------------------------------
# reduction-based coloring


@dataclass
class _RecolorState:
    D: Digraph
    L: ListAssignment
    phi: dict
    counter: _Counter
    shortcut_checks: int = 0


def _conflict(state: _RecolorState, changed: list) -> Optional[tuple]:
    classes: dict = {}
    for y, c in state.phi.items():
        classes.setdefault(c, set()).add(y)
    for y in changed:
        cyc = shortest_cycle_through(state.D, y, allowed=classes[state.phi[y]])
        if cyc is not None:
            return cyc
    return None


def _repair(state: _RecolorState, changed: list, depth: int) -> bool:
    cyc = _conflict(state, changed)
    if cyc is None:
        return True
    if depth == 0:
        return False
    for z in cyc:
        if z in changed:
            continue
        old = state.phi[z]
        for c in _sorted_colors(state.L[z]):
            if c == old:
                continue
            state.counter.tick()
            state.phi[z] = c
            changed.append(z)
            if _repair(state, changed, depth - 1):
                return True
            changed.pop()
            state.phi[z] = old
    return False


def _screen(state: _RecolorState, v: Vertex, cyc: MonoCycle) -> None:
    for ctx in local_contexts(state.D, v):
        state.shortcut_checks += 1
        shortcut = shortcut_check(state.D, cyc, ctx)
        if shortcut is not None:
            raise AssertionError(
                f"shortcut {shortcut.cycle!r} avoids {v!r}: the coloring of the rest was not valid"
            )


def _extend(state: _RecolorState, v: Vertex, depth: int) -> bool:
    rest = state.phi
    colors = _sorted_colors(state.L[v])
    blocked = {}
    for c in colors:
        state.counter.tick()
        members = {x for x, col in rest.items() if col == c}
        cyc = shortest_cycle_through(state.D, v, allowed=members)
        if cyc is None:
            rest[v] = c
            return True
        blocked[c] = MonoCycle(cyc, c)
    for c in colors:
        _screen(state, v, blocked[c])
    for d in range(1, depth + 1):
        for c in colors:
            snapshot = dict(rest)
            rest[v] = c
            if _repair(state, [v], d):
                return True
            rest.clear()
            rest.update(snapshot)
    return False


def reduce_and_color(
    D: Digraph,
    L: ListAssignment,
    recolor_depth: int = RECOLOR_DEPTH,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> SolveOutcome:
    """Color by peeling reducible vertices and extending back.

    Vertices of degree at most 3 are removed first, then 4-vertices on a
    triangle; whatever is left is solved exactly.  On the way back each
    vertex is colored directly when possible, otherwise by recoloring up to
    ``recolor_depth`` vertices.  If that fails the whole instance is solved
    exactly.
    """
    counter = _Counter(budget)
    remaining = set(D.vertices)
    removed: list = []
    steps = {"low_degree": 0, "triangle_four": 0}

    def rdeg(x: Vertex) -> int:
        return sum(1 for y in D.neighbors(x) if y in remaining)

    while remaining:
        low = [x for x in remaining if rdeg(x) <= 3]
        if low:
            x = min(low, key=lambda y: (rdeg(y), y))
            steps["low_degree"] += 1
        else:
            fours = [
                x
                for x in sorted(remaining)
                if rdeg(x) == 4
                and any(
                    D.has_edge(a, b)
                    for a, b in itertools.combinations(
                        sorted(y for y in D.neighbors(x) if y in remaining), 2
                    )
                )
            ]
            if not fours:
                break
            x = fours[0]
            steps["triangle_four"] += 1
        removed.append(x)
        remaining.discard(x)

    phi: dict = {}
    if remaining:
        core = D.subdigraph(remaining)
        remaining_budget = None if budget is None else budget
        core_out = solve(core, L, budget=remaining_budget)
        counter.nodes += core_out.nodes
        counter.backtracks += core_out.backtracks
        if core_out.status is not Status.COLORED:
            return SolveOutcome(core_out.status, None, counter.nodes, counter.backtracks)
        phi.update(core_out.witness)

    state = _RecolorState(D, L, phi, counter)
    fallback = False
    try:
        for x in reversed(removed):
            if not _extend(state, x, recolor_depth):
                fallback = True
                break
    except _BudgetExhausted:
        fallback = True
    extra = {"core": len(remaining), "shortcut_checks": state.shortcut_checks, **steps}
    if fallback:
        left = None if budget is None else max(budget - counter.nodes, 0)
        out = solve(D, L, budget=left)
        out.nodes += counter.nodes
        out.backtracks += counter.backtracks
        out.extra = {**extra, "fallback": True}
        return out
    witness = {v: phi[v] for v in D.vertices}
    report = validate_coloring(D, L, witness)
    if not report.ok:
        raise AssertionError(f"reduction produced an invalid coloring: {report.describe()}")
    return SolveOutcome(
        Status.COLORED, witness, counter.nodes, counter.backtracks, {**extra, "fallback": False}
    )


# ---------------------------------------------------------------------------
# randomized recoloring walk (used to exercise the shortcut assertions)


@dataclass
class WalkStats:
    steps: int = 0
    moves: int = 0
    cycles_checked: int = 0
    shortcut_checks: int = 0
    firings: list = field(default_factory=list)


def recoloring_walk(
    D: Digraph,
    L: ListAssignment,
    v: Vertex,
    phi: Coloring,
    steps: int,
    rng: random.Random,
) -> WalkStats:
    """Random single-vertex recolorings of a valid coloring of ``D - v``.

    Only moves keeping the coloring valid are taken.  After every step the
    blocking cycles at ``v`` are recomputed and run through
    :func:`shortcut_check` on every triangle and 4-cycle at ``v``; on a valid
    coloring none may fire, so ``firings`` lists state corruption.
    """
    rest = dict(_check_rest(D, v, phi, L))
    others = sorted(rest)
    contexts = local_contexts(D, v)
    stats = WalkStats()
    for _ in range(steps):
        stats.steps += 1
        x = rng.choice(others)
        options = _sorted_colors(set(L[x]) - {rest[x]})
        if options:
            c = rng.choice(options)
            members = {y for y, col in rest.items() if col == c and y != x}
            members.discard(v)
            if shortest_cycle_through(D, x, allowed=members) is None:
                rest[x] = c
                stats.moves += 1
        for c, cyc in _blocking_cycles(D, v, rest, L[v]).items():
            if cyc is None:
                continue
            stats.cycles_checked += 1
            for ctx in contexts:
                stats.shortcut_checks += 1
                hit = shortcut_check(D, cyc, ctx)
                if hit is not None:
                    stats.firings.append((dict(rest), cyc, ctx, hit))
    return stats


# ---------------------------------------------------------------------------
# acyclic sets


def _min_feedback_set(D: Digraph, alive: set, k: int) -> Optional[list]:
    cyc = shortest_cycle(D, allowed=alive)
    if cyc is None:
        return []
    if k == 0:
        return None
    for x in cyc:
        alive.discard(x)
        rest = _min_feedback_set(D, alive, k - 1)
        alive.add(x)
        if rest is not None:
            return [x] + rest
    return None


def max_acyclic_set(D: Digraph, cap: int = ACYCLIC_CAP) -> frozenset:
    """A maximum vertex set inducing an acyclic subdigraph.

    Computes a minimum feedback vertex set by iterative deepening: every
    feedback set must hit a shortest remaining cycle, so branch on its
    vertices.
    """
    if len(D) > cap:
        raise CapExceeded(f"{len(D)} vertices exceed the acyclic-set cap {cap}")
    alive = set(D.vertices)
    for k in range(len(D) + 1):
        fvs = _min_feedback_set(D, alive, k)
        if fvs is not None:
            return frozenset(alive - set(fvs))
    raise AssertionError("unreachable: removing every vertex leaves no cycle")


def acyclic_bound(n: int) -> int:
    """Smallest integer at least ``3n/5``."""
    return -(-3 * n // 5)
