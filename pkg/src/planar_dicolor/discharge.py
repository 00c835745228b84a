"""Exact-rational discharging over a plane embedding.

Every vertex and face starts with charge ``deg - 4`` (total ``-8`` on any
connected plane graph).  Rules R1-R4 and R6-R9 depend only on structure and
are evaluated together; R5 then reads what R1 and R2 sent into its triangle;
R* finally moves positive triangle excess onto negative 5-5-4 neighbours.

Elements are labelled ``v<id>`` for vertices and ``f<index>`` for faces.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .embedding import Face, PlanarEmbedding, Vertex
from .errors import FormatError

RULES = ("R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R*")
TOTAL = Fraction(-8)

R3_AMOUNTS = {1: Fraction(4, 5), 2: Fraction(3, 5), 3: Fraction(2, 5)}
R7_AMOUNTS = {0: Fraction(1, 2), 1: Fraction(2, 5), 2: Fraction(3, 10), 3: Fraction(1, 5)}


def vlabel(v: Vertex) -> str:
    return f"v{v}"


def flabel(f: Face) -> str:
    return f"f{f.index}"


def fmt_fraction(q: Fraction) -> str:
    """Always ``p/q`` in lowest terms, also for integers."""
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Transfer:
    rule: str
    sender: str
    receiver: str
    amount: Fraction

    def to_line(self) -> str:
        return f"{self.rule} {self.sender} -> {self.receiver} {fmt_fraction(self.amount)}"

    @classmethod
    def from_line(cls, line: str) -> "Transfer":
        parts = line.split()
        if len(parts) != 5 or parts[2] != "->":
            raise FormatError(f"malformed ledger line {line!r}")
        rule, sender, _, receiver, amount = parts
        if rule not in RULES:
            raise FormatError(f"unknown rule tag {rule!r}")
        try:
            q = Fraction(amount)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad amount {amount!r}") from exc
        return cls(rule, sender, receiver, q)


@dataclass
class ChargeState:
    """Charge per element label, kept in a stable element order."""

    charge: dict[str, Fraction]

    def total(self) -> Fraction:
        return sum(self.charge.values(), Fraction(0))

    def negatives(self) -> list[str]:
        return [x for x, c in self.charge.items() if c < 0]

    def copy(self) -> "ChargeState":
        return ChargeState(dict(self.charge))

    def apply(self, transfers: Iterable[Transfer]) -> "ChargeState":
        out = dict(self.charge)
        for t in transfers:
            out[t.sender] -= t.amount
            out[t.receiver] += t.amount
        return ChargeState(out)

    def __getitem__(self, label: str) -> Fraction:
        return self.charge[label]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ChargeState) and self.charge == other.charge

    def to_lines(self) -> list[str]:
        return [f"charge {x} {fmt_fraction(c)}" for x, c in self.charge.items()]


@dataclass
class ChargeLedger:
    transfers: list[Transfer] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __iter__(self) -> Iterator[Transfer]:
        return iter(self.transfers)

    def __len__(self) -> int:
        return len(self.transfers)

    def by_rule(self, rule: str) -> list[Transfer]:
        return [t for t in self.transfers if t.rule == rule]

    def amount(self, rule: str, sender: str, receiver: str) -> Fraction:
        return sum(
            (t.amount for t in self.transfers if (t.rule, t.sender, t.receiver) == (rule, sender, receiver)),
            Fraction(0),
        )

    def received(self, receiver: str, rules: Optional[Iterable[str]] = None) -> Fraction:
        rules = set(RULES if rules is None else rules)
        return sum((t.amount for t in self.transfers if t.receiver == receiver and t.rule in rules), Fraction(0))

    def to_text(self) -> str:
        lines = [t.to_line() for t in self.transfers] + [f"# note {n}" for n in self.notes]
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_text(cls, text: str) -> "ChargeLedger":
        ledger = cls()
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("note "):
                    ledger.notes.append(body[5:])
                continue
            ledger.transfers.append(Transfer.from_line(line))
        return ledger


def initial_charges(emb: PlanarEmbedding) -> ChargeState:
    """``deg(x) - 4`` on every vertex and face."""
    charge = {vlabel(v): Fraction(emb.degree(v) - 4) for v in emb.vertices}
    charge.update({flabel(f): Fraction(f.size - 4) for f in emb.faces})
    return ChargeState(charge)


# ---------------------------------------------------------------------------
# structural helpers


def _majors(emb: PlanarEmbedding, f: Face) -> int:
    return sum(1 for g in emb.across(f) if g.is_major)


def _is_bad(emb: PlanarEmbedding, f: Face) -> bool:
    degs = sorted((emb.degree(v) for v in f.walk), reverse=True)
    return degs == [5, 4, 4] and _majors(emb, f) <= 2


def _triangles(emb: PlanarEmbedding) -> list[Face]:
    return [f for f in emb.faces if f.is_triangle]


def _others(emb: PlanarEmbedding, f: Face, v: Vertex) -> list[Vertex]:
    return [w for w in f.walk if w != v]


def _edge_face(emb: PlanarEmbedding, f: Face, a: Vertex, b: Vertex) -> Face:
    """The face across the edge ``ab`` of triangle ``f``."""
    for (x, y), g in zip(f.darts, emb.across(f)):
        if {x, y} == {a, b}:
            return g
    raise ValueError(f"{a!r}{b!r} is not an edge of face {f.index}")


class _Collector:
    """Accumulates amounts per (rule, sender, receiver) in first-seen order."""

    def __init__(self) -> None:
        self.amounts: dict[tuple[str, str, str], Fraction] = {}

    def add(self, rule: str, sender: str, receiver: str, amount: Fraction) -> None:
        if amount <= 0:
            return
        key = (rule, sender, receiver)
        self.amounts[key] = self.amounts.get(key, Fraction(0)) + amount

    def transfers(self) -> list[Transfer]:
        order = {r: i for i, r in enumerate(RULES)}
        keys = sorted(self.amounts, key=lambda k: order[k[0]])  # stable within a rule
        return [Transfer(r, s, t, self.amounts[(r, s, t)]) for r, s, t in keys]


def _rule_r1(emb: PlanarEmbedding, out: _Collector) -> None:
    for f in emb.faces:
        if not f.is_major:
            continue
        slots = [g for g in emb.across(f) if g.is_triangle]
        if not slots:
            continue
        share = Fraction(f.size - 4, len(slots))
        for g in slots:
            out.add("R1", flabel(f), flabel(g), share)


def _rule_r2(emb: PlanarEmbedding, out: _Collector, notes: list[str]) -> None:
    for v in emb.vertices:
        if emb.degree(v) != 5:
            continue
        tris = emb.triangles_at(v)
        src = vlabel(v)
        if len(tris) == 1:
            out.add("R2", src, flabel(tris[0]), Fraction(1))
        elif len(tris) == 3:
            for f in tris:
                out.add("R2", src, flabel(f), Fraction(1, 3))
        elif len(tris) == 2:
            bad = [_is_bad(emb, f) for f in tris]
            with_four = [any(emb.degree(w) == 4 for w in f.walk) for f in tris]
            if any(bad):
                for f, b in zip(tris, bad):
                    out.add("R2", src, flabel(f), Fraction(3, 5) if b else Fraction(2, 5))
            elif with_four[0] != with_four[1]:
                for f, has in zip(tris, with_four):
                    out.add("R2", src, flabel(f), Fraction(2, 3) if has else Fraction(1, 3))
            else:
                if all(with_four):
                    notes.append(
                        f"R2 {src}: both triangles {flabel(tris[0])},{flabel(tris[1])} contain a "
                        "4-vertex and neither is bad; default 1/2 each"
                    )
                for f in tris:
                    out.add("R2", src, flabel(f), Fraction(1, 2))


def _rules_r3_to_r9(emb: PlanarEmbedding, out: _Collector) -> list[tuple[Vertex, Face]]:
    """Structural rules at 6+-vertices; returns the (vertex, triangle) pairs pending R5."""
    pending = []
    for f in _triangles(emb):
        tl = flabel(f)
        majors = _majors(emb, f)
        for v in f.walk:
            d = emb.degree(v)
            if d < 6:
                continue
            a, b = _others(emb, f, v)
            da, db = sorted((emb.degree(a), emb.degree(b)))
            src = vlabel(v)
            # R4: v with both others 5+
            if da >= 5:
                amount = Fraction(1, 3)
                if da == db == 5:
                    four_side = any(_edge_face(emb, f, v, x).size == 4 for x in (a, b))
                    if four_side and _edge_face(emb, f, a, b).is_triangle:
                        amount = Fraction(7, 15)
                out.add("R4", src, tl, amount)
            if d == 6:
                if (da, db) == (4, 4) and majors in R3_AMOUNTS:
                    out.add("R3", src, tl, R3_AMOUNTS[majors])
                elif (da, db) == (4, 5):
                    pending.append((v, f))
                elif da == 4 and db >= 7:
                    out.add("R6", src, tl, Fraction(1, 3))
                elif (da, db) == (4, 6):
                    out.add("R7", src, tl, R7_AMOUNTS[majors])
            else:
                if (da, db) == (4, 4):
                    out.add("R8", src, tl, Fraction(4, 5))
                elif da == 4 and db >= 5:
                    out.add("R9", src, tl, Fraction(2, 3))
    return pending


def apply_rules(emb: PlanarEmbedding) -> tuple[ChargeState, ChargeLedger]:
    """Rules R1-R9 on ``emb``; returns the post-rule state and the ledger."""
    out = _Collector()
    notes: list[str] = []
    _rule_r1(emb, out)
    _rule_r2(emb, out, notes)
    pending = _rules_r3_to_r9(emb, out)
    ledger = ChargeLedger(out.transfers(), notes)
    r5 = _Collector()
    for v, f in pending:
        tl = flabel(f)
        x = ledger.received(tl, ("R1",))
        y = ledger.received(tl, ("R2",))
        amount = 1 - x - y
        if amount < 0:
            notes.append(f"R5 {vlabel(v)} -> {tl}: 1 - x - y = {fmt_fraction(amount)} < 0, clamped to 0")
        r5.add("R5", vlabel(v), tl, amount)
    ledger.transfers.extend(r5.transfers())
    ledger.transfers.sort(key=lambda t: RULES.index(t.rule))
    return initial_charges(emb).apply(ledger.transfers), ledger


def apply_rstar(emb: PlanarEmbedding, post_r: ChargeState) -> tuple[ChargeState, list[Transfer]]:
    """Split each positive triangle's excess equally among its negative 5-5-4 neighbours.

    Donations are computed from ``post_r`` alone and applied together.
    """
    out = _Collector()
    for f in _triangles(emb):
        excess = post_r[flabel(f)]
        if excess <= 0:
            continue
        seen: dict[int, Face] = {}
        for g in emb.across(f):
            if (
                g.is_triangle
                and g.index != f.index
                and sorted(emb.degree(w) for w in g.walk) == [4, 5, 5]
                and post_r[flabel(g)] < 0
            ):
                seen.setdefault(g.index, g)
        if seen:
            share = excess / len(seen)
            for g in seen.values():
                out.add("R*", flabel(f), flabel(g), share)
    transfers = out.transfers()
    return post_r.apply(transfers), transfers


@dataclass
class DischargeReport:
    state: ChargeState
    ledger: ChargeLedger
    negatives: list[str]


def final_report(emb: PlanarEmbedding) -> DischargeReport:
    post_r, ledger = apply_rules(emb)
    final, star = apply_rstar(emb, post_r)
    ledger.transfers.extend(star)
    return DischargeReport(final, ledger, final.negatives())


def verify_conservation(
    ledger: ChargeLedger, emb: PlanarEmbedding, state: Optional[ChargeState] = None
) -> bool:
    """Replay ``ledger`` from the initial charges and compare exactly.

    The replay must keep every amount positive, land on total ``-8`` and
    equal ``state`` (by default the freshly computed final state).
    """
    start = initial_charges(emb)
    if start.total() != TOTAL:
        return False
    for t in ledger.transfers:
        if t.amount <= 0 or t.sender not in start.charge or t.receiver not in start.charge:
            return False
    replay = start.apply(ledger.transfers)
    if replay.total() != TOTAL:
        return False
    reference = state if state is not None else final_report(emb).state
    return replay == reference


def rule_histogram(ledger: ChargeLedger) -> Counter:
    return Counter(t.rule for t in ledger.transfers)
