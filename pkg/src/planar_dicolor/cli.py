"""Command-line entry point: ``planar-dicolor <subcommand> ...``.

Every run prints a report: ``#``-prefixed metadata lines (command, input
digest, outcome, a JSON summary) followed by deterministic payload lines.
Exit codes: 0 success/found, 1 definitive negative, 2 input error,
3 budget exhausted, 4 generation failure, 5 cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import shlex
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import configs, discharge, gen, pdg, solver
from .digraph import digirth, uniform_lists, validate_coloring
from .errors import CapExceeded, DicolorError, EmbeddingError, FormatError, GenerationError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_GENERATION = 4
EXIT_CAP = 5

ENV_BRUTE_CAP = "DICOLOR_BRUTE_CAP"
ENV_ACYCLIC_CAP = "DICOLOR_ACYCLIC_CAP"

FLAG_LINE = "flag catalog incomplete or theorem-relevant instance"


@dataclass
class RunReport:
    command: str
    inputs: list[tuple[str, str]] = field(default_factory=list)
    outcome: str = ""
    summary: dict = field(default_factory=dict)
    payload: list[str] = field(default_factory=list)

    def to_text(self) -> str:
        lines = [f"# command {self.command}"]
        lines += [f"# input {path} sha256:{digest}" for path, digest in self.inputs]
        lines.append(f"# outcome {self.outcome}")
        lines.append(f"# summary {json.dumps(self.summary, sort_keys=True)}")
        return "".join(line + "\n" for line in lines + self.payload)

    @classmethod
    def from_text(cls, text: str) -> "RunReport":
        report = cls(command="")
        for line in text.splitlines():
            if not line.startswith("# "):
                report.payload.append(line)
                continue
            key, _, rest = line[2:].partition(" ")
            if key == "command":
                report.command = rest
            elif key == "input":
                path, _, digest = rest.rpartition(" sha256:")
                report.inputs.append((path, digest))
            elif key == "outcome":
                report.outcome = rest
            elif key == "summary":
                report.summary = json.loads(rest)
        return report


def file_digest(path: str) -> str:
    try:
        return hashlib.sha256(Path(path).read_bytes()).hexdigest()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise FormatError(f"{name} must be an integer, got {raw!r}") from exc


def _digraph_arg(path: str):
    emb, D = pdg.read_pdg(path)
    if D is None:
        raise FormatError(f"{path}: no arcs given; this command needs an orientation")
    return D


# ---------------------------------------------------------------------------
# subcommands; each fills ``report`` and returns an exit code


def cmd_digirth(args, report: RunReport) -> int:
    D = _digraph_arg(args.file)
    g = digirth(D)
    report.outcome = "infinity" if g == math.inf else str(g)
    report.payload.append(report.outcome)
    return EXIT_OK


def cmd_solve(args, report: RunReport) -> int:
    D = _digraph_arg(args.file)
    if args.lists:
        report.inputs.append((args.lists, file_digest(args.lists)))
        L = pdg.parse_lists(Path(args.lists).read_text(), D)
    else:
        L = uniform_lists(D, (1, 2))
    start = time.perf_counter()
    if args.brute:
        out = solver.brute_force(D, L, cap=_env_int(ENV_BRUTE_CAP, solver.BRUTE_FORCE_CAP))
    elif args.reduce:
        out = solver.reduce_and_color(D, L, budget=args.budget)
    else:
        out = solver.solve(D, L, budget=args.budget, seed=args.seed)
    elapsed = time.perf_counter() - start
    report.outcome = out.status.value
    report.summary = {**out.summary(), "elapsed": round(elapsed, 6)}
    if out.colored:
        check = validate_coloring(D, L, out.witness)
        if not check.ok:
            raise AssertionError(f"solver returned an invalid witness: {check.describe()}")
        report.payload += pdg.format_coloring(out.witness)
        return EXIT_OK
    if out.status is solver.Status.UNSATISFIABLE:
        return EXIT_NEGATIVE
    return EXIT_BUDGET


def cmd_discharge(args, report: RunReport) -> int:
    emb, _ = pdg.read_pdg(args.file)
    result = discharge.final_report(emb)
    conserved = discharge.verify_conservation(result.ledger, emb, result.state)
    report.outcome = "negative" if result.negatives else "non-negative"
    report.summary = {
        "transfers": len(result.ledger),
        "negatives": len(result.negatives),
        "conservation": conserved,
        "total": discharge.fmt_fraction(result.state.total()),
    }
    report.payload += result.state.to_lines()
    report.payload.append(" ".join(["negative"] + result.negatives))
    report.payload.append(f"conservation {'true' if conserved else 'false'}")
    report.payload += [f"note {n}" for n in result.ledger.notes]
    catalog_path = args.catalog or str(configs.shipped_catalog_path())
    if args.catalog:
        report.inputs.append((args.catalog, file_digest(args.catalog)))
    catalog = configs.load_catalog(catalog_path)
    found = [c.name for c in catalog if configs.first_match(emb, c) is not None]
    report.payload.append(" ".join(["catalog-matches"] + found))
    if emb.min_degree() >= 4 and result.negatives and not found:
        report.payload.append(FLAG_LINE)
    if args.ledger:
        Path(args.ledger).write_text(result.ledger.to_text())
        report.payload.append(f"ledger {args.ledger}")
    return EXIT_OK if conserved else EXIT_NEGATIVE


def cmd_match(args, report: RunReport) -> int:
    emb, _ = pdg.read_pdg(args.graph)
    if args.catalog:
        report.inputs.append((args.catalog, file_digest(args.catalog)))
        catalog = configs.load_catalog(args.catalog)
    else:
        catalog = configs.shipped_catalog()
    total = 0
    for cfg in catalog:
        matches = configs.contains(emb, cfg)
        total += len(matches)
        witness = matches[0].describe() if matches else "-"
        report.payload.append(f"match {cfg.name} {len(matches)} {witness}")
    report.outcome = "found" if total else "none"
    report.summary = {"configurations": len(catalog), "matches": total}
    return EXIT_OK if total else EXIT_NEGATIVE


def _parse_digirth(raw: Optional[str]) -> Optional[float]:
    if raw is None or raw == "none":
        return None
    if raw in ("inf", "infinity"):
        return math.inf
    try:
        return int(raw)
    except ValueError as exc:
        raise FormatError(f"--digirth must be 3, 4, 5, infinity or none, got {raw!r}") from exc


def cmd_gen(args, report: RunReport) -> int:
    fields: dict = {}
    if args.spec_file:
        report.inputs.append((args.spec_file, file_digest(args.spec_file)))
        try:
            fields = json.loads(Path(args.spec_file).read_text())
        except json.JSONDecodeError as exc:
            raise FormatError(f"{args.spec_file}: {exc}") from exc
        if "digirth_min" in fields:
            fields["digirth_min"] = _parse_digirth(str(fields["digirth_min"]))
    for key in ("n", "min_degree", "seed", "max_repair_rounds", "edge_deletion"):
        value = getattr(args, key)
        if value is not None:
            fields[key] = value
    if args.digirth is not None:
        fields["digirth_min"] = _parse_digirth(args.digirth)
    if "n" not in fields:
        raise FormatError("gen needs --n or a spec file with 'n'")
    try:
        spec = gen.GenSpec(**fields)
    except TypeError as exc:
        raise FormatError(f"bad generator spec: {exc}") from exc
    if spec.digirth_min is None:
        obj = gen.random_plane_graph(spec)
    else:
        obj = gen.random_planar_digraph(spec)
    text = pdg.format_pdg(obj)
    Path(args.out).write_text(text)
    digest = hashlib.sha256(text.encode()).hexdigest()
    report.outcome = "generated"
    report.summary = {"n": spec.n, "seed": spec.seed}
    report.payload += [
        f"seed {spec.seed}",
        f"spec {json.dumps({k: (str(v) if v == math.inf else v) for k, v in vars(spec).items()}, sort_keys=True)}",
        f"out {args.out} sha256:{digest}",
    ]
    return EXIT_OK


def cmd_acyclic(args, report: RunReport) -> int:
    D = _digraph_arg(args.file)
    cap = args.cap if args.cap is not None else _env_int(ENV_ACYCLIC_CAP, solver.ACYCLIC_CAP)
    S = solver.max_acyclic_set(D, cap=cap)
    n = len(D)
    bound = solver.acyclic_bound(n)
    holds = len(S) >= bound
    report.outcome = "bound-holds" if holds else "bound-fails"
    report.summary = {"n": n, "size": len(S), "bound": bound}
    report.payload += [
        f"size {len(S)}",
        f"ratio {discharge.fmt_fraction(Fraction(len(S), n))}",
        f"bound {bound} {'holds' if holds else 'fails'}",
        " ".join(["set"] + [str(v) for v in sorted(S)]),
    ]
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planar-dicolor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("digirth", help="shortest directed cycle length")
    s.add_argument("file")
    s.set_defaults(func=cmd_digirth, inputs=["file"])

    s = sub.add_parser("solve", help="list-dicolor a digraph")
    s.add_argument("file")
    s.add_argument("--lists", help="file of 'l <vertex> <colors...>' lines (default {1,2})")
    s.add_argument("--budget", type=int, default=solver.DEFAULT_BUDGET)
    s.add_argument("--reduce", action="store_true", help="use the reduction colorer")
    s.add_argument("--brute", action="store_true", help="use the exhaustive oracle")
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=cmd_solve, inputs=["file"])

    s = sub.add_parser("discharge", help="run the discharging rules")
    s.add_argument("file")
    s.add_argument("--ledger", help="write the transfer ledger here")
    s.add_argument("--catalog", help="configuration catalog (default: shipped)")
    s.set_defaults(func=cmd_discharge, inputs=["file"])

    s = sub.add_parser("match", help="find catalog configurations")
    s.add_argument("graph")
    s.add_argument("catalog", nargs="?", default=None)
    s.set_defaults(func=cmd_match, inputs=["graph"])

    s = sub.add_parser("gen", help="generate a plane graph or planar digraph")
    s.add_argument("--n", type=int)
    s.add_argument("--min-degree", dest="min_degree", type=int)
    s.add_argument("--digirth", help="3, 4, 5, infinity or none (undirected output)")
    s.add_argument("--seed", type=int)
    s.add_argument("--max-repair-rounds", dest="max_repair_rounds", type=int)
    s.add_argument("--edge-deletion", dest="edge_deletion", type=float)
    s.add_argument("--spec-file", dest="spec_file", help="JSON object with GenSpec fields")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gen, inputs=[])

    s = sub.add_parser("acyclic", help="maximum acyclic vertex set")
    s.add_argument("file")
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_acyclic, inputs=["file"])
    return p


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    report = RunReport(command=" ".join(shlex.quote(a) for a in ["planar-dicolor"] + argv))
    try:
        for attr in args.inputs:
            path = getattr(args, attr)
            report.inputs.append((path, file_digest(path)))
        code = args.func(args, report)
    except (FormatError, EmbeddingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GenerationError as exc:
        print(f"generation failed: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except DicolorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
