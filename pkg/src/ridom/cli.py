"""Command line front end: deterministic TSV reports over graph streams.

Input graphs arrive as graph6 lines (optionally ``>>graph6<<``-headed), as a
single edge-list file (``n m`` header then ``u v`` lines), or from the
built-in labeled enumerator.  Every subcommand writes one record line per
graph followed by a JSON summary line, and identical inputs produce
byte-identical reports regardless of worker count.  Exit codes: 0 success,
1 bound violation or oracle mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, TextIO

from .families import Family, classify_graph, is_trivial_components, predict_gamma_ri2
from .graphs import (
    CANONICAL_MAX_VERTICES,
    Graph,
    Graph6ParseError,
    UnsupportedSizeError,
    canonical_form,
    encode_graph6,
    enumerate_labeled_graphs,
    looks_like_edge_list,
    parse_edge_list,
    parse_graph6,
)
from .nordhaus import GammaCache, NGRecord, ng_record, report_from_records
from .reduction import bipartition, build_reduction, serialize_instance, verify_reduction
from .solver import (
    BudgetExceededError,
    SolverBudget,
    gamma_bnb,
    gamma_brute,
    prism_check,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class InputError(Exception):
    """Malformed input, tagged with the 1-based line it came from."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"input line {line}: {reason}")
        self.line = line
        self.reason = reason


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    k: int = 2
    max_labelings: int = SolverBudget().max_labelings
    max_subsets: int = SolverBudget().max_subsets
    workers: int = 1
    input_path: Optional[str] = None
    enumerate_n: Optional[int] = None
    out_path: Optional[str] = None
    dedup: bool = False
    seed: int = 0
    min_n: int = 0
    oracle_check: int = 0
    roundtrip: bool = False

    @property
    def budget(self) -> SolverBudget:
        return SolverBudget(self.max_labelings, self.max_subsets)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ridom",
        description="exact k-rainbow independent domination toolkit for small graphs",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(sp: argparse.ArgumentParser, with_k: bool) -> None:
        if with_k:
            sp.add_argument("--k", type=int, default=2, help="number of colors (default 2)")
        sp.add_argument("--input", dest="input_path", metavar="PATH",
                        help="graph6 lines or an edge-list file (default: stdin)")
        sp.add_argument("--enumerate", dest="enumerate_n", type=int, metavar="N",
                        help="use the built-in labeled enumeration on N vertices")
        sp.add_argument("--out", dest="out_path", metavar="PATH",
                        help="report destination (default: stdout)")
        sp.add_argument("--workers", type=int, default=1, help="worker processes")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
        sp.add_argument("--budget-labelings", dest="max_labelings", type=int,
                        default=SolverBudget().max_labelings,
                        help="cap on (k+1)^n for enumerative solvers")
        sp.add_argument("--budget-subsets", dest="max_subsets", type=int,
                        default=SolverBudget().max_subsets,
                        help="cap on 2^n for subset enumeration")

    common(sub.add_parser("solve", help="labeling value and witness per graph"), True)
    common(sub.add_parser("classify", help="structural family classification"), False)
    ng = sub.add_parser("ng", help="complement-sum bound verification")
    common(ng, False)
    ng.add_argument("--min-n", dest="min_n", type=int, default=0,
                    help="skip graphs below this order")
    ng.add_argument("--dedup", action="store_true",
                    help="report extremal graphs up to isomorphism")
    ng.add_argument("--oracle-check", dest="oracle_check", type=int, default=0,
                    help="re-solve this many sampled records with the brute solver")
    common(sub.add_parser("reduce", help="build and verify leaf-attachment reductions"), True)
    common(sub.add_parser("prism", help="cross-check against layered-product domination"), True)
    codec = sub.add_parser("codec", help="re-encode graphs as graph6")
    common(codec, False)
    codec.add_argument("--roundtrip", action="store_true",
                       help="require output lines to equal the graph6 input lines")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(**{
        field: getattr(args, field)
        for field in RunConfig.__dataclass_fields__
        if hasattr(args, field)
    })


def _read_text(cfg: RunConfig) -> tuple[str, str]:
    if cfg.input_path is not None:
        with open(cfg.input_path, "r", encoding="ascii") as fh:
            return fh.read(), cfg.input_path
    return sys.stdin.read(), "<stdin>"


def _iter_inputs(cfg: RunConfig) -> Iterator[tuple[int, Graph]]:
    """Yield (line number, graph) pairs from the configured source."""
    if cfg.enumerate_n is not None and cfg.input_path is not None:
        raise InputError(0, "--input and --enumerate are mutually exclusive")
    if cfg.enumerate_n is not None:
        for i, g in enumerate(enumerate_labeled_graphs(cfg.enumerate_n)):
            yield i + 1, g
        return
    text, _ = _read_text(cfg)
    lines = text.splitlines()
    first = next((ln for ln in lines if ln.strip() and not ln.strip().startswith(">>graph6<<")), "")
    if looks_like_edge_list(first):
        try:
            yield 1, parse_edge_list(text)
        except ValueError as err:
            raise InputError(1, str(err)) from err
        return
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped == ">>graph6<<":
            continue
        try:
            yield lineno, parse_graph6(stripped)
        except (Graph6ParseError, UnsupportedSizeError, ValueError) as err:
            raise InputError(lineno, str(err)) from err


class _Report:
    """Accumulates record lines plus a JSON summary and writes them at once."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.lines: list[str] = []

    def add(self, line: str) -> None:
        self.lines.append(line)

    def write(self, summary: dict) -> None:
        body = "".join(line + "\n" for line in self.lines)
        body += json.dumps(summary, sort_keys=True) + "\n"
        if self.cfg.out_path is None:
            sys.stdout.write(body)
        else:
            with open(self.cfg.out_path, "w", encoding="ascii") as fh:
                fh.write(body)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_solve(cfg: RunConfig) -> int:
    if cfg.k < 1:
        raise InputError(0, "--k must be at least 1")
    report = _Report(cfg)
    count = 0
    for _, g in _iter_inputs(cfg):
        res = gamma_bnb(g, cfg.k)
        report.add("\t".join((
            encode_graph6(g), str(g.n), str(cfg.k), str(res.value), res.witness.to_text(),
        )))
        count += 1
    report.write({"command": "solve", "k": cfg.k, "records": count})
    return EXIT_OK


def _cmd_classify(cfg: RunConfig) -> int:
    report = _Report(cfg)
    count = matches = trivial_count = 0
    for _, g in _iter_inputs(cfg):
        trivial = is_trivial_components(g)
        family = Family.NONE
        is_match = False
        if g.n >= 3:
            gc = classify_graph(g)
            is_match = gc.matches_n_minus_1
            if gc.special is not None:
                family = gc.special[1].family
        predicted = predict_gamma_ri2(g)
        report.add("\t".join((
            encode_graph6(g), str(g.n), family.value,
            "true" if trivial else "false",
            "true" if is_match else "false",
            "-" if predicted is None else str(predicted),
        )))
        count += 1
        matches += is_match
        trivial_count += trivial
    report.write({
        "command": "classify", "records": count,
        "matches_n_minus_1": matches, "trivially_small": trivial_count,
    })
    return EXIT_OK


def _ng_chunk(lines: Sequence[str]) -> list[NGRecord]:
    cache: GammaCache = {}
    return [ng_record(parse_graph6(text), cache) for text in lines]


def _ng_records(cfg: RunConfig) -> list[NGRecord]:
    inputs = [(lineno, g) for lineno, g in _iter_inputs(cfg) if g.n >= cfg.min_n]
    if cfg.workers <= 1:
        cache: GammaCache = {}
        return [ng_record(g, cache) for _, g in inputs]
    encoded = [encode_graph6(g) for _, g in inputs]
    step = max(1, -(-len(encoded) // cfg.workers))
    chunks = [encoded[i:i + step] for i in range(0, len(encoded), step)]
    out: list[NGRecord] = []
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        for recs in pool.map(_ng_chunk, chunks):
            out.extend(recs)
    return out


def _cmd_ng(cfg: RunConfig) -> int:
    records = _ng_records(cfg)
    ngreport = report_from_records(records)
    report = _Report(cfg)
    for rec in records:
        report.add(rec.to_line())
    summary: dict = {
        "command": "ng",
        "records": len(records),
        "counts": dict(sorted(ngreport.counts.items())),
        "violations": len(ngreport.violations),
        "extremal_count": len(ngreport.extremal),
        "min_n": cfg.min_n,
        "seed": cfg.seed,
    }
    if cfg.dedup:
        seen: set[bytes] = set()
        kept = []
        for rec in records:
            if rec.status != "at_upper":
                continue
            g = parse_graph6(rec.graph6)
            if g.n > CANONICAL_MAX_VERTICES:
                raise InputError(0, f"--dedup needs n <= {CANONICAL_MAX_VERTICES}, got {g.n}")
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                kept.append(rec.graph6)
        summary["extremal"] = kept
    mismatches = 0
    if cfg.oracle_check > 0 and records:
        rng = random.Random(cfg.seed)
        picks = rng.sample(range(len(records)), min(cfg.oracle_check, len(records)))
        for idx in sorted(picks):
            rec = records[idx]
            brute = gamma_brute(parse_graph6(rec.graph6), 2, cfg.budget)
            if brute.value != rec.gamma:
                mismatches += 1
        summary["oracle_checked"] = len(picks)
        summary["oracle_mismatches"] = mismatches
    report.write(summary)
    return EXIT_VIOLATION if ngreport.violations or mismatches else EXIT_OK


def _cmd_reduce(cfg: RunConfig) -> int:
    if cfg.k < 2:
        raise InputError(0, "--k must be at least 2 for the reduction")
    report = _Report(cfg)
    count = mismatches = 0
    for lineno, g in _iter_inputs(cfg):
        parts = bipartition(g)
        if parts is None:
            raise InputError(lineno, "graph is not bipartite")
        inst = build_reduction(g, parts, cfg.k)
        check = verify_reduction(inst)
        report.add("\t".join((
            serialize_instance(inst),
            str(check.gamma_dom), str(check.gamma_rik_target),
            str(check.expected), "true" if check.equal else "false",
        )))
        count += 1
        mismatches += not check.equal
    report.write({
        "command": "reduce", "k": cfg.k, "records": count, "mismatches": mismatches,
    })
    return EXIT_VIOLATION if mismatches else EXIT_OK


def _cmd_prism(cfg: RunConfig) -> int:
    if cfg.k < 1:
        raise InputError(0, "--k must be at least 1")
    report = _Report(cfg)
    count = mismatches = 0
    for _, g in _iter_inputs(cfg):
        check = prism_check(g, cfg.k, cfg.budget)
        ok = check.equal and check.lifted_valid
        report.add("\t".join((
            encode_graph6(g), str(g.n), str(cfg.k),
            str(check.gamma.value), str(check.ids.value),
            "true" if check.equal else "false",
            "true" if check.lifted_valid else "false",
        )))
        count += 1
        mismatches += not ok
    report.write({
        "command": "prism", "k": cfg.k, "records": count, "mismatches": mismatches,
    })
    return EXIT_VIOLATION if mismatches else EXIT_OK


def _cmd_codec(cfg: RunConfig) -> int:
    report = _Report(cfg)
    count = mismatches = 0
    if cfg.roundtrip:
        if cfg.enumerate_n is not None:
            raise InputError(0, "--roundtrip needs graph6 input lines")
        text, _ = _read_text(cfg)
        for lineno, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or stripped == ">>graph6<<":
                continue
            try:
                g = parse_graph6(stripped)
            except (Graph6ParseError, UnsupportedSizeError) as err:
                raise InputError(lineno, str(err)) from err
            out = encode_graph6(g)
            bare = stripped.removeprefix(">>graph6<<")
            report.add(out)
            count += 1
            mismatches += out != bare
    else:
        for _, g in _iter_inputs(cfg):
            report.add(encode_graph6(g))
            count += 1
    report.write({
        "command": "codec", "records": count,
        "roundtrip": cfg.roundtrip, "mismatches": mismatches,
    })
    return EXIT_VIOLATION if mismatches else EXIT_OK


_HANDLERS = {
    "solve": _cmd_solve,
    "classify": _cmd_classify,
    "ng": _cmd_ng,
    "reduce": _cmd_reduce,
    "prism": _cmd_prism,
    "codec": _cmd_codec,
}


def run(argv: Sequence[str]) -> int:
    """Parse arguments, dispatch, and map failures onto exit codes."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return code if code == 0 else EXIT_USAGE
    cfg = _config_from_args(args)
    if cfg.workers < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _HANDLERS[cfg.subcommand](cfg)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6ParseError, UnsupportedSizeError, BudgetExceededError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
