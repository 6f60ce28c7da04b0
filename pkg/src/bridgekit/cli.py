"""Command line front end.

Subcommands: parse, wirtinger, passes, consum, decompose, verify, batch.
Exit codes: 0 success, 1 usage error, 2 input error, 3 internal check
failure (an oracle or certificate cross-check caught a disagreement).

Global flags sit before the subcommand, e.g.::

    bridgekit --format jsonl wirtinger O1U2O3U1O2U3
    bridgekit --jobs 4 --cache run.cache batch census.txt

Diagram arguments are Gauss codes; ``-`` reads the code from stdin. The
batch input is a census file path, ``-`` for stdin, or the special names
``bundled:knots`` / ``bundled:fixtures`` for the shipped tables.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .batch import (
    CSV_COLUMNS,
    RunConfig,
    record_to_csv_row,
    record_to_json,
    run_batch,
)
from .coloring import (
    SearchStatus,
    certificate_failure,
    certificate_from_json,
    certificate_to_json,
    wirtinger_number,
    wirtinger_oracle,
)
from .diagram import canonical_form, parse_gauss, serialize
from .errors import BridgekitError, DiagramError
from .passes import (
    consecutive_shared_crossings,
    minimality_incompatibility_report,
    pass_decomposition,
)
from .sumdecomp import connected_sum, decompose, reduce_kinks
from .tables import load_fixtures, load_knot_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_ORACLE_BOUND = 10


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this tool reserves 2 for
    input errors, so usage errors are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    top = _Parser(prog="bridgekit", description=__doc__.split("\n\n")[0])
    top.add_argument("--format", choices=("csv", "jsonl", "text"), default="text",
                     help="output encoding (default text)")
    top.add_argument("--time-limit-ms", type=int, default=30_000, metavar="MS",
                     help="per-diagram search budget (default 30000)")
    top.add_argument("--max-k", type=int, default=None, metavar="K",
                     help="cap the seed-count search level")
    top.add_argument("--jobs", type=int, default=1, metavar="N",
                     help="concurrency width (default 1)")
    top.add_argument("--cache", default=None, metavar="PATH",
                     help="line-delimited result cache (batch)")
    top.add_argument("--oracle-check", action="store_true",
                     help="cross-check small diagrams against the brute-force oracle")
    top.add_argument("--emit-certificate", default=None, metavar="PATH",
                     help="write coloring certificates (file for wirtinger, directory for batch)")
    top.add_argument("--reduce", action="store_true",
                     help="delete single-crossing kinks before computing")

    sub = top.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("parse", parents=[], help="validate a code and print its shape")
    p.add_argument("code", help="Gauss code, or - for stdin")

    p = sub.add_parser("wirtinger", help="compute the diagram's seed count")
    p.add_argument("code", help="Gauss code, or - for stdin")

    p = sub.add_parser("passes", help="overpass decomposition and minimality flags")
    p.add_argument("code", help="Gauss code, or - for stdin")

    p = sub.add_parser("consum", help="splice two codes into a connected sum")
    p.add_argument("code1")
    p.add_argument("code2")
    p.add_argument("--edges", nargs=2, type=int, default=(0, 0), metavar=("E1", "E2"),
                   help="splice positions (default 0 0)")

    p = sub.add_parser("decompose", help="emit summand codes, one per line")
    p.add_argument("code", help="Gauss code, or - for stdin")

    p = sub.add_parser("verify", help="replay a coloring certificate against a code")
    p.add_argument("code", help="Gauss code, or - for stdin")
    p.add_argument("certificate", help="certificate JSON file")

    p = sub.add_parser("batch", help="tabulate a census file")
    p.add_argument("input", help="census path, -, bundled:knots or bundled:fixtures")
    p.add_argument("--figures", default=None, metavar="DIR",
                   help="render summary PNGs into DIR")

    return top


# ── small helpers ───────────────────────────────────────────────────────


def _read_code(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read().strip()
    return arg


def _load(arg: str, reduce: bool):
    d = parse_gauss(_read_code(arg))
    if reduce:
        d = reduce_kinks(d)
    return d


def _emit(fields: dict, fmt: str) -> None:
    """Render one result object as text lines, a CSV row, or JSON."""
    if fmt == "jsonl":
        print(json.dumps(fields, separators=(",", ":")))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(fields.keys())
        writer.writerow("" if v is None else v for v in fields.values())
    else:
        for key, value in fields.items():
            print(f"{key}: {'' if value is None else value}")


# ── subcommand bodies ───────────────────────────────────────────────────


def _cmd_parse(args) -> int:
    d = _load(args.code, args.reduce)
    _emit(
        {
            "n": d.n,
            "strands": d.n_strands,
            "code": serialize(d),
            "canonical": serialize(canonical_form(d)),
        },
        args.format,
    )
    return EXIT_OK


def _cmd_wirtinger(args) -> int:
    d = _load(args.code, args.reduce)
    out = wirtinger_number(
        d,
        max_k=args.max_k,
        time_limit=args.time_limit_ms / 1000.0,
        parallel=args.jobs,
    )
    exact = out.status is SearchStatus.EXACT
    fields = {
        "omega": out.k if exact else f">={out.k}",
        "status": out.status.value,
        "seeds": ",".join(map(str, out.certificate.seeds)) if exact else None,
        "nodes": out.nodes_explored,
        "elapsed_ms": int(round(out.elapsed * 1000)),
    }
    _emit(fields, args.format)
    if args.emit_certificate:
        if exact:
            Path(args.emit_certificate).write_text(
                certificate_to_json(out.certificate) + "\n", encoding="utf-8"
            )
        else:
            print("no certificate: search returned a lower bound", file=sys.stderr)
    if args.oracle_check and d.n <= _ORACLE_BOUND:
        expected = wirtinger_oracle(d, bound=_ORACLE_BOUND)
        if (exact and out.k != expected) or (not exact and out.k > expected):
            print(f"oracle mismatch: engine {fields['omega']}, oracle {expected}",
                  file=sys.stderr)
            return EXIT_INTERNAL
    return EXIT_OK


def _cmd_passes(args) -> int:
    d = _load(args.code, args.reduce)
    dec = pass_decomposition(d)
    shared = consecutive_shared_crossings(d)
    report = minimality_incompatibility_report(d)
    _emit(
        {
            "overpass": dec.overpass_count,
            "underpass": dec.underpass_count,
            "runs": "; ".join(
                f"{run.kind.value}[{','.join(map(str, run.crossing_ids))}]"
                for run in dec.runs
            ),
            "shared": "; ".join(f"{i}:{cid}" for i, cid in shared),
            "overpass_minimal_possible": report.overpass_minimal_necessary_condition,
            "crossing_minimal_possible": report.crossing_minimal_necessary_condition,
        },
        args.format,
    )
    return EXIT_OK


def _cmd_consum(args) -> int:
    d1 = _load(args.code1, args.reduce)
    d2 = _load(args.code2, args.reduce)
    e1, e2 = args.edges
    print(serialize(connected_sum(d1, d2, e1, e2)))
    return EXIT_OK


def _cmd_decompose(args) -> int:
    d = _load(args.code, args.reduce)
    for part in decompose(d):
        print(serialize(part))
    return EXIT_OK


def _cmd_verify(args) -> int:
    d = _load(args.code, args.reduce)
    try:
        text = Path(args.certificate).read_text(encoding="utf-8")
        certificate = certificate_from_json(text)
    except (OSError, ValueError, KeyError) as err:
        print(f"error: cannot read certificate: {err}", file=sys.stderr)
        return EXIT_INPUT
    reason = certificate_failure(d, certificate)
    if reason is None:
        print(f"certificate: valid (k={certificate.k})")
        return EXIT_OK
    print(f"certificate: invalid: {reason}")
    return EXIT_INPUT


def _batch_lines(arg: str) -> list[str]:
    if arg == "-":
        return sys.stdin.readlines()
    if arg == "bundled:knots":
        return [f"{e.name}\t{e.code}" for e in load_knot_table()]
    if arg == "bundled:fixtures":
        return [f"{e.name}\t{e.code}" for e in load_fixtures()]
    with open(arg, encoding="utf-8") as fh:
        return fh.readlines()


def _cmd_batch(args) -> int:
    cfg = RunConfig(
        max_k=args.max_k,
        time_limit_ms=args.time_limit_ms,
        jobs=args.jobs,
        oracle_check=args.oracle_check,
        output_format="jsonl" if args.format == "jsonl" else "csv",
        cache_path=args.cache,
        certificate_dir=args.emit_certificate,
        reduce=args.reduce,
    )
    lines = _batch_lines(args.input)
    records = []
    writer = csv.writer(sys.stdout) if args.format == "csv" else None
    if writer is not None:
        writer.writerow(CSV_COLUMNS)
    for record in run_batch(lines, cfg):
        records.append(record)
        if args.format == "jsonl":
            print(record_to_json(record))
        elif writer is not None:
            writer.writerow(record_to_csv_row(record))
        else:
            marker = "" if record.omega_status == "exact" else f" ({record.omega_status})"
            print(f"{record.name or record.canonical_code or '?':<24} "
                  f"n={record.n if record.n is not None else '-':<4} "
                  f"omega={record.omega if record.omega is not None else '-'}{marker}")
    exact = sum(r.omega_status == "exact" for r in records)
    lower = sum(r.omega_status == "lower_bound" for r in records)
    skipped = sum(r.omega_status == "skipped" for r in records)
    total_ms = sum(r.elapsed_ms for r in records)
    print(
        f"# {len(records)} records: {exact} exact, {lower} lower bounds, "
        f"{skipped} skipped; {total_ms} ms total",
        file=sys.stderr,
    )
    if args.figures:
        from .report import render_figures

        paths = render_figures(records, args.figures)
        print(f"# wrote {len(paths)} figures to {args.figures}", file=sys.stderr)
    return EXIT_OK


_COMMANDS = {
    "parse": _cmd_parse,
    "wirtinger": _cmd_wirtinger,
    "passes": _cmd_passes,
    "consum": _cmd_consum,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "batch": _cmd_batch,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DiagramError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except BridgekitError as err:
        print(f"internal check failed: {err}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
