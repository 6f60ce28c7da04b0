"""Batch tabulation over census files.

A census file is UTF-8 text with one diagram per line, an optional
leading ``name<TAB>`` field, ``#`` comment lines, and blank lines. Each
input line becomes exactly one output record, in input order, whatever
the concurrency width. Lines that fail to parse become records with
``omega_status == "skipped"`` and a diagnostic instead of aborting the
run.

Records carry the canonical code (so re-encodings of the same diagram
compare equal), the seed-count result with its status, the overpass
count, and the diagrammatic composite data. An optional line-delimited
cache keyed by the SHA-256 of the canonical code makes reruns cheap:
lookups return the newest record for a key and corrupt lines are
skipped with a warning.
"""

from __future__ import annotations

import hashlib
import json
import time
import warnings
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from . import __version__
from .coloring import (
    SearchStatus,
    certificate_to_json,
    wirtinger_number,
    wirtinger_oracle,
)
from .diagram import Diagram, canonical_form, parse_gauss, serialize
from .errors import DiagramError, InternalCheckError
from .passes import overpass_number
from .sumdecomp import decompose, is_composite, reduce_kinks

__all__ = [
    "ENGINE_VERSION",
    "CSV_COLUMNS",
    "BatchRecord",
    "RunConfig",
    "iter_census",
    "run_batch",
    "cache_lookup",
    "cache_store",
    "record_to_csv_row",
    "record_to_json",
    "record_from_json",
]

ENGINE_VERSION = f"bridgekit/{__version__}"

# Exact column set and order of the CSV encoding.
CSV_COLUMNS = (
    "name",
    "code",
    "n",
    "omega",
    "omega_status",
    "overpass",
    "composite",
    "summands",
    "elapsed_ms",
)

_ORACLE_BOUND = 10


@dataclass(frozen=True)
class BatchRecord:
    """One tabulation result; ``omega`` is an int when exact, a ``>=k``
    marker when the search hit its limits, and None when skipped."""

    name: str
    canonical_code: str
    n: int | None
    omega: int | str | None
    omega_status: str
    certificate_ref: str | None
    overpass: int | None
    composite: bool | None
    summand_count: int | None
    elapsed_ms: int
    engine_version: str
    diagnostic: str | None = None


@dataclass(frozen=True)
class RunConfig:
    max_k: int | None = None
    time_limit_ms: int = 30_000
    jobs: int = 1
    oracle_check: bool = False
    output_format: str = "csv"
    cache_path: str | Path | None = None
    certificate_dir: str | Path | None = None
    reduce: bool = False

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.time_limit_ms < 1:
            raise ValueError("time_limit_ms must be >= 1")
        if self.output_format not in ("csv", "jsonl"):
            raise ValueError(f"unknown output format {self.output_format!r}")


# ── census input ────────────────────────────────────────────────────────


def iter_census(lines: Iterable[str]) -> Iterator[tuple[int, str, str]]:
    """Yield (line_number, name, code) for every data line."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "\t" in line:
            name, _, code = line.partition("\t")
            yield lineno, name.strip(), code.strip()
        else:
            yield lineno, "", stripped


# ── record encodings ────────────────────────────────────────────────────


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def record_to_csv_row(record: BatchRecord) -> list[str]:
    return [
        _cell(record.name),
        _cell(record.canonical_code),
        _cell(record.n),
        _cell(record.omega),
        _cell(record.omega_status),
        _cell(record.overpass),
        _cell(record.composite),
        _cell(record.summand_count),
        _cell(record.elapsed_ms),
    ]


def record_to_json(record: BatchRecord) -> str:
    payload = {
        "name": record.name,
        "canonical_code": record.canonical_code,
        "n": record.n,
        "omega": record.omega,
        "omega_status": record.omega_status,
        "certificate_ref": record.certificate_ref,
        "overpass": record.overpass,
        "composite": record.composite,
        "summand_count": record.summand_count,
        "elapsed_ms": record.elapsed_ms,
        "engine_version": record.engine_version,
    }
    if record.diagnostic is not None:
        payload["diagnostic"] = record.diagnostic
    return json.dumps(payload, separators=(",", ":"))


def record_from_json(text: str) -> BatchRecord:
    data = json.loads(text)
    return BatchRecord(
        name=data["name"],
        canonical_code=data["canonical_code"],
        n=data["n"],
        omega=data["omega"],
        omega_status=data["omega_status"],
        certificate_ref=data.get("certificate_ref"),
        overpass=data["overpass"],
        composite=data["composite"],
        summand_count=data["summand_count"],
        elapsed_ms=data["elapsed_ms"],
        engine_version=data["engine_version"],
        diagnostic=data.get("diagnostic"),
    )


# ── cache ───────────────────────────────────────────────────────────────


def _cache_key(canonical_code: str) -> str:
    return hashlib.sha256(canonical_code.encode("utf-8")).hexdigest()


def _load_cache(path: str | Path) -> dict[str, BatchRecord]:
    table: dict[str, BatchRecord] = {}
    p = Path(path)
    if not p.exists():
        return table
    with open(p, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                data = json.loads(line)
                table[data["key"]] = record_from_json(json.dumps(data["record"]))
            except (ValueError, KeyError, TypeError):
                warnings.warn(f"{p}:{lineno}: corrupt cache line skipped")
    return table  # later lines overwrite earlier ones: newest wins


def cache_lookup(cache_path: str | Path, canonical_code_hash: str) -> BatchRecord | None:
    """Newest cached record for the given key, or None."""
    return _load_cache(cache_path).get(canonical_code_hash)


def cache_store(cache_path: str | Path, canonical_code_hash: str, record: BatchRecord) -> None:
    """Append one record; a single line, so the write is atomic enough
    for the one-writer batch pipeline."""
    line = json.dumps(
        {"key": canonical_code_hash, "record": json.loads(record_to_json(record))},
        separators=(",", ":"),
    )
    with open(cache_path, "a", encoding="utf-8") as fh:
        fh.write(line + "\n")


# ── per-diagram computation ─────────────────────────────────────────────


def _prepare(code: str, reduce: bool) -> Diagram:
    d = parse_gauss(code)
    if reduce:
        d = reduce_kinks(d)
    return d


def _compute(job: tuple) -> dict:
    """Worker body; takes and returns plain picklable values."""
    name, code, reduce, max_k, time_limit_ms, oracle_check, want_cert = job
    start = time.perf_counter()
    # compute on the canonical form so every field, and in particular the
    # emitted certificate, refers to the canonical_code the record carries
    d = canonical_form(_prepare(code, reduce))
    out = wirtinger_number(d, max_k=max_k, time_limit=time_limit_ms / 1000.0)
    result: dict = {
        "name": name,
        "canonical_code": serialize(d),
        "n": d.n,
        "overpass": overpass_number(d),
        "composite": is_composite(d) is not None,
        "summand_count": len(decompose(d)),
    }
    if out.status is SearchStatus.EXACT:
        result["omega"] = out.k
        result["omega_status"] = "exact"
        if want_cert and out.certificate is not None:
            result["certificate_json"] = certificate_to_json(out.certificate)
    else:
        result["omega"] = f">={out.k}"
        result["omega_status"] = "lower_bound"
    if oracle_check and d.n <= _ORACLE_BOUND:
        expected = wirtinger_oracle(d, bound=_ORACLE_BOUND)
        if out.status is SearchStatus.EXACT:
            bad = out.k != expected
        else:
            bad = out.k > expected
        if bad:
            result["oracle_mismatch"] = (
                f"{name or code}: engine reported {result['omega']}, oracle says {expected}"
            )
    result["elapsed_ms"] = int(round((time.perf_counter() - start) * 1000))
    return result


def _skipped(name: str, lineno: int, error: Exception) -> BatchRecord:
    return BatchRecord(
        name=name,
        canonical_code="",
        n=None,
        omega=None,
        omega_status="skipped",
        certificate_ref=None,
        overpass=None,
        composite=None,
        summand_count=None,
        elapsed_ms=0,
        engine_version=ENGINE_VERSION,
        diagnostic=f"line {lineno}: {error}",
    )


def _finish(result: dict, cfg: RunConfig, cache: dict | None) -> BatchRecord:
    if "oracle_mismatch" in result:
        raise InternalCheckError(result["oracle_mismatch"])
    certificate_ref = None
    cert_json = result.pop("certificate_json", None)
    key = _cache_key(result["canonical_code"])
    if cert_json is not None and cfg.certificate_dir is not None:
        cert_dir = Path(cfg.certificate_dir)
        cert_dir.mkdir(parents=True, exist_ok=True)
        path = cert_dir / f"{key[:16]}.json"
        path.write_text(cert_json + "\n", encoding="utf-8")
        certificate_ref = str(path)
    record = BatchRecord(
        name=result["name"],
        canonical_code=result["canonical_code"],
        n=result["n"],
        omega=result["omega"],
        omega_status=result["omega_status"],
        certificate_ref=certificate_ref,
        overpass=result["overpass"],
        composite=result["composite"],
        summand_count=result["summand_count"],
        elapsed_ms=result["elapsed_ms"],
        engine_version=ENGINE_VERSION,
    )
    if cfg.cache_path is not None:
        cache_store(cfg.cache_path, key, record)
        if cache is not None:
            cache[key] = record
    return record


def run_batch(
    source: str | Path | Iterable[str], cfg: RunConfig
) -> Iterator[BatchRecord]:
    """Tabulate every diagram in ``source``, yielding records in input
    order. ``source`` is a census file path or an iterable of lines."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            yield from run_batch(list(fh), cfg)
            return

    cache = _load_cache(cfg.cache_path) if cfg.cache_path is not None else None
    want_cert = cfg.certificate_dir is not None

    # plan: (record, None) for rows settled up front, (None, job) otherwise
    plan: list[tuple[BatchRecord | None, tuple | None]] = []
    for lineno, name, code in iter_census(source):
        try:
            d = _prepare(code, cfg.reduce)
        except DiagramError as err:
            plan.append((_skipped(name, lineno, err), None))
            continue
        if cache is not None:
            hit = cache.get(_cache_key(serialize(canonical_form(d))))
            if hit is not None:
                plan.append((replace(hit, name=name), None))
                continue
        job = (name, code, cfg.reduce, cfg.max_k, cfg.time_limit_ms,
               cfg.oracle_check, want_cert)
        plan.append((None, job))

    jobs = [job for _, job in plan if job is not None]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = iter(list(pool.map(_compute, jobs, chunksize=1)))
    else:
        results = map(_compute, jobs)

    for record, job in plan:
        if record is not None:
            yield record
        else:
            yield _finish(next(results), cfg, cache)
