"""Command-line front end: verification sweeps, reference tables, LP queries.

Subcommands:
    verify            certificates for all configurations over types x k
    table             recompute the bounded-curve table and diff the golden copy
    catalog           recompute the surface catalog and diff the golden copy
    negative-control  verify with a caller-supplied base class; succeeds when
                      at least one explicit failure witness is found
    lp-check          ad-hoc exact linear-implication query from a JSON file

Certificate bundles are JSON Lines: a header object, one object per
certificate, each distinct non-fibre report once (before its first use),
and a closing summary.  Identical runs produce byte-identical bundles.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from multiprocessing import Pool
from pathlib import Path
from typing import IO, Iterator

from . import engine, lp, tables
from .lattice import DivisorClass
from .surfaces import catalog, surface

SCHEMA_VERSION = "1"

_MODES = ("verify", "table", "catalog", "negative-control", "lp-check")


@dataclasses.dataclass
class RunConfig:
    mode: str
    surface_types: tuple[int, ...] = tuple(range(1, 8))
    k_min: int = 2
    k_max: int = 2
    r_max: int | None = None
    base_class: tuple[int, int] | None = None
    out: str | None = None
    fmt: str = "text"
    jobs: int = 1
    system_path: str | None = None
    matrix: bool = False

    def validate(self) -> None:
        if self.mode not in _MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if not self.surface_types:
            raise ConfigError("at least one surface type is required")
        if any(t not in range(1, 8) for t in self.surface_types):
            raise ConfigError("surface types must be in 1..7")
        if self.k_min > self.k_max:
            raise ConfigError("empty k range")
        if self.mode in ("verify", "negative-control") and self.k_min < 2:
            raise ConfigError(
                "k must be at least 2 (k = 1 is certified externally via "
                "very ampleness of type (3,3); see externally_certified_k1)"
            )
        if self.r_max is not None and self.r_max < 1:
            raise ConfigError("r-max must be positive")
        if self.fmt not in ("text", "json"):
            raise ConfigError(f"unknown format {self.fmt!r}")
        if self.jobs < 1:
            raise ConfigError("jobs must be positive")
        if self.mode == "negative-control" and self.base_class is None:
            raise ConfigError("negative-control requires --class a,b")


class ConfigError(ValueError):
    pass


def _parse_types(text: str) -> tuple[int, ...]:
    if text.strip() == "all":
        return tuple(range(1, 8))
    try:
        return tuple(sorted({int(t) for t in text.split(",")}))
    except ValueError:
        raise ConfigError(f"cannot parse types {text!r}") from None


def _parse_krange(text: str) -> tuple[int, int]:
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise ConfigError(f"cannot parse k range {text!r}") from None


def _parse_class(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
        return a, b
    except ValueError:
        raise ConfigError(f"cannot parse class {text!r} (expected a,b)") from None


def _load_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"config line {raw!r} is not key = value")
        key, value = (part.strip() for part in line.split("=", 1))
        values[key] = value
    return values


def build_run_config(mode: str, args: argparse.Namespace) -> RunConfig:
    file_vals = _load_config_file(args.config) if getattr(args, "config", None) else {}

    def pick(flag: str, key: str) -> str | None:
        v = getattr(args, flag, None)
        if v is not None:
            return v
        return file_vals.get(key)

    cfg = RunConfig(mode=mode)
    if (v := pick("types", "types")) is not None:
        cfg.surface_types = _parse_types(v)
    if (v := pick("k", "k")) is not None:
        cfg.k_min, cfg.k_max = _parse_krange(v)
    if (v := pick("r_max", "r-max")) is not None:
        cfg.r_max = int(v)
    if (v := pick("base_class", "class")) is not None:
        cfg.base_class = _parse_class(v)
    if (v := pick("out", "out")) is not None:
        cfg.out = v
    if (v := pick("fmt", "format")) is not None:
        cfg.fmt = v
    if (v := pick("jobs", "jobs")) is not None:
        cfg.jobs = int(v)
    if (v := getattr(args, "system", None)) is not None:
        cfg.system_path = v
    cfg.matrix = bool(getattr(args, "matrix", False))
    cfg.validate()
    return cfg


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _task_certs(task: tuple[int, int, tuple[int, int] | None, int | None]):
    type_id, k, base_pair, r_max = task
    base = DivisorClass(*base_pair) if base_pair else None
    return list(engine.iter_certificates(surface(type_id), k, base, r_max))


def _iter_sweep(cfg: RunConfig) -> Iterator[list[engine.Certificate]]:
    tasks = [
        (t, k, cfg.base_class, cfg.r_max)
        for t in cfg.surface_types
        for k in range(cfg.k_min, cfg.k_max + 1)
    ]
    if cfg.jobs == 1:
        for task in tasks:
            yield _task_certs(task)
    else:
        with Pool(cfg.jobs) as pool:
            yield from pool.imap(_task_certs, tasks)


def _run_config_json(cfg: RunConfig) -> dict:
    return {
        "mode": cfg.mode,
        "types": list(cfg.surface_types),
        "k": [cfg.k_min, cfg.k_max],
        "r_max": cfg.r_max,
        "base_class": list(cfg.base_class) if cfg.base_class else None,
    }


def run_verify(cfg: RunConfig, stream: IO[str] | None) -> engine.SweepSummary:
    summary = engine.SweepSummary()
    seen_reports: set[str] = set()
    if stream:
        stream.write(
            _dump(
                {
                    "kind": "header",
                    "schema_version": SCHEMA_VERSION,
                    "run": _run_config_json(cfg),
                }
            )
            + "\n"
        )
    for certs in _iter_sweep(cfg):
        for cert in certs:
            summary.add(cert)
            if stream:
                report = cert.nonfibre_report
                if report is not None and report.key not in seen_reports:
                    seen_reports.add(report.key)
                    stream.write(
                        _dump({"kind": "nonfibre_report", **report.to_json()}) + "\n"
                    )
                stream.write(_dump({"kind": "certificate", **cert.to_json()}) + "\n")
        if stream:
            stream.flush()
    if stream:
        stream.write(
            _dump(
                {
                    "kind": "summary",
                    "schema_version": SCHEMA_VERSION,
                    **summary.to_json(),
                }
            )
            + "\n"
        )
    return summary


def _cmd_verify(cfg: RunConfig, negative: bool) -> int:
    if cfg.out:
        with open(cfg.out, "w") as stream:
            summary = run_verify(cfg, stream)
    else:
        summary = run_verify(cfg, None)
    payload = {"run": _run_config_json(cfg), **summary.to_json()}
    if negative:
        payload["failure_witness_found"] = summary.failed > 0
    if cfg.fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(f"certificates: {summary.total}")
        for label, count in sorted(summary.label_counts.items()):
            print(f"  {label:<8} {count}")
        print(f"failed: {summary.failed}")
        if negative:
            print(
                "failure witness found"
                if summary.failed
                else "no failure witness found"
            )
    if negative:
        return 0 if summary.failed > 0 else 1
    return 0 if summary.all_passed else 1


def _bounded_matrix_lines(cfg: RunConfig) -> Iterator[dict]:
    """Full bounded-regime check matrices for every configuration in scope."""
    from . import nonfibre
    from .configurations import classify, enumerate_configurations

    seen: set[str] = set()
    base = DivisorClass(*cfg.base_class) if cfg.base_class else None
    for tid in cfg.surface_types:
        s = surface(tid)
        for k in range(cfg.k_min, cfg.k_max + 1):
            for config in enumerate_configurations(k, s, cfg.r_max):
                if config.r == 1:
                    continue
                out = classify(config, s)
                report = nonfibre.analyse(
                    config, out, s, base if base else DivisorClass(k + 2, k + 2)
                )
                if report.key in seen:
                    continue
                seen.add(report.key)
                yield {
                    "key": report.key,
                    "label": report.label,
                    "pass": report.passed,
                    "cells": [c.to_json() for c in report.bounded],
                }


def _cmd_matrix(cfg: RunConfig) -> int:
    rows = list(_bounded_matrix_lines(cfg))
    ok = all(r["pass"] for r in rows)
    if cfg.fmt == "json":
        text = json.dumps(
            {"schema_version": SCHEMA_VERSION, "matrices": rows}, sort_keys=True,
            indent=2,
        )
    else:
        lines = []
        for r in rows:
            lines.append(f"{r['key']}  [{'pass' if r['pass'] else 'FAIL'}]")
            for c in r["cells"]:
                a, b = c["class"]
                lines.append(
                    f"  ({a},{b}): min {c['min_value']:>4} {c['relation']} 0 "
                    f"at mults {c['witness_mults']}"
                    + ("" if c["pass"] else "  <-- FAIL")
                )
        text = "\n".join(lines)
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    print(text)
    return 0 if ok else 1


def _cmd_table(cfg: RunConfig) -> int:
    if cfg.matrix:
        return _cmd_matrix(cfg)
    computed = tables.bounded_curve_rows()
    golden = tables.golden_bounded_curve_rows()
    problems = tables.diff_tables(computed, golden)
    if cfg.fmt == "json":
        out = {
            "schema_version": SCHEMA_VERSION,
            "rows": computed,
            "golden_match": not problems,
            "problems": problems,
        }
        text = json.dumps(out, sort_keys=True, indent=2)
    else:
        text = tables.render_curve_table(computed)
        text += "\n" + (
            "golden copy: match"
            if not problems
            else "golden copy: MISMATCH\n" + "\n".join(problems)
        )
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    print(text)
    return 0 if not problems else 1


def _cmd_catalog(cfg: RunConfig) -> int:
    computed = tables.catalog_rows()
    golden = tables.golden_catalog_rows()
    problems = tables.diff_tables(computed, golden)
    if cfg.fmt == "json":
        out = {
            "schema_version": SCHEMA_VERSION,
            "rows": computed,
            "golden_match": not problems,
            "problems": problems,
        }
        text = json.dumps(out, sort_keys=True, indent=2)
    else:
        text = tables.render_catalog(computed)
        text += "\n" + (
            "golden copy: match"
            if not problems
            else "golden copy: MISMATCH\n" + "\n".join(problems)
        )
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    print(text)
    return 0 if not problems else 1


def _cmd_lp_check(cfg: RunConfig) -> int:
    if cfg.system_path in (None, "-"):
        payload = json.load(sys.stdin)
    else:
        payload = json.loads(Path(cfg.system_path).read_text())
    sys_ = lp.LinearSystem.from_json(payload)
    result = lp.entails(sys_)
    out = {
        "schema_version": SCHEMA_VERSION,
        "system": sys_.to_json(),
        **result.to_json(),
    }
    text = json.dumps(out, sort_keys=True, indent=2)
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    print(text)
    return 0 if result.is_valid else 1


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperjet",
        description="exact jet-ampleness certificates on hyperelliptic surfaces",
    )
    sub = parser.add_subparsers(dest="mode", required=True)

    def common(p: argparse.ArgumentParser, with_sweep: bool) -> None:
        p.add_argument("--out", help="output path")
        p.add_argument("--format", dest="fmt", choices=("text", "json"))
        p.add_argument("--config", help="key = value configuration file")
        if with_sweep:
            p.add_argument("--types", help="comma list of types in 1..7, or 'all'")
            p.add_argument("--k", help="k range, e.g. 2..5 or 3")
            p.add_argument("--r-max", dest="r_max", type=int,
                           help="cap on the number of points")
            p.add_argument("--jobs", type=int, help="worker processes")

    p = sub.add_parser("verify", help="verify all configurations")
    common(p, True)
    p.add_argument("--class", dest="base_class",
                   help="override the base class, e.g. 5,5")
    p = sub.add_parser("negative-control",
                       help="verify with a deficient base class")
    common(p, True)
    p.add_argument("--class", dest="base_class", help="base class a,b")
    p = sub.add_parser("table", help="bounded-curve table vs golden copy")
    common(p, True)
    p.add_argument("--matrix", action="store_true",
                   help="dump the full bounded-regime check matrix instead")
    p.add_argument("--class", dest="base_class", help="base class a,b")
    p = sub.add_parser("catalog", help="surface catalog vs golden copy")
    common(p, False)
    p = sub.add_parser("lp-check", help="exact linear implication query")
    common(p, False)
    p.add_argument("system", nargs="?", default="-",
                   help="JSON file with variables/constraints/target ('-' = stdin)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_run_config(args.mode, args)
        if cfg.mode == "verify":
            return _cmd_verify(cfg, negative=False)
        if cfg.mode == "negative-control":
            return _cmd_verify(cfg, negative=True)
        if cfg.mode == "table":
            return _cmd_table(cfg)
        if cfg.mode == "catalog":
            return _cmd_catalog(cfg)
        return _cmd_lp_check(cfg)
    except (ConfigError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(
            json.dumps(
                {"error": {"type": type(exc).__name__, "message": str(exc)}},
                sort_keys=True,
            ),
            file=sys.stderr,
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
