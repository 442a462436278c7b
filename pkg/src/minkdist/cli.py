"""``minkdist`` command line: distances, incidence, sweep, sumproduct, generate.

Exit status: 0 when every exact check passes, 1 when one fails, 2 for bad
input or a size cap, 3 when the point set is degenerate
(all points on one horizontal or vertical line).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import reports
from .generators import POINT_FAMILIES, SET_FAMILIES, FamilySpec, generate
from .io import (
    dumps,
    load_json,
    load_pointset,
    load_realset,
    pointset_to_json,
    realset_to_json,
    rows_to_csv,
    write_text,
)
from .minkowski import DEFAULT_BF_CAP, CapExceeded, PointSet
from .sumproduct import RealSet

COMMANDS = ("distances", "incidence", "sweep", "sumproduct", "generate")


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    input_b: str | None = None
    family: str | None = None
    n: int | None = None
    m: int | None = None
    seed: int = 0
    max_num: int = 20
    max_den: int = 100
    sizes: list[int] = field(default_factory=list)
    out: str | None = None
    format: str | None = None
    bf_cap: int = DEFAULT_BF_CAP
    n_cap: int = reports.DEFAULT_N_CAP
    workers: int = 1
    table_max: int | None = None

    def family_spec(self, n: int | None = None) -> FamilySpec:
        return FamilySpec(self.family, self.n if n is None else n, self.m, self.seed, self.max_num, self.max_den)


class UsageError(Exception):
    pass


def _parse_sizes(text: str) -> list[int]:
    if not text.strip():
        return []
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _points(cfg: RunConfig) -> PointSet:
    if cfg.input:
        return load_pointset(cfg.input)
    if cfg.family in POINT_FAMILIES and cfg.n:
        return generate(cfg.family_spec())
    raise UsageError("give --input FILE or --family NAME with --n")


def _sets(cfg: RunConfig) -> tuple[RealSet, RealSet]:
    if cfg.input:
        A = load_realset(cfg.input)
        B = load_realset(cfg.input_b) if cfg.input_b else A
        return A, B
    if cfg.family in SET_FAMILIES and cfg.n:
        A = generate(cfg.family_spec())
        B = generate(FamilySpec(cfg.family, cfg.m, None, cfg.seed + 1, cfg.max_num, cfg.max_den)) if cfg.m else A
        return A, B
    raise UsageError("give --input FILE [--input-b FILE] or a set --family with --n")


def _emit(cfg: RunConfig, payload: str, name: str) -> None:
    if cfg.out:
        out = Path(cfg.out)
        out.mkdir(parents=True, exist_ok=True)
        write_text(out / name, payload)
        write_text(out / "config.json", dumps(asdict(cfg)))
    else:
        sys.stdout.write(payload)


def run(cfg: RunConfig) -> int:
    fmt = cfg.format or ("csv" if cfg.command == "sweep" else "json")
    if cfg.command == "distances":
        report, status = reports.distances_report(_points(cfg))
        if fmt == "csv":
            flat = {k: v for k, v in report.items() if not isinstance(v, dict) and k != "note"}
            flat.update(report["cauchy_schwarz"] or {})
            _emit(cfg, rows_to_csv([flat], list(flat)), "report.csv")
        else:
            _emit(cfg, dumps(report), "report.json")
        if status == reports.HYPOTHESIS_WARNING:
            print("warning: all points lie on one horizontal or vertical line", file=sys.stderr)
        return status

    if cfg.command == "incidence":
        P = _points(cfg)
        report, rows, status = reports.incidence_report(P, cfg.bf_cap, cfg.n_cap, cfg.workers)
        if fmt == "csv":
            _emit(cfg, rows_to_csv(rows, reports.BUCKET_COLUMNS), "buckets.csv")
        else:
            _emit(cfg, dumps(report), "report.json")
        return status

    if cfg.command == "sweep":
        if not cfg.family:
            raise UsageError("sweep needs --family")
        rows, status = [], reports.OK
        if cfg.family in SET_FAMILIES:
            columns = reports.SET_SWEEP_COLUMNS
            for n in cfg.sizes:
                rows.append(reports.set_sweep_row(cfg.family, n, generate(cfg.family_spec(n))))
        else:
            columns = reports.SWEEP_COLUMNS
            for n in cfg.sizes:
                P = generate(cfg.family_spec(n))
                if P.N > cfg.n_cap:
                    raise CapExceeded(f"N={P.N} at n={n} exceeds --n-cap {cfg.n_cap}")
                row = reports.sweep_row(cfg.family, n, P, cfg.bf_cap, cfg.workers)
                if row["identity_ok"] is False or row["brute_force_ok"] is False:
                    status = reports.IDENTITY_FAILED
                rows.append(row)
        if fmt == "json":
            _emit(cfg, dumps(rows), "sweep.json")
        else:
            _emit(cfg, rows_to_csv(rows, columns), "sweep.csv")
        return status

    if cfg.command == "sumproduct":
        A, B = _sets(cfg)
        report, status = reports.sumproduct_report(A, B, cfg.table_max)
        if fmt == "csv":
            rows = [{"signs": s, **v} for s, v in report["expanders"].items()]
            _emit(cfg, rows_to_csv(rows, ["signs", "size", "ratio_to_bound"]), "report.csv")
        else:
            _emit(cfg, dumps(report), "report.json")
        return status

    if cfg.command == "generate":
        if not cfg.family or not cfg.n:
            raise UsageError("generate needs --family and --n")
        obj = generate(cfg.family_spec())
        data = pointset_to_json(obj) if isinstance(obj, PointSet) else realset_to_json(obj)
        _emit(cfg, dumps(data), "set.json" if isinstance(obj, RealSet) else "points.json")
        return reports.OK

    raise UsageError(f"unknown command {cfg.command!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minkdist", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="replay a recorded config.json (other options ignored)")
    sub = parser.add_subparsers(dest="command")
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", help="point set or real set JSON file")
        p.add_argument("--input-b", help="second real set (sumproduct)")
        p.add_argument("--family", help="generated family: " + ", ".join(POINT_FAMILIES + SET_FAMILIES))
        p.add_argument("--n", type=int, help="family size (grid side for grids)")
        p.add_argument("--m", type=int, help="second grid side / size of B")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-num", type=int, default=20, help="random numerators lie in [-max_num, max_num]")
        p.add_argument("--max-den", type=int, default=100, help="random denominators lie in [1, max_den]")
        p.add_argument("--sizes", type=_parse_sizes, default=[], help="sweep sizes, e.g. 2..8 or 2,4,8")
        p.add_argument("--out", help="output directory (default: stdout)")
        p.add_argument("--format", choices=("json", "csv"))
        p.add_argument("--bf-cap", type=int, default=DEFAULT_BF_CAP, help="max N for O(N^4) brute force")
        p.add_argument("--n-cap", type=int, default=reports.DEFAULT_N_CAP, help="max N for the incidence stage")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--table-max", type=int, help="multiplication table curve up to this n")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config:
            cfg = RunConfig(**load_json(args.config))
        elif args.command:
            cfg = RunConfig(**{k: v for k, v in vars(args).items() if k != "config"})
        else:
            parser.print_help(sys.stderr)
            return reports.USAGE
        return run(cfg)
    except (UsageError, CapExceeded, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return reports.USAGE


if __name__ == "__main__":
    sys.exit(main())
