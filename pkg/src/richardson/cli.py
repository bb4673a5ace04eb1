"""Command-line front end: classify single parabolics, enumerate families,
run the verification sweeps, export the exceptional tables.

Exit codes: 0 success, 1 verification failure or data mismatch, 2 usage or
descriptor error.  All numbers are exact; machine formats share one fixed
record layout (see data/record.schema.json).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Iterable

from .classify import ClassificationReport, classify
from .core import (
    BlockVector,
    Coloring,
    DescriptorError,
    LieKind,
    all_block_vectors,
    all_colorings,
    blocks_from_coloring,
    coloring_from_blocks,
)
from .exceptional import (
    ExceptionalRecord,
    NON_SL2_ORBITS,
    appendix_records,
    exceptional_lookup,
    orbit_dim,
    root_system,
)
from .verify import run_verification

RECORD_KEYS = (
    "kind",
    "coloring",
    "blocks",
    "central",
    "nice",
    "birational",
    "sl2",
    "normal",
    "partition",
    "orbit_dim",
    "covering_degree",
    "label",
)

_EXC_NAMES = ("G2", "F4", "E6", "E7", "E8")


def record_schema() -> dict:
    """The shipped JSON schema for one output record."""
    text = resources.files("richardson").joinpath("data/record.schema.json").read_text()
    return json.loads(text)


def report_to_record(report: ClassificationReport) -> dict:
    return {
        "kind": report.kind.name,
        "coloring": list(report.coloring.u) if report.coloring else None,
        "blocks": list(report.blocks.d),
        "central": report.blocks.central,
        "nice": report.nice,
        "birational": report.birational,
        "sl2": report.sl2_given,
        "normal": report.normal,
        "partition": list(report.partition) if report.partition is not None else None,
        "orbit_dim": report.orbit_dim,
        "covering_degree": report.covering_degree,
        "label": report.bala_carter_label,
    }


def exceptional_to_record(rec: ExceptionalRecord) -> dict:
    return {
        "kind": rec.kind.name,
        "coloring": list(rec.coloring.u),
        "blocks": None,
        "central": None,
        "nice": rec.nice,
        "birational": rec.birational,
        "sl2": rec.sl2_given,
        "normal": "out_of_scope",
        "partition": None,
        "orbit_dim": rec.orbit_dim,
        "covering_degree": None,
        "label": rec.bala_carter_label,
    }


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ",".join(map(str, value))
    return str(value)


def _emit_table(records: list[dict], out) -> None:
    cells = [[_cell(r[k]) for k in RECORD_KEYS] for r in records]
    widths = [
        max(len(k), *(len(row[i]) for row in cells)) if cells else len(k)
        for i, k in enumerate(RECORD_KEYS)
    ]
    out.write("  ".join(k.ljust(w) for k, w in zip(RECORD_KEYS, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _emit_csv(records: Iterable[dict], out) -> None:
    writer = csv.writer(out)
    writer.writerow(RECORD_KEYS)
    for r in records:
        writer.writerow([_cell_csv(r[k]) for k in RECORD_KEYS])


def _cell_csv(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ",".join(map(str, value))
    return str(value)


def _emit_json(records: Iterable[dict], out) -> None:
    for r in records:
        out.write(json.dumps(r) + "\n")


def _emit(records: list[dict], fmt: str, out) -> None:
    if fmt == "table":
        _emit_table(records, out)
    elif fmt == "json":
        _emit_json(records, out)
    else:
        _emit_csv(records, out)


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise DescriptorError(f"cannot parse {what} {text!r}: expected comma-separated integers")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_classify(args) -> int:
    kind = LieKind.parse(args.kind)
    if args.blocks is not None and args.coloring is not None:
        raise DescriptorError("give either --blocks or --coloring, not both")
    if args.central is not None and args.blocks is None:
        raise DescriptorError("--central only makes sense together with --blocks")
    if kind.is_exceptional:
        if args.coloring is None:
            raise DescriptorError(f"{kind.name} takes --coloring (no matrix blocks)")
        rec = exceptional_lookup(Coloring(kind, _parse_ints(args.coloring, "coloring")))
        record = exceptional_to_record(rec)
    else:
        if args.coloring is not None:
            coloring = Coloring(kind, _parse_ints(args.coloring, "coloring"))
            b = blocks_from_coloring(coloring)
        elif args.blocks is not None:
            d = _parse_ints(args.blocks, "blocks")
            try:
                b = BlockVector(kind, d, args.central)
            except DescriptorError as exc:
                full_sum = sum(d) + (args.central or 0)
                if (
                    kind.family != "A"
                    and len(d) > 1
                    and tuple(reversed(d)) == d
                    and full_sum == kind.matrix_size
                ):
                    raise DescriptorError(
                        f"{exc} (hint: --blocks takes only the half palindrome "
                        "d_1,..,d_r; put the middle block in --central)"
                    ) from None
                raise
            coloring = coloring_from_blocks(b)
        else:
            raise DescriptorError("one of --blocks or --coloring is required")
        report = classify(
            b, coloring=coloring, with_oracle=args.with_oracle, trials=args.trials, seed=args.seed
        )
        record = report_to_record(report)
        for note in report.diagnostics:
            print(f"note: {note}", file=sys.stderr)
    if args.format == "table":
        for key in RECORD_KEYS:
            print(f"{key}: {_cell(record[key])}")
    else:
        _emit([record], args.format, sys.stdout)
    return 0


def _iter_enumerate(args, kind: LieKind) -> list[dict]:
    records: list[dict] = []
    if kind.is_exceptional:
        for coloring in all_colorings(kind):
            records.append(exceptional_to_record(exceptional_lookup(coloring)))
        return records
    if args.by_blocks:
        pairs = [(b, coloring_from_blocks(b)) for b in all_block_vectors(kind)]
        pairs.sort(key=lambda bc: bc[1].u)
        for b, coloring in pairs:
            records.append(report_to_record(classify(b, coloring=coloring)))
        return records
    for coloring in all_colorings(kind):
        b = blocks_from_coloring(coloring)
        records.append(report_to_record(classify(b, coloring=coloring)))
    return records


def _cmd_enumerate(args) -> int:
    kind_text = args.kind.strip().upper()
    if kind_text in _EXC_NAMES:
        if args.by_blocks:
            raise DescriptorError("--by-blocks applies to classical kinds only")
        kinds = [LieKind.parse(kind_text)]
    elif len(kind_text) == 1 and kind_text in "ABCD":
        if args.rank is None and args.max_rank is None:
            raise DescriptorError("classical enumeration needs --rank or --max-rank")
        if args.rank is not None and args.max_rank is not None:
            raise DescriptorError("give only one of --rank / --max-rank")
        lo = {"A": 1, "B": 2, "C": 2, "D": 3}[kind_text]
        hi = args.rank if args.rank is not None else args.max_rank
        lo = args.rank if args.rank is not None else lo
        if hi < lo:
            raise DescriptorError(f"rank {hi} is below the minimum rank for {kind_text}")
        kinds = [LieKind(kind_text, r) for r in range(lo, hi + 1)]
    else:
        kind = LieKind.parse(kind_text)  # e.g. --kind C3 as shorthand for C --rank 3
        if args.rank is not None or args.max_rank is not None:
            raise DescriptorError("--rank/--max-rank conflict with an explicit rank in --kind")
        kinds = [kind]
    records: list[dict] = []
    for kind in kinds:
        records.extend(_iter_enumerate(args, kind))
    if args.nice:
        records = [r for r in records if r["nice"]]
    if args.birational:
        records = [r for r in records if r["birational"]]
    if args.sl2:
        records = [r for r in records if r["sl2"]]
    if args.normal:
        records = [r for r in records if r["normal"] == "normal"]
    _emit(records, args.format, sys.stdout)
    return 0


def _cmd_verify(args) -> int:
    families = ("A", "B", "C", "D") if args.kind == "all" else (args.kind.upper(),)
    if any(f not in "ABCD" for f in families):
        raise DescriptorError("verify runs on classical kinds: A, B, C, D or all")
    result = run_verification(
        families=families,
        max_n=args.max_n,
        trials=args.trials,
        base_seed=args.seed,
        emit=print,
    )
    print(
        f"checked {result.checked} nice block vectors (N <= {args.max_n}): "
        f"{len(result.failures)} discrepancies"
    )
    return 0 if result.ok else 1


def _export_rows(kind: LieKind) -> tuple[list[dict], list[str]]:
    rs = root_system(kind)
    rows: list[dict] = []
    mismatches: list[str] = []
    for rec in appendix_records(kind):
        recomputed = orbit_dim(rs, rec.coloring)
        stored = NON_SL2_ORBITS.get((kind.name, rec.coloring.u))
        if stored is not None and stored[0] != recomputed:
            mismatches.append(
                f"{kind.name} {rec.coloring.u}: stored orbit dim {stored[0]} != recomputed {recomputed}"
            )
        record = exceptional_to_record(rec)
        record["orbit_dim"] = recomputed
        rows.append(record)
    return rows, mismatches


def _cmd_export(args) -> int:
    names = _EXC_NAMES if args.kind == "all" else (args.kind.strip().upper(),)
    if any(n not in _EXC_NAMES for n in names):
        raise DescriptorError("export covers the exceptional kinds: G2, F4, E6, E7, E8 or all")
    out_path = Path(args.out)
    all_mismatches: list[str] = []
    try:
        if len(names) > 1:
            out_path.mkdir(parents=True, exist_ok=True)
            for name in names:
                rows, mismatches = _export_rows(LieKind.parse(name))
                all_mismatches.extend(mismatches)
                target = out_path / f"{name}.{args.format}"
                with target.open("w", newline="") as fh:
                    _emit(rows, args.format, fh)
                print(f"wrote {len(rows)} rows to {target}")
        else:
            rows, mismatches = _export_rows(LieKind.parse(names[0]))
            all_mismatches.extend(mismatches)
            with out_path.open("w", newline="") as fh:
                _emit(rows, args.format, fh)
            print(f"wrote {len(rows)} rows to {out_path}")
    except OSError as exc:
        print(f"error: cannot write {exc.filename}: {exc.strerror}", file=sys.stderr)
        return 2
    for line in all_mismatches:
        print(f"mismatch: {line}", file=sys.stderr)
    return 1 if all_mismatches else 0


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="richardson",
        description=(
            "Classify parabolic subalgebras of simple complex Lie algebras: "
            "Richardson element in the first graded part, stabilizer equality "
            "for the moment map, sl2 origin, orbit data."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a single parabolic")
    p.add_argument("--kind", required=True, help="Lie type, e.g. A3, C3, D5, E7")
    p.add_argument("--blocks", help="half block vector d_1,..,d_r (full list for type A)")
    p.add_argument("--central", type=int, default=None, help="central block size (B/C/D)")
    p.add_argument("--coloring", help="0/1 coloring of the simple roots, e.g. 1,0,1")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--with-oracle", action="store_true", help="oracle partition for non-nice B/C/D")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="enumerate and filter parabolic families")
    p.add_argument("--kind", required=True, help="A/B/C/D (with --rank) or G2/F4/E6/E7/E8")
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--max-rank", type=int, default=None, dest="max_rank")
    p.add_argument("--by-blocks", action="store_true", dest="by_blocks")
    p.add_argument("--nice", action="store_true")
    p.add_argument("--birational", action="store_true")
    p.add_argument("--sl2", action="store_true")
    p.add_argument("--normal", action="store_true")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="closed forms vs oracle, block vs partition criteria")
    p.add_argument("--kind", default="all", help="A, B, C, D or all")
    p.add_argument("--max-N", type=int, default=12, dest="max_n")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export", help="write the exceptional tables to files")
    p.add_argument("--kind", required=True, help="G2, F4, E6, E7, E8 or all")
    p.add_argument("--out", required=True, help="output file (directory for --kind all)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DescriptorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
