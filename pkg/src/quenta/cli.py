"""Command-line front end: single constructions, family tables, verify sweeps.

Output is JSON by default (one object per row) or CSV with ``--format csv``.
Exit codes: 0 success, 1 usage or precondition error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import constructions as cons
from .config import load_config, apply_modulus_overrides
from .constructions import EXACT, LOWER_BOUND, SingletonViolationError, singleton
from .defset import coset_partition, defset
from .oracle import VerificationReport, sweep, verify_instance, instances

FAMILIES = ("euclid-pair", "euclid-lcd", "rs-euclid", "rs-mds", "bch-euclid",
            "hermitian", "hermitian-lcd", "rs-hermit", "bch-hermit", "li-lcd")

CSV_COLUMNS = ("family", "case", "q", "n", "k", "d", "d_kind", "c",
               "maximal_entanglement", "singleton_bound", "defect",
               "classification", "inputs", "warnings", "verification")

_REQUIRED = {
    "euclid-pair": ("n", "q", "z1", "z2", "d1", "d2"),
    "euclid-lcd": ("n", "q", "z", "d"),
    "rs-euclid": ("q", "k1", "b1", "k2", "b2"),
    "rs-mds": ("q", "k", "b"),
    "bch-euclid": ("q", "a", "b"),
    "hermitian": ("q", "n", "z", "d"),
    "hermitian-lcd": ("q", "n", "z", "d"),
    "rs-hermit": ("q", "t", "r"),
    "bch-hermit": ("q", "a"),
    "li-lcd": ("q", "m", "delta"),
}


class _Parser(argparse.ArgumentParser):
    """argparse front end whose usage errors exit 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_elems(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip() != ""]


def _plain(value):
    """JSON-friendly copy of an inputs-echo value, sets sorted for stability."""
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    if isinstance(value, tuple):
        return list(value)
    return value


def _flat(value) -> str:
    """CSV cell form of an inputs-echo value; sets join with semicolons."""
    if isinstance(value, (frozenset, set)):
        return ";".join(str(v) for v in sorted(value))
    if isinstance(value, tuple):
        return ";".join(str(v) for v in value)
    return str(value)


def output_row(p: cons.QuentaParams, report: VerificationReport | None = None) -> dict:
    rep = singleton(p)
    row = {
        "family": p.family,
        "case": p.case,
        "q": p.q,
        "n": p.n,
        "k": p.k,
        "d": p.d,
        "d_kind": p.d_kind,
        "c": p.c,
        "maximal_entanglement": p.maximal_entanglement,
        "singleton_bound": rep.bound,
        "defect": rep.defect,
        "classification": rep.classification,
        "inputs": {name: _plain(v) for name, v in p.inputs},
        "warnings": list(p.warnings),
    }
    if report is not None:
        row["verification"] = {
            "passed": report.passed,
            "rows": [
                {"name": r.name, "predicted": r.predicted, "measured": r.measured,
                 "kind": r.kind, "passed": r.passed, "note": r.note}
                for r in report.rows
            ],
            "notes": list(report.notes),
        }
    return row


def _csv_cell(row: dict, col: str) -> str:
    if col == "inputs":
        return " ".join(f"{name}={_flat(v)}" for name, v in row["inputs"].items())
    if col == "warnings":
        return " | ".join(row["warnings"])
    if col == "verification":
        if "verification" not in row:
            return ""
        return "pass" if row["verification"]["passed"] else "fail"
    return str(row[col])


def _emit(rows: list[dict], fmt: str, out_path: str | None, single: bool = False) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([_csv_cell(row, col) for col in CSV_COLUMNS])
        text = buf.getvalue()
    else:
        payload = rows[0] if (single and rows) else rows
        text = json.dumps(payload, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------

def cmd_cosets(args) -> int:
    part = coset_partition(args.n, args.q)
    cosets = [sorted(c.as_set()) for c in part.cosets]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("leader", "size", "elements"))
        for c in cosets:
            writer.writerow((c[0], len(c), ";".join(str(v) for v in c)))
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(json.dumps({"n": args.n, "q": args.q, "cosets": cosets},
                                    indent=2) + "\n")
    return 0


def _construct_params(args) -> cons.QuentaParams:
    fam = args.family
    missing = [name for name in _REQUIRED[fam] if getattr(args, name) is None]
    if missing:
        flags = ", ".join("--" + name.replace("_", "-") for name in missing)
        raise ValueError(f"family {fam} requires {flags}")
    if fam == "euclid-pair":
        Z1 = defset(args.n, args.q, _parse_elems(args.z1))
        Z2 = defset(args.n, args.q, _parse_elems(args.z2))
        return cons.euclid_pair(Z1, Z2, args.d1, args.d2, args.d1_kind, args.d2_kind)
    if fam == "euclid-lcd":
        return cons.euclid_lcd(defset(args.n, args.q, _parse_elems(args.z)),
                               args.d, args.d_kind)
    if fam == "rs-euclid":
        n = args.n if args.n is not None else args.q - 1
        return cons.rs_euclid(args.q, n, args.k1, args.b1, args.k2, args.b2)
    if fam == "rs-mds":
        n = args.n if args.n is not None else args.q - 1
        return cons.rs_euclid_mds(args.q, n, args.k, args.b)
    if fam == "bch-euclid":
        return cons.bch_euclid(args.q, args.a, args.b)
    if fam == "hermitian":
        Z = defset(args.n, args.q * args.q, _parse_elems(args.z))
        return cons.hermitian_code(args.q, Z, args.d, args.d_kind)
    if fam == "hermitian-lcd":
        Z = defset(args.n, args.q * args.q, _parse_elems(args.z))
        return cons.hermitian_lcd(args.q, Z, args.d, args.d_kind)
    if fam == "rs-hermit":
        return cons.rs_hermit(args.q, args.t, args.r)
    if fam == "bch-hermit":
        return cons.bch_hermit(args.q, args.a)
    if fam == "li-lcd":
        return cons.lcd_cyclic_family(args.q, args.m, args.delta)
    raise ValueError(f"unknown family {fam!r}")


def cmd_construct(args, cfg) -> int:
    p = _construct_params(args)
    report = None
    if args.verify:
        report = verify_instance(p, matrix_cap=cfg.matrix_cap,
                                 distance_cap=cfg.distance_cap)
    _emit([output_row(p, report)], args.format, None, single=True)
    if report is not None and not report.passed:
        return 2
    return 0


def _sweep_kwargs(args) -> dict:
    kw = {"q": args.q, "n": args.n, "m": args.m}
    if args.a_max is not None:
        kw["a_values"] = range(2, args.a_max + 1)
    if args.delta_max is not None:
        kw["delta_values"] = range(2, args.delta_max + 1)
    return kw


def cmd_table(args, cfg) -> int:
    rows = [output_row(p) for p in instances(args.family, **_sweep_kwargs(args))]
    _emit(rows, args.format, args.out)
    return 0


def _report_line(rep: VerificationReport) -> str:
    echo = " ".join(f"{name}={_flat(v)}" for name, v in rep.inputs)
    cells = []
    for r in rep.rows:
        if r.kind == "skipped_cap":
            cells.append(f"{r.name} skip[{r.note}]")
        elif r.kind == "exact":
            op = "==" if r.passed else "!="
            cells.append(f"{r.name} {r.predicted}{op}{r.measured}")
        else:
            op = "<=" if r.passed else ">"
            cells.append(f"{r.name} {r.predicted}{op}{r.measured}")
    status = "PASS" if rep.passed else "FAIL"
    return f"{status} {rep.family} {echo} | " + ", ".join(cells)


def cmd_verify(args, cfg) -> int:
    reports = sweep(args.family, matrix_cap=cfg.matrix_cap,
                    distance_cap=cfg.distance_cap, **_sweep_kwargs(args))
    for rep in reports:
        sys.stdout.write(_report_line(rep) + "\n")
    failed = sum(1 for r in reports if not r.passed)
    passed = len(reports) - failed
    skipped = sum(1 for r in reports for row in r.rows if row.kind == "skipped_cap")
    sys.stdout.write(f"{passed} passed, {failed} failed, {skipped} skipped\n")
    return 2 if failed else 0


# ----------------------------------------------------------------------
# argument wiring
# ----------------------------------------------------------------------

def _add_format(p) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")


def _add_sweep_flags(p) -> None:
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--a-max", dest="a_max", type=int)
    p.add_argument("--delta-max", dest="delta_max", type=int)


def build_parser() -> _Parser:
    parser = _Parser(prog="quenta")
    parser.add_argument("--config", help="config file path (also: QUENTA_CONFIG env var)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cosets", help="cyclotomic cosets of Z_n under q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("construct", help="build one parameter set")
    p.add_argument("family", choices=FAMILIES)
    for flag in ("q", "n", "k", "b", "k1", "b1", "k2", "b2", "a", "t", "r", "m",
                 "delta", "d", "d1", "d2"):
        p.add_argument(f"--{flag}", type=int)
    for flag in ("z", "z1", "z2"):
        p.add_argument(f"--{flag}", type=str)
    for flag in ("d-kind", "d1-kind", "d2-kind"):
        p.add_argument(f"--{flag}", dest=flag.replace("-", "_"),
                       choices=(EXACT, LOWER_BOUND), default=EXACT)
    p.add_argument("--verify", action="store_true")
    _add_format(p)

    p = sub.add_parser("table", help="family table over the legal parameter grid")
    _add_sweep_flags(p)
    p.add_argument("--out", help="write to file instead of stdout")
    _add_format(p)

    p = sub.add_parser("verify", help="oracle sweep with per-instance pass/fail")
    _add_sweep_flags(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        apply_modulus_overrides(cfg)
        if args.command == "cosets":
            return cmd_cosets(args)
        if args.command == "construct":
            return cmd_construct(args, cfg)
        if args.command == "table":
            return cmd_table(args, cfg)
        if args.command == "verify":
            return cmd_verify(args, cfg)
        raise AssertionError(args.command)
    except (ValueError, SingletonViolationError, OSError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
