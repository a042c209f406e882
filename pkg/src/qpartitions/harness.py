"""Verification runner, report formats, and the ``qpartitions`` command line."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import combinatorics as comb
from .identities import REGISTRY, IdentitySpec, Sides, _over_lhs, _strict_colored, build
from .polyring import MAX_COLORS
from .qseries import equal_upto

SCHEMA_VERSION = 1


@dataclass
class VerifyReport:
    identity: IdentitySpec
    status: str
    first_mismatch: tuple[int, str, str] | None = None
    elapsed: float = 0.0
    terms_built: int = 0
    message: str = ""
    sides: Sides | None = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.status == "match"

    def to_dict(self, deterministic: bool = False) -> dict:
        d = {
            "schema": SCHEMA_VERSION,
            "identity": self.identity.name,
            "colors": self.identity.colors,
            "order": self.identity.order,
            "status": self.status,
            "terms_built": self.terms_built,
            "first_mismatch": None,
        }
        if self.first_mismatch:
            n, lhs, rhs = self.first_mismatch
            d["first_mismatch"] = {"exponent": n, "lhs": lhs, "rhs": rhs}
        if self.message:
            d["message"] = self.message
        if not deterministic:
            d["elapsed"] = round(self.elapsed, 6)
        return d


def run_verify(spec: IdentitySpec, builder: Callable[[IdentitySpec], Sides] = build) -> VerifyReport:
    """Build both sides of ``spec`` and compare them coefficient by coefficient.

    ``builder`` is replaceable so tests can inject faulty sides.
    """
    start = time.perf_counter()
    try:
        sides = builder(spec)
        result = equal_upto(sides.lhs, sides.rhs, spec.order)
    except (ValueError, OverflowError) as exc:
        return VerifyReport(spec, "error", elapsed=time.perf_counter() - start, message=str(exc))
    elapsed = time.perf_counter() - start
    terms = REGISTRY[spec.name].outer_terms(spec.colors, spec.order)
    if result:
        return VerifyReport(spec, "match", None, elapsed, terms, sides=sides)
    mismatch = (result.index, str(result.lhs), str(result.rhs))
    return VerifyReport(spec, "mismatch", mismatch, elapsed, terms, sides=sides)


@dataclass
class OracleReport:
    kind: str
    colors: int
    n_max: int
    rows: list[tuple[int, int, bool]]
    first_mismatch: tuple[int, str, str] | None = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None

    @property
    def counts(self) -> list[int]:
        return [c for _, c, _ in self.rows]

    def to_dict(self) -> dict:
        d = {
            "schema": SCHEMA_VERSION,
            "kind": self.kind,
            "colors": self.colors,
            "max_n": self.n_max,
            "status": "pass" if self.ok else "fail",
            "rows": [{"n": n, "count": c, "match": m} for n, c, m in self.rows],
            "first_mismatch": None,
        }
        if self.first_mismatch:
            n, brute, series = self.first_mismatch
            d["first_mismatch"] = {"n": n, "enumerated": brute, "series": series}
        return d


def run_oracle(kind: str, r: int, n_max: int) -> OracleReport:
    """Compare enumerated generating polynomials with the product side."""
    order = n_max + 1
    series = _strict_colored(r, order) if kind == "strict" else _over_lhs(r, order, 1, True)
    rows = []
    mismatch = None
    for n in range(n_max + 1):
        parts = comb.enumerate_partitions(kind, r, n)
        brute = comb._sum_monomials(parts)
        match = brute == series[n]
        rows.append((n, len(parts), match))
        if not match and mismatch is None:
            mismatch = (n, str(brute), str(series[n]))
    return OracleReport(kind, r, n_max, rows, mismatch)


def coefficient_rows(report: VerifyReport) -> list[dict]:
    """Per-exponent dump of both sides, for CSV/JSON export."""
    if report.sides is None:
        return []
    lhs, rhs = report.sides
    return [
        {"identity": report.identity.name, "n": n, "lhs": str(lhs[n]), "rhs": str(rhs[n]), "equal": lhs[n] == rhs[n]}
        for n in range(report.identity.order)
    ]


# --- formatting -------------------------------------------------------------------


def _table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def format_verify(reports: list[VerifyReport], fmt: str, deterministic: bool) -> str:
    if fmt == "json":
        payload = [r.to_dict(deterministic) for r in reports]
        return json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)
    if fmt == "csv":
        return _csv([row for r in reports for row in coefficient_rows(r)])
    header = ["identity", "colors", "order", "status", "terms"]
    if not deterministic:
        header.append("seconds")
    rows = []
    for r in reports:
        row = [r.identity.name, r.identity.colors, r.identity.order, r.status, r.terms_built]
        if not deterministic:
            row.append(f"{r.elapsed:.3f}")
        rows.append(row)
    out = _table(header, rows)
    for r in reports:
        if r.first_mismatch:
            n, lhs, rhs = r.first_mismatch
            out += f"\n{r.identity.name}: first mismatch at q^{n}\n  lhs: {lhs}\n  rhs: {rhs}"
        elif r.message:
            out += f"\n{r.identity.name}: {r.message}"
    return out


def format_oracle(report: OracleReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2)
    if fmt == "csv":
        return _csv([{"n": n, "count": c, "match": m} for n, c, m in report.rows])
    out = _table(["n", "count", "match"], report.rows)
    out += f"\n{report.kind}, r = {report.colors}: {'pass' if report.ok else 'FAIL'}"
    if report.first_mismatch:
        n, brute, series = report.first_mismatch
        out += f"\nfirst mismatch at n = {n}\n  enumerated: {brute}\n  series:     {series}"
    return out


def format_decomposition(p: comb.ColoredPartition, d: comb.BlockDecomposition, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {
                "schema": SCHEMA_VERSION,
                "partition": str(p),
                "kind": p.kind,
                "weight": p.weight,
                "durfee": d.durfee,
                "block2": [str(q) for q in d.block2],
                "block3": [str(q) for q in d.block3],
                "block4": [str(q) for q in d.block4.parts],
                "weights": d.weights,
            },
            indent=2,
        )
    if fmt == "csv":
        rows = [{"block": b, "weight": w} for b, w in d.weights.items()]
        return _csv(rows)
    return f"partition {p} ({p.kind}, weight {p.weight})\n" + d.describe()


def format_lemmas(results: list[comb.LemmaResult], fmt: str) -> str:
    rows = [(r.lemma, r.parts, "pass" if r.passed else str(r.comparison)) for r in results]
    if fmt == "json":
        return json.dumps(
            {"schema": SCHEMA_VERSION, "results": [{"lemma": a, "parts": i, "result": s} for a, i, s in rows]},
            indent=2,
        )
    if fmt == "csv":
        return _csv([{"lemma": a, "parts": i, "result": s} for a, i, s in rows])
    return _table(["lemma", "i", "result"], rows)


# --- command line -----------------------------------------------------------------


def _positive(lo: int, hi: int | None = None):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if v < lo or (hi is not None and v > hi):
            bound = f"{lo}..{hi}" if hi is not None else f">= {lo}"
            raise argparse.ArgumentTypeError(f"must be {bound}, got {v}")
        return v

    return parse


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qpartitions", description="Verify colored partition identities exactly.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table")
    common.add_argument("--deterministic", action="store_true", help="omit timings")
    common.add_argument("--output", help="write the report to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="compare both sides of identities")
    which = v.add_mutually_exclusive_group(required=True)
    which.add_argument("--identity", choices=sorted(REGISTRY))
    which.add_argument("--all", action="store_true")
    v.add_argument("--colors", type=_positive(1, MAX_COLORS), default=2)
    v.add_argument("--order", type=_positive(2), default=30)

    o = sub.add_parser("oracle", parents=[common], help="enumerate partitions and compare with the product side")
    o.add_argument("--kind", choices=["strict", "over"], required=True)
    o.add_argument("--colors", type=_positive(1, MAX_COLORS), default=2)
    o.add_argument("--max-n", type=_positive(0), required=True)

    d = sub.add_parser("decompose", parents=[common], help="split a partition into Blocks I-IV")
    d.add_argument("--partition", required=True)
    d.add_argument("--kind", choices=["strict", "over"])

    lem = sub.add_parser("lemmas", parents=[common], help="check the one-color overpartition counts")
    lem.add_argument("--max-parts", type=_positive(1), default=6)
    lem.add_argument("--order", type=_positive(2), default=15)
    return p


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "verify":
        names = sorted(REGISTRY) if args.all else [args.identity]
        reports = []
        for name in names:
            report = run_verify(IdentitySpec(name, args.colors, args.order))
            reports.append(report)
            if not report.ok:
                break
        text, ok = format_verify(reports, args.format, args.deterministic), all(r.ok for r in reports)
    elif args.command == "oracle":
        report = run_oracle(args.kind, args.colors, args.max_n)
        text, ok = format_oracle(report, args.format), report.ok
    elif args.command == "decompose":
        try:
            part = comb.parse_partition(args.partition, args.kind)
            decomposition = comb.durfee_decompose(part)
        except ValueError as exc:
            print(f"qpartitions decompose: {exc}", file=sys.stderr)
            return 2
        text, ok = format_decomposition(part, decomposition, args.format), True
    else:
        results = comb.verify_over_lemmas(args.max_parts, args.order)
        text, ok = format_lemmas(results, args.format), all(r.passed for r in results)

    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text.rstrip("\n"))
    return 0 if ok else 1


def main() -> None:
    sys.exit(cli_main())
