"""Command-line front end and report serialization.

Subcommands: ``verify`` (one pair), ``sweep`` (all pairs p < q <= max),
``lemma-suite`` (seeded randomized suites), ``legendre`` (print one symbol).

Exit codes: 0 all checks passed; 1 at least one verification failed;
2 invalid invocation (bad primes, bad bounds, over budget, unknown suite).

Reports are deterministic byte for byte given the same configuration and
seed.  The only timestamp lives in the metadata: '#'-prefixed comment lines
in CSV, the "meta" object in JSON.  The report body (CSV header plus data
rows; JSON "rows" and "summary") never varies between identical runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, fields
from datetime import datetime, timezone
from typing import Sequence

from . import __version__
from .errors import CapacityError, DomainError
from .reciprocity_pipeline import RELATION_EQUAL, PairVerdict, verify_pair
from .residue_arith import legendre_euler, odd_primes_up_to
from . import budget
from .suites import SuiteResult, run_suite


@dataclass(frozen=True)
class SweepRow:
    """One verified pair, flattened for serialization."""

    p: int
    q: int
    p_mod4: int
    q_mod4: int
    rank: int
    prodL_p: int
    prodL_q: int
    closed_p: int
    closed_q: int
    leg_qp: int
    leg_pq: int
    relation: str
    qr_holds: bool
    all_pass: bool

    @classmethod
    def from_verdict(cls, v: PairVerdict) -> SweepRow:
        return cls(
            p=v.p,
            q=v.q,
            p_mod4=v.p % 4,
            q_mod4=v.q % 4,
            rank=v.rank,
            prodL_p=v.product_L.a,
            prodL_q=v.product_L.b,
            closed_p=v.closed_form.a,
            closed_q=v.closed_form.b,
            leg_qp=v.legendre_qp,
            leg_pq=v.legendre_pq,
            relation="equal" if v.predicted_relation == RELATION_EQUAL else "opposite",
            qr_holds=v.qr_identity_holds,
            all_pass=v.all_pass,
        )


SWEEP_FIELDS = tuple(f.name for f in fields(SweepRow))


@dataclass(frozen=True)
class RunConfig:
    """Everything a run needs; identical configs produce identical bodies."""

    command: str
    seed: int = 0
    fmt: str = "csv"
    out: str | None = None
    p: int | None = None
    q: int | None = None
    max: int | None = None
    which: str | None = None
    n: int | None = None

    def meta_items(self) -> list[tuple[str, object]]:
        items: list[tuple[str, object]] = [
            ("version", __version__),
            ("command", self.command),
            ("seed", self.seed),
        ]
        for name in ("p", "q", "max", "which", "n"):
            value = getattr(self, name)
            if value is not None:
                items.append((name, value))
        items.append(("format", self.fmt))
        return items


def _csv_value(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _summary_text(summary: dict) -> str:
    text = f"pairs={summary['pairs']} failures={summary['failures']}"
    if summary["pairs"] == 0:
        text += " (no pairs)"
    return text


def render_csv(cfg: RunConfig, rows: list[SweepRow], summary: dict, timestamp: str) -> str:
    lines = [f"# {key}: {value}" for key, value in cfg.meta_items()]
    lines.append(f"# generated_at: {timestamp}")
    lines.append(",".join(SWEEP_FIELDS))
    for row in rows:
        lines.append(",".join(_csv_value(v) for v in asdict(row).values()))
    lines.append(f"# summary: {_summary_text(summary)}")
    return "\n".join(lines) + "\n"


def render_json(cfg: RunConfig, rows: list[SweepRow], summary: dict, timestamp: str) -> str:
    meta = dict(cfg.meta_items())
    meta["generated_at"] = timestamp
    doc = {"meta": meta, "rows": [asdict(row) for row in rows], "summary": summary}
    return json.dumps(doc, indent=2) + "\n"


def _emit_report(cfg: RunConfig, rows: list[SweepRow], summary: dict) -> None:
    timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    render = render_json if cfg.fmt == "json" else render_csv
    report = render(cfg, rows, summary, timestamp)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(report)
        print(f"wrote {cfg.out}: {_summary_text(summary)}")
    else:
        sys.stdout.write(report)


def _make_summary(rows: list[SweepRow]) -> dict:
    failures = sum(1 for row in rows if not row.all_pass)
    summary: dict = {"pairs": len(rows), "failures": failures}
    if not rows:
        summary["note"] = "no pairs"
    return summary


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = RunConfig(command="verify", seed=args.seed, fmt=args.format, out=args.out,
                    p=args.p, q=args.q)
    verdict = verify_pair(args.p, args.q)
    rows = [SweepRow.from_verdict(verdict)]
    _emit_report(cfg, rows, _make_summary(rows))
    return 0 if verdict.all_pass else 1


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.max < 0:
        raise DomainError(f"--max must be nonnegative, got {args.max}")
    stream_cap = budget.effective_cap(budget.STREAM_PRODUCT_CAP)
    if args.max > stream_cap:
        raise DomainError(f"--max {args.max} is over the enumeration cap {stream_cap}")
    primes = odd_primes_up_to(args.max)
    if len(primes) >= 2 and primes[-1] * primes[-2] > stream_cap:
        raise DomainError(
            f"sweep to {args.max} would need pair products up to "
            f"{primes[-1] * primes[-2]}, over the cap {stream_cap}"
        )
    cfg = RunConfig(command="sweep", seed=args.seed, fmt=args.format, out=args.out,
                    max=args.max)
    rows = []
    for i, p in enumerate(primes):
        for q in primes[i + 1 :]:
            rows.append(SweepRow.from_verdict(verify_pair(p, q)))
    summary = _make_summary(rows)
    _emit_report(cfg, rows, summary)
    return 0 if summary["failures"] == 0 else 1


def cmd_lemma_suite(args: argparse.Namespace) -> int:
    result: SuiteResult = run_suite(args.which, args.n, args.seed)
    print(f"# version: {__version__}")
    print(f"# suite: {args.which}  n: {args.n}  seed: {args.seed}")
    print(f"{result.suite}: {result.n_pass}/{result.total} pass")
    for desc in result.failures:
        print(f"FAIL {desc}")
    return 0 if result.all_pass else 1


def cmd_legendre(args: argparse.Namespace) -> int:
    print(legendre_euler(args.a, args.p))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recipro",
        description="verify quadratic reciprocity through exact group-theoretic identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_report_flags(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", metavar="PATH", default=None)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("verify", help="verify one pair of distinct odd primes")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    add_report_flags(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="verify every pair of odd primes p < q <= max")
    sp.add_argument("--max", type=int, required=True)
    add_report_flags(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("lemma-suite", help="run a seeded randomized suite")
    sp.add_argument("--which", required=True,
                    help="one of: lemma1, lemma2, euler, wilson")
    sp.add_argument("--n", type=int, required=True, help="number of cases")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_lemma_suite)

    sp = sub.add_parser("legendre", help="print the Legendre symbol (a/p)")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_legendre)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
