"""Command-line interface: ``qfranklin eval|verify|suite|franklin``.

Exit status: 0 success, 1 mismatch or failed check, 2 usage/parse/eval error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, List, Optional, Sequence, Tuple

from . import identities as ids
from .dsl import DEFAULT_GUARD_WINDOW, DSLError, DSLSyntaxError, IDENTITY_SCRIPTS, Evaluator, parse, run_verify
from .formatting import format_terms, qseries_to_json, xqseries_to_json
from .partitions import (
    Partition,
    classify_franklin,
    franklin_map,
    iter_distinct,
    partition_stats,
)
from .series import (
    INF,
    XQSeries,
    first_mismatch,
    pentagonal_series,
    pochhammer_q,
)

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _series_text(s: XQSeries) -> str:
    if s.xorder == 0:
        return format_terms((0, b, row[0]) for b, row in enumerate(s.rows) if row[0])
    return format_terms(s.terms())


def _series_json(s: XQSeries) -> dict:
    if s.xorder == 0:
        return qseries_to_json(s.to_qseries())
    return xqseries_to_json(s)


def _monomial_text(a: int, b: int) -> str:
    parts = [f"x^{a}"] if a else []
    parts.append(f"q^{b}")
    return "*".join(parts)


def _report_error(exc: Exception, fmt: str, out) -> int:
    if fmt == "json":
        payload = {"status": "error", "error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, DSLSyntaxError):
            payload.update(line=exc.line, column=exc.column, token=exc.token)
        print(json.dumps(payload), file=out)
    kind = "syntax error" if isinstance(exc, DSLSyntaxError) else "error"
    print(f"{kind}: {exc}", file=sys.stderr)
    return EXIT_ERROR


def cmd_eval(args, out) -> int:
    try:
        value = Evaluator(args.qorder, args.xorder, args.guard_window).eval(parse(args.expr))
    except DSLError as exc:
        return _report_error(exc, args.format, out)
    if args.format == "json":
        print(json.dumps(_series_json(value)), file=out)
    else:
        print(_series_text(value), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        rep = run_verify(args.lhs, args.rhs, args.qorder, args.xorder, args.guard_window)
    except DSLError as exc:
        return _report_error(exc, args.format, out)
    if args.format == "json":
        payload = {"status": rep.status, "qorder": rep.qorder, "xorder": rep.xorder,
                   "first_mismatch": None}
        if rep.first_mismatch:
            a, b, u, v = rep.first_mismatch
            payload["first_mismatch"] = {"xexp": a, "qexp": b, "lhs": str(u), "rhs": str(v)}
        print(json.dumps(payload), file=out)
    elif rep.equal:
        print(f"equal (qorder={rep.qorder}, xorder={rep.xorder})", file=out)
    else:
        a, b, u, v = rep.first_mismatch
        print(f"mismatch at {_monomial_text(a, b)}: lhs {u}, rhs {v} "
              f"(qorder={rep.qorder}, xorder={rep.xorder})", file=out)
    return EXIT_OK if rep.equal else EXIT_MISMATCH


def _franklin_suite(max_weight: int) -> Optional[str]:
    """Involution, sign, weight and statistic checks; returns a failure note or None."""
    for W in range(max_weight + 1):
        for parts in iter_distinct(W):
            lam = Partition(parts)
            if classify_franklin(lam).is_exceptional:
                continue
            img = franklin_map(lam)
            s0, s1 = partition_stats(lam), partition_stats(img)
            if classify_franklin(img).is_exceptional or franklin_map(img) != lam:
                return f"involution fails at {lam}"
            if abs(s1.n - s0.n) != 1 or s1.N != s0.N:
                return f"sign/weight fails at {lam}"
            if s1.m + s1.n != s0.m + s0.n or abs(s1.m - s0.m) != 1:
                return f"m+n exchange fails at {lam}"
    return None


def suite_checks(qorder: int, xorder: int, enum_order: int,
                 franklin_weight: int) -> List[Tuple[str, Callable[[], Optional[str]]]]:
    """``(label, check)`` pairs; a check returns None on success or a failure note."""

    def mm(lhs, rhs):
        m = first_mismatch(lhs, rhs)
        return None if m is None else f"first mismatch {m}"

    E = enum_order
    W = ids.WeightSelector
    checks = [
        (f"eq1 pentagonal theorem (qorder {qorder})",
         lambda: mm(pochhammer_q(INF, qorder), pentagonal_series(qorder))),
        (f"eq2 Zagier identity (qorder {qorder})",
         lambda: mm(ids.zagier_lhs(qorder), ids.zagier_rhs(qorder))),
        (f"eq3 signed count = (q)_inf (enum order {E})",
         lambda: mm(ids.signed_partition_sum(E, W.UNIT), pochhammer_q(INF, E))),
        (f"eq4 (m+n)-weighted sum (enum order {E})",
         lambda: mm(ids.signed_partition_sum(E, W.SUM_MN), ids.weighted_pentagonal_series(E))),
        (f"eq5 m-weighted sum = Zagier lhs (enum order {E})",
         lambda: mm(ids.signed_partition_sum(E, W.LARGEST_PART), ids.zagier_lhs(E))),
        (f"eq6 n-weighted sum = -(q)_inf * Lambert (enum order {E})",
         lambda: mm(ids.signed_partition_sum(E, W.NUM_PARTS), ids.nsum_lhs(E))),
        (f"eq7 x^(m+n)-weighted sum (enum order {min(E, 40)})",
         lambda: mm(ids.signed_partition_sum(min(E, 40), W.X_POWER_MN),
                    ids.x_identity_rhs(min(E, 40), min(E, 40) + 1))),
    ]
    for form in ids.SForm:
        checks.append((
            f"eq8 S(x) {form.value} form (qorder {qorder}, xorder {xorder})",
            lambda form=form: mm(ids.s_series(qorder, xorder, form),
                                 ids.x_identity_rhs(qorder, xorder))))
    checks += [
        (f"recurrence residual (qorder {qorder}, xorder {xorder})",
         lambda: None if ids.recurrence_residual(qorder, xorder).is_zero()
         else "residual is nonzero"),
        (f"differentiation bridge (enum order {E})",
         lambda: mm(ids.diff_bridge(E), ids.signed_partition_sum(E, W.SUM_MN))),
        (f"Franklin involution properties (weight <= {franklin_weight})",
         lambda: _franklin_suite(franklin_weight)),
        (f"pentagonal census (weight <= {franklin_weight})",
         lambda: next((f"weight {r.weight}" for r in ids.pentagonal_census(franklin_weight)
                       if not r.ok or r.exceptional_count != (1 if r.predicted else 0)), None)),
        (f"pairwise cancellation (weight <= {franklin_weight})",
         lambda: next((f"weight {w}" for w in range(franklin_weight + 1)
                       if not ids.cancellation_check(w).ok), None)),
    ]
    for name, (lhs, rhs) in IDENTITY_SCRIPTS.items():
        def run(lhs=lhs, rhs=rhs):
            rep = run_verify(lhs, rhs, qorder, xorder)
            return None if rep.equal else f"first mismatch {rep.first_mismatch}"
        checks.append((f"dsl script {name} (qorder {qorder}, xorder {xorder})", run))
    return checks


def cmd_suite(args, out) -> int:
    failures = 0
    for label, check in suite_checks(args.qorder, args.xorder, args.enum_order,
                                     args.franklin_weight):
        t0 = time.perf_counter()
        try:
            note = check()
        except Exception as exc:  # a crashing check is a failed check
            note = f"{type(exc).__name__}: {exc}"
        dt = time.perf_counter() - t0
        if note is None:
            print(f"PASS  {label}  [{dt:.2f}s]", file=out)
        else:
            failures += 1
            print(f"FAIL  {label}  [{dt:.2f}s]  {note}", file=out)
    print(f"{'all checks passed' if not failures else f'{failures} check(s) failed'}", file=out)
    return EXIT_OK if not failures else EXIT_MISMATCH


def cmd_franklin(args, out) -> int:
    if args.census:
        rows = ids.pentagonal_census(args.max_weight)
        if args.format == "json":
            print(json.dumps([{
                "weight": r.weight, "signed_count": r.signed_count, "predicted": r.predicted,
                "witness": None if r.witness is None else list(r.witness.parts),
            } for r in rows]), file=out)
        else:
            for r in rows:
                wit = "-" if r.witness is None else str(r.witness)
                print(f"{r.weight}\t{r.signed_count}\t{r.predicted}\t{wit}", file=out)
        return EXIT_OK if all(r.ok for r in rows) else EXIT_MISMATCH

    records = []
    for W in range(args.max_weight + 1):
        pairs, exceptional = ids.orbit_pairs(W)
        for p in pairs:
            records.append((W, p.first, p.second))
        for lam in exceptional:
            records.append((W, lam, None))
    if args.format == "json":
        print(json.dumps([{
            "weight": W, "partition": list(lam.parts),
            "image": None if img is None else list(img.parts),
            "class": str(classify_franklin(lam)),
        } for W, lam, img in records]), file=out)
    else:
        for W, lam, img in records:
            right = str(classify_franklin(lam)) if img is None else str(img)
            print(f"{W}\t{lam}\t{right}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="qfranklin",
                        description="Exact q-series identity checks over distinct-part partitions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def orders(sp, need_q=True):
        sp.add_argument("--qorder", type=_nonneg, required=need_q)
        sp.add_argument("--xorder", type=_nonneg, default=0)
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--guard-window", type=_positive, default=DEFAULT_GUARD_WINDOW)

    sp = sub.add_parser("eval", help="print the truncated series of an expression")
    sp.add_argument("expr")
    orders(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("verify", help="compare two expressions coefficientwise")
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    orders(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("suite", help="run the built-in identity checks")
    sp.add_argument("--qorder", type=_nonneg, required=True)
    sp.add_argument("--xorder", type=_nonneg, required=True)
    sp.add_argument("--enum-order", type=_nonneg, default=None,
                    help="cap for enumeration-backed checks (default min(qorder, 60))")
    sp.add_argument("--franklin-weight", type=_nonneg, default=None,
                    help="max weight for involution checks (default min(qorder, 45))")
    sp.set_defaults(func=cmd_suite)

    sp = sub.add_parser("franklin", help="dump Franklin orbits or the pentagonal census")
    sp.add_argument("--max-weight", type=_nonneg, required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--orbits", action="store_true", help="orbit pairs (default)")
    mode.add_argument("--census", action="store_true")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_franklin)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.command == "suite":
        if args.enum_order is None:
            args.enum_order = min(args.qorder, 60)
        if args.franklin_weight is None:
            args.franklin_weight = min(args.qorder, 45)
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
