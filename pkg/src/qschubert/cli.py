"""Command-line front end.

Exit codes: 0 success (empty products and conjecture counterexamples
included), 1 usage error, 2 a proven statement failed verification,
3 two computation routes disagreed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .core import RectContext, make_partition
from .lr import SkewTableau, enumerate_lr_fillings, lr_coefficient, reading_word, schubert_product
from .quantum import OracleDisagreement, extremal_data, quantum_product
from .render import RENDER_FORMATS, RENDER_KINDS, render
from .slide import quantum_slide, slide
from .verify import CHECKS, run_check

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_USAGE, EXIT_PROPOSITION, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass
class OutputRecord:
    command: str
    context: dict
    payload: dict
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> str:
        doc = {"schema_version": self.schema_version, "command": self.command,
               "context": self.context, "payload": self.payload}
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        doc = json.loads(text)
        return cls(command=doc["command"], context=doc["context"], payload=doc["payload"],
                   schema_version=doc["schema_version"])


class UsageError(Exception):
    pass


def parse_partition(text: str) -> tuple:
    """Parse '4,3,1' into (4, 3, 1); the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    parts = []
    for i, tok in enumerate(text.split(","), 1):
        tok = tok.strip()
        try:
            value = int(tok)
        except ValueError:
            raise UsageError(f"part {i} ({tok!r}) is not an integer") from None
        if value < 0:
            raise UsageError(f"part {i} ({value}) is negative")
        if parts and value > parts[-1]:
            raise UsageError(f"part {i} ({value}) exceeds the previous part {parts[-1]}")
        parts.append(value)
    return make_partition(parts)


def fmt_partition(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _sigma(lam) -> str:
    return "σ" + fmt_partition(lam)


def _fits(ctx, lam, name):
    if not ctx.fits(lam):
        raise UsageError(f"--{name} {fmt_partition(lam)} does not fit the {ctx.k}x{ctx.width} rectangle")
    return lam


def _tableau_payload(t: SkewTableau) -> dict:
    return {"outer": list(t.shape.outer), "inner": list(t.shape.inner),
            "rows": t.rows(), "reading_word": list(reading_word(t))}


def _trace_payload(trace) -> list:
    return [{"stage": name, "grid": diagram.grid()} for name, diagram in trace.stages]


# -- commands ---------------------------------------------------------------
# Each returns (payload, text, exit code).

def cmd_product(ctx, args):
    lam, mu = _fits(ctx, args.lam, "lambda"), _fits(ctx, args.mu, "mu")
    terms = schubert_product(lam, mu, ctx).sorted_terms()
    payload = {"lambda": list(lam), "mu": list(mu),
               "terms": [{"partition": list(nu), "coefficient": c} for nu, c in terms]}
    text = " + ".join((f"{c}·" if c != 1 else "") + _sigma(nu) for nu, c in terms) or "0"
    return payload, text + "\n", EXIT_OK


def cmd_qproduct(ctx, args):
    lam, mu = _fits(ctx, args.lam, "lambda"), _fits(ctx, args.mu, "mu")
    terms = quantum_product(lam, mu, ctx).sorted_terms()
    payload = {"lambda": list(lam), "mu": list(mu),
               "terms": [{"degree": d, "partition": list(nu), "coefficient": c}
                         for (d, nu), c in terms]}
    pieces = []
    for (d, nu), c in terms:
        q = "" if d == 0 else ("q·" if d == 1 else f"q^{d}·")
        pieces.append((f"{c}·" if c != 1 else "") + q + _sigma(nu))
    return payload, " + ".join(pieces) + "\n", EXIT_OK


def cmd_bounds(ctx, args):
    lam, mu = _fits(ctx, args.lam, "lambda"), _fits(ctx, args.mu, "mu")
    ext = extremal_data(lam, mu, ctx)
    payload = {"lambda": list(lam), "mu": list(mu), "d_min": ext.d_min, "d_max": ext.d_max,
               "a": ext.a, "b": ext.b,
               "lambda_min": list(ext.lambda_min), "mu_min": list(ext.mu_min),
               "lambda_max": list(ext.lambda_max), "mu_max": list(ext.mu_max)}
    text = (f"d_min = {ext.d_min} (a = {ext.a}): lambda_min = {fmt_partition(ext.lambda_min)}, "
            f"mu_min = {fmt_partition(ext.mu_min)}\n"
            f"d_max = {ext.d_max} (b = {ext.b}): lambda_max = {fmt_partition(ext.lambda_max)}, "
            f"mu_max = {fmt_partition(ext.mu_max)}\n")
    return payload, text, EXIT_OK


def cmd_nu(ctx, args):
    lam, mu = _fits(ctx, args.lam, "lambda"), _fits(ctx, args.mu, "mu")
    if args.d is None:
        try:
            nu, witness, trace = slide(lam, mu, ctx)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        extra = {}
    else:
        try:
            qs = quantum_slide(lam, mu, args.d, ctx)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        nu, witness, trace = qs.nu, qs.witness, qs.trace
        extra = {"nu_tilde": list(qs.nu_tilde)}
    payload = {"lambda": list(lam), "mu": list(mu), "d": args.d, "nu": list(nu),
               "witness": _tableau_payload(witness), "trace": _trace_payload(trace), **extra}
    lines = [f"nu = {fmt_partition(nu)}", "witness rows:"]
    lines += ["  " + " ".join(map(str, row)) for row in witness.rows()]
    if args.trace:
        for name, diagram in trace.stages:
            lines.append(f"{name}:")
            lines += ["  " + row for row in diagram.grid()]
    return payload, "\n".join(lines) + "\n", EXIT_OK


def cmd_lrcoef(ctx, args):
    c = lr_coefficient(args.lam, args.mu, args.nu)
    payload = {"lambda": list(args.lam), "mu": list(args.mu), "nu": list(args.nu), "coefficient": c}
    text = f"{c}\n"
    if args.fillings:
        fills = [_tableau_payload(t) for t in enumerate_lr_fillings(args.lam, args.mu, args.nu)]
        fills.sort(key=lambda f: f["reading_word"])
        payload["fillings"] = fills
        for f in fills:
            text += "  " + " | ".join(" ".join(map(str, r)) for r in f["rows"]) + "\n"
    return payload, text, EXIT_OK


def cmd_verify(ctx, args):
    names = CHECKS if args.checks == "all" else tuple(args.checks.split(","))
    for name in names:
        if name not in CHECKS:
            raise UsageError(f"unknown check {name!r}; choose from all, {', '.join(CHECKS)}")
    reports = [run_check(name, ctx, jobs=args.jobs, unordered=args.unordered) for name in names]
    code = EXIT_OK
    lines = []
    for r in reports:
        lines.append(f"{r.check_name:<11} {r.status:<7} cases={r.cases_run} skipped={r.skipped} "
                     f"failures={len(r.failures)} anomalies={len(r.anomalies)}"
                     + (f" elapsed={r.elapsed:.2f}s" if args.timing else ""))
        for f in r.failures:
            label = "counterexample" if r.conjecture else "FAILURE"
            lines.append(f"  {label}: {json.dumps(f, sort_keys=True)}")
        for a in r.anomalies:
            lines.append(f"  anomaly: {json.dumps(a, sort_keys=True)}")
        if r.observations:
            lines.append("  observed: " + " ".join(f"{k}={v}" for k, v in sorted(r.observations.items())))
        if any(f.get("expected") == "consistent" for f in r.failures):
            # two routes to the same invariant disagreed: a bug, not a mathematical result
            code = max(code, EXIT_INTERNAL)
        elif r.failures and not r.conjecture:
            code = max(code, EXIT_PROPOSITION)
    payload = {"reports": [r.to_dict(timing=args.timing) for r in reports]}
    return payload, "\n".join(lines) + "\n", code


def cmd_render(ctx, args):
    lam = _fits(ctx, args.lam, "lambda")
    mu = None if args.mu is None else _fits(ctx, args.mu, "mu")
    try:
        doc = render(args.kind, args.diagram, ctx, lam, mu, args.d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"kind": args.kind, "diagram_format": args.diagram, "lambda": list(lam),
               "mu": None if mu is None else list(mu), "d": args.d, "document": doc}
    return payload, doc, EXIT_OK


COMMANDS = {
    "product": cmd_product, "qproduct": cmd_qproduct, "bounds": cmd_bounds,
    "nu": cmd_nu, "lrcoef": cmd_lrcoef, "verify": cmd_verify, "render": cmd_render,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _partition_arg(text):
    try:
        return parse_partition(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-k", type=int, help="dimension of the subspaces")
    common.add_argument("-n", type=int, help="dimension of the ambient space")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify")

    parser = _Parser(prog="qschubert", description="Schubert calculus in Grassmannians.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair(p, need_mu=True):
        p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
        p.add_argument("--mu", dest="mu", type=_partition_arg, required=need_mu)

    for name in ("product", "qproduct", "bounds"):
        pair(sub.add_parser(name, parents=[common]))
    p = sub.add_parser("nu", parents=[common])
    pair(p)
    p.add_argument("-d", type=int, default=None, help="quantum degree")
    p.add_argument("--trace", action="store_true", help="show the slide stages")
    p = sub.add_parser("lrcoef", parents=[common])
    pair(p)
    p.add_argument("--nu", dest="nu", type=_partition_arg, required=True)
    p.add_argument("--fillings", action="store_true", help="list the LR fillings")
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--checks", default="all", help="'all' or a comma list of: " + ", ".join(CHECKS))
    p.add_argument("--unordered", action="store_true", help="only pairs with lambda <= mu")
    p.add_argument("--timing", action="store_true", help="include elapsed times")
    p = sub.add_parser("render", parents=[common])
    pair(p, need_mu=False)
    p.add_argument("-d", type=int, default=None, help="shift / degree / rotation index")
    p.add_argument("--kind", choices=RENDER_KINDS, required=True)
    p.add_argument("--diagram", choices=RENDER_FORMATS, default="ascii")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "lrcoef":
            ctx = RectContext(args.k, args.n) if args.k is not None and args.n is not None else None
        else:
            if args.k is None or args.n is None:
                raise UsageError("-k and -n are required")
            try:
                ctx = RectContext(args.k, args.n)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        payload, text, code = COMMANDS[args.command](ctx, args)
    except UsageError as exc:
        print(f"qschubert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleDisagreement as exc:
        print(f"qschubert: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "structured":
        context = {"k": ctx.k, "n": ctx.n} if ctx is not None else None
        sys.stdout.write(OutputRecord(args.command, context, payload).to_json())
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
