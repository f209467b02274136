"""Command-line front end.

Commands: dims, dual, koszul, tor, confluence, mt, hilbert, hecke-verify.
An algebra comes either from inline flags (--family, --p, --q, -N, ...) or
from a small line-oriented spec document (--spec FILE, '-' for stdin):

    family = quantum
    N = 2
    format = 0 1
    q[1,2] = 1/2

Rationals are written as strings "a/b" to stay exact.  Reports print a human
table plus stable machine-readable lines prefixed "#machine/v1:".  Exit codes:
0 all verdicts pass, 1 a mathematical verdict failed (or was inconclusive),
2 bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .hecke import dj_operator, supersymmetry_operator, verify_hecke_operator
from .homogeneous import (
    HomogAlgebra,
    custom_algebra,
    n_symmetric,
    quantum_superspace,
    s_operator_algebra,
    lambda_operator_algebra,
    tensor_algebra,
    yang_mills,
)
from .koszul import (
    confluence_check,
    extra_condition_check,
    hilbert_series,
    koszul_check,
    koszul_duality_check,
    tor_dims,
)
from .macmahon import DEFAULT_TRUNCATION_CEILING, closed_form_hilbert, master_verify
from .tensorspace import SuperSpace

MACHINE_PREFIX = "#machine/v1:"
FAMILIES = ("tensor", "quantum", "yang_mills", "n_symmetric", "lambda_RN", "s_RN", "custom")
COMMANDS = ("dims", "dual", "koszul", "tor", "confluence", "mt", "hilbert", "hecke-verify")


class SpecError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass
class AlgebraSpec:
    family: str
    N: int = 2
    fmt: tuple = ()
    q_table: dict = field(default_factory=dict)  # (i, j) -> Fraction, i < j
    g_diag: list = field(default_factory=list)
    hecke_q: Fraction = Fraction(1)
    relations: list = field(default_factory=list)  # list of [(coeff, word), ...]

    def render(self) -> str:
        lines = [f"family = {self.family}", f"N = {self.N}"]
        lines.append("format = " + " ".join(str(x) for x in self.fmt))
        for (i, j) in sorted(self.q_table):
            lines.append(f"q[{i},{j}] = {self.q_table[(i, j)]}")
        if self.g_diag:
            lines.append("G = " + " ".join(str(x) for x in self.g_diag))
        if self.family in ("lambda_RN", "s_RN"):
            lines.append(f"hecke_q = {self.hecke_q}")
        for rel in self.relations:
            chunks = [f"{c} : " + " ".join(str(a) for a in w) for c, w in rel]
            lines.append("relation = " + " ; ".join(chunks))
        return "\n".join(lines) + "\n"


def _parse_fraction(text: str, line=None) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError(f"bad rational {text!r}: {exc}", line)


def parse_spec(text: str) -> AlgebraSpec:
    """Parse and validate a spec document; raises SpecError with a line
    number on malformed input."""
    data: dict = {"q_table": {}, "relations": []}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise SpecError("expected 'key = value'", lineno)
        key, value = (part.strip() for part in stripped.split("=", 1))
        if key == "family":
            if value not in FAMILIES:
                raise SpecError(f"unknown family {value!r}", lineno)
            data["family"] = value
        elif key == "N":
            try:
                data["N"] = int(value)
            except ValueError:
                raise SpecError(f"bad integer {value!r}", lineno)
        elif key == "format":
            try:
                data["fmt"] = tuple(int(x) for x in value.split())
            except ValueError:
                raise SpecError(f"bad format {value!r}", lineno)
            if any(x not in (0, 1) for x in data["fmt"]):
                raise SpecError("format entries must be 0 or 1", lineno)
        elif key in ("p", "q") and value.isdigit():
            data[key] = int(value)
        elif key.startswith("q[") and key.endswith("]"):
            inner = key[2:-1]
            try:
                i, j = (int(x) for x in inner.split(","))
            except ValueError:
                raise SpecError(f"bad q-table key {key!r}", lineno)
            if not i < j:
                raise SpecError("q-table keys need i < j", lineno)
            frac = _parse_fraction(value, lineno)
            if frac == 0:
                raise SpecError("quantum parameters must be nonzero", lineno)
            data["q_table"][(i, j)] = frac
        elif key == "G":
            data["g_diag"] = [_parse_fraction(x, lineno) for x in value.split()]
        elif key == "hecke_q":
            frac = _parse_fraction(value, lineno)
            if frac == 0:
                raise SpecError("the Hecke parameter must be nonzero", lineno)
            data["hecke_q"] = frac
        elif key == "relation":
            rel = []
            for chunk in value.split(";"):
                if ":" not in chunk:
                    raise SpecError("relation term needs 'coeff : letters'", lineno)
                coeff_text, word_text = chunk.split(":", 1)
                coeff = _parse_fraction(coeff_text, lineno)
                try:
                    word = tuple(int(x) for x in word_text.split())
                except ValueError:
                    raise SpecError(f"bad index sequence {word_text!r}", lineno)
                rel.append((coeff, word))
            data["relations"].append(rel)
        else:
            raise SpecError(f"unknown key {key!r}", lineno)
    if "family" not in data:
        raise SpecError("missing 'family'")
    if "fmt" not in data:
        p, q = data.pop("p", None), data.pop("q", None)
        if p is None and q is None:
            raise SpecError("missing 'format' (or p/q)")
        data["fmt"] = (0,) * (p or 0) + (1,) * (q or 0)
    else:
        data.pop("p", None)
        data.pop("q", None)
    spec = AlgebraSpec(**data)
    _validate_spec(spec)
    return spec


def _validate_spec(spec: AlgebraSpec):
    d = len(spec.fmt)
    if d == 0:
        raise SpecError("the format must name at least one generator")
    if spec.N < 2:
        raise SpecError("N must be at least 2")
    for (i, j) in spec.q_table:
        if not (1 <= i < j <= d):
            raise SpecError(f"q-table key ({i},{j}) out of range for d={d}")
    if spec.family == "yang_mills":
        if spec.N != 3:
            raise SpecError("yang_mills algebras are cubic: N must be 3")
        if spec.g_diag and len(spec.g_diag) != d:
            raise SpecError(f"G needs {d} diagonal entries")
        if any(x == 0 for x in spec.g_diag):
            raise SpecError("G entries must be nonzero")
    if spec.family == "quantum" and spec.N != 2:
        raise SpecError("quantum superspace is quadratic: N must be 2")
    if spec.family == "custom":
        if not spec.relations:
            raise SpecError("custom algebras need at least one relation")
        for rel in spec.relations:
            for _, word in rel:
                if len(word) != spec.N:
                    raise SpecError(
                        f"relation degree must equal N: word {word} has length {len(word)}"
                    )
                if any(not 1 <= a <= d for a in word):
                    raise SpecError(f"letters of {word} must lie in 1..{d}")


def build_algebra(spec: AlgebraSpec) -> HomogAlgebra:
    fmt = spec.fmt
    if spec.family == "tensor":
        return tensor_algebra(fmt, spec.N)
    if spec.family == "quantum":
        return quantum_superspace(fmt, spec.q_table)
    if spec.family == "yang_mills":
        return yang_mills(fmt, spec.g_diag or None)
    if spec.family == "n_symmetric":
        return n_symmetric(fmt, spec.N)
    if spec.family in ("lambda_RN", "s_RN"):
        space = SuperSpace(fmt)
        op = dj_operator(space.p, space.q, spec.hecke_q)
        if tuple(space.format) != tuple(op.space.format):
            raise SpecError("lambda_RN/s_RN require the standard format (evens first)")
        builder = lambda_operator_algebra if spec.family == "lambda_RN" else s_operator_algebra
        return builder(op, spec.N)
    if spec.family == "custom":
        return custom_algebra(fmt, spec.N, spec.relations)
    raise SpecError(f"unknown family {spec.family!r}")


@dataclass
class Report:
    command: str
    human: list = field(default_factory=list)
    machine: list = field(default_factory=list)
    verdict_fail: bool = False
    started: float = field(default_factory=time.perf_counter)

    def say(self, text=""):
        self.human.append(text)

    def record(self, **kv):
        chunk = " ".join(f"{k}={v}" for k, v in kv.items())
        self.machine.append(f"{MACHINE_PREFIX} {self.command} {chunk}")

    def print(self, stream=None):
        stream = stream or sys.stdout
        elapsed = time.perf_counter() - self.started
        for line in self.human:
            print(line, file=stream)
        for line in self.machine:
            print(line, file=stream)
        print(f"{MACHINE_PREFIX} {self.command} elapsed_s={elapsed:.3f}", file=stream)


def run(command: str, spec: AlgebraSpec | None, options: dict) -> tuple[Report, int]:
    """Dispatch one command; returns the report and the exit code."""
    report = Report(command)
    order = options.get("order", 6)
    try:
        handler = _HANDLERS[command]
    except KeyError:
        raise SpecError(f"unknown command {command!r}")
    handler(report, spec, options, order)
    return report, (1 if report.verdict_fail else 0)


def _cmd_dims(report, spec, options, order):
    A = build_algebra(spec)
    report.say(f"graded dimensions of {A.label}")
    for n in range(order + 1):
        dim = A.dim_component(n)
        report.say(f"deg {n}: dim={dim}")
        report.record(deg=n, dim=dim)


def _cmd_dual(report, spec, options, order):
    A = build_algebra(spec)
    dual = A.dual_algebra()
    report.say(f"graded dimensions of the dual of {A.label}")
    for n in range(order + 1):
        dim = dual.dim_component(n)
        report.say(f"deg {n}: dim={dim}")
        report.record(deg=n, dim=dim)


def _cmd_confluence(report, spec, options, order):
    A = build_algebra(spec)
    conf = confluence_check(A)
    extra = extra_condition_check(A)
    report.say(f"rewriting checks for {A.label}")
    report.say(str(conf))
    report.say(str(extra))
    for i, lhs, rhs in conf.entries:
        report.record(check="confluence", overlap=i, lhs=lhs, rhs=rhs,
                      verdict="PASS" if lhs <= rhs else "FAIL")
    if extra.vacuous:
        report.record(check="extra_condition", verdict="PASS", vacuous=1)
    for n, ok, defect in extra.entries:
        report.record(check="extra_condition", n=n, verdict="PASS" if ok else "FAIL",
                      defect=defect)
    report.verdict_fail = not (conf.passed and extra.passed)


def _cmd_koszul(report, spec, options, order):
    A = build_algebra(spec)
    report.say(f"Koszul check for {A.label} through total degree {order}")
    extra = extra_condition_check(A)
    if not extra.passed:
        n, _, defect = next(e for e in extra.entries if not e[1])
        report.say(str(extra))
        report.say(f"verdict: FAIL (extra condition fails at n={n}; the algebra cannot be Koszul)")
        report.record(verdict="FAIL", witness="extra_condition", n=n, defect=defect)
        report.verdict_fail = True
        return
    duality = koszul_duality_check(A, order)
    if not duality.passed:
        bad = next(n for n in range(1, order + 1) if duality.product.coeffs[n] != 0)
        report.say(str(duality))
        report.say(
            f"verdict: FAIL (Hilbert-series duality breaks at t^{bad}; the algebra cannot be Koszul)"
        )
        report.record(verdict="FAIL", witness="duality", n=bad)
        report.verdict_fail = True
        return
    conf = confluence_check(A)
    if not conf.passed:
        report.say(str(conf))
        report.say("verdict: inconclusive (non-confluent basis/order; exactness not computable here)")
        report.record(verdict="INCONCLUSIVE", witness="confluence")
        report.verdict_fail = True
        return
    verdict = koszul_check(A, order)
    report.say(str(verdict))
    report.say(str(duality))
    for i, n, defect in verdict.failures:
        report.record(verdict="FAIL", i=i, n=n, defect=defect)
    if verdict.passed:
        report.record(verdict="PASS", deg_max=order)
    report.record(check="duality", verdict="PASS")
    report.verdict_fail = not verdict.passed


def _cmd_tor(report, spec, options, order):
    A = build_algebra(spec)
    i_max = options.get("i_max", 4)
    table = tor_dims(A, i_max, order)
    report.say(f"Tor dimensions for {A.label} (rows i=0..{i_max}, degrees 0..{order})")
    report.say(str(table))
    for i in range(i_max + 1):
        for n in range(order + 1):
            dim = table.dim(i, n)
            if dim:
                report.record(i=i, deg=n, dim=dim)


def _cmd_mt(report, spec, options, order):
    p, q, N = options["p"], options["q"], options.get("N", 2)
    ceiling = options.get("ceiling") or int(
        os.environ.get("SUPERKOSZUL_MT_CEILING", DEFAULT_TRUNCATION_CEILING)
    )
    result = master_verify(p, q, N, order, ceiling=ceiling)
    status = "PASS" if result.passed else "FAIL"
    report.say(f"MT identity: {status} (order {order})")
    report.say(f"left factor:  {result.left}")
    report.say(f"right factor: {result.right}")
    report.record(p=p, q=q, N=N, order=order, verdict=status)
    report.verdict_fail = not result.passed


def _cmd_hilbert(report, spec, options, order):
    A = build_algebra(spec)
    series = hilbert_series(A, order)
    report.say(f"Hilbert series of {A.label}: {series}")
    for n in range(order + 1):
        report.record(deg=n, dim=series.coeffs[n])
    if spec.family == "n_symmetric":
        space = SuperSpace(spec.fmt)
        closed = closed_form_hilbert(space.p, space.q, spec.N, order, kind="dim")
        match = all(closed.coeffs[n] == series.coeffs[n] for n in range(order + 1))
        report.say(f"closed-form comparison: {'PASS' if match else 'FAIL'}")
        report.record(check="closed_form", verdict="PASS" if match else "FAIL")
        report.verdict_fail = not match


def _cmd_hecke_verify(report, spec, options, order):
    kind = options.get("operator", "dj")
    p, q = options["p"], options["q"]
    if kind == "dj":
        op = dj_operator(p, q, options.get("q_param", Fraction(1)))
    elif kind == "supersymmetry":
        op = supersymmetry_operator(SuperSpace.standard(p, q))
    else:
        raise SpecError(f"unknown operator kind {kind!r}")
    result = verify_hecke_operator(op)
    report.say(f"checks for {op.label} (associated q = {op.q})")
    report.say(str(result))
    report.record(
        operator=kind,
        even="PASS" if result.even else "FAIL",
        hecke="PASS" if result.hecke_equation else "FAIL",
        yang_baxter="PASS" if result.yang_baxter else "FAIL",
    )
    report.verdict_fail = not result.passed


_HANDLERS = {
    "dims": _cmd_dims,
    "dual": _cmd_dual,
    "koszul": _cmd_koszul,
    "tor": _cmd_tor,
    "confluence": _cmd_confluence,
    "mt": _cmd_mt,
    "hilbert": _cmd_hilbert,
    "hecke-verify": _cmd_hecke_verify,
}

_NEEDS_ALGEBRA = {"dims", "dual", "koszul", "tor", "confluence", "hilbert"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superkoszul",
        description="exact computations with N-homogeneous superalgebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--spec", help="algebra spec file ('-' for stdin)")
        cmd.add_argument("--family", choices=FAMILIES)
        cmd.add_argument("--p", type=int, help="number of even generators")
        cmd.add_argument("--q", type=int, help="number of odd generators")
        cmd.add_argument("--format", dest="fmt", help="parity list, e.g. '0,0,1'")
        cmd.add_argument("-N", dest="N", type=int, default=None, help="relation degree")
        cmd.add_argument("--order", type=int, default=6, help="truncation / degree bound")
        cmd.add_argument("--q-param", dest="q_param", default=None,
                         help="Hecke parameter as an exact rational, e.g. 1/2")
        cmd.add_argument("--G", dest="g_diag", default=None,
                         help="diagonal metric entries, e.g. '1,1,-1'")
        if name == "tor":
            cmd.add_argument("--i-max", dest="i_max", type=int, default=4)
        if name == "hecke-verify":
            cmd.add_argument("--operator", choices=("dj", "supersymmetry"), default="dj")
        if name == "mt":
            cmd.add_argument("--ceiling", type=int, default=None,
                             help="override the truncation cost ceiling")
    return parser


def _spec_from_args(args) -> AlgebraSpec | None:
    if args.spec:
        text = sys.stdin.read() if args.spec == "-" else open(args.spec).read()
        return parse_spec(text)
    if args.family is None:
        return None
    if args.fmt:
        fmt = tuple(int(x) for x in args.fmt.replace(",", " ").split())
    else:
        fmt = (0,) * (args.p or 0) + (1,) * (args.q or 0)
    spec = AlgebraSpec(family=args.family, N=args.N or (3 if args.family == "yang_mills" else 2), fmt=fmt)
    if args.q_param:
        spec.hecke_q = Fraction(args.q_param)
    if args.g_diag:
        spec.g_diag = [Fraction(x) for x in args.g_diag.replace(",", " ").split()]
    _validate_spec(spec)
    return spec


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        spec = _spec_from_args(args)
        if args.command in _NEEDS_ALGEBRA and spec is None:
            raise SpecError("this command needs an algebra: give --family or --spec")
        if args.command in ("mt", "hecke-verify") and (args.p is None or args.q is None):
            raise SpecError("this command needs --p and --q")
        options = {
            "order": args.order,
            "p": args.p,
            "q": args.q,
            "N": args.N or 2,
            "i_max": getattr(args, "i_max", 4),
            "operator": getattr(args, "operator", "dj"),
            "ceiling": getattr(args, "ceiling", None),
        }
        if args.q_param:
            options["q_param"] = Fraction(args.q_param)
        report, code = run(args.command, spec, options)
    except SpecError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    report.print()
    return code


if __name__ == "__main__":
    sys.exit(main())
