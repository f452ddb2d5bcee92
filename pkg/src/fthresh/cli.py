"""Batch front end: session files, one subcommand per operation, deterministic reports.

A session file is a single JSON document describing the ring, named ideals,
named elements, and options. Reports are JSON with every numeric an exact
integer or an integer pair (never floats); timings live outside the
digest-checked region so identical inputs produce byte-identical results.

Exit codes: 0 success/pass, 1 check failed, 2 usage error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .frobenius import NuRecord, ThresholdEstimate, nu, threshold_estimate, verify_theorem_A
from .fsing import f_rational_probe, fedder_f_pure, fpt_estimate, tc_member
from .graded import (
    AtLeast,
    gr_of_ideal,
    gr_presentation,
    hilbert_data,
    initial_form,
    ord_of,
    verify_gr_claim,
)
from .ideals import Ideal
from .ring import ParseError, QuotientRing, RingError
from .verifier import (
    check_colon_lemma,
    check_lemma22,
    check_monotonicity,
    check_reduction,
    check_superficial,
    check_theorem_A_randomized,
)


class UsageError(ValueError):
    pass


@dataclass
class Session:
    """Parsed session file: one ring presentation plus named ideals/elements."""

    ring: QuotientRing
    ideals: dict
    elements: dict
    options: dict
    raw_bytes: bytes

    @classmethod
    def load(cls, path: str) -> "Session":
        try:
            with open(path, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read session file {path}: {exc}") from exc
        try:
            data = json.loads(raw.decode("utf-8"))
        except json.JSONDecodeError as exc:
            raise UsageError(
                f"malformed session file {path}: {exc.msg} at line {exc.lineno} column {exc.colno}"
            ) from exc
        for key in ("p", "variables"):
            if key not in data:
                raise UsageError(f"session file is missing the required field {key!r}")
        try:
            ring = QuotientRing(data["p"], data["variables"], data.get("relations", []))
        except (ParseError, RingError) as exc:
            raise UsageError(f"invalid ring data: {exc}") from exc
        names = set()
        ideals = {}
        for name, gens in data.get("ideals", {}).items():
            if name in names:
                raise UsageError(f"duplicate name {name!r}")
            names.add(name)
            ideals[name] = Ideal(ring, gens)
        elements = {}
        for name, text in data.get("elements", {}).items():
            if name in names:
                raise UsageError(f"duplicate name {name!r}")
            names.add(name)
            elements[name] = ring.parse(text)
        if "m" not in ideals:
            ideals["m"] = ring.maximal_ideal()
        return cls(ring, ideals, elements, data.get("options", {}), raw)

    def ideal(self, spec: str) -> Ideal:
        if spec in self.ideals:
            return self.ideals[spec]
        try:
            return Ideal(self.ring, [g.strip() for g in spec.split(",") if g.strip()])
        except (ParseError, RingError) as exc:
            raise UsageError(f"{spec!r} is neither a named ideal nor a generator list: {exc}")

    def element(self, spec: str) -> Polynomial:
        if spec in self.elements:
            return self.elements[spec]
        try:
            return self.ring.parse(spec)
        except ParseError as exc:
            raise UsageError(f"{spec!r} is neither a named element nor an expression: {exc}")


# -- serialization helpers ----------------------------------------------------


def _frac(x) -> list:
    f = Fraction(x)
    return [f.numerator, f.denominator]


def _ser_record(r: NuRecord, mu: int) -> dict:
    return {
        "e": r.e,
        "q": r.q,
        "nu": r.nu,
        "witness": str(r.witness) if r.witness is not None else None,
        "lower": _frac(Fraction(r.nu, r.q)),
        "upper": _frac(Fraction(r.nu + 1 + mu, r.q)),
        "caveats": sorted(r.caveats),
    }


def _ser_estimate(est: ThresholdEstimate) -> dict:
    return {
        "records": [_ser_record(r, est.mu) for r in est.records],
        "mu": est.mu,
        "lower": _frac(est.lower),
        "upper": _frac(est.upper),
        "guess": _frac(est.guess) if est.guess is not None else None,
        "caveats": sorted(est.caveats),
    }


def emit_nu_table(estimate: ThresholdEstimate, path: str) -> None:
    """CSV persistence: exact integer rationals only, never floats."""
    if not path:
        raise UsageError("empty nu-table path")
    if not estimate.records:
        raise UsageError("refusing to emit an empty nu table")
    try:
        fh = open(path, "w", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write nu table to {path}: {exc}") from exc
    with fh:
        writer = csv.writer(fh)
        writer.writerow(["e", "q", "nu", "lower_num", "lower_den", "upper_num", "upper_den"])
        for rec, lower, upper in estimate.row_bounds():
            writer.writerow(
                [rec.e, rec.q, rec.nu, lower.numerator, lower.denominator, upper.numerator, upper.denominator]
            )


def read_nu_table(path: str):
    rows = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            rows.append(
                {
                    "e": int(row["e"]),
                    "q": int(row["q"]),
                    "nu": int(row["nu"]),
                    "lower": Fraction(int(row["lower_num"]), int(row["lower_den"])),
                    "upper": Fraction(int(row["upper_num"]), int(row["upper_den"])),
                }
            )
    return rows


# -- command implementations -----------------------------------------------------


def _cmd_gb(session, args):
    ideal = session.ideal(args.a)
    return 0, {"generators": [str(g) for g in ideal.generators],
               "groebner_basis": [str(g) for g in ideal.groebner_basis()]}


def _cmd_nf(session, args):
    ideal = session.ideal(args.a)
    return 0, {"normal_form": str(ideal.normal_form(session.element(args.x)))}


def _cmd_member(session, args):
    outer = session.ideal(args.a)
    if args.b is None and args.x is None:
        raise UsageError("member requires --x (element) or --b (inner ideal)")
    inner = session.ideal(args.b) if args.b else session.element(args.x)
    return 0, {"contained": outer.contains(inner)}


def _cmd_dim(session, args):
    return 0, {"dimension": session.ring.dimension}


def _cmd_colon(session, args):
    result = session.ideal(args.a).colon(session.ideal(args.b))
    return 0, {"generators": [str(g) for g in result.generators],
               "groebner_basis": [str(g) for g in result.groebner_basis()]}


def _cmd_socle(session, args):
    basis = session.ideal(args.a).socle()
    return 0, {"representatives": [str(r) for r in basis.representatives]}


def _options_degree(session, args):
    if args.degree is not None:
        return args.degree
    return session.options.get("D")


def _cmd_ord(session, args):
    cutoff = _options_degree(session, args) or 8
    value = ord_of(session.element(args.x), session.ring, cutoff)
    if isinstance(value, AtLeast):
        return 0, {"at_least": value.bound}
    return 0, {"ord": value}


def _cmd_initial(session, args):
    cutoff = _options_degree(session, args) or 8
    return 0, {"initial_form": str(initial_form(session.element(args.x), session.ring, cutoff))}


def _cmd_gr(session, args):
    pres = gr_presentation(session.ring, _options_degree(session, args))
    return 0, {
        "method": pres.method,
        "exact": pres.exact,
        "truncation_degree": pres.truncation_degree,
        "initial_relations": [str(g) for g in pres.initial_relations],
    }


def _cmd_gr_ideal(session, args):
    pres = gr_presentation(session.ring, _options_degree(session, args))
    result = gr_of_ideal(session.ideal(args.a), pres)
    return 0, {
        "exact": result.exact,
        "truncation_degree": result.truncation_degree,
        "generators": [str(g) for g in result.ideal.generators],
    }


def _cmd_hilbert(session, args):
    D = _options_degree(session, args) or 6
    return 0, {"values": hilbert_data(session.ring, D).values}


def _cmd_verify_gr(session, args):
    D = _options_degree(session, args)
    claimed = session.ideal(args.a)
    report = verify_gr_claim(list(claimed.generators), session.ring, D)
    code = 0 if report.passed else 1
    return code, {
        "passed": report.passed,
        "reason": report.reason,
        "witnesses": {k: str(v) for k, v in report.witnesses.items()},
        "hilbert_ring": list(report.hilbert_ring),
        "hilbert_claimed": list(report.hilbert_claimed),
    }


def _e_max(session, args, default=3):
    if getattr(args, "e_max", None) is not None:
        return args.e_max
    return session.options.get("e_max", default)


def _cmd_nu(session, args):
    record = nu(session.ideal(args.a), session.ideal(args.J), args.e)
    mu = len(session.ideal(args.a).generators)
    return 0, _ser_record(record, mu)


def _cmd_threshold(session, args):
    est = threshold_estimate(
        session.ideal(args.a),
        session.ideal(args.J),
        _e_max(session, args),
        args.max_denominator or session.options.get("max_denominator", 10**6),
    )
    if args.out and args.out.endswith(".csv"):
        emit_nu_table(est, args.out)
    return 0, _ser_estimate(est)


def _cmd_verify_thmA(session, args):
    report = verify_theorem_A(
        session.ring, session.ideal(args.b or "m"), _e_max(session, args, 2),
        _options_degree(session, args),
    )
    code = {"pass": 0, "fail": 1, "inconclusive": 3}[report.verdict]
    payload = {
        "verdict": report.verdict,
        "reason": report.reason,
        "nu_table": [list(row) for row in report.nu_table],
        "caveats": sorted(report.caveats),
    }
    if report.local_estimate:
        payload["local"] = _ser_estimate(report.local_estimate)
        payload["graded"] = _ser_estimate(report.graded_estimate)
    if report.counterexample:
        payload["counterexample"] = report.counterexample
    return code, payload


def _cmd_fedder(session, args):
    return 0, {"f_pure": fedder_f_pure(session.ring)}


def _cmd_fpt(session, args):
    est = fpt_estimate(
        session.ideal(args.a),
        _e_max(session, args),
        args.max_denominator or session.options.get("max_denominator", 10**6),
    )
    return 0, {
        "records": [{"e": e, "q": q, "b": b} for e, q, b in est.records],
        "mu": est.mu,
        "lower": _frac(est.lower),
        "upper": _frac(est.upper),
        "guess": _frac(est.guess) if est.guess is not None else None,
        "caveats": sorted(est.caveats),
    }


def _cmd_tc(session, args):
    verdict = tc_member(
        session.element(args.x),
        session.ideal(args.J),
        session.element(args.c),
        _e_max(session, args),
        bool(session.options.get("assume_domain", False)),
    )
    return 0, {
        "kind": verdict.kind,
        "witness_e": verdict.witness_e,
        "checked_through": verdict.checked_through,
        "assumptions": sorted(verdict.assumptions),
    }


def _cmd_frational(session, args):
    report = f_rational_probe(
        session.ideal(args.J),
        session.element(args.c),
        _e_max(session, args),
        bool(session.options.get("assume_domain", False)),
    )
    return 0, {
        "verdict": report.verdict,
        "dimension": report.dimension,
        "socle": [
            {
                "representative": probe.representative,
                "kind": probe.verdict.kind,
                "witness_e": probe.verdict.witness_e,
                "checked_through": probe.verdict.checked_through,
                "threshold": _ser_estimate(probe.threshold),
                "excludes_dimension": probe.excludes_dimension,
            }
            for probe in report.socle_probes
        ],
        "assumptions": sorted(report.assumptions),
        "caveats": sorted(report.caveats),
        "test_element_suggestions": list(report.test_element_suggestions),
    }


def _cmd_check(session, args):
    name = args.name
    seed = args.seed if args.seed is not None else session.options.get("seed", 0)
    trials = args.trials or 10
    e_max = _e_max(session, args, 2)
    bound = _options_degree(session, args) or 3

    def need(flag):
        value = getattr(args, flag)
        if value is None:
            raise UsageError(f"check {name} requires --{flag}")
        return value

    if name == "colon-lemma":
        report = check_colon_lemma(session.ring, session.element(need("x")), bound)
    elif name == "reduction":
        report = check_reduction(session.ideal(need("a")), max(bound, 4))
    elif name == "superficial":
        report = check_superficial(session.element(need("x")), bound, max(bound + 1, 4))
    elif name == "lemma22":
        report = check_lemma22(session.ideal(need("a")), session.ideal(need("b")))
    elif name == "monotonicity":
        report = check_monotonicity(session.ring, trials, e_max, seed)
    elif name == "theoremA":
        report = check_theorem_A_randomized(session.ring.p, trials, e_max, seed)
    else:
        raise UsageError(f"unknown check {name!r}")
    code = {"pass": 0, "fail": 1, "inconclusive": 3}[report.verdict]
    return code, {
        "name": report.name,
        "verdict": report.verdict,
        "inputs": {k: str(v) for k, v in report.inputs.items()},
        "witnesses": json.loads(json.dumps(report.witnesses, default=str)),
        "seeds": report.seeds,
        "details": json.loads(json.dumps(report.details, default=str)),
    }


def _cmd_report(args):
    with open(args.path) as fh:
        stored = json.load(fh)
    body = stored.get("report", {})
    claimed = stored.get("digest")
    actual = _digest_report(body)
    ok = claimed == actual
    return (0 if ok else 1), {"path": args.path, "digest_ok": ok, "expected": actual, "found": claimed}


# -- driver -----------------------------------------------------------------------


_COMMANDS = {
    "gb": (_cmd_gb, ["a"]),
    "nf": (_cmd_nf, ["x", "a"]),
    "member": (_cmd_member, ["a"]),
    "dim": (_cmd_dim, []),
    "colon": (_cmd_colon, ["a", "b"]),
    "socle": (_cmd_socle, ["a"]),
    "ord": (_cmd_ord, ["x"]),
    "initial": (_cmd_initial, ["x"]),
    "gr": (_cmd_gr, []),
    "gr-ideal": (_cmd_gr_ideal, ["a"]),
    "hilbert": (_cmd_hilbert, []),
    "verify-gr": (_cmd_verify_gr, ["a"]),
    "nu": (_cmd_nu, ["a", "J", "e"]),
    "threshold": (_cmd_threshold, ["a", "J"]),
    "verify-thmA": (_cmd_verify_thmA, []),
    "fedder": (_cmd_fedder, []),
    "fpt": (_cmd_fpt, ["a"]),
    "tc": (_cmd_tc, ["x", "J", "c"]),
    "frational": (_cmd_frational, ["J", "c"]),
    "check": (_cmd_check, ["name"]),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fthresh",
        description="Frobenius invariants of local rings over prime fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--session", required=True)
        p.add_argument("--a")
        p.add_argument("--J")
        p.add_argument("--b")
        p.add_argument("--x")
        p.add_argument("--c")
        p.add_argument("--e", type=int)
        p.add_argument("--e-max", dest="e_max", type=int)
        p.add_argument("--degree", type=int)
        p.add_argument("--trials", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--max-denominator", dest="max_denominator", type=int)
        p.add_argument("--name")
        p.add_argument("--out")
    rp = sub.add_parser("report")
    rp.add_argument("path")
    rp.add_argument("--out")
    return parser


def _digest_report(body: dict) -> str:
    return hashlib.sha256(json.dumps(body, sort_keys=True).encode("utf-8")).hexdigest()


def run(argv) -> tuple[int, dict]:
    """Execute one command; returns (exit code, full report document)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        raise UsageError(f"invalid arguments: {argv!r}")
    started = time.monotonic()
    if args.command == "report":
        code, results = _cmd_report(args)
        session_digest = None
    else:
        handler, required = _COMMANDS[args.command]
        for field_name in required:
            if getattr(args, field_name.replace("-", "_"), None) is None:
                raise UsageError(f"{args.command} requires --{field_name}")
        session = Session.load(args.session)
        code, results = handler(session, args)
        session_digest = hashlib.sha256(session.raw_bytes).hexdigest()
    body = {
        "command": list(argv),
        "tool_version": __version__,
        "inputs_digest": session_digest,
        "results": results,
    }
    document = {
        "report": body,
        "digest": _digest_report(body),
        "timings": {"seconds": round(time.monotonic() - started, 6)},
    }
    if getattr(args, "out", None) and not (args.command == "threshold" and args.out.endswith(".csv")):
        try:
            with open(args.out, "w") as fh:
                json.dump(document, fh, indent=2, sort_keys=True)
                fh.write("\n")
        except OSError as exc:
            raise UsageError(f"cannot write report to {args.out}: {exc}") from exc
    return code, document


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        code, document = run(argv)
    except UsageError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except (ParseError, RingError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    print(json.dumps(document, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
