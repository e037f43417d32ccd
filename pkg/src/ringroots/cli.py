"""Command-line front end: JSON in, JSON out.

Subcommands: construct, quadratic, degree-n, verify, cross-check.
The input document comes from --input PATH or stdin; results go to
stdout, diagnostics to stderr.  Exit codes are a stable contract:

    0   success
    1   verification found nonzero residuals / cross-check disagreement
    2   construction obstructed (non-invertible, nonzero evaluation)
    3   no polynomial of the requested shape exists
    64  malformed input (JSON or argument syntax)
    65  semantic error (ring mismatch, equal roots, wrong ring kind)
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .construct import construct_with_roots, verify_roots
from .errors import DomainError, MismatchError, ParseError
from .existence import CriterionReport, constant_term, degree_n_existence, quadratic_existence
from .oracle import cross_check_criterion
from .polynomials import Polynomial
from .rings import MatrixRing, Ring, ring_from_json

EX_OK = 0
EX_RESIDUAL = 1
EX_OBSTRUCTED = 2
EX_NOT_FOUND = 3
EX_PARSE = 64
EX_SEMANTIC = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse's default error path exits with code 2, which this tool
    # reserves for obstructed constructions; route usage errors to 64.
    def error(self, message):
        raise _UsageError(message)


@dataclass
class JobSpec:
    """Decoded input document for one command."""

    command: str
    ring: Ring | None
    elements: tuple
    polynomial: Polynomial | None
    n: int | None


def _read_document(args):
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return json.loads(text)


def _decode_elements(ring, document, minimum=1, exactly=None):
    raw = document.get("elements")
    if exactly is not None:
        if not isinstance(raw, list) or len(raw) != exactly:
            raise ParseError(f"'elements' must be an array of exactly {exactly} entries")
    elif not isinstance(raw, list) or len(raw) < minimum:
        raise ParseError(f"'elements' must be an array of at least {minimum} entries")
    return tuple(ring.element_from_json(e) for e in raw)


def parse_job(command: str, document, n_flag=None) -> JobSpec:
    if not isinstance(document, dict):
        raise ParseError("the input document must be a JSON object")
    n = n_flag if n_flag is not None else document.get("n")
    if n is not None and not isinstance(n, int):
        raise ParseError("'n' must be an integer")

    polynomial = None
    ring = None
    if "ring" in document:
        ring = ring_from_json(document["ring"])

    if command == "verify":
        if "polynomial" not in document:
            raise ParseError("verify needs a 'polynomial' entry")
        polynomial = Polynomial.from_json(document["polynomial"], ring=ring)
        ring = polynomial.ring
        elements = _decode_elements(ring, document, minimum=1)
    elif command == "cross-check":
        if ring is None:
            raise ParseError("cross-check needs a 'ring' entry")
        elements = ()
    elif command in ("quadratic", "degree-n"):
        if ring is None:
            raise ParseError(f"{command} needs a 'ring' entry")
        elements = _decode_elements(ring, document, exactly=2)
    else:
        if ring is None:
            raise ParseError(f"{command} needs a 'ring' entry")
        elements = _decode_elements(ring, document, minimum=1)

    return JobSpec(command, ring, elements, polynomial, n)


def _emit(obj, pretty: bool):
    if pretty:
        print(json.dumps(obj, indent=2))
    else:
        print(json.dumps(obj, separators=(",", ":")))


def cmd_construct(job: JobSpec, args) -> int:
    trace = construct_with_roots(job.elements, exact_degree=args.exact_degree, ring=job.ring)
    out = {"polynomial": trace.result.to_json() if trace.succeeded else None}
    if args.trace or not trace.succeeded:
        out["trace"] = trace.to_json()
    if trace.succeeded and args.verify:
        residuals = verify_roots(trace.result, job.elements)
        out["residuals"] = [job.ring.element_to_json(r) for r in residuals]
    _emit(out, args.pretty)
    if not trace.succeeded:
        failed = trace.failed_step
        print(
            f"construction obstructed at step {failed.index}: "
            "evaluation value is nonzero and not invertible",
            file=sys.stderr,
        )
        return EX_OBSTRUCTED
    return EX_OK


def _criterion_with_override(job: JobSpec, report: CriterionReport, a1_json) -> CriterionReport:
    """Replace the solver's a1 with a user-supplied one, if it satisfies
    the coefficient equation."""
    ring = job.ring
    a1 = ring.element_from_json(json.loads(a1_json))
    x1, x2 = job.elements[0], job.elements[1]
    if a1 * (x1 - x2) != x2 * x2 - x1 * x1:
        raise DomainError("the supplied a1 does not satisfy the coefficient equation")
    a0 = constant_term((a1,), x1, x2, 2, ring=ring)
    return CriterionReport(
        n=report.n,
        rank_difference_matrix=report.rank_difference_matrix,
        rank_augmented=report.rank_augmented,
        exists=report.exists,
        coefficients=(a1,),
        a0=a0,
        solution_space_dim=report.solution_space_dim,
        ring=report.ring,
    )


def _require_matrix_ring(job: JobSpec):
    if not isinstance(job.ring, MatrixRing):
        raise MismatchError(f"{job.command} needs a matrix ring, got {job.ring!r}")


def cmd_quadratic(job: JobSpec, args) -> int:
    _require_matrix_ring(job)
    report = quadratic_existence(job.elements[0], job.elements[1])
    if args.a1 is not None:
        report = _criterion_with_override(job, report, args.a1)
    _emit(report.to_json(), args.pretty)
    return EX_OK if report.exists else EX_NOT_FOUND


def cmd_degree_n(job: JobSpec, args) -> int:
    _require_matrix_ring(job)
    if job.n is None:
        raise ParseError("degree-n needs --n or an 'n' entry in the document")
    report = degree_n_existence(job.elements[0], job.elements[1], job.n)
    _emit(report.to_json(), args.pretty)
    return EX_OK if report.exists else EX_NOT_FOUND


def cmd_verify(job: JobSpec, args) -> int:
    residuals = verify_roots(job.polynomial, job.elements)
    ring = job.polynomial.ring
    all_zero = all(ring.is_zero(r) for r in residuals)
    _emit(
        {"residuals": [ring.element_to_json(r) for r in residuals], "all_zero": all_zero},
        args.pretty,
    )
    return EX_OK if all_zero else EX_RESIDUAL


def cmd_cross_check(job: JobSpec, args) -> int:
    _require_matrix_ring(job)
    if job.n is None:
        raise ParseError("cross-check needs --n or an 'n' entry in the document")
    report = cross_check_criterion(job.ring, job.n)
    for record in report.to_json_lines():
        print(json.dumps(record, separators=(",", ":")))
    print(json.dumps(report.summary()), file=sys.stderr)
    return EX_OK if not report.disagreements else EX_RESIDUAL


_COMMANDS = {
    "construct": cmd_construct,
    "quadratic": cmd_quadratic,
    "degree-n": cmd_degree_n,
    "verify": cmd_verify,
    "cross-check": cmd_cross_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ringroots",
        description="Polynomials with prescribed right roots over non-commutative rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", metavar="PATH", help="read the JSON document from PATH instead of stdin")
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")

    p = sub.add_parser("construct", help="build a monic polynomial with the given roots")
    common(p)
    p.add_argument("--trace", action="store_true", help="include the per-step construction trace")
    p.add_argument("--verify", action="store_true", help="append per-root residuals")
    p.add_argument("--exact-degree", action="store_true", dest="exact_degree",
                   help="pad with x so the degree equals the number of roots")

    p = sub.add_parser("quadratic", help="existence test for a monic quadratic with two roots")
    common(p)
    p.add_argument("--a1", metavar="JSON", help="use this a1 instead of the solver's choice")

    p = sub.add_parser("degree-n", help="existence test for a monic degree-n polynomial with two roots")
    common(p)
    p.add_argument("--n", type=int, help="target degree (>= 2)")

    p = sub.add_parser("verify", help="evaluate a polynomial at the given elements")
    common(p)

    p = sub.add_parser("cross-check", help="compare the rank criterion with exhaustive search")
    common(p)
    p.add_argument("--n", type=int, help="target degree (>= 2)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_PARSE

    try:
        document = _read_document(args)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EX_PARSE

    try:
        job = parse_job(args.command, document, getattr(args, "n", None))
        return _COMMANDS[args.command](job, args)
    except (ParseError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_PARSE
    except (MismatchError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
