"""Command line front end.

Exit codes: 0 when a result was computed (verdicts live in the output, never
in the exit code), 2 for usage errors, 3 for domain errors.  Every command
takes --format text|json; the json form is a stable envelope
{"command", "inputs", "result", "version"} in which integers are rendered as
decimal strings because several payload values have no 64-bit guarantee.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

from . import __version__
from .classnumber import (
    H1Certificate,
    NonPrincipalIdeal,
    RabinowitschComposite,
    RabinowitschTable,
    classify_h1,
    scan_h1,
)
from .errors import DomainError
from .field import make_field, parse as parse_element, render
from .forms import BinaryForm, parse_form, represents_definite, represents_indefinite
from .intkernel import isqrt
from .principality import (
    associated_form,
    derivation_intermediates,
    is_principal,
    split_ideal,
    split_type,
)


def _jsonable(value):
    """Envelope encoding: ints become decimal strings, containers recurse."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _emit(args, command: str, inputs: dict, result: dict, text_lines) -> int:
    if args.format == "json":
        envelope = {
            "command": command,
            "inputs": _jsonable(inputs),
            "result": _jsonable(result),
            "version": __version__,
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)
    return 0


def _cmd_split(args) -> int:
    field = make_field(args.d)
    st = split_type(field, args.q)
    inputs = {"d": args.d, "q": args.q}
    result: dict = {"kind": st.kind, "delta": field.delta,
                    "discriminant": field.discriminant}
    lines = [f"D = {field.D} (delta={field.delta}, discriminant={field.discriminant})"]
    if st.is_split:
        P = split_ideal(field, args.q)
        f = associated_form(P)
        result.update({"n": P.n, "l": P.l,
                       "form": {"a": f.a, "middle": 2 * f.b, "c": f.c,
                                "determinant": f.determinant}})
        lines.append(f"q = {args.q}: split, ideal {P}")
        lines.append(f"n = {P.n}, l = {P.l}")
        lines.append(f"form: {f}")
    else:
        lines.append(f"q = {args.q}: {st.kind}")
    return _emit(args, "split", inputs, result, lines)


def _generator_payload(P, res) -> dict:
    assert res.generator is not None and res.representation is not None
    return {
        "representation": {"k": res.representation.x, "v": res.representation.y,
                           "value": res.representation.value},
        "sign": res.sign,
        "c": res.c,
        "d": res.d,
        "a": res.a,
        "b": res.b,
        "generator": render(res.generator),
        "generator_u": res.generator.u,
        "generator_v": res.generator.v,
        "norm": res.generator.norm(),
        "verified": True,
    }


def _cmd_principal(args) -> int:
    field = make_field(args.d)
    P = split_ideal(field, args.q)
    f = associated_form(P)
    res = is_principal(P)
    inputs = {"d": args.d, "q": args.q,
              "emit_derivation": bool(args.emit_derivation)}
    delta2 = field.delta ** 2
    targets = [delta2] if field.D < 0 else [delta2, -delta2]
    result: dict = {"principal": res.principal, "n": P.n, "l": P.l,
                    "targets": targets}
    lines = [f"ideal {P} over D = {field.D}: "
             f"{'principal' if res.principal else 'not principal'}"]
    if res.principal:
        payload = _generator_payload(P, res)
        result.update(payload)
        rep = res.representation
        lines.append(
            f"representation: f({rep.x}, {rep.y}) = {rep.value} for f = {f}"
        )
        lines.append(f"construction: c = {res.c}, d = {res.d}, a = {res.a}, b = {res.b}")
        lines.append(f"generator: {render(res.generator)}, norm = "
                     f"{res.generator.norm()} (verified)")
        if args.emit_derivation:
            inter = derivation_intermediates(P, res)
            result["derivation"] = inter
            lines.append(
                "derivation: "
                + ", ".join(f"{k} = {v}" for k, v in sorted(inter.items()))
            )
    else:
        lines.append(f"no representation of {targets} by {f}")
    return _emit(args, "principal", inputs, result, lines)


def _cmd_represents(args) -> int:
    f = parse_form(args.form)
    if args.target == 0:
        raise DomainError("target must be nonzero")
    targets = [args.target, -args.target] if args.all_signs else [args.target]
    d = f.determinant
    if d == 0 or (d > 0 and isqrt(d) ** 2 == d):
        raise DomainError(f"degenerate determinant {d} (zero or square)")
    if d < 0 and f.a <= 0:
        raise DomainError(f"{f} is negative definite or degenerate")
    found = None
    method = "definite enumeration" if d < 0 else "indefinite window"
    for target in targets:
        if d < 0:
            if target <= 0:
                continue  # a positive definite form only represents positives
            found = represents_definite(f, target)
        else:
            found = represents_indefinite(f, target)
        if found is not None:
            break
    inputs = {"form": args.form, "target": args.target,
              "all_signs": bool(args.all_signs)}
    result: dict = {"form": {"a": f.a, "middle": 2 * f.b, "c": f.c,
                             "determinant": d},
                    "targets": targets, "method": method}
    lines = [f"form {f}: method = {method}"]
    if found is None:
        result["representation"] = None
        lines.append(f"targets {targets}: none")
    else:
        result["representation"] = {"x": found.x, "y": found.y,
                                    "value": found.value}
        lines.append(f"f({found.x}, {found.y}) = {found.value}")
    return _emit(args, "represents", inputs, result, lines)


def _evidence_payload(cert: H1Certificate) -> dict:
    ev = cert.evidence
    kind = type(ev).__name__
    payload: dict = {"kind": kind}
    if isinstance(ev, RabinowitschTable):
        payload["rows"] = [list(row) for row in ev.rows]
    elif isinstance(ev, NonPrincipalIdeal):
        payload.update({"q": ev.q, "n": ev.n, "construction": ev.construction,
                        "form": {"a": ev.form.a, "middle": 2 * ev.form.b,
                                 "c": ev.form.c,
                                 "determinant": ev.form.determinant}})
    else:
        payload.update(asdict(ev))
    return payload


def _evidence_lines(cert: H1Certificate) -> list[str]:
    ev = cert.evidence
    if isinstance(ev, RabinowitschTable):
        lines = [f"evidence: polynomial value table, {len(ev.rows)} rows, all prime"]
        lines += [f"  x = {x}: {value} prime" for x, value, _ in ev.rows]
        return lines
    if isinstance(ev, RabinowitschComposite):
        return [f"evidence: composite polynomial value at x = {ev.x}: "
                f"{ev.value} = {ev.factor} * {ev.value // ev.factor}"]
    if isinstance(ev, NonPrincipalIdeal):
        return [f"evidence: non-principal ideal ({ev.q}, {ev.n}+√{cert.D}) "
                f"from {ev.construction}, form {ev.form}"]
    kind = type(ev).__name__
    detail = asdict(ev)
    return [f"evidence: {kind} {detail}" if detail else f"evidence: {kind}"]


def _cmd_h1(args) -> int:
    cert = classify_h1(args.d)
    inputs = {"d": args.d}
    result = {"class_number_one": cert.verdict,
              "evidence": _evidence_payload(cert)}
    lines = [f"D = {cert.D}: class number 1 = {str(cert.verdict).lower()}"]
    lines += _evidence_lines(cert)
    return _emit(args, args.command, inputs, result, lines)


def _cmd_scan(args) -> int:
    jobs = args.jobs if args.jobs is not None else int(os.environ.get("QFI_JOBS", "1"))
    if jobs < 1:
        raise DomainError(f"--jobs must be >= 1, got {jobs}")
    certs = scan_h1(args.min, args.max, jobs=jobs)
    ones = [c.D for c in certs if c.verdict]
    inputs = {"min": args.min, "max": args.max, "jobs": jobs}
    result = {
        "scanned": len(certs),
        "class_number_one": ones,
        "certificates": [
            {"d": c.D, "class_number_one": c.verdict,
             "evidence": _evidence_payload(c)}
            for c in certs
        ],
    }
    lines = [f"scanned {len(certs)} squarefree D with {args.min} <= |D| <= {args.max}"]
    lines.append("class number 1 for D in: "
                 + (", ".join(str(d) for d in ones) if ones else "(none)"))
    return _emit(args, "scan", inputs, result, lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfi",
        description="Principality of split prime ideals in quadratic fields, "
                    "and the class-number-1 classification of imaginary fields.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("split", help="splitting type of an odd prime")
    p.add_argument("--d", type=int, required=True, help="squarefree field parameter")
    p.add_argument("--q", type=int, required=True, help="odd prime")
    add_common(p)
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("principal", help="decide principality of (q, n+√D)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--emit-derivation", action="store_true",
                   help="include the substitution intermediates w, z, r, s")
    add_common(p)
    p.set_defaults(func=_cmd_principal)

    p = sub.add_parser("represents", help="does a form represent a target?")
    p.add_argument("--form", required=True, help="coefficients 'a,2b,c'")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--all-signs", action="store_true",
                   help="try the target and its negative")
    add_common(p)
    p.set_defaults(func=_cmd_represents)

    for name in ("h1", "certificate"):
        p = sub.add_parser(
            name,
            help="class-number-1 certificate for an imaginary field",
        )
        p.add_argument("--d", type=int, required=True)
        add_common(p)
        p.set_defaults(func=_cmd_h1)

    p = sub.add_parser("scan", help="classify a range of imaginary fields")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None,
                   help="parallel workers (default: QFI_JOBS or 1)")
    add_common(p)
    p.set_defaults(func=_cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
