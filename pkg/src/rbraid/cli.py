"""Command-line front door.

Reads algebra definition files (JSON), dispatches one computation per
process and emits a machine-readable report on standard output.  Reports
are canonical JSON (sorted keys, exact scalar strings); the timing field
is informational and excluded from byte-stability guarantees.

Exit codes: 0 for success/consistent, 1 for a mathematical negative
(no R-matrix, a failed check, an inconsistent classification), 2 for
input errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time

from .algebra import (
    Algebra,
    build_direct_sum,
    build_matrix_algebra,
    build_poly_quotient,
    build_quaternion,
    build_tensor_product,
    opposite,
    validate_algebra,
)
from .bimodules import audit_braiding, free_bimodule, regular_bimodule, square_bimodule
from .classify import classify
from .errors import ParseError, RBraidError, UnsupportedSize
from .fields import Field, field_from_json
from .rmatrix import DEFAULT_SIZE_CAP, solve_rmatrix, verify_rmatrix
from .tensor import TensorElement
from .yangbaxter import (
    DEFAULT_DIM_CAP,
    build_omega,
    check_braid,
    check_omega_cubed,
    check_qybe,
    omega_rank_profile,
)

BIMODULE_CHOICES = "regular, square or free:<d>"


# -- input format -----------------------------------------------------------


def _expect_dict(obj, where: str) -> dict:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object, got {type(obj).__name__}")
    return obj


def build_algebra_from_spec(spec: dict) -> Algebra:
    """Construct and remember the algebra described by a definition file."""
    spec = _expect_dict(spec, "top level")
    if "field" not in spec or "algebra" not in spec:
        raise ParseError("top level: need 'field' and 'algebra' keys")
    field = field_from_json(_expect_dict(spec["field"], "field"))
    return _build_algebra(field, spec["algebra"], "algebra")


def _build_algebra(field: Field, obj, where: str) -> Algebra:
    obj = _expect_dict(obj, where)
    kind = obj.get("kind")
    try:
        if kind == "matrix":
            return build_matrix_algebra(int(obj["n"]), field)
        if kind == "quaternion":
            return build_quaternion(field.parse(str(obj["a"])),
                                    field.parse(str(obj["b"])), field)
        if kind == "poly_quotient":
            modulus = [field.parse(str(c)) for c in obj["modulus"]]
            return build_poly_quotient(modulus, field)
        if kind == "tensor":
            return build_tensor_product(
                _build_algebra(field, obj["left"], where + ".left"),
                _build_algebra(field, obj["right"], where + ".right"),
            )
        if kind == "direct_sum":
            return build_direct_sum(
                _build_algebra(field, obj["left"], where + ".left"),
                _build_algebra(field, obj["right"], where + ".right"),
            )
        if kind == "opposite":
            return opposite(_build_algebra(field, obj["of"], where + ".of"))
        if kind == "custom":
            dim = int(obj["dim"])
            unit = [field.parse(str(c)) for c in obj["unit"]]
            table = [
                [[field.parse(str(c)) for c in row] for row in plane]
                for plane in obj["table"]
            ]
            if len(table) != dim:
                raise ParseError(f"{where}.table: {len(table)} planes for dim {dim}")
            return Algebra(field, table, unit, label=f"custom(dim={dim})/{field!r}")
    except KeyError as exc:
        raise ParseError(f"{where}: missing key {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from exc
    raise ParseError(f"{where}: unknown algebra kind {kind!r}")


def _load_json(path: str):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(data), hashlib.sha256(data).hexdigest()
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}") from exc


def _load_algebra(path: str) -> tuple[Algebra, str]:
    obj, digest = _load_json(path)
    return build_algebra_from_spec(obj), digest


def _extract_tensor_json(obj) -> dict:
    """Accept a raw tensor, a certificate, or a whole solve report."""
    if isinstance(obj, dict):
        if "coeffs" in obj and "arity" in obj:
            return obj
        if "r" in obj:
            return _extract_tensor_json(obj["r"])
        if "certificate" in obj:
            return _extract_tensor_json(obj["certificate"])
        if "payload" in obj:
            return _extract_tensor_json(obj["payload"])
    raise ParseError("no tensor found in the R-matrix file")


def _parse_bimodule(A: Algebra, text: str):
    if text == "regular":
        return regular_bimodule(A)
    if text == "square":
        return square_bimodule(A)
    if text.startswith("free:"):
        try:
            d = int(text.split(":", 1)[1])
        except ValueError as exc:
            raise ParseError(f"bad free rank in {text!r}") from exc
        return free_bimodule(A, d)
    raise ParseError(f"unknown bimodule {text!r}; use {BIMODULE_CHOICES}")


# -- report plumbing ----------------------------------------------------------


def _emit(report: dict, args) -> None:
    text = json.dumps(
        report,
        sort_keys=True,
        indent=2 if args.pretty else None,
        separators=None if args.pretty else (",", ":"),
    ) + "\n"
    if args.out:
        directory = os.path.dirname(os.path.abspath(args.out))
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".rbraid-")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, args.out)
        except BaseException:
            os.unlink(tmp)
            raise
    else:
        sys.stdout.write(text)


def _report(command: str, digest: str, status: str, payload: dict,
            started: float) -> dict:
    return {
        "command": command,
        "input_sha256": digest,
        "status": status,
        "payload": payload,
        "timing_ms": int((time.perf_counter() - started) * 1000),
    }


# -- commands ----------------------------------------------------------


def _cmd_validate(args) -> int:
    started = time.perf_counter()
    A, digest = _load_algebra(args.file)
    report = validate_algebra(A)
    payload = {"algebra": A.label, "dim": A.dim, "checks": report.to_json()}
    status = "valid" if report.passed else "invalid"
    _emit(_report("validate", digest, status, payload, started), args)
    return 0 if report.passed else 1


def _solver_cap(args) -> int | None:
    return None if args.force else DEFAULT_SIZE_CAP


def _cmd_solve(args) -> int:
    started = time.perf_counter()
    A, digest = _load_algebra(args.file)
    cert = solve_rmatrix(A, size_cap=_solver_cap(args))
    if cert is None:
        payload = {"algebra": A.label}
        _emit(_report("solve", digest, "infeasible", payload, started), args)
        return 1
    payload = {"certificate": cert.to_json()}
    status = "unique" if cert.valid else "invalid_certificate"
    _emit(_report("solve", digest, status, payload, started), args)
    return 0 if cert.valid else 1


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    A, digest = _load_algebra(args.file)
    robj, rdigest = _load_json(args.rmatrix)
    tensor = TensorElement.from_json(A, _extract_tensor_json(robj))
    report = verify_rmatrix(A, tensor)
    payload = {
        "algebra": A.label,
        "rmatrix_sha256": rdigest,
        "checks": report.to_json(),
    }
    status = "pass" if report.passed else "fail"
    _emit(_report("verify", digest, status, payload, started), args)
    return 0 if report.passed else 1


def _cmd_classify(args) -> int:
    started = time.perf_counter()
    A, digest = _load_algebra(args.file)
    report = classify(A, size_cap=_solver_cap(args))
    status = "consistent" if report.consistent else "inconsistent"
    _emit(_report("classify", digest, status, report.to_json(), started), args)
    return 0 if report.consistent else 1


def _cmd_ybe(args) -> int:
    started = time.perf_counter()
    A, digest = _load_algebra(args.file)
    cert = solve_rmatrix(A, size_cap=_solver_cap(args))
    if cert is None:
        _emit(_report("ybe", digest, "infeasible", {"algebra": A.label}, started), args)
        return 1
    V = _parse_bimodule(A, args.bimodule)
    op = build_omega(cert, V, size_cap=None if args.force else DEFAULT_DIM_CAP)
    checks = [check_qybe(op), check_braid(op), check_omega_cubed(op)]
    rank, rank_sq = omega_rank_profile(op)
    ok = all(c.passed for c in checks)
    payload = {
        "algebra": A.label,
        "bimodule": args.bimodule,
        "dim": V.dim,
        "checks": {
            c.name: True if c.passed else {"passed": False, "witness": c.witness or ""}
            for c in checks
        },
        "rank": rank,
        "rank_squared": rank_sq,
        "omega": op.to_json(),
    }
    _emit(_report("ybe", digest, "pass" if ok else "fail", payload, started), args)
    return 0 if ok else 1


def _cmd_audit(args) -> int:
    started = time.perf_counter()
    A, digest = _load_algebra(args.file)
    cert = solve_rmatrix(A, size_cap=_solver_cap(args))
    if cert is None:
        _emit(_report("audit", digest, "infeasible", {"algebra": A.label}, started), args)
        return 1
    names = [t.strip() for t in args.triple.split(",")]
    if len(names) != 3:
        raise ParseError(f"--triple needs three entries, got {args.triple!r}")
    M, N, P = (_parse_bimodule(A, t) for t in names)
    report = audit_braiding(cert, M, N, P)
    payload = {"algebra": A.label, "triple": names, "checks": report.to_json()}
    status = "pass" if report.passed else "fail"
    _emit(_report("audit", digest, status, payload, started), args)
    return 0 if report.passed else 1


# -- entry point -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbraid",
        description="Exact canonical R-matrices for structure-constant algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="algebra definition file (JSON)")
        p.add_argument("--out", help="write the report to FILE (atomically)")
        p.add_argument("--pretty", action="store_true", help="indent the JSON report")
        p.add_argument("--force", action="store_true", help="lift the size caps")

    p = sub.add_parser("validate", help="check associativity and the unit laws")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("solve", help="compute the canonical R-matrix")
    common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="verify a stored R-matrix against all axioms")
    common(p)
    p.add_argument("rmatrix", help="tensor, certificate or solve-report JSON file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="central-simplicity oracles + solver cross-check")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("ybe", help="build the Yang-Baxter operator and check it")
    common(p)
    p.add_argument("--bimodule", default="regular",
                   help=f"one of {BIMODULE_CHOICES} (default: regular)")
    p.set_defaults(func=_cmd_ybe)

    p = sub.add_parser("audit", help="audit the braiding on a triple of bimodules")
    common(p)
    p.add_argument("--triple", default="regular,regular,regular",
                   help=f"three of {BIMODULE_CHOICES}, comma separated")
    p.set_defaults(func=_cmd_audit)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnsupportedSize) as exc:
        error = {"command": args.command, "status": "error", "error": str(exc)}
        json.dump(error, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
        return 2
    except RBraidError as exc:
        error = {
            "command": args.command,
            "status": "error",
            "error": f"{type(exc).__name__}: {exc}",
        }
        json.dump(error, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
