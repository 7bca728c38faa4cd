"""Command-line front end.

Subcommands: ``analyze`` (bounds and classification), ``approx``
(symmetric approximation), ``orthogonalize`` (symmetric
orthogonalization), ``verify`` (randomized minimality probes), and
``family`` (truncation diagnostics with optional CSV).

Frames come either from a JSON file (``--input``) or from a built-in
family (``--family``/``--size``).  Reports are JSON on stdout or
``--out``; runs are deterministic given inputs, flags, and ``--seed``.

Exit codes: 0 success, 2 parse/validation error, 3 the requested
orthogonalization does not exist, 4 a minimality violation was observed,
5 numerical failure.
"""

import argparse
import os
import sys

import numpy as np

from . import families as fam
from .approx import (
    extend_orthogonalization,
    loewdin_orthogonalization,
    symmetric_approximation,
)
from .errors import (
    BadCokernel,
    BadShape,
    BadSize,
    FramekitError,
    IdentityMismatch,
    IndexMismatch,
    NoConvergence,
    NoExtension,
    NotHermitian,
    NotNormalizedTight,
    NotPsd,
    ParseError,
    WrongFamily,
    ZeroFrame,
)
from .frames import (
    Frame,
    classify,
    frame_bounds,
    frame_to_dict,
    load_frame,
    synthesis_matrix,
)
from .linalg import Tolerance
from .report import (
    SCHEMA,
    csv_text,
    digest_bytes,
    digest_text,
    dumps_report,
    write_atomic,
)
from .verify import verify_orthonormal_minimality, verify_tight_minimality

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NO_EXTENSION = 3
EXIT_VIOLATION = 4
EXIT_NUMERICAL = 5

_INPUT_ERRORS = (
    ParseError,
    BadShape,
    BadSize,
    WrongFamily,
    IndexMismatch,
    ZeroFrame,
    NotHermitian,
    NotPsd,
    BadCokernel,
    NotNormalizedTight,
)


def _env_float(name: str, fallback: float) -> float:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return fallback
    try:
        return float(raw)
    except ValueError:
        raise ParseError(f"environment variable {name} is not a number: {raw!r}") from None


def _add_common(parser: argparse.ArgumentParser, with_seed: bool = False) -> None:
    parser.add_argument("--tol-rank", type=float, default=None,
                        help="relative singular-value cutoff (default 1e-10)")
    parser.add_argument("--tol-eq", type=float, default=None,
                        help="absolute comparison tolerance (default 1e-9)")
    parser.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    if with_seed:
        parser.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")


def _add_frame_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", default=None, help="frame JSON file")
    parser.add_argument("--family", default=None, choices=fam.FAMILY_KINDS,
                        help="built-in family instead of a file")
    parser.add_argument("--size", type=int, default=None, help="truncation size for --family")
    parser.add_argument("--alpha", type=float, default=None,
                        help="constant weight for --family shift-weighted")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="framekit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="frame bounds, rank, and tightness classification")
    _add_frame_input(p)
    _add_common(p)

    p = sub.add_parser("approx", help="closest normalized tight frame and its distance")
    _add_frame_input(p)
    _add_common(p)

    p = sub.add_parser("orthogonalize", help="symmetric orthogonalization (if it exists)")
    _add_frame_input(p)
    p.add_argument("--cokernel", default=None,
                   help="frame JSON file whose vectors prescribe the cokernel images")
    _add_common(p)

    p = sub.add_parser("verify", help="randomized minimality probes")
    _add_frame_input(p)
    p.add_argument("--trials", type=int, default=1000, help="candidates per probe (default 1000)")
    _add_common(p, with_seed=True)

    p = sub.add_parser("family", help="truncation diagnostics across sizes")
    p.add_argument("--family", required=True, choices=fam.FAMILY_KINDS)
    p.add_argument("--sizes", required=True,
                   help="comma-separated ascending sizes, e.g. 10,20,60")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--csv", default=None, help="also write diagnostics as CSV here")
    _add_common(p)

    return parser


def _tolerance(args) -> Tolerance:
    rank = args.tol_rank if args.tol_rank is not None else _env_float("FRAMEKIT_TOL_RANK", 1e-10)
    eq = args.tol_eq if args.tol_eq is not None else _env_float("FRAMEKIT_TOL_EQ", 1e-9)
    try:
        return Tolerance(rank_rel_tol=rank, eq_abs_tol=eq)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _family_spec(args) -> fam.FamilySpec:
    return fam.FamilySpec(kind=args.family, alpha=args.alpha)


def _load_input(args) -> tuple[Frame, str]:
    """Resolve the frame input and its content digest."""
    if (args.input is None) == (args.family is None):
        raise ParseError("exactly one of --input or --family is required")
    if args.input is not None:
        try:
            with open(args.input, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {args.input}: {exc}") from exc
        return load_frame(args.input), digest_bytes(raw)
    if args.size is None:
        raise ParseError("--family requires --size")
    spec = _family_spec(args)
    frame = fam.truncate(spec, args.size)
    key = f"family:{spec.kind};alpha={args.alpha!r};size={args.size}"
    return frame, digest_text(key)


def _matrix_rows(matrix: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(matrix)]


def _report(command: str, digest: str, tol: Tolerance, results, seed: int | None = None) -> dict:
    doc = {
        "schema": SCHEMA,
        "command": command,
        "input_digest": digest,
        "tolerances": {"rank_rel_tol": tol.rank_rel_tol, "eq_abs_tol": tol.eq_abs_tol},
    }
    if seed is not None:
        doc["seed"] = seed
    doc["results"] = results
    return doc


def _deliver(doc: dict, args) -> None:
    text = dumps_report(doc)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    tol = _tolerance(args)
    frame, digest = _load_input(args)
    cls = classify(frame, tol)
    bounds = frame_bounds(frame, tol)
    results = {
        "ambient_dim": frame.ambient_dim,
        "vector_count": len(frame),
        "lower_bound": bounds.lower,
        "upper_bound": bounds.upper,
        "rank": cls.rank,
        "kernel_dim": cls.kernel_dim,
        "is_frame_of_span": cls.is_frame_of_span,
        "is_tight": cls.is_tight,
        "is_normalized_tight": cls.is_normalized_tight,
    }
    _deliver(_report("analyze", digest, tol, results), args)
    return EXIT_OK


def cmd_approx(args) -> int:
    tol = _tolerance(args)
    frame, digest = _load_input(args)
    res = symmetric_approximation(frame, tol)
    results = {
        "distance": res.distance,
        "hs_P_minus_absF": res.hs_P_minus_absF,
        "hs_I_minus_absF": res.hs_I_minus_absF,
        "closed_form_via_projection": res.hs_P_minus_absF**2,
        "closed_form_via_identity": res.hs_I_minus_absF**2 - res.kernel_dim,
        "kernel_dim": res.kernel_dim,
        "nu": frame_to_dict(res.nu),
    }
    _deliver(_report("approx", digest, tol, results), args)
    return EXIT_OK


def cmd_orthogonalize(args) -> int:
    tol = _tolerance(args)
    frame, digest = _load_input(args)
    if args.cokernel is not None:
        cokernel = load_frame(args.cokernel).vectors.T
        res = extend_orthogonalization(frame, cokernel, tol)
    else:
        res = loewdin_orthogonalization(frame, tol)
    if not res.exists:
        results = {
            "exists": False,
            "unique": False,
            "reason": "cokernel too small: dim((ran F)^perp) < dim(ker F)",
        }
        _deliver(_report("orthogonalize", digest, tol, results), args)
        return EXIT_NO_EXTENSION
    nu_matrix = synthesis_matrix(res.nu)
    gram_residual = float(
        np.linalg.norm(nu_matrix.conj().T @ nu_matrix - np.eye(len(res.nu)))
    )
    results = {
        "exists": True,
        "unique": res.unique,
        "distance": res.distance,
        "gram_residual": gram_residual,
        "nu": frame_to_dict(res.nu),
        "V": _matrix_rows(res.V),
    }
    _deliver(_report("orthogonalize", digest, tol, results), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    tol = _tolerance(args)
    frame, digest = _load_input(args)
    if args.trials < 1:
        raise ParseError("--trials must be >= 1")
    tight = verify_tight_minimality(frame, args.trials, args.seed, tol)
    results = {
        "tight_minimality": {
            "baseline": tight.baseline,
            "trials": tight.trials,
            "min_observed": tight.min_observed,
            "violations": tight.violations,
            "seed": tight.seed,
        }
    }
    violations = tight.violations
    if len(frame) <= frame.ambient_dim:
        ortho = verify_orthonormal_minimality(frame, args.trials, args.seed, tol)
        results["orthonormal_minimality"] = {
            "baseline": ortho.baseline,
            "trials": ortho.trials,
            "min_observed": ortho.min_observed,
            "violations": ortho.violations,
            "seed": ortho.seed,
        }
        violations += ortho.violations
    else:
        results["orthonormal_minimality"] = None
    _deliver(_report("verify", digest, tol, results, seed=args.seed), args)
    return EXIT_VIOLATION if violations > 0 else EXIT_OK


def cmd_family(args) -> int:
    tol = _tolerance(args)
    try:
        sizes = [int(part) for part in args.sizes.split(",") if part.strip()]
    except ValueError as exc:
        raise ParseError(f"--sizes must be comma-separated integers: {exc}") from exc
    if not sizes:
        raise ParseError("--sizes must name at least one size")
    spec = _family_spec(args)
    diags = fam.diagnostics(spec, sizes, tol)
    key = f"family:{spec.kind};alpha={args.alpha!r};sizes={sizes!r}"
    rows = [
        {
            "size": d.size,
            "hs_I_minus_absF": d.hs_I_minus_absF,
            "hs_P_minus_absF": d.hs_P_minus_absF,
            "operator_norm": d.operator_norm,
            "kernel_dim": d.kernel_dim,
            "lower_bound": d.lower_bound,
            "hs_I_minus_gram": d.hs_I_minus_gram,
        }
        for d in diags
    ]
    results = {"family": spec.kind, "sizes": sizes, "diagnostics": rows}
    if args.alpha is not None:
        results["alpha"] = args.alpha
    if args.csv:
        header = [
            "size",
            "hs_I_minus_absF",
            "hs_P_minus_absF",
            "operator_norm",
            "kernel_dim",
            "lower_bound",
            "hs_I_minus_gram",
        ]
        csv_rows = [[row[name] for name in header] for row in rows]
        write_atomic(args.csv, csv_text(header, csv_rows))
    _deliver(_report("family", digest_text(key), tol, results), args)
    return EXIT_OK


_COMMANDS = {
    "analyze": cmd_analyze,
    "approx": cmd_approx,
    "orthogonalize": cmd_orthogonalize,
    "verify": cmd_verify,
    "family": cmd_family,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except NoExtension as exc:
        print(f"framekit: no extension exists: {exc}", file=sys.stderr)
        return EXIT_NO_EXTENSION
    except _INPUT_ERRORS as exc:
        print(f"framekit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NoConvergence, IdentityMismatch) as exc:
        print(f"framekit: numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except FramekitError as exc:
        print(f"framekit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    sys.exit(main())
