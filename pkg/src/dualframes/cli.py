"""Command-line front end: analyze frames, build duals and dilations,
verify duality, emit fixture documents.

Exit codes: 0 success/verified, 1 usage, 2 parse failure, 3 mathematical
precondition violated, 4 verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import duals, fixtures, io, naimark
from .errors import DocumentError, DualFramesError, UnknownFixtureError
from .frames import dual_residual
from .linalg import DEFAULT_TOL, Tolerance, herm_eig

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # route argparse's own failures through the usage exit code
    def error(self, message):
        raise _UsageError(message)


def _vector_from_json(text: str) -> np.ndarray:
    """Inline JSON vector: either plain numbers or [re, im] pairs."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"--u: invalid JSON: {exc}") from exc
    if not isinstance(data, list) or not data:
        raise DocumentError("--u must be a nonempty JSON list")
    if all(not isinstance(x, bool) and isinstance(x, (int, float)) for x in data):
        return np.asarray(data, dtype=np.complex128)
    out = []
    for entry in data:
        if (not isinstance(entry, list) or len(entry) != 2
                or any(isinstance(x, bool) or not isinstance(x, (int, float))
                       for x in entry)):
            raise DocumentError(f"--u: expected a number or [re, im] pair, got {entry!r}")
        out.append(complex(float(entry[0]), float(entry[1])))
    return np.asarray(out, dtype=np.complex128)


def _print_report(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, float):
            value = f"{value:.12g}"
        elif isinstance(value, list):
            value = "[" + ", ".join(f"{x:.12g}" if isinstance(x, float) else str(x)
                                    for x in value) + "]"
        print(f"{key}: {value}")


def _emit_frame(frame, output, metadata=None) -> None:
    if output:
        io.save_frame(frame, output, metadata)
    else:
        print(json.dumps(io.frame_to_document(frame, metadata), indent=2))


def cmd_analyze(args, tol: Tolerance) -> int:
    frame = io.load_frame(args.input, tol=tol)
    lam = herm_eig(frame.frame_operator(), tol=tol).eigenvalues
    lower, upper = frame.frame_bounds()
    report = {
        "dim": frame.dim,
        "count": frame.count,
        "lower_bound": float(lower),
        "upper_bound": float(upper),
        "tight": frame.is_tight(),
        "parseval": frame.is_parseval(),
        "potential": frame.frame_potential(),
        "excess": frame.excess(),
        "q_eigenvalues": [float(x) for x in np.log(lam)],
    }
    _print_report(report, args.format)
    return EXIT_OK


def cmd_dual(args, tol: Tolerance) -> int:
    frame = io.load_frame(args.input, tol=tol)
    if args.mode == "canonical":
        dual = frame.canonical_dual()
    elif args.mode == "excess-one":
        if args.epsilon is None or args.u is None:
            raise _UsageError("mode excess-one needs --epsilon and --u")
        params = duals.ExcessOneParams(epsilon=args.epsilon,
                                       u=_vector_from_json(args.u),
                                       theta=args.theta,
                                       theta_tilde=args.theta_tilde)
        dual = duals.excess_one_dual(frame, params, tol=tol)
    elif args.mode == "general":
        if args.q is None:
            raise _UsageError("mode general needs --q")
        dual = duals.general_dual(frame, io.load_matrix(args.q), tol=tol)
    else:
        if args.bound is None:
            raise _UsageError("mode tight needs --bound")
        dual = duals.tight_dual(frame, args.bound, tol=tol)
    _emit_frame(dual, args.output, metadata={"name": f"dual-{args.mode}"})
    residual = dual_residual(frame, dual)
    print(f"residual: {residual:.6e}", file=sys.stderr)
    return EXIT_OK if residual <= tol.residual_tol else EXIT_VERIFY


def cmd_dilate(args, tol: Tolerance) -> int:
    frame = io.load_frame(args.input, tol=tol)
    if args.mode == "plain":
        dil = naimark.dilate(frame, tol=tol)
        onb = dil.onb
        report = {
            "mode": "plain",
            "dim": frame.dim,
            "count": frame.count,
            "aux_dim": int(dil.complement.shape[1]),
        }
        if args.format == "json":
            report["onb"] = io.matrix_to_document(onb)["matrix"]
            report["complement"] = io.matrix_to_document(dil.complement)["matrix"]
    else:
        nr = naimark.near_riesz_dilate(frame, tol=tol)
        onb = nr.onb
        q0_lam = [float(x) for x in herm_eig(nr.q0, tol=tol).eigenvalues]
        report = {
            "mode": "near-riesz",
            "dim": frame.dim,
            "count": frame.count,
            "j0": list(nr.j0),
            "j1": list(nr.j1),
            "q0_spectrum": q0_lam,
            "exp_q0_spectrum": [float(np.exp(x)) for x in q0_lam],
            "dim_m1": int(nr.m1_basis.shape[1]),
            "dim_m2": int(nr.m2_dim),
        }
        if args.format == "json":
            report["onb"] = io.matrix_to_document(onb)["matrix"]
    _print_report(report, args.format)
    if args.output:
        io.save_matrix(onb, args.output)
    return EXIT_OK


def cmd_verify(args, tol: Tolerance) -> int:
    frame = io.load_frame(args.frame, tol=tol)
    candidate = io.load_frame(args.candidate, tol=tol)
    residual = dual_residual(frame, candidate)
    verified = bool(residual <= tol.residual_tol)
    _print_report({"residual": float(residual), "verified": verified}, args.format)
    return EXIT_OK if verified else EXIT_VERIFY


def cmd_gen(args, tol: Tolerance) -> int:
    name = args.fixture
    if name == "mercedes":
        frame, meta = fixtures.mercedes(), {"name": name}
    elif name == "sic":
        frame, meta = fixtures.sic_povm_qubit().qubit, {"name": name}
    elif name == "sic-bloch":
        frame, meta = fixtures.sic_povm_qubit().bloch, {"name": name}
    elif name == "cc":
        frame, meta = fixtures.casazza_christensen_block(args.K), {"name": name, "K": args.K}
    elif name == "cc-union":
        frame = fixtures.casazza_christensen_union(args.blocks)
        meta = {"name": name, "blocks": args.blocks}
    elif name == "random":
        frame = fixtures.random_frame(args.n, args.m, args.seed,
                                      parseval=args.parseval, tol=tol)
        meta = {"name": name, "n": args.n, "m": args.m, "seed": args.seed,
                "parseval": bool(args.parseval)}
    else:
        raise UnknownFixtureError(f"unknown fixture {name!r}")
    _emit_frame(frame, args.output, metadata=meta)
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="dualframes",
                     description="Finite frame analysis and dual-frame construction.")
    parser.add_argument("--rank-tol", type=float, default=DEFAULT_TOL.rank_tol,
                        help="rank decisions cutoff")
    parser.add_argument("--residual-tol", type=float, default=DEFAULT_TOL.residual_tol,
                        help="verification residual cutoff")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report frame invariants")
    p.add_argument("input", help="frame document path")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dual", help="construct a dual frame")
    p.add_argument("input", help="frame document path")
    p.add_argument("--mode", choices=("canonical", "excess-one", "general", "tight"),
                   default="canonical")
    p.add_argument("--epsilon", type=float, help="excess-one scale in (0, 1]")
    p.add_argument("--u", help="excess-one direction, inline JSON vector")
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--theta-tilde", type=float, default=0.0, dest="theta_tilde")
    p.add_argument("--q", help="matrix document path for mode general")
    p.add_argument("--bound", type=float, help="target bound for mode tight")
    p.add_argument("--output", help="write the dual document here (default stdout)")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("dilate", help="orthonormal dilation of a Parseval frame")
    p.add_argument("input", help="frame document path")
    p.add_argument("--mode", choices=("plain", "near-riesz"), default="plain")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.add_argument("--output", help="write the onb matrix document here")
    p.set_defaults(func=cmd_dilate)

    p = sub.add_parser("verify", help="check a dual pair")
    p.add_argument("frame", help="frame document path")
    p.add_argument("candidate", help="candidate dual document path")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a fixture frame document")
    p.add_argument("fixture",
                   help="mercedes | sic | sic-bloch | cc | cc-union | random")
    p.add_argument("--K", type=int, default=2, help="cc block size")
    p.add_argument("--blocks", type=int, default=3, help="cc-union largest block")
    p.add_argument("--n", type=int, default=2, help="random fixture dimension")
    p.add_argument("--m", type=int, default=4, help="random fixture vector count")
    p.add_argument("--seed", type=int, default=0, help="random fixture seed")
    p.add_argument("--parseval", action="store_true",
                   help="whiten the random fixture")
    p.add_argument("--output", help="write the document here (default stdout)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return EXIT_OK if exc.code in (None, 0) else EXIT_USAGE
    try:
        tol = Tolerance(rank_tol=args.rank_tol, residual_tol=args.residual_tol)
        return args.func(args, tol)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownFixtureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DualFramesError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
