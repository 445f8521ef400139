"""File-based command line interface.

Matrices travel as JSON {"rows", "cols", "data"} with row-major data;
states as JSON {"lambda": [...]}; geodesics as CSV. Exit codes are a
stable contract: 0 success, 1 property-suite failure, 2 usage or
malformed input, 3 domain error (zero operator, annihilation), 4 boundary
violation where an interior state is required.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .composition import aligned_transport, analyze_composition
from .errors import BoundaryError, DomainError, SpectralGeomError
from .geometry import INTERIOR_MIN, entropy, fr_distance, geodesic, path_length
from .linalg import svd
from .spectral import face_of, spectral_state
from .validate import run_all

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_BOUNDARY = 4

# Loader rejects state files whose mass deviates from 1 beyond this.
STATE_FILE_SUM_TOL = 1e-9
# Below this deviation the loader keeps the file's bits untouched.
STATE_FILE_EXACT_TOL = 1e-12


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _read_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValueError(f"{path}: expected a JSON object")
    return payload


def load_matrix(path: str) -> np.ndarray:
    """Read a matrix file {"rows", "cols", "data"} (row-major)."""
    payload = _read_json(path)
    try:
        rows = int(payload["rows"])
        cols = int(payload["cols"])
        data = np.asarray(payload["data"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"{path}: malformed matrix file: {exc}") from exc
    if rows < 1 or cols < 1:
        raise ValueError(f"{path}: rows and cols must be positive")
    if data.ndim != 1 or data.size != rows * cols:
        raise ValueError(
            f"{path}: data length {data.size} does not equal rows*cols "
            f"({rows * cols})"
        )
    if not np.all(np.isfinite(data)):
        raise ValueError(f"{path}: matrix entries must be finite")
    return data.reshape(rows, cols)


def load_state(path: str) -> np.ndarray:
    """Read a state file {"lambda": [...]}.

    Entries down to -1e-15 are clamped to zero; a total deviating from 1
    by more than 1e-12 but at most 1e-9 is renormalised with a warning,
    anything farther off is rejected.
    """
    payload = _read_json(path)
    if "lambda" not in payload:
        raise ValueError(f"{path}: state file must contain a 'lambda' array")
    lam = np.asarray(payload["lambda"], dtype=float)
    if lam.ndim != 1 or lam.size == 0:
        raise ValueError(f"{path}: 'lambda' must be a non-empty array")
    if not np.all(np.isfinite(lam)):
        raise ValueError(f"{path}: state entries must be finite")
    if np.any(lam < -1e-15):
        raise ValueError(f"{path}: state entries must be non-negative")
    lam = np.maximum(lam, 0.0)
    total = float(lam.sum())
    if abs(total - 1.0) > STATE_FILE_SUM_TOL:
        raise ValueError(
            f"{path}: state entries sum to {total!r}, not 1 (tolerance "
            f"{STATE_FILE_SUM_TOL})"
        )
    if abs(total - 1.0) > STATE_FILE_EXACT_TOL:
        _warn(f"{path}: state sum deviates from 1 by {total - 1.0:.3e}; renormalised")
        lam = lam / total
    return lam


def _state_payload(lam: np.ndarray) -> dict:
    return {"lambda": [float(x) for x in lam]}


def write_state(path: str, lam: np.ndarray) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(_state_payload(lam), fh)
        fh.write("\n")


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def cmd_state(args) -> int:
    matrix = load_matrix(args.matrix)
    n = args.n if args.n is not None else min(matrix.shape)
    lam = spectral_state(matrix, n)
    face = face_of(lam)
    payload = {
        "lambda": [float(x) for x in lam],
        "support_size": face.support_size,
        "codimension": face.codimension,
        "interior": face.interior,
        "entropy": entropy(lam, bits=args.bits),
    }
    _print_json(payload)
    if args.out:
        write_state(args.out, lam)
    return EXIT_OK


def cmd_dist(args) -> int:
    a = load_state(args.state_a)
    b = load_state(args.state_b)
    if a.size != b.size:
        raise ValueError(
            f"state lengths differ: {a.size} ({args.state_a}) vs "
            f"{b.size} ({args.state_b})"
        )
    print(f"{fr_distance(a, b):.12g}")
    return EXIT_OK


def cmd_geodesic(args) -> int:
    a = load_state(args.state_a)
    b = load_state(args.state_b)
    if args.steps < 2:
        raise ValueError(f"--steps must be >= 2, got {args.steps}")
    path = geodesic(a, b, args.steps)
    n = a.size
    header = "t," + ",".join(f"lambda_{i + 1}" for i in range(n))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(header + "\n")
        for t, state in zip(path.t, path.states):
            row = ",".join(f"{x:.17g}" for x in state)
            fh.write(f"{t:.17g},{row}\n")
    length = path_length(path.states)
    print(f"path_length={length:.12g} fr_distance={fr_distance(a, b):.12g}")
    return EXIT_OK


def cmd_compose(args) -> int:
    b = load_matrix(args.matrix_b)
    a = load_matrix(args.matrix_a)
    n = args.n if args.n is not None else min(b.shape)
    report = analyze_composition(b, a, n, tol=args.tol)
    payload = {
        "state_a": [float(x) for x in report.state_a],
        "state_b": [float(x) for x in report.state_b],
        "state_ba": [float(x) for x in report.state_ba],
        "rank_a": report.rank_a,
        "rank_b": report.rank_b,
        "rank_ba": report.rank_ba,
        "face_ba": {
            "support_size": report.face_ba.support_size,
            "codimension": report.face_ba.codimension,
            "interior": report.face_ba.interior,
        },
        "aligned": report.aligned,
        "alignment_residual": report.alignment_residual,
        "isometric_stage": report.isometric_stage,
    }
    if report.aligned:
        sigma_b = svd(b).sigma
        beta = np.concatenate([sigma_b, np.zeros(n - sigma_b.size)])
        prediction = aligned_transport(report.state_a, beta)
        payload["transport_prediction"] = [float(x) for x in prediction]
        payload["transport_discrepancy"] = float(
            np.max(np.abs(prediction - report.state_ba))
        )
    _print_json(payload)
    return EXIT_OK


def cmd_transport(args) -> int:
    lam = load_state(args.state)
    beta = np.asarray(args.betas, dtype=float)
    if beta.size != lam.size:
        raise ValueError(
            f"--betas length {beta.size} does not match state length {lam.size}"
        )
    if not args.strict and np.min(lam) <= INTERIOR_MIN:
        _warn(
            "state lacks full support; aligned transport is applied as a "
            "continuous extension of the full-support model"
        )
    transported = aligned_transport(lam, beta, strict=args.strict)
    _print_json(_state_payload(transported))
    return EXIT_OK


def cmd_validate(args) -> int:
    if args.trials < 1:
        raise ValueError(f"--trials must be >= 1, got {args.trials}")
    results = run_all(args.seed, args.trials)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(
            f"{res.name}: {status} max_residual={res.max_residual:.3e} "
            f"tolerance={res.tolerance:.0e}"
        )
    if all(res.passed for res in results):
        print("all property families passed")
        return EXIT_OK
    print("property failure detected", file=sys.stderr)
    return EXIT_PROPERTY_FAILURE


def _parse_betas(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad --betas value: {exc}") from exc
    if not values:
        raise argparse.ArgumentTypeError("--betas must list at least one value")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-geom",
        description=(
            "Spectral states of real matrices and their Fisher-Rao geometry: "
            "states, distances, geodesics, composition analysis, transport, "
            "and a seeded property suite."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_state = sub.add_parser("state", help="spectral state of a matrix file")
    p_state.add_argument("matrix", help="matrix JSON file")
    p_state.add_argument("--n", type=int, default=None, help="spectral dimension")
    p_state.add_argument("--bits", action="store_true", help="entropy in bits")
    p_state.add_argument("--out", default=None, help="also write a state file")
    p_state.set_defaults(func=cmd_state)

    p_dist = sub.add_parser("dist", help="Fisher-Rao distance between two states")
    p_dist.add_argument("state_a", help="state JSON file")
    p_dist.add_argument("state_b", help="state JSON file")
    p_dist.set_defaults(func=cmd_dist)

    p_geo = sub.add_parser("geodesic", help="sampled geodesic between two states")
    p_geo.add_argument("state_a", help="state JSON file")
    p_geo.add_argument("state_b", help="state JSON file")
    p_geo.add_argument("--steps", type=int, default=101, help="sample count")
    p_geo.add_argument("--out", required=True, help="CSV output path")
    p_geo.set_defaults(func=cmd_geodesic)

    p_comp = sub.add_parser("compose", help="spectral report on a composition BA")
    p_comp.add_argument("matrix_b", help="stage B matrix JSON file")
    p_comp.add_argument("matrix_a", help="stage A matrix JSON file")
    p_comp.add_argument("--n", type=int, default=None, help="spectral dimension")
    p_comp.add_argument(
        "--tol", type=float, default=1e-8, help="alignment/uniformity tolerance"
    )
    p_comp.set_defaults(func=cmd_compose)

    p_tr = sub.add_parser("transport", help="aligned spectral transport of a state")
    p_tr.add_argument("state", help="state JSON file")
    p_tr.add_argument(
        "--betas", type=_parse_betas, required=True,
        help="comma-separated stage singular values",
    )
    p_tr.add_argument(
        "--strict", action="store_true",
        help="enforce the full-support hypothesis",
    )
    p_tr.set_defaults(func=cmd_transport)

    p_val = sub.add_parser("validate", help="run the seeded property suite")
    p_val.add_argument("--seed", type=int, default=0)
    p_val.add_argument("--trials", type=int, default=100)
    p_val.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUNDARY
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SpectralGeomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())
