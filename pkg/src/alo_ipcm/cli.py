"""Command-line front end.

Exit codes: 0 when every requested check passes (or a computation succeeds),
1 when a check fails, 2 on unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import __version__
from .alo_group import DEFAULT_TOL, SCALES, get_scale, isomorphism
from .analysis import Thresholds, classify, dominance, evaluate, plot_data
from .errors import AloIpcmError
from .ipcm import (
    DEFAULT_PERM_CAP,
    Ipcm,
    ipcm_consistency_index,
    ipcm_indeterminacy_index,
    ipcm_is_approx_consistent,
    ipcm_is_full_consistent,
    ipcm_is_liu_consistent,
    ipcm_is_reciprocal,
    ipcm_transport,
)
from .pcm import Pcm, pcm_consistency_index, pcm_is_consistent, pcm_is_reciprocal, pcm_transport
from .serialization import Matrix, dumps_matrix, load_matrix

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

TOLERANCE_ENV = "ALO_IPCM_TOLERANCE"
CHECK_MODES = ("reciprocity", "liu", "approx", "full")


class InputError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _kind(M: Matrix) -> str:
    return "ipcm" if isinstance(M, Ipcm) else "pcm"


def _load(path: str, scale: str | None, tol: float) -> tuple[str, Matrix]:
    try:
        return load_matrix(path, scale, tol)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except (AloIpcmError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


# -- check ------------------------------------------------------------------


def run_checks(M: Matrix, modes: Sequence[str], tol: float, cap: int) -> dict[str, dict[str, Any]]:
    """Evaluate each requested condition; the result maps mode -> {"pass", ...}."""
    results: dict[str, dict[str, Any]] = {}
    if isinstance(M, Pcm):
        reciprocal = pcm_is_reciprocal(M, tol)
        # On point matrices all three consistency conditions coincide.
        consistent = reciprocal and pcm_is_consistent(M, tol)
        for mode in modes:
            if mode == "reciprocity":
                results[mode] = {"pass": reciprocal}
            else:
                results[mode] = {"pass": consistent}
                if mode == "approx" and consistent:
                    results[mode]["witness"] = list(range(1, M.n + 1))
        return results

    reciprocal = ipcm_is_reciprocal(M, tol)
    for mode in modes:
        if mode == "reciprocity":
            results[mode] = {"pass": reciprocal}
        elif mode == "full":
            results[mode] = {"pass": ipcm_is_full_consistent(M, tol)}
        elif not reciprocal:
            # Liu and approximate consistency both imply reciprocity.
            results[mode] = {"pass": False, "note": "not reciprocal"}
        elif mode == "liu":
            results[mode] = {"pass": ipcm_is_liu_consistent(M, tol)}
        else:
            found, witness = ipcm_is_approx_consistent(M, tol, cap=cap)
            results[mode] = {"pass": found}
            if witness is not None:
                results[mode]["witness"] = [s + 1 for s in witness]
    return results


def cmd_check(args: argparse.Namespace) -> int:
    label, M = _load(args.file, args.scale, args.tolerance)
    modes = CHECK_MODES if args.mode == "all" else (args.mode,)
    try:
        results = run_checks(M, modes, args.tolerance, args.perm_cap)
    except AloIpcmError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    passed = all(r["pass"] for r in results.values())

    if args.format == "json":
        doc = {"label": label, "scale": M.group.name, "kind": _kind(M), "n": M.n, "results": results, "pass": passed}
        print(json.dumps(doc, indent=2))
    elif args.format == "tsv":
        print("check\tresult\twitness")
        for mode, r in results.items():
            print(f"{mode}\t{'pass' if r['pass'] else 'fail'}\t{' '.join(map(str, r.get('witness', [])))}")
    else:
        print(f"{label}: {M.group.name} {_kind(M).upper()}, n={M.n}")
        for mode, r in results.items():
            line = f"  {mode:<12} {'pass' if r['pass'] else 'fail'}"
            if "witness" in r:
                line += "  witness " + " ".join(map(str, r["witness"]))
            if "note" in r:
                line += f"  ({r['note']})"
            print(line)
    return EXIT_PASS if passed else EXIT_FAIL


# -- index ------------------------------------------------------------------


def compute_indices(M: Matrix, which: str, tol: float) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if which in ("consistency", "both"):
        out["consistency"] = (
            ipcm_consistency_index(M, tol) if isinstance(M, Ipcm) else pcm_consistency_index(M, tol)
        )
    if which in ("indeterminacy", "both"):
        out["indeterminacy"] = ipcm_indeterminacy_index(M, tol) if isinstance(M, Ipcm) else M.group.identity
    return out


def cmd_index(args: argparse.Namespace) -> int:
    label, M = _load(args.file, args.scale, args.tolerance)
    try:
        native = compute_indices(M, args.which, args.tolerance)
        blocks = [(M.group.name, native)]
        if args.to_scale:
            iso = isomorphism(M.group, args.to_scale)
            blocks.append((iso.target.name, {k: iso(v) for k, v in native.items()}))
    except AloIpcmError as exc:
        raise InputError(f"{args.file}: {exc}") from None

    if args.format == "json":
        doc: dict[str, Any] = {"label": label, "kind": _kind(M)}
        for key, (scale, vals) in zip(("native", "transported"), blocks):
            doc[key] = {"scale": scale, **{k: float(v) for k, v in vals.items()}}
        print(json.dumps(doc, indent=2))
    elif args.format == "tsv":
        cols = list(native)
        print("\t".join(["scale", *cols]))
        for scale, vals in blocks:
            print("\t".join([scale, *(_fmt(vals[c]) for c in cols)]))
    else:
        for scale, vals in blocks:
            print(f"{label} ({scale})")
            for k, v in vals.items():
                print(f"  {k:<14} {_fmt(v)}")
    return EXIT_PASS


# -- compare ----------------------------------------------------------------


def cmd_compare(args: argparse.Namespace) -> int:
    reference = get_scale(args.reference_scale)
    thresholds = None
    try:
        if args.thresholds is not None:
            thresholds = Thresholds.on(reference, *args.thresholds)
        points = []
        for path in args.files:
            label, M = _load(path, None, args.tolerance)
            A = M if isinstance(M, Ipcm) else Ipcm.from_pcm(M)
            try:
                points.append(evaluate(A, reference, label, args.tolerance))
            except AloIpcmError as exc:
                raise InputError(f"{path}: {exc}") from None
    except AloIpcmError as exc:
        raise InputError(str(exc)) from None

    points.sort(key=lambda p: p.label)
    pairs = [
        (p, q, dominance(p, q, args.tolerance)) for i, p in enumerate(points) for q in points[i + 1 :]
    ]
    if args.format == "json":
        doc = {
            "reference_scale": reference.name,
            "thresholds": None
            if thresholds is None
            else {"consistency": float(thresholds.consistency), "indeterminacy": float(thresholds.indeterminacy)},
            "points": [
                {"label": p.label, "consistency": float(p.consistency), "indeterminacy": float(p.indeterminacy)}
                for p in points
            ],
            "dominance": [{"p": p.label, "q": q.label, "relation": rel.value} for p, q, rel in pairs],
        }
        if thresholds is not None:
            for entry, p in zip(doc["points"], points):
                entry["verdict"] = classify(p, thresholds, args.tolerance).value
        print(json.dumps(doc, indent=2))
        return EXIT_PASS

    sys.stdout.write(plot_data(points, thresholds, args.tolerance))
    if args.format == "text" and pairs:
        print()
        print("dominance")
        for p, q, rel in pairs:
            print(f"{p.label}\t{q.label}\t{rel.value}")
    return EXIT_PASS


# -- transport --------------------------------------------------------------


def cmd_transport(args: argparse.Namespace) -> int:
    label, M = _load(args.file, args.scale, args.tolerance)
    try:
        iso = isomorphism(M.group, args.to)
        out = ipcm_transport(M, iso) if isinstance(M, Ipcm) else pcm_transport(M, iso)
    except AloIpcmError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    text = dumps_matrix(out, label)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


# -- parser -----------------------------------------------------------------


def _common_options(defaults: bool) -> argparse.ArgumentParser:
    # Accepted both before and after the subcommand; the subcommand copy
    # uses SUPPRESS so it does not clobber a value given up front.
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--tolerance", type=float, default=d(None), help="equality tolerance in additive coordinates")
    p.add_argument("--perm-cap", type=int, default=d(DEFAULT_PERM_CAP), help="largest order for permutation search")
    p.add_argument("--format", choices=("text", "json", "tsv"), default=d("text"))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alo-ipcm",
        description="Consistency and indeterminacy of (interval) pairwise comparison matrices.",
        parents=[_common_options(True)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_options(False)
    scales = sorted(SCALES)

    p = sub.add_parser("check", parents=[common], help="reciprocity and consistency verdicts")
    p.add_argument("file")
    p.add_argument("--mode", choices=(*CHECK_MODES, "all"), default="all")
    p.add_argument("--scale", choices=scales, help="override the scale declared in the file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("index", parents=[common], help="consistency and indeterminacy indices")
    p.add_argument("file")
    p.add_argument("--which", choices=("consistency", "indeterminacy", "both"), default="both")
    p.add_argument("--to-scale", choices=scales)
    p.add_argument("--scale", choices=scales, help="override the scale declared in the file")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("compare", parents=[common], help="place several matrices on one scale")
    p.add_argument("files", nargs="+")
    p.add_argument("--reference-scale", choices=scales, default="fuzzy")
    p.add_argument("--thresholds", nargs=2, type=float, metavar=("T_I", "T_DELTA"))
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("transport", parents=[common], help="map a matrix onto another scale")
    p.add_argument("file")
    p.add_argument("--to", choices=scales, required=True)
    p.add_argument("--scale", choices=scales, help="override the scale declared in the file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transport)
    return parser


def _resolve_tolerance(value: float | None) -> float:
    if value is not None:
        return value
    env = os.environ.get(TOLERANCE_ENV)
    if env:
        try:
            return float(env)
        except ValueError:
            raise InputError(f"{TOLERANCE_ENV}={env!r} is not a number") from None
    return DEFAULT_TOL


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.tolerance = _resolve_tolerance(args.tolerance)
        if args.tolerance < 0:
            raise InputError("--tolerance must be non-negative")
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
