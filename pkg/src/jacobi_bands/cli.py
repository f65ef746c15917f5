"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 a verification tolerance was
violated, 4 the refinement budget ran out.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

import numpy as np

from . import __version__
from .bands import estimate_spectrum, refine_spectrum, sample_bands, write_bands_csv
from .bounds import bounds_report, gershgorin_intervals, trace_identity_check, R_matrix
from .cases import EXAMPLES, generate_example
from .errors import BudgetExceeded, IndexOutOfRange, ValidationError
from .model import load_coefficients, random_coefficients
from .oracle import functional_model_check

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_BUDGET = 0, 2, 3, 4
REPORT_SCHEMA = 1

log = logging.getLogger("jacobi_bands")


def _pair(text):
    try:
        a, b = text.lower().split("x")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N1xN2, got {text!r}") from None


def _load(args):
    if args.config:
        return load_coefficients(args.config)
    if args.random:
        p1, p2 = args.random
        return random_coefficients(p1, p2, np.random.default_rng(args.seed))
    raise ValidationError("either --config or --random is required")


def _summary(coeffs):
    return {"p1": coeffs.p1, "p2": coeffs.p2, "class": coeffs.classify().value}


def _emit(doc, out):
    text = json.dumps(doc, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_bands(args):
    coeffs = _load(args)
    n1, n2 = args.grid
    grid = sample_bands(coeffs, n1, n2)
    if not args.out:
        raise ValidationError("bands needs --out for the CSV file")
    write_bands_csv(grid, args.out)
    return EXIT_OK


def cmd_spectrum(args):
    coeffs = _load(args)
    t0 = time.perf_counter()
    if args.grid_given:
        est = estimate_spectrum(coeffs, *args.grid, enclosure=args.enclosure)
    else:
        try:
            est = refine_spectrum(coeffs, args.tol, cap=args.max_grid)
        except BudgetExceeded as exc:
            _emit({"error": str(exc), "spectrum": exc.estimate.to_dict()}, args.out)
            return EXIT_BUDGET
    _emit({
        "schema": REPORT_SCHEMA,
        "model": _summary(coeffs),
        "spectrum": est.to_dict(),
        "wall_time": time.perf_counter() - t0,
    }, args.out)
    return EXIT_OK


def cmd_bounds(args):
    coeffs = _load(args)
    measured = None
    if args.spectrum:
        with open(args.spectrum, encoding="utf-8") as fh:
            doc = json.load(fh)
        measured = doc.get("spectrum", doc)["measure"]
    report = bounds_report(coeffs, measured)
    _emit({"schema": REPORT_SCHEMA, "model": _summary(coeffs), "bounds": report.to_dict()}, args.out)
    return EXIT_OK


def cmd_verify(args):
    coeffs = _load(args)
    t0 = time.perf_counter()
    n1, n2 = args.supercell
    scale = 1.0 + coeffs.max_abs_entry()
    checks = {}

    dev = functional_model_check(coeffs, n1, n2)
    checks["functional_model"] = {"deviation": dev, "tol": 1e-8 * scale, "ok": dev <= 1e-8 * scale}

    if min(coeffs.p1, coeffs.p2) >= 3:
        rng = np.random.default_rng(args.seed)
        target = float(R_matrix(coeffs)[-1, -1])
        values = [trace_identity_check(coeffs, tuple(rng.uniform(0, 2 * np.pi, 2))) for _ in range(5)]
        err = max(abs(v - target) for v in values)
        tol = 1e-9 * (1.0 + target)
        checks["trace_identity"] = {"values": values, "R": target, "tol": tol, "ok": err <= tol}

    g1, g2 = args.grid
    lam = sample_bands(coeffs, g1, g2).lam.ravel()
    intervals, _ = gershgorin_intervals(coeffs)
    lo = np.array([l for l, _ in intervals])[:, None]
    hi = np.array([r for _, r in intervals])[:, None]
    slack = 1e-10 * scale
    inside = np.any((lam[None, :] >= lo - slack) & (lam[None, :] <= hi + slack), axis=0)
    checks["gershgorin_containment"] = {"outside": int(np.sum(~inside)), "ok": bool(inside.all())}

    ok = all(c["ok"] for c in checks.values())
    _emit({
        "schema": REPORT_SCHEMA,
        "model": _summary(coeffs),
        "checks": checks,
        "passed": ok,
        "wall_time": time.perf_counter() - t0,
    }, args.out)
    return EXIT_OK if ok else EXIT_VERIFY


def _parse_params(items):
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise ValidationError(f"example parameters are key=value, got {item!r}")
        num = float(value)
        params[key] = int(num) if key in ("p1", "p2") else num
    return params


def cmd_example(args):
    try:
        coeffs, reference = generate_example(args.name, **_parse_params(args.params))
    except TypeError as exc:
        raise ValidationError(f"bad parameters for {args.name!r}: {exc}") from None
    _emit({"coefficients": coeffs.to_dict(), "reference": reference}, args.out)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="coefficient JSON file")
    common.add_argument("--random", type=_pair, metavar="P1xP2",
                        help="use a random model with these periods instead of --config")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="jacobi-bands", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bands", parents=[common], help="export sampled bands as CSV")
    p.add_argument("--grid", type=_pair, default=(64, 64))
    p.set_defaults(func=cmd_bands)

    p = sub.add_parser("spectrum", parents=[common], help="spectrum components, measure, gaps")
    p.add_argument("--grid", type=_pair, default=None,
                   help="fixed grid instead of refinement")
    p.add_argument("--tol", type=float, default=1e-4, help="band-edge refinement tolerance")
    p.add_argument("--enclosure", action="store_true", help="pad bands to a rigorous enclosure")
    p.add_argument("--max-grid", type=int, default=2048, help="refinement budget (grid side)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bounds", parents=[common], help="all spectral-measure bounds")
    p.add_argument("--spectrum", help="spectrum JSON to compare against")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="oracle and identity checks")
    p.add_argument("--supercell", type=_pair, default=(4, 4))
    p.add_argument("--grid", type=_pair, default=(32, 32))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example", help="generate a worked example")
    p.add_argument("name", choices=sorted(EXAMPLES))
    p.add_argument("params", nargs="*", help="key=value, e.g. c=3 or p1=2 p2=2 eps=0.1")
    p.add_argument("--out")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING)
    if args.command == "spectrum":
        args.grid_given = args.grid is not None
    try:
        return args.func(args)
    except (ValidationError, IndexOutOfRange, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
