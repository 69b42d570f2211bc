"""Command-line front end.

Exit codes: 0 success, 1 runtime or suite failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

import numpy as np

from . import io as fio
from .config import DEFAULT_TOL, Tolerances
from .errors import (
    ContractError, DegenerateInputError, NormalizationError, ParameterError,
    ProjSimplexError, SearchFailure,
)
from .experiments import conjecture_search, regular_reference, run_figure
from .projective import (
    check_inequalities,
    fs_point_distance,
    isosceles_vectors,
    make_isosceles,
    normalize,
    simplex_from_faces,
    simplex_from_vertices,
)
from .verify import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def fmt_real(x: float) -> str:
    # shortest repr that round-trips
    return repr(float(x))


def _fmt_c(z: complex) -> str:
    return f"{fmt_real(z.real)}{'+' if z.imag >= 0 else '-'}{fmt_real(abs(z.imag))}j"


def cmd_verify(max_n: int, samples: int, seed: int = 0, tol: Tolerances = DEFAULT_TOL, out=None) -> int:
    out = out or sys.stdout
    t0 = time.perf_counter()
    results = run_all(max_n, samples, seed, tol)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"{status} {r.name:<12} cases={r.cases:<6} worst residual={r.worst:.3e} "
            f"(n={r.worst_n}, limit {r.limit:.1e})",
            file=out,
        )
        if not r.passed:
            n, s, resid = r.first_failure
            print(f"     {r.failed} failing case(s); first: n={n} seed={s} residual={resid:.3e}", file=out)
    ok = all(r.passed for r in results)
    print(f"{'all suites passed' if ok else 'FAILED'} in {time.perf_counter() - t0:.1f}s", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_example(s: float, out=None) -> int:
    out = out or sys.stdout
    if not (math.isfinite(s) and 0.0 < s <= 1.0):
        print(f"error: s must lie in (0, 1], got {s}", file=sys.stderr)
        return EXIT_USAGE
    sx = make_isosceles(s)
    a, b1, b2 = isosceles_vectors(s)
    sides = [fs_point_distance(b1, b2), fs_point_distance(a, b1), fs_point_distance(a, b2)]
    print(f"isosceles triangle in CP^2, s = {fmt_real(s)}", file=out)
    print(f"|D|    = {fmt_real(sx.abs_det)}", file=out)
    for j, d in enumerate(sx.dists):
        print(f"d_{j}    = {fmt_real(d)}", file=out)
    print(f"d_min  = {fmt_real(sx.d_min)}", file=out)
    print("sides  = " + ", ".join(fmt_real(x) for x in sides), file=out)
    print(f"expect = 1, {fmt_real(math.sqrt((1 + s * s) / 2))} (twice)", file=out)
    ok = abs(sx.abs_det - s) <= 1e-12 and abs(sx.d_min - s) <= 1e-12
    print(f"check: |D| and d_min both equal s ... {'confirmed' if ok else 'NOT confirmed'}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_figure(n: int, count: int, seed: int, out_csv, out_svg=None, workers: int = 1, out=None) -> int:
    out = out or sys.stdout
    try:
        records = run_figure(n, count, seed, workers)
    except ProjSimplexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    try:
        fio.write_records_csv(records, out_csv)
        if out_svg:
            fio.write_svg(records, n, out_svg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    kinds = {k: sum(r.kind == k for r in records) for k in ("random", "isosceles", "regular")}
    print(f"wrote {len(records)} records to {out_csv} " + " ".join(f"{k}={v}" for k, v in kinds.items()), file=out)
    if out_svg:
        print(f"wrote scatter to {out_svg}", file=out)
    return EXIT_OK


def cmd_conjecture(n: int, target_det: float, restarts: int, budget: int, seed: int, out=None) -> int:
    out = out or sys.stdout
    if not (math.isfinite(target_det) and 0.0 < target_det <= 1.0):
        print(f"error: --target must lie in (0, 1], got {target_det}", file=sys.stderr)
        return EXIT_USAGE
    try:
        res = conjecture_search(n, target_det, restarts, budget, seed)
    except SearchFailure as exc:
        print(f"search failed: {exc}", file=out)
        if exc.best is not None:
            print(f"best infeasible attempt: d_min={fmt_real(exc.best.best_d_min)} |D|={fmt_real(exc.best.achieved_det)}", file=out)
        return EXIT_FAIL
    c, ref = regular_reference(n, target_det)
    gap = res.best_d_min - ref
    print(f"n = {n}, target |D| = {fmt_real(target_det)}", file=out)
    print(f"best d_min        = {fmt_real(res.best_d_min)}", file=out)
    print(f"achieved |D|      = {fmt_real(res.achieved_det)}", file=out)
    print(f"regular d_min     = {fmt_real(ref)} (c = {fmt_real(c)})", file=out)
    print(f"gap (best - reg.) = {gap:+.3e}", file=out)
    print(f"restarts = {res.restarts}, evaluations = {res.evaluations}", file=out)
    if gap > 1e-3:
        print("note: search exceeds the regular simplex by more than 1e-3", file=out)
    return EXIT_OK


def cmd_distance(path, do_normalize: bool = False, out=None) -> int:
    out = out or sys.stdout
    try:
        mode, rows = fio.load_config(path)
        if do_normalize:
            rows = np.stack([normalize(r) for r in rows])
        m = rows.shape[1]
        if rows.shape[0] == m:
            build = simplex_from_faces if mode == "faces" else simplex_from_vertices
            sx = build(rows)
            chk = check_inequalities(sx)
            print(f"mode   = {mode}", file=out)
            print(f"n      = {sx.n}", file=out)
            print(f"D      = {_fmt_c(sx.D)}", file=out)
            print(f"|D|    = {fmt_real(sx.abs_det)}", file=out)
            for j, d in enumerate(sx.dists):
                print(f"d_{j}    = {fmt_real(d)}", file=out)
            print(f"d_min  = {fmt_real(sx.d_min)}", file=out)
            print(f"|D| - d_min^n = {fmt_real(chk.lower_margin)}", file=out)
            print(f"d_min - |D|   = {fmt_real(chk.upper_margin)}", file=out)
        if rows.shape[0] == 2:
            print(f"point distance = {fmt_real(fs_point_distance(rows[0], rows[1]))}", file=out)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NormalizationError as exc:
        print(f"error: unit-norm precondition violated: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateInputError as exc:
        print(f"error: general-position precondition violated (degenerate input): {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ContractError, ParameterError) as exc:
        print(f"error: invalid input file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _positive(kind=int, minimum=1):
    def conv(text):
        try:
            v = kind(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid value {text!r}") from None
        if v < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {v}")
        return v

    return conv


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="projsimplex", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the randomized identity and inequality suites")
    v.add_argument("--max-n", type=_positive(), default=4)
    v.add_argument("--samples", type=_positive(), default=200)
    v.add_argument("--seed", type=_positive(minimum=0), default=0)

    e = sub.add_parser("example", help="report on the isosceles triangle with parameter s")
    e.add_argument("--s", type=float, default=0.6)

    f = sub.add_parser("figure", help="write (d_min, |D|) scatter data as CSV and optional SVG")
    f.add_argument("--n", type=_positive(), default=2)
    f.add_argument("--count", type=_positive(), default=2000)
    f.add_argument("--seed", type=_positive(minimum=0), default=0)
    f.add_argument("--out", default="figure.csv", help="CSV output path")
    f.add_argument("--svg", default=None, help="optional SVG output path")
    f.add_argument("--workers", type=_positive(), default=1)

    c = sub.add_parser("conjecture", help="search for the largest d_min at fixed |D|")
    c.add_argument("--n", type=_positive(), default=2)
    c.add_argument("--target", type=float, default=0.5, help="target |D| in (0, 1]")
    c.add_argument("--restarts", type=_positive(), default=20)
    c.add_argument("--budget", type=_positive(), default=4000, help="evaluations per restart")
    c.add_argument("--seed", type=_positive(minimum=0), default=0)

    d = sub.add_parser("distance", help="distances for vectors given in a JSON file")
    d.add_argument("config", help='JSON file: {"mode": "vertices"|"faces", "vectors": [[[re, im], ...], ...]}')
    d.add_argument("--normalize", action="store_true", help="normalize rows instead of rejecting non-unit input")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args.max_n, args.samples, args.seed)
    if args.command == "example":
        return cmd_example(args.s)
    if args.command == "figure":
        return cmd_figure(args.n, args.count, args.seed, args.out, args.svg, args.workers)
    if args.command == "conjecture":
        return cmd_conjecture(args.n, args.target, args.restarts, args.budget, args.seed)
    return cmd_distance(args.config, args.normalize)


if __name__ == "__main__":
    sys.exit(main())
