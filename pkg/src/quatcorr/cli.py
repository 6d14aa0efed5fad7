"""Command-line front end.

    quatcorr correlate1d V.csv Q.csv [--method fft|direct|both] [--normalize none|component|global]
                                     [--model 22|13] [--out PATH] [--count]
    quatcorr match2d REFERENCE TEMPLATE [--method ...] [--normalize ...] [--real-part zero|luma]
                                        [--out SURFACE.csv] [--heatmap HEAT.pgm] [--count]
    quatcorr bench [--lengths 16,64,1023] [--shapes 8x8,16x24]
    quatcorr selftest [--jetplane IMAGE.pgm]

Exit status: 0 on success, 1 when a check fails, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import corr1d, corr2d, imageio, spectral
from .counting import OpCounter, counting_scope
from .hamilton import correlate_direct_13
from .selftest import SEED, random_image, random_signal, run_checks
from .signals import SizeError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
_NORMALIZE = {"none": "none", "component": "componentwise", "global": "global"}


class InputError(Exception):
    pass


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _max_rel_deviation(a, b) -> float:
    a, b = a.components(), b.components()
    scale = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(a - b))) / scale


def _print_counts(counter: OpCounter, out) -> None:
    print(f"complex multiplications: {counter.complex_multiplications}", file=out)
    print(f"real multiplications: {counter.real_multiplications}", file=out)
    for name in sorted(counter.by_stage):
        print(f"  {name}: {counter.stage_real(name)} real", file=out)


def _run(fn, count: bool):
    if count:
        return counting_scope(fn)
    return fn(), None


def cmd_correlate1d(args) -> int:
    v = imageio.load_signal_csv(args.template)
    q = imageio.load_signal_csv(args.signal)
    if args.model == "13" and args.method != "direct":
        raise InputError("the (1,3)-model correlation is computed by direct summation only; use --method direct")

    def compute():
        if args.model == "13":
            return {"direct": correlate_direct_13(v, q)}
        paths = ("direct", "fft") if args.method == "both" else (args.method,)
        return {m: corr1d.correlate(v, q, m) for m in paths}

    results, counter = _run(compute, args.count)
    r = results.get("fft", results.get("direct"))
    norm = _NORMALIZE[args.normalize]
    ev, eq = corr1d.energies(v), corr1d.energies(q)
    if norm == "componentwise":
        r = corr1d.normalize_componentwise(r, ev, eq)
    elif norm == "global":
        r = corr1d.normalize_global(r, ev, eq)

    report = sys.stdout
    if args.out:
        imageio.save_signal_csv(args.out, r, with_lags=True)
    else:
        report = sys.stderr
        print("lag,a,b,c,d")
        for lag, row in zip(r.lags, r.components()):
            print(",".join([str(int(lag))] + [fmt(x) for x in row]))

    mod = r.modulus()
    i = int(np.argmax(mod))
    comps = r.components()[i]
    print(f"model: ({args.model[0]},{args.model[1]})  method: {args.method}  normalization: {norm}", file=report)
    print(f"peak {fmt(mod[i])} at lag {int(r.lags[i])}", file=report)
    print("components: " + " ".join(fmt(x) for x in comps), file=report)
    if "direct" in results and "fft" in results:
        dev = _max_rel_deviation(results["direct"], results["fft"])
        print(f"max relative deviation direct vs fft: {dev:.3e}", file=report)
    if counter is not None:
        _print_counts(counter, report)
    return EXIT_OK


def _load_quat_image(path, real_part: str):
    return imageio.rgb_to_quat(imageio.load_image(path), "luminance" if real_part == "luma" else "zero")


def cmd_match2d(args) -> int:
    q = _load_quat_image(args.reference, args.real_part)
    v = _load_quat_image(args.template, args.real_part)
    if v.shape[0] > q.shape[0] or v.shape[1] > q.shape[1]:
        raise SizeError(f"template {v.shape[0]}x{v.shape[1]} larger than reference {q.shape[0]}x{q.shape[1]}")

    def compute():
        paths = ("direct", "fft") if args.method == "both" else (args.method,)
        return {m: corr2d.correlate2d(v, q, m) for m in paths}

    results, counter = _run(compute, args.count)
    r = results.get("fft", results.get("direct"))
    norm = _NORMALIZE[args.normalize]
    surface = corr2d.normalize_surface(r, norm, corr1d.energies(v), corr1d.energies(q))
    peak = corr2d.find_peak(surface)

    print(f"normalization: {norm}  method: {args.method}")
    print(f"peak lag (row, col): ({peak.lag[0]}, {peak.lag[1]})")
    print("components: " + " ".join(fmt(x) for x in peak.component_values))
    print(f"modulus: {fmt(peak.peak_modulus)}")
    if "direct" in results and "fft" in results:
        dev = _max_rel_deviation(results["direct"], results["fft"])
        print(f"max relative deviation direct vs fft: {dev:.3e}")
    if counter is not None:
        _print_counts(counter, sys.stdout)
    if args.out:
        imageio.save_surface_csv(args.out, surface)
    if args.heatmap:
        imageio.save_pgm(args.heatmap, imageio.heatmap(surface))
    return EXIT_OK


def _parse_ints(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"bad integer list {text!r}") from None
    if any(n < 1 for n in values):
        raise InputError("sizes must be positive")
    return values


def _parse_shapes(text: str) -> list[tuple[int, int]]:
    shapes = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        try:
            a, b = (int(x) for x in tok.lower().split("x"))
        except ValueError:
            raise InputError(f"bad shape {tok!r}, expected ROWSxCOLS") from None
        if a < 1 or b < 1:
            raise InputError("sizes must be positive")
        shapes.append((a, b))
    return shapes


def _split(n: int) -> tuple[int, int]:
    # template length L and signal length N with L + N - 1 = n, L <= N
    L = (n + 1) // 2
    return L, n + 1 - L


def bench_1d(n: int, rng) -> dict:
    L, N = _split(n)
    v, q = random_signal(rng, L), random_signal(rng, N)
    _, one = counting_scope(spectral.dft, np.zeros(n, dtype=complex))
    _, total = counting_scope(corr1d.correlate_fft, v, q)
    m = one.real_multiplications
    return {
        "kind": "1d",
        "size": f"{n}",
        "m_dft": m,
        "pointwise": total.stage_real("pointwise"),
        "pointwise_formula": 16 * n,
        "total": total.real_multiplications,
        "total_formula": 6 * m + 16 * n,
    }


def bench_2d(shape: tuple[int, int], rng) -> dict:
    (l1, n1), (l2, n2) = _split(shape[0]), _split(shape[1])
    v, q = random_image(rng, l1, l2), random_image(rng, n1, n2)
    _, one = counting_scope(spectral.dft2d, np.zeros(shape, dtype=complex))
    _, total = counting_scope(corr2d.correlate2d_fft, v, q)
    m = one.real_multiplications
    npix = shape[0] * shape[1]
    return {
        "kind": "2d",
        "size": f"{shape[0]}x{shape[1]}",
        "m_dft": m,
        "pointwise": total.stage_real("pointwise"),
        "pointwise_formula": 16 * npix,
        "total": total.real_multiplications,
        "total_formula": 6 * m + 16 * npix,
    }


BENCH_COLUMNS = ("kind", "size", "m_dft", "pointwise", "pointwise_formula", "total", "total_formula", "match")


def cmd_bench(args) -> int:
    rng = np.random.default_rng(SEED)
    rows = [bench_1d(n, rng) for n in _parse_ints(args.lengths)]
    rows += [bench_2d(s, rng) for s in _parse_shapes(args.shapes)]
    print("real multiplications; sizes are padded lengths N' (1-D) or N'xM' (2-D)")
    print("\t".join(BENCH_COLUMNS))
    ok = True
    for row in rows:
        match = row["pointwise"] == row["pointwise_formula"] and row["total"] == row["total_formula"]
        ok &= match
        print("\t".join(str(row[c]) for c in BENCH_COLUMNS[:-1]) + "\t" + ("yes" if match else "NO"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_selftest(args) -> int:
    gray = imageio.load_gray(args.jetplane) if args.jetplane else None
    results = run_checks(gray)
    failed = [name for name, ok, _ in results if not ok]
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    if gray is None:
        print("SKIP  jetplane column experiment (pass --jetplane PATH to run it)")
    if failed:
        print(f"{len(failed)} check(s) failed: {', '.join(failed)}")
        return EXIT_FAIL
    print(f"all {len(results)} checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quatcorr", description="Quaternion correlation in the commutative (2,2)-model.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--method", choices=("direct", "fft", "both"), default="fft")
        p.add_argument("--normalize", choices=tuple(_NORMALIZE), default="none")
        p.add_argument("--count", action="store_true", help="report multiplication counts")
        p.add_argument("--out", metavar="PATH", help="write the correlation as CSV")

    p = sub.add_parser("correlate1d", help="correlate two quaternion signal CSV files")
    p.add_argument("template", help="signal v (length L)")
    p.add_argument("signal", help="signal q (length N >= L)")
    common(p)
    p.add_argument("--model", choices=("22", "13"), default="22")
    p.set_defaults(func=cmd_correlate1d)

    p = sub.add_parser("match2d", help="locate a color template in a reference image")
    p.add_argument("reference", help="PPM/PGM image q")
    p.add_argument("template", help="PPM/PGM template v")
    common(p)
    p.add_argument("--real-part", choices=("zero", "luma"), default="zero")
    p.add_argument("--heatmap", metavar="PATH", help="write the modulus surface as a PGM")
    p.set_defaults(func=cmd_match2d)

    p = sub.add_parser("bench", help="count multiplications of the FFT correlation path")
    p.add_argument("--lengths", default="16,64,1023", help="comma-separated padded 1-D lengths")
    p.add_argument("--shapes", default="8x8,16x24", help="comma-separated padded 2-D shapes")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="run the built-in checks")
    p.add_argument("--jetplane", metavar="PATH", help="grayscale 512x512 jetplane image (PGM)")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, IndexError, InputError) as exc:
        # SizeError, NormalizationError and the file-format errors are ValueErrors
        print(f"quatcorr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
