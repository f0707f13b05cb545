"""Benchmark: compiled vs pure-Python normalization kernel.

Generates progressively deeper generator-word images of the standard curve,
re-splices a twist into each, and times `normalize_steps` (the hot loop of
every twist, reduction pass, and atlas expansion) on the raw spliced words.

Run:  python benchmarks/bench_kernel.py [--depths 4 8 12 14] [--repeat 5]
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from goeritz2 import kernel  # noqa: E402
from goeritz2 import curve as cm  # noqa: E402
from goeritz2.action import _cross_detour, apply_word  # noqa: E402
from goeritz2.surface import EDGE_CURVE  # noqa: E402


def _raw_inputs(depth: int, count: int, seed: int = 11):
    rng = random.Random(seed + depth)
    base = cm.normalize(cm.P_CURVE)
    out = []
    for _ in range(count):
        # alternating twist/rotation letters grow the curve steadily
        word = "".join(rng.choice("bB") if i % 2 else rng.choice("dD")
                       for i in range(depth))
        w = apply_word(base, word)
        name = rng.choice("BZ")
        cid = "ABCXYZ".index(name)
        spliced = []
        for e, h in w.steps:
            if EDGE_CURVE[e] == cid:
                spliced.extend(_cross_detour(e, h, 1))
            else:
                spliced.append((e, h))
        out.append(([e for e, _ in spliced], [h for _, h in spliced]))
    return out


def _time_backend(impl, inputs, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for es, hs in inputs:
            impl.normalize_steps(list(es), list(hs))
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--depths", type=int, nargs="*", default=[4, 8, 12, 14])
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    impls = kernel.backends()
    print(f"available backends: {', '.join(impls)}")
    header = f"{'depth':>5} {'steps(median)':>14}" + "".join(
        f" {name + ' [ms]':>14}" for name in impls)
    if len(impls) == 2:
        header += f" {'speedup':>9}"
    print(header)
    for depth in args.depths:
        inputs = _raw_inputs(depth, args.count)
        med = statistics.median(len(es) for es, _ in inputs)
        times = {name: _time_backend(impl, inputs, args.repeat)
                 for name, impl in impls.items()}
        row = f"{depth:>5} {med:>14.0f}" + "".join(
            f" {times[name] * 1e3:>14.2f}" for name in impls)
        if "cython" in times and "python" in times:
            row += f" {times['python'] / times['cython']:>8.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
