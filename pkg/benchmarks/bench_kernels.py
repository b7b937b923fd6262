"""Time the numba kernels against the numpy fallback at Fashion-MNIST batch shapes.

Usage: python benchmarks/bench_kernels.py [--repeat 5]

Prints one row per kernel with the best-of-N wall time of each backend and the
speedup. Outputs are also compared so a fast-but-wrong kernel shows up here.
"""

import argparse
import timeit

import numpy as np

from grcan.kernels import numba_impl, numpy_impl


def cases(rng):
    B = 200
    xp = rng.uniform(size=(B, 8, 16, 16))          # padded layer-2 input
    w = rng.normal(size=(16, 8, 3, 3))
    gout = rng.normal(size=(B, 16, 14, 14))
    x = rng.uniform(size=(B, 16, 14, 14))
    gpool = rng.normal(size=(B, 16, 7, 7))
    d = rng.uniform(size=(B, 50, 63))               # 50 trees of depth 5
    gmu = rng.normal(size=(B, 50, 64))
    return {
        "conv2d_forward": lambda m: m.conv2d_forward(xp, w),
        "conv2d_backward": lambda m: m.conv2d_backward(xp, w, gout),
        "maxpool2d_forward": lambda m: m.maxpool2d_forward(x, 2, 2),
        "maxpool2d_backward": lambda m: m.maxpool2d_backward(gpool, m.maxpool2d_forward(x, 2, 2)[1], x.shape),
        "route_forward": lambda m: m.route_forward(d),
        "route_backward": lambda m: m.route_backward(d, gmu),
    }


def _flat(out):
    return [np.asarray(o) for o in (out if isinstance(out, tuple) else (out,))]


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if numba_impl is None:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':20s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}  max |diff|")
    for name, fn in cases(np.random.default_rng(0)).items():
        a, b = _flat(fn(numpy_impl)), _flat(fn(numba_impl))   # second call also warms the jit
        diff = max(float(np.abs(u - v).max()) for u, v in zip(a, b))
        t_np = min(timeit.repeat(lambda: fn(numpy_impl), number=1, repeat=args.repeat)) * 1e3
        t_nb = min(timeit.repeat(lambda: fn(numba_impl), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:20s} {t_np:10.2f} {t_nb:10.2f} {t_np / t_nb:8.2f}  {diff:.1e}")


if __name__ == "__main__":
    main()
