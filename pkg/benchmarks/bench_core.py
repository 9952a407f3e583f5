"""Compiled extension vs numpy fallback on the hot loops, plus deep vs wide
kernel construction at equal network size.

    python3 benchmarks/bench_core.py [--repeat 3] [--n 1000]
"""
import argparse
import time

import numpy as np

from nngp_depth import NetArch, _core, _fallback
from nngp_depth.kernel import kernel_from_outputs, draw_outputs


def best_of(fn, repeat):
    t = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        t.append(time.perf_counter() - t0)
    return min(t)


def bench_backends(n, repeat):
    backends = _core.backends()
    g = np.random.default_rng(0)
    w, L = 10, 200
    h1 = g.standard_normal((n, w))
    wr = g.standard_normal((L - 1, w, w)) * np.sqrt(0.3 / w)
    br = g.standard_normal((L - 1, w)) * np.sqrt(0.3 / w)
    tapped = np.ones(L, dtype=np.uint8)
    G = g.standard_normal((200, n, 1))
    rows = []
    for name, mod in backends.items():
        for act, code in _fallback.ACT_CODES.items():
            t = best_of(lambda: mod.deep_tapped_sum(h1, wr, br, tapped, code, 1), repeat)
            rows.append((f"deep pass {act} (N={n}, depth {L}, width {w})", name, t))

        def gram():
            mod.gram_accumulate(G, np.zeros((n, n)), np.zeros((n, n)), 1)
        rows.append((f"gram accumulate (200 draws, N={n})", name, best_of(gram, repeat)))
    return rows


def bench_deep_vs_wide(n, draws, repeat):
    X = np.random.default_rng(1).standard_normal((n, 784))
    deep = NetArch.deep(784, 200, 1, 10, 1, "tanh", "per_width:0.3")
    wide = NetArch.wide(784, 200, 1, "tanh", "per_width:0.3")
    out = []
    for label, a in (("deep 200 taps x width 10", deep), ("wide width 200", wide)):
        t = best_of(lambda: kernel_from_outputs(draw_outputs(a, X, draws, 0)), repeat)
        out.append((f"kernel N={n}, {draws} draws: {label}", _core.BACKEND, t))
    return out


def main():
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--draws", type=int, default=50)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    rows = bench_backends(args.n, args.repeat) + bench_deep_vs_wide(args.n, args.draws, args.repeat)
    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  {'backend':<9} seconds")
    for case, backend, t in rows:
        print(f"{case:<{width}}  {backend:<9} {t:.4f}")
    by = {}
    for case, backend, t in rows:
        by.setdefault(case, {})[backend] = t
    for case, d in by.items():
        if "compiled" in d and "python" in d:
            print(f"speedup {case}: {d['python'] / d['compiled']:.1f}x")


if __name__ == "__main__":
    main()
