"""Benchmark the word-evaluation backends against each other.

Times the two hot kernels (bulk word evaluation and first-identity scan)
over the depth-limited orbit set for a chosen target group, once per
available backend.  The numba backend is exercised only when the package
is installed with the ``fast`` extra; a warm-up pass keeps JIT compilation
out of the timings.

Usage:
    python3 benchmarks/bench_backends.py [--depth 9] [--repeats 5]
"""

import argparse
import time

from handlebody import generate_c0, heisenberg, pack_words
from handlebody.backend import available_backends, get_backend
from handlebody.homs import Epimorphism


def build_workload(depth):
    s = generate_c0(depth=depth)
    words = list(iter(s))
    enc, offsets = pack_words(words)
    G = heisenberg(3)
    a, b = G.generators[0], G.generators[1]
    theta = Epimorphism(G, (a, b, b, a))
    return enc, offsets, theta.letter_images(), G.table, len(words)


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--depth", type=int, default=9,
                        help="orbit truncation depth (default 9)")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats; best run is reported")
    args = parser.parse_args(argv)

    enc, offsets, letters, table, count = build_workload(args.depth)
    print("workload: %d words (depth %d), target group of order %d"
          % (count, args.depth, table.shape[0]))

    results = {}
    for name in available_backends():
        backend = get_backend(name)
        # Warm-up (compiles the jitted kernels on first call).
        backend.evaluate_words(enc, offsets, letters, table)
        backend.find_identity_word(enc, offsets, letters, table)
        t_eval = time_call(
            lambda: backend.evaluate_words(enc, offsets, letters, table),
            args.repeats)
        t_find = time_call(
            lambda: backend.find_identity_word(enc, offsets, letters, table),
            args.repeats)
        results[name] = (t_eval, t_find)
        print("%-6s evaluate_words %8.3f ms (%6.2f Mwords/s)   "
              "find_identity_word %8.3f ms"
              % (name, t_eval * 1e3, count / t_eval / 1e6, t_find * 1e3))

    if "numpy" in results and "numba" in results:
        print("speedup (numpy/numba): evaluate %.1fx, find %.1fx"
              % (results["numpy"][0] / results["numba"][0],
                 results["numpy"][1] / results["numba"][1]))
    elif "numba" not in results:
        print("numba backend unavailable; install the 'fast' extra to "
              "compare")


if __name__ == "__main__":
    main()
