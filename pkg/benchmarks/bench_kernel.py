#!/usr/bin/env python3
"""Benchmark the gap-moment kernel backends on a novel-sized synthetic text.

Times the raw kernel pass (the hot loop of every permutation realization) and
a full all-words scoring run for each importable backend.

    python benchmarks/bench_kernel.py [--tokens N] [--vocab V] [--repeats R]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from gapkeywords import build_document, kernel
from gapkeywords.permutation import permuted_moments


def make_tokens(n: int, vocab: int, seed: int = 5) -> list[str]:
    rng = np.random.default_rng(seed)
    p = 1.0 / np.arange(1, vocab + 1) ** 1.05
    p /= p.sum()
    return [f"w{i:05d}" for i in rng.choice(vocab, size=n, p=p)]


def time_call(fn, repeats: int) -> float:
    fn()  # warmup
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tokens", type=int, default=350_000)
    parser.add_argument("--vocab", type=int, default=12_000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    doc = build_document(make_tokens(args.tokens, args.vocab))
    ids = doc.token_ids
    n_vocab = len(doc.vocab)
    print(f"text: {doc.N} tokens, {n_vocab} distinct words")
    print(f"selected backend at import: {kernel.BACKEND}\n")

    backends = kernel.available_backends()
    kernel_times = {}
    print(f"{'backend':<8} {'kernel pass':>12} {'tokens/s':>12} {'score_all':>12}")
    for name, impl in sorted(backends.items()):
        t_kernel = time_call(lambda: impl(ids, n_vocab), args.repeats)
        kernel_times[name] = t_kernel

        original = kernel._impl
        kernel._impl = __import__(
            "gapkeywords._kernel" if name == "cython" else "gapkeywords._kernel_fallback",
            fromlist=["gap_moment_sums"],
        )
        try:
            t_score = time_call(
                lambda: permuted_moments(doc, seed=0, realizations=1), args.repeats
            )
        finally:
            kernel._impl = original
        print(
            f"{name:<8} {t_kernel * 1e3:>10.2f}ms {doc.N / t_kernel:>12.3g} "
            f"{t_score * 1e3:>10.2f}ms"
        )

    if {"cython", "numpy"} <= kernel_times.keys():
        speedup = kernel_times["numpy"] / kernel_times["cython"]
        print(f"\ncompiled kernel speedup over numpy fallback: {speedup:.1f}x")


if __name__ == "__main__":
    main()
