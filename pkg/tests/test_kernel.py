"""Backend agreement: compiled kernel, numpy fallback, and a plain-Python
reference implementation must tell the same story."""

import numpy as np
import pytest

from gapkeywords import kernel


def reference_gap_moment_sums(token_ids, n_vocab):
    """Exact-integer reference oracle."""
    counts = [0] * n_vocab
    first = [-1] * n_vocab
    last = [-1] * n_vocab
    sum_sq = [0] * n_vocab
    sum_six = [0] * n_vocab
    for i, t in enumerate(token_ids):
        t = int(t)
        if last[t] >= 0:
            g = i - last[t]
            sum_sq[t] += g * g
            sum_six[t] += g**6
        else:
            first[t] = i
        last[t] = i
        counts[t] += 1
    return counts, first, last, sum_sq, sum_six


def random_cases(n_cases=60, seed=9):
    rng = np.random.default_rng(seed)
    for _ in range(n_cases):
        n = int(rng.integers(0, 400))
        v = int(rng.integers(1, 40))
        yield rng.integers(0, v, size=n, dtype=np.int64), v


@pytest.mark.parametrize("name", sorted(kernel.available_backends()))
def test_backend_matches_reference(name):
    impl = kernel.available_backends()[name]
    for ids, v in random_cases():
        counts, first, last, sum_sq, sum_six = impl(ids, v)
        ref = reference_gap_moment_sums(ids, v)
        assert counts.tolist() == ref[0]
        assert first.tolist() == ref[1]
        assert last.tolist() == ref[2]
        # Squared sums stay below 2**53 here, so float64 holds them exactly.
        assert sum_sq.tolist() == [float(x) for x in ref[3]]
        assert np.allclose(sum_six, [float(x) for x in ref[4]], rtol=1e-12, atol=0)


def test_backends_agree_on_large_input():
    backends = kernel.available_backends()
    if len(backends) < 2:
        pytest.skip("compiled kernel not built")
    rng = np.random.default_rng(3)
    ids = rng.integers(0, 3000, size=200_000, dtype=np.int64)
    results = {name: impl(ids, 3000) for name, impl in backends.items()}
    a, b = results["numpy"], results["cython"]
    for i in range(4):
        assert np.array_equal(a[i], b[i])
    assert np.allclose(a[4], b[4], rtol=1e-12, atol=0)


def test_selector_validates_input():
    with pytest.raises(ValueError):
        kernel.gap_moment_sums(np.array([0, 5], dtype=np.int64), 2)
    with pytest.raises(ValueError):
        kernel.gap_moment_sums(np.array([[0], [1]], dtype=np.int64), 2)


def test_empty_input():
    counts, first, last, sum_sq, sum_six = kernel.gap_moment_sums(
        np.array([], dtype=np.int64), 4
    )
    assert counts.tolist() == [0, 0, 0, 0]
    assert first.tolist() == [-1, -1, -1, -1]
    assert sum_sq.tolist() == [0.0, 0.0, 0.0, 0.0]
