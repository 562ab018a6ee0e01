"""Backend selection for the gap-moment kernel.

At import time the compiled Cython extension is preferred; the numpy fallback
takes over when the extension is missing or GAPKEYWORDS_PURE is set. Both
expose the same ``gap_moment_sums`` contract and are property-tested against
each other; ``BACKEND`` names the one in use.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernel_fallback

BACKEND = "numpy"
_impl = _kernel_fallback

if not os.environ.get("GAPKEYWORDS_PURE"):
    try:
        from . import _kernel as _compiled  # type: ignore[attr-defined]

        _impl = _compiled
        BACKEND = "cython"
    except ImportError:
        pass


def gap_moment_sums(
    token_ids: np.ndarray, n_vocab: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Accumulate per-word gap statistics over a token-id stream.

    Returns ``(counts, first, last, sum_sq, sum_six)`` arrays of length
    ``n_vocab``: occurrence counts, first and last positions (-1 for absent
    ids), and the sums of squared and sixth-power successor-position gaps.
    """
    arr = np.ascontiguousarray(token_ids, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError("token_ids must be one-dimensional")
    if arr.size and (arr.min() < 0 or arr.max() >= n_vocab):
        raise ValueError("token ids must lie in [0, n_vocab)")
    return _impl.gap_moment_sums(arr, n_vocab)


def available_backends() -> dict[str, object]:
    """Importable kernel implementations, keyed by backend name."""
    backends: dict[str, object] = {"numpy": _kernel_fallback.gap_moment_sums}
    try:
        from . import _kernel as _compiled  # type: ignore[attr-defined]

        backends["cython"] = _compiled.gap_moment_sums
    except ImportError:
        pass
    return backends
