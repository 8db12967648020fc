"""Kernel selection: compiled extension when available, pure Python otherwise."""

from . import _fallback

try:
    from . import _speedups

    BACKEND = "cython"
except ImportError:  # extension not built
    _speedups = None
    BACKEND = "python"

BACKENDS = {"python": _fallback.theorem_stats}
if _speedups is not None:
    BACKENDS["cython"] = _speedups.theorem_stats

theorem_stats = BACKENDS[BACKEND]


def get_kernel(backend=None):
    """Resolve a kernel by name; None picks the fastest available."""
    if backend is None:
        return theorem_stats
    try:
        return BACKENDS[backend]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {backend!r}; have {sorted(BACKENDS)}")
