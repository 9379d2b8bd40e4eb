"""Kernel selection: compiled Cython speedups when available, else pure Python.

Set COXHECKE_PURE=1 to force the Python kernel (used by the benchmark and
by tests that compare the two implementations).
"""

import os

from . import _purekernel

if os.environ.get("COXHECKE_PURE"):
    kernel = _purekernel
else:
    try:
        from . import _speedups as kernel  # type: ignore[no-redef]
    except ImportError:
        kernel = _purekernel


def backend_name() -> str:
    return kernel.BACKEND_NAME


def available_kernels():
    """All importable kernels, for cross-checking tests and benchmarks."""
    kernels = [_purekernel]
    try:
        from . import _speedups

        kernels.append(_speedups)
    except ImportError:
        pass
    return kernels
