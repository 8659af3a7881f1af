"""Hot numeric kernels: compiled extension when available, pure Python otherwise.

The row-cyclic Hermitian Jacobi sweep is the only loop in the package that
dominates a runtime, so it exists twice: ``_jacobi_cy`` (Cython) and
``jacobi_py`` (numpy fallback).  Both implement the identical rotation
sequence; ``benchmarks/bench_jacobi.py`` compares them.

Set ``BICOMPLEX_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and the kernel-agreement tests).
"""

import os

if os.environ.get("BICOMPLEX_PURE_PYTHON"):
    from . import jacobi_py as _impl

    KERNEL_BACKEND = "python"
else:
    try:
        from . import _jacobi_cy as _impl

        KERNEL_BACKEND = "cython"
    except ImportError:
        from . import jacobi_py as _impl

        KERNEL_BACKEND = "python"

jacobi_eigh = _impl.jacobi_eigh

__all__ = ["jacobi_eigh", "KERNEL_BACKEND"]
