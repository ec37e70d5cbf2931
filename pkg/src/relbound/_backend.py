"""Kernel backend selection.

The compiled extension is preferred when importable; setting RELBOUND_PURE=1
in the environment forces the pure-Python kernels. Both expose the same API
and the same numerics.
"""
import os

if os.environ.get("RELBOUND_PURE"):
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
