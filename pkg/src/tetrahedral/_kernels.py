"""Pick the compiled kernels when they were built, else the pure-Python ones.

Set ``TETRA_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels
if os.environ.get("TETRA_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

delta_mask = _impl.delta_mask
delta_masks_box = _impl.delta_masks_box
enumerate_s = _impl.enumerate_s
