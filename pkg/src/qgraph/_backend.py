"""Selects the compiled kernels when available, else the pure-Python ones.

Set ``QGRAPH_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("QGRAPH_PURE", "") not in ("", "0"):
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"


def get_kernels(name: str | None = None):
    """Return a kernel module by name ("cython" or "python"); default is the active one."""
    if name is None:
        return kernels
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels

        return _kernels
    raise ValueError("unknown backend %r" % name)
