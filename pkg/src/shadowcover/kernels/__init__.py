"""Kernel backend selection.

Imports the compiled kernels when the extension was built, otherwise the
pure-Python twins.  Set SHADOWCOVER_PURE=1 to force the pure backend (used by
the parity tests and the benchmark).
"""

import os

from . import pure as _pure

if os.environ.get("SHADOWCOVER_PURE"):
    _impl = _pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

int_rank = _impl.int_rank
int_nullspace = _impl.int_nullspace
circuits = _impl.circuits
cross_rows = _impl.cross_rows
hull_facets = _impl.hull_facets


def backend_name() -> str:
    """Which kernel implementation is active: 'compiled' or 'pure'."""
    return "pure" if _impl is _pure else "compiled"


__all__ = [
    "int_rank",
    "int_nullspace",
    "circuits",
    "cross_rows",
    "hull_facets",
    "backend_name",
]
