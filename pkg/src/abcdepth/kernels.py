"""Backend selection for the hot loops.

The compiled extension ``abcdepth._kernels`` is used when it imports;
otherwise the numpy versions in ``abcdepth._pykernels`` are used.  Setting
``ABCDEPTH_BACKEND=python`` forces the fallback.
"""

import os

from abcdepth import _pykernels

BACKENDS = {"python": _pykernels}

try:
    from abcdepth import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None
else:
    BACKENDS["compiled"] = _compiled

if os.environ.get("ABCDEPTH_BACKEND", "").lower() == "python" or _compiled is None:
    BACKEND = "python"
else:
    BACKEND = "compiled"

_impl = BACKENDS[BACKEND]

condensed_distances = _impl.condensed_distances
cross_distances = _impl.cross_distances
entry_thresholds = _impl.entry_thresholds
depth_scan = _impl.depth_scan


def get_backend(name=None):
    """Return the kernel module for ``name`` (default: the active backend)."""
    name = BACKEND if name is None else name
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} is not available; have {sorted(BACKENDS)}") from None
