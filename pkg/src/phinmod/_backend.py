"""Kernel backend selection.

The compiled extension is preferred; the pure-Python twin is the fallback.
Set ``PHINMOD_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and by tests that exercise both lanes).
"""

import os

if os.environ.get("PHINMOD_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

BACKEND: str = kernels.BACKEND

count_points = kernels.count_points
hasse_scan = kernels.hasse_scan
det_int = kernels.det_int
rank_int = kernels.rank_int
charpoly_int = kernels.charpoly_int
