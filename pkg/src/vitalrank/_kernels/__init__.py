"""Kernel backend selection.

The hot loops (BFS sweeps, inverse-distance sums, betweenness, SI runs) have
two interchangeable implementations: a compiled Cython extension and a pure
NumPy fallback.  The compiled one is picked automatically when present;
``VITALRANK_BACKEND`` forces the choice (``compiled``/``c`` or
``python``/``pure``; anything else, including unset and ``auto``, means
auto-detect).

Both backends produce bit-identical integer results (distances, infection
counts); floating-point sums agree to the last few ulp.
"""

from __future__ import annotations

import os

from ._seeds import fold_key, mix64

_choice = os.environ.get("VITALRANK_BACKEND", "auto").strip().lower()

if _choice in ("python", "pure", "py"):
    from . import _pykern as _impl
elif _choice in ("compiled", "c", "ext"):
    from . import _ckern as _impl  # ImportError here means the ext is absent
else:
    try:
        from . import _ckern as _impl
    except ImportError:
        from . import _pykern as _impl

BACKEND = _impl.BACKEND_NAME

bfs_block = _impl.bfs_block
inv_dist_sum = _impl.inv_dist_sum
brandes = _impl.brandes
si_counts = _impl.si_counts

__all__ = [
    "BACKEND",
    "bfs_block",
    "inv_dist_sum",
    "brandes",
    "si_counts",
    "fold_key",
    "mix64",
]
