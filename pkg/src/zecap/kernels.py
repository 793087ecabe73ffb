"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting ``ZECAP_PURE=1`` forces the pure-Python backend.
"""

from __future__ import annotations

import os

from zecap import _pykernels

if os.environ.get("ZECAP_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from zecap import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on build
        _impl = _pykernels

BACKEND = "compiled" if _impl is not _pykernels else "python"

distinguishability_matrix = _impl.distinguishability_matrix
first_indistinguishable_pair = _impl.first_indistinguishable_pair
adjacency_bitsets = _impl.adjacency_bitsets
max_clique = _impl.max_clique
first_clique = _impl.first_clique
