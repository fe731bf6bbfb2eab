"""Backend selection for the per-root tree-profile sweep.

Prefers the compiled Cython kernel; falls back to the pure-Python
implementation when the extension is unavailable or AGT_PURE_PYTHON is set.
Both backends implement exactly the same contract and are compared by the
test suite and by benchmarks/bench_treewalk.py.
"""

from __future__ import annotations

import os

if os.environ.get("AGT_PURE_PYTHON"):
    from . import _treewalk_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _treewalk as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _treewalk_py as _impl

        BACKEND = "python"

tree_stats = _impl.tree_stats
