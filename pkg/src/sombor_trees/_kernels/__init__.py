"""Kernel backend selection.

Prefers the compiled extension and falls back to the pure-Python module when
it is absent.  Set SOMBOR_TREES_BACKEND=pure to force the fallback, or
=compiled to fail loudly when the extension is missing.  Both backends expose
the same four callables and produce bit-identical output.
"""

import os

_requested = os.environ.get("SOMBOR_TREES_BACKEND", "").strip().lower()

if _requested == "pure":
    from . import pure as _impl
elif _requested == "compiled":
    from . import _speedups as _impl  # ImportError here is intentional
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import pure as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND
iter_level_sequences = _impl.iter_level_sequences
iter_rooted_level_sequences = _impl.iter_rooted_level_sequences
tree_stats_from_levels = _impl.tree_stats_from_levels
family_sweep = _impl.family_sweep

__all__ = [
    "BACKEND",
    "iter_level_sequences",
    "iter_rooted_level_sequences",
    "tree_stats_from_levels",
    "family_sweep",
]
