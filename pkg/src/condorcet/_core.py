"""Backend selection: compiled kernel when available, pure Python otherwise.

Set CONDORCET_BACKEND=python to force the fallback, or =compiled to make a
missing extension an import error instead of a silent slowdown.
"""

from __future__ import annotations

import os

_FORCED = os.environ.get("CONDORCET_BACKEND", "").strip().lower()

if _FORCED not in ("", "compiled", "python"):
    raise ImportError(f"unknown CONDORCET_BACKEND {_FORCED!r}, expected 'compiled' or 'python'")

if _FORCED == "python":
    from . import _kernel_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _FORCED == "compiled":
            raise
        from . import _kernel_py as _impl

        BACKEND = "python"

enumerate_scheme = _impl.enumerate_scheme
betweenness_adjacency = _impl.betweenness_adjacency
median_unique_ok = _impl.median_unique_ok


def backend_module(name: str):
    """Fetch a specific backend by name (used by parity tests and the
    benchmark). Raises ImportError when the compiled one is not built."""
    if name == "python":
        from . import _kernel_py

        return _kernel_py
    if name == "compiled":
        from . import _kernel  # type: ignore[attr-defined]

        return _kernel
    raise ValueError(f"unknown backend {name!r}")
