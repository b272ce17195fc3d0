"""Kernel selection: compiled extension if available, pure Python otherwise.

The default is resolved once at import.  Set ``MAXSUB_BACKEND=pure`` (or
``compiled``) to force a choice; forcing ``compiled`` raises if the
extension was not built.
"""

from __future__ import annotations

import os

from . import _pykernel


def _load():
    forced = os.environ.get("MAXSUB_BACKEND", "auto").strip().lower() or "auto"
    if forced not in {"auto", "pure", "compiled"}:
        raise ValueError(f"MAXSUB_BACKEND must be auto, pure or compiled, got {forced!r}")
    if forced in {"auto", "compiled"}:
        try:
            from . import _cykernel

            return _cykernel, "compiled"
        except ImportError:
            if forced == "compiled":
                raise
    return _pykernel, "pure"


_KERNEL, _BACKEND = _load()


def backend_name() -> str:
    """Name of the kernel the package selected at import: pure or compiled."""
    return _BACKEND


def get_kernel(name: str | None = None):
    if name is None or name == "auto":
        return _KERNEL
    if name == "pure":
        return _pykernel
    if name == "compiled":
        from . import _cykernel

        return _cykernel
    raise ValueError(f"unknown backend {name!r}")
