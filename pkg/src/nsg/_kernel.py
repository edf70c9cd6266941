"""Kernel backend selection, done once at import.

The compiled extension (nsg._explore_cy) is used when importable; the
pure-Python reference kernel is the fallback.  NSG_BACKEND=py forces the
fallback, NSG_BACKEND=cy makes a missing extension an import error.
"""
from __future__ import annotations

import os

from . import _explore_py

_requested = os.environ.get("NSG_BACKEND", "").strip().lower()

if _requested == "py":
    active = _explore_py
else:
    try:
        from . import _explore_cy as active  # type: ignore[no-redef]
    except ImportError:
        if _requested == "cy":
            raise
        active = _explore_py


def get_kernel(name: str | None = None):
    """Resolve a kernel module by name ('py', 'cy', or None for the default)."""
    if name in (None, "", "auto"):
        return active
    if name == "py":
        return _explore_py
    if name == "cy":
        from . import _explore_cy
        return _explore_cy
    raise ValueError(f"unknown backend {name!r} (expected 'py' or 'cy')")
