"""Shim package for in-repo execution.

The implementation modules live under `src/`. During direct runs without
installation, `qmod.*` imports resolve through this shim, which puts the
repository root on the import path so `src` is importable.
"""

from __future__ import annotations

import os as _os
import sys as _sys

_ROOT = _os.path.dirname(_os.path.abspath(__file__))
_PARENT = _os.path.dirname(_ROOT)

if _PARENT not in _sys.path:
    _sys.path.insert(0, _PARENT)

__all__ = []
