"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set LISTCOLOR_PURE=1 to force the pure kernel (any value other than
0/false/no/off counts as set).
"""

from __future__ import annotations

import os

from . import _core_py

COMPLETED = _core_py.COMPLETED
CAPPED = _core_py.CAPPED
TIMED_OUT = _core_py.TIMED_OUT
CERTIFIED = _core_py.CERTIFIED


def _want_pure() -> bool:
    val = os.environ.get("LISTCOLOR_PURE", "")
    return val.lower() not in ("", "0", "false", "no", "off")


if _want_pure():
    _impl = _core_py
    _KERNEL = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        _KERNEL = "compiled"
    except ImportError:
        _impl = _core_py
        _KERNEL = "python"

run_restart = _impl.run_restart


def active_kernel() -> str:
    """Which kernel this process is using: 'compiled' or 'python'."""
    return _KERNEL
