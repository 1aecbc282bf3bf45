"""Runtime switches read from the environment.

Values are read on every call so tests can flip them with ``monkeypatch``.
"""

from __future__ import annotations

import os

_TRUE_TOKENS = {"1", "true", "yes", "on"}

DEFAULT_MAX_QUBITS = 24


def _flag(name: str, default: str = "0") -> bool:
    return os.getenv(name, default).strip().lower() in _TRUE_TOKENS


def max_qubits() -> int:
    """Simulation ceiling (``QALLOC_MAX_QUBITS``, default 24 = 128 MiB of complex doubles)."""
    raw = os.getenv("QALLOC_MAX_QUBITS", "").strip()
    if not raw:
        return DEFAULT_MAX_QUBITS
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_QUBITS


def debug_enabled() -> bool:
    """Gate-by-gate norm checking during simulation (``QALLOC_DEBUG``)."""
    return _flag("QALLOC_DEBUG")


def diag_enabled() -> bool:
    """Opt-in diagnostics logging (``QALLOC_DIAG``)."""
    return _flag("QALLOC_DIAG")


def default_workers() -> int:
    raw = os.getenv("QALLOC_WORKERS", "1").strip()
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
