"""Kernel dispatch: numba-jitted hot loops with a pure numpy/python fallback.

The backend is picked once at import from the ``HAMPATH_NUMBA`` environment
variable ("0" forces the fallback), and can be overridden programmatically
with :func:`set_backend` (the benchmark uses this to compare both).

Every kernel exists in both backends with an identical signature:

* ``articulation_mask(n, indptr, indices)``      -> uint8[n]
* ``component_labels(n, indptr, indices, removed)`` -> (int32[n], count)
* ``enumerate_connected_stats(n, lo, hi)``       -> (codes int64[:], alpha int8[:])
* ``ham_reach(adj)``                             -> int64[n, 2**n]
* ``oracle_tables_from_reach(adj, reach)``       -> (uv uint8[n,n], frm uint8[n], pc uint8[n,n])
"""

from __future__ import annotations

import os

from . import _numpy as _numpy_backend

_BACKENDS = {"numpy": _numpy_backend}
_active_name = "numpy"


def _try_load_numba():
    try:
        from . import _numba as _numba_backend
    except ImportError:
        return None
    _BACKENDS["numba"] = _numba_backend
    return _numba_backend


def set_backend(name: str) -> None:
    global _active_name
    if name == "numba" and "numba" not in _BACKENDS:
        if _try_load_numba() is None:
            raise RuntimeError("numba backend requested but numba is not importable")
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}")
    _active_name = name


def backend_name() -> str:
    return _active_name


def get():
    """Active backend module."""
    return _BACKENDS[_active_name]


_env = os.environ.get("HAMPATH_NUMBA", "").strip().lower()
if _env in ("0", "false", "no", "off"):
    _active_name = "numpy"
elif _try_load_numba() is not None:
    _active_name = "numba"
else:
    _active_name = "numpy"
