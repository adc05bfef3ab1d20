"""Kernel dispatch: compiled core when importable, pure Python otherwise.

The compiled module handles graphs on at most 64 vertices; anything larger
always runs on the pure-Python implementation. Setting the environment
variable ``EQUIMATCH_PURE=1`` before import forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("EQUIMATCH_PURE"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

COMPILED = _ckernels is not None
BACKEND = "cython" if COMPILED else "python"
_LIMIT = 64

_NAMES = (
    "components",
    "is_connected",
    "odd_even_counts",
    "find_claw",
    "find_independent_triple",
    "find_bad_triple",
    "matching_profile",
    "vertex_connectivity",
)


def _dispatch(name: str):
    slow = getattr(_pykernels, name)
    if _ckernels is None:
        return slow
    fast = getattr(_ckernels, name)

    def kernel(n, adj, *args):
        if n <= _LIMIT:
            return fast(n, adj, *args)
        return slow(n, adj, *args)

    kernel.__name__ = name
    kernel.__doc__ = slow.__doc__
    return kernel


components = _dispatch("components")
is_connected = _dispatch("is_connected")
odd_even_counts = _dispatch("odd_even_counts")
find_claw = _dispatch("find_claw")
find_independent_triple = _dispatch("find_independent_triple")
find_bad_triple = _dispatch("find_bad_triple")
matching_profile = _dispatch("matching_profile")
vertex_connectivity = _dispatch("vertex_connectivity")


def backend(name: str):
    """Return the named kernel module, ``"python"`` or ``"cython"``."""
    if name == "python":
        return _pykernels
    if name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
