"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when it imports cleanly; the
pure-Python ``_pykernels`` module is the fallback.  Setting the environment
variable ``MONEXT_PURE=1`` forces the fallback.  Both backends return
identical results in identical order; the wrappers here normalize inputs
(nested int sequences) and outputs (tuples of tuples).
"""

import os

import numpy as np

from . import _pykernels

try:
    if os.environ.get("MONEXT_PURE", "") not in ("", "0"):
        raise ImportError("pure backend forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def available_backends():
    return ["python"] + (["cython"] if _ckernels is not None else [])


def _arr(t):
    return np.ascontiguousarray(np.asarray(t, dtype=np.int64))


def _lists(t):
    return [list(map(int, row)) for row in t]


def _tup(t):
    return tuple(tuple(int(v) for v in row) for row in t)


def _pick(backend):
    backend = backend or BACKEND
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return True
    if backend == "python":
        return False
    raise ValueError(f"unknown backend {backend!r}")


def assoc_witness(table, backend=None):
    """Lexicographically first (i, j, k) with (i*j)*k != i*(j*k), or None."""
    if _pick(backend):
        w = _ckernels.assoc_witness(_arr(table))
    else:
        w = _pykernels.assoc_witness(_lists(table))
    return None if w is None else tuple(int(v) for v in w)


def unital_tables(n, backend=None):
    """Every associative n x n table with identity 0, in lexicographic order."""
    if _pick(backend):
        return [_tup(t) for t in _ckernels.unital_tables(n)]
    return [_tup(t) for t in _pykernels.unital_tables(n)]


def act07_witness(X, B, rho, phi, gamma, backend=None):
    if _pick(backend):
        w = _ckernels.act07_witness(_arr(X), _arr(B), _arr(rho), _arr(phi), _arr(gamma))
    else:
        w = _pykernels.act07_witness(_lists(X), _lists(B), _lists(rho),
                                     _lists(phi), _lists(gamma))
    return None if w is None else tuple(int(v) for v in w)


def action_systems(X, B, backend=None):
    """All (rho, phi, gamma) triples satisfying every action-system axiom."""
    if _pick(backend):
        raw = _ckernels.action_systems(_arr(X), _arr(B))
    else:
        raw = _pykernels.action_systems(_lists(X), _lists(B))
    return [(_tup(r), _tup(p), _tup(g)) for r, p, g in raw]
