"""Inclusion-exclusion over subset unions, the inner loop of the oracles.

Given q generators encoded as bitmasks, ``signed_union_totals`` returns for
every distinct union U of a nonempty subset J the total of (-1)^(|J|+1) over
all J with that union.  Three interchangeable backends compute it:

* ``numba``: @njit sorted-array merge (default when numba imports)
* ``numpy``: the same merge with vectorised numpy calls, no JIT
* ``python``: dict accumulation over arbitrary-width ints

All three fold subsets with equal union together after each generator, so
the work is q times the number of distinct unions rather than 2^q.

Select with the ``SCHUBREST_BACKEND`` environment variable or the ``backend``
argument.  Masks wider than 64 bits always use ``python``.
"""
from __future__ import annotations

import logging
import os
from typing import Sequence

import numpy as np

log = logging.getLogger(__name__)

ENV_FLAG = "SCHUBREST_BACKEND"
BACKENDS = ("numba", "numpy", "python")
MAX_GENERATORS = 26

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


def default_backend() -> str:
    name = os.environ.get(ENV_FLAG, "").strip().lower()
    if not name:
        return "numba" if NUMBA_AVAILABLE else "numpy"
    if name not in BACKENDS:
        raise ValueError(f"{ENV_FLAG}={name!r}; expected one of {BACKENDS}")
    if name == "numba" and not NUMBA_AVAILABLE:
        log.warning("numba requested but not importable; using numpy")
        return "numpy"
    return name


@njit(cache=True)
def _totals_numba(gens):
    # (union -> signed total) over subsets of the generators seen so far,
    # kept as a sorted key array with zero totals dropped
    keys = np.empty(0, dtype=np.uint64)
    vals = np.empty(0, dtype=np.int64)
    for k in range(gens.shape[0]):
        g = gens[k]
        m = keys.shape[0]
        ck = np.empty(2 * m + 1, dtype=np.uint64)
        cv = np.empty(2 * m + 1, dtype=np.int64)
        for i in range(m):
            ck[i] = keys[i]
            cv[i] = vals[i]
            ck[m + i] = keys[i] | g
            cv[m + i] = -vals[i]
        ck[2 * m] = g
        cv[2 * m] = 1
        order = np.argsort(ck)
        out_k = np.empty(2 * m + 1, dtype=np.uint64)
        out_v = np.zeros(2 * m + 1, dtype=np.int64)
        count = 0
        for idx in range(2 * m + 1):
            pos = order[idx]
            if count == 0 or ck[pos] != out_k[count - 1]:
                if count > 0 and out_v[count - 1] == 0:
                    count -= 1
                out_k[count] = ck[pos]
                out_v[count] = 0
                count += 1
            out_v[count - 1] += cv[pos]
        if count > 0 and out_v[count - 1] == 0:
            count -= 1
        keys = out_k[:count].copy()
        vals = out_v[:count].copy()
    return keys, vals


def _totals_numpy(gens: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    keys = np.empty(0, dtype=np.uint64)
    vals = np.empty(0, dtype=np.int64)
    for g in gens:
        ck = np.concatenate([keys, keys | g, np.array([g], dtype=np.uint64)])
        cv = np.concatenate([vals, -vals, np.ones(1, dtype=np.int64)])
        order = np.argsort(ck)
        ck, cv = ck[order], cv[order]
        starts = np.flatnonzero(np.r_[True, ck[1:] != ck[:-1]])
        keys, vals = ck[starts], np.add.reduceat(cv, starts)
        keep = vals != 0
        keys, vals = keys[keep], vals[keep]
    return keys, vals


def _totals_python(gens: Sequence[int]) -> dict[int, int]:
    acc: dict[int, int] = {}
    # acc holds (union -> signed total) for subsets of the generators seen so far
    for g in gens:
        new: dict[int, int] = {g: 1}
        for u, c in acc.items():
            v = u | g
            new[v] = new.get(v, 0) - c
        for u, c in new.items():
            acc[u] = acc.get(u, 0) + c
    return acc


def signed_union_totals(masks: Sequence[int], backend: str | None = None) -> dict[int, int]:
    """Map each subset union to sum over subsets J with that union of (-1)^(|J|+1).

    Zero totals are dropped.  ``masks`` are nonnegative ints.
    """
    masks = [int(x) for x in masks]
    if not masks:
        return {}
    if len(masks) > MAX_GENERATORS:
        raise ValueError(f"{len(masks)} generators exceeds the limit of {MAX_GENERATORS}")
    backend = backend or default_backend()
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if max(masks) >= 1 << 64:
        backend = "python"
    if backend == "python":
        out = _totals_python(masks)
        return {u: c for u, c in out.items() if c}
    gens = np.array(masks, dtype=np.uint64)
    if backend == "numba":
        keys, vals = _totals_numba(gens)
    else:
        keys, vals = _totals_numpy(gens)
    return {int(u): int(c) for u, c in zip(keys, vals) if c}
