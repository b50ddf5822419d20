"""Boolean hot loops with a compiled backend and a pure-Python fallback.

The compiled module is used when it imports and the inputs fit in 64-bit
masks.  Set ``MDIOID_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pure

try:
    if os.environ.get("MDIOID_PURE_PYTHON") == "1":
        raise ImportError("pure Python forced")
    from . import _cext
except ImportError:
    _cext = None

BACKEND = "cython" if _cext is not None else "python"

_WIDTH = 64


def _fits(values, count):
    return count <= _WIDTH and all(int(v).bit_length() <= _WIDTH for v in values)


def bool_bidet(rows, n):
    if _cext is not None and _fits(rows, n):
        return _cext.bool_bidet(rows, n)
    return _pure.bool_bidet(rows, n)


def first_unit_diagonal(rows, n, parity=-1):
    if _cext is not None and _fits(rows, n):
        return _cext.first_unit_diagonal(rows, n, parity)
    return _pure.first_unit_diagonal(rows, n, parity)


def sign_pattern_attach(masks):
    if _cext is not None and _fits(masks, len(masks)):
        return _cext.sign_pattern_attach(masks)
    return _pure.sign_pattern_attach(masks)


def closure_attach(masks):
    # the union table has 2**k entries
    if _cext is not None and len(masks) <= 30 and _fits(masks, len(masks)):
        return _cext.closure_attach(masks)
    return _pure.closure_attach(masks)


def even_cycle(adj, n):
    if _cext is not None and _fits(adj, n):
        return _cext.even_cycle(adj, n)
    return _pure.even_cycle(adj, n)


def union_collision(masks):
    if _cext is not None and len(masks) <= 30 and _fits(masks, len(masks)):
        return _cext.union_collision(masks)
    return _pure.union_collision(masks)


__all__ = [
    "BACKEND",
    "bool_bidet",
    "first_unit_diagonal",
    "sign_pattern_attach",
    "closure_attach",
    "even_cycle",
    "union_collision",
]
