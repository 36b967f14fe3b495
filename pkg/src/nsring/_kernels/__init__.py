"""Hot loops for the roots search, compiled when possible.

``BACKEND`` is "cython" if the extension imported, else "python".  The
compiled kernels work on uint64 windows, so wider windows always go to the
Python versions.  Setting NSRING_PURE_PYTHON=1 skips the extension.
"""
from __future__ import annotations

import importlib
import os

from . import _pykernels


def _load_compiled():
    if os.environ.get("NSRING_PURE_PYTHON"):
        return None
    try:
        return importlib.import_module("._ckernels", __name__)
    except ImportError:  # extension not built
        return None


_ckernels = _load_compiled()

BACKEND = "cython" if _ckernels is not None else "python"
C_MAX_WIDTH = 64


def _pick(width: int, backend: str | None):
    if backend == "python" or _ckernels is None or width > C_MAX_WIDTH:
        if backend == "cython" and _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _pykernels
    return _ckernels


def window_closure(hmask: int, smask: int, width: int, *, backend: str | None = None) -> int:
    return _pick(width, backend).window_closure(hmask, smask, width)


def window_product(amask: int, bmask: int, width: int, *, backend: str | None = None) -> int:
    return _pick(width, backend).window_product(amask, bmask, width)


def root_search(
    hmask: int, kmask: int, gapmask: int, width: int, max_exp: int, *, backend: str | None = None
) -> list[tuple[int, int]]:
    return list(_pick(width, backend).root_search(hmask, kmask, gapmask, width, max_exp))
