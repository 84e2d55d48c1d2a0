"""Search kernels with a compiled fast path.

The Cython module ``_ckernels`` is used when it was built and the instance
fits into 64-bit words; otherwise the pure-Python twins run. Set
``POSETCAT_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

try:
    if os.environ.get("POSETCAT_PURE_PYTHON"):
        raise ImportError("forced pure-Python kernels")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def _bits_for(m):
    return max(1, (m - 1).bit_length())


def enumerate_maps(order, lower, allowed, cod_up, cap, force_python=False):
    if _ckernels is not None and not force_python and len(cod_up) <= 64:
        return _ckernels.enumerate_maps(order, lower, allowed, cod_up, cap)
    return _pykernels.enumerate_maps(order, lower, allowed, cod_up, cap)


def component_search(dom_lower, dom_upper, cod_lower, cod_upper, cod_down,
                     start, targets, frozen, cap, force_python=False):
    m = len(cod_down)
    if (_ckernels is not None and not force_python and m <= 64
            and len(start) * _bits_for(m) <= 64):
        return _ckernels.component_search(dom_lower, dom_upper, cod_lower, cod_upper,
                                          cod_down, start, targets, frozen, cap)
    return _pykernels.component_search(dom_lower, dom_upper, cod_lower, cod_upper,
                                       cod_down, start, targets, frozen, cap)
