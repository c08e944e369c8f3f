"""Kernel backend selected at import.

The compiled Cython extension is used when it was built; otherwise, or when
``COMTOPE_PURE_PYTHON`` is set to a non-empty value, the pure-Python module
is used.  Inputs wider than the compiled kernel's word size are routed to the
pure-Python implementation per call.
"""
import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("COMTOPE_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

backend = compiled_backend or python_backend
BACKEND = backend.NAME


def _pick(bits):
    if backend.MAX_BITS is not None and bits > backend.MAX_BITS:
        return python_backend
    return backend


def reconstruct_range(tope_codes, k, opposite, start, stop):
    return _pick(k).reconstruct_range(tope_codes, k, opposite, start, stop)


def first_closure_violation(plus, minus, negate_second, bits):
    return _pick(bits).first_closure_violation(plus, minus, negate_second)


def first_elimination_violation(plus, minus, bits):
    return _pick(bits).first_elimination_violation(plus, minus)
