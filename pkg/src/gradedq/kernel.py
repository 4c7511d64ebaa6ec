"""Kernel backend selection.

The hot inner loops (exact polynomial arithmetic, graded monomial
products with Koszul signs) exist twice: a Cython extension
(gradedq._kernel_c) and a pure-Python fallback (gradedq._kernel_py)
with the identical API.  The extension is used when importable; set
GRADEDQ_KERNEL=py or GRADEDQ_KERNEL=c to force a backend.
"""

import os

_choice = os.environ.get("GRADEDQ_KERNEL", "auto").lower()

if _choice in ("auto", "c"):
    try:
        from . import _kernel_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _choice == "c":
            raise
        from . import _kernel_py as _impl
elif _choice in ("py", "python"):
    from . import _kernel_py as _impl
else:
    raise ValueError(f"GRADEDQ_KERNEL must be auto, c or py, got {_choice!r}")

BACKEND = _impl.BACKEND
poly_add = _impl.poly_add
poly_neg = _impl.poly_neg
poly_scale = _impl.poly_scale
poly_mul = _impl.poly_mul
poly_partial = _impl.poly_partial
mono_mul = _impl.mono_mul
mono_partial = _impl.mono_partial
element_mul = _impl.element_mul
