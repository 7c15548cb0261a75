"""Kernel backend selection.

The compiled Cython extension is preferred; the numpy implementation is a
drop-in fallback so the package works from a source tree without a compiler.
Set ``LAPREG_KERNELS=python`` or ``LAPREG_KERNELS=cython`` to force a backend
(the latter raises if the extension is missing).
"""

import os

_forced = os.environ.get("LAPREG_KERNELS", "").strip().lower()

if _forced == "python":
    from . import _pykernels as _impl

    BACKEND = "python"
elif _forced == "cython":
    from . import _cykernels as _impl

    BACKEND = "cython"
else:
    try:
        from . import _cykernels as _impl

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

decomposition_curves = _impl.decomposition_curves
envelope_curve = _impl.envelope_curve
edge_quadratic_form = _impl.edge_quadratic_form
laplacian_matvec = _impl.laplacian_matvec

__all__ = [
    "BACKEND",
    "decomposition_curves",
    "envelope_curve",
    "edge_quadratic_form",
    "laplacian_matvec",
]
