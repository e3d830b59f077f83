"""Backend selection for the integer kernels.

The compiled extension is used when it was built; otherwise, or when
``LINKGEOM_PURE_PYTHON=1`` is set, the pure-Python twins are used.  Both
produce identical results.
"""
import os

from . import _kernels_py

if os.environ.get("LINKGEOM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

det_int = _impl.det_int
lp_max_int = _impl.lp_max_int
det_field = _kernels_py.det_field
lp_max_field = _kernels_py.lp_max_field
OPTIMAL, INFEASIBLE, UNBOUNDED = _kernels_py.OPTIMAL, _kernels_py.INFEASIBLE, _kernels_py.UNBOUNDED
