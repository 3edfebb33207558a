"""Select the polynomial kernel backend at import time.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python ``_kernels_py`` module is loaded. Setting ``SN_PURE_PYTHON=1``
forces the fallback (used by the benchmark and the backend parity tests).
"""

import os

if os.environ.get("SN_PURE_PYTHON"):
    from . import _kernels_py as backend

    BACKEND = "python"
else:
    try:
        from . import _kernels as backend

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _kernels_py as backend

        BACKEND = "python"

add = backend.add
sub = backend.sub
scale = backend.scale
mul = backend.mul
partial = backend.partial
add_into = backend.add_into
addmul_into = backend.addmul_into
finalize = backend.finalize
merge_sign = backend.merge_sign
normalize = backend.normalize
