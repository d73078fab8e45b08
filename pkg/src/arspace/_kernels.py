"""Kernel selection: the compiled extension when it was built, else pure Python.

Set ``ARSPACE_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if not os.environ.get("ARSPACE_PURE_PYTHON"):
    try:
        from ._ckernels import euler_form, int_rank  # noqa: F401

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import euler_form, int_rank  # noqa: F401
