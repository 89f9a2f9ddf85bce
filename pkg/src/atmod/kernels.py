"""Kernel backend selection.

The compiled extension is used when available; set ATMOD_PURE_PYTHON=1 to
force the pure-Python implementation.  Both backends export the same
functions with identical behaviour.
"""

import os

if os.environ.get("ATMOD_PURE_PYTHON"):
    from atmod import _pykernels as _impl
else:
    try:
        from atmod import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from atmod import _pykernels as _impl

BACKEND = _impl.__name__.rsplit(".", 1)[-1].lstrip("_")

find_model = _impl.find_model
enum_models = _impl.enum_models
saturate = _impl.saturate
