"""Hot numeric kernels with backend selection at import time.

The compiled extension (``_core``, built from Cython) is preferred; the
pure-numpy module ``_py`` is the fallback and the reference semantics.
Set ``CROSSCOORD_PURE_PY=1`` to force the fallback (used by the kernel
benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os

from . import _py


def get_backend(name: str):
    """Return a kernel backend module by name ('python' or 'compiled').

    Raises ImportError if the compiled extension is unavailable.
    """
    if name == "python":
        return _py
    if name == "compiled":
        from . import _core

        return _core
    raise ValueError(f"unknown kernel backend {name!r}")


if os.environ.get("CROSSCOORD_PURE_PY"):
    _impl = _py
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _py

BACKEND: str = _impl.BACKEND
simplex_project = _impl.simplex_project
min_norm_gram = _impl.min_norm_gram
