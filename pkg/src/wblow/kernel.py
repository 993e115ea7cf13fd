"""Backend selection for the term-map kernel.

Imports the compiled extension when it is available and not disabled via
the WBLOW_PURE environment variable, otherwise the pure Python module.
Both expose the same functions; tests assert their outputs agree.
"""

from __future__ import annotations

import os

if os.environ.get("WBLOW_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND

add_terms = _impl.add_terms
neg_terms = _impl.neg_terms
scale_terms = _impl.scale_terms
mul_terms = _impl.mul_terms
pow_terms = _impl.pow_terms
partial_terms = _impl.partial_terms
