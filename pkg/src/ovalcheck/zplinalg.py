"""Z_p kernel selection: compiled extension when available, else pure Python.

Set OVALCHECK_PURE_PYTHON=1 to force the pure implementation (used by
the benchmark and by CI runs that exercise the fallback path).  Both
implementations are deterministic and must agree exactly; the test
suite cross-checks them whenever the extension is importable.
"""

from __future__ import annotations

import os

if os.environ.get("OVALCHECK_PURE_PYTHON"):
    from . import _zpcore_py as _impl
else:
    try:
        from . import _zpcore as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _zpcore_py as _impl  # type: ignore[no-redef]

IMPLEMENTATION: str = _impl.IMPLEMENTATION

solve_mod_p = _impl.solve_mod_p
search_sign_assignment = _impl.search_sign_assignment
