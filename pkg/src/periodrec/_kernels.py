"""Backend selection for the hot loops.

The compiled extension is used when importable; set ``PERIODREC_PURE=1`` to
force the pure Python path.
"""

import os

from . import _fallback

BACKENDS = {"pure": _fallback}

try:
    from . import _core
except ImportError:  # extension not built
    _core = None
else:
    BACKENDS["compiled"] = _core

if _core is not None and os.environ.get("PERIODREC_PURE", "") in ("", "0"):
    BACKEND = "compiled"
else:
    BACKEND = "pure"


def get(name=None):
    """Kernel module for ``name`` (default: the one selected at import)."""
    name = name or BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} not available; have {sorted(BACKENDS)}") from None
