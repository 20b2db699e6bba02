"""Kernel selection: the compiled extension when available, else pure Python.

Set RSKFORGE_PURE=1 to force the fallback (useful for benchmarking and for
checking parity between the two implementations).
"""

import os

if os.environ.get("RSKFORGE_PURE"):
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as _impl

        BACKEND = "pure"

rsk_shape_of = _impl.rsk_shape_of
cycle_type_of = _impl.cycle_type_of
census_shard = _impl.census_shard

__all__ = ["BACKEND", "census_shard", "cycle_type_of", "rsk_shape_of"]
