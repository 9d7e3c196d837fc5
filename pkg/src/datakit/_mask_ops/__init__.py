"""Mask kernels with a compiled core and a numpy fallback.

The native extension is preferred when importable; set
``DATAKIT_PURE_PYTHON=1`` to force the fallback. ``BACKEND`` names the
selected implementation.
"""

import os

if os.environ.get("DATAKIT_PURE_PYTHON", "") not in ("", "0"):
    from ._numpy import filter_small_components, label_components, passive_dilate
    BACKEND = "python"
else:
    try:
        from ._native import filter_small_components, label_components, passive_dilate
        BACKEND = "native"
    except ImportError:
        from ._numpy import filter_small_components, label_components, passive_dilate
        BACKEND = "python"

__all__ = ["filter_small_components", "passive_dilate", "label_components", "BACKEND"]
