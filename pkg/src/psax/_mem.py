"""glibc malloc tuning for allocation-heavy builds.

Index construction allocates and frees many tens-of-MB numpy arrays per
family.  With default glibc behaviour those come from fresh mmaps, so
every build pays kernel page-zeroing for gigabytes of transient buffers;
raising the mmap/trim thresholds keeps them inside the arena and roughly
halves large-build times.  Set PSAX_NO_MALLOC_TUNING=1 to leave the
process allocator untouched.
"""

from __future__ import annotations

import ctypes
import os
import sys

_M_TRIM_THRESHOLD = -1
_M_MMAP_THRESHOLD = -3
_LIMIT = 1 << 28

_done = False


def tune_allocator() -> None:
    """Idempotent; no-op off Linux/glibc or when opted out."""
    global _done
    if _done:
        return
    _done = True
    if os.environ.get("PSAX_NO_MALLOC_TUNING"):
        return
    if not sys.platform.startswith("linux"):
        return
    try:
        libc = ctypes.CDLL("libc.so.6", use_errno=True)
        libc.mallopt(_M_MMAP_THRESHOLD, _LIMIT)
        libc.mallopt(_M_TRIM_THRESHOLD, _LIMIT)
    except (OSError, AttributeError):
        pass
