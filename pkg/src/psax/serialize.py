"""Binary index file format.

Layout (little-endian):
  magic "PSAX" | u32 version | u64 n | u32 pi | 32-byte input digest |
  n x u64 psa (1-based) | n x u64 plcp | u32 CRC-32 of everything before.
"""

from __future__ import annotations

import struct
import zlib

import numpy as np

from .errors import BadMagicError, ChecksumFailureError, VersionMismatchError
from .psa import PIndex

MAGIC = b"PSAX"
VERSION = 1
_HEADER = struct.Struct("<4sIQI32s")


def serialize_index(idx: PIndex) -> bytes:
    """Serialize deterministically; identical indexes give identical bytes."""
    head = _HEADER.pack(MAGIC, VERSION, idx.n, idx.pi, idx.digest)
    body = idx.psa.astype("<u8").tobytes() + idx.plcp.astype("<u8").tobytes()
    blob = head + body
    return blob + struct.pack("<I", zlib.crc32(blob))


def deserialize_index(data: bytes) -> PIndex:
    if len(data) >= 4 and data[:4] != MAGIC:
        raise BadMagicError(f"expected magic {MAGIC!r}")
    if len(data) < _HEADER.size + 4:
        raise ChecksumFailureError("file truncated")
    _, version, n, pi, digest = _HEADER.unpack_from(data)
    if version != VERSION:
        raise VersionMismatchError(f"unsupported version {version}")
    expected = _HEADER.size + 16 * n + 4
    if len(data) != expected:
        raise ChecksumFailureError(
            f"length {len(data)} does not match n={n} (expected {expected})")
    (crc,) = struct.unpack_from("<I", data, expected - 4)
    if crc != zlib.crc32(data[:-4]):
        raise ChecksumFailureError("payload checksum mismatch")
    off = _HEADER.size
    psa = np.frombuffer(data, "<u8", n, off).astype(np.int64)
    plcp = np.frombuffer(data, "<u8", n, off + 8 * n).astype(np.int64)
    return PIndex(psa=psa, plcp=plcp, n=n, pi=pi, digest=digest)
