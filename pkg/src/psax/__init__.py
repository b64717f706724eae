"""psax: parameterized suffix and LCP array indexing.

Builds the parameterized suffix array (PSA) and parameterized LCP array
(pLCP) of a string over a mixed static/parameterized alphabet in
O(n*pi) time and O(n) space, and answers parameterized pattern-matching
queries against the built index.
"""

from .alphabet import AlphabetSpec
from .blocks import (BlockRef, BlockTable, block_count, decompose_blocks,
                     scan_family)
from .errors import (BadMagicError, ChecksumFailureError, CorruptIndexError,
                     EmptyStringError, IndexFileError, OutOfRangeError,
                     PsaxError, VersionMismatchError)
from .plcp import build_index, build_plcp, naive_plcp
from .psa import (PIndex, RankMatrix, build_psa, build_rank_matrix,
                  check_sorted, naive_psa, radix_sort_rank_strings)
from .pstring import (INF, Dist, FwdEncoding, Param, PrevEncoding, PString,
                      Static, fwd_encode, pmatch, prev_encode,
                      suffix_prev_at, suffix_prev_values)
from .query import find_occurrences
from .serialize import deserialize_index, serialize_index
from .suffix import (FamilyIndex, IntText, build_family_index,
                     build_suffix_array, lce, rank_blocks)

__version__ = "0.1.0"

__all__ = [
    "AlphabetSpec",
    "BadMagicError",
    "BlockRef",
    "BlockTable",
    "ChecksumFailureError",
    "CorruptIndexError",
    "Dist",
    "EmptyStringError",
    "FamilyIndex",
    "FwdEncoding",
    "INF",
    "IndexFileError",
    "IntText",
    "OutOfRangeError",
    "PIndex",
    "PString",
    "Param",
    "PrevEncoding",
    "PsaxError",
    "RankMatrix",
    "Static",
    "VersionMismatchError",
    "block_count",
    "build_family_index",
    "build_index",
    "build_plcp",
    "build_psa",
    "build_rank_matrix",
    "build_suffix_array",
    "check_sorted",
    "decompose_blocks",
    "deserialize_index",
    "fwd_encode",
    "find_occurrences",
    "lce",
    "naive_plcp",
    "naive_psa",
    "pmatch",
    "prev_encode",
    "radix_sort_rank_strings",
    "rank_blocks",
    "scan_family",
    "serialize_index",
    "suffix_prev_at",
    "suffix_prev_values",
]
