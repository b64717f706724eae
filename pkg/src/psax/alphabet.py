"""Mapping raw inputs to p-strings.

Byte mode tags each byte: members of the static set are Static symbols,
every other byte is Param.  By default ASCII uppercase, digits,
punctuation and whitespace are static and everything else (notably
lowercase letters) is parameterized.  Token mode splits on whitespace and
takes the static token list from a JSON sidecar; ids are assigned by
sorted order, so the mapping is deterministic.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass

import numpy as np

from .errors import EmptyStringError
from .pstring import PString

DEFAULT_STATIC_BYTES = frozenset(
    ord(c) for c in string.ascii_uppercase + string.digits
    + string.punctuation + string.whitespace
)


@dataclass(frozen=True)
class AlphabetSpec:
    """Which raw symbols are static; everything else is parameterized."""

    mode: str
    static_set: frozenset

    @classmethod
    def default_bytes(cls) -> "AlphabetSpec":
        return cls("byte", DEFAULT_STATIC_BYTES)

    @classmethod
    def from_static_chars(cls, chars: str) -> "AlphabetSpec":
        return cls("byte", frozenset(ord(c) for c in chars))

    @classmethod
    def from_param_chars(cls, chars: str) -> "AlphabetSpec":
        param = frozenset(ord(c) for c in chars)
        return cls("byte", frozenset(range(256)) - param)

    @classmethod
    def tokens(cls, static_tokens) -> "AlphabetSpec":
        return cls("token", frozenset(static_tokens))

    @classmethod
    def from_token_file(cls, path) -> "AlphabetSpec":
        with open(path, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
        tokens = spec["static"] if isinstance(spec, dict) else spec
        return cls.tokens(tokens)

    def to_pstring(self, data) -> PString:
        if self.mode == "byte":
            if isinstance(data, str):
                data = data.encode()
            return self._from_bytes(data)
        return self._from_tokens(data)

    def _from_bytes(self, data: bytes) -> PString:
        if not data:
            raise EmptyStringError("empty input")
        ids = np.frombuffer(data, np.uint8).astype(np.int64)
        static = np.zeros(256, np.uint8)
        for b in self.static_set:
            static[b] = 1
        is_param = 1 - static[ids]
        return PString(is_param, ids)

    def _from_tokens(self, text: str) -> PString:
        toks = text.split()
        if not toks:
            raise EmptyStringError("no tokens in input")
        static_sorted = sorted(self.static_set)
        static_id = {t: i for i, t in enumerate(static_sorted)}
        params = sorted({t for t in toks if t not in static_id})
        param_id = {t: i for i, t in enumerate(params)}
        is_param = np.fromiter((t not in static_id for t in toks),
                               np.uint8, len(toks))
        ids = np.fromiter(
            (param_id[t] if t not in static_id else static_id[t]
             for t in toks), np.int64, len(toks))
        return PString(is_param, ids)
