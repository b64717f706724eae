import json

import pytest

from psax.alphabet import AlphabetSpec
from psax.errors import EmptyStringError
from psax.pstring import prev_encode


def test_default_byte_mode():
    x = AlphabetSpec.default_bytes().to_pstring(b"stssAtssAs")
    assert x.pi_count == 2
    assert x.sigma_count == 1
    assert prev_encode(x).values.tolist() == \
        [0, 0, 2, 1, -66, 4, 3, 1, -66, 2]


def test_default_classes():
    x = AlphabetSpec.default_bytes().to_pstring(b"a B9.\x80\n")
    # lowercase and high bytes are Param; upper/digit/punct/space Static
    assert x.is_param.tolist() == [1, 0, 0, 0, 0, 1, 0]


def test_static_override():
    spec = AlphabetSpec.from_static_chars("s")
    x = spec.to_pstring(b"stA")
    assert x.is_param.tolist() == [0, 1, 1]


def test_param_override():
    spec = AlphabetSpec.from_param_chars("A")
    x = spec.to_pstring(b"stA")
    assert x.is_param.tolist() == [0, 0, 1]


def test_empty_input_rejected():
    with pytest.raises(EmptyStringError):
        AlphabetSpec.default_bytes().to_pstring(b"")
    with pytest.raises(EmptyStringError):
        AlphabetSpec.tokens(["if"]).to_pstring("   ")


def test_token_mode(tmp_path):
    sidecar = tmp_path / "toks.json"
    sidecar.write_text(json.dumps({"static": ["if", "return"]}))
    spec = AlphabetSpec.from_token_file(sidecar)
    x = spec.to_pstring("if foo bar foo return bar")
    assert x.is_param.tolist() == [0, 1, 1, 1, 0, 1]
    assert x.pi_count == 2
    assert x.sigma_count == 2
    y = spec.to_pstring("if zap qux zap return qux")
    assert prev_encode(x) == prev_encode(y)


def test_token_mode_deterministic(tmp_path):
    spec = AlphabetSpec.tokens(["while"])
    a = spec.to_pstring("x y while x")
    b = spec.to_pstring("x y while x")
    assert a == b
