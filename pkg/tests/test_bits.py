"""Bit-string packing and unpacking."""

import pytest
from hypothesis import given, strategies as st

from gchw.bits import BitString
from gchw.errors import ParameterError


def test_append_and_to01():
    bs = BitString()
    bs.append(1)
    bs.append(0)
    bs.append_uint(0b101, 3)
    assert bs.to01() == "10101"
    assert len(bs) == 5
    assert bs[0] == 1 and bs[1] == 0


def test_from01_roundtrip():
    assert BitString.from01("0110").to01() == "0110"
    with pytest.raises(ParameterError):
        BitString.from01("01x0")


def test_extend():
    bs = BitString.from01("10")
    bs.extend(BitString.from01("01"))
    bs.extend([1, 1])
    assert bs.to01() == "100111"


def test_pack_is_msb_first():
    assert BitString.from01("10000001").pack() == b"\x81"
    assert BitString.from01("101").pack() == b"\xa0"
    assert BitString().pack() == b""


def test_unpack():
    assert BitString.unpack(b"\xa0", 3).to01() == "101"
    assert BitString.unpack(b"\x81", 8).to01() == "10000001"
    with pytest.raises(ParameterError):
        BitString.unpack(b"\x00", 9)


@given(st.lists(st.integers(min_value=0, max_value=1), max_size=200))
def test_pack_unpack_roundtrip(bits):
    bs = BitString(bits)
    assert BitString.unpack(bs.pack(), len(bs)) == bs


def test_append_uint_msb_first():
    bs = BitString()
    bs.append_uint(0x61, 8)
    assert bs.to01() == "01100001"
