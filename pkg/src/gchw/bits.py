"""Bit strings with MSB-first byte packing."""

from __future__ import annotations

from .errors import ParameterError


class BitString:
    """A growable sequence of bits.

    ``bits`` is a bytearray holding one 0/1 value per bit; callers may read
    it directly but must not mutate it.
    """

    __slots__ = ("bits",)

    def __init__(self, bits=()):
        self.bits = bytearray(bits)

    @classmethod
    def from01(cls, text: str) -> "BitString":
        if set(text) - {"0", "1"}:
            raise ParameterError("bit string may only contain 0 and 1")
        return cls(int(c) for c in text)

    def to01(self) -> str:
        return "".join("01"[b] for b in self.bits)

    def append(self, bit: int) -> None:
        self.bits.append(1 if bit else 0)

    def append_uint(self, value: int, width: int) -> None:
        """Append ``value`` as ``width`` bits, most significant bit first."""
        for shift in range(width - 1, -1, -1):
            self.bits.append((value >> shift) & 1)

    def extend(self, other) -> None:
        """Append bits from another BitString or an iterable of 0/1 ints."""
        if isinstance(other, BitString):
            self.bits.extend(other.bits)
        else:
            self.bits.extend(other)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, index: int) -> int:
        return self.bits[index]

    def __eq__(self, other):
        if not isinstance(other, BitString):
            return NotImplemented
        return self.bits == other.bits

    def __repr__(self):
        shown = self.to01()
        if len(shown) > 64:
            shown = shown[:64] + "..."
        return f"BitString({shown!r})"

    def pack(self) -> bytes:
        """Pack MSB-first into bytes, zero-padding the final byte."""
        out = bytearray((len(self.bits) + 7) // 8)
        for i, bit in enumerate(self.bits):
            if bit:
                out[i >> 3] |= 0x80 >> (i & 7)
        return bytes(out)

    @classmethod
    def unpack(cls, data: bytes, bit_count: int) -> "BitString":
        """Recover the first ``bit_count`` bits of MSB-first packed data."""
        if bit_count < 0 or bit_count > 8 * len(data):
            raise ParameterError("bit count exceeds the packed data")
        bs = cls()
        bits = bs.bits
        for i in range(bit_count):
            bits.append((data[i >> 3] >> (7 - (i & 7))) & 1)
        return bs
