"""Z x Z block encryption by right-multiplication with the enciphering matrix.

Plaintext bytes fill blocks row-major; the final block's tail is padded
with -1, which cannot collide with byte values.  Encryption computes the
exact product block @ E (block on the left); since E = (E * 2^s) / 2^s
with an integer scaled form, the wire-ready scaled ciphertext is just the
integer product block @ E_scaled.  Decryption multiplies by the integer
adjugate and divides by the scaled determinant, rejecting any entry that
fails to divide exactly or falls outside {-1} | 0..255.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CorruptionError, ParameterError, ShapeError, WireOverflowError
from .keyschedule import KeyMatrixPair

PAD = -1
INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


@dataclass
class OpCounter:
    """Tallies entry multiplications/additions for the cost-model checks."""

    mults: int = 0
    adds: int = 0


@dataclass(frozen=True)
class PlainBlock:
    """Row-major block of byte values, -1 marking the padded tail."""

    order: int
    entries: tuple[int, ...]


@dataclass(frozen=True)
class CipherBlock:
    """Row-major block of dyadic entries, stored as entry * 2**scale_exp."""

    order: int
    scale_exp: int
    scaled: tuple[int, ...]

    def entries(self) -> list[Fraction]:
        scale = 1 << self.scale_exp
        return [Fraction(v, scale) for v in self.scaled]


def partition(data: bytes, z: int) -> list[PlainBlock]:
    """Split bytes into ceil(len/z^2) blocks, padding the last with -1."""
    if z < 2:
        raise ParameterError(f"block order must be at least 2, got {z}")
    cells = z * z
    blocks = []
    for offset in range(0, len(data), cells):
        chunk = data[offset : offset + cells]
        entries = tuple(chunk) + (PAD,) * (cells - len(chunk))
        blocks.append(PlainBlock(z, entries))
    return blocks


def unpartition(blocks, byte_count: int) -> bytes:
    """Invert :func:`partition`, verifying the -1 tail."""
    flat = [v for block in blocks for v in block.entries]
    if byte_count > len(flat):
        raise CorruptionError("fewer block entries than the recorded byte count")
    data = flat[:byte_count]
    if any(v == PAD for v in data):
        raise CorruptionError("padding marker inside the data region")
    if any(v != PAD for v in flat[byte_count:]):
        raise CorruptionError("block tail is not all padding")
    return bytes(data)


def _product(flat, cols, z: int) -> list[int]:
    """flat (row-major z x z) times the matrix given by its columns."""
    out = []
    for base in range(0, z * z, z):
        row = flat[base : base + z]
        for col in cols:
            out.append(sum(a * b for a, b in zip(row, col)))
    return out


def _product_counted(flat, cols, z: int, counter: OpCounter) -> list[int]:
    """Same as :func:`_product`, tallying each entry operation."""
    out = []
    for base in range(0, z * z, z):
        row = flat[base : base + z]
        for col in cols:
            acc = row[0] * col[0]
            counter.mults += 1
            for k in range(1, z):
                acc += row[k] * col[k]
                counter.mults += 1
                counter.adds += 1
            out.append(acc)
    return out


def encrypt_block(block: PlainBlock, kp: KeyMatrixPair, counter: OpCounter | None = None) -> CipherBlock:
    """Exact product block @ E, returned in scaled wire form."""
    if block.order != kp.z:
        raise ShapeError(f"block order {block.order} does not match key order {kp.z}")
    cols = kp.e_scaled_cols
    if counter is None:
        scaled = _product(block.entries, cols, kp.z)
    else:
        scaled = _product_counted(block.entries, cols, kp.z, counter)
    for v in scaled:
        if not INT64_MIN <= v <= INT64_MAX:
            raise WireOverflowError(
                "scaled ciphertext entry exceeds the signed 64-bit wire range; "
                "use a smaller n or level"
            )
    return CipherBlock(kp.z, kp.scale_exp, tuple(scaled))


def decrypt_block(cipher: CipherBlock, kp: KeyMatrixPair, counter: OpCounter | None = None) -> PlainBlock:
    """Exact product cipher @ E^-1; rejects non-integer or non-byte entries."""
    if cipher.order != kp.z:
        raise ShapeError(f"block order {cipher.order} does not match key order {kp.z}")
    if cipher.scale_exp != kp.scale_exp:
        raise CorruptionError("ciphertext scale does not match the key")
    cols = kp.adjugate_scaled_cols
    if counter is None:
        raw = _product(cipher.scaled, cols, kp.z)
    else:
        raw = _product_counted(cipher.scaled, cols, kp.z, counter)
    den = kp.det_scaled
    entries = []
    for v in raw:
        q, r = divmod(v, den)
        if r:
            raise CorruptionError("decrypted entry is not an integer")
        if q != PAD and not 0 <= q <= 255:
            raise CorruptionError("decrypted entry outside the byte range")
        entries.append(q)
    return PlainBlock(kp.z, tuple(entries))
