"""HMAC-SHA-256 tagging and constant-time verification."""

from __future__ import annotations

import hashlib
import hmac as _stdlib_hmac

BLOCK_SIZE = 64
TAG_SIZE = 32


def mac(key: bytes, data: bytes) -> bytes:
    """HMAC-SHA-256: H((k ^ opad) || H((k ^ ipad) || data)).

    Keys longer than the 64-byte SHA-256 block are hashed first; shorter
    keys are zero-padded to the block size.
    """
    if len(key) > BLOCK_SIZE:
        key = hashlib.sha256(key).digest()
    key = key.ljust(BLOCK_SIZE, b"\x00")
    ipad = bytes(b ^ 0x36 for b in key)
    opad = bytes(b ^ 0x5C for b in key)
    inner = hashlib.sha256(ipad + data).digest()
    return hashlib.sha256(opad + inner).digest()


def verify(key: bytes, data: bytes, tag: bytes) -> bool:
    """True iff ``tag`` matches ``mac(key, data)``, compared in constant time."""
    return _stdlib_hmac.compare_digest(mac(key, data), tag)
