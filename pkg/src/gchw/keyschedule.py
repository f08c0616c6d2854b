"""Derivation of the enciphering matrix E and its exact inverse.

The pipeline is: build the golden base matrix from the shared secret,
zero-pad it to the power-of-two order Z, run the multi-level 2-D Haar
transform, then repair singularity by adding secret-derived integers.
Attempt 0 adds them only where the transformed matrix is exactly zero
(covering the zeros); attempts 1 and up perturb every position, because
some transformed matrices (the 2x2 base case included) are singular
without containing any zero at all.

The additive integers come from HMAC-SHA-256 in counter mode keyed by the
secret seed, so the receiver reconstructs E bit-for-bit without any
material crossing the wire.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator

from . import auth
from .errors import KeyDerivationError, ParameterError, ParseError, SingularMatrixError
from .matrix import SquareMatrix
from .recurrence import RecurrenceKind, golden_matrix, qp_power
from .wavelet import haar2d_forward

MAX_N = 10**4
MAX_P = 64
MAX_LEVEL = 8
SECRET_BYTES = 32
MAX_ATTEMPTS = 64


@dataclass(frozen=True)
class CipherKey:
    """The shared secret.

    ``n`` is the matrix power (the short session key), ``p`` the Q_p order
    parameter (only meaningful for the Fibonacci kind), ``level`` the Haar
    depth, ``seed`` feeds the randomization stream and ``mac_key`` the
    authentication tag.
    """

    kind: RecurrenceKind
    n: int
    p: int
    level: int
    seed: bytes
    mac_key: bytes

    def __post_init__(self):
        if not isinstance(self.kind, RecurrenceKind):
            raise ParameterError(f"kind must be a RecurrenceKind, got {self.kind!r}")
        if not 1 <= self.n <= MAX_N:
            raise ParameterError(f"n must be in 1..{MAX_N}, got {self.n}")
        if not 0 <= self.p <= MAX_P:
            raise ParameterError(f"p must be in 0..{MAX_P}, got {self.p}")
        if self.kind is not RecurrenceKind.FIBONACCI and self.p != 1:
            raise ParameterError(f"p must be 1 for kind {self.kind.value}")
        if not 1 <= self.level <= MAX_LEVEL:
            raise ParameterError(f"level must be in 1..{MAX_LEVEL}, got {self.level}")
        if len(self.seed) != SECRET_BYTES:
            raise ParameterError(f"seed must be {SECRET_BYTES} bytes")
        if len(self.mac_key) != SECRET_BYTES:
            raise ParameterError(f"mac_key must be {SECRET_BYTES} bytes")


@dataclass(frozen=True)
class KeyMatrixPair:
    """Enciphering matrix, its exact inverse, and the wire scaling data."""

    e: SquareMatrix
    e_inv: SquareMatrix
    z: int
    scale_exp: int
    attempt: int

    @classmethod
    def from_matrix(cls, e: SquareMatrix, scale_exp: int, attempt: int = 0) -> "KeyMatrixPair":
        """Build a pair from an arbitrary nonsingular dyadic matrix."""
        return cls(e=e, e_inv=e.inverse(), z=e.order, scale_exp=scale_exp, attempt=attempt)

    @cached_property
    def e_scaled(self) -> tuple[tuple[int, ...], ...]:
        """e * 2**scale_exp as integer rows (the exact wire form)."""
        scale = 1 << self.scale_exp
        rows = []
        for row in self.e.rows:
            out = []
            for x in row:
                v = x * scale
                if getattr(v, "denominator", 1) != 1:
                    raise ParameterError("enciphering matrix is not dyadic at this scale")
                out.append(int(v))
            rows.append(tuple(out))
        return tuple(rows)

    @cached_property
    def e_scaled_cols(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.e_scaled))

    @cached_property
    def det_scaled(self) -> int:
        """det(e * 2**scale_exp); nonzero by construction."""
        d = SquareMatrix(self.e_scaled).det()
        return int(d)

    @cached_property
    def adjugate_scaled(self) -> tuple[tuple[int, ...], ...]:
        """Integer adjugate A of the scaled matrix: (e*2^s) @ A = det_scaled * I."""
        rows = []
        for row in self.e_inv.rows:
            out = []
            for x in row:
                v = Fraction(x) * self.det_scaled / (1 << self.scale_exp)
                if v.denominator != 1:
                    raise ArithmeticError("adjugate entry is not integral")
                out.append(int(v))
            rows.append(tuple(out))
        return tuple(rows)

    @cached_property
    def adjugate_scaled_cols(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.adjugate_scaled))


def golden_base(key: CipherKey) -> SquareMatrix:
    """The integer golden matrix selected by the key."""
    if key.kind is RecurrenceKind.FIBONACCI:
        return qp_power(key.p, key.n)
    return golden_matrix(key.kind, key.n)


def pad_to_z(g: SquareMatrix, level: int) -> SquareMatrix:
    """Zero-pad to order Z = 2^max(level, ceil(log2(order)))."""
    z = 1 << max(level, (g.order - 1).bit_length())
    rows = [[0] * z for _ in range(z)]
    for i, row in enumerate(g.rows):
        rows[i][: g.order] = row
    return SquareMatrix(rows)


def base_transform(key: CipherKey) -> SquareMatrix:
    """The Haar-transformed padded golden matrix, before randomization."""
    return haar2d_forward(pad_to_z(golden_base(key), key.level), key.level)


def _randomization_stream(seed: bytes, attempt: int) -> Iterator[int]:
    """Deterministic byte stream: HMAC-SHA-256(seed, attempt || counter) blocks."""
    prefix = attempt.to_bytes(4, "big")
    counter = 0
    while True:
        yield from auth.mac(seed, prefix + counter.to_bytes(4, "big"))
        counter += 1


def derive(key: CipherKey) -> KeyMatrixPair:
    """Derive the enciphering matrix pair; pure function of the key.

    Raises :class:`KeyDerivationError` if no attempt in the budget yields a
    nonsingular matrix (a pathological seed; pick another).
    """
    t = base_transform(key)
    z = t.order
    for attempt in range(MAX_ATTEMPTS):
        rows = [list(row) for row in t.rows]
        stream = _randomization_stream(key.seed, attempt)
        if attempt == 0:
            positions = [(i, j) for i in range(z) for j in range(z) if rows[i][j] == 0]
        else:
            positions = [(i, j) for i in range(z) for j in range(z)]
        for i, j in positions:
            rows[i][j] += next(stream) % 255 + 1
        try:
            return KeyMatrixPair.from_matrix(
                SquareMatrix(rows), scale_exp=2 * key.level, attempt=attempt
            )
        except SingularMatrixError:
            continue
    raise KeyDerivationError(f"no nonsingular matrix within {MAX_ATTEMPTS} attempts")


_KEY_FIELDS = ("kind", "n", "p", "level", "seed", "mac_key")


def format_key(key: CipherKey) -> str:
    """Render the line-oriented key file (fixed field order)."""
    return (
        f"kind={key.kind.value}\n"
        f"n={key.n}\n"
        f"p={key.p}\n"
        f"level={key.level}\n"
        f"seed={key.seed.hex()}\n"
        f"mac_key={key.mac_key.hex()}\n"
    )


def parse_key(text: str) -> CipherKey:
    """Parse a key file; strict about field names, order, and count."""
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != len(_KEY_FIELDS):
        raise ParseError(f"key file must have exactly {len(_KEY_FIELDS)} fields")
    values = {}
    for line, expected in zip(lines, _KEY_FIELDS):
        name, sep, value = line.partition("=")
        if not sep or name != expected:
            raise ParseError(f"expected field {expected!r}, got {line!r}")
        values[name] = value
    try:
        kind = RecurrenceKind(values["kind"])
    except ValueError as exc:
        raise ParseError(f"unknown recurrence kind {values['kind']!r}") from exc
    try:
        n = int(values["n"])
        p = int(values["p"])
        level = int(values["level"])
        seed = bytes.fromhex(values["seed"])
        mac_key = bytes.fromhex(values["mac_key"])
    except ValueError as exc:
        raise ParseError(f"malformed key field: {exc}") from exc
    return CipherKey(kind=kind, n=n, p=p, level=level, seed=seed, mac_key=mac_key)


def save_key_file(path, key: CipherKey) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_key(key))


def load_key_file(path) -> CipherKey:
    with open(path, "r", encoding="ascii") as fh:
        return parse_key(fh.read())
