"""Immutable fixed-length bit strings.

Bits are indexed 0-based from the most significant (leftmost) position.
``Bits(0b0110, 4)`` is the string "0110"; concatenation appends on the
right.  Byte packing is MSB-first with zero fill in the low bits of the
final byte.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Bits:
    value: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("bit length must be non-negative")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, text: str) -> "Bits":
        if text and set(text) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return cls(int(text, 2) if text else 0, len(text))

    @classmethod
    def zeros(cls, length: int) -> "Bits":
        return cls(0, length)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, key):
        if isinstance(key, slice):
            start, stop, step = key.indices(self.length)
            if step != 1:
                raise ValueError("only contiguous slices are supported")
            width = max(stop - start, 0)
            return Bits((self.value >> (self.length - stop)) & ((1 << width) - 1), width) \
                if width else Bits(0, 0)
        if not 0 <= key < self.length:
            raise IndexError("bit index out of range")
        return (self.value >> (self.length - 1 - key)) & 1

    def __add__(self, other: "Bits") -> "Bits":
        return Bits((self.value << other.length) | other.value,
                    self.length + other.length)

    def __xor__(self, other: "Bits") -> "Bits":
        if self.length != other.length:
            raise ValueError("xor requires equal lengths")
        return Bits(self.value ^ other.value, self.length)

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __repr__(self) -> str:
        return f"Bits('{self}')"

    def __int__(self) -> int:
        return self.value

    def to_bytes(self) -> bytes:
        nbytes = (self.length + 7) // 8
        return (self.value << (8 * nbytes - self.length)).to_bytes(nbytes, "big")

    @classmethod
    def from_bytes(cls, data: bytes, length: int) -> "Bits":
        nbytes = (length + 7) // 8
        if len(data) != nbytes:
            raise ValueError(f"expected {nbytes} bytes for {length} bits, got {len(data)}")
        fill = 8 * nbytes - length
        raw = int.from_bytes(data, "big")
        if raw & ((1 << fill) - 1):
            raise ValueError("nonzero fill bits in final byte")
        return cls(raw >> fill, length)
