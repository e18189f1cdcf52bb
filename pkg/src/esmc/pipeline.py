"""End-to-end cipher: keygen, seal (encode, pad, mask), unseal, wire format.

One seal call consumes one key; the construction's security argument is
per message, so key reuse is the caller's responsibility (the CLI adds
bookkeeping).  Parameters travel in the clear in the serialized header:
n, the alphabet, the memory, and the leakage exponent are public.

Wire format, all fields big-endian:

    offset  size  field
    0       4     magic "ESMC"
    4       1     version, 0x01
    5       1     memory m
    6       2     alphabet size A
    8       4     message length n
    12      2     leakage exponent e
    14      ceil(L/8)  index bits, MSB-first, zero fill in the last byte
    14+     ceil(L/8)  payload bits, same packing

Key files hold exactly ceil(key_bits/8) bytes with the same packing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bits import Bits
from .codec import decode, encode
from .core import CoreCiphertext, core_decrypt, core_encrypt
from .errors import DecodeError, FormatError, ParameterError
from .padding import randomize
from .params import Params
from .rng import resolve_rng

MAGIC = b"ESMC"
VERSION = 1
HEADER_BYTES = 14

_HEADER_FIELDS = [(5, "version"), (6, "memory"), (8, "alphabet size"),
                  (12, "message length"), (14, "leakage exponent")]


@dataclass(frozen=True, slots=True)
class SealedMessage:
    params: Params
    index: Bits
    payload: Bits


def keygen(p: Params, rng=None) -> Bits:
    """Fresh uniform key of exactly key_bits bits."""
    return Bits(resolve_rng(rng).getrandbits(p.key_bits), p.key_bits)


def seal(v: Sequence[int], key: Bits, p: Params, rng=None) -> SealedMessage:
    """Encrypt one n-symbol message.

    Reproducible under a seeded rng: the pad bits are drawn first, then
    the hash index.
    """
    if len(key) != p.key_bits:
        raise ParameterError(f"key must be {p.key_bits} bits, got {len(key)}")
    r = resolve_rng(rng)
    w = randomize(encode(v, p), p, r)
    ct = core_encrypt(w, key, p, r)
    return SealedMessage(p, ct.index, ct.payload)


def unseal(s: SealedMessage, key: Bits, p: Params) -> tuple[int, ...]:
    if s.params != p:
        raise ParameterError("sealed message parameters do not match")
    if len(key) != p.key_bits:
        raise ParameterError(f"key must be {p.key_bits} bits, got {len(key)}")
    w = core_decrypt(CoreCiphertext(s.index, s.payload), key, p)
    try:
        v, _ = decode(w, p)
    except DecodeError:
        # one uniform report; distinguishing stages would leak an oracle
        raise DecodeError("ciphertext corrupt or wrong key") from None
    return v


def serialize(s: SealedMessage) -> bytes:
    p = s.params
    L = p.padded_bits
    if len(s.index) != L or len(s.payload) != L:
        raise FormatError("index/payload width inconsistent with parameters")
    header = (MAGIC + bytes([VERSION, p.memory])
              + p.alphabet_size.to_bytes(2, "big")
              + p.n.to_bytes(4, "big")
              + p.eps_exp.to_bytes(2, "big"))
    return header + s.index.to_bytes() + s.payload.to_bytes()


def deserialize(data: bytes) -> SealedMessage:
    if len(data) < 4:
        raise FormatError("truncated stream: missing magic")
    if data[:4] != MAGIC:
        raise FormatError("bad magic")
    for end, name in _HEADER_FIELDS:
        if len(data) < end:
            raise FormatError(f"truncated header: missing {name}")
    if data[4] != VERSION:
        raise FormatError(f"unsupported version {data[4]}")
    try:
        p = Params(n=int.from_bytes(data[8:12], "big"),
                   alphabet_size=int.from_bytes(data[6:8], "big"),
                   memory=data[5],
                   eps_exp=int.from_bytes(data[12:14], "big"))
    except ParameterError as exc:
        raise FormatError(f"invalid header parameters: {exc}") from None
    L = p.padded_bits
    nb = (L + 7) // 8
    for end, name in [(HEADER_BYTES + nb, "index"),
                      (HEADER_BYTES + 2 * nb, "payload")]:
        if len(data) < end:
            raise FormatError(f"truncated stream: missing {name} field")
    if len(data) > HEADER_BYTES + 2 * nb:
        raise FormatError("trailing bytes after payload")
    try:
        index = Bits.from_bytes(data[HEADER_BYTES:HEADER_BYTES + nb], L)
        payload = Bits.from_bytes(data[HEADER_BYTES + nb:], L)
    except ValueError as exc:
        raise FormatError(f"bit fields inconsistent with L={L}: {exc}") from None
    return SealedMessage(p, index, payload)


def save_key(key: Bits, path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(key.to_bytes())


def load_key(path: str, p: Params) -> Bits:
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        return Bits.from_bytes(data, p.key_bits)
    except ValueError as exc:
        raise FormatError(f"key file {path}: {exc}") from None
