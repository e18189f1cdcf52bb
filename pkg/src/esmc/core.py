"""The masking stage: a probabilistic one-time pad over L-bit words.

E(w, K) draws a public index i uniformly from {0,1}^L and outputs
(i, w ^ h_i(K)) with h_i(K) = i * K in GF(2^L).  Decryption recomputes
the mask from the public index and the shared key.  Confidentiality
only: there is no integrity check, and i = 0 (which masks nothing) is
deliberately left in the index space, as the average-case security
bound accounts for it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import Bits
from .errors import ParameterError
from .gf2 import FieldSpec, find_irreducible, gf_mul, gf_reduce
from .params import Params
from .rng import resolve_rng


@dataclass(frozen=True, slots=True)
class CoreCiphertext:
    index: Bits
    payload: Bits


def key_mask(index: int, key: Bits, f: FieldSpec) -> int:
    """Mask i * K with the key bits viewed in the field.

    Keys no longer than the degree embed in the low-order coefficients;
    longer keys (desk-scale parameter sets can have key_bits > L) reduce
    modulo the field polynomial first, a linear surjection that keeps a
    uniform key uniform over the whole field.
    """
    return gf_mul(index, gf_reduce(key.value, f), f)


def core_encrypt(w: Bits, key: Bits, p: Params, rng=None) -> CoreCiphertext:
    L = p.padded_bits
    if len(w) != L:
        raise ParameterError(f"padded word must be {L} bits, got {len(w)}")
    if len(key) != p.key_bits:
        raise ParameterError(f"key must be {p.key_bits} bits, got {len(key)}")
    f = find_irreducible(L)
    i = resolve_rng(rng).getrandbits(L)
    return CoreCiphertext(Bits(i, L), Bits(w.value ^ key_mask(i, key, f), L))


def core_decrypt(ct: CoreCiphertext, key: Bits, p: Params) -> Bits:
    L = p.padded_bits
    if len(ct.index) != L or len(ct.payload) != L:
        raise ParameterError(f"ciphertext fields must be {L} bits")
    if len(key) != p.key_bits:
        raise ParameterError(f"key must be {p.key_bits} bits, got {len(key)}")
    f = find_irreducible(L)
    return Bits(ct.payload.value ^ key_mask(ct.index.value, key, f), L)
