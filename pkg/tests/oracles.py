"""Independent brute-force oracles used by several test modules.

These deliberately avoid the library's convolution path: the cipher
distribution is enumerated over every (message, key, index, pad) tuple
one at a time, and mask values come from the library's field ops only
through the public key_mask primitive applied per concrete key.
"""

from itertools import product

from esmc.bits import Bits
from esmc.codec import encode
from esmc.core import key_mask
from esmc.gf2 import find_irreducible
from esmc.padding import Distribution
from esmc.params import Params
from esmc.sources import SourceModel


def enumerate_cipher_distribution(model: SourceModel, p: Params,
                                  key_bits: int) -> Distribution:
    """Exact seal-output distribution by walking every single tuple."""
    L = p.padded_bits
    f = find_irreducible(L)
    den_model = model.weight_denominator(p.n)
    # global denominator: model x keys x indices x the widest pad space
    den = den_model << (key_bits + L + L)
    weights: dict[int, int] = {}
    masks = {}
    for k in range(1 << key_bits):
        masks[k] = [key_mask(i, Bits(k, key_bits), f) for i in range(1 << L)]
    for v in product(range(p.alphabet_size), repeat=p.n):
        num = model.weight_numerator(v)
        if num == 0:
            continue
        cw = encode(v, p).bits
        pad = L - len(cw)
        w_tuple = num << len(cw)   # num / den_model split over 2^pad pads
        for r in range(1 << pad):
            word = (cw.value << pad) | r
            for k in range(1 << key_bits):
                row = masks[k]
                for i in range(1 << L):
                    outcome = (i << L) | (word ^ row[i])
                    weights[outcome] = weights.get(outcome, 0) + w_tuple
    return Distribution(weights, den, 1 << (2 * L))
