"""Entropically secure symmetric encryption for Markov-source messages.

The cipher compresses a message with a universal enumerative code over
its type class, pads the codeword to a fixed length with fresh random
bits, and masks it with a field-multiplication hash of a short secret
key whose length grows only logarithmically in the message length.  An
exact-analysis lab verifies the min-entropy and indistinguishability
bounds at desk scale.
"""

from .bits import Bits
from .codec import Codeword, decode, encode, rank, unrank
from .core import CoreCiphertext, core_decrypt, core_encrypt, key_mask
from .errors import (BudgetError, DecodeError, EsmcError, FormatError,
                     ParameterError)
from .gf2 import (FieldSpec, find_irreducible, gf_mul, gf_reduce, hash_apply,
                  xor_universality_check)
from .markov import (TypeDescriptor, brute_force_class, class_size,
                     completions_count, max_class_size, type_of)
from .padding import (Distribution, exact_padded_distribution, min_entropy,
                      randomize, strip)
from .params import Params
from .pipeline import (SealedMessage, deserialize, keygen, load_key, save_key,
                       seal, serialize, unseal)
from .sources import SourceModel, load_model, save_model
from .statlab import (exact_cipher_distribution, indistinguishability_gap,
                      sample_source, sd_from_uniform, statistical_distance)

__version__ = "0.1.0"

__all__ = [
    "Bits", "BudgetError", "Codeword", "CoreCiphertext", "DecodeError",
    "Distribution", "EsmcError", "FieldSpec", "FormatError", "ParameterError",
    "Params", "SealedMessage", "SourceModel", "TypeDescriptor",
    "brute_force_class", "class_size", "completions_count", "core_decrypt",
    "core_encrypt", "decode", "deserialize", "encode",
    "exact_cipher_distribution", "exact_padded_distribution",
    "find_irreducible", "gf_mul", "gf_reduce", "hash_apply",
    "indistinguishability_gap", "key_mask", "keygen", "load_key",
    "load_model", "max_class_size", "min_entropy", "randomize", "rank",
    "sample_source", "save_key", "save_model", "sd_from_uniform", "seal",
    "serialize", "statistical_distance", "strip", "type_of", "unrank",
    "unseal", "xor_universality_check",
]
