"""Public parameter block and every derived bit size.

Parameters:
- n: message length in symbols
- alphabet_size: number of distinct symbols (written A below)
- memory: Markov order m of the source class the cipher targets
- eps_exp: e with leakage bound eps = 2^-e; restricting eps to negative
  powers of two keeps 2*log2(1/eps) an exact integer, so key sizes are
  bit-exact with no floating point anywhere.

Derived sizes:
- count_field_bits: width of one transition-count field, ceil(log2(n+1))
- prefix_bits: width of the fixed codeword prefix that identifies a type
  class (for m >= 1 it carries the initial context plus all A^(m+1)
  transition counts, which is wider than the bare class index but is
  decodable without side information)
- padded_bits (L): prefix_bits plus the widest in-class rank field over
  all realizable type classes; every padded word is exactly L bits
- key_bits: prefix_bits + 2e + 3, the secret-key budget that covers the
  worst-case min-entropy deficit (prefix_bits + 1) of the padded word
  plus the 2*log2(1/eps) + 2 cost of the masking stage
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterError

# wire-format caps (header field widths in the serialized message)
MAX_N = 2**32 - 1
MAX_ALPHABET = 2**16 - 1
MAX_MEMORY = 2**8 - 1
MAX_EPS_EXP = 2**16 - 1


@dataclass(frozen=True, slots=True)
class Params:
    n: int
    alphabet_size: int
    memory: int = 0
    eps_exp: int = 1

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ParameterError(f"n must be in [1, {MAX_N}], got {self.n}")
        if not 2 <= self.alphabet_size <= MAX_ALPHABET:
            raise ParameterError(f"alphabet size must be in [2, {MAX_ALPHABET}]")
        if not 0 <= self.memory <= MAX_MEMORY:
            raise ParameterError(f"memory must be in [0, {MAX_MEMORY}]")
        if self.n <= self.memory:
            raise ParameterError(f"n must exceed memory (n={self.n}, m={self.memory})")
        if not 1 <= self.eps_exp <= MAX_EPS_EXP:
            raise ParameterError(f"eps_exp must be in [1, {MAX_EPS_EXP}]")

    @property
    def count_field_bits(self) -> int:
        # counts range over 0..n, so ceil(log2(n+1)) bits each
        return self.n.bit_length()

    @property
    def symbol_bits(self) -> int:
        return (self.alphabet_size - 1).bit_length()

    @property
    def num_states(self) -> int:
        """Number of context states A^m (1 when m = 0)."""
        return self.alphabet_size ** self.memory

    @property
    def transitions(self) -> int:
        """Number of counted transitions in one message, n - m."""
        return self.n - self.memory

    @property
    def prefix_bits(self) -> int:
        if self.memory == 0:
            return (self.alphabet_size - 1) * self.count_field_bits
        return (self.memory * self.symbol_bits
                + self.num_states * self.alphabet_size * self.count_field_bits)

    @property
    def key_bits(self) -> int:
        return self.prefix_bits + 2 * self.eps_exp + 3

    @property
    def padded_bits(self) -> int:
        """Fixed padded length L: the maximum codeword length of the codec."""
        return self.prefix_bits + _max_suffix_bits(self)

    @property
    def one_time_pad_bits(self) -> int:
        """Key cost of a classical one-time pad on the same message space."""
        return self.n * self.symbol_bits


@lru_cache(maxsize=None)
def _max_suffix_bits(p: Params) -> int:
    from . import markov

    size = markov.max_class_size(p)
    return (size - 1).bit_length()
