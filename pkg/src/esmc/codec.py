"""Enumerative codec: fixed-width type prefix plus in-class rank suffix.

A word is encoded as (prefix, suffix) where the prefix serializes its
type descriptor in fixed-width fields and the suffix is the word's index
in the lexicographic enumeration of its class, in exactly
ceil(log2(class_size)) bits (zero bits for singleton classes).  The
prefix width is a function of the parameters alone and the suffix width
is a function of the prefix content, so the code is prefix-free and a
decoder can consume a codeword from the front of any longer bit string.

Prefix layout:
- m = 0: the counts of symbols 1..A-1, each count_field_bits wide; the
  count of symbol 0 is n minus the rest.  For a binary alphabet this is
  the ones-count in ceil(log2(n+1)) bits.
- m >= 1: the m context symbols (symbol_bits each), then all A^(m+1)
  transition counts in (state, symbol) lexicographic order.  Full rows
  are stored because row sums are not otherwise recoverable by the
  decoder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bits import Bits
from .errors import DecodeError, ParameterError
from .markov import (CompletionWalker, TypeDescriptor, class_size,
                     state_index, type_of, _validate_word)
from .params import Params


@dataclass(frozen=True, slots=True)
class Codeword:
    prefix: Bits
    suffix: Bits

    @property
    def bits(self) -> Bits:
        return self.prefix + self.suffix

    def __len__(self) -> int:
        return len(self.prefix) + len(self.suffix)


def suffix_width(size: int) -> int:
    """Bits needed to index a class of the given size (0 for singletons)."""
    return (size - 1).bit_length()


def pack_prefix(t: TypeDescriptor, p: Params) -> Bits:
    cf = p.count_field_bits
    if p.memory == 0:
        out = Bits(0, 0)
        for a in range(1, p.alphabet_size):
            out = out + Bits(t.counts[a], cf)
        return out
    out = Bits(0, 0)
    for sym in t.context:
        out = out + Bits(sym, p.symbol_bits)
    for c in t.counts:
        out = out + Bits(c, cf)
    return out


def unpack_prefix(prefix: Bits, p: Params) -> TypeDescriptor:
    """Rebuild the descriptor from a prefix; corrupt fields raise DecodeError."""
    A, cf = p.alphabet_size, p.count_field_bits
    pos = 0
    if p.memory == 0:
        counts = [0] * A
        rest = 0
        for a in range(1, A):
            counts[a] = int(prefix[pos:pos + cf])
            rest += counts[a]
            pos += cf
        if rest > p.n:
            raise DecodeError("type prefix counts exceed message length")
        counts[0] = p.n - rest
        return TypeDescriptor((), tuple(counts))
    context = []
    for _ in range(p.memory):
        sym = int(prefix[pos:pos + p.symbol_bits])
        if sym >= A:
            raise DecodeError("context symbol outside alphabet")
        context.append(sym)
        pos += p.symbol_bits
    counts = []
    for _ in range(p.num_states * A):
        counts.append(int(prefix[pos:pos + cf]))
        pos += cf
    if sum(counts) != p.transitions:
        raise DecodeError("transition counts do not sum to n - m")
    return TypeDescriptor(tuple(context), tuple(counts))


def rank(v: Sequence[int], p: Params) -> int:
    """Index of the word in the lexicographic enumeration of its class."""
    t = type_of(v, p)
    walker = CompletionWalker(t, p)
    r = 0
    for pos in range(p.memory, p.n):
        for smaller in range(v[pos]):
            r += walker.count_after(smaller)
        walker.advance(v[pos])
    return r


def unrank(t: TypeDescriptor, r: int, p: Params) -> tuple[int, ...]:
    """The unique word with descriptor ``t`` and rank ``r``."""
    size = class_size(t, p)
    if not 0 <= r < size:
        raise ParameterError(f"rank {r} outside [0, {size})")
    walker = CompletionWalker(t, p)
    out = list(t.context)
    for _ in range(p.transitions):
        for sym in range(p.alphabet_size):
            c = walker.count_after(sym)
            if r < c:
                out.append(sym)
                walker.advance(sym)
                break
            r -= c
        else:
            raise RuntimeError("rank not consumed; inconsistent walker state")
    return tuple(out)


def encode(v: Sequence[int], p: Params) -> Codeword:
    """Codeword of a length-n word: type prefix plus rank suffix."""
    _validate_word(v, p)
    t = type_of(v, p)
    width = suffix_width(class_size(t, p))
    return Codeword(pack_prefix(t, p), Bits(rank(v, p), width))


def decode(stream: Bits, p: Params) -> tuple[tuple[int, ...], int]:
    """Read one codeword off the front of ``stream``.

    Returns (word, bits consumed).  Trailing bits beyond the codeword are
    ignored, which is what lets the padded fixed-length words decode.
    """
    pl = p.prefix_bits
    if len(stream) < pl:
        raise DecodeError(f"stream shorter than the {pl}-bit type prefix")
    t = unpack_prefix(stream[:pl], p)
    size = class_size(t, p)
    if size == 0:
        raise DecodeError("type prefix names an unrealizable class")
    width = suffix_width(size)
    if len(stream) < pl + width:
        raise DecodeError("stream ends inside the rank suffix")
    r = int(stream[pl:pl + width])
    if r >= size:
        raise DecodeError("rank suffix outside the class")
    return unrank(t, r, p), pl + width
