"""Binary field arithmetic at arbitrary degree and the multiplicative hash family.

Field elements of GF(2^d) are Python ints: bit i is the coefficient of
x^i, so the d-bit big-endian bit string reads off the polynomial from
x^(d-1) down.  The modulus is always the lexicographically smallest
irreducible polynomial of degree d, so every party derives the same
public field from d alone.

The hash family is h_i(K) = i * K with multiplication in the field; for
distinct keys x != y the map i -> h_i(x) ^ h_i(y) is a bijection, which
gives collision probability exactly 2^-d against any target, inside the
XOR-universality requirement of 2^-(d-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .bits import Bits
from .errors import BudgetError, ParameterError
from . import _gf2search

MAX_DEGREE = 1 << 16

# exhaustive universality check walks all (x, y, i) triples
UNIVERSALITY_MAX_DEGREE = 10


@dataclass(frozen=True, slots=True)
class FieldSpec:
    """Degree and modulus (d+1 coefficient bits, leading bit set) of GF(2^d)."""

    degree: int
    modulus: int

    def __post_init__(self):
        if self.modulus >> self.degree != 1:
            raise ParameterError("modulus degree does not match field degree")


def _trial_division_lower(d: int) -> int:
    # smallest ell with x^d + ell irreducible, by trial division; a degree-d
    # polynomial is reducible iff it has a factor of degree <= d // 2
    for ell in range(1 << d):
        f = (1 << d) | ell
        if not any(_poly_mod(f, g) == 0 for g in range(2, 1 << (d // 2 + 1))):
            return ell
    raise RuntimeError("unreachable: irreducibles exist at every degree")


def _poly_mod(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


@lru_cache(maxsize=None)
def find_irreducible(d: int) -> FieldSpec:
    """Deterministic public modulus: the lexicographically smallest
    irreducible polynomial of degree d (candidates x^d + ell scanned with
    ell ascending; note the d = 1 winner is x itself)."""
    if not 1 <= d <= MAX_DEGREE:
        raise ParameterError(f"degree must be in [1, {MAX_DEGREE}]")
    if d < 14:
        ell = _trial_division_lower(d)
    else:
        ell = _gf2search.smallest_irreducible_lower(d)
    return FieldSpec(d, (1 << d) | ell)


def gf_mul(a: int, b: int, f: FieldSpec) -> int:
    """Carry-less product of two field elements reduced modulo f."""
    d = f.degree
    if not 0 <= a < (1 << d) or not 0 <= b < (1 << d):
        raise ParameterError("operand outside the field")
    top = 1 << d
    r = 0
    for i in range(b.bit_length() - 1, -1, -1):
        r <<= 1
        if r & top:
            r ^= f.modulus
        if (b >> i) & 1:
            r ^= a
    return r


def gf_reduce(a: int, f: FieldSpec) -> int:
    """Reduce an arbitrary-degree polynomial into the field."""
    if a < 0:
        raise ParameterError("polynomial value must be non-negative")
    return _poly_mod(a, f.modulus)


def hash_apply(i: int, key: Bits, f: FieldSpec) -> int:
    """h_i(K) = i * embed(K): the key's k <= d bits sit in the low-order
    coefficient positions, zero elsewhere."""
    if len(key) > f.degree:
        raise ParameterError(f"key length {len(key)} exceeds field degree {f.degree}")
    return gf_mul(i, key.value, f)


def xor_universality_check(f: FieldSpec) -> Fraction:
    """Exhaustive max over x != y and targets a of Pr_i[h_i(x)^h_i(y) = a].

    Exact count over all (x, y, i) triples; the family is XOR-universal
    when the result is at most 2^-(d-1).
    """
    d = f.degree
    if d > UNIVERSALITY_MAX_DEGREE:
        raise BudgetError(f"exhaustive universality check capped at degree "
                          f"{UNIVERSALITY_MAX_DEGREE}")
    size = 1 << d
    table = np.zeros((size, size), dtype=np.uint32)
    for i in range(size):
        for x in range(size):
            table[i, x] = gf_mul(i, x, f)
    worst = 0
    for x in range(size):
        col_x = table[:, x]
        for y in range(x + 1, size):
            counts = np.bincount(col_x ^ table[:, y], minlength=size)
            worst = max(worst, int(counts.max()))
    return Fraction(worst, size)
