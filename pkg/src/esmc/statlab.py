"""Exact verification engine: statistical distance, exact ciphertext
distributions at desk scale, indistinguishability gaps, source sampling.

Everything here is exact rational arithmetic carried as integer weights
over a common denominator; numpy only accelerates integer accumulation
when the weights provably fit in int64, and the slow path computes the
identical table with unbounded ints.

The comparison distribution for the gap is the uniform one over
(index, payload) pairs: the masking stage is a low-entropy one-time pad
whose ideal output is uniform, so the distance from uniform witnesses
indistinguishability directly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import BudgetError, ParameterError
from .gf2 import find_irreducible, gf_mul, gf_reduce
from .padding import Distribution, exact_padded_distribution
from .params import Params
from .rng import resolve_rng
from .sources import SourceModel

# exact ciphertext tables hold 2^(2L) outcomes and convolve 2^L * 2^k pairs
STATLAB_MAX_L = 12
STATLAB_MAX_KEY_BITS = 16


def statistical_distance(a: Distribution, b: Distribution) -> Fraction:
    """Half the L1 distance between two exact distributions."""
    if a.universe != b.universe:
        raise ParameterError("distributions live on different outcome spaces")
    total = 0
    for outcome in a.weights.keys() | b.weights.keys():
        total += abs(a.weights.get(outcome, 0) * b.denominator
                     - b.weights.get(outcome, 0) * a.denominator)
    return Fraction(total, 2 * a.denominator * b.denominator)


def sd_from_uniform(a: Distribution) -> Fraction:
    """Statistical distance to the uniform distribution, without
    materializing the uniform table (the universe can be huge)."""
    n = a.universe
    total = sum(abs(w * n - a.denominator) for w in a.weights.values())
    total += (n - a.support_size) * a.denominator
    return Fraction(total, 2 * a.denominator * n)


def exact_cipher_distribution(model: SourceModel, p: Params,
                              key_bits: int | None = None,
                              raw_mask: bool = False) -> Distribution:
    """Exact output distribution of sealing over (index, payload) pairs.

    The outcome integer is (index << L) | payload.  The padded-word table
    is convolved, for every index i, with the mask distribution of a
    uniform key; key_bits overrides the parameter-derived key length
    (test hook: 0 gives the degenerate single-key cipher).  With
    raw_mask=True the mask is the raw uniform L-bit key itself instead
    of the field product (the classical one-time pad regime).
    """
    L = p.padded_bits
    kb = L if raw_mask else (p.key_bits if key_bits is None else key_bits)
    if L > STATLAB_MAX_L:
        raise BudgetError(f"payload length {L} exceeds the analysis cap {STATLAB_MAX_L}")
    if kb > STATLAB_MAX_KEY_BITS:
        raise BudgetError(f"key length {kb} exceeds the analysis cap "
                          f"{STATLAB_MAX_KEY_BITS}")
    padded = exact_padded_distribution(model, p)
    size = 1 << L
    f = find_irreducible(L)
    if raw_mask:
        masks = [(z, 1) for z in range(size)]
    else:
        mult: dict[int, int] = {}
        for k in range(1 << kb):
            z = gf_reduce(k, f)
            mult[z] = mult.get(z, 0) + 1
        masks = sorted(mult.items())
    den = padded.denominator << (L + kb)
    support = np.fromiter(padded.weights.keys(), dtype=np.int64,
                          count=len(padded.weights))
    wvals = [padded.weights[int(o)] for o in support]
    weights: dict[int, int] = {}
    if max(wvals) * (1 << kb) < 2 ** 62:
        arr = np.array(wvals, dtype=np.int64)
        for i in range(size):
            acc = np.zeros(size, dtype=np.int64)
            for z, cnt in masks:
                mv = z if raw_mask else gf_mul(i, z, f)
                np.add.at(acc, support ^ mv, arr * cnt)
            base = i << L
            for c in np.flatnonzero(acc):
                weights[base | int(c)] = int(acc[c])
    else:
        sup = [int(o) for o in support]
        for i in range(size):
            acc: dict[int, int] = {}
            for z, cnt in masks:
                mv = z if raw_mask else gf_mul(i, z, f)
                for o, w in zip(sup, wvals):
                    key = o ^ mv
                    acc[key] = acc.get(key, 0) + w * cnt
            base = i << L
            for c, w in acc.items():
                weights[base | c] = w
    return Distribution(weights, den, 1 << (2 * L))


def indistinguishability_gap(model: SourceModel, p: Params,
                             key_bits: int | None = None,
                             raw_mask: bool = False) -> Fraction:
    """Exact statistical distance of the cipher output from uniform."""
    return sd_from_uniform(exact_cipher_distribution(model, p, key_bits, raw_mask))


def sample_source(model: SourceModel, n: int, count: int,
                  rng=None) -> list[tuple[int, ...]]:
    """Draw ``count`` length-n words from the model, reproducibly under a seed."""
    if count < 0:
        raise ParameterError("count must be non-negative")
    r = resolve_rng(rng)
    return [model.sample(n, r) for _ in range(count)]
