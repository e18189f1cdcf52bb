"""Randomized padding to the fixed length L and its exact analysis.

Operationally, a codeword is extended to exactly L = padded_bits bits
with fresh uniform random bits; the prefix-free codec strips them back
off.  Padding never touches the key.

Analytically, the induced distribution over L-bit words is computed as
an exact table: a word y carries probability mu(v) * 2^-(L - |code(v)|)
when its first bits form code(v), and 0 when no codeword is a prefix.
Padding lifts the min-entropy of the padded word toward L, which is what
lets the masking stage get away with a short key.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable

from .bits import Bits
from .codec import Codeword, decode, encode
from .errors import BudgetError, ParameterError
from .params import Params
from .rng import resolve_rng
from .sources import SourceModel

# exact_padded_distribution enumerates all A^n words
PADDED_ENUMERATION_LOG2_LIMIT = 20


def randomize(c: Codeword, p: Params, rng=None) -> Bits:
    """Extend a codeword to exactly L bits with fresh uniform bits."""
    body = c.bits
    pad = p.padded_bits - len(body)
    if pad < 0:
        raise ParameterError("codeword longer than the padded length")
    r = resolve_rng(rng)
    return body + Bits(r.getrandbits(pad), pad)


def strip(w: Bits, p: Params) -> Codeword:
    """Recover the unique codeword prefix of a padded word (pad bits dropped)."""
    if len(w) != p.padded_bits:
        raise ParameterError(f"padded word must be exactly {p.padded_bits} bits")
    _, used = decode(w, p)
    return Codeword(w[:p.prefix_bits], w[p.prefix_bits:used])


@dataclass(frozen=True)
class Distribution:
    """Exact finite distribution: integer weights over one denominator.

    Outcomes are ints in [0, universe); missing outcomes have probability
    zero.  Construction normalizes by the common gcd, so two equal
    distributions compare equal regardless of how they were built.
    """

    weights: dict[int, int]
    denominator: int
    universe: int
    _pmax: Fraction = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.denominator < 1:
            raise ParameterError("denominator must be positive")
        if not self.weights:
            raise ParameterError("empty distribution")
        g = self.denominator
        total = 0
        for outcome, w in self.weights.items():
            if w < 0:
                raise ParameterError("negative probability")
            if not 0 <= outcome < self.universe:
                raise ParameterError("outcome outside the universe")
            total += w
            g = math.gcd(g, w)
        if total != self.denominator:
            raise ParameterError("probabilities do not sum to 1")
        if g > 1:
            clean = {o: w // g for o, w in self.weights.items() if w}
            object.__setattr__(self, "weights", clean)
            object.__setattr__(self, "denominator", self.denominator // g)
        else:
            clean = {o: w for o, w in self.weights.items() if w}
            object.__setattr__(self, "weights", clean)
        object.__setattr__(self, "_pmax",
                           Fraction(max(self.weights.values()), self.denominator))

    @classmethod
    def from_fractions(cls, items: Iterable[tuple[int, Fraction]],
                       universe: int) -> "Distribution":
        pairs = [(o, Fraction(q)) for o, q in items]
        den = 1
        for _, q in pairs:
            den = den * q.denominator // math.gcd(den, q.denominator)
        return cls({o: int(q * den) for o, q in pairs if q}, den, universe)

    @classmethod
    def uniform(cls, universe: int) -> "Distribution":
        return cls({o: 1 for o in range(universe)}, universe, universe)

    @classmethod
    def point_mass(cls, outcome: int, universe: int) -> "Distribution":
        return cls({outcome: 1}, 1, universe)

    def probability(self, outcome: int) -> Fraction:
        return Fraction(self.weights.get(outcome, 0), self.denominator)

    def max_probability(self) -> Fraction:
        return self._pmax

    @property
    def support_size(self) -> int:
        return len(self.weights)


def exact_padded_distribution(model: SourceModel, p: Params) -> Distribution:
    """Exact table of the padded-word distribution over {0,1}^L.

    Enumerates every source word, so it is guarded to A^n <= 2^20; the
    table itself is sparse (only decodable words carry mass).
    """
    if model.alphabet_size != p.alphabet_size:
        raise ParameterError("model alphabet does not match the parameters")
    if model.memory > p.n:
        raise ParameterError("model memory exceeds the message length")
    if p.n * math.log2(p.alphabet_size) > PADDED_ENUMERATION_LOG2_LIMIT + 1e-9:
        raise BudgetError("word space too large for exact analysis")
    L = p.padded_bits
    den = model.weight_denominator(p.n) << L
    weights: dict[int, int] = {}
    for v in product(range(p.alphabet_size), repeat=p.n):
        num = model.weight_numerator(v)
        if num == 0:
            continue
        cw = encode(v, p).bits
        pad = L - len(cw)
        base = cw.value << pad
        w = num << len(cw)
        for r in range(1 << pad):
            weights[base | r] = w
    return Distribution(weights, den, 1 << L)


def min_entropy(d: Distribution) -> float:
    """-log2 of the most probable outcome, in bits.

    Returned as a float for reporting; exact comparisons should use
    d.max_probability() directly.
    """
    q = d.max_probability()
    return math.log2(q.denominator) - math.log2(q.numerator)
