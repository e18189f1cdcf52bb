import math
from fractions import Fraction
from itertools import product

import pytest

from esmc.bits import Bits
from esmc.codec import Codeword, encode
from esmc.errors import BudgetError, DecodeError, ParameterError
from esmc.padding import (Distribution, exact_padded_distribution,
                          min_entropy, randomize, strip)
from esmc.params import Params
from esmc.sources import SourceModel


class ScriptedBits:
    """Fake rng handing out a fixed bit string, first bit first."""

    def __init__(self, text):
        self.bits = [int(c) for c in text]

    def getrandbits(self, k):
        v = 0
        for _ in range(k):
            v = (v << 1) | self.bits.pop(0)
        return v


def test_randomize_examples():
    p = Params(3, 2, 0, 1)  # L = 4
    cw = encode((1, 0, 0), p)  # 0110, already L bits
    assert randomize(cw, p, ScriptedBits("")) == Bits.from_str("0110")
    cw0 = encode((0, 0, 0), p)  # 00, needs two pad bits
    assert randomize(cw0, p, ScriptedBits("11")) == Bits.from_str("0011")


def test_randomize_first_drawn_bit_leads():
    p = Params(3, 2, 0, 1)
    cw = encode((0, 0, 0), p)
    assert randomize(cw, p, ScriptedBits("10")) == Bits.from_str("0010")


def test_randomize_seeded_reproducible():
    p = Params(6, 2, 0, 1)
    cw = encode((0, 0, 0, 0, 0, 0), p)
    assert randomize(cw, p, 42) == randomize(cw, p, 42)


def test_strip_inverts_randomize():
    p = Params(6, 2, 0, 1)
    import random
    r = random.Random(5)
    for v in product(range(2), repeat=6):
        cw = encode(v, p)
        w = randomize(cw, p, r)
        assert strip(w, p) == cw


def test_strip_errors():
    p = Params(2, 2, 0, 1)  # prefix 2 bits, counts value 3 invalid; L = 3
    with pytest.raises(DecodeError):
        strip(Bits.from_str("110"), p)
    with pytest.raises(ParameterError):
        strip(Bits.from_str("11"), p)  # wrong length


def test_distribution_normalizes_and_compares():
    a = Distribution({0: 2, 1: 2}, 4, 2)
    b = Distribution({0: 1, 1: 1}, 2, 2)
    assert a == b
    assert a.probability(0) == Fraction(1, 2)
    assert a.probability(1) == Fraction(1, 2)


def test_distribution_validation():
    with pytest.raises(ParameterError):
        Distribution({0: 1, 1: 1}, 3, 2)      # sums to 2/3
    with pytest.raises(ParameterError):
        Distribution({5: 1}, 1, 2)            # outcome outside universe
    with pytest.raises(ParameterError):
        Distribution({}, 1, 2)                # empty


def test_min_entropy_trivial_cases():
    assert min_entropy(Distribution.uniform(2 ** 5)) == pytest.approx(5.0)
    assert min_entropy(Distribution.point_mass(3, 16)) == 0.0


def test_padded_distribution_uniform_one_bit():
    p = Params(1, 2, 0, 1)  # codewords are single bits, L = 1
    d = exact_padded_distribution(SourceModel.uniform(2), p)
    assert d == Distribution.uniform(2)


def test_padded_distribution_bernoulli_spot_value():
    # mu(0) = 3/4, n = 2: mass on words whose prefix is code(00) totals 9/16
    p = Params(2, 2, 0, 1)
    model = SourceModel.iid([Fraction(3, 4), Fraction(1, 4)])
    d = exact_padded_distribution(model, p)
    cw = encode((0, 0), p).bits
    pad = p.padded_bits - len(cw)
    mass = sum(d.probability((cw.value << pad) | r) for r in range(1 << pad))
    assert mass == Fraction(9, 16)
    # each pad extension splits the class mass evenly
    assert d.probability(cw.value << pad) == Fraction(9, 16) / (1 << pad)


def test_padded_distribution_sums_to_one_and_zero_off_support():
    p = Params(4, 2, 0, 2)
    model = SourceModel.iid([Fraction(7, 10), Fraction(3, 10)])
    d = exact_padded_distribution(model, p)
    assert sum(d.weights.values()) == d.denominator
    # undecodable prefixes carry zero: counts field 5..7 is invalid for n=4
    L = p.padded_bits
    bad_prefix = 5 << (L - p.prefix_bits)
    assert d.probability(bad_prefix) == 0


def test_padded_distribution_guard():
    with pytest.raises(BudgetError):
        exact_padded_distribution(SourceModel.uniform(2), Params(24, 2, 0, 1))


def test_padded_distribution_rejects_alphabet_mismatch():
    with pytest.raises(ParameterError):
        exact_padded_distribution(SourceModel.uniform(3), Params(4, 2, 0, 1))


def test_min_entropy_identity_with_code_lengths():
    # h_min(pi) = L - max_v (|code(v)| + log2 mu(v)), checked exactly:
    # pmax == max_v mu(v) * 2^-(L - |code(v)|)
    for mu0 in (Fraction(1, 2), Fraction(3, 4), Fraction(9, 10)):
        model = SourceModel.iid([mu0, 1 - mu0])
        p = Params(5, 2, 0, 1)
        d = exact_padded_distribution(model, p)
        L = p.padded_bits
        expected = max(model.probability(v) * Fraction(1, 2 ** (L - len(encode(v, p))))
                       for v in product(range(2), repeat=5))
        assert d.max_probability() == expected


def test_min_entropy_bound_binary_iid():
    # h_min >= L - (log2 n + 3), i.e. pmax <= 8n / 2^L, for a few exact models
    for n in (2, 5, 8):
        p = Params(n, 2, 0, 1)
        L = p.padded_bits
        for mu0 in (Fraction(1, 3), Fraction(1, 2), Fraction(99, 100)):
            model = SourceModel.iid([mu0, 1 - mu0])
            d = exact_padded_distribution(model, p)
            assert d.max_probability() <= Fraction(8 * n, 2 ** L)


def test_min_entropy_bound_markov_layout():
    # for m >= 1 the deficit is bounded by the prefix width plus the one-bit
    # ceiling slack of the suffix: h_min >= L - (prefix_bits + 1), exactly
    # pmax <= 2^(prefix_bits + 1 - L)
    for n in (4, 5, 6):
        p = Params(n, 3, 1, 1)
        L = p.padded_bits
        model = SourceModel.chain(
            [Fraction(1, 3)] * 3,
            [[Fraction(8, 10), Fraction(1, 10), Fraction(1, 10)],
             [Fraction(1, 10), Fraction(8, 10), Fraction(1, 10)],
             [Fraction(1, 10), Fraction(1, 10), Fraction(8, 10)]])
        d = exact_padded_distribution(model, p)
        assert d.max_probability() <= Fraction(2 ** (p.prefix_bits + 1), 2 ** L)


def test_min_entropy_bound_ternary_iid_paper_constant():
    # at m = 0 the narrow prefix keeps the classical constant intact:
    # h_min >= L - ((A-1) log2 n + 3), i.e. pmax <= 8 n^(A-1) / 2^L
    for n in (3, 5, 7):
        p = Params(n, 3, 0, 1)
        L = p.padded_bits
        model = SourceModel.iid([Fraction(5, 8), Fraction(2, 8), Fraction(1, 8)])
        d = exact_padded_distribution(model, p)
        assert d.max_probability() <= Fraction(8 * n ** 2, 2 ** L)
