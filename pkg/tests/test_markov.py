"""Type descriptors, Whittle counting, and class enumeration.

The exhaustive oracle throughout is brute_force_class / direct grouping
of all A^n words, against which every counting path is compared.
"""

import random
from fractions import Fraction
from itertools import product

import pytest

from esmc.errors import BudgetError, ParameterError
from esmc.markov import (CompletionWalker, TypeDescriptor, brute_force_class,
                         class_size, completions_count, max_class_size,
                         state_index, type_of)
from esmc.params import Params


def group_words_by_type(p):
    groups = {}
    for v in product(range(p.alphabet_size), repeat=p.n):
        groups.setdefault(type_of(v, p), []).append(v)
    return groups


def test_type_of_examples():
    p = Params(3, 2, 0, 1)
    assert type_of((1, 0, 0), p) == TypeDescriptor((), (2, 1))
    assert type_of((0, 0, 0), p) == TypeDescriptor((), (3, 0))
    pm = Params(4, 2, 1, 1)
    t = type_of((0, 1, 1, 0), pm)
    assert t.context == (0,)
    # flat counts are [0->0, 0->1, 1->0, 1->1]
    assert t.counts == (0, 1, 1, 1)


def test_type_of_validates():
    p = Params(3, 2, 0, 1)
    with pytest.raises(ParameterError):
        type_of((1, 0), p)
    with pytest.raises(ParameterError):
        type_of((2, 0, 0), p)


def test_class_size_examples():
    p = Params(3, 2, 0, 1)
    assert class_size(TypeDescriptor((), (2, 1)), p) == 3
    p6 = Params(6, 2, 0, 1)
    assert class_size(TypeDescriptor((), (3, 3)), p6) == 20
    pm = Params(4, 2, 1, 1)
    assert class_size(TypeDescriptor((0,), (0, 1, 1, 1)), pm) == 1


def test_class_size_inconsistent_is_zero():
    p = Params(4, 2, 1, 1)
    # counts not summing to n - m
    assert class_size(TypeDescriptor((0,), (0, 0, 0, 1)), p) == 0
    # flow-impossible: transitions out of state 1 but none ever enter it
    assert class_size(TypeDescriptor((0,), (1, 0, 2, 0)), p) == 0


def test_brute_force_class_examples():
    p = Params(3, 2, 0, 1)
    assert brute_force_class(TypeDescriptor((), (2, 1)), p) == \
        [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert brute_force_class(TypeDescriptor((), (3, 0)), p) == [(0, 0, 0)]
    p4 = Params(4, 2, 0, 1)
    assert brute_force_class(TypeDescriptor((), (2, 2)), p4) == \
        [(0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0),
         (1, 0, 0, 1), (1, 0, 1, 0), (1, 1, 0, 0)]


def test_brute_force_guard():
    with pytest.raises(BudgetError):
        brute_force_class(TypeDescriptor((), (30, 0)), Params(30, 2, 0, 1))


@pytest.mark.parametrize("n,A,m", [
    (5, 2, 0), (8, 2, 0), (12, 2, 0),
    (5, 3, 0), (7, 3, 0),
    (5, 2, 1), (9, 2, 1), (12, 2, 1),
    (5, 3, 1), (6, 3, 1),
    (5, 2, 2), (7, 2, 2),
])
def test_class_sizes_partition_word_space(n, A, m):
    p = Params(n, A, m, 1)
    groups = group_words_by_type(p)
    total = 0
    for t, words in groups.items():
        size = class_size(t, p)
        assert size == len(words), t
        total += size
    assert total == A ** n


def test_completions_count_examples():
    p = Params(4, 2, 0, 1)
    assert completions_count((0, 0), 0, p) == 1       # empty residual
    assert completions_count((1, 1), 0, p) == 2       # "01" and "10"
    pm = Params(4, 2, 1, 1)
    # from state 1, residual {1->0: 1, 0->0: 1}: only "00"
    assert completions_count((1, 0, 1, 0), 1, pm) == 1


def test_completions_count_unrealizable_is_zero():
    pm = Params(4, 2, 1, 1)
    assert completions_count((0, 0, 0, 2), 0, pm) == 0  # stuck in state 0
    assert completions_count((0, 0, -1, 2), 1, pm) == 0  # negative residual


def test_completions_one_step_recursion():
    # count(residual, s) = sum_a count(residual - e(s,a), next(s,a))
    rng = random.Random(11)
    for p in [Params(7, 2, 1, 1), Params(6, 3, 1, 1), Params(6, 2, 2, 1)]:
        groups = group_words_by_type(p)
        keys = sorted(groups, key=lambda t: (t.context, t.counts))
        some = rng.sample(keys, min(8, len(keys)))
        for t in some:
            walker = CompletionWalker(t, p)
            s = state_index(t.context, p.alphabet_size)
            total = 0
            for a in range(p.alphabet_size):
                total += walker.count_after(a)
            assert total == class_size(t, p)


def test_walker_matches_one_shot_counts():
    p = Params(8, 2, 1, 1)
    v = (0, 1, 1, 0, 0, 0, 1, 0)
    t = type_of(v, p)
    walker = CompletionWalker(t, p)
    counts = list(t.counts)
    state = state_index(t.context, p.alphabet_size)
    from esmc.markov import next_state
    for pos in range(p.memory, p.n):
        for a in range(p.alphabet_size):
            expect = list(counts)
            ns = next_state(state, a, p)
            if expect[state * 2 + a] == 0:
                assert walker.count_after(a) == 0
                continue
            expect[state * 2 + a] -= 1
            assert walker.count_after(a) == completions_count(expect, ns, p)
        sym = v[pos]
        counts[state * 2 + sym] -= 1
        state = next_state(state, sym, p)
        walker.advance(sym)


def test_equiprobability_within_class():
    # every word in a class has identical probability under any order-m chain
    rng = random.Random(5)
    for p in [Params(6, 2, 1, 1), Params(5, 3, 1, 1)]:
        A = p.alphabet_size
        init = [Fraction(rng.randrange(1, 9)) for _ in range(A)]
        init = [x / sum(init) for x in init]
        rows = []
        for _ in range(A):
            row = [Fraction(rng.randrange(1, 9)) for _ in range(A)]
            rows.append([x / sum(row) for x in row])

        def prob(v):
            pr = init[v[0]]
            for i in range(1, len(v)):
                pr *= rows[v[i - 1]][v[i]]
            return pr

        for t, words in group_words_by_type(p).items():
            probs = {prob(v) for v in words}
            assert len(probs) == 1


def test_max_class_size_matches_enumeration():
    for n, A, m in [(4, 2, 0), (7, 2, 0), (12, 2, 0), (6, 3, 0), (5, 4, 0),
                    (4, 2, 1), (8, 2, 1), (13, 2, 1), (5, 3, 1), (7, 3, 1),
                    (6, 2, 2)]:
        p = Params(n, A, m, 1)
        brute = max(len(words) for words in group_words_by_type(p).values())
        assert max_class_size(p) == brute, (n, A, m)


def test_max_class_size_budget_guard():
    with pytest.raises(BudgetError):
        max_class_size(Params(4096, 3, 1, 1))


def test_binary_order1_max_scales():
    # the specialized path must agree with the generic descriptor scan
    for n in (20, 33):
        p = Params(n, 2, 1, 1)
        specialized = max_class_size(p)
        best = 0
        from esmc.markov import _compositions
        for counts in _compositions(n - 1, 4):
            for start in (0, 1):
                best = max(best, completions_count(counts, start, p))
        assert specialized == best
