"""Markov type classes: descriptors, exact class sizes, completion counts.

A type descriptor is the initial context (the first m symbols of a word)
plus the matrix of transition counts out of each context state.  Every
word sharing a descriptor has the same probability under every order-m
Markov source, which is what lets the codec spend bits only on the
in-class index.

Counting walks that realize a given count matrix uses Whittle's formula:
the product of per-state multinomials times a cofactor of the normalized
count matrix.  All arithmetic is exact (gmpy2 integers); probabilities
never appear here.

Counts are stored row-major as a flat tuple of length S*A, where
S = A^m context states; entry [s*A + a] is the number of times symbol a
was emitted from state s.  For m = 0 there is a single state and the
tuple is just the per-symbol count vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

import gmpy2

from .errors import BudgetError, ParameterError
from .params import Params

_fac = gmpy2.fac
_divexact = gmpy2.divexact
_bincoef = gmpy2.bincoef

# brute_force_class refuses alphabets larger than this many enumerated words
BRUTE_FORCE_LOG2_LIMIT = 24

# exhaustive descriptor scans (general m >= 1 path of max_class_size) refuse
# to enumerate more candidate count matrices than this
DESCRIPTOR_SCAN_LIMIT = 2_000_000


@dataclass(frozen=True, slots=True)
class TypeDescriptor:
    """Initial context plus flat transition-count matrix."""

    context: tuple[int, ...]
    counts: tuple[int, ...]


def state_index(context: Sequence[int], alphabet_size: int) -> int:
    """Map a context tuple to its lexicographic state number."""
    s = 0
    for sym in context:
        s = s * alphabet_size + sym
    return s


def state_context(state: int, p: Params) -> tuple[int, ...]:
    out = []
    for _ in range(p.memory):
        out.append(state % p.alphabet_size)
        state //= p.alphabet_size
    return tuple(reversed(out))


def next_state(state: int, symbol: int, p: Params) -> int:
    """Context state after emitting ``symbol`` (drops the oldest symbol)."""
    if p.memory == 0:
        return 0
    return (state % (p.alphabet_size ** (p.memory - 1))) * p.alphabet_size + symbol


def _validate_word(v: Sequence[int], p: Params) -> None:
    if len(v) != p.n:
        raise ParameterError(f"word length {len(v)} != n = {p.n}")
    for sym in v:
        if not 0 <= sym < p.alphabet_size:
            raise ParameterError(f"symbol {sym} outside alphabet of size {p.alphabet_size}")


def type_of(v: Sequence[int], p: Params) -> TypeDescriptor:
    """Exact type descriptor of a word: initial context and transition counts."""
    _validate_word(v, p)
    A = p.alphabet_size
    counts = [0] * (p.num_states * A)
    s = state_index(v[: p.memory], A)
    for pos in range(p.memory, p.n):
        counts[s * A + v[pos]] += 1
        s = next_state(s, v[pos], p)
    return TypeDescriptor(tuple(v[: p.memory]), tuple(counts))


def _int_det(mat: list[list[int]]) -> int:
    """Exact determinant of a small integer matrix (Bareiss elimination)."""
    k = len(mat)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for col in range(k - 1):
        if mat[col][col] == 0:
            for r in range(col + 1, k):
                if mat[r][col]:
                    mat[col], mat[r] = mat[r], mat[col]
                    sign = -sign
                    break
            else:
                return 0
        piv = mat[col][col]
        for i in range(col + 1, k):
            row_i, lead = mat[i], mat[i][col]
            row_c = mat[col]
            for j in range(col + 1, k):
                row_i[j] = (row_i[j] * piv - lead * row_c[j]) // prev
            row_i[col] = 0
        prev = piv
    return sign * mat[-1][-1]


def _walk_end_state(row_sums, arrivals, start: int):
    """End state forced by the flow imbalance, or None if unrealizable."""
    plus = minus = None
    for j in range(len(row_sums)):
        d = arrivals[j] - row_sums[j]
        if d == 0:
            continue
        if d == 1 and plus is None:
            plus = j
        elif d == -1 and minus is None:
            minus = j
        else:
            return None
    if plus is None and minus is None:
        return start
    if plus is not None and minus == start:
        return plus
    return None


def _cofactor_times(mult, counts, row_sums, start: int, end: int, p: Params):
    """mult * (cofactor of I - counts/rowsums at (end, start)), exactly."""
    S, A = p.num_states, p.alphabet_size
    if S == 1:
        return mult
    # state-to-state count matrix
    K = [[0] * S for _ in range(S)]
    for s in range(S):
        base = s * A
        for a in range(A):
            c = counts[base + a]
            if c:
                K[s][next_state(s, a, p)] += c
    minor = []
    scale = 1
    for i in range(S):
        if i == end:
            continue
        if row_sums[i]:
            scale *= row_sums[i]
            minor.append([(row_sums[i] if i == j else 0) - K[i][j]
                          for j in range(S) if j != start])
        else:
            minor.append([1 if i == j else 0 for j in range(S) if j != start])
    det = _int_det(minor)
    if det == 0:
        return 0
    if (start + end) % 2:
        det = -det
    val, rem = divmod(mult * det, scale)
    if rem or val < 0:
        raise RuntimeError("path-count cofactor did not divide exactly")
    return val


def completions_count(counts: Sequence[int], state: int, p: Params) -> int:
    """Number of walks from ``state`` consuming exactly the residual counts.

    Returns 0 for unrealizable residuals (bad flow or disconnected edges);
    the empty residual has exactly one (empty) completion.
    """
    S, A = p.num_states, p.alphabet_size
    if len(counts) != S * A:
        raise ParameterError(f"counts must have {S * A} entries")
    if any(c < 0 for c in counts):
        return 0
    if not any(counts):
        return 1
    row_sums = [sum(counts[s * A:(s + 1) * A]) for s in range(S)]
    arrivals = [0] * S
    for s in range(S):
        for a in range(A):
            c = counts[s * A + a]
            if c:
                arrivals[next_state(s, a, p)] += c
    end = _walk_end_state(row_sums, arrivals, state)
    if end is None:
        return 0
    mult = gmpy2.mpz(1)
    for s in range(S):
        if row_sums[s]:
            mult *= _fac(row_sums[s])
    for c in counts:
        if c > 1:
            mult = _divexact(mult, _fac(c))
    return int(_cofactor_times(mult, counts, row_sums, state, end, p))


def class_size(t: TypeDescriptor, p: Params) -> int:
    """Exact number of length-n words with descriptor ``t`` (0 if none)."""
    if len(t.context) != p.memory:
        raise ParameterError(f"context length {len(t.context)} != memory {p.memory}")
    for sym in t.context:
        if not 0 <= sym < p.alphabet_size:
            raise ParameterError("context symbol outside alphabet")
    if sum(t.counts) != p.transitions:
        return 0
    return completions_count(t.counts, state_index(t.context, p.alphabet_size), p)


def brute_force_class(t: TypeDescriptor, p: Params) -> list[tuple[int, ...]]:
    """All words with descriptor ``t`` in lexicographic order (test oracle)."""
    if p.n * math.log2(p.alphabet_size) > BRUTE_FORCE_LOG2_LIMIT + 1e-9:
        raise BudgetError("word space too large for exhaustive enumeration")
    return [v for v in product(range(p.alphabet_size), repeat=p.n)
            if type_of(v, p) == t]


class CompletionWalker:
    """Sequential completion counts along one word, updated incrementally.

    Whittle's multinomial factor changes by the exact ratio
    counts[s, a] / rowsum[s] when one transition is consumed, so a walk
    over the whole word costs one small multiply/exact-divide per step
    plus a tiny cofactor determinant, instead of a fresh factorial
    product per position.  Instances are single-use and not shared
    between threads.
    """

    def __init__(self, t: TypeDescriptor, p: Params):
        self.p = p
        S, A = p.num_states, p.alphabet_size
        self.A = A
        self.S = S
        self.counts = list(t.counts)
        self.row_sums = [sum(self.counts[s * A:(s + 1) * A]) for s in range(S)]
        self.arrivals = [0] * S
        for s in range(S):
            for a in range(A):
                c = self.counts[s * A + a]
                if c:
                    self.arrivals[next_state(s, a, p)] += c
        self.state = state_index(t.context, A)
        self.remaining = sum(self.counts)
        mult = gmpy2.mpz(1)
        for rs in self.row_sums:
            if rs:
                mult *= _fac(rs)
        for c in self.counts:
            if c > 1:
                mult = _divexact(mult, _fac(c))
        self.mult = mult

    def count_after(self, symbol: int) -> int:
        """Completions remaining if ``symbol`` were consumed next."""
        s = self.state
        c = self.counts[s * self.A + symbol]
        if c == 0:
            return 0
        if self.remaining == 1:
            return 1
        mult2 = _divexact(self.mult * c, self.row_sums[s])
        if self.S == 1:
            return int(mult2)
        ns = next_state(s, symbol, self.p)
        # apply the candidate consumption, compute, then restore
        self.counts[s * self.A + symbol] -= 1
        self.row_sums[s] -= 1
        self.arrivals[ns] -= 1
        end = _walk_end_state(self.row_sums, self.arrivals, ns)
        val = 0
        if end is not None:
            val = _cofactor_times(mult2, self.counts, self.row_sums, ns, end, self.p)
        self.counts[s * self.A + symbol] += 1
        self.row_sums[s] += 1
        self.arrivals[ns] += 1
        return int(val)

    def advance(self, symbol: int) -> None:
        """Consume ``symbol`` and move to the next context state."""
        s = self.state
        c = self.counts[s * self.A + symbol]
        if c == 0:
            raise ParameterError("no remaining transitions for this symbol")
        self.mult = _divexact(self.mult * c, self.row_sums[s])
        ns = next_state(s, symbol, self.p)
        self.counts[s * self.A + symbol] -= 1
        self.row_sums[s] -= 1
        self.arrivals[ns] -= 1
        self.remaining -= 1
        self.state = ns


def _compositions(total: int, cells: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``cells`` non-negative ints summing to ``total``."""
    if cells == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, cells - 1):
            yield (head,) + rest


def _max_multinomial(n: int, parts: int) -> int:
    # the multinomial coefficient is maximized at the most balanced split:
    # moving a unit from a larger to a smaller part multiplies the
    # coefficient by big/(small+1) > 1
    q, r = divmod(n, parts)
    mult = _fac(n)
    for i in range(parts):
        mult = _divexact(mult, _fac(q + 1 if i < r else q))
    return int(mult)


def _binary_order1_max(n: int) -> int:
    """Exact max class size for A=2, m=1 without enumerating all matrices.

    Classes are (start, a=c00, b=c01, c=c10, d=c11) with a+b+c+d = n-1.
    Whittle reduces to closed binomial forms:

      start 0, end 0 (b = c >= 1):  C(a+b, b) * C(b-1+d, d)
      start 0, end 1 (b = c + 1):   C(a+b-1, a) * C(c+d, c)

    Start-1 classes are the 0<->1 relabels of start-0 classes, so one
    orientation covers every value.  For fixed (b, c) the ratio
    W(a+1)/W(a) is a monotone decreasing rational, so the inner max over
    the a/d split is located by integer bisection and only a handful of
    binomials are evaluated exactly.
    """
    T = n - 1
    best = gmpy2.mpz(1)  # single-symbol words (b = c = 0)
    # closed walks: b = c >= 1, free split a + d = T - 2b
    for b in range(1, T // 2 + 1):
        amax = T - 2 * b
        lo, hi = 0, amax
        while lo < hi:
            mid = (lo + hi) // 2
            d = amax - mid
            if (mid + b + 1) * d >= (mid + 1) * (b - 1 + d):
                lo = mid + 1
            else:
                hi = mid
        for a in (lo - 1, lo, lo + 1):
            if 0 <= a <= amax:
                w = _bincoef(a + b, b) * _bincoef(b - 1 + (amax - a), amax - a)
                if w > best:
                    best = w
    # open walks: b = c + 1, free split a + d = T - b - c
    for c in range((T - 1) // 2 + 1):
        b = c + 1
        amax = T - b - c
        lo, hi = 0, amax
        while lo < hi:
            mid = (lo + hi) // 2
            d = amax - mid
            if (mid + b) * d >= (mid + 1) * (c + d):
                lo = mid + 1
            else:
                hi = mid
        for a in (lo - 1, lo, lo + 1):
            if 0 <= a <= amax:
                w = _bincoef(a + b - 1, a) * _bincoef(c + (amax - a), c)
                if w > best:
                    best = w
    return int(best)


def max_class_size(p: Params) -> int:
    """Largest class size over all realizable descriptors (sets the padded length)."""
    if p.memory == 0:
        return _max_multinomial(p.n, p.alphabet_size)
    if p.alphabet_size == 2 and p.memory == 1:
        return _binary_order1_max(p.n)
    cells = p.num_states * p.alphabet_size
    if _bincoef(p.transitions + cells - 1, cells - 1) > DESCRIPTOR_SCAN_LIMIT:
        raise BudgetError(
            f"descriptor space too large to scan exactly for n={p.n}, "
            f"A={p.alphabet_size}, m={p.memory}")
    best = 0
    for counts in _compositions(p.transitions, cells):
        for start in range(p.num_states):
            w = completions_count(counts, start, p)
            if w > best:
                best = w
    return best
