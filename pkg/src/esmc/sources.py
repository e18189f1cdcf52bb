"""Exact-rational Markov source models and their text file format.

A model is an initial distribution over the A^m starting contexts plus a
transition row per context, all stored as integer numerators over one
denominator per block.  Nothing is ever converted to floating point, so
distribution tables, min-entropies, and statistical distances computed
downstream stay exact.

File format (# starts a comment):

    alphabet 2
    memory 1
    initial 1 1 / 2
    context 0 : 9 1 / 10
    context 1 : 1 9 / 10

For memory 0 the initial block collapses and a single line carries the
symbol probabilities:

    alphabet 3
    memory 0
    symbols 2 1 1 / 4

Contexts are listed as m space-separated symbols and must each appear
exactly once; every numerator list must sum to its denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import FormatError, ParameterError
from .rng import resolve_rng


@dataclass(frozen=True, slots=True)
class SourceModel:
    alphabet_size: int
    memory: int
    init_num: tuple[int, ...]
    init_den: int
    trans_num: tuple[tuple[int, ...], ...]
    trans_den: int

    def __post_init__(self):
        A, m = self.alphabet_size, self.memory
        if A < 2:
            raise ParameterError("alphabet size must be at least 2")
        if m < 0:
            raise ParameterError("memory must be non-negative")
        S = A ** m
        if len(self.init_num) != S:
            raise ParameterError(f"initial distribution needs {S} entries")
        if len(self.trans_num) != S or any(len(r) != A for r in self.trans_num):
            raise ParameterError(f"transition table must be {S} rows of {A}")
        if self.init_den < 1 or self.trans_den < 1:
            raise ParameterError("denominators must be positive")
        if any(v < 0 for v in self.init_num) or \
                any(v < 0 for row in self.trans_num for v in row):
            raise ParameterError("probabilities must be non-negative")
        if sum(self.init_num) != self.init_den:
            raise ParameterError("initial distribution does not sum to 1")
        for row in self.trans_num:
            if sum(row) != self.trans_den:
                raise ParameterError("transition row does not sum to 1")

    @property
    def num_states(self) -> int:
        return self.alphabet_size ** self.memory

    @classmethod
    def iid(cls, probs: Sequence[Fraction]) -> "SourceModel":
        """Memoryless model from one symbol distribution."""
        fracs = [Fraction(q) for q in probs]
        den = 1
        for q in fracs:
            den = den * q.denominator // _gcd(den, q.denominator)
        nums = tuple(int(q * den) for q in fracs)
        return cls(len(fracs), 0, (1,), 1, (nums,), den)

    @classmethod
    def uniform(cls, alphabet_size: int, memory: int = 0) -> "SourceModel":
        S = alphabet_size ** memory
        row = tuple(1 for _ in range(alphabet_size))
        return cls(alphabet_size, memory, tuple(1 for _ in range(S)), S,
                   tuple(row for _ in range(S)), alphabet_size)

    @classmethod
    def chain(cls, init: Sequence[Fraction],
              rows: Sequence[Sequence[Fraction]], memory: int = 1) -> "SourceModel":
        """Order-m model from exact initial and per-context rows."""
        init = [Fraction(q) for q in init]
        rows = [[Fraction(q) for q in row] for row in rows]
        iden = 1
        for q in init:
            iden = iden * q.denominator // _gcd(iden, q.denominator)
        tden = 1
        for row in rows:
            for q in row:
                tden = tden * q.denominator // _gcd(tden, q.denominator)
        A = len(rows[0])
        return cls(A, memory, tuple(int(q * iden) for q in init), iden,
                   tuple(tuple(int(q * tden) for q in row) for row in rows), tden)

    def context_state(self, context: Sequence[int]) -> int:
        s = 0
        for sym in context:
            s = s * self.alphabet_size + sym
        return s

    def next_state(self, state: int, symbol: int) -> int:
        if self.memory == 0:
            return 0
        return (state % self.alphabet_size ** (self.memory - 1)) \
            * self.alphabet_size + symbol

    def weight_denominator(self, length: int) -> int:
        """Common denominator of every length-``length`` word probability."""
        if length < self.memory:
            raise ParameterError("word shorter than the model memory")
        return self.init_den * self.trans_den ** (length - self.memory)

    def weight_numerator(self, v: Sequence[int]) -> int:
        """Numerator of the word probability over weight_denominator(len(v))."""
        m, A = self.memory, self.alphabet_size
        if len(v) < m:
            raise ParameterError("word shorter than the model memory")
        for sym in v:
            if not 0 <= sym < A:
                raise ParameterError("symbol outside the model alphabet")
        s = self.context_state(v[:m])
        num = self.init_num[s]
        for pos in range(m, len(v)):
            if num == 0:
                return 0
            num *= self.trans_num[s][v[pos]]
            s = self.next_state(s, v[pos])
        return num

    def probability(self, v: Sequence[int]) -> Fraction:
        return Fraction(self.weight_numerator(v), self.weight_denominator(len(v)))

    def sample(self, n: int, rng=None) -> tuple[int, ...]:
        """One length-n word; rational thresholds keep the draw exact."""
        if n < self.memory:
            raise ParameterError("n shorter than the model memory")
        r = resolve_rng(rng)
        out = []
        s = _draw(self.init_num, self.init_den, r)
        ctx = []
        t = s
        for _ in range(self.memory):
            ctx.append(t % self.alphabet_size)
            t //= self.alphabet_size
        out.extend(reversed(ctx))
        for _ in range(n - self.memory):
            a = _draw(self.trans_num[s], self.trans_den, r)
            out.append(a)
            s = self.next_state(s, a)
        return tuple(out)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _draw(nums: Sequence[int], den: int, rng) -> int:
    ticket = rng.randrange(den)
    acc = 0
    for idx, w in enumerate(nums):
        acc += w
        if ticket < acc:
            return idx
    raise RuntimeError("distribution rows are validated to sum to 1")


def save_model(model: SourceModel, path: str) -> None:
    lines = [f"alphabet {model.alphabet_size}", f"memory {model.memory}"]
    if model.memory == 0:
        lines.append("symbols " + " ".join(map(str, model.trans_num[0]))
                     + f" / {model.trans_den}")
    else:
        lines.append("initial " + " ".join(map(str, model.init_num))
                     + f" / {model.init_den}")
        for s in range(model.num_states):
            ctx = []
            t = s
            for _ in range(model.memory):
                ctx.append(t % model.alphabet_size)
                t //= model.alphabet_size
            label = " ".join(map(str, reversed(ctx)))
            lines.append(f"context {label} : "
                         + " ".join(map(str, model.trans_num[s]))
                         + f" / {model.trans_den}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def _parse_rationals(tokens: list[str], where: str) -> tuple[list[int], int]:
    if tokens.count("/") != 1:
        raise FormatError(f"{where}: expected 'numerators / denominator'")
    cut = tokens.index("/")
    try:
        nums = [int(t) for t in tokens[:cut]]
        den = int(tokens[cut + 1])
    except (ValueError, IndexError):
        raise FormatError(f"{where}: non-integer entry") from None
    if len(tokens) != cut + 2:
        raise FormatError(f"{where}: trailing tokens after denominator")
    return nums, den


def load_model(path: str) -> SourceModel:
    alphabet = memory = None
    symbols = initial = None
    contexts: dict[int, tuple[list[int], int]] = {}
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            where = f"{path}:{lineno}"
            tokens = line.split()
            kind = tokens[0]
            if kind == "alphabet":
                alphabet = int(tokens[1])
            elif kind == "memory":
                memory = int(tokens[1])
            elif kind == "symbols":
                symbols = _parse_rationals(tokens[1:], where)
            elif kind == "initial":
                initial = _parse_rationals(tokens[1:], where)
            elif kind == "context":
                if alphabet is None or memory is None:
                    raise FormatError(f"{where}: context before alphabet/memory")
                if ":" not in tokens:
                    raise FormatError(f"{where}: missing ':' after context label")
                cut = tokens.index(":")
                label = [int(t) for t in tokens[1:cut]]
                if len(label) != memory or any(not 0 <= s < alphabet for s in label):
                    raise FormatError(f"{where}: bad context label")
                state = 0
                for sym in label:
                    state = state * alphabet + sym
                if state in contexts:
                    raise FormatError(f"{where}: duplicate context")
                contexts[state] = _parse_rationals(tokens[cut + 1:], where)
            else:
                raise FormatError(f"{where}: unknown line kind {kind!r}")
    if alphabet is None or memory is None:
        raise FormatError(f"{path}: missing alphabet or memory line")
    try:
        if memory == 0:
            if symbols is None:
                raise FormatError(f"{path}: memory-0 model needs a symbols line")
            nums, den = symbols
            return SourceModel(alphabet, 0, (1,), 1, (tuple(nums),), den)
        if initial is None:
            raise FormatError(f"{path}: missing initial distribution")
        S = alphabet ** memory
        if sorted(contexts) != list(range(S)):
            raise FormatError(f"{path}: expected one context line per state")
        dens = {contexts[s][1] for s in range(S)}
        den = 1
        for d in dens:
            den = den * d // _gcd(den, d)
        rows = tuple(tuple(v * (den // contexts[s][1]) for v in contexts[s][0])
                     for s in range(S))
        return SourceModel(alphabet, memory, tuple(initial[0]), initial[1],
                           rows, den)
    except ParameterError as exc:
        raise FormatError(f"{path}: {exc}") from None
