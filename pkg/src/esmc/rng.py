"""Random-bit sources.

Operational randomness (pad bits, hash index, keys) defaults to the
platform entropy pool; any operation also accepts an int seed or a
random.Random-style object so runs can be reproduced exactly.
"""

from __future__ import annotations

import random


def resolve_rng(rng=None):
    """None -> SystemRandom; int -> seeded Mersenne stream; else pass through."""
    if rng is None:
        return random.SystemRandom()
    if isinstance(rng, int):
        return random.Random(rng)
    return rng
