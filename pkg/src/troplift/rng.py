"""Deterministic per-task random streams.

Every randomized construction draws from a stream derived from the master
seed plus a tuple of string tokens (operation name, serialized input, retry
counter).  Identical seed and input therefore reproduce identical output
bytes, independent of call order.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

COEFF_NUM_MAX = 97
COEFF_DEN_MAX = 7


def stream(seed: int, *tokens: str) -> random.Random:
    """Return a Random seeded from the master seed and the given tokens."""
    h = hashlib.sha256()
    h.update(str(seed).encode())
    for tok in tokens:
        h.update(b"\x1f")
        h.update(tok.encode())
    return random.Random(int.from_bytes(h.digest()[:8], "big"))


def positive_coeff(rng: random.Random) -> Fraction:
    """Small positive rational p/q with p in [1, 97] and q in [1, 7]."""
    return Fraction(rng.randint(1, COEFF_NUM_MAX), rng.randint(1, COEFF_DEN_MAX))
