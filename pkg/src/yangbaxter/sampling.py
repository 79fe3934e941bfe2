"""Word tuples for identity checks: exhaustive when small, seeded random otherwise."""

from __future__ import annotations

from itertools import product
from typing import Iterator

import numpy as np

EXHAUSTIVE_LIMIT = 10**5


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for lengths in product(range(total + 1), repeat=parts):
        if sum(lengths) <= total:
            yield lengths


def word_tuples(n: int, arity: int, max_total: int, seed: int = 0, count: int = 1000,
                exhaustive: bool | None = None) -> list[tuple[tuple[int, ...], ...]]:
    """Tuples of ``arity`` words whose lengths sum to at most ``max_total``.

    Exhaustive when ``max_total <= 4`` and ``n**max_total <= EXHAUSTIVE_LIMIT``
    (unless overridden), otherwise ``count`` uniform draws from a seeded RNG.
    """
    if exhaustive is None:
        exhaustive = max_total <= 4 and n**max_total <= EXHAUSTIVE_LIMIT
    if exhaustive:
        out = []
        for lengths in _compositions(max_total, arity):
            letters = sum(lengths)
            for flat in product(range(n), repeat=letters):
                tup, pos = [], 0
                for ln in lengths:
                    tup.append(tuple(flat[pos:pos + ln]))
                    pos += ln
                out.append(tuple(tup))
        return out
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        lengths = rng.integers(0, max_total + 1, size=arity)
        if lengths.sum() > max_total:
            continue
        out.append(tuple(tuple(int(v) for v in rng.integers(0, n, size=ln)) for ln in lengths))
    return out
