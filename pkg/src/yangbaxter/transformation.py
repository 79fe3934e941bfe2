"""Self-maps of a finite set {0, ..., n-1} stored as image tuples."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Transformation:
    """A map t: X -> X with ``image[x] == t(x)``.

    Composition follows function notation: ``(s * t)(x) == s(t(x))``.
    """

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if any(not 0 <= v < n for v in self.image):
            raise ValueError(f"transformation entries must lie in [0, {n})")

    @classmethod
    def identity(cls, n: int) -> Transformation:
        return cls(tuple(range(n)))

    @classmethod
    def from_seq(cls, values: Iterable[int]) -> Transformation:
        return cls(tuple(int(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: Transformation) -> Transformation:
        if other.n != self.n:
            raise ValueError("cannot compose transformations of different sizes")
        return Transformation(tuple(self.image[v] for v in other.image))

    def apply(self, word: Sequence[int]) -> tuple[int, ...]:
        """Apply letterwise to a word."""
        return tuple(self.image[v] for v in word)

    def is_bijective(self) -> bool:
        return len(set(self.image)) == self.n

    def is_identity(self) -> bool:
        return self.image == tuple(range(self.n))

    def inverse(self) -> Transformation:
        if not self.is_bijective():
            raise ValueError("transformation is not bijective")
        inv = [0] * self.n
        for x, v in enumerate(self.image):
            inv[v] = x
        return Transformation(tuple(inv))

    def __repr__(self) -> str:
        return f"Transformation({list(self.image)})"


def compose_all(maps: Iterable[Transformation], n: int) -> Transformation:
    """Product ``t1 * t2 * ... * tk`` (``tk`` applied first)."""
    out = Transformation.identity(n)
    for t in maps:
        out = out * t
    return out
