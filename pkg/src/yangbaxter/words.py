"""Degree-truncated word problem for the monoids M(X,r), A(X,r) and A'(X,r).

All defining relations are homogeneous of degree 2, so the congruence never
mixes word lengths and the classes of X^d can be computed exactly by closing
X^d under single-position rewrites. Words of length d are encoded as
mixed-radix integers with the first letter most significant; integer order
then coincides with lexicographic order, and every class is represented by
its smallest member.
"""

from __future__ import annotations

import enum
from itertools import product
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .solution import FiniteSolution

Word = tuple[int, ...]

DEFAULT_MAX_DEGREE = 6
MAX_WORDS_PER_DEGREE = 10**7


class ResourceGuardError(ValueError):
    """Raised when a request would exceed the configured word-count budget."""


class DegreeError(ValueError):
    """Raised for words longer than the quotient was built for."""


class Kind(enum.Enum):
    M = "M"
    A = "A"
    AP = "Ap"

    @classmethod
    def parse(cls, value) -> Kind:
        if isinstance(value, Kind):
            return value
        aliases = {"M": cls.M, "A": cls.A, "Ap": cls.AP, "AP": cls.AP, "A'": cls.AP, "A′": cls.AP}
        try:
            return aliases[str(value)]
        except KeyError:
            raise ValueError(f"unknown presentation kind {value!r}; use M, A or Ap") from None

    @property
    def label(self) -> str:
        return {"M": "M", "A": "A", "Ap": "A'"}[self.value]


def _rewrite_pairs(kind: Kind, s: FiniteSolution) -> Iterable[tuple[Word, Word]]:
    S, G = s.sigma, s.gamma
    for x, y in product(range(s.n), repeat=2):
        if kind is Kind.M:
            yield (x, y), (S[x][y], G[y][x])
        elif kind is Kind.A:
            u = S[x][y]
            yield (x, u), (u, S[u][G[y][x]])
        else:
            v = G[y][x]
            yield (v, y), (G[v][S[x][y]], v)


def relations(kind, s: FiniteSolution) -> list[tuple[Word, Word]]:
    """Nontrivial defining relations, lex-smaller side first, sorted and deduplicated."""
    kind = Kind.parse(kind)
    rels = {tuple(sorted(pair)) for pair in _rewrite_pairs(kind, s) if pair[0] != pair[1]}
    return sorted(rels)


def encode(word: Sequence[int], n: int) -> int:
    idx = 0
    for letter in word:
        idx = idx * n + letter
    return idx


def decode(index: int, n: int, d: int) -> Word:
    out = [0] * d
    for i in range(d - 1, -1, -1):
        index, out[i] = divmod(index, n)
    return tuple(out)


def all_words(n: int, d: int) -> Iterable[Word]:
    return product(range(n), repeat=d)


def check_budget(n: int, d: int) -> None:
    if n**d > MAX_WORDS_PER_DEGREE:
        raise ResourceGuardError(
            f"n^d = {n}^{d} exceeds the budget of {MAX_WORDS_PER_DEGREE} words per degree; "
            "lower the maximum degree")


def _components(num_nodes: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Class labels with classes numbered by their smallest member."""
    if src.size == 0:
        return np.arange(num_nodes, dtype=np.int64)
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(num_nodes, num_nodes))
    _, raw = connected_components(graph, directed=False)
    # relabel components in order of first (smallest) member
    first = np.full(raw.max() + 1, num_nodes, dtype=np.int64)
    np.minimum.at(first, raw, np.arange(num_nodes))
    order = np.argsort(first)
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size)
    return rank[raw]


class GradedQuotient:
    """Per-degree partition of X^d into congruence classes, for d <= max_degree."""

    def __init__(self, kind, solution: FiniteSolution, max_degree: int = DEFAULT_MAX_DEGREE):
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        self.kind = Kind.parse(kind)
        self.solution = solution
        self.n = solution.n
        self.max_degree = max_degree
        check_budget(self.n, max_degree)
        n = self.n
        pairs = np.array([[encode(u, n), encode(v, n)] for u, v in _rewrite_pairs(self.kind, solution)],
                         dtype=np.int64)
        self._pair_labels = _components(n * n, pairs[:, 0], pairs[:, 1])
        self._pair_min = np.zeros(n * n, dtype=np.int64)
        reps = np.full(n * n, n * n, dtype=np.int64)
        np.minimum.at(reps, self._pair_labels, np.arange(n * n))
        self._pair_min = reps[self._pair_labels]
        self._labels: list[np.ndarray] = []
        self._reps: list[np.ndarray] = []
        for d in range(max_degree + 1):
            labels = self._build_degree(d)
            reps = np.full(labels.max() + 1, n**d, dtype=np.int64)
            np.minimum.at(reps, labels, np.arange(labels.size))
            self._labels.append(labels)
            self._reps.append(reps)

    def _build_degree(self, d: int) -> np.ndarray:
        n = self.n
        if d == 2:
            return self._pair_labels.copy()
        size = n**d
        if d < 2:
            return np.arange(size, dtype=np.int64)
        words = np.arange(size, dtype=np.int64)
        src, dst = [], []
        for i in range(d - 1):
            scale = n ** (d - 2 - i)
            pair = (words // scale) % (n * n)
            target = words + (self._pair_min[pair] - pair) * scale
            moved = target != words
            src.append(words[moved])
            dst.append(target[moved])
        return _components(size, np.concatenate(src), np.concatenate(dst))

    # --- queries ----------------------------------------------------------

    def _check(self, word: Sequence[int]) -> int:
        d = len(word)
        if d > self.max_degree:
            raise DegreeError(f"degree {d} exceeds the quotient's max degree {self.max_degree}")
        if any(not 0 <= v < self.n for v in word):
            raise ValueError(f"letter out of range in word {tuple(word)}")
        return d

    def class_of(self, word: Sequence[int]) -> int:
        d = self._check(word)
        return int(self._labels[d][encode(word, self.n)])

    def normal_form(self, word: Sequence[int]) -> Word:
        d = self._check(word)
        rep = self._reps[d][self._labels[d][encode(word, self.n)]]
        return decode(int(rep), self.n, d)

    def equal(self, w1: Sequence[int], w2: Sequence[int]) -> bool:
        d1, d2 = self._check(w1), self._check(w2)
        return d1 == d2 and self.class_of(w1) == self.class_of(w2)

    def multiply(self, w1: Sequence[int], w2: Sequence[int]) -> Word:
        return self.normal_form(tuple(w1) + tuple(w2))

    def num_classes(self, d: int) -> int:
        return int(self._reps[d].size)

    def growth(self) -> list[int]:
        return [self.num_classes(d) for d in range(self.max_degree + 1)]

    def labels(self, d: int) -> np.ndarray:
        """Class id of every word of length d, indexed by its mixed-radix code."""
        return self._labels[d]

    def representative(self, d: int, cls: int) -> Word:
        return decode(int(self._reps[d][cls]), self.n, d)

    def representatives(self, d: int) -> list[Word]:
        return [decode(int(i), self.n, d) for i in self._reps[d]]

    def classes(self, d: int) -> list[list[Word]]:
        if d > self.max_degree:
            raise DegreeError(f"degree {d} exceeds the quotient's max degree {self.max_degree}")
        out: list[list[Word]] = [[] for _ in range(self.num_classes(d))]
        for idx, lab in enumerate(self._labels[d]):
            out[lab].append(decode(idx, self.n, d))
        return out

    def __repr__(self) -> str:
        return f"GradedQuotient({self.kind.label}, n={self.n}, max_degree={self.max_degree})"


def quotient(kind, s: FiniteSolution, max_degree: int = DEFAULT_MAX_DEGREE) -> GradedQuotient:
    return GradedQuotient(kind, s, max_degree)


def classes(kind, s: FiniteSolution, d: int) -> list[list[Word]]:
    return GradedQuotient(kind, s, d).classes(d)


def normal_form(q: GradedQuotient, w: Sequence[int]) -> Word:
    return q.normal_form(w)


def equal(q: GradedQuotient, w1: Sequence[int], w2: Sequence[int]) -> bool:
    return q.equal(w1, w2)


def multiply(q: GradedQuotient, w1: Sequence[int], w2: Sequence[int]) -> Word:
    if len(w1) + len(w2) > q.max_degree:
        raise DegreeError("product degree exceeds the quotient's max degree")
    return q.multiply(w1, w2)


def growth(kind, s: FiniteSolution, max_degree: int) -> list[int]:
    return GradedQuotient(kind, s, max_degree).growth()
