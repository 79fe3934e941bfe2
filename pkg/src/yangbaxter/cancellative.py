"""Window-truncated left cancellative congruence on (M, +) and the induced solutions.

For a left non-degenerate solution the cocycle pi identifies M(X,r) with
A(X,r), so (M, +) is computed as the derived monoid A and ``a o b`` becomes
``a + lambda'_a(b)``. The congruence eta is approximated inside a window of
degrees <= D: cancellation witnesses of degree <= W seed merges, which are then
closed under addition on both sides and cancellation until nothing changes.
Every merge is sound; a window can only miss merges whose witnesses do not fit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .actions import pi_inverse, sigma_composite
from .solution import FiniteSolution, SolutionError, is_r_bijective, left_nondegenerate
from .transformation import Transformation
from .words import GradedQuotient, Kind, Word, encode

MAX_SWEEPS = 1000


class WindowError(RuntimeError):
    """The window is too small to decide the requested quantity."""


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx  # smallest node stays root
        return True


@dataclass
class Merge:
    degree: int
    left: Word
    right: Word
    rule: str
    witness: Optional[Word] = None


class EtaWindow:
    """Partition of the A-classes of degree <= D into eta-classes."""

    def __init__(self, s: FiniteSolution, max_degree: int = 4, witness_bound: Optional[int] = None,
                 qA: Optional[GradedQuotient] = None):
        if not left_nondegenerate(s):
            raise SolutionError("solution is not left non-degenerate")
        self.solution = s
        self.n = s.n
        self.max_degree = max_degree
        self.witness_bound = max_degree - 1 if witness_bound is None else witness_bound
        if qA is None or qA.max_degree < max_degree:
            qA = GradedQuotient(Kind.A, s, max_degree)
        self.qA = qA
        self.merges: list[Merge] = []
        self._offsets = np.cumsum([0] + [qA.num_classes(d) for d in range(max_degree + 1)])
        self._uf = _UnionFind(int(self._offsets[-1]))
        self._sum = {}
        for i in range(max_degree + 1):
            for j in range(max_degree + 1 - i):
                self._sum[i, j] = self._sum_table(i, j)
        self.sweeps = 0
        self.stable_within_window = self._run()

    # --- construction ------------------------------------------------------

    def _sum_table(self, i: int, j: int) -> np.ndarray:
        """Table of A-class sums: entry [p, q] is class(rep_p + rep_q) at degree i + j."""
        qA, n = self.qA, self.n
        left = np.array([encode(w, n) for w in qA.representatives(i)], dtype=np.int64)
        right = np.array([encode(w, n) for w in qA.representatives(j)], dtype=np.int64)
        codes = left[:, None] * n**j + right[None, :]
        return qA.labels(i + j)[codes]

    def _node(self, d: int, cls: int) -> int:
        return int(self._offsets[d]) + int(cls)

    def _root_class(self, d: int, cls: int) -> int:
        return self._uf.find(self._node(d, cls)) - int(self._offsets[d])

    def _roots(self, d: int) -> np.ndarray:
        return np.array([self._root_class(d, c) for c in range(self.qA.num_classes(d))], dtype=np.int64)

    def _merge(self, d: int, a: int, b: int, rule: str, witness=None) -> bool:
        if self._uf.union(self._node(d, a), self._node(d, b)):
            self.merges.append(Merge(d, self.qA.representative(d, a), self.qA.representative(d, b),
                                     rule, witness))
            return True
        return False

    def _cancel_sweep(self) -> bool:
        changed = False
        D = self.max_degree
        for k in range(1, min(self.witness_bound, D) + 1):
            for d in range(1, D - k + 1):
                table = self._sum[k, d]
                for c in range(table.shape[0]):
                    sums = self._roots(k + d)[table[c]]
                    first: dict[int, int] = {}
                    for a, key in enumerate(sums.tolist()):
                        if key in first:
                            if self._merge(d, first[key], a, "cancel", self.qA.representative(k, c)):
                                changed = True
                        else:
                            first[key] = a
        return changed

    def _add_sweep(self) -> bool:
        changed = False
        D = self.max_degree
        for d in range(1, D):
            roots = self._roots(d)
            moved = np.flatnonzero(roots != np.arange(roots.size))
            if moved.size == 0:
                continue
            for k in range(1, D - d + 1):
                left = self._sum[k, d]
                right = self._sum[d, k]
                for a in moved.tolist():
                    ra = int(roots[a])
                    for c in range(left.shape[0]):
                        if self._merge(d + k, left[c, a], left[c, ra], "left-add"):
                            changed = True
                        if self._merge(d + k, right[a, c], right[ra, c], "right-add"):
                            changed = True
        return changed

    def _run(self) -> bool:
        while self.sweeps < MAX_SWEEPS:
            self.sweeps += 1
            changed = self._cancel_sweep()
            changed = self._add_sweep() or changed
            if not changed:
                return True
        return False

    # --- queries -------------------------------------------------------------

    def eta_labels(self, d: int) -> np.ndarray:
        """eta-class of every A-class of degree d; eta-classes are numbered by their smallest A-class."""
        roots = self._roots(d)
        uniq = np.unique(roots)
        return np.searchsorted(uniq, roots)

    def num_classes(self, d: int) -> int:
        return int(np.unique(self._roots(d)).size)

    def growth(self) -> list[int]:
        return [self.num_classes(d) for d in range(self.max_degree + 1)]

    def class_of(self, word: Sequence[int]) -> int:
        d = len(word)
        return int(self.eta_labels(d)[self.qA.class_of(word)])

    def normal_form(self, word: Sequence[int]) -> Word:
        d = len(word)
        return self.qA.representative(d, self._root_class(d, self.qA.class_of(word)))

    def equal(self, w1: Sequence[int], w2: Sequence[int]) -> bool:
        return len(w1) == len(w2) and self.normal_form(w1) == self.normal_form(w2)

    def merged_pairs(self, d: int) -> list[tuple[Word, Word]]:
        """(A-class representative, eta representative) for every non-root A-class of degree d."""
        out = []
        for cls, root in enumerate(self._roots(d).tolist()):
            if cls != root:
                out.append((self.qA.representative(d, cls), self.qA.representative(d, root)))
        return out

    def eta_classes(self, d: int) -> list[list[Word]]:
        groups: dict[int, list[Word]] = {}
        for cls, root in enumerate(self._roots(d).tolist()):
            groups.setdefault(root, []).append(self.qA.representative(d, cls))
        return [groups[k] for k in sorted(groups)]

    def __repr__(self) -> str:
        return (f"EtaWindow(n={self.n}, D={self.max_degree}, W={self.witness_bound}, "
                f"growth={self.growth()}, stable={self.stable_within_window})")


def eta_window(s: FiniteSolution, max_degree: int = 4, witness_bound: Optional[int] = None) -> EtaWindow:
    return EtaWindow(s, max_degree, witness_bound)


class QuotientMonoid:
    """The window of M-bar = (M, +)/eta with +, o and lambda-bar on eta-class representatives.

    Elements are given as words in A(X,r) (equivalently M(X,r) transported along pi).
    """

    def __init__(self, ew: EtaWindow):
        self.window = ew
        self.solution = ew.solution
        self.max_degree = ew.max_degree

    def rep(self, w: Sequence[int]) -> Word:
        return self.window.normal_form(tuple(w))

    def _fits(self, *words) -> None:
        if sum(len(w) for w in words) > self.max_degree:
            raise WindowError("degrees do not fit in the window")

    def add(self, a: Sequence[int], b: Sequence[int]) -> Word:
        self._fits(a, b)
        return self.rep(tuple(a) + tuple(b))

    def action(self, a: Sequence[int]) -> Transformation:
        """lambda'_a as a transformation of X (the sigma-composite of pi^{-1}(a))."""
        return sigma_composite(self.solution, pi_inverse(self.solution, a))

    def lam(self, a: Sequence[int], b: Sequence[int]) -> Word:
        return self.rep(self.action(a).apply(b))

    def lam_inverse(self, a: Sequence[int], b: Sequence[int]) -> Word:
        return self.rep(self.action(a).inverse().apply(b))

    def circ(self, a: Sequence[int], b: Sequence[int]) -> Word:
        self._fits(a, b)
        return self.rep(tuple(a) + self.action(a).apply(b))

    def equal(self, a, b) -> bool:
        return self.window.equal(a, b)


def is_left_cancellative_within(qm: QuotientMonoid) -> bool:
    """No pair c + a = c + b with a != b in M-bar among all words fitting the window."""
    ew = qm.window
    if not ew.stable_within_window:
        return False
    D = ew.max_degree
    for k in range(1, D + 1):
        for d in range(1, D - k + 1):
            table = ew._sum[k, d]
            labels_d = ew.eta_labels(d)
            labels_kd = ew.eta_labels(k + d)
            for c in range(table.shape[0]):
                seen: dict[int, int] = {}
                for a, key in enumerate(labels_kd[table[c]].tolist()):
                    if key in seen and labels_d[seen[key]] != labels_d[a]:
                        return False
                    seen.setdefault(key, a)
    return True


@dataclass
class CongruenceReport:
    pairs_checked: int = 0
    lambda_stable: bool = True
    action_stable: bool = True
    circ_compatible: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.lambda_stable and self.action_stable and self.circ_compatible


def congruence_checks(ew: EtaWindow) -> CongruenceReport:
    """Check that merged pairs share lambda', that eta is lambda'_z-stable and compatible with o."""
    qm = QuotientMonoid(ew)
    s = ew.solution
    rep = CongruenceReport()
    for d in range(1, ew.max_degree + 1):
        for a, b in ew.merged_pairs(d):
            rep.pairs_checked += 1
            if qm.action(a) != qm.action(b):
                rep.lambda_stable = False
                rep.failures.append(f"engine bug: lambda' differs on merged pair {a} ~ {b}")
            for z in range(s.n):
                t = sigma_composite(s, (z,))
                for image in (t.apply, t.inverse().apply):
                    if not ew.equal(image(a), image(b)):
                        rep.action_stable = False
                        rep.failures.append(f"eta not stable under lambda'_{z} on {a} ~ {b}")
                if d + 1 <= ew.max_degree:
                    if not ew.equal(qm.circ((z,), a), qm.circ((z,), b)):
                        rep.circ_compatible = False
                        rep.failures.append(f"z o a != z o b for z={z}, {a} ~ {b}")
                    if not ew.equal(qm.circ(a, (z,)), qm.circ(b, (z,))):
                        rep.circ_compatible = False
                        rep.failures.append(f"a o z != b o z for z={z}, {a} ~ {b}")
    return rep


def c_of(qm: QuotientMonoid, a: Sequence[int], b: Sequence[int]) -> Word:
    """The unique eta-class c of degree deg(a) with a + b = b + c in M-bar."""
    a, b = tuple(a), tuple(b)
    qm._fits(a, b)
    if not b:
        return qm.rep(a)
    ew = qm.window
    d, k = len(a), len(b)
    target = ew.class_of(a + b)
    hits = set()
    table = ew._sum[k, d]
    row = ew.eta_labels(k + d)[table[ew.qA.class_of(b)]]
    labels_d = ew.eta_labels(d)
    for c in np.flatnonzero(row == target).tolist():
        hits.add(int(labels_d[c]))
    if not hits:
        raise WindowError(f"no c with {a} + {b} = {b} + c inside the window")
    if len(hits) > 1:
        raise WindowError(f"{len(hits)} candidates for c({a}, {b}); the window is not yet left cancellative")
    (cls,) = hits
    roots = [c for c in range(ew.qA.num_classes(d)) if labels_d[c] == cls]
    return ew.qA.representative(d, roots[0])


def r_prime_bar(qm: QuotientMonoid, a, b) -> tuple[Word, Word]:
    """(b, c(a, b))"""
    return qm.rep(b), c_of(qm, a, b)


def r_bar(qm: QuotientMonoid, a, b) -> tuple[Word, Word]:
    """(lambda_a(b), lambda^{-1}_{lambda_a(b)}(c(a, lambda_a(b))))"""
    lb = qm.lam(a, b)
    return lb, qm.lam_inverse(lb, c_of(qm, a, lb))


def injective_solution(s: FiniteSolution, ew: EtaWindow) -> bool:
    """Whether X -> M-bar stays injective inside the window."""
    if not left_nondegenerate(s):
        raise SolutionError("solution is not left non-degenerate")
    return ew.max_degree < 1 or ew.num_classes(1) == s.n


def normal_witness(s: FiniteSolution, a: Sequence[int], b: Sequence[int]) -> Word:
    """A word c with a + b = b + c in A(X,r), built by induction on deg(a) + deg(b)."""
    a, b = tuple(a), tuple(b)
    if not a or not b:
        return a
    sinv = lambda x, y: s.sigma[x].index(y)  # noqa: E731
    if len(a) > 1:
        return normal_witness(s, a[:1], b) + normal_witness(s, a[1:], b)
    x, y = a[0], b[0]
    t = s.sigma[y][s.gamma[sinv(x, y)][x]]
    if len(b) == 1:
        return (t,)
    return normal_witness(s, (t,), b[1:])


@dataclass
class SemiTrussReport:
    samples: int = 0
    axiom: bool = True
    circ_associative: bool = True
    normal_left: bool = True
    normal_right: Optional[bool] = None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.axiom and self.circ_associative and self.normal_left and self.normal_right is not False


def semi_truss_checks(s: FiniteSolution, qm: QuotientMonoid, triples) -> SemiTrussReport:
    """Semi-truss axiom with phi(a, c) = lambda'_a(c), associativity of o, and normality of +.

    Checks run in A(X,r) itself (hence also in M-bar) on the given word triples.
    """
    if not left_nondegenerate(s):
        raise SolutionError("solution is not left non-degenerate")
    qA = qm.window.qA
    eq = qA.equal
    act = qm.action
    bijective = is_r_bijective(s)
    rep = SemiTrussReport(normal_right=True if bijective else None)

    def circ(x, y):
        return tuple(x) + act(x).apply(y)

    for a, b, c in triples:
        if len(a) + len(b) + len(c) > qA.max_degree:
            continue
        rep.samples += 1
        if not eq(circ(a, b + c), circ(a, b) + act(a).apply(c)):
            rep.axiom = False
            rep.failures.append(f"axiom fails at {a}, {b}, {c}")
        if not eq(circ(circ(a, b), c), circ(a, circ(b, c))):
            rep.circ_associative = False
            rep.failures.append(f"o not associative at {a}, {b}, {c}")
        w = normal_witness(s, b, a)
        if len(w) != len(b) or not eq(b + a, a + w):
            rep.normal_left = False
            rep.failures.append(f"no c with {b} + {a} = {a} + c")
        if bijective and not _right_normal(qA, a, b):
            rep.normal_right = False
            rep.failures.append(f"no c with {a} + {b} = c + {a}")
    return rep


def _right_normal(qA: GradedQuotient, a: Word, b: Word) -> bool:
    target = qA.class_of(a + b)
    return any(qA.class_of(c + a) == target for c in product(range(qA.n), repeat=len(b)))
