"""Finite set-theoretic solution candidates and pointwise checks on them.

A candidate on X = {0, ..., n-1} is stored as two n x n tables with the
actor-first convention ``sigma[x][y] = sigma_x(y)`` and
``gamma[y][x] = gamma_y(x)``, so that ``r(x, y) = (sigma[x][y], gamma[y][x])``.

Besides the scalar checks, the ``*_batch`` functions evaluate the braid
identity and Rump's conditions on stacks of tables at once; the enumeration
campaigns rely on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .transformation import Transformation


class SolutionError(ValueError):
    """Raised for malformed tables or violated preconditions."""


@dataclass(frozen=True)
class FiniteSolution:
    n: int
    sigma: tuple[tuple[int, ...], ...]
    gamma: tuple[tuple[int, ...], ...]
    name: Optional[str] = field(default=None, compare=False)

    def s(self, x: int, y: int) -> int:
        """sigma_x(y)"""
        return self.sigma[x][y]

    def g(self, y: int, x: int) -> int:
        """gamma_y(x)"""
        return self.gamma[y][x]

    def r(self, x: int, y: int) -> tuple[int, int]:
        return self.sigma[x][y], self.gamma[y][x]

    def sigma_map(self, x: int) -> Transformation:
        return Transformation(self.sigma[x])

    def gamma_map(self, y: int) -> Transformation:
        return Transformation(self.gamma[y])

    @cached_property
    def sigma_array(self) -> np.ndarray:
        return np.array(self.sigma, dtype=np.int64).reshape(self.n, self.n)

    @cached_property
    def gamma_array(self) -> np.ndarray:
        return np.array(self.gamma, dtype=np.int64).reshape(self.n, self.n)

    def tables(self) -> tuple[list[list[int]], list[list[int]]]:
        return [list(row) for row in self.sigma], [list(row) for row in self.gamma]

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"FiniteSolution{label}(n={self.n}, sigma={self.tables()[0]}, gamma={self.tables()[1]})"


def validate(n: int, sigma: Sequence[Sequence[int]], gamma: Sequence[Sequence[int]],
             name: Optional[str] = None) -> FiniteSolution:
    """Check the tables and build a FiniteSolution."""
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise SolutionError(f"n must be an integer, got {n!r}")
    n = int(n)
    if n < 1:
        raise SolutionError("n must be positive")
    rows = []
    for label, table in (("sigma", sigma), ("gamma", gamma)):
        if len(table) != n or any(len(row) != n for row in table):
            raise SolutionError(f"dimension mismatch: {label} must be {n}x{n}")
        out = []
        for i, row in enumerate(table):
            for j, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                    raise SolutionError(f"{label}[{i}][{j}] is not an integer: {v!r}")
                if not 0 <= v < n:
                    raise SolutionError(f"entry out of range: {label}[{i}][{j}] = {v} not in [0, {n})")
            out.append(tuple(int(v) for v in row))
        rows.append(tuple(out))
    return FiniteSolution(n, rows[0], rows[1], name=name)


def from_map(n: int, r, name: Optional[str] = None) -> FiniteSolution:
    """Build a candidate from a Python callable ``r(x, y) -> (u, v)``."""
    sigma = [[0] * n for _ in range(n)]
    gamma = [[0] * n for _ in range(n)]
    for x, y in product(range(n), repeat=2):
        u, v = r(x, y)
        sigma[x][y] = u
        gamma[y][x] = v
    return validate(n, sigma, gamma, name=name)


# --- braid relation -------------------------------------------------------

def _ybe1_at(s: FiniteSolution, x: int, y: int, z: int) -> bool:
    S, G = s.sigma, s.gamma
    return S[x][S[y][z]] == S[S[x][y]][S[G[y][x]][z]]


def _ybe2_at(s: FiniteSolution, x: int, y: int, z: int) -> bool:
    S, G = s.sigma, s.gamma
    return S[G[S[x][y]][z]][G[y][x]] == G[S[G[x][z]][y]][S[z][x]]


def _ybe3_at(s: FiniteSolution, x: int, y: int, z: int) -> bool:
    S, G = s.sigma, s.gamma
    return G[x][G[y][z]] == G[G[x][y]][G[S[y][x]][z]]


YBE_CHECKS = {"ybe1": _ybe1_at, "ybe2": _ybe2_at, "ybe3": _ybe3_at}


def _first_failure(s: FiniteSolution, check) -> Optional[tuple[int, int, int]]:
    for t in product(range(s.n), repeat=3):
        if not check(s, *t):
            return t
    return None


def ybe_conditions(s: FiniteSolution) -> tuple[bool, bool, bool]:
    """Evaluate the three component identities of the braid relation on X^3."""
    return tuple(_first_failure(s, chk) is None for chk in YBE_CHECKS.values())


def braid_sides(s: FiniteSolution, x: int, y: int, z: int):
    """Return ``(r12 r23 r12 (x,y,z), r23 r12 r23 (x,y,z))``."""
    a, b = s.r(x, y)
    b, c = s.r(b, z)
    a, b = s.r(a, b)
    left = (a, b, c)
    b, c = s.r(y, z)
    a, b = s.r(x, b)
    b, c = s.r(b, c)
    return left, (a, b, c)


def braid_failure(s: FiniteSolution) -> Optional[tuple[int, int, int]]:
    for t in product(range(s.n), repeat=3):
        left, right = braid_sides(s, *t)
        if left != right:
            return t
    return None


def check_braid_direct(s: FiniteSolution) -> bool:
    """True iff (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on X^3."""
    return braid_failure(s) is None


def is_solution(s: FiniteSolution) -> bool:
    return check_braid_direct(s)


# --- pointwise properties -------------------------------------------------

def _is_perm(row: Sequence[int]) -> bool:
    return len(set(row)) == len(row)


def left_nondegenerate(s: FiniteSolution) -> bool:
    return all(_is_perm(row) for row in s.sigma)


def right_nondegenerate(s: FiniteSolution) -> bool:
    return all(_is_perm(row) for row in s.gamma)


def is_involutive(s: FiniteSolution) -> bool:
    return all(s.r(*s.r(x, y)) == (x, y) for x, y in product(range(s.n), repeat=2))


def is_r_bijective(s: FiniteSolution) -> bool:
    images = {s.r(x, y) for x, y in product(range(s.n), repeat=2)}
    return len(images) == s.n * s.n


def irretractable_sigma(s: FiniteSolution) -> bool:
    return len(set(s.sigma)) == s.n


def irretractable_gamma(s: FiniteSolution) -> bool:
    return len(set(s.gamma)) == s.n


@dataclass(frozen=True)
class PropertyReport:
    is_ybe: bool
    ybe1: bool
    ybe2: bool
    ybe3: bool
    left_nondegenerate: bool
    right_nondegenerate: bool
    involutive: bool
    r_bijective: bool
    irretractable_sigma: bool
    irretractable_gamma: bool
    failed_check: Optional[str] = None
    counterexample: Optional[tuple[int, ...]] = None

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        if d["counterexample"] is not None:
            d["counterexample"] = list(d["counterexample"])
        return d


def _pair_failure(s: FiniteSolution, pred) -> Optional[tuple[int, ...]]:
    for x in range(s.n):
        if not pred(x):
            return (x,)
    return None


def properties(s: FiniteSolution) -> PropertyReport:
    """Compute every flag exactly; the counterexample belongs to the first failed check.

    Checks are reported in the order ybe1, ybe2, ybe3, left_nondegenerate,
    right_nondegenerate, involutive, r_bijective. Irretractability failures are
    properties of the pair structure and carry no counterexample.
    """
    failures = {name: _first_failure(s, chk) for name, chk in YBE_CHECKS.items()}
    flags = {name: wit is None for name, wit in failures.items()}
    failed, witness = None, None
    for name, wit in failures.items():
        if wit is not None:
            failed, witness = name, wit
            break
    if failed is None:
        for name, table in (("left_nondegenerate", s.sigma), ("right_nondegenerate", s.gamma)):
            wit = _pair_failure(s, lambda x, t=table: _is_perm(t[x]))
            if wit is not None:
                failed, witness = name, wit
                break
    if failed is None:
        for x, y in product(range(s.n), repeat=2):
            if s.r(*s.r(x, y)) != (x, y):
                failed, witness = "involutive", (x, y)
                break
    return PropertyReport(
        is_ybe=all(flags.values()),
        ybe1=flags["ybe1"], ybe2=flags["ybe2"], ybe3=flags["ybe3"],
        left_nondegenerate=left_nondegenerate(s),
        right_nondegenerate=right_nondegenerate(s),
        involutive=is_involutive(s),
        r_bijective=is_r_bijective(s),
        irretractable_sigma=irretractable_sigma(s),
        irretractable_gamma=irretractable_gamma(s),
        failed_check=failed,
        counterexample=witness,
    )


def recheck(s: FiniteSolution, check: str, witness: Sequence[int]) -> bool:
    """Re-evaluate a named check at a witness (used to confirm counterexamples)."""
    if check in YBE_CHECKS:
        return YBE_CHECKS[check](s, *witness)
    if check == "left_nondegenerate":
        return _is_perm(s.sigma[witness[0]])
    if check == "right_nondegenerate":
        return _is_perm(s.gamma[witness[0]])
    if check == "involutive":
        return s.r(*s.r(*witness)) == tuple(witness)
    raise KeyError(check)


# --- transforms -------------------------------------------------------------

def derived_left(s: FiniteSolution) -> FiniteSolution:
    """Soloviev's derived solution r'(x,y) = (y, sigma_y gamma_{sigma_x^{-1}(y)}(x))."""
    if not left_nondegenerate(s):
        raise SolutionError("solution is not left non-degenerate")
    n = s.n
    sinv = [s.sigma_map(x).inverse().image for x in range(n)]
    sigma = [list(range(n)) for _ in range(n)]
    gamma = [[s.sigma[y][s.gamma[sinv[x][y]][x]] for x in range(n)] for y in range(n)]
    return validate(n, sigma, gamma, name=f"{s.name}'" if s.name else None)


def dual(s: FiniteSolution) -> FiniteSolution:
    """The solution r'(y,x) = (gamma_y(x), sigma_x(y)): sigma and gamma swap roles."""
    return FiniteSolution(s.n, s.gamma, s.sigma)


def rump_operations(s: FiniteSolution):
    """Return the binary operations ``x.y = gamma_x^{-1}(y)`` and ``x:y = sigma_{gamma_y^{-1}(x)}(y)``."""
    if not right_nondegenerate(s):
        raise SolutionError("some gamma_y is not bijective")
    ginv = [s.gamma_map(y).inverse().image for y in range(s.n)]

    def dot(x, y):
        return ginv[x][y]

    def colon(x, y):
        return s.sigma[ginv[y][x]][y]

    return dot, colon


def rump_conditions(s: FiniteSolution) -> tuple[bool, bool, bool]:
    """Evaluate Rump's conditions (R1)-(R3) over all triples."""
    dot, colon = rump_operations(s)
    r1 = r2 = r3 = True
    for x, y, z in product(range(s.n), repeat=3):
        r1 = r1 and dot(dot(x, y), dot(x, z)) == dot(colon(y, x), dot(y, z))
        r2 = r2 and colon(colon(x, y), colon(x, z)) == colon(dot(y, x), colon(y, z))
        r3 = r3 and colon(dot(x, y), dot(x, z)) == dot(colon(y, x), colon(y, z))
    return r1, r2, r3


def h_map(s: FiniteSolution) -> Transformation:
    """x -> sigma_x^{-1}(x)."""
    if not left_nondegenerate(s):
        raise SolutionError("solution is not left non-degenerate")
    return Transformation(tuple(s.sigma[x].index(x) for x in range(s.n)))


def h_inverse_candidate(s: FiniteSolution) -> Transformation:
    """x -> gamma_x^{-1}(x); the inverse of h for irretractable non-degenerate solutions."""
    if not right_nondegenerate(s):
        raise SolutionError("solution is not right non-degenerate")
    return Transformation(tuple(s.gamma[x].index(x) for x in range(s.n)))


def fixed_pairs(s: FiniteSolution) -> list[tuple[int, int]]:
    """All (x, y) with r(x, y) = (x, y), lexicographically ordered."""
    return [(x, y) for x, y in product(range(s.n), repeat=2) if s.r(x, y) == (x, y)]


def fixed_pair_multiplicities(s: FiniteSolution) -> tuple[list[int], list[int]]:
    """Count, for each x, fixed pairs with x as first resp. second coordinate."""
    first = [0] * s.n
    second = [0] * s.n
    for x, y in fixed_pairs(s):
        first[x] += 1
        second[y] += 1
    return first, second


# --- batched evaluation ---------------------------------------------------

def _triple_grid(n: int):
    x, y, z = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    return x.ravel(), y.ravel(), z.ravel()


def braid_holds_batch(sigma: np.ndarray, gamma: np.ndarray) -> np.ndarray:
    """Braid identity for a stack of candidates.

    ``sigma`` and ``gamma`` have shape (B, n, n) in the actor-first convention.
    Returns a boolean array of length B.
    """
    B, n, _ = sigma.shape
    S = sigma.reshape(B, n * n)
    G = gamma.reshape(B, n * n)
    x, y, z = _triple_grid(n)

    def s_(a, b):
        return np.take_along_axis(S, a * n + b, axis=1)

    def g_(a, b):
        return np.take_along_axis(G, a * n + b, axis=1)

    x = np.broadcast_to(x, (B, x.size))
    y = np.broadcast_to(y, x.shape)
    z = np.broadcast_to(z, x.shape)
    # r12 r23 r12
    a1, b1 = s_(x, y), g_(y, x)
    b2, c2 = s_(b1, z), g_(z, b1)
    a3, b3 = s_(a1, b2), g_(b2, a1)
    # r23 r12 r23
    p, q = s_(y, z), g_(z, y)
    u, v = s_(x, p), g_(p, x)
    w, t = s_(v, q), g_(q, v)
    return np.all((a3 == u) & (b3 == w) & (c2 == t), axis=1)


def inverse_rows_batch(tables: np.ndarray) -> np.ndarray:
    """Row-wise inverse permutations of a (B, n, n) stack of permutation rows."""
    B, n, _ = tables.shape
    inv = np.empty_like(tables)
    rows = np.arange(n)
    np.put_along_axis(inv, tables, np.broadcast_to(rows, tables.shape), axis=2)
    return inv


def rump_batch(sigma: np.ndarray, gamma: np.ndarray) -> np.ndarray:
    """(R1), (R2), (R3) for a stack of candidates with bijective gamma rows.

    Returns a (B, 3) boolean array.
    """
    B, n, _ = sigma.shape
    S = sigma.reshape(B, n * n)
    Ginv = inverse_rows_batch(gamma).reshape(B, n * n)
    x, y, z = _triple_grid(n)
    x = np.broadcast_to(x, (B, x.size))
    y = np.broadcast_to(y, x.shape)
    z = np.broadcast_to(z, x.shape)

    def dot(a, b):
        return np.take_along_axis(Ginv, a * n + b, axis=1)

    def colon(a, b):
        return np.take_along_axis(S, dot(b, a) * n + b, axis=1)

    r1 = np.all(dot(dot(x, y), dot(x, z)) == dot(colon(y, x), dot(y, z)), axis=1)
    r2 = np.all(colon(colon(x, y), colon(x, z)) == colon(dot(y, x), colon(y, z)), axis=1)
    r3 = np.all(colon(dot(x, y), dot(x, z)) == dot(colon(y, x), colon(y, z)), axis=1)
    return np.stack([r1, r2, r3], axis=1)
