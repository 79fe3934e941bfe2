"""Named solutions used throughout the tests, demos and CLI.

Sym3 labeling: 0=e, 1=(1,2), 2=(1,3), 3=(2,3), 4=(1,2,3), 5=(1,3,2), with
permutations composed as functions (right factor applied first).
"""

from __future__ import annotations

from itertools import permutations

from .solution import FiniteSolution, from_map

# images of (1, 2, 3) under each labeled permutation, written 0-based
SYM3_ELEMENTS: tuple[tuple[int, int, int], ...] = (
    (0, 1, 2),  # e
    (1, 0, 2),  # (1,2)
    (2, 1, 0),  # (1,3)
    (0, 2, 1),  # (2,3)
    (1, 2, 0),  # (1,2,3)
    (2, 0, 1),  # (1,3,2)
)
SYM3_NAMES = ("e", "(1,2)", "(1,3)", "(2,3)", "(1,2,3)", "(1,3,2)")


def sym3_mul(a: int, b: int) -> int:
    pa, pb = SYM3_ELEMENTS[a], SYM3_ELEMENTS[b]
    return SYM3_ELEMENTS.index(tuple(pa[pb[i]] for i in range(3)))


def sym3_inv(a: int) -> int:
    p = SYM3_ELEMENTS[a]
    inv = [0, 0, 0]
    for i, v in enumerate(p):
        inv[v] = i
    return SYM3_ELEMENTS.index(tuple(inv))


def sym3_conj(a: int, b: int) -> int:
    """a b a^{-1}"""
    return sym3_mul(sym3_mul(a, b), sym3_inv(a))


def flip(n: int) -> FiniteSolution:
    return from_map(n, lambda x, y: (y, x), name=f"flip{n}")


def identity_map(n: int = 2) -> FiniteSolution:
    return from_map(n, lambda x, y: (x, y), name="identity_map")


def constant(n: int = 2) -> FiniteSolution:
    """r(x, y) = (x, x)"""
    return from_map(n, lambda x, y: (x, x), name=f"constant{n}")


def constant_dual(n: int = 2) -> FiniteSolution:
    """r(x, y) = (y, y)"""
    return from_map(n, lambda x, y: (y, y), name=f"constant_dual{n}")


SKEW_MEET = ((0, 0, 0), (0, 1, 2), (0, 1, 2))
SKEW_JOIN = ((0, 1, 2), (1, 1, 1), (2, 2, 2))


def skew_lattice() -> FiniteSolution:
    """r(x, y) = (x meet y, y join x) on the three-element skew lattice."""
    return from_map(3, lambda x, y: (SKEW_MEET[x][y], SKEW_JOIN[y][x]), name="skew_lattice")


def sym3_conjugation() -> FiniteSolution:
    """r(a, b) = (a b a^{-1}, a) on Sym3."""
    return from_map(6, lambda a, b: (sym3_conj(a, b), a), name="sym3_conj")


def nat_truncated(N: int = 4) -> FiniteSolution:
    """r(x, y) = (xi(y), xi(x)) with xi(x) = max(0, x - 1), on {0, ..., N}."""
    xi = [max(0, x - 1) for x in range(N + 1)]
    return from_map(N + 1, lambda x, y: (xi[y], xi[x]), name=f"nat_trunc_{N}")


_BUILDERS = {
    "flip2": lambda: flip(2),
    "flip3": lambda: flip(3),
    "identity_map": lambda: identity_map(2),
    "constant2": lambda: constant(2),
    "constant3": lambda: constant(3),
    "constant_dual2": lambda: constant_dual(2),
    "constant_dual3": lambda: constant_dual(3),
    "skew_lattice": skew_lattice,
    "sym3_conj": sym3_conjugation,
    "nat_trunc_4": lambda: nat_truncated(4),
}


def builtin_examples() -> dict[str, FiniteSolution]:
    return {name: build() for name, build in _BUILDERS.items()}


def example(name: str) -> FiniteSolution:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(sorted(_BUILDERS))}") from None


def example_names() -> list[str]:
    return list(_BUILDERS)


def relabel(s: FiniteSolution, perm) -> FiniteSolution:
    """Transport s along the bijection x -> perm[x]."""
    n = s.n
    inv = [0] * n
    for x, v in enumerate(perm):
        inv[v] = x
    return from_map(n, lambda x, y: tuple(perm[v] for v in s.r(inv[x], inv[y])))


def all_relabelings(n: int):
    return permutations(range(n))


_FLAG_NAMES = ("left_nondegenerate", "right_nondegenerate", "involutive", "r_bijective",
               "irretractable_sigma", "irretractable_gamma")


def _flags(*values: bool) -> dict[str, bool]:
    return {"is_ybe": True, **dict(zip(_FLAG_NAMES, values))}


# worked out by hand from the defining formulas of each example
EXPECTED_FLAGS: dict[str, dict[str, bool]] = {
    "flip2": _flags(True, True, True, True, False, False),
    "flip3": _flags(True, True, True, True, False, False),
    "identity_map": _flags(False, False, True, True, True, True),
    "constant2": _flags(False, True, False, False, True, False),
    "constant3": _flags(False, True, False, False, True, False),
    "constant_dual2": _flags(True, False, False, False, False, True),
    "constant_dual3": _flags(True, False, False, False, False, True),
    "skew_lattice": _flags(False, False, False, False, False, True),
    "sym3_conj": _flags(True, True, False, True, True, False),
    "nat_trunc_4": _flags(False, False, False, False, False, False),
}
