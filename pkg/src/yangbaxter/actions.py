"""Extended solution on M(X,r), the actions on the derived monoids and the 1-cocycles.

Everything here operates on plain words; class-level statements are made by
comparing words in a :class:`~yangbaxter.words.GradedQuotient`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .solution import FiniteSolution, SolutionError, left_nondegenerate, right_nondegenerate
from .transformation import Transformation
from .words import GradedQuotient, Kind, Word, check_budget, quotient


# --- lambda and rho on M ----------------------------------------------------

def _lambda_letter(s: FiniteSolution, x: int, word: Sequence[int]) -> Word:
    out = []
    for y in word:
        out.append(s.sigma[x][y])
        x = s.gamma[y][x]
    return tuple(out)


def _rho_letter(s: FiniteSolution, x: int, word: Sequence[int]) -> Word:
    out = []
    for y in reversed(word):
        out.append(s.gamma[x][y])
        x = s.sigma[y][x]
    return tuple(reversed(out))


def lambda_M(s: FiniteSolution, a: Sequence[int], b: Sequence[int]) -> Word:
    """lambda_a(b); lambda_{x1...xm} = lambda_{x1} o ... o lambda_{xm}, so x_m acts first."""
    b = tuple(b)
    for x in reversed(a):
        b = _lambda_letter(s, x, b)
    return b


def rho_M(s: FiniteSolution, a: Sequence[int], b: Sequence[int]) -> Word:
    """rho_a(b); rho_{x1...xm} = rho_{xm} o ... o rho_{x1}, so x_1 acts first."""
    b = tuple(b)
    for x in a:
        b = _rho_letter(s, x, b)
    return b


def r_M(s: FiniteSolution, a: Sequence[int], b: Sequence[int]) -> tuple[Word, Word]:
    return lambda_M(s, a, b), rho_M(s, b, a)


def r_M_identities(s: FiniteSolution, qM: GradedQuotient, a, b, c) -> dict[str, bool]:
    """Check the product identity, the two twisted (anti)homomorphism laws and the braid relation."""
    a, b, c = tuple(a), tuple(b), tuple(c)
    if len(a) + len(b) + len(c) > qM.max_degree:
        raise ValueError("total degree exceeds the quotient's max degree")
    eq = qM.equal
    lam, rho = lambda_M, rho_M
    out = {
        "product": eq(a + b, lam(s, a, b) + rho(s, b, a)),
        "rho_twisted": eq(rho(s, b, c + a), rho(s, lam(s, a, b), c) + rho(s, b, a)),
        "lambda_twisted": eq(lam(s, b, a + c), lam(s, b, a) + lam(s, rho(s, a, b), c)),
    }
    # r12 r23 r12 versus r23 r12 r23 on (a, b, c)
    p, q = r_M(s, a, b)
    q, t = r_M(s, q, c)
    p, q = r_M(s, p, q)
    u, v = r_M(s, b, c)
    w, u = r_M(s, a, u)
    u, v = r_M(s, u, v)
    out["braid"] = eq(p, w) and eq(q, u) and eq(t, v)
    return out


def r_M_check(s: FiniteSolution, qM: GradedQuotient, a, b, c) -> bool:
    return all(r_M_identities(s, qM, a, b, c).values())


# --- lambda' and rho' on the derived monoids ----------------------------------

def sigma_composite(s: FiniteSolution, a: Sequence[int]) -> Transformation:
    """sigma_{a1} o ... o sigma_{am} (the transformation lambda'_a)."""
    image = list(range(s.n))
    for x in reversed(a):
        image = [s.sigma[x][v] for v in image]
    return Transformation(tuple(image))


def gamma_composite(s: FiniteSolution, a: Sequence[int]) -> Transformation:
    """gamma_{am} o ... o gamma_{a1} (the transformation rho'_a)."""
    image = list(range(s.n))
    for x in a:
        image = [s.gamma[x][v] for v in image]
    return Transformation(tuple(image))


def lambda_prime(s: FiniteSolution, a: Sequence[int], w: Sequence[int]) -> Word:
    return sigma_composite(s, a).apply(w)


def rho_prime(s: FiniteSolution, a: Sequence[int], w: Sequence[int]) -> Word:
    return gamma_composite(s, a).apply(w)


def lambda_prime_inverse(s: FiniteSolution, a: Sequence[int], w: Sequence[int]) -> Word:
    if not left_nondegenerate(s):
        raise SolutionError("solution is not left non-degenerate")
    return sigma_composite(s, a).inverse().apply(w)


def rho_prime_inverse(s: FiniteSolution, a: Sequence[int], w: Sequence[int]) -> Word:
    if not right_nondegenerate(s):
        raise SolutionError("solution is not right non-degenerate")
    return gamma_composite(s, a).inverse().apply(w)


# --- 1-cocycles ---------------------------------------------------------------

def pi(s: FiniteSolution, w: Sequence[int]) -> Word:
    """x1 + sigma_{x1}(x2) + sigma_{x1}sigma_{x2}(x3) + ..."""
    out = []
    image = tuple(range(s.n))
    for x in w:
        out.append(image[x])
        image = tuple(image[v] for v in s.sigma[x])
    return tuple(out)


def pi_recursive(s: FiniteSolution, w: Sequence[int]) -> Word:
    """pi(x1...xm) = x1 + lambda'_{x1}(pi(x2...xm)); kept as an oracle for :func:`pi`."""
    if not w:
        return ()
    return (w[0],) + lambda_prime(s, w[:1], pi_recursive(s, w[1:]))


def pi_prime(s: FiniteSolution, w: Sequence[int]) -> Word:
    """Letter i becomes gamma_{xm} ... gamma_{x_{i+1}}(x_i)."""
    out = []
    image = tuple(range(s.n))
    for x in reversed(w):
        out.append(image[x])
        image = tuple(image[v] for v in s.gamma[x])
    return tuple(reversed(out))


def pi_prime_recursive(s: FiniteSolution, w: Sequence[int]) -> Word:
    """pi'(x1...xm) = rho'_{xm}(pi'(x1...x_{m-1})) + xm."""
    if not w:
        return ()
    return rho_prime(s, w[-1:], pi_prime_recursive(s, w[:-1])) + (w[-1],)


def pi_inverse(s: FiniteSolution, w: Sequence[int]) -> Word:
    """The word u with pi(u) = w letter for letter (left non-degenerate solutions)."""
    if not left_nondegenerate(s):
        raise SolutionError("solution is not left non-degenerate")
    out = []
    image = tuple(range(s.n))  # current sigma composite
    for v in w:
        u = image.index(v)
        out.append(u)
        image = tuple(image[t] for t in s.sigma[u])
    return tuple(out)


def _all_words_array(n: int, d: int) -> np.ndarray:
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.indices((n,) * d, dtype=np.int64).reshape(d, -1).T


def _cocycle_all_words(s: FiniteSolution, d: int, prime: bool) -> np.ndarray:
    """Images of every word of length d (in code order) under pi or pi'."""
    n = s.n
    W = _all_words_array(n, d)
    N = W.shape[0]
    table = s.gamma_array if prime else s.sigma_array
    T = np.broadcast_to(np.arange(n), (N, n)).copy()
    out = np.empty_like(W)
    positions = range(d - 1, -1, -1) if prime else range(d)
    rows = np.arange(N)
    for i in positions:
        out[:, i] = T[rows, W[:, i]]
        T = np.take_along_axis(T, table[W[:, i]], axis=1)
    return out


def _codes(words: np.ndarray, n: int) -> np.ndarray:
    d = words.shape[1]
    weights = n ** np.arange(d - 1, -1, -1, dtype=np.int64)
    return words @ weights if d else np.zeros(words.shape[0], dtype=np.int64)


def cocycle_class_map(s: FiniteSolution, qM: GradedQuotient, qT: GradedQuotient, d: int,
                      prime: bool = False) -> np.ndarray:
    """Induced map {M-classes of degree d} -> {target classes of degree d}.

    Raises ValueError if two words of one M-class land in different target
    classes, which cannot happen for a solution of the braid relation.
    """
    if d > min(qM.max_degree, qT.max_degree):
        raise ValueError(f"degree {d} exceeds the quotients' max degree")
    images = _cocycle_all_words(s, d, prime)
    target = qT.labels(d)[_codes(images, s.n)]
    m_labels = qM.labels(d)
    k = qM.num_classes(d)
    first = np.full(k, -1, dtype=np.int64)
    first[m_labels[::-1]] = target[::-1]
    if np.any(first[m_labels] != target):
        raise ValueError("cocycle is not well defined on M-classes (is r a solution?)")
    return first


@dataclass
class MapCheck:
    holds: bool
    witness: Optional[tuple] = None


def _injectivity(class_map: np.ndarray, qM: GradedQuotient, d: int) -> MapCheck:
    seen: dict[int, int] = {}
    best = None
    for m_cls, t_cls in enumerate(class_map.tolist()):
        if t_cls in seen:
            cand = (seen[t_cls], m_cls)
            if best is None or cand < best:
                best = cand
        else:
            seen[t_cls] = m_cls
    if best is None:
        return MapCheck(True)
    return MapCheck(False, (qM.representative(d, best[0]), qM.representative(d, best[1])))


def _surjectivity(class_map: np.ndarray, qT: GradedQuotient, d: int) -> MapCheck:
    hit = np.zeros(qT.num_classes(d), dtype=bool)
    hit[class_map] = True
    missing = np.flatnonzero(~hit)
    if missing.size == 0:
        return MapCheck(True)
    return MapCheck(False, qT.representative(d, int(missing[0])))


def pi_injective_at(s, qM, qA, d, prime: bool = False) -> MapCheck:
    """Whether pi (or pi') is injective on degree-d classes; witness is the lex-least colliding pair."""
    return _injectivity(cocycle_class_map(s, qM, qA, d, prime), qM, d)


def pi_surjective_at(s, qM, qA, d, prime: bool = False) -> MapCheck:
    """Whether pi (or pi') hits every degree-d class; witness is the lex-least missed class."""
    return _surjectivity(cocycle_class_map(s, qM, qA, d, prime), qA, d)


@dataclass
class DegreeRow:
    degree: int
    injective: bool
    surjective: bool
    injective_witness: Optional[tuple] = None
    surjective_witness: Optional[tuple] = None

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


@dataclass
class BijectivityReport:
    max_degree: int
    pi: list[DegreeRow]
    pi_prime: list[DegreeRow]
    sigma_all_surjective: bool
    gamma_all_surjective: bool
    consistent: bool
    notes: list[str] = field(default_factory=list)

    def bijective_through(self, prime: bool = False) -> bool:
        rows = self.pi_prime if prime else self.pi
        return all(r.bijective for r in rows)

    def as_dict(self) -> dict:
        def row(r: DegreeRow):
            return {"degree": r.degree, "injective": r.injective, "surjective": r.surjective,
                    "bijective": r.bijective,
                    "injective_witness": None if r.injective_witness is None else [list(w) for w in r.injective_witness],
                    "surjective_witness": None if r.surjective_witness is None else list(r.surjective_witness)}
        return {"max_degree": self.max_degree,
                "pi": [row(r) for r in self.pi], "pi_prime": [row(r) for r in self.pi_prime],
                "sigma_all_surjective": self.sigma_all_surjective,
                "gamma_all_surjective": self.gamma_all_surjective,
                "consistent": self.consistent, "notes": list(self.notes)}


def _rows(s, qM, qT, D, prime) -> list[DegreeRow]:
    out = []
    for d in range(D + 1):
        cmap = cocycle_class_map(s, qM, qT, d, prime)
        inj = _injectivity(cmap, qM, d)
        sur = _surjectivity(cmap, qT, d)
        out.append(DegreeRow(d, inj.holds, sur.holds, inj.witness, sur.witness))
    return out


def bijectivity_report(s: FiniteSolution, max_degree: int = 4, quotients=None) -> BijectivityReport:
    """Per-degree injectivity/surjectivity of pi and pi' with the degree-2 surjectivity criterion."""
    check_budget(s.n, max_degree)
    if quotients is None:
        quotients = {k: quotient(k, s, max_degree) for k in Kind}
    qM, qA, qAp = quotients[Kind.M], quotients[Kind.A], quotients[Kind.AP]
    rows_pi = _rows(s, qM, qA, max_degree, False)
    rows_pp = _rows(s, qM, qAp, max_degree, True)
    sig = all(len(set(row)) == s.n for row in s.sigma)
    gam = all(len(set(row)) == s.n for row in s.gamma)
    notes = []
    consistent = True
    if max_degree >= 2:
        if rows_pi[2].surjective != sig:
            consistent = False
            notes.append("pi surjectivity at degree 2 disagrees with surjectivity of all sigma_x")
        if rows_pp[2].surjective != gam:
            consistent = False
            notes.append("pi' surjectivity at degree 2 disagrees with surjectivity of all gamma_x")
    if left_nondegenerate(s) and not all(r.bijective for r in rows_pi):
        consistent = False
        notes.append("left non-degenerate but pi is not bijective on some degree")
    if right_nondegenerate(s) and not all(r.bijective for r in rows_pp):
        consistent = False
        notes.append("right non-degenerate but pi' is not bijective on some degree")
    return BijectivityReport(max_degree, rows_pi, rows_pp, sig, gam, consistent, notes)


# --- semidirect embedding -------------------------------------------------------

@dataclass(frozen=True)
class SemidirectElement:
    """(pi(a), lambda'_a) in A(X,r) x| Im(lambda'); the additive part is a normal form in A."""

    add_part: Word
    act_part: Transformation


def f_semidirect(s: FiniteSolution, w: Sequence[int], qA: Optional[GradedQuotient] = None) -> SemidirectElement:
    add = pi(s, w)
    if qA is not None:
        add = qA.normal_form(add)
    return SemidirectElement(add, sigma_composite(s, w))


def semidirect_multiply(qA: GradedQuotient, e1: SemidirectElement, e2: SemidirectElement) -> SemidirectElement:
    """(a, t)(b, u) = (a + t(b), t o u)."""
    return SemidirectElement(qA.normal_form(e1.add_part + e1.act_part.apply(e2.add_part)),
                             e1.act_part * e2.act_part)
