"""Exhaustive enumeration of small solutions and verification campaigns."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator, Optional

import numpy as np

from . import fixtures
from .actions import bijectivity_report
from .solution import (
    FiniteSolution,
    braid_holds_batch,
    fixed_pair_multiplicities,
    h_inverse_candidate,
    h_map,
    irretractable_sigma,
    is_involutive,
    is_r_bijective,
    left_nondegenerate,
    right_nondegenerate,
    rump_batch,
)
from .words import Kind, quotient


class CampaignRangeError(ValueError):
    """Requested n is outside what a campaign supports."""


@dataclass
class CampaignReport:
    campaign: str
    parameters: dict
    counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    elapsed: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"campaign": self.campaign, "parameters": dict(self.parameters), "counts": dict(self.counts),
                "violations": list(self.violations), "elapsed": self.elapsed}

    @classmethod
    def from_dict(cls, d: dict) -> CampaignReport:
        return cls(d["campaign"], dict(d["parameters"]), dict(d["counts"]), list(d["violations"]), d.get("elapsed"))

    def merge(self, other: CampaignReport) -> CampaignReport:
        counts = dict(self.counts)
        for k, v in other.counts.items():
            counts[k] = counts.get(k, 0) + v
        return CampaignReport(self.campaign, self.parameters, counts, self.violations + other.violations)


def _tally(counts: dict, key: str, amount: int = 1) -> None:
    counts[key] = counts.get(key, 0) + amount


def _solution_of(sigma: np.ndarray, gamma: np.ndarray) -> FiniteSolution:
    n = sigma.shape[0]
    return FiniteSolution(n, tuple(tuple(int(v) for v in row) for row in sigma),
                          tuple(tuple(int(v) for v in row) for row in gamma))


# --- candidate spaces -------------------------------------------------------

def permutation_families(n: int) -> np.ndarray:
    """All n-tuples of permutations of X, shape ((n!)^n, n, n), lexicographic order."""
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    idx = np.indices((len(perms),) * n).reshape(n, -1).T
    return perms[idx]


def map_families(n: int) -> np.ndarray:
    """All n x n tables with entries in X, shape (n^(n*n), n, n), lexicographic order."""
    return np.indices((n,) * (n * n)).reshape(n * n, -1).T.reshape(-1, n, n).astype(np.int64)


def _check_exhaustive_n(n: int, limit: int = 3) -> None:
    if not 1 <= n <= limit:
        raise CampaignRangeError(f"unsupported n={n}: exhaustive enumeration needs 1 <= n <= {limit}")


def _nondegenerate_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    fam = permutation_families(n)
    k = len(fam)
    si = np.repeat(np.arange(k), k)
    gi = np.tile(np.arange(k), k)
    sig, gam = fam[si], fam[gi]
    keep = np.zeros(k * k, dtype=bool)
    step = 20000
    for lo in range(0, k * k, step):
        keep[lo:lo + step] = braid_holds_batch(sig[lo:lo + step], gam[lo:lo + step])
    return sig[keep], gam[keep]


def _conjugacy_canonical_mask(fam: np.ndarray) -> np.ndarray:
    """Families that are lex-least among their relabelings."""
    F, n, _ = fam.shape
    weights = n ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    own = fam.reshape(F, -1) @ weights
    best = own.copy()
    for p in permutations(range(n)):
        p = np.array(p)
        pinv = np.argsort(p)
        moved = p[fam[:, pinv][:, :, pinv]]
        np.minimum(best, moved.reshape(F, -1) @ weights, out=best)
    return own == best


def _pruned_nondegenerate(n: int) -> Iterator[FiniteSolution]:
    fam = permutation_families(n)
    fam = fam[_conjugacy_canonical_mask(fam)]
    perm_set = {tuple(p) for p in permutations(range(n))}
    for sig in fam:
        rows = [tuple(int(v) for v in r) for r in sig]
        inv = [tuple(int(i) for i in np.argsort(r)) for r in sig]
        index = {}
        for z, row in enumerate(rows):
            index.setdefault(row, []).append(z)
        # gamma_y(x) must be some z with sigma_z = sigma_{sigma_x(y)}^{-1} sigma_x sigma_y
        options = {}
        for x, y in product(range(n), repeat=2):
            u = rows[x][y]
            need = tuple(inv[u][rows[x][rows[y][t]]] for t in range(n))
            options[x, y] = index.get(need, [])
        if any(not v for v in options.values()):
            continue
        per_row = []
        for y in range(n):
            choices = [g for g in product(*(options[x, y] for x in range(n))) if g in perm_set]
            if not choices:
                break
            per_row.append(choices)
        else:
            rows_arr = [np.array(ch, dtype=np.int64) for ch in per_row]
            idx = np.indices([len(ch) for ch in per_row]).reshape(n, -1).T
            gam = np.stack([rows_arr[y][idx[:, y]] for y in range(n)], axis=1)
            step = 20000
            for lo in range(0, len(gam), step):
                g = gam[lo:lo + step]
                ok = braid_holds_batch(np.broadcast_to(sig, g.shape), g)
                for i in np.flatnonzero(ok):
                    yield _solution_of(sig, g[i])


def enumerate_nondegenerate(n: int, pruned: bool = False) -> Iterator[FiniteSolution]:
    """All non-degenerate solutions on {0..n-1} in (sigma-family, gamma-family) order.

    For n <= 3 this is exhaustive over (n!)^(2n) candidates. For n = 4 only the
    pruned mode is available; it keeps one sigma-family per conjugacy orbit, so
    each isomorphism class is met at least once.
    """
    if n == 4 and pruned:
        yield from _pruned_nondegenerate(n)
        return
    _check_exhaustive_n(n)
    sig, gam = _nondegenerate_arrays(n)
    for a, b in zip(sig, gam):
        yield _solution_of(a, b)


def gamma_bijective_batches(n: int, sigma_range: Optional[tuple[int, int]] = None,
                            batch: int = 200) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Candidates with arbitrary sigma and bijective gamma rows, in batches."""
    _check_exhaustive_n(n)
    sig_all = map_families(n)
    gam_all = permutation_families(n)
    lo, hi = sigma_range or (0, len(sig_all))
    g = len(gam_all)
    for start in range(lo, hi, batch):
        sig = sig_all[start:min(start + batch, hi)]
        yield np.repeat(sig, g, axis=0), np.tile(gam_all, (len(sig), 1, 1))


def enumerate_gamma_bijective(n: int) -> Iterator[FiniteSolution]:
    """Every candidate with bijective gamma rows (not filtered by the braid relation)."""
    for sig, gam in gamma_bijective_batches(n):
        for a, b in zip(sig, gam):
            yield _solution_of(a, b)


def count_gamma_bijective(n: int) -> int:
    _check_exhaustive_n(n)
    return n ** (n * n) * math.factorial(n) ** n


# --- canonical labels ---------------------------------------------------------

@dataclass(frozen=True)
class SolutionClass:
    canonical: FiniteSolution
    orbit_size: int


def _relabel_key(s: FiniteSolution, p) -> tuple:
    n = s.n
    inv = [0] * n
    for x, v in enumerate(p):
        inv[v] = x
    sig = tuple(tuple(p[s.sigma[inv[x]][inv[y]]] for y in range(n)) for x in range(n))
    gam = tuple(tuple(p[s.gamma[inv[x]][inv[y]]] for y in range(n)) for x in range(n))
    return sig, gam


def canonical_label(s: FiniteSolution) -> SolutionClass:
    """Lex-least (sigma, gamma) table pair over all relabelings of X."""
    if s.n > 6:
        raise CampaignRangeError("canonical labeling is limited to n <= 6")
    keys = {_relabel_key(s, p) for p in permutations(range(s.n))}
    sig, gam = min(keys)
    return SolutionClass(FiniteSolution(s.n, sig, gam), len(keys))


# --- campaigns ------------------------------------------------------------------

def campaign_main_irr(n: int, pruned: bool = False) -> CampaignReport:
    """Irretractable non-degenerate solutions are bijective; h is a bijection with inverse x -> gamma_x^{-1}(x)."""
    t0 = time.perf_counter()
    rep = CampaignReport("main_irr", {"n": n, "pruned": pruned})
    c = rep.counts
    c["candidates"] = math.factorial(n) ** (2 * n)
    for s in enumerate_nondegenerate(n, pruned=pruned):
        _tally(c, "solutions")
        if is_involutive(s):
            _tally(c, "involutive")
        if is_r_bijective(s):
            _tally(c, "bijective")
        if not irretractable_sigma(s):
            continue
        _tally(c, "irretractable")
        tables = s.tables()
        if not is_r_bijective(s):
            rep.violations.append({"check": "r_bijective", "solution": tables})
        h, g = h_map(s), h_inverse_candidate(s)
        if not h.is_bijective() or not (h * g).is_identity() or not (g * h).is_identity():
            rep.violations.append({"check": "h_bijective", "solution": tables})
        first, second = fixed_pair_multiplicities(s)
        if any(v != 1 for v in first + second):
            rep.violations.append({"check": "fixed_pairs_unique", "solution": tables})
        else:
            _tally(c, "fixed_pairs_unique")
    rep.elapsed = time.perf_counter() - t0
    return rep


def _rump_chunk(args) -> CampaignReport:
    n, lo, hi = args
    rep = CampaignReport("rump", {"n": n})
    c = rep.counts
    for sig, gam in gamma_bijective_batches(n, (lo, hi)):
        braid = braid_holds_batch(sig, gam)
        rump = rump_batch(sig, gam).all(axis=1)
        _tally(c, "candidates", len(sig))
        _tally(c, "solutions", int(braid.sum()))
        bad = np.flatnonzero(braid != rump)
        for i in bad[:20]:
            rep.violations.append({"check": "rump_equivalence", "braid": bool(braid[i]),
                                   "solution": _solution_of(sig[i], gam[i]).tables()})
    return rep


def campaign_rump(n: int, jobs: int = 1) -> CampaignReport:
    """Braid relation <=> (R1) & (R2) & (R3) for every candidate with bijective gamma."""
    _check_exhaustive_n(n)
    t0 = time.perf_counter()
    total = n ** (n * n)
    jobs = max(1, jobs)
    bounds = np.linspace(0, total, jobs + 1).astype(int)
    chunks = [(n, int(bounds[i]), int(bounds[i + 1])) for i in range(jobs) if bounds[i] < bounds[i + 1]]
    if jobs == 1:
        parts = [_rump_chunk(ch) for ch in chunks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_rump_chunk, chunks))
    rep = CampaignReport("rump", {"n": n})
    for part in parts:
        rep = rep.merge(part)
    rep.counts.setdefault("candidates", 0)
    rep.counts.setdefault("solutions", 0)
    rep.elapsed = time.perf_counter() - t0
    return rep


def cocycle_class(report, prime: bool = False) -> str:
    """Summarize injectivity/surjectivity of pi or pi' over all degrees of a report."""
    rows = report.pi_prime if prime else report.pi
    inj = all(r.injective for r in rows)
    sur = all(r.surjective for r in rows)
    if inj and sur:
        return "bijective"
    if inj:
        return "injective, not surjective"
    if sur:
        return "surjective, not injective"
    return "neither injective nor surjective"


def _cocycle_check(s: FiniteSolution, D: int, rep: CampaignReport) -> None:
    c = rep.counts
    _tally(c, "solutions")
    br = bijectivity_report(s, D)
    ln, rn = left_nondegenerate(s), right_nondegenerate(s)
    if ln:
        _tally(c, "left_nondegenerate")
    if rn:
        _tally(c, "right_nondegenerate")
    if ln != br.bijective_through(False):
        rep.violations.append({"check": "left_nondegenerate_iff_pi_bijective", "solution": s.tables()})
    if rn != br.bijective_through(True):
        rep.violations.append({"check": "right_nondegenerate_iff_pi_prime_bijective", "solution": s.tables()})
    if not br.consistent:
        rep.violations.append({"check": "degree2_criterion", "solution": s.tables(), "notes": br.notes})
    if ln and not rn and is_r_bijective(s):
        # would answer the open question negatively; recorded, never expected at this size
        _tally(c, "bijective_left_not_right")


def campaign_cocycle(n: int, max_degree: int = 4, samples: int = 10_000, seed: int = 0,
                     include_fixtures: bool = True) -> CampaignReport:
    """pi (pi') bijective through max_degree <=> left (right) non-degenerate, for finite solutions."""
    _check_exhaustive_n(n)
    t0 = time.perf_counter()
    rep = CampaignReport("cocycle", {"n": n, "max_degree": max_degree, "samples": samples, "seed": seed})
    c = rep.counts
    if n <= 2:
        maps = map_families(n)
        k = len(maps)
        sig = np.repeat(maps, k, axis=0)
        gam = np.tile(maps, (k, 1, 1))
        c["candidates"] = len(sig)
        ok = braid_holds_batch(sig, gam)
        for i in np.flatnonzero(ok):
            _cocycle_check(_solution_of(sig[i], gam[i]), max_degree, rep)
    else:
        seen = set()
        for s in enumerate_nondegenerate(n):
            seen.add((s.sigma, s.gamma))
            _tally(c, "nondegenerate_candidates")
            _cocycle_check(s, max_degree, rep)
        rng = np.random.default_rng(seed)
        sig = rng.integers(0, n, size=(samples, n, n))
        gam = rng.integers(0, n, size=(samples, n, n))
        c["random_candidates"] = samples
        ok = braid_holds_batch(sig, gam)
        for i in np.flatnonzero(ok):
            s = _solution_of(sig[i], gam[i])
            if (s.sigma, s.gamma) in seen:
                continue
            seen.add((s.sigma, s.gamma))
            _tally(c, "random_solutions")
            _cocycle_check(s, max_degree, rep)
    if include_fixtures:
        for name in ("constant2", "constant_dual2", "skew_lattice"):
            s = fixtures.example(name)
            br = bijectivity_report(s, max_degree)
            rep.parameters.setdefault("fixtures", {})[name] = {
                "pi": cocycle_class(br, False), "pi_prime": cocycle_class(br, True)}
    rep.elapsed = time.perf_counter() - t0
    return rep


def campaign_free_abelian(n: int, max_degree: int = 5) -> CampaignReport:
    """Involutive non-degenerate: A is free abelian; left non-degenerate: M and A have equal growth."""
    t0 = time.perf_counter()
    rep = CampaignReport("free_abelian", {"n": n, "max_degree": max_degree})
    c = rep.counts
    binom = [math.comb(n + d - 1, d) for d in range(max_degree + 1)]
    for s in enumerate_nondegenerate(n):
        _tally(c, "solutions")
        gA = quotient(Kind.A, s, max_degree).growth()
        gM = quotient(Kind.M, s, max_degree).growth()
        if is_involutive(s):
            _tally(c, "involutive")
            if gA != binom:
                rep.violations.append({"check": "free_abelian_growth", "solution": s.tables(), "growth": gA})
        if left_nondegenerate(s) and gM != gA:
            rep.violations.append({"check": "M_growth_equals_A_growth", "solution": s.tables(),
                                   "M": gM, "A": gA})
    rep.elapsed = time.perf_counter() - t0
    return rep


CAMPAIGNS = {
    "main_irr": campaign_main_irr,
    "rump": campaign_rump,
    "cocycle": campaign_cocycle,
    "free_abelian": campaign_free_abelian,
}
