"""Co-modular index, decomposability index and the brute-force reversal oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .core import Tournament, members, popcount
from .errors import BudgetExceeded, TooLarge, TooSmall
from .modular import SCAN_CAP, comodules, is_nontrivial_module, minimal_comodules

ORACLE_CAP = 10
ORACLE_BUDGET = 4
_BATCH_CELLS = 1 << 21


def Delta_of_n(n: int) -> int:
    """Largest co-modular index among ``n``-vertex tournaments."""
    return (n + 2) // 2


def delta_of_n(n: int) -> int:
    """Largest decomposability index among ``n``-vertex tournaments."""
    return (n + 4) // 4


@dataclass(frozen=True)
class CoModularDecomposition:
    blocks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def singletons(self) -> tuple[int, ...]:
        return tuple(b for b in self.blocks if popcount(b) == 1)

    @property
    def large(self) -> tuple[int, ...]:
        return tuple(b for b in self.blocks if popcount(b) >= 2)

    def as_lists(self) -> list[list[int]]:
        return [members(b) for b in self.blocks]


def max_packing(candidates: Sequence[int]) -> tuple[int, ...]:
    """Maximum family of pairwise disjoint sets among ``candidates``.

    Branch and bound, include-first, in candidate order; among maximum
    families the lexicographically least index sequence is returned.
    """
    cands = list(candidates)
    m = len(cands)
    if m == 0:
        return ()
    universe = 0
    for c in cands:
        universe |= c
    single = [popcount(c) == 1 for c in cands]
    best: list[int] = []
    chosen: list[int] = []

    def bound(i: int, used: int) -> int:
        free_sets = 0
        singles = 0
        for j in range(i, m):
            if not cands[j] & used:
                free_sets += 1
                if single[j]:
                    singles += 1
        free = popcount(universe & ~used)
        singles = min(singles, free)
        return min(free_sets, singles + (free - singles) // 2)

    def rec(i: int, used: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen[:]
        if i >= m or len(chosen) + bound(i, used) <= len(best):
            return
        for j in range(i, m):
            c = cands[j]
            if c & used:
                continue
            chosen.append(c)
            rec(j + 1, used | c)
            chosen.pop()
            if len(chosen) + bound(j + 1, used) <= len(best):
                return

    rec(0, 0)
    return tuple(best)


def big_delta(t: Tournament, cap: int = SCAN_CAP) -> tuple[int, CoModularDecomposition]:
    """Co-modular index together with a packing of minimal co-modules."""
    blocks = max_packing(minimal_comodules(t, cap))
    return len(blocks), CoModularDecomposition(blocks)


def big_delta_all_comodules(t: Tournament, cap: int = SCAN_CAP) -> int:
    """Same index, packing over every co-module (reduction cross-check)."""
    return len(max_packing(comodules(t, cap)))


def small_delta(t: Tournament, cap: int = SCAN_CAP) -> int:
    if t.n < 5:
        raise TooSmall(f"decomposability index needs >= 5 vertices, got {t.n}")
    d, _ = big_delta(t, cap)
    return (d + 1) // 2


def is_delta_maximal(t: Tournament, cap: int = SCAN_CAP) -> bool:
    return small_delta(t, cap) == delta_of_n(t.n)


def is_Delta_maximal(t: Tournament, cap: int = SCAN_CAP) -> bool:
    if t.n < 3:
        raise TooSmall(f"co-modular maximality needs >= 3 vertices, got {t.n}")
    return big_delta(t, cap)[0] == Delta_of_n(t.n)


def is_comodular_decomposition(t: Tournament, blocks: Iterable[int]) -> bool:
    used = 0
    for b in blocks:
        if b & used:
            return False
        used |= b
        if not (is_nontrivial_module(t, b) or is_nontrivial_module(t, t.full & ~b)):
            return False
    return True


# ----------------------------------------------------------------------------
# brute-force reversal search


def _subset_table(n: int) -> np.ndarray:
    masks = [m for m in range(3, (1 << n) - 1) if m & (m - 1)]
    return np.array(masks, dtype=np.int64)


def decomposable_batch(n: int, outs: np.ndarray, subsets: np.ndarray | None = None) -> np.ndarray:
    """Vectorised decomposability test; ``outs`` has shape ``(K, n)``."""
    if n < 3:
        return np.zeros(len(outs), dtype=bool)
    if subsets is None:
        subsets = _subset_table(n)
    module = np.ones((len(outs), len(subsets)), dtype=bool)
    for v in range(n):
        x = outs[:, v, None] & subsets[None, :]
        inside = (subsets >> v) & 1
        module &= (x == 0) | (x == subsets[None, :]) | (inside[None, :] == 1)
    return module.any(axis=1)


def _reversal_search(t: Tournament, size: int, subsets: np.ndarray) -> tuple[tuple[int, int], ...] | None:
    arcs = sorted(t.arcs())
    n = t.n
    base = np.array(t.out, dtype=np.int64)
    if size == 0:
        return None if decomposable_batch(n, base[None, :], subsets)[0] else ()
    deltas = np.zeros((len(arcs), n), dtype=np.int64)
    for k, (i, j) in enumerate(arcs):
        deltas[k, i] = 1 << j
        deltas[k, j] = 1 << i
    chunk = max(1, _BATCH_CELLS // max(1, len(subsets)))
    combo_iter = combinations(range(len(arcs)), size)
    while True:
        block = []
        for c in combo_iter:
            block.append(c)
            if len(block) >= chunk:
                break
        if not block:
            return None
        idx = np.array(block, dtype=np.int64)
        flip = np.bitwise_xor.reduce(deltas[idx], axis=1)
        bad = decomposable_batch(n, base[None, :] ^ flip, subsets)
        hits = np.flatnonzero(~bad)
        if len(hits):
            return tuple(arcs[k] for k in block[hits[0]])


def reversal_witness(t: Tournament, size: int, cap: int = ORACLE_CAP) -> tuple[tuple[int, int], ...] | None:
    """First arc set (combination order) of exactly ``size`` arcs whose reversal is indecomposable."""
    if t.n > cap:
        raise TooLarge(f"reversal search capped at {cap} vertices, got {t.n}")
    return _reversal_search(t, size, _subset_table(t.n))


def small_delta_oracle(
    t: Tournament, budget: int = ORACLE_BUDGET, cap: int = ORACLE_CAP
) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Minimum number of reversals making ``t`` indecomposable, by exhaustion."""
    if t.n < 5:
        raise TooSmall(f"decomposability index needs >= 5 vertices, got {t.n}")
    if t.n > cap:
        raise TooLarge(f"reversal search capped at {cap} vertices, got {t.n}")
    subsets = _subset_table(t.n)
    for size in range(budget + 1):
        found = _reversal_search(t, size, subsets)
        if found is not None:
            return size, found
    raise BudgetExceeded(f"no reversal set of size <= {budget}")


@dataclass(frozen=True)
class IndexReport:
    big_delta: int
    small_delta: int | None
    decomposition: CoModularDecomposition
    witness_arcs: tuple[tuple[int, int], ...] | None


def index_report(t: Tournament, witness: bool = True, cap: int = SCAN_CAP) -> IndexReport:
    d, dec = big_delta(t, cap)
    sd = (d + 1) // 2 if t.n >= 5 else None
    arcs = None
    if witness and sd is not None and t.n <= ORACLE_CAP:
        arcs = reversal_witness(t, sd)
    return IndexReport(d, sd, dec, arcs)
