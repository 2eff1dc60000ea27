"""Modules, co-modules and their inclusion-minimal members.

Everything here is a full subset scan over ``2^n`` bitmasks, which keeps the
logic obviously correct at the sizes this package targets.  Lists of vertex
sets are always sorted by ``(size, bitmask)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Tournament, members, popcount
from .errors import TooLarge

SCAN_CAP = 22


def _check_cap(t: Tournament, cap: int) -> None:
    if t.n > cap:
        raise TooLarge(f"subset scan capped at {cap} vertices, got {t.n}")


def sort_key(mask: int) -> tuple[int, int]:
    return (popcount(mask), mask)


def is_module(t: Tournament, m: int) -> bool:
    m &= t.full
    outside = t.full & ~m
    out = t.out
    while outside:
        low = outside & -outside
        a = out[low.bit_length() - 1] & m
        if a and a != m:
            return False
        outside ^= low
    return True


def is_nontrivial_module(t: Tournament, m: int) -> bool:
    return 2 <= popcount(m) <= t.n - 1 and is_module(t, m)


@lru_cache(maxsize=4096)
def _nontrivial_modules(t: Tournament) -> tuple[int, ...]:
    n, out, full = t.n, t.out, t.full
    found = []
    for m in range(3, full):
        if m & (m - 1) == 0:
            continue
        ok = True
        outside = full & ~m
        while outside:
            low = outside & -outside
            a = out[low.bit_length() - 1] & m
            if a and a != m:
                ok = False
                break
            outside ^= low
        if ok:
            found.append(m)
    found.sort(key=sort_key)
    return tuple(found)


def nontrivial_modules(t: Tournament, cap: int = SCAN_CAP) -> list[int]:
    _check_cap(t, cap)
    if t.n < 3:
        return []
    return list(_nontrivial_modules(t))


def is_indecomposable(t: Tournament, cap: int = SCAN_CAP) -> bool:
    return not nontrivial_modules(t, cap)


def is_comodule(t: Tournament, m: int) -> bool:
    m &= t.full
    return is_nontrivial_module(t, m) or is_nontrivial_module(t, t.full & ~m)


def comodules(t: Tournament, cap: int = SCAN_CAP) -> list[int]:
    mods = nontrivial_modules(t, cap)
    found = set(mods)
    found.update(t.full & ~m for m in mods)
    return sorted(found, key=sort_key)


def minimal_sets(sets: list[int]) -> list[int]:
    """Inclusion-minimal members of ``sets`` (input order preserved)."""
    ordered = sorted(set(sets), key=sort_key)
    keep: list[int] = []
    for s in ordered:
        if not any(k & s == k for k in keep):
            keep.append(s)
    return keep


def minimal_comodules(t: Tournament, cap: int = SCAN_CAP) -> list[int]:
    return minimal_sets(comodules(t, cap))


def minimal_nontrivial_modules(t: Tournament, cap: int = SCAN_CAP) -> list[int]:
    return minimal_sets(nontrivial_modules(t, cap))


def singleton_comodules(t: Tournament) -> list[int]:
    return [m for m in comodules(t) if popcount(m) == 1]


@dataclass(frozen=True)
class ModuleReport:
    nontrivial_modules: list[int]
    minimal_nontrivial_modules: list[int]
    comodules: list[int]
    minimal_comodules: list[int]

    def as_lists(self) -> dict[str, list[list[int]]]:
        return {k: [members(m) for m in getattr(self, k)] for k in self.__dataclass_fields__}


def module_report(t: Tournament, cap: int = SCAN_CAP) -> ModuleReport:
    return ModuleReport(
        nontrivial_modules=nontrivial_modules(t, cap),
        minimal_nontrivial_modules=minimal_nontrivial_modules(t, cap),
        comodules=comodules(t, cap),
        minimal_comodules=minimal_comodules(t, cap),
    )
