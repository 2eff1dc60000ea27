"""Named exhaustive checks over enumerated representatives.

Each check walks every isomorphism class for each requested vertex count it
applies to and collects counterexamples.  Per-vertex-count analysis (modules,
packings, the reversal oracle) is computed once per process and shared.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .core import (
    C3,
    C4,
    ONE,
    THREE,
    TWO,
    U5,
    V5,
    W5,
    Tournament,
    canonical_code,
    dual,
    lex_sum,
    members,
    popcount,
    subtournament,
    transitive,
)
from .enumeration import ENUM_CAP, Enumerator
from .errors import TooLarge, UnknownCheck
from .forms import generate_class
from .indices import (
    Delta_of_n,
    big_delta,
    big_delta_all_comodules,
    delta_of_n,
    small_delta_oracle,
)
from .modular import (
    comodules,
    is_indecomposable,
    is_module,
    is_nontrivial_module,
    minimal_comodules,
    minimal_nontrivial_modules,
    nontrivial_modules,
)

MAX_COUNTEREXAMPLES = 10


@dataclass
class VerificationReport:
    check_id: str
    range: list[int]
    status: str = "pass"
    counterexamples: list[tuple[str, str]] = field(default_factory=list)
    counterexample_count: int = 0
    checked: int = 0
    elapsed: float = 0.0

    def fail(self, code: str, details: str) -> None:
        self.counterexample_count += 1
        self.status = "fail"
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append((code, details))

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "range": self.range,
            "status": self.status,
            "checked": self.checked,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [{"code": c, "details": d} for c, d in self.counterexamples],
            "elapsed": round(self.elapsed, 4),
        }


@dataclass(frozen=True)
class Row:
    code: str
    t: Tournament
    modules: tuple[int, ...]
    comodules: tuple[int, ...]
    mc: tuple[int, ...]
    big_delta: int
    decomposition: tuple[int, ...]


@lru_cache(maxsize=None)
def _rows(reps: Enumerator, n: int) -> tuple[Row, ...]:
    rows = []
    for code, t in zip(reps.enumerate(n).codes, reps.tournaments(n)):
        d, dec = big_delta(t)
        rows.append(
            Row(
                code,
                t,
                tuple(nontrivial_modules(t)),
                tuple(comodules(t)),
                tuple(minimal_comodules(t)),
                d,
                dec.blocks,
            )
        )
    return tuple(rows)


@lru_cache(maxsize=None)
def _oracle(reps: Enumerator, n: int) -> tuple[int, ...]:
    return tuple(small_delta_oracle(r.t)[0] for r in _rows(reps, n))


def _fmt(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


# ----------------------------------------------------------------------------
# per-representative checks


def _lemma_31(rep: VerificationReport, r: Row) -> None:
    singles = [m for m in r.comodules if popcount(m) == 1]
    if len(singles) > 2:
        rep.fail(r.code, f"{len(singles)} singleton co-modules")
    for m in r.comodules:
        if is_module(r.t, m):
            continue
        for other in r.comodules:
            if other & m == 0 and not is_nontrivial_module(r.t, other):
                rep.fail(r.code, f"{_fmt(m)} is not a module but disjoint {_fmt(other)} is not a nontrivial module")
                return
    non_mod = [b for b in r.decomposition if not is_module(r.t, b)]
    for b in non_mod:
        rest = [x for x in r.decomposition if x != b]
        if not all(is_nontrivial_module(r.t, x) for x in rest):
            rep.fail(r.code, f"decomposition element {_fmt(b)} breaks assertion 2")


def _cor_32(rep: VerificationReport, r: Row) -> None:
    decs = [r.decomposition]
    # every disjoint pair is itself a co-modular decomposition
    decs += [(a, b) for i, a in enumerate(r.comodules) for b in r.comodules[i + 1:] if a & b == 0]
    for dec in decs:
        sg = [b for b in dec if popcount(b) == 1]
        if len(sg) > 2:
            rep.fail(r.code, f"{len(sg)} singletons in {list(map(_fmt, dec))}")
            return
        if sg and not all(is_nontrivial_module(r.t, b) for b in dec if popcount(b) >= 2):
            rep.fail(r.code, f"singleton present but a large block is no module in {list(map(_fmt, dec))}")
            return


def _rem_33(rep: VerificationReport, r: Row) -> None:
    minimal = set(minimal_nontrivial_modules(r.t))
    for m in r.mc:
        if is_nontrivial_module(r.t, m) and m not in minimal:
            rep.fail(r.code, f"minimal co-module {_fmt(m)} is a non-minimal nontrivial module")
    for m in minimal:
        if not is_indecomposable(subtournament(r.t, m)):
            rep.fail(r.code, f"minimal nontrivial module {_fmt(m)} induces a decomposable tournament")


_C3_CODE = canonical_code(C3)
_S5_CODES = {canonical_code(x) for x in (U5, V5, W5)}


def _obs_34(rep: VerificationReport, r: Row) -> None:
    for m in r.mc:
        size = popcount(m)
        if size == 3 and canonical_code(subtournament(r.t, m)) != _C3_CODE:
            rep.fail(r.code, f"3-element minimal co-module {_fmt(m)} is not a 3-cycle")
        if is_nontrivial_module(r.t, m):
            if size == 4:
                rep.fail(r.code, f"4-element minimal co-module module {_fmt(m)}")
            if size == 5 and canonical_code(subtournament(r.t, m)) not in _S5_CODES:
                rep.fail(r.code, f"5-element minimal co-module module {_fmt(m)} not U5/V5/W5")


def _decomposable_iff(rep: VerificationReport, r: Row) -> None:
    decomposable = bool(r.modules)
    if decomposable != bool(r.mc):
        rep.fail(r.code, "decomposability disagrees with existence of minimal co-modules")
    if decomposable != (r.big_delta >= 2):
        rep.fail(r.code, f"decomposable={decomposable} but index {r.big_delta}")


def _packing_reduction(rep: VerificationReport, r: Row) -> None:
    full = big_delta_all_comodules(r.t)
    if full != r.big_delta:
        rep.fail(r.code, f"minimal-only packing {r.big_delta} != full packing {full}")


def _duality(rep: VerificationReport, r: Row) -> None:
    d = dual(r.t)
    if nontrivial_modules(d) != list(r.modules):
        rep.fail(r.code, "dual has different modules")
    if big_delta(d)[0] != r.big_delta:
        rep.fail(r.code, "dual has different co-modular index")


PerRow = Callable[[VerificationReport, Row], None]


def _per_row(fn: PerRow) -> Callable[[VerificationReport, Enumerator, int], None]:
    def run(rep: VerificationReport, reps: Enumerator, n: int) -> None:
        for r in _rows(reps, n):
            fn(rep, r)
            rep.checked += 1

    return run


# ----------------------------------------------------------------------------
# sweep checks


def _formula(rep: VerificationReport, reps: Enumerator, n: int) -> None:
    for r, od in zip(_rows(reps, n), _oracle(reps, n)):
        rep.checked += 1
        if od != (r.big_delta + 1) // 2:
            rep.fail(r.code, f"oracle {od} != ceil({r.big_delta}/2)")


def _maxima(rep: VerificationReport, reps: Enumerator, n: int) -> None:
    rows = _rows(reps, n)
    rep.checked += len(rows)
    top = max(r.big_delta for r in rows)
    if top != Delta_of_n(n):
        rep.fail(f"n={n}", f"max co-modular index {top} != {Delta_of_n(n)}")
    if n >= 5:
        top_d = max(_oracle(reps, n))
        if top_d != delta_of_n(n):
            rep.fail(f"n={n}", f"max decomposability index {top_d} != {delta_of_n(n)}")
        trans = small_delta_oracle(transitive(n))[0]
        if trans != delta_of_n(n):
            rep.fail(canonical_code(transitive(n)), f"transitive index {trans} != {delta_of_n(n)}")


def _cor_36(rep: VerificationReport, reps: Enumerator, n: int) -> None:
    for r, od in zip(_rows(reps, n), _oracle(reps, n)):
        if not r.modules:
            continue
        rep.checked += 1
        maximal = od == delta_of_n(n)
        if n % 4 in (0, 1):
            expect = r.big_delta == Delta_of_n(n)
        else:
            expect = r.big_delta in (Delta_of_n(n), Delta_of_n(n) - 1)
        if maximal != expect:
            rep.fail(r.code, f"delta={od}, Delta={r.big_delta}: equivalence fails for n mod 4 = {n % 4}")


def _set_check(rep: VerificationReport, generated: set[str], brute: set[str]) -> None:
    for c in sorted(brute - generated):
        rep.fail(c, "maximal by brute force but not generated")
    for c in sorted(generated - brute):
        rep.fail(c, "generated but not maximal by brute force")


def _Delta_class(rep: VerificationReport, reps: Enumerator, n: int) -> None:
    rows = _rows(reps, n)
    rep.checked += len(rows)
    brute = {r.code for r in rows if r.big_delta == Delta_of_n(n)}
    _set_check(rep, generate_class("Delta", n, reps), brute)


def _delta_class(rep: VerificationReport, reps: Enumerator, n: int) -> None:
    rows = _rows(reps, n)
    rep.checked += len(rows)
    brute = {r.code for r, od in zip(rows, _oracle(reps, n)) if od == delta_of_n(n)}
    _set_check(rep, generate_class("delta", n, reps), brute)


FACT_4 = {
    "transitive(4)": transitive(4),
    "2(1,C3)": lex_sum(TWO, [ONE, C3]),
    "2(C3,1)": lex_sum(TWO, [C3, ONE]),
    "C3(1,1,2)": lex_sum(C3, [ONE, ONE, TWO]),
}

FACT_5 = {
    "transitive(5)": transitive(5),
    "3(1,1,C3)": lex_sum(THREE, [ONE, ONE, C3]),
    "3(C3,1,1)": lex_sum(THREE, [C3, ONE, ONE]),
    "3(1,C3,1)": lex_sum(THREE, [ONE, C3, ONE]),
    "2(1,C4)": lex_sum(TWO, [ONE, C4]),
    "2(C4,1)": lex_sum(TWO, [C4, ONE]),
    "C3(1,2,2)": lex_sum(C3, [ONE, TWO, TWO]),
    "C3(1,1,C3)": lex_sum(C3, [ONE, ONE, C3]),
    "C3(1,1,3)": lex_sum(C3, [ONE, ONE, THREE]),
    "U5": U5,
    "V5": V5,
    "W5": W5,
}


def _fact(named: dict[str, Tournament], indecomposable: set[str]):
    def run(rep: VerificationReport, reps: Enumerator, n: int) -> None:
        codes = {}
        for name, t in named.items():
            c = canonical_code(t)
            if c in codes.values():
                rep.fail(c, f"{name} duplicates another listed tournament")
            codes[name] = c
        enum = set(reps.enumerate(n).codes)
        rep.checked += len(enum)
        _set_check(rep, set(codes.values()), enum)
        want = {codes[x] for x in indecomposable}
        got = set(reps.filter(n, "indecomposable"))
        if got != want:
            rep.fail(f"n={n}", f"indecomposable classes {sorted(got)} != {sorted(want)}")

    return run


@dataclass(frozen=True)
class Check:
    check_id: str
    run: Callable[[VerificationReport, Enumerator, int], None]
    applies: Callable[[int], bool]
    ceiling: int = ENUM_CAP
    floor: int = 1


CHECKS: dict[str, Check] = {
    c.check_id: c
    for c in [
        Check("lemma-3.1", _per_row(_lemma_31), lambda n: n >= 3),
        Check("cor-3.2", _per_row(_cor_32), lambda n: n >= 3),
        Check("rem-3.3", _per_row(_rem_33), lambda n: n >= 3),
        Check("obs-3.4", _per_row(_obs_34), lambda n: n >= 3),
        Check("decomposable-iff", _per_row(_decomposable_iff), lambda n: True),
        Check("packing-reduction", _per_row(_packing_reduction), lambda n: True),
        Check("duality", _per_row(_duality), lambda n: True),
        Check("thm-deltan-formula", _formula, lambda n: n >= 5),
        Check("thm-deltan-max", _maxima, lambda n: n >= 3),
        Check("cor-3.6", _cor_36, lambda n: n >= 5),
        Check("prop-5.1", _Delta_class, lambda n: n >= 4 and n % 2 == 0),
        Check("prop-5.2", _Delta_class, lambda n: n >= 3 and n % 2 == 1),
        Check("thm-6.1", _delta_class, lambda n: n >= 8 and n % 4 == 0),
        Check("thm-6.2", _delta_class, lambda n: n >= 5 and n % 4 == 1),
        Check("thm-6.3", _delta_class, lambda n: n >= 6 and n % 4 == 2),
        Check("thm-6.4", _delta_class, lambda n: n >= 7 and n % 4 == 3),
        Check("fact-4.1", _fact(FACT_4, set()), lambda n: n == 4),
        Check("fact-4.2", _fact(FACT_5, {"U5", "V5", "W5"}), lambda n: n == 5),
    ]
}


def check_ids() -> list[str]:
    return list(CHECKS)


def run_check(check_id: str, n_range: Iterable[int], reps: Enumerator | None = None) -> VerificationReport:
    if check_id not in CHECKS:
        raise UnknownCheck(f"unknown check {check_id!r}")
    check = CHECKS[check_id]
    ns = sorted(set(n_range))
    too_big = [n for n in ns if n > check.ceiling or n < check.floor]
    if too_big:
        raise TooLarge(f"{check_id} is feasible for n in {check.floor}..{check.ceiling}, asked {too_big}")
    reps = reps if reps is not None else Enumerator()
    covered = [n for n in ns if check.applies(n)]
    report = VerificationReport(check_id, covered)
    start = time.perf_counter()
    for n in covered:
        check.run(report, reps, n)
    report.elapsed = time.perf_counter() - start
    return report
