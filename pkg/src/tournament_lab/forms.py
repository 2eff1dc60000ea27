"""Lexicographic-sum templates of the maximal classes, generators and recognizers.

Every template has the shape ``wrapper(T_k(s_1, ..., s_r, 2, ..., 2))``: an
arbitrary ``k``-vertex tournament ``T_k`` whose vertices receive either a
special component ``s_i`` (``1``, ``C3`` or a 5-vertex indecomposable) or the
2-vertex transitive tournament, wrapped as one of

* ``bare``  -> ``X``
* ``two``   -> ``2(1, X)``
* ``three`` -> ``3(1, X, 1)``
* ``c3``    -> ``C3(1, 1, X)``

Recognition is generate-and-compare by canonical code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .core import C3, CANON_CAP, ONE, THREE, TWO, Tournament, canonical_code, catalog, dual, lex_sum
from .enumeration import Enumerator
from .errors import BadArity, BadForm, BadRange, TooSmall
from .indices import Delta_of_n, big_delta, delta_of_n

S5_NAMES = ("U5", "V5", "W5")


@dataclass(frozen=True)
class FormSpec:
    tag: str
    family: str  # "Delta" or "delta"
    wrapper: str
    k: tuple[int, int]  # parameter size a*n + b
    specials: tuple[str, ...]
    dual: bool = False
    min_n: int = 1

    def param_size(self, n: int) -> int:
        return self.k[0] * n + self.k[1]

    def vertex_count(self, n: int) -> int:
        k = self.param_size(n)
        inner = 2 * (k - len(self.specials)) + sum(_SPECIAL_SIZE[s] for s in self.specials)
        return inner + _WRAPPER_EXTRA[self.wrapper]


_SPECIAL_SIZE = {"1": 1, "C3": 3, "S5": 5}
_WRAPPER_EXTRA = {"bare": 0, "two": 1, "three": 2, "c3": 2}

_SPECS = [
    # co-modular maximal classes
    FormSpec("E0", "Delta", "three", (1, -1), (), min_n=2),
    FormSpec("T1", "Delta", "two", (1, 0), (), dual=True),
    FormSpec("T2", "Delta", "three", (1, 0), ("1",)),
    FormSpec("T3", "Delta", "three", (1, -1), ("C3",), min_n=2),
    # decomposability maximal classes
    FormSpec("G0", "delta", "three", (2, -1), (), min_n=2),
    FormSpec("F1", "delta", "two", (2, 0), (), dual=True),
    FormSpec("F2", "delta", "three", (2, 0), ("1",)),
    FormSpec("F3", "delta", "three", (2, -1), ("C3",)),
    FormSpec("F4", "delta", "bare", (2, 1), ()),
    FormSpec("F5", "delta", "c3", (2, 0), ()),
    FormSpec("F6", "delta", "two", (2, 1), ("1",), dual=True),
    FormSpec("F7", "delta", "two", (2, 0), ("C3",), dual=True),
    FormSpec("F8", "delta", "three", (2, 1), ("1", "1")),
    FormSpec("F9", "delta", "three", (2, 0), ("C3", "1")),
    FormSpec("F10", "delta", "three", (2, -1), ("C3", "C3"), min_n=2),
    FormSpec("F11", "delta", "bare", (2, 2), ("1",)),
    FormSpec("F12", "delta", "bare", (2, 1), ("C3",)),
    FormSpec("F13", "delta", "c3", (2, 0), ("C3",)),
    FormSpec("F14", "delta", "c3", (2, 1), ("1",)),
    FormSpec("F15", "delta", "two", (2, 2), ("1", "1"), dual=True),
    FormSpec("F16", "delta", "two", (2, 1), ("C3", "1"), dual=True),
    FormSpec("F17", "delta", "two", (2, 0), ("C3", "C3"), dual=True),
    FormSpec("F18", "delta", "three", (2, -1), ("S5",)),
    FormSpec("F19", "delta", "three", (2, 2), ("1", "1", "1")),
    FormSpec("F20", "delta", "three", (2, 0), ("C3", "C3", "1"), min_n=2),
    FormSpec("F21", "delta", "three", (2, 1), ("1", "1", "C3")),
    FormSpec("F22", "delta", "three", (2, -1), ("C3", "C3", "C3"), min_n=2),
]
FORMS: dict[str, FormSpec] = {s.tag: s for s in _SPECS}
FORM_ORDER = tuple(s.tag for s in _SPECS)


def form_spec(tag: str) -> FormSpec:
    try:
        return FORMS[tag]
    except KeyError:
        raise BadForm(f"unknown form {tag!r}") from None


def form_parameter(tag: str, m: int) -> int | None:
    """Family parameter ``n`` for which form ``tag`` has ``m`` vertices, if any."""
    spec = form_spec(tag)
    for n in range(spec.min_n, m + 1):
        if spec.vertex_count(n) == m:
            return n
    return None


def applicable_forms(family: str, m: int) -> list[tuple[FormSpec, int]]:
    families = ("Delta", "delta") if family == "all" else (family,)
    found = []
    for spec in _SPECS:
        if spec.family not in families:
            continue
        n = form_parameter(spec.tag, m)
        if n is not None:
            found.append((spec, n))
    return found


def sort_forms(tags) -> list[str]:
    return sorted(tags, key=FORM_ORDER.index)


@dataclass(frozen=True)
class FormInstance:
    form: str
    n: int
    param: Tournament
    assignment: tuple[int, ...] = ()
    s5: str | None = None
    dualized: bool = False


def build_form(inst: FormInstance) -> Tournament:
    spec = form_spec(inst.form)
    if inst.n < spec.min_n:
        raise BadRange(f"{spec.tag} needs n >= {spec.min_n}, got {inst.n}")
    k = spec.param_size(inst.n)
    if inst.param.n != k:
        raise BadArity(f"{spec.tag} at n={inst.n} needs a {k}-vertex parameter, got {inst.param.n}")
    if len(inst.assignment) != len(spec.specials):
        raise BadArity(f"{spec.tag} has {len(spec.specials)} special slots, got {len(inst.assignment)}")
    if len(set(inst.assignment)) != len(inst.assignment) or any(not 0 <= v < k for v in inst.assignment):
        raise BadArity(f"slot assignment {inst.assignment} invalid for {k} vertices")
    if ("S5" in spec.specials) != (inst.s5 is not None):
        raise BadForm(f"{spec.tag}: 5-vertex slot choice missing or unexpected")
    if inst.s5 is not None and inst.s5 not in S5_NAMES:
        raise BadForm(f"5-vertex slot must be one of {S5_NAMES}")
    if inst.dualized and not spec.dual:
        raise BadForm(f"{spec.tag} is not stated up to duality")
    comps = [TWO] * k
    for v, s in zip(inst.assignment, spec.specials):
        comps[v] = ONE if s == "1" else C3 if s == "C3" else catalog(inst.s5)
    inner = lex_sum(inst.param, comps)
    if spec.wrapper == "bare":
        t = inner
    elif spec.wrapper == "two":
        t = lex_sum(TWO, [ONE, inner])
    elif spec.wrapper == "three":
        t = lex_sum(THREE, [ONE, inner, ONE])
    else:
        t = lex_sum(C3, [ONE, ONE, inner])
    return dual(t) if inst.dualized else t


def instances(spec: FormSpec, n: int, reps: Enumerator) -> Iterator[FormInstance]:
    """Every instance over all parameter representatives, slot assignments and duals."""
    k = spec.param_size(n)
    s5_choices = S5_NAMES if "S5" in spec.specials else (None,)
    duals = (False, True) if spec.dual else (False,)
    for param in reps.tournaments(k):
        for assignment in permutations(range(k), len(spec.specials)):
            for s5 in s5_choices:
                for d in duals:
                    yield FormInstance(spec.tag, n, param, assignment, s5, d)


@lru_cache(maxsize=None)
def _form_codes(tag: str, n: int, reps: Enumerator, cap: int) -> frozenset[str]:
    spec = form_spec(tag)
    return frozenset(canonical_code(build_form(i), cap) for i in instances(spec, n, reps))


def generate_form(tag: str, n: int, reps: Enumerator, cap: int = CANON_CAP) -> frozenset[str]:
    return _form_codes(tag, n, reps, cap)


def generate_class(family: str, m: int, reps: Enumerator, cap: int = CANON_CAP) -> set[str]:
    """Canonical codes of the ``m``-vertex maximal class, ``family`` in {"Delta", "delta"}."""
    if family not in ("Delta", "delta"):
        raise BadForm(f"unknown class {family!r}")
    codes: set[str] = set()
    for spec, n in applicable_forms(family, m):
        codes |= generate_form(spec.tag, n, reps, cap)
    return codes


def match_forms(t: Tournament, reps: Enumerator, family: str = "delta", cap: int = CANON_CAP) -> list[str]:
    """Form tags (in catalogue order) having an instance isomorphic to ``t``."""
    forms = applicable_forms(family, t.n)
    if not forms:
        return []
    code = canonical_code(t, cap)
    return [spec.tag for spec, n in forms if code in generate_form(spec.tag, n, reps, cap)]


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    n_mod_4: int
    big_delta: int
    small_delta: int
    Delta_maximal: bool
    delta_maximal: bool
    forms: list[str] = field(default_factory=list)


def classify(t: Tournament, reps: Enumerator, cap: int = CANON_CAP) -> ClassificationReport:
    if t.n < 5:
        raise TooSmall(f"classification needs >= 5 vertices, got {t.n}")
    d, _ = big_delta(t)
    sd = (d + 1) // 2
    return ClassificationReport(
        n=t.n,
        n_mod_4=t.n % 4,
        big_delta=d,
        small_delta=sd,
        Delta_maximal=d == Delta_of_n(t.n),
        delta_maximal=sd == delta_of_n(t.n),
        forms=match_forms(t, reps, "delta", cap),
    )
