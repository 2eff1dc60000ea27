"""Isomorphism-free generation of tournaments, with an on-disk cache.

Cache file ``reps_<n>.tc``::

    TCACHE 1 <n> <count>
    <compact code>          (one per line, sorted)
    ...
    SHA256 <hex digest of every preceding byte>
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

from .core import Tournament, canonical_code, decode_code, transitive
from .errors import CacheCorrupt, TooLarge, UnknownPredicate

ENUM_CAP = 8
CACHE_ENV = "TOURNAMENT_LAB_CACHE"
CACHE_VERSION = 1


@dataclass(frozen=True)
class RepresentativeSet:
    n: int
    codes: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.codes)

    def tournaments(self) -> list[Tournament]:
        return [decode_code(c) for c in self.codes]


def extend(parent: Tournament, pattern: int, front: bool = False) -> Tournament:
    """Add one vertex; bit ``i`` of ``pattern`` set means the new vertex beats ``i``.

    With ``front`` the new vertex becomes vertex 0 instead of vertex ``n``.
    """
    n = parent.n
    if not front:
        out = []
        for i, r in enumerate(parent.out):
            out.append(r if pattern >> i & 1 else r | 1 << n)
        out.append(pattern)
    else:
        out = [pattern << 1]
        for i, r in enumerate(parent.out):
            out.append(r << 1 | (0 if pattern >> i & 1 else 1))
    return Tournament(n + 1, tuple(out))


def _extend_all(args: tuple[str, bool]) -> set[str]:
    code, front = args
    parent = decode_code(code)
    patterns = range(1 << parent.n)
    if front:
        patterns = reversed(patterns)
    return {canonical_code(extend(parent, p, front)) for p in patterns}


def extend_layer(parents: Iterable[str], front: bool = False, jobs: int = 1) -> list[str]:
    work = [(c, front) for c in parents]
    if front:
        work.reverse()
    found: set[str] = set()
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_extend_all, work, chunksize=max(1, len(work) // (4 * jobs))):
                found |= part
    else:
        for w in work:
            found |= _extend_all(w)
    return sorted(found)


def labeled_exhaustion(n: int) -> list[str]:
    """Canonical codes of all ``2^(n(n-1)/2)`` labelled tournaments; oracle for small n."""
    from .core import _from_upper_bits

    npairs = n * (n - 1) // 2
    return sorted({canonical_code(_from_upper_bits(n, b)) for b in range(1 << npairs)})


# ----------------------------------------------------------------------------
# cache


def default_cache_dir() -> Path | None:
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def cache_path(cache_dir: Path, n: int) -> Path:
    return Path(cache_dir) / f"reps_{n}.tc"


def serialize_cache(n: int, codes: Iterable[str]) -> bytes:
    codes = list(codes)
    body = f"TCACHE {CACHE_VERSION} {n} {len(codes)}\n" + "".join(c + "\n" for c in codes)
    raw = body.encode("ascii")
    return raw + f"SHA256 {hashlib.sha256(raw).hexdigest()}\n".encode("ascii")


def parse_cache(data: bytes, n: int) -> list[str]:
    lines = data.split(b"\n")
    if len(lines) < 3 or lines[-1] != b"" or not lines[-2].startswith(b"SHA256 "):
        raise CacheCorrupt("missing checksum line")
    body = b"\n".join(lines[:-2]) + b"\n"
    digest = lines[-2][len(b"SHA256 "):].decode("ascii", "replace")
    if hashlib.sha256(body).hexdigest() != digest:
        raise CacheCorrupt("checksum mismatch")
    header = lines[0].decode("ascii").split()
    if len(header) != 4 or header[0] != "TCACHE" or header[1] != str(CACHE_VERSION):
        raise CacheCorrupt(f"bad header {lines[0]!r}")
    if int(header[2]) != n:
        raise CacheCorrupt(f"cache is for n={header[2]}, wanted {n}")
    codes = [ln.decode("ascii") for ln in lines[1:-2]]
    if len(codes) != int(header[3]) or codes != sorted(codes):
        raise CacheCorrupt("count or ordering mismatch")
    return codes


def write_cache(cache_dir: Path, n: int, codes: Iterable[str]) -> Path:
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    target = cache_path(cache_dir, n)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=f".reps_{n}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(serialize_cache(n, codes))
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return target


def read_cache(cache_dir: Path, n: int) -> list[str] | None:
    path = cache_path(cache_dir, n)
    if not path.exists():
        return None
    return parse_cache(path.read_bytes(), n)


# ----------------------------------------------------------------------------


class Enumerator:
    """Handle over cached representative sets, one per vertex count."""

    def __init__(self, cache_dir: str | Path | None = None, jobs: int = 1, cap: int = ENUM_CAP):
        self.cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()
        self.jobs = jobs
        self.cap = cap
        self._mem: dict[int, RepresentativeSet] = {}
        self._trn: dict[int, list[Tournament]] = {}

    def enumerate(self, n: int) -> RepresentativeSet:
        if n < 1:
            raise TooLarge(f"vertex count must be >= 1, got {n}")
        if n > self.cap:
            raise TooLarge(f"enumeration capped at {self.cap} vertices, got {n}")
        if n in self._mem:
            return self._mem[n]
        codes = read_cache(self.cache_dir, n) if self.cache_dir is not None else None
        if codes is None:
            if n == 1:
                codes = [canonical_code(transitive(1))]
            else:
                codes = extend_layer(self.enumerate(n - 1).codes, jobs=self.jobs)
            if self.cache_dir is not None:
                write_cache(self.cache_dir, n, codes)
        reps = RepresentativeSet(n, tuple(codes))
        self._mem[n] = reps
        return reps

    def tournaments(self, n: int) -> list[Tournament]:
        if n not in self._trn:
            self._trn[n] = self.enumerate(n).tournaments()
        return self._trn[n]

    def filter(self, n: int, predicate: str) -> list[str]:
        test = predicate_function(predicate)
        reps = self.enumerate(n)
        return [c for c, t in zip(reps.codes, self.tournaments(n)) if test(t)]


def predicate_function(name: str) -> Callable[[Tournament], bool]:
    from .indices import is_Delta_maximal, is_delta_maximal
    from .modular import is_indecomposable

    table: dict[str, Callable[[Tournament], bool]] = {
        "indecomposable": is_indecomposable,
        "decomposable": lambda t: not is_indecomposable(t),
        "delta_maximal": lambda t: t.n >= 5 and is_delta_maximal(t),
        "Delta_maximal": lambda t: t.n >= 3 and is_Delta_maximal(t),
    }
    if name not in table:
        raise UnknownPredicate(f"unknown predicate {name!r}; choose from {sorted(table)}")
    return table[name]


PREDICATES = ("indecomposable", "decomposable", "delta_maximal", "Delta_maximal")
