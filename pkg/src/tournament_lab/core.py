"""Tournament values, constructors, codecs and canonical labeling.

A tournament on ``n`` vertices is stored as a tuple of out-neighbourhood
bitmasks: bit ``j`` of ``out[i]`` is set iff ``(i, j)`` is an arc.  Vertex
sets are plain ``int`` bitmasks over ``0..n-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import (
    ArcNotPresent,
    ArityMismatch,
    DuplicatePair,
    EmptySet,
    LabelOutOfRange,
    LoopArc,
    MissingPair,
    ParseError,
    TooLarge,
    UnknownName,
)

CANON_CAP = 10


@dataclass(frozen=True)
class Tournament:
    n: int
    out: tuple[int, ...]

    def has_arc(self, i: int, j: int) -> bool:
        return bool(self.out[i] >> j & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for i in range(self.n):
            row = self.out[i]
            for j in range(self.n):
                if row >> j & 1:
                    yield (i, j)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def scores(self) -> tuple[int, ...]:
        return tuple(bin(r).count("1") for r in self.out)

    def __repr__(self) -> str:
        return f"Tournament({encode_code(self)})"


# ----------------------------------------------------------------------------
# vertex-set helpers


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# ----------------------------------------------------------------------------
# construction


def build(n: int, arc_list: Iterable[tuple[int, int]]) -> Tournament:
    """Build a tournament from an explicit arc list, validating pair coverage."""
    if n < 1:
        raise LabelOutOfRange(f"vertex count must be >= 1, got {n}")
    out = [0] * n
    for i, j in arc_list:
        if not (0 <= i < n and 0 <= j < n):
            raise LabelOutOfRange(f"arc ({i},{j}) outside 0..{n - 1}")
        if i == j:
            raise LoopArc(f"loop at vertex {i}")
        if out[j] >> i & 1:
            raise DuplicatePair(f"pair {{{i},{j}}} given in both orientations")
        out[i] |= 1 << j
    for i in range(n):
        for j in range(i + 1, n):
            if not (out[i] >> j & 1 or out[j] >> i & 1):
                raise MissingPair(f"pair {{{i},{j}}} has no orientation")
    return Tournament(n, tuple(out))


def _from_upper_bits(n: int, bits: int) -> Tournament:
    """Inverse of ``_upper_bits``: bit for pair (i<j) set means i -> j."""
    out = [0] * n
    k = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            k -= 1
            if bits >> k & 1:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
    return Tournament(n, tuple(out))


def _upper_bits(t: Tournament) -> int:
    bits = 0
    out = t.out
    for i in range(t.n):
        row = out[i]
        for j in range(i + 1, t.n):
            bits = bits << 1 | (row >> j & 1)
    return bits


def transitive(n: int) -> Tournament:
    return Tournament(n, tuple(((1 << n) - 1) & ~((1 << (i + 1)) - 1) for i in range(n)))


def dual(t: Tournament) -> Tournament:
    full = t.full
    return Tournament(t.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(t.out)))


def inv(t: Tournament, arcs: Iterable[tuple[int, int]]) -> Tournament:
    """Reverse every arc of ``arcs``; each must currently be an arc of ``t``."""
    out = list(t.out)
    seen = set()
    for i, j in arcs:
        if not (0 <= i < t.n and 0 <= j < t.n) or i == j or not t.out[i] >> j & 1:
            raise ArcNotPresent(f"({i},{j}) is not an arc")
        if (i, j) in seen:
            continue
        seen.add((i, j))
        out[i] ^= 1 << j
        out[j] ^= 1 << i
    return Tournament(t.n, tuple(out))


def subtournament(t: Tournament, x: int) -> Tournament:
    """Induced subtournament on bitmask ``x``, relabelled in increasing order."""
    verts = members(x & t.full)
    if not verts:
        raise EmptySet("subtournament of the empty set")
    pos = {v: k for k, v in enumerate(verts)}
    out = []
    for v in verts:
        row = 0
        for u in members(t.out[v] & x):
            row |= 1 << pos[u]
        out.append(row)
    return Tournament(len(verts), tuple(out))


def relabel(t: Tournament, order: Sequence[int]) -> Tournament:
    """New vertex ``k`` is old vertex ``order[k]``."""
    pos = [0] * t.n
    for k, v in enumerate(order):
        pos[v] = k
    out = [0] * t.n
    for k, v in enumerate(order):
        row = 0
        for u in members(t.out[v]):
            row |= 1 << pos[u]
        out[k] = row
    return Tournament(t.n, tuple(out))


def lex_sum(outer: Tournament, components: Sequence[Tournament]) -> Tournament:
    """Substitute ``components[i]`` for vertex ``i`` of ``outer``.

    Blocks are laid out consecutively in outer-label order.
    """
    if len(components) != outer.n:
        raise ArityMismatch(f"{outer.n} components expected, got {len(components)}")
    offsets = []
    total = 0
    for c in components:
        offsets.append(total)
        total += c.n
    block = [((1 << c.n) - 1) << off for c, off in zip(components, offsets)]
    out = []
    for i, (c, off) in enumerate(zip(components, offsets)):
        beyond = 0
        for j in members(outer.out[i]):
            beyond |= block[j]
        for r in c.out:
            out.append(r << off | beyond)
    return Tournament(total, tuple(out))


def lex_product(outer: Tournament, h: Tournament) -> Tournament:
    return lex_sum(outer, [h] * outer.n)


def block_masks(components: Sequence[Tournament]) -> list[int]:
    """Vertex masks of the blocks produced by ``lex_sum(_, components)``."""
    masks, off = [], 0
    for c in components:
        masks.append(((1 << c.n) - 1) << off)
        off += c.n
    return masks


# ----------------------------------------------------------------------------
# catalog

C3 = build(3, [(0, 1), (1, 2), (2, 0)])
ONE = transitive(1)
TWO = transitive(2)
THREE = transitive(3)
# never defined explicitly; taken as the strongly connected 4-vertex class
C4 = lex_sum(C3, [ONE, ONE, TWO])
U5 = build(5, list(THREE.arcs()) + [(3, 0), (1, 3), (2, 3), (4, 0), (4, 1), (2, 4), (3, 4)])
V5 = inv(U5, [(3, 4)])
W5 = build(5, list(transitive(4).arcs()) + [(4, 0), (4, 2), (1, 4), (3, 4)])

_NAMED = {"C3": C3, "C4": C4, "U5": U5, "V5": V5, "W5": W5}
_TRANSITIVE_RE = re.compile(r"^transitive\((\d+)\)$")


def catalog(name: str) -> Tournament:
    name = name.strip()
    if name in _NAMED:
        return _NAMED[name]
    m = _TRANSITIVE_RE.match(name)
    if m and int(m.group(1)) >= 1:
        return transitive(int(m.group(1)))
    raise UnknownName(f"unknown tournament name {name!r}")


# ----------------------------------------------------------------------------
# codecs

_CODE_RE = re.compile(r"^T(\d+):([0-9A-F]*)$")


def encode_code(t: Tournament) -> str:
    return _bits_to_code(t.n, _upper_bits(t))


def _bits_to_code(n: int, bits: int) -> str:
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    if nbytes == 0:
        return f"T{n}:"
    padded = bits << (nbytes * 8 - nbits)
    return f"T{n}:{padded:0{nbytes * 2}X}"


def decode_code(code: str) -> Tournament:
    m = _CODE_RE.match(code.strip())
    if not m:
        raise ParseError(f"not a compact code: {code!r}")
    n = int(m.group(1))
    if n < 1:
        raise ParseError("vertex count must be >= 1")
    hexpart = m.group(2)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    if len(hexpart) != 2 * nbytes:
        raise ParseError(f"expected {2 * nbytes} hex digits for n={n}, got {len(hexpart)}")
    if nbytes == 0:
        return Tournament(1, (0,))
    value = int(hexpart, 16)
    pad = nbytes * 8 - nbits
    if value & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits")
    return _from_upper_bits(n, value >> pad)


def encode_trn(t: Tournament) -> str:
    rows = ["".join("1" if r >> j & 1 else "0" for j in range(t.n)) for r in t.out]
    return f"{t.n}\n" + "\n".join(rows) + "\n"


def decode_trn(text: str) -> Tournament:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines or not lines[0].isdigit():
        raise ParseError("first line must be the vertex count")
    n = int(lines[0])
    if n < 1 or len(lines) != n + 1:
        raise ParseError(f"expected {n} matrix rows")
    arcs = []
    for i, row in enumerate(lines[1:]):
        if len(row) != n or set(row) - {"0", "1"}:
            raise ParseError(f"row {i} must be {n} characters of 0/1")
        for j, ch in enumerate(row):
            if ch == "1":
                arcs.append((i, j))
    return build(n, arcs)


# ----------------------------------------------------------------------------
# canonical labeling


def _canonical_rows(t: Tournament) -> tuple[list[int], list[int]]:
    """Lexicographically least row sequence over all relabelings.

    Row ``k`` holds the bits of pairs ``(k, j)``, ``j > k``.  Fixing the vertices
    of positions ``0..k-1`` partitions the rest into ordered cells (vertices
    sharing the same relation to every placed vertex), the best row ``k`` for a
    candidate puts, in every cell, the vertices beating it first.  Ties branch.
    """
    n, out = t.n, t.out
    inn = [0] * n
    for v in range(n):
        for u in members(out[v]):
            inn[u] |= 1 << v
    best_rows: list[int] | None = None
    best_order: list[int] = []

    def search(order: list[int], cells: list[list[int]], rows: list[int]) -> None:
        nonlocal best_rows, best_order
        k = len(order)
        if k == n:
            if best_rows is None or rows < best_rows:
                best_rows, best_order = rows[:], order[:]
            return
        first = cells[0]
        options = []
        for v in first:
            row = 0
            split = []
            beats_v = inn[v]
            for c in cells:
                ins, outs = [], []
                for u in c:
                    if u == v:
                        continue
                    if beats_v >> u & 1:
                        ins.append(u)
                        row <<= 1
                    else:
                        outs.append(u)
                # bits for `ins` are 0, for `outs` are 1
                for _ in outs:
                    row = row << 1 | 1
                if ins:
                    split.append(ins)
                if outs:
                    split.append(outs)
            options.append((row, v, split))
        low = min(o[0] for o in options)
        if best_rows is not None:
            cur = rows + [low]
            if cur > best_rows[: k + 1]:
                return
        for row, v, split in options:
            if row != low:
                continue
            order.append(v)
            rows.append(row)
            search(order, split, rows)
            rows.pop()
            order.pop()

    search([], [list(range(n))], [])
    assert best_rows is not None
    return best_rows, best_order


def canonical_form(t: Tournament, cap: int = CANON_CAP) -> tuple[str, list[int]]:
    """Return ``(code, order)`` with ``relabel(t, order)`` the canonical copy."""
    if t.n > cap:
        raise TooLarge(f"canonical labeling capped at {cap} vertices, got {t.n}")
    rows, order = _canonical_rows(t)
    bits = 0
    for k, r in enumerate(rows):
        bits = bits << (t.n - 1 - k) | r
    return _bits_to_code(t.n, bits), order


def canonical_code(t: Tournament, cap: int = CANON_CAP) -> str:
    return canonical_form(t, cap)[0]


def canonical_code_bruteforce(t: Tournament) -> str:
    """Minimum compact code over all n! relabelings; test oracle only."""
    best = None
    for order in permutations(range(t.n)):
        bits = _upper_bits(relabel(t, order))
        if best is None or bits < best:
            best = bits
    return _bits_to_code(t.n, best)


def is_isomorphic(a: Tournament, b: Tournament, cap: int = CANON_CAP) -> bool:
    if max(a.n, b.n) > cap:
        raise TooLarge(f"canonical labeling capped at {cap} vertices")
    if a.n != b.n or sorted(a.scores()) != sorted(b.scores()):
        return False
    return canonical_code(a, cap) == canonical_code(b, cap)
