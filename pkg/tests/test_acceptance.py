"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary. A fresh enumerator on an empty
cache directory is used so timings include generation.
"""

import time
from contextlib import contextmanager

import pytest

from conftest import ACCEPTANCE_LINES
from tournament_lab.core import C3, U5, V5, W5, canonical_code, decode_code, decode_trn, encode_code, encode_trn
from tournament_lab.enumeration import Enumerator, extend_layer, labeled_exhaustion
from tournament_lab.forms import generate_class
from tournament_lab.indices import Delta_of_n, big_delta, delta_of_n, small_delta, small_delta_oracle
from tournament_lab.verify import run_check


@contextmanager
def criterion(number: int, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        line = f"[FAIL] {number}. {title} ({time.perf_counter() - start:.1f}s): {exc!s:.200}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"[PASS] {number}. {title} ({time.perf_counter() - start:.1f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="module")
def fresh(tmp_path_factory):
    return Enumerator(tmp_path_factory.mktemp("acceptance-cache"))


class _Oracle(dict):
    """Brute-force decomposability indices per vertex count, computed on first use."""

    def __init__(self, reps):
        super().__init__()
        self.reps = reps

    def __missing__(self, n):
        self[n] = [small_delta_oracle(t)[0] for t in self.reps.tournaments(n)]
        return self[n]


@pytest.fixture(scope="module")
def oracle(fresh):
    return _Oracle(fresh)


def test_1_enumeration_counts(fresh):
    with criterion(1, "enumeration counts n=3..7 = 2,4,12,56,456 in < 10 s"):
        start = time.perf_counter()
        counts = [len(fresh.enumerate(n)) for n in range(3, 8)]
        elapsed = time.perf_counter() - start
        assert counts == [2, 4, 12, 56, 456], counts
        assert elapsed < 10, f"{elapsed:.1f}s"
        for n in range(3, 7):
            assert list(fresh.enumerate(n).codes) == labeled_exhaustion(n), f"labeled mismatch n={n}"
        assert extend_layer(fresh.enumerate(6).codes, front=True) == list(fresh.enumerate(7).codes)


def test_2_formula_matches_oracle(fresh):
    with criterion(2, "small_delta = brute-force oracle for n=5..7 in < 60 s"):
        start = time.perf_counter()
        bad = []
        checked = 0
        for n in range(5, 8):
            for t in fresh.tournaments(n):
                checked += 1
                if small_delta(t) != small_delta_oracle(t)[0]:
                    bad.append(encode_code(t))
        elapsed = time.perf_counter() - start
        assert checked == 12 + 56 + 456
        assert not bad, bad[:10]
        assert elapsed < 60, f"{elapsed:.1f}s"


def test_3_maxima(fresh, oracle):
    with criterion(3, "max Delta = ceil((n+1)/2) n=3..7, max delta = ceil((n+1)/4) n=5..7"):
        for n in range(3, 8):
            top = max(big_delta(t)[0] for t in fresh.tournaments(n))
            assert top == Delta_of_n(n) == -(-(n + 1) // 2), (n, top)
        for n in range(5, 8):
            assert max(oracle[n]) == delta_of_n(n) == -(-(n + 1) // 4), n


def test_4_delta_classification(fresh, oracle):
    with criterion(4, "delta-maximal classes = generated forms, n=5..8; spot counts n5=2, n8=2"):
        start = time.perf_counter()
        sizes = {}
        for n in range(5, 9):
            brute = {t_code for t_code, od in zip(fresh.enumerate(n).codes, oracle[n]) if od == delta_of_n(n)}
            gen = generate_class("delta", n, fresh)
            assert gen == brute, (n, sorted(brute ^ gen)[:10])
            sizes[n] = len(brute)
        assert sizes[5] == 2 and sizes[8] == 2, sizes
        assert time.perf_counter() - start < 30 * 60


def test_5_Delta_classification(fresh):
    with criterion(5, "Delta-maximal classes = generated forms, n=3..8"):
        for n in range(3, 9):
            brute = {encode_code(t) for t in fresh.tournaments(n) if big_delta(t)[0] == Delta_of_n(n)}
            gen = generate_class("Delta", n, fresh)
            assert gen == brute, (n, sorted(brute ^ gen)[:10])


def test_6_maximality_equivalences(fresh, oracle):
    with criterion(6, "maximality equivalences by n mod 4, n=5..8"):
        r = run_check("cor-3.6", range(5, 9), fresh)
        assert r.passed, r.counterexamples
        # independent recomputation from the oracle table
        for n in range(5, 9):
            for t, od in zip(fresh.tournaments(n), oracle[n]):
                d = big_delta(t)[0]
                if d == 0:
                    continue
                want = d == Delta_of_n(n) if n % 4 in (0, 1) else d >= Delta_of_n(n) - 1
                assert (od == delta_of_n(n)) == want, encode_code(t)


def test_7_structural_invariants(fresh):
    with criterion(7, "structural invariants, zero counterexamples, n<=7"):
        for cid in ("lemma-3.1", "cor-3.2", "rem-3.3", "obs-3.4"):
            r = run_check(cid, range(1, 8), fresh)
            assert r.passed and r.checked > 0, (cid, r.counterexamples)


def test_8_catalog_fidelity(fresh):
    with criterion(8, "catalog fidelity: indecomposables at n=4,5 and named constructions"):
        assert set(fresh.filter(5, "indecomposable")) == {canonical_code(x) for x in (U5, V5, W5)}
        assert fresh.filter(4, "indecomposable") == []
        for cid in ("fact-4.1", "fact-4.2"):
            r = run_check(cid, range(4, 6), fresh)
            assert r.passed, (cid, r.counterexamples)


def test_9_codec_round_trip(fresh):
    with criterion(9, "codec round-trip over representatives n<=7 and C3 <-> T3:A0"):
        assert encode_code(C3) == "T3:A0" and decode_code("T3:A0") == C3
        for n in range(1, 8):
            for code in fresh.enumerate(n).codes:
                t = decode_code(code)
                text = encode_trn(t)
                assert encode_code(decode_trn(text)) == code
                assert encode_trn(decode_trn(text)) == text
