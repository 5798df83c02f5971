import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from helpers import member_constructions, member_words
from twopal import (
    OffsetSample,
    Word,
    ceil_sqrt,
    classical_test,
    cube_grids,
    distance_to_language,
    far_threshold,
    gen_far,
    gen_gamma,
    gen_member,
    icbrt,
    left_string,
    offset_count,
    quantum_test,
    right_string,
    sample_offsets,
    sqrt_grids,
)
from twopal.ledger import QueryLedger


# --- integer roots and grids -------------------------------------------


def test_icbrt_exhaustive_small():
    for n in range(20001):
        c = icbrt(n)
        assert c**3 <= n < (c + 1) ** 3


def test_icbrt_perfect_cube_edges():
    for c in (1, 2, 7, 10, 64, 128, 1000, 10**6):
        assert icbrt(c**3) == c
        assert icbrt(c**3 - 1) == c - 1
        assert icbrt(c**3 + 1) == c


@given(st.integers(min_value=0, max_value=10**18))
def test_icbrt_property(n):
    c = icbrt(n)
    assert c**3 <= n < (c + 1) ** 3


@given(st.integers(min_value=0, max_value=10**18))
def test_ceil_sqrt_property(n):
    r = ceil_sqrt(n)
    assert (r - 1) ** 2 < n <= r * r or (n == 0 and r == 0)


def test_grid_invariants():
    for n in (4, 6, 8, 27, 100, 512, 2**12, 2**15, 2**18, 2**21):
        grids = cube_grids(n)
        assert len(grids.i_set) == grids.step == icbrt(n)
        assert all(j % grids.step == 0 for j in grids.j_set)
        assert all(0 <= j < n for j in grids.j_set)
        assert len(grids.j_set) == (n - 1) // grids.step + 1
        sg = sqrt_grids(n)
        assert sg.step == ceil_sqrt(n)
        assert all(0 <= j < n for j in sg.j_set)


def test_smallest_sizes_degenerate_to_pair_search():
    grids = cube_grids(4)
    assert grids.step == 1
    assert list(grids.i_set) == [0]
    assert len(grids.j_set) == 4


# --- offsets and fingerprints ------------------------------------------


def test_offset_count_frozen():
    assert offset_count(1024, 0.1) == 200
    assert offset_count(256, 0.25) == 64
    assert offset_count(4, 0.5) == 8


def test_offset_count_domain_errors():
    for bad_n in (0, 2, 5):
        with pytest.raises(ValueError):
            offset_count(bad_n, 0.1)
    for bad_eps in (0.0, 1.0, -0.1):
        with pytest.raises(ValueError):
            offset_count(8, bad_eps)


def test_sample_offsets_shape():
    sample = sample_offsets(1024, 0.1, random.Random(3))
    assert sample.m == 200
    assert all(0 <= p < 1024 for p in sample.offsets)


def test_fingerprint_frozen_examples():
    x = Word.from_text("01101001")
    assert left_string(x, 1, OffsetSample((1, 2))) == bytes([0, 1])
    assert left_string(x, 0, OffsetSample((1,))) == bytes([1])
    assert right_string(x, 2, OffsetSample((1, 2))) == bytes([0, 1])


def test_fingerprints_charge_m_reads():
    x = Word.from_text("01101001")
    ledger = QueryLedger()
    left_string(x, 0, OffsetSample((1, 2, 3)), ledger)
    right_string(x, 0, OffsetSample((1, 2, 3, 4)), ledger)
    assert ledger.classical_reads == 7


def test_uniform_word_fingerprints_uniform():
    x = Word.from_text("0000")
    sample = OffsetSample((0, 1, 2, 3, 1))
    assert left_string(x, 2, sample) == bytes(5)
    assert right_string(x, 2, sample) == bytes(5)


# --- completeness ------------------------------------------------------


def test_member_grid_pair_exists_and_collides():
    rng = random.Random(61)
    for n in range(4, 17, 2):
        grids = cube_grids(n)
        for w, a in member_constructions(n):
            target = 2 * a - 1
            beta = target % grids.step
            j = target - beta
            assert beta in grids.i_set
            assert j in grids.j_set
            assert beta + j == target
            for _ in range(3):
                sample = OffsetSample(tuple(rng.randrange(n) for _ in range(8)))
                assert left_string(w, beta, sample) == right_string(w, j, sample)


def test_classical_accepts_every_member():
    for n in (4, 6, 8, 10, 12):
        for w in member_words(n):
            assert classical_test(w, 0.3, random.Random(n)).accept


def test_quantum_accepts_members_mostly():
    accepted = 0
    for seed in range(100):
        rng = random.Random(seed)
        half_u = rng.randint(1, 511)
        w = gen_member(half_u, 512 - half_u, rng)
        accepted += quantum_test(w, 0.1, rng).accept
    # the only loss is the simulated search's error, at most 0.1 per trial
    assert accepted >= 95


def test_found_pair_collides_on_the_sampled_offsets():
    hits = 0
    for seed in range(30):
        gen_rng = random.Random(seed)
        half_u = gen_rng.randint(1, 127)
        w = gen_member(half_u, 128 - half_u, gen_rng)
        # the tester draws its offsets first, so a cloned rng reproduces them
        expected = sample_offsets(256, 0.2, random.Random(1000 + seed))
        verdict = quantum_test(w, 0.2, random.Random(1000 + seed))
        if verdict.accept:
            hits += 1
            i, j = verdict.found_pair
            grids = cube_grids(256)
            assert i in grids.i_set and j in grids.j_set
            assert left_string(w, i, expected) == right_string(w, j, expected)
    assert hits >= 27


def test_classical_found_pair_collides():
    w = gen_member(37, 91, random.Random(3))  # n = 256
    expected = sample_offsets(256, 0.2, random.Random(4))
    verdict = classical_test(w, 0.2, random.Random(4))
    assert verdict.accept
    i, j = verdict.found_pair
    assert left_string(w, i, expected) == right_string(w, j, expected)


# --- soundness ---------------------------------------------------------


def test_testers_reject_certified_far_words():
    for seed in range(60):
        rng = random.Random(1000 + seed)
        w = gen_far(256, 0.15, rng)
        assert not quantum_test(w, 0.15, rng).accept
        assert not classical_test(w, 0.15, rng).accept


def test_far_pair_collision_frequency():
    # fixed certified far word, fresh offset samples: a grid pair should
    # almost never agree on every shift (bound (1-eps)^m per valid pair)
    n, eps = 256, 0.25
    flip_rng = random.Random(53)
    base = bytearray(i % 2 for i in range(n))
    for pos in flip_rng.sample(range(n), 40):
        base[pos] ^= 1
    w = Word(bytes(base))
    assert distance_to_language(w).distance >= far_threshold(eps, n)

    m = offset_count(n, eps)
    grids = cube_grids(n)
    i_values = np.array(list(grids.i_set))
    j_values = np.array(list(grids.j_set))
    samples = 10_000
    shift_rng = np.random.default_rng(59)
    shifts = shift_rng.integers(0, n, size=(samples, m))
    arr = np.frombuffer(w.symbols, dtype=np.uint8)
    lefts = arr[(i_values[:, None, None] - shifts[None, :, :]) % n]
    rights = arr[(j_values[:, None, None] + shifts[None, :, :]) % n]

    # tie the vectorized replica to the real fingerprint functions
    for s_idx in (0, 17, 4096):
        sample = OffsetSample(tuple(int(p) for p in shifts[s_idx]))
        for idx, i in enumerate(i_values[:3]):
            assert bytes(lefts[idx, s_idx]) == left_string(w, int(i), sample)
        for idx, j in enumerate(j_values[:3]):
            assert bytes(rights[idx, s_idx]) == right_string(w, int(j), sample)

    collisions = 0
    for idx in range(len(i_values)):
        collisions += int((lefts[idx][None, :, :] == rights).all(axis=2).sum())
    pair_count = len(i_values) * len(j_values)
    mean_frequency = collisions / (pair_count * samples)
    assert mean_frequency <= 3.0 / n**2


# --- verdict plumbing --------------------------------------------------


def test_domain_errors():
    rng = random.Random(0)
    for text in ("01", "010", "01010"):
        with pytest.raises(ValueError):
            quantum_test(Word.from_text(text), 0.1, rng)
        with pytest.raises(ValueError):
            classical_test(Word.from_text(text), 0.1, rng)
    with pytest.raises(ValueError):
        quantum_test(Word.from_text("0110"), 1.0, rng)


def test_quantum_ledger_accounting():
    w = gen_member(100, 412, random.Random(71))
    verdict = quantum_test(w, 0.1, random.Random(73))
    m = offset_count(1024, 0.1)
    ledger = verdict.ledger
    assert ledger.classical_reads == cube_grids(1024).step * m
    assert ledger.quantum_charged == ledger.predicate_calls * m
    assert ledger.total_charged == ledger.classical_reads + ledger.quantum_charged


def test_classical_ledger_full_scan_cost():
    far = gen_far(1024, 0.1, random.Random(79))
    verdict = classical_test(far, 0.1, random.Random(81))
    assert not verdict.accept
    grids = sqrt_grids(1024)
    m = offset_count(1024, 0.1)
    assert verdict.ledger.classical_reads == (grids.step + len(grids.j_set)) * m
    assert verdict.ledger.classical_reads == 12800
    assert verdict.ledger.quantum_charged == 0


def test_promise_violating_input_still_returns_verdict():
    # neither a member nor far: the verdict is recorded, nothing is promised
    w = gen_gamma(20, 3)
    assert 0 < distance_to_language(w).distance < far_threshold(0.2, 20)
    for seed in range(5):
        assert quantum_test(w, 0.2, random.Random(seed)).accept in (True, False)
        assert classical_test(w, 0.2, random.Random(seed)).accept in (True, False)


def test_tiny_members_accepted():
    for n in (4, 6):
        w = gen_member(1, n // 2 - 1, random.Random(5))
        assert classical_test(w, 0.5, random.Random(6)).accept
        assert quantum_test(w, 0.5, random.Random(7)).accept
