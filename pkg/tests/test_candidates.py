"""Candidate enumeration, e-values, and the level filter."""
from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import brute_force_candidates
from seshadri.candidates import (
    CandidateTriple,
    almunif_filter,
    e_value,
    enumerate_szcor,
    passes_testlem,
)
from seshadri.lattice import DomainError, InvalidInput
from seshadri.tables import TABLE_A

Q = Fraction


class TestFinitenessTest:
    def test_uniform_cubic_passes(self):
        assert passes_testlem((1,) * 10, 3, 1) is True

    def test_degree_four_fails_upper_window(self):
        assert passes_testlem((1,) * 10, 4, 1) is False

    def test_all_zero_vector_rejected(self):
        with pytest.raises(InvalidInput):
            passes_testlem((0,) * 10, 3, 1)

    def test_nonpositive_delta_rejected(self):
        with pytest.raises(DomainError):
            passes_testlem((1,) * 10, 3, 0)


class TestEnumeration:
    def test_reproduces_embedded_table(self):
        cands = enumerate_szcor(10, 182)
        got = [(c.t, c.m, c.k) for c in cands]
        want = [(r.t, r.m, r.k) for r in TABLE_A]
        assert got == want

    def test_n11_contains_its_blocker(self):
        cands = enumerate_szcor(11, 32)
        assert (106, 32, 0) in [(c.t, c.m, c.k) for c in cands]

    def test_nonzero_k_candidate_satisfies_square_identity(self):
        cands = {(c.t, c.m, c.k) for c in enumerate_szcor(10, 25)}
        assert (80, 25, 3) in cands
        assert 2 * 25 * 3 == 80 * 80 - 25 * 25 * 10

    def test_matches_brute_force(self):
        for n in range(10, 21):
            got = sorted((c.t, c.m, c.k) for c in enumerate_szcor(n, 30))
            assert got == brute_force_candidates(n, 30), f"n={n}"

    def test_at_most_one_nonzero_k_per_small_m(self):
        for n in range(10, 21):
            seen = {}
            for c in enumerate_szcor(n, min(n - 1, 30)):
                if c.k != 0:
                    assert c.m not in seen, (n, c)
                    seen[c.m] = c

    def test_square_identity_for_all_small_m_outputs(self):
        for n in (10, 12, 15, 19):
            for c in enumerate_szcor(n, 40):
                if c.k != 0 and c.m < n:
                    assert c.t ** 2 - c.m ** 2 * n == 2 * c.m * c.k, c

    def test_sorted_and_deterministic(self):
        a = enumerate_szcor(13, 60)
        b = enumerate_szcor(13, 60)
        assert a == b
        assert a == sorted(a, key=CandidateTriple.sort_key)

    def test_bad_arguments(self):
        with pytest.raises(DomainError):
            enumerate_szcor(9, 10)
        with pytest.raises(DomainError):
            enumerate_szcor(10, 0)

    def test_every_output_passes_finiteness_test_at_its_own_level(self):
        # at delta = 1/(2e - 2/n), strictly inside the abnormality range
        for n in (10, 11, 13, 17, 20):
            for c in enumerate_szcor(n, 40):
                e = e_value(c).e
                delta = 1 / (2 * e - Q(2, n))
                assert passes_testlem(c.mults(), c.t, delta), (n, c)


class TestEValue:
    def test_unit_level(self):
        assert e_value(CandidateTriple(10, 3, 1, 0)).e == 1

    def test_exact_values(self):
        assert e_value(CandidateTriple(10, 6, 2, -1)).e == Q(361, 10)
        assert e_value(CandidateTriple(10, 22, 7, 0)).e == Q(49, 6)
        ev = e_value(CandidateTriple(10, 177, 56, 0))
        assert ev.e == Q(313600, 3100)
        assert ev.f == Q(313600, 310)

    def test_positive_on_all_enumerated(self):
        for n in (10, 14, 18):
            for c in enumerate_szcor(n, 50):
                ev = e_value(c)
                assert ev.e > 0 and ev.f == n * ev.e

    def test_rejects_class_on_nef_side(self):
        # 170*sqrt(19) exceeds 39*19, so this class is not abnormal
        with pytest.raises(DomainError):
            e_value(CandidateTriple(19, 170, 39, 0))


class TestLevelFilter:
    def test_blocker_level_for_ten_points(self):
        cands = enumerate_szcor(10, 182)
        mu = Q(313600, 3100)
        kept = almunif_filter(cands, mu)
        for c in kept:
            if c.k == 0:
                assert c.m <= 101
            else:
                assert c.m <= 11
        assert (154, 49, -3) not in [(c.t, c.m, c.k) for c in kept]
        assert 49 * 9 >= mu

    def test_level_one_keeps_nothing(self):
        assert almunif_filter(enumerate_szcor(10, 182), 1) == []

    def test_level_eight(self):
        kept = almunif_filter(enumerate_szcor(10, 182), 8)
        assert [(c.t, c.m, c.k) for c in kept] == [(3, 1, 0), (22, 7, 0)]

    def test_preserves_order(self):
        cands = enumerate_szcor(10, 182)
        kept = almunif_filter(cands, 200)
        assert kept == [c for c in cands if c in kept]

    def test_bad_level(self):
        with pytest.raises(DomainError):
            almunif_filter([], Q(1, 2))
