"""Bound driver, closed-form evaluators, and best-known aggregation."""
from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import ceil_frac
from seshadri.bounds import (
    all_formula_bounds,
    best_known,
    bounds_for_ns,
    compute_bound,
    formula_correm_and_circ,
    formula_theoremone,
    lemcc_hypothesis,
    mu_n,
    theoremone_weak_c,
    theoremone_weak_d,
    theoremunif_hypothesis,
)
from seshadri.candidates import e_value, enumerate_szcor
from seshadri.exclusions import default_db, is_excluded
from seshadri.lattice import DomainError, QuadraticExpr, is_square, sign_of

Q = Fraction


def nonsquares(lo, hi):
    return [n for n in range(lo, hi + 1) if not is_square(n)]


class TestComputeBound:
    def test_ten_points_with_full_database(self):
        rep = compute_bound(10)
        assert rep.f == Q(313600, 310)
        assert rep.mu == Q(313600, 3100)
        assert (rep.blocker.t, rep.blocker.m, rep.blocker.k) == (177, 56, 0)
        assert not rep.budget_limited
        used = {(c.t, c.m, c.k): reason for c, reason in rep.exclusions_used}
        assert used[(79, 25, 0)] == "Miranda"
        assert used[(22, 7, 0)] == "CCMO"
        assert (6, 2, -1) in used

    def test_ten_points_without_miranda(self):
        db = default_db().with_sources(disable=("Miranda",))
        rep = compute_bound(10, db=db)
        assert rep.f == Q(62500, 90)
        assert (rep.blocker.t, rep.blocker.m, rep.blocker.k) == (79, 25, 0)

    def test_eleven_points(self):
        rep = compute_bound(11)
        assert rep.f == Q(123904, 308)
        assert (rep.blocker.t, rep.blocker.m, rep.blocker.k) == (106, 32, 0)

    def test_square_points_rejected(self):
        for n in (16, 25, 49):
            with pytest.raises(DomainError):
                compute_bound(n)

    def test_small_n_rejected(self):
        with pytest.raises(DomainError):
            compute_bound(9)

    def test_budget_limited_report(self):
        rep = compute_bound(10, m_budget_cap=5)
        assert rep.budget_limited
        assert rep.blocker is None
        assert rep.mu == 6 and rep.f == 60
        assert rep.coverage.m_checked_k0 == 5

    def test_budget_limited_with_survivor(self):
        # cap below the blocker's own e: the bound is the covered level
        rep = compute_bound(10, m_budget_cap=30)
        assert rep.budget_limited
        assert rep.mu == 31 and rep.f == 310

    def test_coverage_certificate(self):
        # for a sample of n: coverage bounds, blocker consistency, and the
        # completeness of the exclusion list below the certified level
        db = default_db()
        for n in nonsquares(10, 50):
            rep = compute_bound(n, db=db)
            assert not rep.budget_limited, n
            mu = rep.mu
            assert rep.coverage.m_checked_k0 >= ceil_frac(mu.numerator, mu.denominator) - 1
            knz_need = ceil_frac(mu.numerator, mu.denominator * (n - 1)) - 1
            assert rep.coverage.m_checked_knz >= knz_need
            assert mu == e_value(rep.blocker).e
            excluded = {(c.t, c.m, c.k) for c, _ in rep.exclusions_used}
            for c in enumerate_szcor(n, rep.coverage.m_checked_k0):
                ev = e_value(c)
                if ev.e < mu:
                    assert (c.t, c.m, c.k) in excluded, (n, c)
                    assert is_excluded(c, rep.cfg, db).excluded, (n, c)

    def test_database_monotonicity(self):
        # enabling more exclusions never decreases the certified f
        base = default_db()
        richer = base.with_sources(enable=("Dumnicki",))
        for n in (10, 14, 19, 23, 30):
            assert compute_bound(n, db=richer).f >= compute_bound(n, db=base).f

    def test_parallel_map_matches_serial(self):
        ns = [10, 11, 12, 13, 14]
        serial = bounds_for_ns(ns, jobs=1)
        parallel = bounds_for_ns(ns, jobs=2)
        assert serial == parallel


class TestCaseFormulas:
    def test_delta_one(self):
        bounds = {fb.name: fb for fb in formula_theoremone(17)}
        assert bounds["theoremone-a"].applicable
        assert bounds["theoremone-a"].value == 1089

    def test_delta_two(self):
        bounds = {fb.name: fb for fb in formula_theoremone(11)}
        assert bounds["theoremone-b"].applicable
        assert bounds["theoremone-b"].value == 110

    def test_large_odd_delta(self):
        bounds = {fb.name: fb for fb in formula_theoremone(77)}
        assert bounds["theoremone-e"].applicable
        assert bounds["theoremone-e"].value == 5929
        # delta = 13 is also odd and > 2, so the generic odd case applies too
        assert bounds["theoremone-c"].applicable

    def test_gate_of_large_odd_delta_is_exact(self):
        # n = 94 has delta = 13 but (13-1)^4 = 20736 < 256*94 = 24064
        bounds = {fb.name: fb for fb in formula_theoremone(94)}
        assert not bounds["theoremone-e"].applicable

    def test_top_delta(self):
        bounds = {fb.name: fb for fb in formula_theoremone(14)}
        assert bounds["theoremone-f"].applicable
        v = bounds["theoremone-f"].value
        assert isinstance(v, QuadraticExpr)
        # n(n*sqrt(n) - 5n + 5*sqrt(n) - 1)/2 at n = 14: -497 + 133*sqrt(14)
        assert v.a == -497 and v.b == 133 and v.q == 14

    def test_squares_give_empty_list(self):
        assert formula_theoremone(16) == []

    def test_stronger_beats_weaker_everywhere(self):
        from math import isqrt

        for n in nonsquares(10, 999):
            d = isqrt(n)
            delta = n - d * d
            if delta > 2 and delta % 2 == 1:
                w = theoremone_weak_c(n)
                diff = QuadraticExpr(Q(n * (d * (d - 3) + 1)) - w.a, -w.b, w.q)
                assert sign_of(diff) >= 0, n
            if delta > 3 and delta % 2 == 0:
                w = theoremone_weak_d(n)
                diff = QuadraticExpr(Q(n * (d * (d - 3) + 2), 2) - w.a, -w.b, w.q)
                assert sign_of(diff) >= 0, n

    def test_uniform_consequences(self):
        vals = {fb.name: fb.value for fb in formula_correm_and_circ(10)}
        assert vals["correm-21"] == 168
        assert vals["circ"] == 210
        assert vals["correm-42"] == 336

    def test_uniform_quadratic_exact_at_square(self):
        vals = {fb.name: fb.value for fb in formula_correm_and_circ(100)}
        quad = vals["correm-quad"]
        assert sign_of(QuadraticExpr(quad.a - 2500, quad.b, quad.q)) == 0


class TestExplicitMu:
    def test_golden_values(self):
        assert mu_n(47) == 71
        assert mu_n(18) == 3

    def test_domain(self):
        with pytest.raises(DomainError):
            mu_n(16)
        with pytest.raises(DomainError):
            mu_n(25)
        with pytest.raises(DomainError):
            mu_n(15)

    def test_certifies_its_own_hypothesis_up_to_999(self):
        for n in range(17, 1000):
            if is_square(n):
                continue
            assert lemcc_hypothesis(n, mu_n(n)), n


class TestHypothesisCheckers:
    def test_level_one_always_holds(self):
        for n in (10, 11, 26, 99):
            assert lemcc_hypothesis(n, 1) is True

    def test_golden_pair(self):
        assert lemcc_hypothesis(47, 71) is True

    def test_small_levels_always_pass_the_uniform_variant(self):
        for n in nonsquares(10, 99):
            assert theoremunif_hypothesis(n, 6 * (n - 1)) is True

    def test_out_of_range_level(self):
        with pytest.raises(DomainError):
            lemcc_hypothesis(10, 0)
        with pytest.raises(DomainError):
            lemcc_hypothesis(10, 10 * 9 + 1)
        with pytest.raises(DomainError):
            theoremunif_hypothesis(10, 1000)

    def test_square_n_rejected(self):
        with pytest.raises(DomainError):
            lemcc_hypothesis(16, 5)


class TestBestKnown:
    def test_reference_value_for_41(self):
        rep = compute_bound(41)
        bk = best_known(41, rep)
        assert bk.f_best == 1025

    def test_delta_one_formula_and_reference_agree_at_17(self):
        rep = compute_bound(17)
        bk = best_known(17, rep)
        assert bk.f_best == 1089

    def test_algorithm_wins_at_10(self):
        rep = compute_bound(10)
        bk = best_known(10, rep)
        assert bk.f_best == Q(313600, 310)
        assert bk.source == "algorithm"

    def test_dumnicki_formula_respects_database_switch(self):
        rep = compute_bound(41)
        enabled = default_db().with_sources(enable=("Dumnicki",))
        assert best_known(41, rep).f_best == 1025
        assert best_known(41, rep, enabled).f_best == 42 * 39

    def test_all_formula_bounds_names(self):
        names = {fb.name for fb in all_formula_bounds(17)}
        assert {"theoremone-a", "correm-21", "correm-42", "correm-quad",
                "circ", "lemcc", "reference-table"} <= names