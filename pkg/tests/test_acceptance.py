"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines as they complete.  Every comparison is exact (integer polynomial
equality); the only tolerances are the stated wall-clock limits.
"""

import time
from contextlib import contextmanager

from gammapos import cli, permstat, polytopes, symfun
from gammapos.eulerian import (
    EXPQ_IDENTITIES,
    FamilyTag,
    eulerian_poly,
    q_binomial_eulerian,
    q_eulerian,
    verify_cgk,
    verify_expq_identity,
    verify_gamma_theorem,
    verify_poly_properties,
    verify_prw_cardinality,
)
from gammapos.exactpoly import GammaVector, IntPoly1, QTPoly, gamma_expand


@contextmanager
def criterion(num, name, limit_s):
    start = time.perf_counter()
    try:
        yield
    except Exception:
        elapsed = time.perf_counter() - start
        print(f"ACCEPTANCE {num:2d} {name}: FAIL ({elapsed:.2f}s)")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < limit_s
    print(f"ACCEPTANCE {num:2d} {name}: {'PASS' if ok else 'FAIL'} "
          f"({elapsed:.2f}s, limit {limit_s}s)")
    assert ok, f"runtime {elapsed:.2f}s exceeded the {limit_s}s limit"


def qt(*rows):
    return QTPoly([IntPoly1(r) for r in rows])


def test_criterion_01_printed_polynomials():
    with criterion(1, "printed polynomial reproduction", 1.0):
        assert q_eulerian(2) == qt((1,), (1,))
        assert q_eulerian(3) == qt((1,), (2, 1, 1), (1,))
        assert q_eulerian(4) == qt((1,), (3, 2, 3, 2, 1), (3, 2, 3, 2, 1), (1,))
        assert q_binomial_eulerian(2) == qt((1,), (2, 1), (1,))
        assert q_binomial_eulerian(3) == qt((1,), (3, 2, 2), (3, 2, 2), (1,))
        assert eulerian_poly(5) == IntPoly1((1, 26, 66, 26, 1))


def test_criterion_02_gamma_of_a5():
    with criterion(2, "gamma vector of the degree-4 Eulerian polynomial", 1.0):
        assert gamma_expand(eulerian_poly(5), 4) == GammaVector(4, (1, 22, 16))


def test_criterion_03_gamma_theorems_to_8():
    with criterion(3, "q-gamma expansions for both families, n <= 8", 30.0):
        for n in range(1, 9):
            rep = verify_gamma_theorem(FamilyTag.EULERIAN_QT, n)
            assert rep.passed, (n, rep.to_dict())
            expected = [permstat.class_inv_poly(
                permstat.eulerian_gamma_class(n, k)).to_text("q")
                for k in range((n - 1) // 2 + 1)]
            assert rep.gamma_vector == expected
            rep = verify_gamma_theorem(FamilyTag.BINOMIAL_EULERIAN_QT, n)
            assert rep.passed, (n, rep.to_dict())
            expected = [permstat.class_inv_poly(
                permstat.binomial_eulerian_gamma_class(n, k)).to_text("q")
                for k in range(n // 2 + 1)]
            assert rep.gamma_vector == expected


def test_criterion_04_derangement_gamma_corrected():
    with criterion(4, "corrected derangement gamma expansion, 2 <= n <= 8", 30.0):
        for n in range(2, 9):
            rep = verify_gamma_theorem(FamilyTag.DERANGEMENT_QT, n)
            assert rep.passed, (n, rep.to_dict())
        negative = verify_gamma_theorem(FamilyTag.DERANGEMENT_QT, 2)
        assert negative.detail["alternate_forms"]["t^k (1+t)^(n-2k)"] is False
        assert negative.detail["alternate_forms"]["t^k (1+t)^(n-2-2k)"] is False


def test_criterion_05_expq_identities():
    with criterion(5, "q-exponential generating functions at order 8", 60.0):
        for which in EXPQ_IDENTITIES:
            assert verify_expq_identity(which, 8).passed, which


def test_criterion_06_cgk_symmetry():
    with criterion(6, "binomial symmetry, integer r+s <= 8 and q-level r+s <= 7", 30.0):
        for total in range(2, 9):
            for r in range(1, total):
                assert verify_cgk(r, total - r, q_level=False).passed, (r, total - r)
        for total in range(2, 8):
            for r in range(1, total):
                assert verify_cgk(r, total - r, q_level=True).passed, (r, total - r)


def test_criterion_07_symmetric_gamma():
    with criterion(7, "symmetric gamma expansions, n <= 6, m = 6", 60.0):
        for n in range(1, 7):
            assert symfun.verify_sym_gamma("eulerian", n, 6).passed, n
            assert symfun.verify_sym_gamma("binomial-eulerian", n, 6).passed, n
        for n in range(2, 7):
            assert symfun.verify_sym_gamma("derangement", n, 6).passed, n


def test_criterion_08_gessel_word_sums():
    with criterion(8, "word sums: loop to n,m <= 4 and DP to n <= 6, m = 6", 60.0):
        for n in range(1, 5):
            for m in range(1, 5):
                assert symfun.verify_gessel_words(n, m, "loop").passed, (n, m)
        for n in range(1, 7):
            assert symfun.verify_gessel_words(n, 6, "dp").passed, n


def test_criterion_09_principal_specialization():
    with criterion(9, "principal specialization numerators, n <= 6", 60.0):
        for n in range(1, 7):
            assert symfun.verify_ps_theorems(n, n).passed, n


def test_criterion_10_symmetric_cgk_and_procesi():
    with criterion(10, "symmetric binomial symmetry and the cohomology recurrence", 30.0):
        for total in range(2, 7):
            for r in range(1, total):
                assert symfun.verify_sym_cgk(r, total - r, 6).passed, (r, total - r)
        for n in range(1, 7):
            assert symfun.verify_procesi_identity(n, n).passed, n


def test_criterion_11_polytopes():
    with criterion(11, "polytope h-polynomials, flagness, and gamma checks", 60.0):
        for n in range(1, 7):
            rep = polytopes.verify_h_identities(n)
            assert rep.passed, (n, rep.to_dict())
        for n in range(2, 7):
            K = polytopes.dual_permutohedron(n)
            assert polytopes.is_flag(K)
            assert polytopes.gal_check(K, n - 1).passed, n
        for n in range(1, 6):
            K = polytopes.dual_stellohedron(n)
            assert polytopes.is_flag(K)
            assert polytopes.gal_check(K, n).passed, n
        for n in range(1, 6):
            K = polytopes.cross_polytope_boundary(n)
            assert polytopes.h_polynomial(K, n) == IntPoly1((1, 1)) ** n
            assert polytopes.gal_check(K, n).passed, n


def test_criterion_12_positivity_suites():
    with criterion(12, "palindromicity/unimodality/positivity suites", 120.0):
        for n in range(1, 9):
            rep = verify_poly_properties(n)
            assert rep.passed, (n, rep.to_dict())
        for n in range(1, 7):
            rep = symfun.verify_sym_properties(n, 6)
            assert rep.passed, (n, rep.to_dict())


def test_criterion_13_prefix_class_cardinalities():
    with criterion(13, "prefix-class cardinalities, n <= 7", 30.0):
        for n in range(1, 8):
            assert verify_prw_cardinality(n).passed, n


def test_full_suite_exit_zero(capsys):
    start = time.perf_counter()
    code = cli.main(["suite", "--max-n", "8"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    with capsys.disabled():
        print(f"ACCEPTANCE 14 full suite (run-suite --max-n 8): "
              f"{'PASS' if code == 0 else 'FAIL'} ({elapsed:.2f}s, limit 600s)")
    assert code == 0, out.splitlines()[-2:]
    assert elapsed < 600.0
