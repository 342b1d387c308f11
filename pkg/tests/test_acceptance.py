"""Acceptance gate: one test per shipped criterion, each with its time budget.

Every test prints one line, `criterion NN PASS/FAIL in <t>s (budget <b>s)`,
and fails if the checked statement breaks or the budget is exceeded.  The
budgets are deliberately loose; on current hardware the whole module runs
in well under a minute.
"""

import math
import random
import time
from contextlib import contextmanager

from schubcomp.complement import complement_delta, padded_schubert
from schubcomp.perm import all_perms, avoids
from schubcomp.poly import Poly, eval_ones_prefix, revlex_compare
from schubcomp.rc import all_rc_graphs, apply_ladder, ladder_moves, rc_weight
from schubcomp.schubert import (
    clear_memo,
    divided_difference,
    schubert,
    schubert_bjs,
    schubert_dd,
    schubert_rc,
)
from schubcomp.verify import (
    CLAIMS,
    SweepConfig,
    run_claim,
    verify_basis,
    verify_conjecture_1432,
    verify_conjecture_partition,
    verify_extremal,
    verify_involution,
    verify_methods_agree,
    verify_rearrangement,
    verify_theorem_main,
    verify_1432_shifts,
)

EXPECTED_1432 = Poly(
    4,
    {
        (2, 1, 0, 0): 1,
        (2, 0, 1, 0): 1,
        (1, 2, 0, 0): 1,
        (1, 1, 1, 0): 1,
        (0, 2, 1, 0): 1,
    },
)


@contextmanager
def budget(num: int, seconds: float):
    t0 = time.perf_counter()
    failed = True
    try:
        yield
        failed = False
    finally:
        elapsed = time.perf_counter() - t0
        ok = not failed and elapsed < seconds
        print(f"criterion {num:02d} {'PASS' if ok else 'FAIL'} "
              f"in {elapsed:.2f}s (budget {seconds:g}s)")
    assert elapsed < seconds, f"time budget exceeded: {elapsed:.2f}s >= {seconds}s"


def green(report, total=None):
    assert report.failed == 0 and report.counterexamples == []
    assert report.passed == report.total
    if total is not None:
        assert report.total == total
    return report


def test_criterion_01_quartic_example_three_ways():
    clear_memo()
    with budget(1, 1.0):
        assert schubert_dd((1, 4, 3, 2)) == EXPECTED_1432
        assert schubert_bjs((1, 4, 3, 2)) == EXPECTED_1432
        assert schubert_rc((1, 4, 3, 2)) == EXPECTED_1432


def test_criterion_02_method_agreement_s5_s6():
    with budget(2, 30.0):
        green(verify_methods_agree(5), total=120)
    with budget(2, 600.0):
        green(verify_methods_agree(6), total=720)


def test_criterion_03_main_theorem_with_success_counts():
    with budget(3, 600.0):
        for n, successes in [(3, 4), (4, 8), (5, 16), (6, 32)]:
            green(verify_theorem_main(n), total=math.factorial(n))
            found = sum(
                1 for w in all_perms(n) if complement_delta(w)[1] is not None
            )
            assert found == successes == 2 ** (n - 1)


def test_criterion_04_extremal_exponents_s6():
    with budget(4, 600.0):
        green(verify_extremal(6), total=720)


def test_criterion_05_rearrangement_up_to_s7():
    with budget(5, 60.0):
        for n in range(1, 8):
            report = green(verify_rearrangement(n))
        assert report.total == 429 ** 2 == 184_041


def test_criterion_06_involution_up_to_s7():
    with budget(6, 10.0):
        for n in range(1, 8):
            green(verify_involution(n), total=math.factorial(n))


def test_criterion_07_partition_conjecture_to_s6():
    cfg = SweepConfig(jobs=8)
    with budget(7, 1800.0):
        for n in range(1, 7):
            report = green(
                verify_conjecture_partition(n, cfg),
                total=math.factorial(n) ** 2,
            )
        assert report.total == 518_400


def test_criterion_08_quartic_pattern_conjecture_to_s6():
    cfg = SweepConfig(jobs=8)
    with budget(8, 1800.0):
        for n in range(4, 7):
            containers = sum(
                1 for w in all_perms(n) if not avoids(w, (1, 4, 3, 2))
            )
            green(
                verify_conjecture_1432(n, cfg),
                total=math.factorial(n) * containers,
            )
        assert containers == 207


def test_criterion_09_no_shift_makes_quartic_blocker_schubert():
    with budget(9, 60.0):
        green(verify_1432_shifts(4), total=5 ** 5)


def test_criterion_10_complement_basis_ranks():
    with budget(10, 10.0):
        green(verify_basis(3))
        green(verify_basis(4))


def _random_poly(rng, nvars=4, max_exp=4, max_terms=6):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        terms[e] = rng.randint(-5, 5)
    return Poly(nvars, terms)


def test_criterion_11_property_suites():
    with budget(11, 120.0):
        rng = random.Random(29)
        for _ in range(100):
            f = _random_poly(rng)
            d1 = lambda g: divided_difference(g, 1)
            d2 = lambda g: divided_difference(g, 2)
            d3 = lambda g: divided_difference(g, 3)
            assert d1(d3(f)) == d3(d1(f))
            assert d1(d2(d1(f))) == d2(d1(d2(f)))
            assert d1(d1(f)) == Poly(4, {})

        for w in all_perms(5):
            for d in all_rc_graphs(w):
                before = rc_weight(d)
                for move in ladder_moves(d):
                    after = rc_weight(apply_ladder(d, move))
                    assert revlex_compare(after, before) == -1

        for n in range(1, 6):
            for w in all_perms(n):
                assert eval_ones_prefix(padded_schubert(w), n) == complement_delta(w)[0]


def test_criterion_12_reports_identical_one_vs_eight_workers():
    cases = [
        ("theorem1", 5), ("extremal", 5), ("code-lemma", 5),
        ("rearrangement", 5), ("involution", 5), ("conj1", 5),
        ("conj2", 5), ("thm1432", 2), ("basis", 4), ("methods", 5),
    ]
    with budget(12, 300.0):
        for claim, n in cases:
            solo = run_claim(claim, n, SweepConfig(jobs=1))
            team = run_claim(claim, n, SweepConfig(jobs=8))
            assert solo.to_json(0.0) == team.to_json(0.0), (claim, n)
            green(solo)
