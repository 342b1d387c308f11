import itertools

import pytest
from hypothesis import given, settings, strategies as st

from schubcomp.complement import (
    NotAPolynomialError,
    QUARTIC_BLOCKER,
    complement,
    complement_delta,
    exponent_ceiling,
    f_1432,
    is_schubert,
    padded_schubert,
    quotient_shift,
    staircase,
    w_star,
)
from schubcomp.perm import (
    all_perms,
    avoids,
    complement_perm,
    identity_perm,
    longest_perm,
    pad_perm,
    strip_fixed_tail,
)
from schubcomp.poly import Poly, ZeroPolynomialError, eval_ones_prefix
from schubcomp.schubert import schubert


def both_avoider(w):
    return avoids(w, (1, 3, 2)) and avoids(w, (3, 1, 2))


def positive_polys(nvars, max_exp=3, max_terms=5):
    exps = st.tuples(*([st.integers(0, max_exp)] * nvars))
    return st.dictionaries(exps, st.integers(1, 4), min_size=1, max_size=max_terms).map(
        lambda d: Poly(nvars, d)
    )


def test_staircase():
    assert staircase(5) == (4, 3, 2, 1, 0)
    assert staircase(1) == (0,)


def test_complement_examples():
    # the staircase complement of schubert(1432) is the quartic blocker
    g = complement(schubert((1, 4, 3, 2)), (2, 2, 1))
    assert g == QUARTIC_BLOCKER.pad(4)
    assert complement(Poly.one(1), (0, 0, 1)) == Poly.monomial((0, 0, 1))
    assert complement(Poly.monomial((1, 1)), (1, 1)) == Poly.one(2)
    assert complement(Poly.zero(2), (3, 3)) == Poly.zero(2)


def test_complement_pads_mu():
    f = Poly(2, {(1, 0): 1, (0, 1): 1})
    assert complement(f, (1, 1, 0)) == Poly(3, {(0, 1, 0): 1, (1, 0, 0): 1})


def test_complement_negative_exponent():
    with pytest.raises(NotAPolynomialError):
        complement(Poly.monomial((2, 0)), (1, 0))
    with pytest.raises(NotAPolynomialError):
        complement(schubert((1, 4, 3, 2)), (1, 1, 1))


@given(st.integers(1, 4).flatmap(positive_polys), st.integers(0, 2))
@settings(max_examples=60)
def test_complement_is_an_involution(f, slack):
    mu = tuple(x + slack for x in exponent_ceiling(f))
    assert complement(complement(f, mu), mu) == f


def test_exponent_ceiling():
    f = Poly(2, {(2, 0): 1, (1, 3): 4})
    assert exponent_ceiling(f) == (2, 3)
    assert exponent_ceiling(Poly.zero(3)) == (0, 0, 0)


@pytest.mark.parametrize(
    "w, expected",
    [
        ((3, 2, 1), (1, 2, 3)),
        ((2, 5, 1, 4, 3), (2, 3, 5, 4, 1)),
        ((1, 3, 2), (2, 3, 1)),
    ],
)
def test_w_star_frozen(w, expected):
    assert w_star(w) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_w_star_identity_and_longest(n):
    assert w_star(identity_perm(n)) == longest_perm(n)
    assert w_star(longest_perm(n)) == identity_perm(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_w_star_involution_iff_both_avoider(n):
    # Applying the chain twice returns to w exactly on the 132- and
    # 312-avoiders, and on those one application gives w^c.
    for w in all_perms(n):
        assert (w_star(w_star(w)) == w) == both_avoider(w)
        if both_avoider(w):
            assert w_star(w) == complement_perm(w)


def test_is_schubert_examples():
    assert is_schubert(Poly.one(1)) == (1,)
    assert is_schubert(Poly.one(3)) == (1,)
    assert is_schubert(Poly.monomial((1, 1))) == (2, 3, 1)
    assert is_schubert(Poly(2, {(2, 0): 1, (1, 1): 1})) is None
    assert is_schubert(Poly(2, {(1, 0): 1, (0, 1): 1})) == (1, 3, 2)
    assert is_schubert(2 * Poly.one(2)) is None
    with pytest.raises(ZeroPolynomialError):
        is_schubert(Poly.zero(2))


@pytest.mark.parametrize("n", range(1, 6))
def test_is_schubert_recognizes_all(n):
    for w in all_perms(n):
        assert is_schubert(schubert(w)) == strip_fixed_tail(w)


def test_is_schubert_rejects_perturbations():
    f = schubert((2, 5, 1, 4, 3))
    bumped = f + Poly.monomial((0, 0, 0, 1, 0) )
    assert is_schubert(bumped) is None
    doubled = f + f
    assert is_schubert(doubled) is None


@pytest.mark.parametrize(
    "w, recognized",
    [
        ((3, 2, 1), (1, 2, 3)),
        ((2, 1, 3), (2, 3, 1)),
        ((1, 3, 2), None),
    ],
)
def test_complement_delta_frozen(w, recognized):
    g, v = complement_delta(w)
    assert v == recognized
    if w == (3, 2, 1):
        assert g == Poly.one(3)
    if w == (2, 1, 3):
        assert g == Poly.monomial((1, 1, 0))


@pytest.mark.parametrize("n", range(1, 6))
def test_complement_delta_theorem(n):
    hits = 0
    for w in all_perms(n):
        g, v = complement_delta(w)
        assert (v is not None) == both_avoider(w)
        if v is not None:
            hits += 1
            assert v == complement_perm(w)
            assert v == pad_perm(w_star(w), n)
    assert hits == 2 ** (n - 1)


def test_quotient_shift_examples():
    assert quotient_shift(schubert((2, 3, 1)), schubert((3, 1, 2))) == (3, 1, 0)
    assert quotient_shift(Poly.one(2), Poly.one(2)) == (0, 0)
    f = Poly(2, {(1, 0): 1, (0, 2): 1})
    g = Poly(2, {(1, 0): 1, (0, 1): 1})
    assert quotient_shift(f, g) is None
    assert quotient_shift(Poly.one(2), Poly(2, {(1, 0): 1, (0, 1): 1})) is None
    with pytest.raises(ZeroPolynomialError):
        quotient_shift(Poly.zero(2), Poly.one(2))


def test_quotient_shift_coefficient_mismatch():
    f = Poly(2, {(1, 0): 2, (0, 1): 1})
    g = Poly(2, {(1, 0): 1, (0, 1): 1})
    assert quotient_shift(f, g) is None


@given(st.integers(1, 4).flatmap(positive_polys), st.integers(0, 2))
@settings(max_examples=60)
def test_quotient_shift_inverts_complement(g, slack):
    mu = tuple(x + slack for x in exponent_ceiling(g))
    f = complement(g, mu)
    assert quotient_shift(f, g) == mu
    assert complement(g, quotient_shift(f, g)) == f


def test_quotient_shift_on_staircase_pairs():
    for n in range(2, 6):
        delta = staircase(n)
        for w in all_perms(n):
            if both_avoider(w):
                f = schubert(w)
                g = schubert(complement_perm(w))
                assert quotient_shift(f, g) == delta


def test_padded_schubert_frozen():
    f = padded_schubert((1, 3, 2))
    assert f == Poly(
        6, {(1, 0, 0, 1, 1, 0): 1, (0, 1, 0, 2, 0, 0): 1}
    )
    assert padded_schubert((1,)) == Poly.monomial((0, 0))
    g = padded_schubert(longest_perm(3))
    assert g == Poly.monomial((2, 1, 0, 0, 0, 0))


@pytest.mark.parametrize("n", range(1, 5))
def test_padded_specialization(n):
    for w in all_perms(n):
        assert eval_ones_prefix(padded_schubert(w), n) == complement_delta(w)[0]


@pytest.mark.parametrize("n", range(1, 5))
def test_padded_is_homogeneous(n):
    target = n * (n - 1) // 2
    for w in all_perms(n):
        for e, _ in padded_schubert(w).items():
            assert sum(e) == target


def test_f_1432_examples():
    assert f_1432(()) == QUARTIC_BLOCKER
    assert f_1432((1,)) == Poly(
        3,
        {(3, 0, 0): 1, (2, 1, 0): 1, (2, 0, 1): 1, (1, 2, 0): 1, (1, 1, 1): 1},
    )
    assert f_1432((0, 0, 0, 2)) == QUARTIC_BLOCKER.pad(4) * Poly.monomial((0, 0, 0, 2))
    with pytest.raises(ValueError):
        f_1432((-1,))


@pytest.mark.parametrize(
    "mu",
    list(itertools.product(range(3), repeat=2)) + [(2, 2, 1), (0, 0, 0, 3)],
)
def test_f_1432_never_schubert(mu):
    assert is_schubert(f_1432(mu)) is None
