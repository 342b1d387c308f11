import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from schubcomp.perm import (
    all_perms,
    avoids,
    descents,
    identity_perm,
    inverse,
    inversion_code,
    length,
    longest_perm,
    pad_perm,
    swap_positions,
)
from schubcomp.poly import (
    Poly,
    dumps,
    eval_all_ones,
    leading_exponent,
    loads,
    smallest_exponent,
)
from schubcomp.perm import conjugate
from schubcomp.schubert import (
    clear_memo,
    compatible_sequences,
    divided_difference,
    ensure_all,
    is_reduced_word,
    iter_compatible_pairs,
    iter_reduced_words,
    load_cache,
    reduced_words,
    save_cache,
    schubert,
    schubert_bjs,
    schubert_dd,
    schubert_rc,
    staircase_monomial,
    word_to_perm,
)

S_1432 = Poly(
    4,
    {
        (2, 1, 0, 0): 1,
        (1, 2, 0, 0): 1,
        (2, 0, 1, 0): 1,
        (1, 1, 1, 0): 1,
        (0, 2, 1, 0): 1,
    },
)


def random_poly(rng, nvars=3, max_exp=4, max_terms=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        terms[e] = rng.randint(-6, 6)
    return Poly(nvars, terms)


def test_divided_difference_examples():
    assert divided_difference(Poly.monomial((1, 0)), 1) == Poly.one(2)
    assert divided_difference(Poly.monomial((1, 1)), 1).is_zero()
    assert divided_difference(Poly.monomial((2, 1, 0)), 2) == Poly.monomial((2, 0, 0))
    assert divided_difference(Poly.monomial((0, 2)), 1) == Poly(
        2, {(1, 0): -1, (0, 1): -1}
    )
    assert divided_difference(Poly.monomial((3, 1)), 1) == Poly(
        2, {(2, 1): 1, (1, 2): 1}
    )
    with pytest.raises(ValueError):
        divided_difference(Poly.one(2), 2)


def test_divided_difference_kills_symmetric():
    # e_2(x1, x2, x3) is symmetric, so every difference vanishes.
    e2 = Poly(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    for i in (1, 2):
        assert divided_difference(e2, i).is_zero()


def test_coxeter_relations_random():
    rng = random.Random(52)
    for _ in range(100):
        f = random_poly(rng)
        d1 = lambda g: divided_difference(g, 1)
        d2 = lambda g: divided_difference(g, 2)
        assert d1(d1(f)).is_zero()
        assert d2(d2(f)).is_zero()
        assert d1(d2(d1(f))) == d2(d1(d2(f)))


def test_coxeter_commuting_random():
    rng = random.Random(7)
    for _ in range(100):
        f = random_poly(rng, nvars=4)
        d1 = divided_difference(divided_difference(f, 1), 3)
        d2 = divided_difference(divided_difference(f, 3), 1)
        assert d1 == d2


def test_staircase_monomial():
    assert staircase_monomial(3) == Poly.monomial((2, 1, 0))
    assert staircase_monomial(1) == Poly.one(1)


def test_schubert_frozen():
    assert schubert((3, 2, 1)) == Poly.monomial((2, 1, 0))
    assert schubert((1, 3, 2)) == Poly(3, {(1, 0, 0): 1, (0, 1, 0): 1})
    assert schubert((2, 1, 3)) == Poly.monomial((1, 0, 0))
    assert schubert((1, 4, 3, 2)) == S_1432
    assert schubert(identity_perm(4)) == Poly.one(4)
    assert schubert((1,)) == Poly.one(1)


def test_schubert_three_ways_frozen():
    for f in (schubert_bjs((1, 4, 3, 2)), schubert_rc((1, 4, 3, 2)), schubert_dd((1, 4, 3, 2))):
        assert f == S_1432


@pytest.mark.parametrize("n", range(1, 6))
def test_methods_agree(n):
    for w in all_perms(n):
        f = schubert(w)
        assert schubert_bjs(w) == f
        assert schubert_rc(w) == f


@pytest.mark.parametrize("n", range(1, 6))
def test_pivot_choice_is_immaterial(n):
    for w in all_perms(n):
        assert schubert_dd(w, "smallest") == schubert_dd(w, "largest")


def test_fixed_point_padding():
    f = schubert((1, 3, 2))
    g = schubert((1, 3, 2, 4, 5))
    assert g == f.pad(5)


@pytest.mark.parametrize("n", range(2, 6))
def test_descent_recursion(n):
    # Applying the difference at a descent steps down to the shorter perm.
    for w in all_perms(n):
        for i in descents(w):
            assert divided_difference(schubert(w), i) == schubert(swap_positions(w, i))
        for i in range(1, n):
            if i not in descents(w):
                assert divided_difference(schubert(w), i).is_zero()


@pytest.mark.parametrize("n", range(1, 6))
def test_positivity_and_degree(n):
    for w in all_perms(n):
        f = schubert(w)
        deg = length(w)
        for e, c in f.items():
            assert c > 0
            assert sum(e) == deg
            assert e[-1] == 0  # x_n never appears


def test_monomial_iff_dominant():
    # One-term Schubert polynomials belong exactly to the 132-avoiders,
    # whose bottom RC-graph admits no ladder move.
    for n in range(1, 6):
        for w in all_perms(n):
            single = len(schubert(w)) == 1
            assert single == avoids(w, (1, 3, 2))


def test_reduced_words_examples():
    assert reduced_words((3, 2, 1)) == {(1, 2, 1), (2, 1, 2)}
    assert reduced_words(identity_perm(3)) == {()}
    assert reduced_words((1, 3, 2)) == {(2,)}
    words = reduced_words((1, 5, 3, 4, 2))
    assert (4, 2, 3, 2, 4) in words


@pytest.mark.parametrize("n", range(1, 6))
def test_reduced_words_are_reduced(n):
    for w in all_perms(n):
        words = reduced_words(w)
        assert len({len(a) for a in words} | {length(w)}) == 1
        for a in words:
            assert word_to_perm(a, n) == w
            assert is_reduced_word(a, n)


def test_word_count_longest_element():
    # Known counts of reduced words for the longest element.
    assert len(reduced_words(longest_perm(3))) == 2
    assert len(reduced_words(longest_perm(4))) == 16
    assert sum(1 for _ in iter_reduced_words(longest_perm(5))) == 768


def test_compatible_sequences_examples():
    assert compatible_sequences(()) == {()}
    assert compatible_sequences((1, 2)) == {(1, 2)}
    assert compatible_sequences((2, 1)) == {(1, 1)}
    assert (1, 1, 2, 2, 4) in compatible_sequences((4, 2, 3, 2, 4))
    assert compatible_sequences((1,)) == {(1,)}


def brute_compatible(word):
    """Oracle: filter every candidate row sequence."""
    if not word:
        return {()}
    out = set()
    for rows in itertools.product(*[range(1, a + 1) for a in word]):
        ok = all(rows[k] <= rows[k + 1] for k in range(len(word) - 1))
        ok = ok and all(
            rows[k] < rows[k + 1]
            for k in range(len(word) - 1)
            if word[k] < word[k + 1]
        )
        if ok:
            out.add(rows)
    return out


@pytest.mark.parametrize(
    "word",
    [(2, 1), (1, 2), (3, 2, 3), (2, 3, 1), (4, 2, 3, 2, 4), (1, 3, 2, 4)],
)
def test_compatible_against_bruteforce(word):
    assert compatible_sequences(word) == brute_compatible(word)


@pytest.mark.parametrize("n", range(1, 5))
def test_pairs_match_word_by_word(n):
    # The joint enumeration agrees with enumerating words then sequences.
    for w in all_perms(n):
        joint = set(iter_compatible_pairs(w))
        split = {
            (a, rows)
            for a in reduced_words(w)
            for rows in compatible_sequences(a)
        }
        assert joint == split


def test_bjs_from_pairs():
    for w in all_perms(4):
        f = Poly(4, {})
        for _, rows in iter_compatible_pairs(w):
            e = [0] * 4
            for r in rows:
                e[r - 1] += 1
            f = f + Poly.monomial(tuple(e))
        assert f == schubert_bjs(w)


@pytest.mark.parametrize("n", range(1, 7))
def test_extremal_exponents(n):
    for w in all_perms(n):
        f = schubert(w)
        assert leading_exponent(f) == inversion_code(w)
        assert smallest_exponent(f) == conjugate(inversion_code(inverse(w)))


def test_eval_all_ones_counts_graphs():
    from schubcomp.rc import count_rc_graphs

    for w in all_perms(4):
        assert eval_all_ones(schubert(w)) == count_rc_graphs(w)


def test_cache_roundtrip(tmp_path):
    table = ensure_all(4, cache_dir=tmp_path)
    path = tmp_path / "schubert_n4.txt"
    assert path.is_file()
    clear_memo()
    assert load_cache(4, tmp_path)
    for w, f in table.items():
        assert schubert(w) == f
    # a second ensure_all now hits the file
    assert ensure_all(4, cache_dir=tmp_path) == table


def test_cache_rejects_structural_corruption(tmp_path):
    save_cache(3, tmp_path)
    path = tmp_path / "schubert_n3.txt"
    text = path.read_text().replace("2 0 0 : 1", "0 0 2 : 1")
    path.write_text(text)
    clear_memo()
    with pytest.raises(ValueError):
        load_cache(3, tmp_path)
    clear_memo()


def test_cache_rejects_disagreement_with_memo(tmp_path):
    save_cache(3, tmp_path)
    path = tmp_path / "schubert_n3.txt"
    text = path.read_text().replace("2 1 0 : 1", "2 1 0 : 5")
    path.write_text(text)
    # The memo is warm from save_cache, so the bad coefficient is caught.
    with pytest.raises(ValueError):
        load_cache(3, tmp_path)
    clear_memo()


def test_cache_missing(tmp_path):
    assert not load_cache(5, tmp_path)


def test_ensure_all_order():
    table = ensure_all(3)
    assert list(table) == sorted(table)
    assert len(table) == 6
