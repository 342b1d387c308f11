"""Schubert polynomials by three independent constructions.

schubert      divided-difference recursion from the staircase monomial,
              memoized process-wide (the workhorse).
schubert_bjs  sum of x^rows over reduced words paired with compatible
              row sequences (Billey-Jockusch-Stanley), enumerated by a
              pruned depth-first search.
schubert_rc   sum of weight monomials over all RC-graphs, generated by
              ladder moves in the rc module.

All three agree on every permutation; the verification sweeps check that
exhaustively.  Divided differences are computed termwise over the integers:
for a > b, x^a y^b maps to x^b y^b times the complete homogeneous
polynomial of degree a - b - 1 in x and y, so no rational arithmetic or
polynomial division ever happens.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, Sequence

from .perm import (
    Perm,
    Vec,
    all_perms,
    descents,
    format_perm,
    identity_perm,
    inversion_code,
    is_identity,
    length,
    parse_perm,
    strip_fixed_tail,
    swap_positions,
    swap_values,
)
from .poly import Poly, dumps, leading_exponent, loads

from . import rc as _rc


def divided_difference(f: Poly, i: int) -> Poly:
    """Apply (f - f with x_i, x_{i+1} swapped) / (x_i - x_{i+1}) termwise.

    >>> from .poly import Poly
    >>> divided_difference(Poly.monomial((1, 0)), 1)
    Poly(2, {(0, 0): 1})
    >>> divided_difference(Poly.monomial((1, 1)), 1).is_zero()
    True
    >>> divided_difference(Poly.monomial((2, 1, 0)), 2)
    Poly(3, {(2, 0, 0): 1})
    """
    if not 1 <= i <= f.nvars - 1:
        raise ValueError(f"divided difference index {i} out of range for nvars={f.nvars}")
    out: dict[Vec, int] = {}
    for e, c in f.terms.items():
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, hi = (b, a) if a > b else (a, b)
        head, tail = e[: i - 1], e[i + 1 :]
        for p in range(lo, hi):
            ne = head + (p, lo + hi - 1 - p) + tail
            out[ne] = out.get(ne, 0) + sign * c
    return Poly(f.nvars, out)


def staircase_monomial(n: int) -> Poly:
    """x_1^(n-1) x_2^(n-2) ... x_{n-1}, the Schubert polynomial of n...21."""
    return Poly.monomial(tuple(range(n - 1, -1, -1)))


_MEMO: dict[Perm, Poly] = {(1,): Poly.one(1)}


def clear_memo() -> None:
    _MEMO.clear()
    _MEMO[(1,)] = Poly.one(1)


def schubert(w: Sequence[int]) -> Poly:
    """The Schubert polynomial of w in len(w) variables (cached)."""
    w = tuple(w)
    key = strip_fixed_tail(w)
    f = _MEMO.get(key)
    if f is None:
        f = _compute(key)
    return f.pad(len(w))


def _compute(v: Perm) -> Poly:
    f = _MEMO.get(v)
    if f is not None:
        return f
    i = _smallest_ascent(v)
    if i == 0:
        f = staircase_monomial(len(v))
    else:
        f = divided_difference(_compute(swap_positions(v, i)), i)
    _MEMO[v] = f
    return f


def _smallest_ascent(v: Perm) -> int:
    for i in range(1, len(v)):
        if v[i - 1] < v[i]:
            return i
    return 0


def schubert_dd(w: Sequence[int], pivot: str = "smallest") -> Poly:
    """Uncached divided-difference recursion with a selectable ascent pivot.

    The result does not depend on the pivot; tests recompute with
    pivot="largest" to confirm.
    """
    w = tuple(w)
    ascents = [i for i in range(1, len(w)) if w[i - 1] < w[i]]
    if not ascents:
        return staircase_monomial(len(w))
    i = ascents[0] if pivot == "smallest" else ascents[-1]
    return divided_difference(schubert_dd(swap_positions(w, i), pivot), i)


def iter_reduced_words(w: Perm) -> Iterator[Vec]:
    """All reduced words of w, peeling right descents."""
    if is_identity(w):
        yield ()
        return
    for i in descents(w):
        for rest in iter_reduced_words(swap_positions(w, i)):
            yield rest + (i,)


def reduced_words(w: Perm) -> set[Vec]:
    return set(iter_reduced_words(tuple(w)))


def word_to_perm(word: Sequence[int], n: int) -> Perm:
    w = identity_perm(n)
    for letter in word:
        w = swap_positions(w, letter)
    return w


def is_reduced_word(word: Sequence[int], n: int) -> bool:
    return length(word_to_perm(word, n)) == len(word)


def compatible_sequences(word: Sequence[int]) -> set[Vec]:
    """Row sequences compatible with a word: weakly increasing, strictly
    increasing across ascents, entrywise at most the word.

    >>> sorted(compatible_sequences((3, 2, 3)))
    [(1, 1, 2), (1, 1, 3), (1, 2, 3), (2, 2, 3)]
    """
    word = tuple(word)
    out: set[Vec] = set()
    cur: list[int] = []

    def rec(idx: int, prev: int) -> None:
        if idx == len(word):
            out.add(tuple(cur))
            return
        a = word[idx]
        lo = 1 if idx == 0 else prev + (1 if word[idx - 1] < a else 0)
        for t in range(lo, a + 1):
            cur.append(t)
            rec(idx + 1, t)
            cur.pop()

    rec(0, 0)
    return out


def _needs_letter_below(v: Perm, bound: int) -> bool:
    """True when every reduced word of v uses some letter < bound.

    Letter j is unavoidable exactly when v does not fix {1..j} as a set,
    i.e. when max(v_1..v_j) > j.
    """
    m = 0
    for j in range(1, bound):
        if v[j - 1] > m:
            m = v[j - 1]
        if m > j:
            return True
    return False


def iter_compatible_pairs(w: Perm) -> Iterator[tuple[Vec, Vec]]:
    """All (reduced word, compatible sequence) pairs of w.

    Words are built left to right by peeling left descents, which lets the
    row-sequence bounds prune dead branches early.
    """
    w = tuple(w)
    n = len(w)
    word: list[int] = []
    rows: list[int] = []

    def rec(v: Perm, prev_letter: int, prev_row: int) -> Iterator[tuple[Vec, Vec]]:
        if is_identity(v):
            yield tuple(word), tuple(rows)
            return
        if prev_row > 1 and _needs_letter_below(v, prev_row):
            return
        pos = [0] * (n + 1)
        for p, val in enumerate(v):
            pos[val] = p
        for i in range(1, n):
            if pos[i + 1] < pos[i]:
                lo = prev_row + (1 if prev_letter < i else 0)
                if lo > i:
                    continue
                v2 = swap_values(v, i)
                word.append(i)
                for t in range(lo, i + 1):
                    rows.append(t)
                    yield from rec(v2, i, t)
                    rows.pop()
                word.pop()

    yield from rec(w, 0, 0)


def schubert_bjs(w: Sequence[int]) -> Poly:
    """Sum of x^rows over all word/sequence pairs of w."""
    w = tuple(w)
    n = len(w)
    out: dict[Vec, int] = {}
    exp = [0] * n
    idn = identity_perm(n)

    def rec(v: Perm, prev_letter: int, prev_row: int) -> None:
        if v == idn:
            key = tuple(exp)
            out[key] = out.get(key, 0) + 1
            return
        if prev_row > 1 and _needs_letter_below(v, prev_row):
            return
        pos = [0] * (n + 1)
        for p, val in enumerate(v):
            pos[val] = p
        for i in range(1, n):
            if pos[i + 1] < pos[i]:
                lo = prev_row + (1 if prev_letter < i else 0)
                if lo > i:
                    continue
                v2 = swap_values(v, i)
                for t in range(lo, i + 1):
                    exp[t - 1] += 1
                    rec(v2, i, t)
                    exp[t - 1] -= 1

    rec(w, 0, 0)
    return Poly(n, out)


def schubert_rc(w: Sequence[int]) -> Poly:
    """Sum of weight monomials over all RC-graphs of w."""
    w = tuple(w)
    out: dict[Vec, int] = {}
    for d in _rc.all_rc_graphs(w):
        e = _rc.rc_weight(d)
        out[e] = out.get(e, 0) + 1
    return Poly(len(w), out)


METHODS = {
    "dd": lambda w: schubert(w),
    "bjs": schubert_bjs,
    "rc": schubert_rc,
}


def cache_path(directory: str | Path, n: int) -> Path:
    return Path(directory) / f"schubert_n{n}.txt"


def save_cache(n: int, directory: str | Path) -> Path:
    """Write the polynomials of all of S_n, one line per permutation."""
    path = cache_path(directory, n)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = []
    for w in all_perms(n):
        lines.append(format_perm(w) + "\t" + dumps(schubert(w), line_sep="; "))
    path.write_text("\n".join(lines) + "\n")
    return path


def load_cache(n: int, directory: str | Path) -> bool:
    """Load a cache file into the memo if present.  Returns True on success.

    Every line is validated cheaply: the permutation must belong to S_n and
    the leading exponent of its polynomial must equal its Lehmer code.
    """
    path = cache_path(directory, n)
    if not path.is_file():
        return False
    entries: dict[Perm, Poly] = {}
    for line in path.read_text().splitlines():
        if not line.strip():
            continue
        wtext, _, ptext = line.partition("\t")
        w = parse_perm(wtext)
        if len(w) != n:
            raise ValueError(f"cache {path} holds a permutation of wrong size: {wtext}")
        f = loads(ptext, line_sep="; ")
        if f.nvars != n:
            raise ValueError(f"cache {path} holds a polynomial of wrong arity")
        if leading_exponent(f) != inversion_code(w):
            raise ValueError(f"cache {path} corrupt at {wtext}")
        entries[w] = f
    if len(entries) != _factorial(n):
        raise ValueError(f"cache {path} has {len(entries)} lines, expected {_factorial(n)}")
    for w, f in entries.items():
        key = strip_fixed_tail(w)
        if any(x != 0 for e in f.terms for x in e[len(key):]):
            raise ValueError(f"cache {path} uses variables beyond the support of {format_perm(w)}")
        g = Poly(len(key), {e[: len(key)]: c for e, c in f.terms.items()})
        old = _MEMO.get(key)
        if old is not None and old != g:
            raise ValueError(f"cache {path} disagrees with computed values at {format_perm(w)}")
        _MEMO[key] = g
    return True


def _factorial(n: int) -> int:
    import math

    return math.factorial(n)


def ensure_all(n: int, cache_dir: str | Path | None = None) -> dict[Perm, Poly]:
    """Schubert polynomials for every w in S_n, in lexicographic order.

    Reads the per-n cache file when available, otherwise computes and, if a
    directory was given, writes it.
    """
    loaded = False
    if cache_dir is not None:
        loaded = load_cache(n, cache_dir)
    table = {w: schubert(w) for w in all_perms(n)}
    if cache_dir is not None and not loaded:
        save_cache(n, cache_dir)
    return table
