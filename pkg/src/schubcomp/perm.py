"""Permutations in one-line notation, their codes, and pattern statistics.

A permutation of S_n is a tuple of the values 1..n, 1-indexed everywhere:
``w = (2, 5, 1, 4, 3)`` means w(1) = 2, w(2) = 5, and so on.  All functions
treat permutations as immutable values and return new tuples.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple[int, ...]
Vec = tuple[int, ...]


class InvalidCodeError(ValueError):
    """Raised when a vector cannot be the inversion code of any permutation."""


def check_perm(w: Sequence[int]) -> Perm:
    """Validate one-line notation and return it as a tuple.

    >>> check_perm([2, 1])
    (2, 1)
    >>> check_perm((1, 3, 3))
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..3: (1, 3, 3)
    """
    t = tuple(w)
    if sorted(t) != list(range(1, len(t) + 1)):
        raise ValueError(f"not a permutation of 1..{len(t)}: {t}")
    return t


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_perm(n: int) -> Perm:
    """The longest element n, n-1, ..., 1 of S_n."""
    return tuple(range(n, 0, -1))


def is_identity(w: Perm) -> bool:
    return all(v == i + 1 for i, v in enumerate(w))


def inverse(w: Perm) -> Perm:
    """Inverse permutation: position of each value.

    >>> inverse((2, 5, 1, 4, 3))
    (3, 1, 5, 4, 2)
    """
    out = [0] * len(w)
    for pos, val in enumerate(w):
        out[val - 1] = pos + 1
    return tuple(out)


def multiply(u: Perm, v: Perm) -> Perm:
    """Group product u * v, i.e. the function i -> u(v(i))."""
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return tuple(u[x - 1] for x in v)


def complement_perm(w: Perm) -> Perm:
    """The reverse-complement w^c with entries n + 1 - w(i).

    >>> complement_perm((2, 1, 3))
    (2, 3, 1)
    """
    n = len(w)
    return tuple(n + 1 - x for x in w)


def swap_positions(w: Perm, i: int) -> Perm:
    """Right multiplication w * s_i: exchange positions i and i + 1 (1-indexed)."""
    if not 1 <= i < len(w):
        raise ValueError(f"adjacent transposition index {i} out of range for n={len(w)}")
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def swap_values(w: Perm, i: int) -> Perm:
    """Left multiplication s_i * w: exchange the values i and i + 1."""
    if not 1 <= i < len(w):
        raise ValueError(f"adjacent transposition index {i} out of range for n={len(w)}")
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def length(w: Perm) -> int:
    """Number of inversions, which is the Coxeter length.

    >>> length((3, 2, 1))
    3
    """
    return sum(inversion_code(w))


def descents(w: Perm) -> tuple[int, ...]:
    """Right descent positions: i with w(i) > w(i + 1)."""
    return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def left_descents(w: Perm) -> tuple[int, ...]:
    """Values i such that i + 1 occurs before i in w (descents of the inverse)."""
    pos = [0] * (len(w) + 2)
    for p, val in enumerate(w):
        pos[val] = p
    return tuple(i for i in range(1, len(w)) if pos[i + 1] < pos[i])


def inversion_code(w: Perm) -> Vec:
    """Lehmer code: entry i counts the j > i with w(j) < w(i).

    >>> inversion_code((2, 5, 1, 4, 3))
    (1, 3, 0, 1, 0)
    >>> inversion_code((1, 2, 3))
    (0, 0, 0)
    """
    n = len(w)
    return tuple(
        sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n)
    )


def is_valid_code(v: Sequence[int]) -> bool:
    """True when 0 <= v_i <= n - i, the exact image of the Lehmer code on S_n."""
    n = len(v)
    return all(0 <= v[i] <= n - 1 - i for i in range(n))


def code_to_perm(code: Sequence[int]) -> Perm:
    """Invert the Lehmer code.

    Entry i of the code selects the (code_i + 1)-th smallest value not used yet.

    >>> code_to_perm((1, 3, 0, 1, 0))
    (2, 5, 1, 4, 3)
    >>> code_to_perm((2, 1, 0))
    (3, 2, 1)
    """
    v = tuple(code)
    if not is_valid_code(v):
        raise InvalidCodeError(f"not a Lehmer code: {v}")
    remaining = list(range(1, len(v) + 1))
    out = []
    for c in v:
        out.append(remaining.pop(c))
    return tuple(out)


def conjugate(v: Sequence[int]) -> Vec:
    """Transpose of the Young diagram of v, reading column heights.

    Entry i of the result counts the j with v_j >= i.  The output keeps the
    input length, which loses nothing as long as max(v) <= len(v), the case
    for every Lehmer code.

    >>> conjugate((2, 0, 2, 1, 0))
    (3, 2, 0, 0, 0)
    >>> conjugate((3, 2, 1, 0))
    (3, 2, 1, 0)
    """
    n = len(v)
    return tuple(sum(1 for x in v if x >= i) for i in range(1, n + 1))


def lr_vectors(w: Perm) -> tuple[Vec, Vec]:
    """Per-position counts (L, R) of smaller and larger entries to the left.

    L_i counts j < i with w(j) < w(i); R_i counts j < i with w(j) > w(i).
    Always L_i + R_i = i - 1.

    >>> lr_vectors((4, 2, 6, 3, 1, 5))
    ((0, 0, 2, 1, 0, 4), (0, 1, 0, 2, 4, 1))
    """
    n = len(w)
    left = tuple(sum(1 for j in range(i) if w[j] < w[i]) for i in range(n))
    right = tuple(sum(1 for j in range(i) if w[j] > w[i]) for i in range(n))
    return left, right


def contains_pattern(w: Perm, p: Perm) -> bool:
    """Does w contain a subsequence order-isomorphic to the pattern p?"""
    n, k = len(w), len(p)
    if k > n:
        return False
    chosen: list[int] = []

    def extend(start: int) -> bool:
        t = len(chosen)
        if t == k:
            return True
        for j in range(start, n - (k - t) + 1):
            if all((w[j] > w[c]) == (p[t] > p[i]) for i, c in enumerate(chosen)):
                chosen.append(j)
                if extend(j + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def avoids(w: Perm, p: Perm) -> bool:
    """True when no subsequence of w is order-isomorphic to p.

    >>> avoids((2, 5, 1, 4, 3), (1, 3, 2))
    False
    >>> avoids((3, 1, 2), (1, 3, 2))
    True
    """
    return not contains_pattern(w, p)


def is_rearrangement(u: Sequence[int], v: Sequence[int]) -> bool:
    """True when u and v agree as multisets."""
    return sorted(u) == sorted(v)


def strip_fixed_tail(w: Perm) -> Perm:
    """Drop trailing fixed points, keeping at least one entry.

    >>> strip_fixed_tail((2, 1, 3, 4))
    (2, 1)
    >>> strip_fixed_tail((1, 2))
    (1,)
    """
    n = len(w)
    while n > 1 and w[n - 1] == n:
        n -= 1
    return w[:n]


def pad_perm(w: Perm, n: int) -> Perm:
    """Embed w into S_n by appending fixed points."""
    if n < len(w):
        raise ValueError(f"cannot shrink a permutation of S_{len(w)} to S_{n}")
    return w + tuple(range(len(w) + 1, n + 1))


def all_perms(n: int) -> Iterable[Perm]:
    """All of S_n in lexicographic order."""
    import itertools

    return itertools.permutations(range(1, n + 1))


def parse_perm(text: str) -> Perm:
    """Parse one-line notation: compact digits up to n = 9, commas beyond.

    >>> parse_perm("25143")
    (2, 5, 1, 4, 3)
    >>> parse_perm("10,2,1,3,4,5,6,7,8,9")[0]
    10
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    try:
        if "," in text:
            parts = tuple(int(t) for t in text.split(","))
        else:
            parts = tuple(int(ch) for ch in text)
    except ValueError:
        raise ValueError(f"cannot parse permutation: {text!r}") from None
    return check_perm(parts)


def format_perm(w: Perm) -> str:
    """Inverse of parse_perm.

    >>> format_perm((2, 5, 1, 4, 3))
    '25143'
    """
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def format_vec(v: Sequence[int]) -> str:
    """Render an exponent or code vector as '(1,3,0,1,0)'."""
    return "(" + ",".join(str(x) for x in v) + ")"


def parse_vec(text: str) -> Vec:
    """Parse a comma-separated vector, with or without surrounding parens."""
    text = text.strip().strip("()")
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse vector: {text!r}") from None
