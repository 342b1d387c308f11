"""RC-graphs (pipe dreams) for permutations, with ladder moves.

An RC-graph of w sits inside the staircase {(i, j) : i + j <= n + 1} of
S_n, 1-indexed with row i counted from the top.  A cross at (i, j) stands
for the letter i + j - 1.  Reading the crosses row by row from the top,
right to left inside each row, spells a reduced word of w together with the
weakly increasing sequence of row indices, and that pair determines the
graph.  Summing x^(row counts) over all RC-graphs of w gives the Schubert
polynomial of w.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import (
    Perm,
    Vec,
    identity_perm,
    inverse,
    inversion_code,
    is_identity,
    length,
    swap_positions,
)

Cross = tuple[int, int]
Move = tuple[int, int, int]


class IncompatiblePairError(ValueError):
    """Raised when a word/sequence pair does not define an RC-graph."""


class IllegalMoveError(ValueError):
    """Raised when a requested ladder move is not available."""


@dataclass(frozen=True)
class RCGraph:
    """Crosses of a pipe dream inside the staircase of S_n."""

    n: int
    crosses: frozenset[Cross]

    def __post_init__(self):
        for i, j in self.crosses:
            if i < 1 or j < 1 or i + j > self.n + 1:
                raise ValueError(f"cross {(i, j)} outside the staircase for n={self.n}")

    def __len__(self) -> int:
        return len(self.crosses)


def make_rc(n: int, crosses: Iterable[Cross]) -> RCGraph:
    return RCGraph(n, frozenset((int(i), int(j)) for i, j in crosses))


def rc_word(d: RCGraph) -> tuple[Vec, Vec]:
    """Row reading word and its row sequence, top to bottom, right to left.

    >>> rc_word(make_rc(5, [(1, 2), (1, 4), (2, 1), (2, 2), (4, 1)]))
    ((4, 2, 3, 2, 4), (1, 1, 2, 2, 4))
    """
    word: list[int] = []
    rows: list[int] = []
    for i in range(1, d.n + 1):
        cols = sorted((j for r, j in d.crosses if r == i), reverse=True)
        for j in cols:
            word.append(i + j - 1)
            rows.append(i)
    return tuple(word), tuple(rows)


def perm_of(d: RCGraph) -> Perm:
    """Product of the reading word as a permutation of S_n."""
    word, _ = rc_word(d)
    w = identity_perm(d.n)
    for letter in word:
        w = swap_positions(w, letter)
    return w


def is_rc_of(d: RCGraph, w: Perm) -> bool:
    """True when the reading word is reduced and multiplies to w."""
    return len(d.crosses) == length(w) and perm_of(d) == w


def rc_from_pair(word: Sequence[int], rows: Sequence[int], n: int | None = None) -> RCGraph:
    """Build the RC-graph of a reduced word and a compatible row sequence.

    The sequence must be weakly increasing, strictly increasing across
    ascents of the word, and bounded by the word entrywise.  The letter a
    in row i puts a cross at column a - i + 1.
    """
    word = tuple(word)
    rows = tuple(rows)
    if len(word) != len(rows):
        raise IncompatiblePairError("word and row sequence differ in length")
    if n is None:
        n = max(word) + 1 if word else 1
    for k, (a, r) in enumerate(zip(word, rows)):
        if not 1 <= a <= n - 1:
            raise IncompatiblePairError(f"letter {a} out of range for n={n}")
        if r < 1:
            raise IncompatiblePairError(f"row index {r} below 1")
        if r > a:
            raise IncompatiblePairError(f"row {r} exceeds letter {a} at position {k + 1}")
        if k > 0:
            if r < rows[k - 1]:
                raise IncompatiblePairError("row sequence not weakly increasing")
            if word[k - 1] < a and r <= rows[k - 1]:
                raise IncompatiblePairError(
                    f"row sequence not strict across the ascent at position {k}"
                )
    crosses = set()
    for a, r in zip(word, rows):
        cross = (r, a - r + 1)
        if cross in crosses:
            raise IncompatiblePairError(f"two crosses coincide at {cross}")
        crosses.add(cross)
    d = make_rc(n, crosses)
    w = identity_perm(n)
    for letter in word:
        w = swap_positions(w, letter)
    if length(w) != len(word):
        raise IncompatiblePairError("word is not reduced")
    return d


def bottom_rc(w: Perm) -> RCGraph:
    """Left-justified graph: code(w)_i crosses at the start of row i.

    >>> sorted(bottom_rc((1, 3, 2)).crosses)
    [(2, 1)]
    """
    code = inversion_code(w)
    return make_rc(len(w), [(i + 1, j + 1) for i, c in enumerate(code) for j in range(c)])


def top_rc(w: Perm) -> RCGraph:
    """Transpose of the bottom graph of the inverse permutation."""
    b = bottom_rc(inverse(w))
    return make_rc(len(w), [(j, i) for i, j in b.crosses])


def rc_weight(d: RCGraph) -> Vec:
    """Crosses per row, the exponent vector the graph contributes."""
    counts = [0] * d.n
    for i, _ in d.crosses:
        counts[i - 1] += 1
    return tuple(counts)


def ladder_moves(d: RCGraph) -> list[Move]:
    """All (i, j, h) such that the cross at (i, j) may hop to (h, j + 1).

    Legality: (i, j + 1) is empty, the rows strictly between h and i hold
    crosses in both columns j and j + 1, and row h holds neither.  Scanning
    upward from i, the first row that breaks the two-cross pattern decides:
    the move exists only when that row is empty in both columns.
    """
    out: list[Move] = []
    crosses = d.crosses
    for i, j in crosses:
        if (i, j + 1) in crosses:
            continue
        h = None
        for k in range(i - 1, 0, -1):
            left = (k, j) in crosses
            right = (k, j + 1) in crosses
            if left and right:
                continue
            if not left and not right:
                h = k
            break
        if h is not None and h + (j + 1) <= d.n + 1:
            out.append((i, j, h))
    return sorted(out)


def apply_ladder(d: RCGraph, move: Move) -> RCGraph:
    """Perform a ladder move, checking it is legal and shape preserving."""
    if move not in ladder_moves(d):
        raise IllegalMoveError(f"no ladder move {move} on this graph")
    i, j, h = move
    out = make_rc(d.n, (d.crosses - {(i, j)}) | {(h, j + 1)})
    # A legal move must land on another RC-graph of the same permutation.
    if perm_of(out) != perm_of(d):
        raise RuntimeError(f"ladder move {move} changed the permutation")
    return out


def all_rc_graphs(w: Perm) -> list[RCGraph]:
    """Every RC-graph of w, found by closing the bottom graph under moves.

    The result is in search order starting from the bottom graph; each
    discovered graph is checked to be a genuine RC-graph of w.
    """
    start = bottom_rc(w)
    if not is_rc_of(start, w):
        raise RuntimeError(f"bottom graph of {w} failed validation")
    seen = {start.crosses}
    queue = [start]
    out = []
    while queue:
        d = queue.pop()
        out.append(d)
        for move in ladder_moves(d):
            e = apply_ladder(d, move)
            if e.crosses not in seen:
                if not is_rc_of(e, w):
                    raise RuntimeError(f"ladder move {move} left the graphs of {w}")
                seen.add(e.crosses)
                queue.append(e)
    return out


def ascii_render(d: RCGraph) -> str:
    """Rows of '+' and '.' inside the staircase.

    >>> print(ascii_render(bottom_rc((2, 5, 1, 4, 3))))
    +....
    +++.
    ...
    +.
    .
    """
    lines = []
    for i in range(1, d.n + 1):
        width = d.n + 1 - i
        lines.append(
            "".join("+" if (i, j) in d.crosses else "." for j in range(1, width + 1))
        )
    return "\n".join(lines)


def count_rc_graphs(w: Perm) -> int:
    return len(all_rc_graphs(w))
