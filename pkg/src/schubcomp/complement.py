"""Complements x^mu f(1/x) of polynomials and recognition of Schubert ones.

For a polynomial f whose exponents all fit under mu, the complement
replaces each term x^alpha by x^(mu - alpha).  Applied to a Schubert
polynomial with mu the staircase (n-1, n-2, ..., 0), the result is again a
Schubert polynomial exactly when the permutation avoids the patterns 132
and 312, and then the new index is the reverse complement w^c.  The
candidate index for any such question can be read off the leading exponent
alone, which is what is_schubert exploits.
"""

from __future__ import annotations

from typing import Sequence

from .perm import (
    Perm,
    Vec,
    code_to_perm,
    complement_perm,
    conjugate,
    inverse,
    inversion_code,
    pad_perm,
)
from .poly import (
    Poly,
    ZeroPolynomialError,
    leading_exponent,
    smallest_exponent,
)
from .schubert import schubert


class NotAPolynomialError(ValueError):
    """Raised when x^mu f(1/x) has a negative exponent."""


def staircase(n: int) -> Vec:
    return tuple(range(n - 1, -1, -1))


def exponent_ceiling(f: Poly) -> Vec:
    """Entrywise maximum of the exponents, the least shift that works."""
    if f.is_zero():
        return (0,) * f.nvars
    out = [0] * f.nvars
    for e in f.terms:
        for i, x in enumerate(e):
            if x > out[i]:
                out[i] = x
    return tuple(out)


def complement(f: Poly, mu: Sequence[int]) -> Poly:
    """x^mu f(1/x), with f and mu padded to a common variable count.

    Raises NotAPolynomialError when some exponent of f sticks out of mu.
    """
    mu = tuple(mu)
    m = max(f.nvars, len(mu))
    fp = f.pad(m)
    mup = mu + (0,) * (m - len(mu))
    out: dict[Vec, int] = {}
    for e, c in fp.terms.items():
        beta = tuple(u - a for u, a in zip(mup, e))
        if any(b < 0 for b in beta):
            raise NotAPolynomialError(
                f"term exponent {e} does not fit under mu={mup}"
            )
        out[beta] = c
    return Poly(m, out)


def w_star(w: Perm) -> Perm:
    """The index whose Schubert polynomial the staircase complement targets.

    Chain: invert, take the code, transpose it, rebuild, reverse complement.
    The result equals w exactly when w avoids both 132 and 312.
    """
    return complement_perm(code_to_perm(conjugate(inversion_code(inverse(w)))))


def is_schubert(f: Poly) -> Perm | None:
    """The permutation with schubert(v) = f, or None.

    The leading exponent forces the only possible candidate: pad it to the
    least arity that makes it a Lehmer code.  The candidate's smallest
    exponent is then checked first, which settles most failures without
    expanding any polynomial.
    """
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial is not a Schubert polynomial")
    e = leading_exponent(f)
    k = len(e)
    while k and e[k - 1] == 0:
        k -= 1
    m = max([1, k] + [e[i] + i + 1 for i in range(k)])
    v = code_to_perm(e[:k] + (0,) * (m - k))
    mm = max(m, f.nvars)
    expected_small = conjugate(inversion_code(inverse(v))) + (0,) * (mm - m)
    actual_small = smallest_exponent(f) + (0,) * (mm - f.nvars)
    if expected_small != actual_small:
        return None
    if schubert(pad_perm(v, mm)) == f.pad(mm):
        return v
    return None


def complement_delta(w: Perm) -> tuple[Poly, Perm | None]:
    """Staircase complement of schubert(w) and its recognized index, if any.

    A recognized index is padded back into S_n for direct comparison
    with w^c.
    """
    n = len(w)
    g = complement(schubert(w), staircase(n))
    v = is_schubert(g)
    return g, (pad_perm(v, n) if v is not None else None)


def quotient_shift(f: Poly, g: Poly) -> Vec | None:
    """The mu with f = x^mu g(1/x), or None when no such mu exists.

    Only one candidate is possible: the complement reverses the term
    order, so mu must be leading(f) + smallest(g).  The check is a single
    pass over the support of g.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("quotient shift needs nonzero polynomials")
    m = max(f.nvars, g.nvars)
    fp, gp = f.pad(m), g.pad(m)
    if len(fp) != len(gp):
        return None
    mu = tuple(
        a + b for a, b in zip(leading_exponent(fp), smallest_exponent(gp))
    )
    for e, c in gp.terms.items():
        beta = tuple(u - a for u, a in zip(mu, e))
        if any(b < 0 for b in beta) or fp.coeff(beta) != c:
            return None
    return mu


def padded_schubert(w: Perm) -> Poly:
    """Homogenized form in 2n variables: x^alpha times y^(staircase - alpha).

    Setting the first n variables to 1 recovers the staircase complement.
    """
    n = len(w)
    delta = staircase(n)
    f = schubert(w)
    out: dict[Vec, int] = {}
    for e, c in f.terms.items():
        y = tuple(d - a for d, a in zip(delta, e))
        if any(v < 0 for v in y):
            raise RuntimeError(f"exponent {e} of schubert({w}) leaves the staircase")
        out[e + y] = c
    return Poly(2 * n, out)


QUARTIC_BLOCKER = Poly(
    3,
    {
        (2, 0, 0): 1,
        (1, 1, 0): 1,
        (1, 0, 1): 1,
        (0, 2, 0): 1,
        (0, 1, 1): 1,
    },
)


def f_1432(mu: Sequence[int]) -> Poly:
    """x^mu times the staircase complement of schubert(1432).

    These are exactly the complements x^mu S_1432(1/x) shifted into
    polynomial form; none of them is a Schubert polynomial.
    """
    mu = tuple(mu)
    if any(x < 0 for x in mu):
        raise ValueError("mu must be nonnegative")
    m = max(3, len(mu))
    shift = mu + (0,) * (m - len(mu))
    base = QUARTIC_BLOCKER.pad(m)
    return Poly(
        m,
        {tuple(a + b for a, b in zip(e, shift)): c for e, c in base.terms.items()},
    )
