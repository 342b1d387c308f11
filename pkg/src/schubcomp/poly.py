"""Exact sparse polynomials in x_1..x_n with integer coefficients.

Terms are stored as a dict mapping exponent tuples to nonzero coefficients.
The monomial order used everywhere is reverse lexicographic in the following
sense: compare two exponent vectors at the largest index where they differ,
and the one with the bigger entry there is the larger monomial.  Under this
order x_2 beats x_1, and comparing reversed tuples lexicographically gives
the same answer, which is how the keys below are built.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

Vec = tuple[int, ...]


class ZeroPolynomialError(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


def revlex_key(e: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(e))


def revlex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """-1, 0 or +1 as a is below, equal to, or above b in the term order."""
    if len(a) != len(b):
        raise ValueError("exponent length mismatch")
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x > y else -1
    return 0


class Poly:
    """Immutable-by-convention sparse polynomial over the integers."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Vec, int] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean: dict[Vec, int] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong arity for nvars={nvars}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            if not isinstance(c, int):
                raise ValueError(f"non-integer coefficient {c!r}")
            if c != 0:
                clean[tuple(e)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, e: Sequence[int], coeff: int = 1) -> "Poly":
        return cls(len(e), {tuple(e): coeff})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Poly":
        """The polynomial x_i (1-indexed)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterator[tuple[Vec, int]]:
        return iter(self.terms.items())

    def coeff(self, e: Sequence[int]) -> int:
        return self.terms.get(tuple(e), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "Poly") -> "Poly":
        self._check_arity(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_arity(other)
        out: dict[Vec, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    def scale(self, k: int) -> "Poly":
        return Poly(self.nvars, {e: k * c for e, c in self.terms.items()})

    def __rmul__(self, k: int) -> "Poly":
        if isinstance(k, int):
            return self.scale(k)
        return NotImplemented

    def pad(self, nvars: int) -> "Poly":
        """Reinterpret in a larger variable set by appending zero exponents."""
        if nvars == self.nvars:
            return self
        if nvars < self.nvars:
            raise ValueError("cannot drop variables")
        tail = (0,) * (nvars - self.nvars)
        return Poly(nvars, {e + tail: c for e, c in self.terms.items()})

    def _check_arity(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.terms!r})"

    def __str__(self) -> str:
        return pretty(self)


def sorted_terms(f: Poly) -> list[tuple[Vec, int]]:
    """Terms in descending reverse lexicographic order."""
    return sorted(f.terms.items(), key=lambda item: revlex_key(item[0]), reverse=True)


def leading_exponent(f: Poly) -> Vec:
    """Largest exponent in the term order.

    Raises ZeroPolynomialError on the zero polynomial.
    """
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial has no leading exponent")
    return max(f.terms, key=revlex_key)


def smallest_exponent(f: Poly) -> Vec:
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial has no smallest exponent")
    return min(f.terms, key=revlex_key)


def eval_all_ones(f: Poly) -> int:
    """Evaluate at x_1 = ... = x_n = 1, i.e. sum the coefficients."""
    return sum(f.terms.values())


class RatPoly:
    """Polynomial with exact rational coefficients, used for normalization."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Vec, Fraction | int] | None = None):
        clean: dict[Vec, Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong arity for nvars={nvars}")
            frac = Fraction(c)
            if frac != 0:
                clean[tuple(e)] = frac
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "RatPoly") -> "RatPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return RatPoly(self.nvars, out)

    def coeff(self, e: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def __repr__(self) -> str:
        return f"RatPoly({self.nvars}, {self.terms!r})"


def normalize_factorials(f: Poly) -> RatPoly:
    """Divide each coefficient by the product of factorials of its exponents."""
    out = {
        e: Fraction(c, _factorial_product(e)) for e, c in f.terms.items()
    }
    return RatPoly(f.nvars, out)


def _factorial_product(e: Vec) -> int:
    p = 1
    for x in e:
        p *= factorial(x)
    return p


def dumps(f: Poly, line_sep: str = "\n") -> str:
    """Canonical text form: a header then one term per line, largest first.

    >>> dumps(Poly(3, {(1, 0, 0): 2, (0, 1, 0): 1}))
    'nvars=3 terms=2\\n0 1 0 : 1\\n1 0 0 : 2'
    """
    lines = [f"nvars={f.nvars} terms={len(f.terms)}"]
    for e, c in sorted_terms(f):
        lines.append(" ".join(str(x) for x in e) + " : " + str(c))
    return line_sep.join(lines)


def loads(text: str, line_sep: str = "\n") -> Poly:
    """Inverse of dumps.  Raises ValueError on malformed input."""
    lines = [ln for ln in (s.strip() for s in text.split(line_sep)) if ln]
    if not lines:
        raise ValueError("empty polynomial text")
    header = lines[0].split()
    if (
        len(header) != 2
        or not header[0].startswith("nvars=")
        or not header[1].startswith("terms=")
    ):
        raise ValueError(f"bad header: {lines[0]!r}")
    try:
        nvars = int(header[0][6:])
        nterms = int(header[1][6:])
    except ValueError:
        raise ValueError(f"bad header: {lines[0]!r}") from None
    if len(lines) - 1 != nterms:
        raise ValueError(f"expected {nterms} term lines, got {len(lines) - 1}")
    terms: dict[Vec, int] = {}
    for ln in lines[1:]:
        head, sep, coeff_part = ln.rpartition(":")
        if not sep:
            raise ValueError(f"bad term line: {ln!r}")
        try:
            e = tuple(int(t) for t in head.split())
            c = int(coeff_part.strip())
        except ValueError:
            raise ValueError(f"bad term line: {ln!r}") from None
        if len(e) != nvars:
            raise ValueError(f"term arity mismatch in line: {ln!r}")
        if e in terms:
            raise ValueError(f"duplicate exponent {e}")
        terms[e] = c
    return Poly(nvars, terms)


def pretty(f: Poly) -> str:
    """Human-readable algebraic form, terms in descending order.

    >>> pretty(Poly(2, {(2, 1): 1, (0, 0): -3}))
    'x1^2*x2 - 3'
    """
    if f.is_zero():
        return "0"
    chunks: list[str] = []
    for e, c in sorted_terms(f):
        factors = []
        for i, p in enumerate(e):
            if p == 1:
                factors.append(f"x{i + 1}")
            elif p > 1:
                factors.append(f"x{i + 1}^{p}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not chunks:
            chunks.append(body if c > 0 else "-" + body)
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


def eval_ones_prefix(f: Poly, k: int) -> Poly:
    """Set x_1 .. x_k to 1, leaving a polynomial in the remaining variables."""
    if not 0 <= k <= f.nvars:
        raise ValueError(f"cannot drop {k} of {f.nvars} variables")
    out: dict[Vec, int] = {}
    for e, c in f.terms.items():
        ne = e[k:]
        out[ne] = out.get(ne, 0) + c
    return Poly(f.nvars - k, out)


def same_support(f: Poly, g: Poly) -> bool:
    return f.terms.keys() == g.terms.keys()


def poly_sum(polys: Iterable[Poly], nvars: int) -> Poly:
    out: dict[Vec, int] = {}
    for f in polys:
        for e, c in f.terms.items():
            out[e] = out.get(e, 0) + c
    return Poly(nvars, out)
