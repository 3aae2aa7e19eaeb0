"""Exact arithmetic with integer Dirichlet polynomials.

A Dirichlet polynomial is a finite formal sum ``sum_n a_n / n^s`` with
integer coefficients, stored sparsely as a map from index ``n >= 1`` to
the nonzero coefficient ``a_n``.  Addition is coefficientwise and
multiplication is Dirichlet convolution (indices multiply), so the
coefficient of ``n`` in a product is ``sum_{d*e=n} a_d b_e``.

Three value types live here:

* :class:`DirichletPolynomial` - finitely supported, canonical
  (no stored zeros), immutable.  Structural equality is mathematical
  equality.
* :class:`TruncatedSeries` - an explicit finite window onto a formal
  Dirichlet series: all coefficients with index ``<= bound`` are exact.
  Windows are closed under sums and products, because a product index
  exceeds the bound as soon as one factor index does.
* :class:`RationalSeries` - a formal quotient of two polynomials whose
  denominator has constant coefficient +-1, so the expansion has
  integer coefficients.

All coefficients are arbitrary-precision Python ints; overflow cannot
occur and no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import (
    FactorNotUnital,
    NonUnitDenominator,
    NotDivisible,
    ZeroDivisor,
)

TermMap = Mapping[int, int] | Iterable[tuple[int, int]]


def _canonical_terms(terms: TermMap) -> dict[int, int]:
    items = terms.items() if isinstance(terms, Mapping) else terms
    acc: dict[int, int] = {}
    for n, a in items:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"index must be an integer >= 1, got {n!r}")
        if not isinstance(a, int) or isinstance(a, bool):
            raise ValueError(f"coefficient must be an int, got {a!r}")
        acc[n] = acc.get(n, 0) + a
    return {n: a for n, a in sorted(acc.items()) if a != 0}


class DirichletPolynomial:
    """Immutable sparse Dirichlet polynomial with exact int coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: TermMap = ()):
        self._terms = _canonical_terms(terms)
        self._hash: int | None = None

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "DirichletPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "DirichletPolynomial":
        return cls({1: 1})

    @classmethod
    def term(cls, n: int, a: int) -> "DirichletPolynomial":
        """The single term ``a / n^s``."""
        return cls({n: a})

    # -- inspection --------------------------------------------------

    def terms(self) -> dict[int, int]:
        """Copy of the term map, ascending by index."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def coefficient(self, n: int) -> int:
        return self._terms.get(n, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(self._terms)

    @property
    def min_index(self) -> int | None:
        return next(iter(self._terms), None)

    @property
    def max_index(self) -> int | None:
        return next(reversed(self._terms), None)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {1: 1}

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring structure ----------------------------------------------

    @staticmethod
    def _coerce(other) -> "DirichletPolynomial | None":
        if isinstance(other, DirichletPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return DirichletPolynomial({1: other})
        return None

    def __add__(self, other) -> "DirichletPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for n, a in o._terms.items():
            acc[n] = acc.get(n, 0) + a
        return DirichletPolynomial(acc)

    __radd__ = __add__

    def __neg__(self) -> "DirichletPolynomial":
        return DirichletPolynomial({n: -a for n, a in self._terms.items()})

    def __sub__(self, other) -> "DirichletPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "DirichletPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "DirichletPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[int, int] = {}
        for n1, a1 in self._terms.items():
            for n2, a2 in o._terms.items():
                m = n1 * n2
                acc[m] = acc.get(m, 0) + a1 * a2
        return DirichletPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "DirichletPolynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        out = DirichletPolynomial.one()
        for _ in range(k):
            out = out * self
        return out

    # -- comparisons / hashing ---------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- evaluation ---------------------------------------------------

    def evaluate(self, k: int) -> Fraction:
        """Exact value ``sum a_n / n^k`` at a nonnegative integer ``k``."""
        if not isinstance(k, int) or k < 0:
            raise ValueError("evaluation point must be a nonnegative int")
        return sum((Fraction(a, n**k) for n, a in self._terms.items()),
                   Fraction(0))

    # -- formatting ---------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (n, a) in enumerate(self._terms.items()):
            mag = abs(a)
            body = str(mag) if n == 1 else f"{mag}/{n}^s"
            if i == 0:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if a > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"DirichletPolynomial({self._terms!r})"

    # -- serialization ------------------------------------------------

    def to_json_dict(self) -> dict:
        """``{"terms": [{"n": ..., "a": "<decimal>"}, ...]}`` ascending in n.

        Coefficients travel as decimal strings so arbitrarily large
        integers survive any JSON parser.
        """
        return {"terms": [{"n": n, "a": str(a)} for n, a in self._terms.items()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "DirichletPolynomial":
        return cls({int(t["n"]): int(t["a"]) for t in data["terms"]})


ONE = DirichletPolynomial.one()
ZERO = DirichletPolynomial.zero()


def prime_projection(p: DirichletPolynomial, primes: Iterable[int]) -> DirichletPolynomial:
    """Delete every term whose index is divisible by one of ``primes``.

    This is a ring endomorphism: indices of surviving terms multiply to
    surviving indices, so it commutes with sums and products.
    """
    ps = _checked_primes(primes)
    return DirichletPolynomial(
        {n: a for n, a in p.items() if not any(n % q == 0 for q in ps)}
    )


def _checked_primes(primes: Iterable[int]) -> frozenset[int]:
    from .numtheory import is_prime

    ps = frozenset(primes)
    for q in ps:
        if not isinstance(q, int) or not is_prime(q):
            raise ValueError(f"{q!r} is not a prime")
    return ps


def power_shift(p: DirichletPolynomial, r: int) -> DirichletPolynomial:
    """Substitute ``s -> r*s - r + 1``: the term ``a/m^s`` becomes
    ``a * m^(r-1) / (m^r)^s``.  A ring homomorphism for every r >= 1."""
    if not isinstance(r, int) or r < 1:
        raise ValueError("shift multiplicity must be an int >= 1")
    if r == 1:
        return p
    return DirichletPolynomial({n**r: a * n ** (r - 1) for n, a in p.items()})


def divide_exact(
    p: DirichletPolynomial,
    d: DirichletPolynomial,
    support_bound: int | None = None,
) -> DirichletPolynomial:
    """Exact quotient q with ``d * q == p``, or raise :class:`NotDivisible`.

    Elimination runs by ascending index: the minimal remaining index of
    the remainder must be a multiple of d's minimal index, and the
    leading coefficient of d must divide there exactly.  Quotient
    support is only searched up to ``support_bound`` (default: the
    maximal support index of p), which makes failure decidable.
    """
    if d.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    m0 = d.min_index
    c0 = d.coefficient(m0)
    bound = support_bound if support_bound is not None else p.max_index
    rem = p.terms()
    quo: dict[int, int] = {}
    while rem:
        n = min(rem)
        if n % m0 != 0:
            raise NotDivisible(f"remainder index {n} not a multiple of {m0}")
        k = n // m0
        if k > bound:
            raise NotDivisible(f"quotient support would exceed bound {bound}")
        if rem[n] % c0 != 0:
            raise NotDivisible(f"leading coefficient {c0} does not divide {rem[n]}")
        coeff = rem[n] // c0
        quo[k] = coeff
        for e, b in d.items():
            idx = k * e
            val = rem.get(idx, 0) - coeff * b
            if val:
                rem[idx] = val
            else:
                rem.pop(idx, None)
    return DirichletPolynomial(quo)


class TruncatedSeries:
    """Exact window onto a formal Dirichlet series: terms with index
    ``<= bound`` only.  Arithmetic keeps every retained coefficient
    exact; combining two windows truncates to the smaller bound."""

    __slots__ = ("_bound", "_terms")

    def __init__(self, bound: int, terms: TermMap = ()):
        if not isinstance(bound, int) or bound < 1:
            raise ValueError("bound must be an int >= 1")
        canon = _canonical_terms(terms)
        bad = [n for n in canon if n > bound]
        if bad:
            raise ValueError(f"terms beyond bound {bound}: {bad[:3]}")
        self._bound = bound
        self._terms = canon

    @classmethod
    def from_polynomial(cls, p: DirichletPolynomial, bound: int) -> "TruncatedSeries":
        return cls(bound, {n: a for n, a in p.items() if n <= bound})

    @property
    def bound(self) -> int:
        return self._bound

    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, n: int) -> int:
        if n > self._bound:
            raise ValueError(f"index {n} beyond truncation bound {self._bound}")
        return self._terms.get(n, 0)

    def support(self) -> tuple[int, ...]:
        return tuple(self._terms)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        bound = min(self._bound, other._bound)
        acc = {n: a for n, a in self._terms.items() if n <= bound}
        for n, a in other._terms.items():
            if n <= bound:
                acc[n] = acc.get(n, 0) + a
        return TruncatedSeries(bound, acc)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        bound = min(self._bound, other._bound)
        acc: dict[int, int] = {}
        for n1, a1 in self._terms.items():
            if n1 > bound:
                break
            for n2, a2 in other._terms.items():
                m = n1 * n2
                if m > bound:
                    break
                acc[m] = acc.get(m, 0) + a1 * a2
        return TruncatedSeries(bound, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._bound == other._bound and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._bound, tuple(self._terms.items())))

    def __str__(self) -> str:
        poly = DirichletPolynomial(self._terms)
        return f"{poly} + O(n > {self._bound})"

    def __repr__(self) -> str:
        return f"TruncatedSeries(bound={self._bound}, terms={self._terms!r})"

    def to_json_dict(self) -> dict:
        return {
            "bound": self._bound,
            "terms": [{"n": n, "a": str(a)} for n, a in self._terms.items()],
        }


def truncated_product(
    factors: Iterable[DirichletPolynomial], bound: int
) -> TruncatedSeries:
    """Product of finitely many factors, exact for all indices <= bound.

    Every factor must have constant coefficient 1.  A factor whose
    entire support beyond index 1 exceeds the bound multiplies in as 1,
    so callers may pass long factor lists cheaply.  The result does not
    depend on factor order.
    """
    out = TruncatedSeries(bound, {1: 1})
    for i, f in enumerate(factors):
        if f.coefficient(1) != 1:
            raise FactorNotUnital(
                f"factor #{i} has constant coefficient {f.coefficient(1)}, want 1"
            )
        window = {n: a for n, a in f.items() if n <= bound}
        if window == {1: 1}:
            continue
        out = out * TruncatedSeries(bound, window)
    return out


class RationalSeries:
    """Formal quotient ``A(s)/B(s)`` of Dirichlet polynomials.

    The denominator's constant coefficient must be +-1 so that the
    expanded series has integer coefficients.  Instances are formal
    pairs: no canonical reduction is attempted, and equality is
    componentwise; compare expansions to test equality of the series.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: DirichletPolynomial, den: DirichletPolynomial = ONE):
        if den.is_zero():
            raise ZeroDivisor("rational series with zero denominator")
        if den.coefficient(1) not in (1, -1):
            raise NonUnitDenominator(
                f"denominator constant coefficient {den.coefficient(1)} is not a unit"
            )
        self._num = num
        self._den = den

    @property
    def numerator(self) -> DirichletPolynomial:
        return self._num

    @property
    def denominator(self) -> DirichletPolynomial:
        return self._den

    def expand(self, bound: int) -> TruncatedSeries:
        return expand_rational(self, bound)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __str__(self) -> str:
        return f"({self._num}) / ({self._den})"

    def __repr__(self) -> str:
        return f"RationalSeries({self._num!r}, {self._den!r})"

    def to_json_dict(self) -> dict:
        return {"num": self._num.to_json_dict(), "den": self._den.to_json_dict()}

    @classmethod
    def from_json_dict(cls, data: dict) -> "RationalSeries":
        return cls(
            DirichletPolynomial.from_json_dict(data["num"]),
            DirichletPolynomial.from_json_dict(data["den"]),
        )


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def expand_rational(f: RationalSeries, bound: int) -> TruncatedSeries:
    """Integer-coefficient expansion of A/B, exact up to ``bound``.

    Back-substitution by ascending index: with u = B(1)-coefficient
    (+-1), the n-th coefficient is
    ``u * (A_n - sum_{d|n, d>1} B_d * t_{n/d})``.
    """
    if not isinstance(bound, int) or bound < 1:
        raise ValueError("bound must be an int >= 1")
    num, den = f.numerator, f.denominator
    u = den.coefficient(1)
    if u not in (1, -1):
        raise NonUnitDenominator("denominator constant coefficient is not a unit")
    out: dict[int, int] = {}
    for n in range(1, bound + 1):
        acc = num.coefficient(n)
        for d in _divisors(n):
            if d > 1:
                b = den.coefficient(d)
                if b:
                    acc -= b * out.get(n // d, 0)
        if acc:
            out[n] = acc * u
    return TruncatedSeries(bound, out)
