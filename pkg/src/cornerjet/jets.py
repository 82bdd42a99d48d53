"""Exact truncated power-series and Laurent-series arithmetic in one and two variables.

This is the computational substrate of the package: germs of smooth curves are
represented by truncated Taylor expansions with arbitrary-precision rational
coefficients, and coefficient fields with axial poles by Laurent expansions
carrying an explicit integer valuation.

Conventions:

* every coefficient is a ``fractions.Fraction``; floats are rejected, so no
  operation in this module can round,
* a ``Jet1`` of order N stores exactly the coefficients of t^0 .. t^N; ring
  operations stay in the truncation ring (result order = min of the inputs),
* a ``LaurentJet`` is kept canonical: leading and trailing coefficients are
  nonzero, and the zero jet is (valuation 0, no coefficients),
* operations that genuinely truncate (``laurent_divide``, plot composition in
  ``cornerjet.pullback``) document the window on which their result is exact;
  degrees beyond a documented window are unknown, never assumed zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Union

Rational = Union[int, str, Fraction]

DEFAULT_ORDER = 16

__all__ = [
    "DEFAULT_ORDER",
    "Rational",
    "TruncationError",
    "as_fraction",
    "Jet1",
    "LaurentJet",
    "Jet2",
    "LaurentJet2",
    "ParityParts",
    "compose",
    "differentiate",
    "laurent_divide",
    "whitney_descend",
    "parity_decompose2",
    "parity_masses",
    "SECTOR_NAMES",
]


class TruncationError(ValueError):
    """A requested result is not determined by the stored coefficients."""


def as_fraction(value: Rational) -> Fraction:
    """Coerce to an exact rational; floats are refused on purpose."""
    if isinstance(value, float):
        raise TypeError(
            "floating-point coefficient %r is not allowed in exact arithmetic" % (value,)
        )
    return Fraction(value)


def _format_terms(pairs: Iterable[tuple[int, Fraction]], var: str) -> str:
    parts: list[str] = []
    for degree, coeff in pairs:
        if coeff == 0:
            continue
        mag = -coeff if coeff < 0 else coeff
        if degree == 0:
            body = str(mag)
        else:
            power = var if degree == 1 else "%s^%d" % (var, degree)
            body = power if mag == 1 else "%s*%s" % (mag, power)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


class Jet1:
    """Truncated power series c_0 + c_1 t + ... + c_N t^N, exact in every stored degree."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rational]):
        cs = tuple(as_fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a jet stores at least its constant term")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Jet1 is immutable")

    @classmethod
    def constant(cls, value: Rational, order: int = 0) -> "Jet1":
        c = as_fraction(value)
        return cls((c,) + (Fraction(0),) * order)

    @classmethod
    def zero(cls, order: int = 0) -> "Jet1":
        return cls.constant(0, order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coefficient(self, degree: int) -> Fraction:
        if degree < 0:
            return Fraction(0)
        if degree > self.order:
            raise TruncationError(
                "degree %d is beyond truncation order %d" % (degree, self.order)
            )
        return self.coeffs[degree]

    def extended(self, order: int) -> "Jet1":
        """Zero-pad to a higher order.

        This asserts the jet is a polynomial (higher coefficients exactly
        zero), which holds for every jet built from finite input data.
        """
        if order < self.order:
            raise ValueError("extension order %d below current order %d" % (order, self.order))
        return Jet1(self.coeffs + (Fraction(0),) * (order - self.order))

    def truncated(self, order: int) -> "Jet1":
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if order >= self.order:
            return self
        return Jet1(self.coeffs[: order + 1])

    def to_laurent(self) -> "LaurentJet":
        return LaurentJet(0, self.coeffs)

    def __add__(self, other):
        if isinstance(other, Jet1):
            n = min(self.order, other.order)
            return Jet1(
                tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1))
            )
        if isinstance(other, (int, Fraction)):
            return Jet1((self.coeffs[0] + other,) + self.coeffs[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Jet1(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (Jet1, int, Fraction)):
            return self + (-other if isinstance(other, Jet1) else -as_fraction(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet1):
            n = min(self.order, other.order)
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self.coeffs[: n + 1]):
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b != 0:
                        out[i + j] += a * b
            return Jet1(out)
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            return Jet1(tuple(a * c for a in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("jet powers require a nonnegative integer exponent")
        acc = Jet1.constant(1, self.order)
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        return isinstance(other, Jet1) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Jet1", self.coeffs))

    def __str__(self):
        return self.to_str("t")

    def to_str(self, var: str) -> str:
        return _format_terms(enumerate(self.coeffs), var)

    def __repr__(self):
        return "Jet1([%s])" % ", ".join(repr(str(c)) for c in self.coeffs)


def differentiate(j: Jet1) -> Jet1:
    """d/dt of a one-variable jet; the result has order N-1."""
    if j.order < 1:
        raise ValueError("cannot differentiate order-0 jet")
    return Jet1(tuple(i * c for i, c in enumerate(j.coeffs) if i >= 1))


def compose(outer: Jet1, inner: Jet1) -> Jet1:
    """Substitute ``inner`` into ``outer``; result order is ``inner.order``.

    ``inner`` must have vanishing constant term.  The outer jet is treated as
    a polynomial (its coefficients above the stored order are exact zeros),
    matching how every jet in this package is constructed.
    """
    if inner.constant_term != 0:
        raise ValueError("composition requires vanishing constant term")
    n = inner.order
    acc = Jet1.zero(n)
    for c in reversed(outer.coeffs):
        acc = acc * inner + c
    return acc


def whitney_descend(g: Jet1) -> Jet1:
    """Given an even jet g, return h with g(t) = h(t^2); pure reindexing."""
    for degree in range(1, g.order + 1, 2):
        if g.coeffs[degree] != 0:
            raise ValueError("jet is not even: nonzero coefficient at degree %d" % degree)
    return Jet1(g.coeffs[0::2])


class LaurentJet:
    """Finite Laurent expansion sum c_d x^d starting at an integer valuation.

    Canonical form: if nonzero, the coefficients at the lowest and highest
    stored degrees are nonzero; the zero jet is (valuation 0, empty).
    Results of :func:`laurent_divide` agree with the true quotient only
    through their highest stored degree.
    """

    __slots__ = ("valuation", "coeffs")

    valuation: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, valuation: int = 0, coeffs: Iterable[Rational] = ()):
        cs = [as_fraction(c) for c in coeffs]
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        if lead == len(cs):
            object.__setattr__(self, "valuation", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            tail = len(cs)
            while cs[tail - 1] == 0:
                tail -= 1
            object.__setattr__(self, "valuation", int(valuation) + lead)
            object.__setattr__(self, "coeffs", tuple(cs[lead:tail]))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("LaurentJet is immutable")

    @classmethod
    def x_power(cls, n: int, coefficient: Rational = 1) -> "LaurentJet":
        return cls(n, (coefficient,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Highest stored degree, or None for the zero jet."""
        if not self.coeffs:
            return None
        return self.valuation + len(self.coeffs) - 1

    @property
    def pole_order(self) -> int:
        return max(0, -self.valuation) if self.coeffs else 0

    def coefficient(self, degree: int) -> Fraction:
        i = degree - self.valuation
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def terms(self) -> Iterator[tuple[int, Fraction]]:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield self.valuation + i, c

    def shifted(self, n: int) -> "LaurentJet":
        if self.is_zero:
            return self
        return LaurentJet(self.valuation + n, self.coeffs)

    def substitute_square(self) -> "LaurentJet":
        """Exact reindexing x -> t^2: every stored degree doubles."""
        if self.is_zero:
            return self
        spread: list[Fraction] = []
        for i, c in enumerate(self.coeffs):
            if i:
                spread.append(Fraction(0))
            spread.append(c)
        return LaurentJet(2 * self.valuation, spread)

    def truncated(self, max_degree: int) -> "LaurentJet":
        """Drop all degrees above ``max_degree``."""
        if self.is_zero or self.degree <= max_degree:
            return self
        keep = max_degree - self.valuation + 1
        if keep <= 0:
            return LaurentJet()
        return LaurentJet(self.valuation, self.coeffs[:keep])

    def to_jet1(self, order: int) -> Jet1:
        if self.pole_order > 0:
            raise ValueError("cannot convert a jet with a pole to a power-series jet")
        if not self.is_zero and self.degree > order:
            raise ValueError(
                "stored degree %d exceeds requested order %d" % (self.degree, order)
            )
        return Jet1(tuple(self.coefficient(d) for d in range(order + 1)))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentJet(0, (other,))
        if not isinstance(other, LaurentJet):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.valuation, other.valuation)
        hi = max(self.degree, other.degree)
        return LaurentJet(
            lo,
            tuple(self.coefficient(d) + other.coefficient(d) for d in range(lo, hi + 1)),
        )

    __radd__ = __add__

    def __neg__(self):
        return LaurentJet(self.valuation, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentJet(0, (other,))
        if not isinstance(other, LaurentJet):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if c == 0:
                return LaurentJet()
            return LaurentJet(self.valuation, tuple(a * c for a in self.coeffs))
        if not isinstance(other, LaurentJet):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LaurentJet()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return LaurentJet(self.valuation + other.valuation, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("use laurent_divide for negative powers")
        acc = LaurentJet(0, (1,))
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, LaurentJet)
            and self.valuation == other.valuation
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(("LaurentJet", self.valuation, self.coeffs))

    def __str__(self):
        return self.to_str("x")

    def to_str(self, var: str) -> str:
        return _format_terms(
            ((self.valuation + i, c) for i, c in enumerate(self.coeffs)), var
        )

    def __repr__(self):
        return "LaurentJet(%d, [%s])" % (
            self.valuation,
            ", ".join(repr(str(c)) for c in self.coeffs),
        )


def laurent_divide(num: LaurentJet, den: LaurentJet, terms: int | None = None) -> LaurentJet:
    """Valuation-tracked division of Laurent jets.

    The result valuation is num.valuation - den.valuation and the
    coefficients come from exact long division of the unit parts.  ``terms``
    bounds how many quotient coefficients are produced (default: as many as
    the numerator stores); the quotient may continue beyond the returned
    window and those degrees are not represented.
    """
    if den.is_zero:
        raise ZeroDivisionError("division by the zero jet")
    if num.is_zero:
        return LaurentJet()
    n_terms = len(num.coeffs) if terms is None else terms
    if n_terms < 1:
        raise ValueError("at least one quotient term is required")
    nu, du = num.coeffs, den.coeffs
    q: list[Fraction] = []
    for n in range(n_terms):
        acc = nu[n] if n < len(nu) else Fraction(0)
        for k in range(max(0, n - len(du) + 1), n):
            if du[n - k] != 0:
                acc -= q[k] * du[n - k]
        q.append(acc / du[0])
    return LaurentJet(num.valuation - den.valuation, q)


class Jet2:
    """Dense triangular two-variable jet: coefficients of u^i v^j for i+j <= order."""

    __slots__ = ("coeffs",)

    coeffs: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Rational]]):
        built = tuple(tuple(as_fraction(c) for c in row) for row in rows)
        if not built:
            raise ValueError("a two-variable jet stores at least its constant term")
        n = len(built) - 1
        for i, row in enumerate(built):
            if len(row) != n + 1 - i:
                raise ValueError("row %d must hold %d coefficients" % (i, n + 1 - i))
        object.__setattr__(self, "coeffs", built)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Jet2 is immutable")

    @classmethod
    def zero(cls, order: int) -> "Jet2":
        return cls([[0] * (order + 1 - i) for i in range(order + 1)])

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], Rational], order: int) -> "Jet2":
        rows = [[Fraction(0)] * (order + 1 - i) for i in range(order + 1)]
        for (i, j), c in terms.items():
            if i < 0 or j < 0 or i + j > order:
                raise ValueError("term u^%d v^%d is outside total degree %d" % (i, j, order))
            rows[i][j] = as_fraction(c)
        return cls(rows)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for row in self.coeffs for c in row)

    def coefficient(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0:
            return Fraction(0)
        if i + j > self.order:
            raise TruncationError(
                "degree u^%d v^%d is beyond truncation order %d" % (i, j, self.order)
            )
        return self.coeffs[i][j]

    def terms(self) -> Iterator[tuple[int, int, Fraction]]:
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c != 0:
                    yield i, j, c

    def truncated(self, order: int) -> "Jet2":
        if order >= self.order:
            return self
        return Jet2([row[: order + 1 - i] for i, row in enumerate(self.coeffs[: order + 1])])

    def to_laurent2(self) -> "LaurentJet2":
        return LaurentJet2.from_terms({(i, j): c for i, j, c in self.terms()})

    def __add__(self, other):
        if not isinstance(other, Jet2):
            return NotImplemented
        n = min(self.order, other.order)
        return Jet2(
            [
                [self.coeffs[i][j] + other.coeffs[i][j] for j in range(n + 1 - i)]
                for i in range(n + 1)
            ]
        )

    def __neg__(self):
        return Jet2([[-c for c in row] for row in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Jet2):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            return Jet2([[a * c for a in row] for row in self.coeffs])
        if not isinstance(other, Jet2):
            return NotImplemented
        n = min(self.order, other.order)
        rows = [[Fraction(0)] * (n + 1 - i) for i in range(n + 1)]
        for i1, j1, c1 in self.terms():
            for i2, j2, c2 in other.terms():
                i, j = i1 + i2, j1 + j2
                if i + j <= n:
                    rows[i][j] += c1 * c2
        return Jet2(rows)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Jet2) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Jet2", self.coeffs))

    def __str__(self):
        parts = sorted(self.terms())
        return _format_terms2(parts)

    def __repr__(self):
        return "Jet2.from_terms(%r, order=%d)" % (
            {(i, j): str(c) for i, j, c in self.terms()},
            self.order,
        )


def _format_terms2(terms: Sequence[tuple[int, int, Fraction]], vars=("u", "v")) -> str:
    parts: list[str] = []
    for i, j, coeff in terms:
        mag = -coeff if coeff < 0 else coeff
        factors = []
        for var, e in ((vars[0], i), (vars[1], j)):
            if e == 1:
                factors.append(var)
            elif e != 0:
                factors.append("%s^%d" % (var, e))
        if not factors or mag != 1:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


class ParityParts(NamedTuple):
    even_even: Jet2
    even_odd: Jet2
    odd_even: Jet2
    odd_odd: Jet2


def parity_decompose2(j: Jet2) -> ParityParts:
    """Split a two-variable jet by coefficient parity in each variable.

    Part (p, q) keeps exactly the coefficients c_{i,j} with i = p and j = q
    mod 2; the four parts sum to the input and have disjoint support.
    """
    buckets = {(0, 0): {}, (0, 1): {}, (1, 0): {}, (1, 1): {}}
    for i, jj, c in j.terms():
        buckets[(i % 2, jj % 2)][(i, jj)] = c
    n = j.order
    return ParityParts(
        Jet2.from_terms(buckets[(0, 0)], n),
        Jet2.from_terms(buckets[(0, 1)], n),
        Jet2.from_terms(buckets[(1, 0)], n),
        Jet2.from_terms(buckets[(1, 1)], n),
    )


SECTOR_NAMES = {
    (0, 0): "even-even",
    (0, 1): "even-odd",
    (1, 0): "odd-even",
    (1, 1): "odd-odd",
}


class LaurentJet2:
    """Two-variable Laurent expansion stored sparsely: (i, j) -> nonzero rational.

    Exact: these arise from finite expressions and the operations on them
    (sums, products, exponent doubling, monomial shifts) never truncate.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Rational] | None = None):
        cleaned: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (i, j), c in terms.items():
                f = as_fraction(c)
                if f != 0:
                    cleaned[(int(i), int(j))] = f
        object.__setattr__(self, "_terms", cleaned)
        object.__setattr__(self, "_hash", hash(("LaurentJet2", frozenset(cleaned.items()))))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("LaurentJet2 is immutable")

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], Rational]) -> "LaurentJet2":
        return cls(terms)

    @classmethod
    def zero(cls) -> "LaurentJet2":
        return cls()

    @classmethod
    def x_power(cls, i: int, j: int = 0, coefficient: Rational = 1) -> "LaurentJet2":
        return cls({(i, j): coefficient})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def valuations(self) -> tuple[int, int]:
        """Tight per-variable minimum exponents; (0, 0) for the zero jet."""
        if not self._terms:
            return (0, 0)
        return (
            min(i for i, _ in self._terms),
            min(j for _, j in self._terms),
        )

    @property
    def max_degrees(self) -> tuple[int, int]:
        if not self._terms:
            return (0, 0)
        return (
            max(i for i, _ in self._terms),
            max(j for _, j in self._terms),
        )

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def terms(self) -> Iterator[tuple[int, int, Fraction]]:
        for (i, j) in sorted(self._terms):
            yield i, j, self._terms[(i, j)]

    def double_degrees(self) -> "LaurentJet2":
        """Exact substitution (x, y) -> (u^2, v^2): indices double."""
        return LaurentJet2({(2 * i, 2 * j): c for (i, j), c in self._terms.items()})

    def halve_degrees(self) -> "LaurentJet2":
        """Inverse reindexing for even-even jets; errors on odd exponents."""
        out = {}
        for (i, j), c in self._terms.items():
            if i % 2 or j % 2:
                raise ValueError("jet is not even-even: term x^%d y^%d" % (i, j))
            out[(i // 2, j // 2)] = c
        return LaurentJet2(out)

    def shifted(self, di: int, dj: int) -> "LaurentJet2":
        return LaurentJet2({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    def restrict(self, predicate) -> "LaurentJet2":
        return LaurentJet2({k: c for k, c in self._terms.items() if predicate(*k)})

    def slice_x(self, i: int) -> LaurentJet:
        """The coefficient of x^i as a Laurent jet in y."""
        picked = {j: c for (ii, j), c in self._terms.items() if ii == i}
        if not picked:
            return LaurentJet()
        lo, hi = min(picked), max(picked)
        return LaurentJet(lo, tuple(picked.get(d, Fraction(0)) for d in range(lo, hi + 1)))

    def slice_y(self, j: int) -> LaurentJet:
        """The coefficient of y^j as a Laurent jet in x."""
        picked = {i: c for (i, jj), c in self._terms.items() if jj == j}
        if not picked:
            return LaurentJet()
        lo, hi = min(picked), max(picked)
        return LaurentJet(lo, tuple(picked.get(d, Fraction(0)) for d in range(lo, hi + 1)))

    def to_jet2(self, order: int | None = None) -> Jet2:
        vx, vy = self.valuations
        if vx < 0 or vy < 0:
            raise ValueError("cannot convert a jet with poles to a triangular jet")
        total = max((i + j for i, j, _ in self.terms()), default=0)
        if order is None:
            order = total
        elif total > order:
            raise ValueError("total degree %d exceeds requested order %d" % (total, order))
        return Jet2.from_terms(dict(((i, j), c) for i, j, c in self.terms()), order)

    def __add__(self, other):
        if not isinstance(other, LaurentJet2):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return LaurentJet2(out)

    def __neg__(self):
        return LaurentJet2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentJet2):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            return LaurentJet2({k: a * c for k, a in self._terms.items()})
        if not isinstance(other, LaurentJet2):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return LaurentJet2(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LaurentJet2) and self._terms == other._terms

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.to_str(("x", "y"))

    def to_str(self, vars: tuple[str, str]) -> str:
        return _format_terms2(list(self.terms()), vars=vars)

    def __repr__(self):
        return "LaurentJet2(%r)" % ({k: str(c) for k, c in sorted(self._terms.items())},)


def parity_masses(j: LaurentJet2) -> dict[str, int]:
    """Number of nonzero monomials in each of the four parity sectors."""
    masses = {name: 0 for name in SECTOR_NAMES.values()}
    for i, jj, _ in j.terms():
        masses[SECTOR_NAMES[(i % 2, jj % 2)]] += 1
    return masses
