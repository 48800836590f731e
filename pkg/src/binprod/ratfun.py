"""Rational power series: normalized rational functions and their expansions.

A `RatFun` is a rational function num/den kept in a canonical form that makes
equality a tuple comparison: gcd(num, den) = 1 and den(0) = 1.  The second
condition both pins the scalar normalization and guarantees the function is a
power series at the origin.  `Series` is a finite prefix of an expansion.

`reconstruct_rational` recovers a rational function from enough series
coefficients and degree bounds, by solving for the denominator first (a
homogeneous Hankel-type linear system) and then reading the numerator off a
truncated product.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .errors import (
    DivisionByZero,
    InternalInvariantViolation,
    InvalidInput,
    NotAPowerSeries,
    ReconstructionFailed,
)
from .polycore import Poly, Scalar, format_poly, poly_gcd, solve_exact, _fr


class Series:
    """A finite, exact prefix of a power series expansion.

    ``coeffs[n]`` is the coefficient of x^n; ``order`` is how many
    coefficients are present.  Trailing zeros are significant here (they
    carry information), so nothing is trimmed.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = tuple(_fr(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        raise IndexError(f"series has only {len(self.coeffs)} coefficients")

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Series", self.coeffs))

    def truncate(self, order: int) -> "Series":
        if order > len(self.coeffs):
            raise InvalidInput("cannot extend a series by truncation")
        return Series(self.coeffs[:order])

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"Series([{shown}{tail}], order={len(self.coeffs)})"


class RatFun:
    """A rational function over Q in canonical power-series form.

    Invariants: den is nonzero with den(0) = 1, and gcd(num, den) = 1.  The
    zero function is 0/1.  Because the representation is canonical, equality
    and hashing are structural.  Instances are immutable.

    >>> RatFun(Poly([0, 2]), Poly([2, -2]))
    (x) / (1 - x)
    >>> RatFun(Poly([0, 1]), Poly([1, -1, -1])).expand(6).coeffs
    (Fraction(0, 1), Fraction(1, 1), Fraction(1, 1), Fraction(2, 1), Fraction(3, 1), Fraction(5, 1))
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, Scalar):
            num = Poly([num])
        if den is None:
            den = Poly.one()
        elif isinstance(den, Scalar):
            den = Poly([den])
        if not isinstance(num, Poly) or not isinstance(den, Poly):
            raise InvalidInput("RatFun arguments must be Poly or scalar")
        if den.is_zero():
            raise DivisionByZero("denominator must be nonzero")
        if not den.constant_term:
            raise NotAPowerSeries(f"denominator {den} vanishes at 0")
        if num.is_zero():
            self.num = Poly()
            self.den = Poly.one()
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        c = den.constant_term
        self.num = num / c
        self.den = den / c

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero() -> "RatFun":
        return RatFun(Poly())

    @staticmethod
    def one() -> "RatFun":
        return RatFun(Poly.one())

    @staticmethod
    def constant(c) -> "RatFun":
        return RatFun(Poly([c]))

    @staticmethod
    def from_poly(p: Poly) -> "RatFun":
        return RatFun(p)

    @staticmethod
    def geometric(alpha) -> "RatFun":
        """1 / (1 - alpha*x), the generating function of alpha^n."""
        return RatFun(Poly.one(), Poly([1, -_fr(alpha)]))

    @staticmethod
    def _quotient(num: Poly, den: Poly) -> "RatFun":
        """num/den where den may vanish at 0 before cancellation.

        Reduces by the gcd first, then applies the usual constructor checks,
        so e.g. x^2 / (x - x^3) is accepted while 1/x still fails.
        """
        if den.is_zero():
            raise DivisionByZero("division by the zero function")
        if not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        return RatFun(num, den)

    # -- queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_proper(self) -> bool:
        """True when deg(num) < deg(den); the zero function is proper."""
        return self.num.degree < self.den.degree or self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            other = RatFun.constant(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFun", self.num.coeffs, self.den.coeffs))

    # -- field arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Optional["RatFun"]:
        if isinstance(other, RatFun):
            return other
        if isinstance(other, Poly):
            return RatFun(other)
        if isinstance(other, Scalar):
            return RatFun.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun._quotient(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by the zero function")
        return RatFun._quotient(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ValueError("RatFun exponent must be an integer")
        if k < 0:
            if self.is_zero():
                raise DivisionByZero("0 cannot be raised to a negative power")
            return RatFun._quotient(self.den ** (-k), self.num ** (-k))
        return RatFun(self.num**k, self.den**k)

    def derivative(self) -> "RatFun":
        return RatFun._quotient(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    # -- series view ---------------------------------------------------------

    def expand(self, order: int) -> Series:
        """The first ``order`` power series coefficients.

        Uses the linear recurrence c_n = num_n - sum_{j>=1} den_j c_{n-j},
        valid because den(0) = 1.
        """
        if order < 0:
            raise InvalidInput("expansion order must be nonnegative")
        den = self.den.coeffs
        out = []
        for n in range(order):
            c = self.num[n]
            for j in range(1, min(n, self.den.degree) + 1):
                c -= den[j] * out[n - j]
            out.append(c)
        return Series(out)

    def coefficient(self, n: int) -> Fraction:
        return self.expand(n + 1).coeffs[n]

    def proper_split(self) -> Tuple[Poly, "RatFun"]:
        """Write self as poly + proper with deg(proper.num) < deg(proper.den).

        Plain polynomial division: num = q*den + r, so self = q + r/den.
        Recombining the two parts returns exactly self.
        """
        if self.is_proper():
            return Poly(), self
        q, r = divmod(self.num, self.den)
        return q, RatFun(r, self.den)

    # -- substitutions ---------------------------------------------------------

    def compose_scale(self, c) -> "RatFun":
        """self(c*x)."""
        return RatFun(self.num.scale_arg(c), self.den.scale_arg(c))

    def compose_mobius(self, beta) -> "RatFun":
        """(1/(1-beta*x)) * self(x/(1-beta*x)).

        This is the binomial product of self with the geometric series
        1/(1-beta*x): binomially convolving a_n with beta^n.
        """
        beta = _fr(beta)
        d = max(self.num.degree, self.den.degree, 0)
        base = Poly([1, -beta])
        powers = [Poly.one()]
        for _ in range(d):
            powers.append(powers[-1] * base)
        num = Poly()
        for i, c in enumerate(self.num.coeffs):
            if c:
                num = num + Poly.monomial(i, c) * powers[d - i]
        den = Poly()
        for j, c in enumerate(self.den.coeffs):
            if c:
                den = den + Poly.monomial(j, c) * powers[d - j]
        return RatFun._quotient(num, den * base)

    def compose_poly(self, inner: Poly) -> "RatFun":
        """self(inner(x)) for a polynomial inner with inner(0) = 0."""
        if inner.constant_term:
            raise InvalidInput("substituted polynomial must vanish at 0")
        return RatFun._quotient(self.num.compose(inner), self.den.compose(inner))

    # -- formatting -------------------------------------------------------------

    def __str__(self) -> str:
        return format_ratfun(self)

    __repr__ = __str__


def format_ratfun(f: RatFun) -> str:
    """Canonical text form, e.g. ``(2*x^2 - 3*x^3) / (1 - 6*x + 7*x^2)``."""
    if f.den == Poly.one():
        return format_poly(f.num)
    return f"({format_poly(f.num)}) / ({format_poly(f.den)})"


def reconstruct_rational(s: Series, max_den_deg: int, max_num_deg: int) -> RatFun:
    """Recover num/den from series coefficients and degree bounds.

    Searches denominator degrees D = 0..max_den_deg in increasing order (so
    ties resolve to the minimal denominator degree).  For each D it solves
    the linear system d_0 = 1, sum_j d_j c_{n-j} = 0 for every available
    n > max_num_deg; this uses at least two more coefficients than the
    unknown count, so a spurious fit must survive extra verification rows
    before it can be returned.  The numerator is then den * s truncated.

    Raises ReconstructionFailed when no candidate matches every coefficient,
    and InvalidInput when fewer than max_num_deg + max_den_deg + 3
    coefficients are supplied.
    """
    if max_den_deg < 0 or max_num_deg < 0:
        raise InvalidInput("degree bounds must be nonnegative")
    needed = max_num_deg + max_den_deg + 3
    if s.order < needed:
        raise InvalidInput(
            f"series has {s.order} coefficients but {needed} are needed "
            f"for bounds ({max_num_deg}, {max_den_deg}) plus verification"
        )
    c = s.coeffs
    zero = Fraction(0)
    eq_range = range(max_num_deg + 1, s.order)
    for d in range(max_den_deg + 1):
        rows = []
        rhs = []
        for n in eq_range:
            rows.append([c[n - j] if j <= n else zero for j in range(1, d + 1)])
            rhs.append(-c[n])
        sol = solve_exact(rows, rhs, zero)
        if sol is None:
            continue
        den = Poly([Fraction(1)] + list(sol))
        # numerator by truncated multiplication; the solved equations say the
        # product has no terms beyond max_num_deg
        prod = [
            sum((den[j] * c[n - j] for j in range(min(n, d) + 1)), zero)
            for n in range(s.order)
        ]
        if any(prod[max_num_deg + 1 :]):
            raise InternalInvariantViolation("solved recurrence leaves a nonzero tail")
        return RatFun(Poly(prod[: max_num_deg + 1]), den)
    raise ReconstructionFailed(
        f"no rational function with deg(num) <= {max_num_deg} and "
        f"deg(den) <= {max_den_deg} matches the series"
    )
