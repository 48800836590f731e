"""Exact polynomial arithmetic over the rationals.

The ground field is Q, represented by `fractions.Fraction` (already reduced,
positive denominator, arbitrary precision).  On top of it this module builds:

* `Poly`       dense univariate polynomials in x,
* `BiPoly`     polynomials in an auxiliary variable y whose coefficients are
               `Poly` values in x,
* `Matrix`     rectangular grids of `Poly` entries,

together with fraction-free (Bareiss) determinants, Sylvester matrices and
resultants, and the y-substitutions that turn denominator products such as
prod(1 - (alpha_i + beta_j) x) into a single resultant computation.

Every value is immutable after construction and every function is pure, so
values can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Optional, Sequence

from .errors import DivisibilityError, InvalidInput

Scalar = (int, Fraction)


def _fr(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise InvalidInput(f"expected an integer or Fraction, got {value!r}")


class Poly:
    """A univariate polynomial over Q with dense coefficient storage.

    ``coeffs[i]`` is the coefficient of x^i; trailing zeros are trimmed so the
    zero polynomial is the empty tuple.  ``degree`` is -1 for zero, purely as
    a sentinel: code must branch on ``is_zero()`` instead of doing arithmetic
    with the degree of zero.

    >>> Poly([1, -1]) * Poly([1, 1])
    Poly('1 - x^2')
    >>> divmod(Poly([0, 0, 0, 1]), Poly([1, -1]))
    (Poly('-1 - x - x^2'), Poly('1'))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        vals = [_fr(c) for c in coeffs]
        while vals and not vals[-1]:
            vals.pop()
        self.coeffs = tuple(vals)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly([1])

    @staticmethod
    def x() -> "Poly":
        return Poly([0, 1])

    @staticmethod
    def constant(c) -> "Poly":
        return Poly([c])

    @staticmethod
    def monomial(k: int, c=1) -> "Poly":
        if k < 0:
            raise InvalidInput("monomial exponent must be nonnegative")
        return Poly([0] * k + [c])

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 as the sentinel for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise InvalidInput("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    # -- equality ----------------------------------------------------------

    def _coerce(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if isinstance(other, Scalar):
            return Poly([other])
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

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
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar only; use exact_div for polynomials."""
        if isinstance(other, Scalar):
            c = _fr(other)
            if not c:
                raise ZeroDivisionError("division of a Poly by zero")
            return Poly([a / c for a in self.coeffs])
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("Poly exponent must be a nonnegative integer")
        out = Poly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree
        lead = o.leading
        if len(rem) <= db:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db] / lead
            if c:
                quo[k] = c
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= c * b
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        q, _ = divmod(self, other)
        return q

    def __mod__(self, other):
        _, r = divmod(self, other)
        return r

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient self/other, raising DivisibilityError unless it is exact."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise DivisibilityError(f"{self} is not divisible by {other}")
        return q

    # -- calculus and substitution ------------------------------------------

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, v) -> Fraction:
        v = _fr(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)), by Horner's rule over Poly arithmetic."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def scale_arg(self, c) -> "Poly":
        """self(c*x)."""
        c = _fr(c)
        out = []
        power = Fraction(1)
        for a in self.coeffs:
            out.append(a * power)
            power *= c
        return Poly(out)

    def shift(self, k: int) -> "Poly":
        """x^k * self."""
        if k < 0:
            raise InvalidInput("shift amount must be nonnegative")
        if self.is_zero():
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.leading

    def content(self) -> Fraction:
        """Rational content: gcd of numerators over lcm of denominators.

        Carries the sign of the leading coefficient, so ``primitive()`` always
        has a positive leading coefficient.  The content of zero is zero.
        """
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = int_gcd(num, c.numerator)
            den = den * c.denominator // int_gcd(den, c.denominator)
        c = Fraction(num, den)
        return -c if self.leading < 0 else c

    def primitive(self) -> "Poly":
        """self divided by its content: coprime integer coefficients, positive lead."""
        if self.is_zero():
            return self
        return self / self.content()

    # -- formatting ----------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def format_poly(p: Poly, var: str = "x") -> str:
    """Render in ascending powers, e.g. ``1 - 6*x + 7*x^2``.

    The output re-parses in the expression language of the command line
    interface to the same polynomial.
    """
    if p.is_zero():
        return "0"
    pieces = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = -c if c < 0 else c
        if i == 0:
            body = str(mag)
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if mag == 1 else f"{mag}*{v}"
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append((" + " if c > 0 else " - ") + body)
    return "".join(pieces)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, b) is monic(b).

    Raises InvalidInput when both arguments are zero.  Remainders are made
    monic at every step, which keeps Fraction growth tame at the small
    degrees used here.
    """
    if a.is_zero() and b.is_zero():
        raise InvalidInput("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, (a % b)
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    return (a * b).exact_div(poly_gcd(a, b)).monic()


class BiPoly:
    """A polynomial in y whose coefficients are `Poly` values in x.

    ``ycoeffs[k]`` is the coefficient of y^k.  Trailing zero coefficients are
    trimmed, so the zero value is the empty tuple and ``ydegree`` is -1 only
    for zero (again a sentinel, guarded by ``is_zero``).
    """

    __slots__ = ("ycoeffs",)

    def __init__(self, ycoeffs: Iterable = ()):
        vals = []
        for p in ycoeffs:
            if not isinstance(p, Poly):
                p = Poly([p]) if isinstance(p, Scalar) else None
                if p is None:
                    raise InvalidInput("BiPoly coefficients must be Poly or scalar")
            vals.append(p)
        while vals and vals[-1].is_zero():
            vals.pop()
        self.ycoeffs = tuple(vals)

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def constant(p: Poly) -> "BiPoly":
        return BiPoly([p])

    def is_zero(self) -> bool:
        return not self.ycoeffs

    @property
    def ydegree(self) -> int:
        return len(self.ycoeffs) - 1

    def __getitem__(self, k: int) -> Poly:
        if 0 <= k < len(self.ycoeffs):
            return self.ycoeffs[k]
        return Poly()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.ycoeffs == other.ycoeffs

    def __hash__(self):
        return hash(("BiPoly", self.ycoeffs))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self.ycoeffs, other.ycoeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, p in enumerate(b):
            out[i] = out[i] + p
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly([-p for p in self.ycoeffs])

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (Poly,) + Scalar):
            q = other if isinstance(other, Poly) else Poly([other])
            return BiPoly([p * q for p in self.ycoeffs])
        if not isinstance(other, BiPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BiPoly()
        out = [Poly() for _ in range(len(self.ycoeffs) + len(other.ycoeffs) - 1)]
        for i, p in enumerate(self.ycoeffs):
            if p.is_zero():
                continue
            for j, q in enumerate(other.ycoeffs):
                out[i + j] = out[i + j] + p * q
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("BiPoly exponent must be a nonnegative integer")
        out = BiPoly([Poly.one()])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self) -> str:
        terms = ", ".join(f"y^{k}: {p}" for k, p in enumerate(self.ycoeffs))
        return f"BiPoly({terms})"


class Matrix:
    """An immutable rectangular matrix of `Poly` entries."""

    __slots__ = ("entries",)

    def __init__(self, rows: Iterable[Iterable]):
        grid = []
        for row in rows:
            cells = []
            for e in row:
                if not isinstance(e, Poly):
                    if isinstance(e, Scalar):
                        e = Poly([e])
                    else:
                        raise InvalidInput("matrix entries must be Poly or scalar")
                cells.append(e)
            grid.append(tuple(cells))
        if grid:
            width = len(grid[0])
            if any(len(r) != width for r in grid):
                raise InvalidInput("matrix rows must all have the same length")
            if width == 0:
                raise InvalidInput("matrix rows must be nonempty")
        self.entries = tuple(grid)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, pos) -> Poly:
        i, j = pos
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        body = "; ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)
        return f"Matrix({body})"


def det_fraction_free(m: Matrix) -> Poly:
    """Determinant by one-step fraction-free (Bareiss) elimination.

    Every division performed is exact in Q[x], which the algorithm guarantees
    for matrices over an integral domain.  The determinant of the empty (0x0)
    matrix is 1.
    """
    if m.nrows != m.ncols:
        raise InvalidInput("determinant requires a square matrix")
    n = m.nrows
    if n == 0:
        return Poly.one()
    grid = [list(row) for row in m.entries]
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if grid[k][k].is_zero():
            for i in range(k + 1, n):
                if not grid[i][k].is_zero():
                    grid[k], grid[i] = grid[i], grid[k]
                    sign = -sign
                    break
            else:
                return Poly()
        pivot = grid[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = pivot * grid[i][j] - grid[i][k] * grid[k][j]
                grid[i][j] = elt.exact_div(prev)
            grid[i][k] = Poly()
        prev = pivot
    result = grid[n - 1][n - 1]
    return result if sign > 0 else -result


def sylvester(a: BiPoly, b: BiPoly) -> Matrix:
    """Sylvester matrix of a and b as polynomials in y.

    With m = ydeg(a) and n = ydeg(b) the matrix is (m+n) x (m+n): first n
    shifted rows of a's y-coefficients in descending order, then m shifted
    rows of b's.  Its determinant is the resultant with respect to y.
    """
    if a.is_zero() or b.is_zero():
        raise InvalidInput("sylvester matrix requires nonzero polynomials")
    m, n = a.ydegree, b.ydegree
    size = m + n
    if size == 0:
        return Matrix(())
    a_desc = [a[m - k] for k in range(m + 1)]
    b_desc = [b[n - k] for k in range(n + 1)]
    rows = []
    for s in range(n):
        rows.append([Poly()] * s + a_desc + [Poly()] * (size - m - 1 - s))
    for s in range(m):
        rows.append([Poly()] * s + b_desc + [Poly()] * (size - n - 1 - s))
    return Matrix(rows)


def resultant(a: BiPoly, b: BiPoly) -> Poly:
    """Resultant of a and b with respect to y, via the Sylvester determinant.

    For a = a_m * prod(y - alpha_i) and b = b_n * prod(y - beta_j) this equals
    a_m^n * b_n^m * prod_{i,j} (alpha_i - beta_j).
    """
    return det_fraction_free(sylvester(a, b))


def sub_one_minus_y(p: Poly, power: Optional[int] = None) -> BiPoly:
    """(1-y)^e * p(x/(1-y)) as a BiPoly, where e defaults to deg(p).

    Expands to sum_i p_i x^i (1-y)^{e-i}; e may exceed deg(p) but not fall
    short of it.  For p = prod(1 - alpha_i x) and e = deg(p) the result is
    prod((1 - alpha_i x) - y), the left argument of the binomial-denominator
    resultant.
    """
    if p.is_zero():
        raise InvalidInput("substitution of the zero polynomial is not useful")
    e = p.degree if power is None else power
    if e < p.degree:
        raise InvalidInput("power must be at least deg(p)")
    one_minus_y = BiPoly([Poly.one(), Poly([-1])])
    acc = BiPoly()
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        acc = acc + one_minus_y ** (e - i) * Poly.monomial(i, c)
    return acc


def sub_x_over_y(p: Poly, power: Optional[int] = None) -> BiPoly:
    """y^e * p(x/y) as a BiPoly, where e defaults to deg(p).

    The coefficient of y^{e-j} is p_j x^j.  For p = prod(1 - beta_j x) and
    e = deg(p) the result is prod(y - beta_j x).
    """
    if p.is_zero():
        raise InvalidInput("substitution of the zero polynomial is not useful")
    e = p.degree if power is None else power
    if e < p.degree:
        raise InvalidInput("power must be at least deg(p)")
    out = [Poly() for _ in range(e + 1)]
    for j, c in enumerate(p.coeffs):
        out[e - j] = Poly.monomial(j, c)
    return BiPoly(out)


def lift_to_y(p: Poly) -> BiPoly:
    """p(y): the same coefficients read as constants in x."""
    if p.is_zero():
        raise InvalidInput("substitution of the zero polynomial is not useful")
    return BiPoly([Poly([c]) for c in p.coeffs])


def _row_reduce(rows: Sequence[Sequence], rhs: Sequence, zero):
    """Gauss-Jordan elimination over any exact field.

    Returns (reduced augmented matrix, pivot columns, consistent).  Entries
    must support +, -, *, / and truth testing for nonzero.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    nvars = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(nvars):
        pivot_row = None
        for i in range(r, len(aug)):
            if aug[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pv = aug[r][col]
        aug[r] = [e / pv for e in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [e - f * p for e, p in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    consistent = all(not aug[i][-1] for i in range(r, len(aug)))
    return aug, pivots, consistent


def solve_exact(rows: Sequence[Sequence], rhs: Sequence, zero):
    """One exact solution of rows * v = rhs, or None if inconsistent.

    Free variables are set to zero.  Works over Fraction or any field type
    with the same operator protocol.
    """
    if len(rows) != len(rhs):
        raise InvalidInput("matrix and right-hand side sizes differ")
    nvars = len(rows[0]) if rows else 0
    aug, pivots, consistent = _row_reduce(rows, rhs, zero)
    if not consistent:
        return None
    sol = [zero] * nvars
    for i, col in enumerate(pivots):
        sol[col] = aug[i][-1]
    return sol


def solve_unique(rows: Sequence[Sequence], rhs: Sequence, zero):
    """The unique solution of rows * v = rhs, or None if singular/inconsistent."""
    if len(rows) != len(rhs):
        raise InvalidInput("matrix and right-hand side sizes differ")
    nvars = len(rows[0]) if rows else 0
    aug, pivots, consistent = _row_reduce(rows, rhs, zero)
    if not consistent or len(pivots) != nvars:
        return None
    sol = [zero] * nvars
    for i, col in enumerate(pivots):
        sol[col] = aug[i][-1]
    return sol
