"""Exact scalar arithmetic: rational functions in one indeterminate Q over
the rational numbers.

Every coefficient produced by the engine (relation scalars, structure
constants, decomposition coefficients) lives in this field, so all equality
checks are exact and structural.  Canonical form of a rational function:

* numerator and denominator share no polynomial factor (gcd removed),
* the denominator is monic (leading coefficient 1) and nonzero.

Two values are equal as field elements iff they are structurally equal.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PoleError

__all__ = [
    "PolynomialQ",
    "RationalFunctionQ",
    "POLY_Q",
    "POLY_ONE",
    "POLY_ZERO",
    "QV",
    "ONE",
    "ZERO",
    "Q_MINUS_1",
    "scalar_add",
    "scalar_mul",
    "scalar_inv",
    "scalar_eval",
    "poly_gcd",
    "poly_to_json",
    "poly_from_json",
    "rf_to_json",
    "rf_from_json",
]

_Rat = int | Fraction


class PolynomialQ:
    """A polynomial in Q with Fraction coefficients.

    Stored sparsely as ascending (exponent, coefficient) pairs; no stored
    coefficient is zero and the zero polynomial has no pairs at all.
    Instances are immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, coeffs: dict[int, _Rat] | None = None):
        terms = []
        if coeffs:
            for exp in sorted(coeffs):
                c = Fraction(coeffs[exp])
                if c != 0:
                    if exp < 0:
                        raise ValueError("negative exponent")
                    terms.append((exp, c))
        object.__setattr__(self, "_terms", tuple(terms))

    def __setattr__(self, *args):
        raise AttributeError("PolynomialQ is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has -1."""
        return self._terms[-1][0] if self._terms else -1

    def leading_coefficient(self) -> Fraction:
        return self._terms[-1][1] if self._terms else Fraction(0)

    def coefficient(self, exp: int) -> Fraction:
        for e, c in self._terms:
            if e == exp:
                return c
        return Fraction(0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "PolynomialQ") -> "PolynomialQ":
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return PolynomialQ(acc)

    def __neg__(self) -> "PolynomialQ":
        return PolynomialQ({e: -c for e, c in self._terms})

    def __sub__(self, other: "PolynomialQ") -> "PolynomialQ":
        return self + (-other)

    def __mul__(self, other: "PolynomialQ") -> "PolynomialQ":
        acc: dict[int, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return PolynomialQ(acc)

    def scale(self, s: _Rat) -> "PolynomialQ":
        s = Fraction(s)
        return PolynomialQ({e: c * s for e, c in self._terms})

    def __pow__(self, k: int) -> "PolynomialQ":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = POLY_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "PolynomialQ") -> tuple["PolynomialQ", "PolynomialQ"]:
        """Exact long division: self = q*other + r with deg r < deg other."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q: dict[int, Fraction] = {}
        rem = dict(self._terms)
        dlead, dexp = other.leading_coefficient(), other.degree()

        def rdeg() -> int:
            return max((e for e, c in rem.items() if c != 0), default=-1)

        d = rdeg()
        while d >= dexp:
            factor = rem[d] / dlead
            shift = d - dexp
            q[shift] = factor
            for e, c in other._terms:
                rem[e + shift] = rem.get(e + shift, Fraction(0)) - factor * c
            d = rdeg()
        return PolynomialQ(q), PolynomialQ(rem)

    def __floordiv__(self, other: "PolynomialQ") -> "PolynomialQ":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolynomialQ") -> "PolynomialQ":
        return divmod(self, other)[1]

    def monic(self) -> "PolynomialQ":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_coefficient())

    def eval(self, q0: _Rat) -> Fraction:
        q0 = Fraction(q0)
        acc = Fraction(0)
        for e, c in self._terms:
            acc += c * q0**e
        return acc

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, PolynomialQ) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"PolynomialQ({dict(self._terms)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            if e == 0:
                body = str(c)
            else:
                var = "Q" if e == 1 else f"Q^{e}"
                if c == 1:
                    body = var
                elif c == -1:
                    body = f"-{var}"
                else:
                    body = f"{c}*{var}"
            parts.append(body)
        out = parts[0]
        for body in parts[1:]:
            out += f" - {body[1:]}" if body.startswith("-") else f" + {body}"
        return out


POLY_ZERO = PolynomialQ()
POLY_ONE = PolynomialQ({0: 1})
POLY_Q = PolynomialQ({1: 1})


def poly_gcd(a: PolynomialQ, b: PolynomialQ) -> PolynomialQ:
    """Monic greatest common divisor by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


class RationalFunctionQ:
    """A ratio of two PolynomialQ values in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolynomialQ, den: PolynomialQ = POLY_ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = POLY_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = num // g
                den = den // g
            lead = den.leading_coefficient()
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RationalFunctionQ is immutable")

    @classmethod
    def from_rational(cls, value: _Rat) -> "RationalFunctionQ":
        return cls(PolynomialQ({0: value}))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RationalFunctionQ") -> "RationalFunctionQ":
        return RationalFunctionQ(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFunctionQ":
        return RationalFunctionQ(-self.num, self.den)

    def __sub__(self, other: "RationalFunctionQ") -> "RationalFunctionQ":
        return self + (-other)

    def __mul__(self, other: "RationalFunctionQ") -> "RationalFunctionQ":
        return RationalFunctionQ(self.num * other.num, self.den * other.den)

    def inv(self) -> "RationalFunctionQ":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunctionQ(self.den, self.num)

    def __truediv__(self, other: "RationalFunctionQ") -> "RationalFunctionQ":
        return self * other.inv()

    def __pow__(self, k: int) -> "RationalFunctionQ":
        if k < 0:
            return self.inv() ** (-k)
        return RationalFunctionQ(self.num**k, self.den**k)

    def eval(self, q0: _Rat) -> Fraction:
        """Exact evaluation at a rational point.

        Raises:
            PoleError: if the denominator vanishes at q0.
        """
        d = self.den.eval(q0)
        if d == 0:
            raise PoleError(f"pole at Q = {q0}")
        return self.num.eval(q0) / d

    def is_polynomial(self) -> bool:
        return self.den == POLY_ONE

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunctionQ)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunctionQ({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"


ZERO = RationalFunctionQ(POLY_ZERO)
ONE = RationalFunctionQ(POLY_ONE)
QV = RationalFunctionQ(POLY_Q)
Q_MINUS_1 = RationalFunctionQ(PolynomialQ({0: -1, 1: 1}))


def scalar_add(a: RationalFunctionQ, b: RationalFunctionQ) -> RationalFunctionQ:
    """Exact field sum in canonical form."""
    return a + b


def scalar_mul(a: RationalFunctionQ, b: RationalFunctionQ) -> RationalFunctionQ:
    """Exact field product in canonical form."""
    return a * b


def scalar_inv(a: RationalFunctionQ) -> RationalFunctionQ:
    """Multiplicative inverse; raises ZeroDivisionError on the zero element."""
    return a.inv()


def scalar_eval(a: RationalFunctionQ, q0: _Rat) -> Fraction:
    """Exact evaluation at a non-pole rational point."""
    return a.eval(q0)


# -- serialization ---------------------------------------------------------
#
# A polynomial serializes as an ascending list of [exponent, "p/q"] pairs
# with p/q in lowest terms; a rational function as {"num": ..., "den": ...}
# in canonical form.  Round-trips are bit-exact.


def poly_to_json(p: PolynomialQ) -> list[list]:
    return [[e, str(c)] for e, c in p.terms]


def poly_from_json(data: list) -> PolynomialQ:
    coeffs: dict[int, Fraction] = {}
    for e, c in data:
        e = int(e)
        if e in coeffs:
            raise ValueError(f"duplicate exponent {e}")
        coeffs[e] = Fraction(c)
    return PolynomialQ(coeffs)


def rf_to_json(r: RationalFunctionQ) -> dict:
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def rf_from_json(data: dict) -> RationalFunctionQ:
    return RationalFunctionQ(poly_from_json(data["num"]), poly_from_json(data["den"]))
