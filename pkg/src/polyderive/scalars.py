"""Exact scalars: arbitrary-precision rationals plus quadratic extensions.

Rational values are plain ``fractions.Fraction`` objects, which are always
stored in lowest terms with a positive denominator. :class:`QuadExt` layers a
formal ``sqrt(d)`` on top of them for the constructions whose scale factor is
irrational. No floating point enters any computation in this module; the
identities the rest of the library checks are polynomial and must hold
exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, "QuadExt"]


class RadicandMismatchError(ValueError):
    """Two extension values with different radicands were combined."""


def rational(numerator: int = 0, denominator: int = 1) -> Fraction:
    """Canonical rational from an integer pair.

    Reduction and sign normalization are automatic; a zero denominator raises
    ``ZeroDivisionError``.
    """
    return Fraction(numerator, denominator)


def parse_rational(value: int | str | Fraction) -> Fraction:
    """Parse an exact rational from an int, a ``"p/q"`` string, or a decimal string.

    Decimal strings convert exactly (power-of-ten denominators). Binary floats
    are rejected: accepting them would smuggle rounding error into an exact
    pipeline.
    """
    if isinstance(value, bool):
        raise TypeError(f"not a rational value: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse rational from {value!r}") from exc
    raise TypeError(f"cannot parse rational from {type(value).__name__} value {value!r}")


def format_rational(value: Fraction) -> str:
    """``"p/q"``, or just ``"p"`` when the denominator is one."""
    return str(value)


def _sign_of_fraction(value: Fraction) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


class QuadExt:
    """Value ``a + b*sqrt(d)`` over the rationals, for one fixed radicand ``d > 0``.

    The radicand is kept exactly as given, with no square-free reduction:
    every pipeline in this library lives inside a single extension fixed per
    polygon, so identifying ``sqrt(8/5)`` with ``(2/5)*sqrt(10)`` would buy
    nothing. Arithmetic between values carrying different radicands raises
    :class:`RadicandMismatchError`. Should ``d`` happen to be the square of a
    rational, the pair arithmetic is still exact; the degeneracy only
    surfaces in :meth:`inverse` and :meth:`sign`, which then raise.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: int | str | Fraction, b: int | str | Fraction, d: int | str | Fraction) -> None:
        radicand = parse_rational(d)
        if radicand <= 0:
            raise ValueError(f"radicand must be positive, got {radicand}")
        self._a = parse_rational(a)
        self._b = parse_rational(b)
        self._d = radicand

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> Fraction:
        return self._d

    @classmethod
    def from_rational(cls, value: int | Fraction, d: int | Fraction) -> QuadExt:
        return cls(Fraction(value), Fraction(0), d)

    @classmethod
    def sqrt(cls, d: int | Fraction) -> QuadExt:
        """The positive square root of ``d`` as an extension element."""
        return cls(Fraction(0), Fraction(1), d)

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def _lift(self, other: object) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other._d != self._d:
                raise RadicandMismatchError(
                    f"radicands differ: {self._d} vs {other._d}"
                )
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self._d)
        return None

    def __add__(self, other: object) -> QuadExt:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return QuadExt(self._a + rhs._a, self._b + rhs._b, self._d)

    __radd__ = __add__

    def __sub__(self, other: object) -> QuadExt:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return QuadExt(self._a - rhs._a, self._b - rhs._b, self._d)

    def __rsub__(self, other: object) -> QuadExt:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return QuadExt(rhs._a - self._a, rhs._b - self._b, self._d)

    def __neg__(self) -> QuadExt:
        return QuadExt(-self._a, -self._b, self._d)

    def __pos__(self) -> QuadExt:
        return self

    def __mul__(self, other: object) -> QuadExt:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return QuadExt(
            self._a * rhs._a + self._b * rhs._b * self._d,
            self._a * rhs._b + self._b * rhs._a,
            self._d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> QuadExt:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> QuadExt:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return rhs * self.inverse()

    def inverse(self) -> QuadExt:
        """Multiplicative inverse ``(a - b*sqrt(d)) / (a^2 - b^2 d)``.

        A vanishing conjugate norm with a nonzero value means ``d`` is the
        square of a rational; that degenerate use is reported, not absorbed.
        """
        if not self:
            raise ZeroDivisionError("inverse of zero")
        norm = self._a * self._a - self._b * self._b * self._d
        if norm == 0:
            raise ValueError(
                f"conjugate norm vanished for {self!r}: the radicand {self._d} "
                "is the square of a rational"
            )
        return QuadExt(self._a / norm, -self._b / norm, self._d)

    def sign(self) -> int:
        """Exact sign of the real number ``a + b*sqrt(d)``."""
        if self._b == 0:
            return _sign_of_fraction(self._a)
        if self._a == 0:
            return _sign_of_fraction(self._b)
        sign_a = _sign_of_fraction(self._a)
        if sign_a == _sign_of_fraction(self._b):
            return sign_a
        # a and b*sqrt(d) pull in opposite directions: the larger square wins.
        left = self._a * self._a
        right = self._b * self._b * self._d
        if left == right:
            raise ValueError(
                f"sign of {self!r} undecidable as a formal pair: the radicand "
                f"{self._d} is the square of a rational"
            )
        return sign_a if left > right else -sign_a

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadExt):
            if other._d != self._d:
                if self._b == 0 and other._b == 0:
                    return self._a == other._a
                raise RadicandMismatchError(
                    f"cannot compare values over sqrt({self._d}) and sqrt({other._d})"
                )
            return self._a == other._a and self._b == other._b
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * math.sqrt(float(self._d))

    def __repr__(self) -> str:
        return f"QuadExt({self._a}, {self._b}, d={self._d})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        radical = f"sqrt({self._d})"
        if self._b == 1:
            tail = radical
        elif self._b == -1:
            tail = f"-{radical}"
        else:
            tail = f"{self._b}*{radical}"
        if self._a == 0:
            return tail
        joiner = "+" if self._b > 0 else ""
        return f"{self._a}{joiner}{tail}"


def scalar_sign(value: Scalar | int) -> int:
    """Exact sign (-1, 0, +1) for any scalar of the tower."""
    if isinstance(value, QuadExt):
        return value.sign()
    return _sign_of_fraction(Fraction(value))


def scalar_to_float(value: Scalar | int) -> float:
    return float(value)


def format_scalar(value: Scalar | int) -> str | dict[str, str]:
    """JSON form: rationals as ``"p/q"`` strings, extension values as objects."""
    if isinstance(value, QuadExt):
        return {"a": str(value.a), "b": str(value.b), "d": str(value.d)}
    return str(Fraction(value))


def parse_scalar(obj: object) -> Scalar:
    """Inverse of :func:`format_scalar`."""
    if isinstance(obj, dict):
        missing = {"a", "b", "d"} - set(obj)
        if missing:
            raise ValueError(f"extension scalar object lacks keys {sorted(missing)}")
        return QuadExt(parse_rational(obj["a"]), parse_rational(obj["b"]), parse_rational(obj["d"]))
    if isinstance(obj, (int, str, Fraction)):
        return parse_rational(obj)
    raise TypeError(f"cannot parse scalar from {type(obj).__name__} value {obj!r}")
