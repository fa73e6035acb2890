"""3-vector algebra over the exact scalar tower: dot, cross, mixed, area vector."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .scalars import QuadExt, Scalar, parse_rational


@dataclass(frozen=True)
class Vec3:
    """Immutable 3-vector with exact components (rational or one fixed extension)."""

    x: Scalar
    y: Scalar
    z: Scalar

    @classmethod
    def of(cls, x: object, y: object, z: object) -> Vec3:
        """Convenience constructor coercing ints and rational strings."""
        return cls(_component(x), _component(y), _component(z))

    def __add__(self, other: Vec3) -> Vec3:
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Vec3) -> Vec3:
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> Vec3:
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, factor: object) -> Vec3:
        if isinstance(factor, Vec3):
            return NotImplemented
        return Vec3(self.x * factor, self.y * factor, self.z * factor)

    __rmul__ = __mul__

    def map(self, fn: Callable[[Scalar], Scalar]) -> Vec3:
        return Vec3(fn(self.x), fn(self.y), fn(self.z))

    def is_zero(self) -> bool:
        return not (self.x or self.y or self.z)

    def __iter__(self) -> Iterator[Scalar]:
        return iter((self.x, self.y, self.z))

    def to_floats(self) -> tuple[float, float, float]:
        return (float(self.x), float(self.y), float(self.z))


def _component(value: object) -> Scalar:
    if isinstance(value, (Fraction, QuadExt)):
        return value
    if isinstance(value, (int, str)):
        return parse_rational(value)
    raise TypeError(f"cannot build a vector component from {value!r}")


def vec3(x: object, y: object, z: object) -> Vec3:
    return Vec3.of(x, y, z)


ZERO_VEC = Vec3(Fraction(0), Fraction(0), Fraction(0))


def dot(a: Vec3, b: Vec3) -> Scalar:
    return a.x * b.x + a.y * b.y + a.z * b.z


def cross(a: Vec3, b: Vec3) -> Vec3:
    """Right-handed cross product; orthogonal to both arguments."""
    return Vec3(
        a.y * b.z - a.z * b.y,
        a.z * b.x - a.x * b.z,
        a.x * b.y - a.y * b.x,
    )


def mixed(a: Vec3, b: Vec3, c: Vec3) -> Scalar:
    """Determinant with rows a, b, c, evaluated as dot(a, cross(b, c)).

    One code path for the determinant keeps every caller on identical exact
    arithmetic.
    """
    return dot(a, cross(b, c))


def area_vector(points: Sequence[Vec3]) -> Vec3:
    """Cyclic sum of cross(p_i, p_{i+1}): twice the oriented-area vector.

    Left un-halved so the result stays in the same field as the inputs;
    callers only ever compare it against zero. Translation-invariant, and for
    a planar polygon it vanishes exactly when the oriented area does.
    """
    count = len(points)
    if count < 3:
        raise ValueError(f"area vector needs at least 3 points, got {count}")
    total = ZERO_VEC
    for i, point in enumerate(points):
        total = total + cross(point, points[(i + 1) % count])
    return total
