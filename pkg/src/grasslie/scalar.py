"""Scalars over the three normed division algebras R, C and H.

Quaternionic vector spaces in this package are right modules: basis
columns take coefficients on the right while matrices act on the left,
so matrix algebra keeps the usual row-times-column rule even though
quaternion multiplication does not commute.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import SCALAR_TOL
from .errors import WrongField, ZeroDivisor

REAL = "R"
COMPLEX = "C"
QUATERNION = "H"
FIELDS = (REAL, COMPLEX, QUATERNION)

_REAL_DIM = {REAL: 1, COMPLEX: 2, QUATERNION: 4}


def check_field(field: str) -> str:
    if field not in FIELDS:
        raise WrongField(f"unknown scalar field {field!r}")
    return field


def real_dim(field: str) -> int:
    """Dimension of the field as a real vector space: 1, 2 or 4."""
    check_field(field)
    return _REAL_DIM[field]


@dataclass(frozen=True)
class Quaternion:
    """w + x*i + y*j + z*k with double-precision components."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "w", float(self.w))
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        object.__setattr__(self, "z", float(self.z))

    def __add__(self, other):
        other = as_quaternion(other)
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        return self + (-as_quaternion(other))

    def __rsub__(self, other):
        return as_quaternion(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            s = float(other)
            return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s)
        other = as_quaternion(other)
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = other.w, other.x, other.y, other.z
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * float(other)
        return as_quaternion(other) * self

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return math.sqrt(self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2)

    __abs__ = norm

    def inverse(self) -> "Quaternion":
        return quat_inverse(self)

    def as_complex_pair(self) -> tuple[complex, complex]:
        """(a, b) with q = a + b*j and a, b in C = R + R*i."""
        return complex(self.w, self.x), complex(self.y, self.z)

    @classmethod
    def from_complex_pair(cls, a: complex, b: complex) -> "Quaternion":
        a, b = complex(a), complex(b)
        return cls(a.real, a.imag, b.real, b.imag)

    def components(self) -> list[float]:
        return [self.w, self.x, self.y, self.z]

    @classmethod
    def from_components(cls, wxyz) -> "Quaternion":
        w, x, y, z = (float(t) for t in wxyz)
        return cls(w, x, y, z)

    def isclose(self, other, tol: float = SCALAR_TOL) -> bool:
        return (self - as_quaternion(other)).norm() <= tol


ONE = Quaternion(1.0)
QI = Quaternion(0.0, 1.0)
QJ = Quaternion(0.0, 0.0, 1.0)
QK = Quaternion(0.0, 0.0, 0.0, 1.0)


def as_quaternion(value) -> Quaternion:
    """Coerce a real or complex number (or Quaternion) to a Quaternion."""
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, complex):
        return Quaternion(value.real, value.imag)
    if isinstance(value, (int, float)):
        return Quaternion(float(value))
    raise WrongField(f"cannot interpret {value!r} as a quaternion")


def conj(a):
    """Conjugation in the ambient field; the identity on reals."""
    if isinstance(a, Quaternion):
        return a.conjugate()
    if isinstance(a, complex):
        return a.conjugate()
    if isinstance(a, (int, float)):
        return float(a)
    raise WrongField(f"cannot conjugate {a!r}")


def quat_inverse(q: Quaternion) -> Quaternion:
    """Multiplicative inverse conj(q) / |q|^2."""
    q = as_quaternion(q)
    n = q.norm()
    if n <= SCALAR_TOL:
        raise ZeroDivisor(f"quaternion with |q| = {n:.3e} is not invertible")
    return q.conjugate() * (1.0 / (n * n))
