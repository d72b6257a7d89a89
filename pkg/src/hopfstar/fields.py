"""Exact ground fields: the rationals Q and prime fields F_p.

Every coefficient anywhere in the package is an element of one of these
two fields and all arithmetic is exact: rationals are reduced fractions
with arbitrary-precision integer numerator and denominator, prime-field
elements are residues in [0, p).  Floats are rejected outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, InvalidParameter

MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3,215,031,751."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 7, 61):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: kind "Q" (rationals) or "Fp" (prime field).

    For "Fp" the modulus must be a prime below 2**31 so that products of
    residues fit comfortably in 64-bit intermediates.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise InvalidParameter("the rationals take no modulus")
        elif self.kind == "Fp":
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise InvalidParameter(f"modulus {self.p!r} is not prime")
            if self.p >= MAX_PRIME:
                raise InvalidParameter(f"modulus {self.p} must be < 2**31")
        else:
            raise InvalidParameter(f"unknown field kind {self.kind!r}")

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("Q")

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec("Fp", p)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    def coerce(self, value):
        """Convert ``value`` to the canonical internal representation.

        Q: a reduced Fraction.  F_p: an int in [0, p); fractions are
        resolved via the modular inverse of the denominator.  Floats are
        rejected (no silent loss of exactness).
        """
        if isinstance(value, float):
            raise InvalidParameter(f"refusing float coefficient {value!r}")
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field} value used in {self}")
            return value.value
        if self.kind == "Q":
            return Fraction(value)
        frac = Fraction(value) if not isinstance(value, int) else None
        if frac is not None:
            num, den = frac.numerator, frac.denominator
        else:
            num, den = value, 1
        if den % self.p == 0:
            raise DivisionByZero(f"denominator {den} vanishes mod {self.p}")
        r = num % self.p
        if den != 1:
            r = r * pow(den, -1, self.p) % self.p
        return r

    def value_str(self, value) -> str:
        return str(value)

    def __str__(self):
        return "Q" if self.kind == "Q" else f"F{self.p}"


@dataclass(frozen=True)
class Scalar:
    """One exact field element tagged with the field it lives in."""

    field: FieldSpec
    value: Fraction | int

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    @staticmethod
    def zero(field: FieldSpec) -> "Scalar":
        return Scalar(field, 0)

    @staticmethod
    def one(field: FieldSpec) -> "Scalar":
        return Scalar(field, 1)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def _other(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            return Scalar(self.field, other)
        if other.field != self.field:
            raise FieldMismatch(f"cannot mix {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._other(other)
        return Scalar(self.field, self.value + other.value)

    def __sub__(self, other):
        other = self._other(other)
        return Scalar(self.field, self.value - other.value)

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def __mul__(self, other):
        other = self._other(other)
        return Scalar(self.field, self.value * other.value)

    def __truediv__(self, other):
        other = self._other(other)
        if other.is_zero:
            raise DivisionByZero("division by zero scalar")
        if self.field.kind == "Q":
            return Scalar(self.field, self.value / other.value)
        inv = pow(other.value, -1, self.field.p)
        return Scalar(self.field, self.value * inv)

    def inverse(self) -> "Scalar":
        return Scalar.one(self.field) / self

    def __str__(self):
        return str(self.value)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Dispatch exact scalar arithmetic: op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise InvalidParameter(f"unknown scalar operation {op!r}")
