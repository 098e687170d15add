"""Exact field arithmetic over Q and over odd prime fields F_p.

Every scalar quantity in this package is a FieldElement: a reduced
arbitrary-precision fraction when the field is Q, or a canonical residue
in [0, p) when the field is F_p.  Characteristic 2 is excluded because
polarisation divides by 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class FieldError(Exception):
    """Base class for field arithmetic errors."""


class InvalidFieldSpec(FieldError):
    """Modulus is 2, composite, or otherwise not an odd prime."""


class MalformedLiteral(FieldError):
    """Element literal does not match the interchange grammar."""


class ZeroDenominator(FieldError):
    """Rational literal with denominator 0."""


class DivisionByZero(FieldError):
    """Division by, or inversion of, the zero element."""


class MixedFields(FieldError):
    """Operands drawn from different fields."""


def _is_prime(n: int) -> bool:
    # trial division; moduli at desk scale are small
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Identifies the coefficient field: Q when p is None, else F_p."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is None:
            return
        if self.p == 2:
            raise InvalidFieldSpec("characteristic 2 is excluded")
        if not _is_prime(self.p):
            raise InvalidFieldSpec(f"modulus {self.p} is not prime")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def element(self, value: int | Fraction) -> "FieldElement":
        return FieldElement(self, value)

    def random_element(self, rng, max_numerator: int = 100,
                       max_denominator: int = 100) -> "FieldElement":
        """Uniform residue over F_p; bounded random fraction over Q."""
        if self.p is not None:
            return FieldElement(self, rng.randrange(self.p))
        return FieldElement(self, Fraction(rng.randint(-max_numerator, max_numerator),
                                           rng.randint(1, max_denominator)))

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"


_RATIONAL_LIT = re.compile(r"-?[0-9]+(?:/[0-9]+)?")
_INTEGER_LIT = re.compile(r"-?[0-9]+")


class FieldElement:
    """Immutable element of Q or F_p, always held in canonical form."""

    __slots__ = ("spec", "_value")

    def __init__(self, spec: FieldSpec, value: int | Fraction):
        if spec.p is None:
            if not isinstance(value, (int, Fraction)):
                raise TypeError(f"cannot build a rational element from {type(value).__name__}")
            self._value = Fraction(value)
        else:
            if not isinstance(value, int):
                raise TypeError(f"cannot build an F_{spec.p} element from {type(value).__name__}")
            self._value = value % spec.p
        self.spec = spec

    # -- views ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self._value == 0

    @property
    def is_one(self) -> bool:
        return self._value == 1

    @property
    def numerator(self) -> int:
        if self.spec.p is not None:
            raise TypeError("numerator is a rational-field view")
        return self._value.numerator

    @property
    def denominator(self) -> int:
        if self.spec.p is not None:
            raise TypeError("denominator is a rational-field view")
        return self._value.denominator

    @property
    def residue(self) -> int:
        if self.spec.p is None:
            raise TypeError("residue is a prime-field view")
        return self._value

    def literal(self) -> str:
        # Fraction prints "n" or "n/d" with positive denominator, which is
        # exactly the interchange grammar; residues print in decimal.
        return str(self._value)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise MixedFields(f"cannot combine {self.spec} and {other.spec} elements")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return FieldElement(self.spec, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self._value + o._value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self._value - o._value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, o._value - self._value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.spec, self._value * o._value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return FieldElement(self.spec, -self._value)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.spec.p is not None:
            return FieldElement(self.spec, pow(self._value, exponent, self.spec.p))
        return FieldElement(self.spec, self._value ** exponent)

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise DivisionByZero("the zero element has no inverse")
        if self.spec.p is not None:
            # Fermat: x^(p-2) inverts x in F_p
            return FieldElement(self.spec, pow(self._value, self.spec.p - 2, self.spec.p))
        return FieldElement(self.spec, 1 / self._value)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec == other.spec and self._value == other._value

    def __hash__(self) -> int:
        return hash((self.spec, self._value))

    def __str__(self) -> str:
        return self.literal()

    def __repr__(self) -> str:
        return f"FieldElement({self.literal()}, {self.spec})"


def parse_element(text: str, spec: FieldSpec) -> FieldElement:
    """Parse an element literal: `[-]?digits(/digits)?` over Q, `[-]?digits` over F_p."""
    if spec.p is None:
        if not _RATIONAL_LIT.fullmatch(text):
            raise MalformedLiteral(f"{text!r} is not a rational literal")
        num, _, den = text.partition("/")
        if not den:
            return FieldElement(spec, Fraction(int(num)))
        if int(den) == 0:
            raise ZeroDenominator(f"{text!r} has denominator zero")
        return FieldElement(spec, Fraction(int(num), int(den)))
    if not _INTEGER_LIT.fullmatch(text):
        raise MalformedLiteral(f"{text!r} is not an integer literal")
    return FieldElement(spec, int(text))


def render(x: FieldElement) -> str:
    """Canonical literal; parse_element(render(x), x.spec) == x."""
    return x.literal()


def invert(x: FieldElement) -> FieldElement:
    return x.inverse()
