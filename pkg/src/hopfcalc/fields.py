"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are plain Python values -- `fractions.Fraction` over Q and ints in
[0, p) over F_p -- tagged by the `Field` they belong to.  All arithmetic is
exact; there is no floating point anywhere in this package.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """A coefficient field: characteristic 0 means Q, a prime p means F_p."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not is_prime(self.char):
            raise ValueError(f"characteristic must be 0 or prime, got {self.char}")

    @property
    def is_rational(self) -> bool:
        return self.char == 0

    # -- element construction -------------------------------------------------

    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def of(self, n) -> object:
        """Coerce an int, Fraction, or 'p/q' string into this field."""
        if isinstance(n, str):
            n = Fraction(n)
        if self.char == 0:
            return Fraction(n)
        if isinstance(n, Fraction):
            if n.denominator % self.char == 0:
                raise ZeroDivisionError(f"{n} has no image in F_{self.char}")
            return (n.numerator * pow(n.denominator, -1, self.char)) % self.char
        return int(n) % self.char

    # -- arithmetic -----------------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.char if self.char else a + b

    def sub(self, a, b):
        return (a - b) % self.char if self.char else a - b

    def mul(self, a, b):
        return (a * b) % self.char if self.char else a * b

    def neg(self, a):
        return (-a) % self.char if self.char else -a

    def inv(self, a):
        if self.char:
            if a % self.char == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(a, -1, self.char)
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return (a % self.char == 0) if self.char else a == 0

    # -- serialization --------------------------------------------------------

    def to_str(self, a) -> str:
        return str(a)

    @staticmethod
    def parse(name: str) -> "Field":
        """Parse a field descriptor: 'Q' or 'Fp' (e.g. 'F7')."""
        name = name.strip()
        if name in ("Q", "QQ", "0"):
            return QQ
        if name.startswith("F"):
            p = int(name[1:])
            return Field(p)
        raise ValueError(f"unknown field descriptor {name!r}")

    def __str__(self):
        return "Q" if self.char == 0 else f"F{self.char}"


QQ = Field(0)
GF = Field
