"""Exact coefficient fields: the rationals and prime fields GF(p).

Every computation in this package is exact.  Rational numbers are
``fractions.Fraction``; elements of GF(p) are plain machine integers in
``range(p)`` with modular arithmetic.  A field object carries the arithmetic,
matrices store bare elements.
"""

from fractions import Fraction

from .errors import DomainError


def _is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class RationalField:
    """The field of rational numbers, elements are Fraction instances."""

    characteristic = 0

    def of(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise DomainError(f"cannot coerce {x!r} into Q")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(("field", 0))

    def __repr__(self):
        return "Q"


class PrimeField:
    """GF(p) for a prime p; elements are ints in range(p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def of(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise DomainError(f"bad reduction: denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(den, self.p - 2, self.p) % self.p
        if isinstance(x, str):
            return self.of(Fraction(x))
        raise DomainError(f"cannot coerce {x!r} into GF({self.p})")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("field", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def field_from_name(name):
    """Parse "Q" or "Fp:<prime>" into a field object (the rep-file syntax)."""
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise DomainError(f"malformed field name {name!r}") from None
        return PrimeField(p)
    raise DomainError(f"unknown field {name!r}")


def field_name(field):
    if field.characteristic == 0:
        return "Q"
    return f"Fp:{field.characteristic}"
