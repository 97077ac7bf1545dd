"""Exact base fields: prime fields GF(p) and the rationals.

Scalars are plain Python values: ints reduced to [0, p) for GF(p) and
`fractions.Fraction` for the rationals.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# p*p*dim must stay inside int64 for the dense kernels; desk scale needs
# only small primes anyway.
PRIME_LIMIT = 1 << 20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p) for a prime p, or the rationals when p is None."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not _is_prime(self.p):
                raise ValueError(f"field characteristic must be prime, got {self.p}")
            if self.p >= PRIME_LIMIT:
                raise ValueError(f"prime fields are supported for p < {PRIME_LIMIT}")

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def coerce(self, value):
        """Canonical scalar: int in [0, p) or a reduced Fraction."""
        if self.p is None:
            if isinstance(value, str):
                return Fraction(value)
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator not invertible mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, str):
            value = Fraction(value)
            return self.coerce(value)
        return int(value) % self.p

    def inv(self, value):
        if self.p is None:
            return Fraction(1) / Fraction(value)
        return pow(int(value), -1, self.p)

    def neg(self, value):
        if self.p is None:
            return -Fraction(value)
        return (-int(value)) % self.p

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"


QQ = FieldSpec(None)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)
