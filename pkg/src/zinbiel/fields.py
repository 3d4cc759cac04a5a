"""Exact scalar arithmetic over the rationals and over prime fields GF(p).

Scalars are plain Python values: ``fractions.Fraction`` over the rationals
(automatically kept in lowest terms with a positive denominator) and ints in
``[0, p)`` over GF(p).  A field object supplies the arithmetic, validation and
the literal syntax used by the algebra file format: rational scalars are
strings ``"a"`` or ``"a/b"`` in lowest terms with ``b > 0``, prime-field
scalars are JSON integers already reduced mod p.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .errors import FieldMismatchError, FormatError

MAX_PRIME = 2**31

_RATIONAL_RE = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?\Z")


def is_prime(n: int) -> bool:
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


class Rationals:
    """The field of rational numbers; scalars are Fraction instances."""

    p = None

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

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
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def validate(self, a) -> Fraction:
        """Coerce ints to Fraction; reject anything else that is not exact."""
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int) and not isinstance(a, bool):
            return Fraction(a)
        raise FieldMismatchError(f"not a rational scalar: {a!r}")

    def parse_literal(self, v) -> Fraction:
        if not isinstance(v, str):
            raise FormatError(f"rational scalar must be a string literal, got {v!r}")
        if not _RATIONAL_RE.fullmatch(v):
            raise FormatError(f"invalid rational literal {v!r}")
        if "/" in v:
            num_s, den_s = v.split("/")
            num, den = int(num_s), int(den_s)
            if gcd(abs(num), den) != 1:
                raise FormatError(f"rational literal {v!r} is not in lowest terms")
        else:
            num, den = int(v), 1
        return Fraction(num, den)

    def format_literal(self, a: Fraction) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"


class PrimeField:
    """GF(p) for a prime p < 2**31; scalars are ints reduced mod p."""

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise FormatError(f"field modulus must be an integer, got {p!r}")
        if p >= MAX_PRIME:
            raise FormatError(f"field modulus {p} out of range (must be < 2**31)")
        if not is_prime(p):
            raise FormatError(f"field modulus {p} is not prime")
        self.p = p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def from_int(self, n: int) -> int:
        return n % self.p

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
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def validate(self, a) -> int:
        if isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.p:
            return a
        raise FieldMismatchError(f"not a reduced GF({self.p}) scalar: {a!r}")

    def parse_literal(self, v) -> int:
        if not isinstance(v, int) or isinstance(v, bool):
            raise FormatError(f"GF({self.p}) scalar must be an integer, got {v!r}")
        if not 0 <= v < self.p:
            raise FormatError(f"GF({self.p}) scalar {v} not reduced into [0, {self.p})")
        return v

    def format_literal(self, a: int) -> int:
        return a


QQ = Rationals()


def field_to_json(field):
    """Field tag for the algebra file format: "Q" or {"p": prime}."""
    if isinstance(field, Rationals):
        return "Q"
    return {"p": field.p}


def field_from_json(tag):
    if tag == "Q":
        return QQ
    if isinstance(tag, dict) and set(tag) == {"p"}:
        return PrimeField(tag["p"])
    raise FormatError(f'field must be "Q" or {{"p": prime}}, got {tag!r}')


def parse_field(text: str):
    """Parse a CLI field argument: "Q"/"q" or a prime written in decimal."""
    if text.strip().upper() == "Q":
        return QQ
    try:
        p = int(text)
    except ValueError:
        raise FormatError(f"field must be Q or a prime, got {text!r}") from None
    return PrimeField(p)


def check_same_field(a, b):
    if a != b:
        raise FieldMismatchError(f"mixed fields: {a!r} vs {b!r}")
