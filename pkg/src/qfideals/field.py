"""Quadratic fields Q(sqrt D) and exact arithmetic in their rings of integers.

An element is stored by its numerator pair: (u + v*sqrt(D)) / delta with
delta = 2 exactly when D == 1 (mod 4), in which case u and v must share
parity.  All arithmetic stays integral; there is never a rational in sight.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import DomainError
from .intkernel import is_squarefree

if TYPE_CHECKING:
    from .principality import SplitPrimeIdeal


@dataclass(frozen=True)
class QuadraticField:
    """Context object for Q(sqrt D): squarefree D with its delta and discriminant."""

    D: int
    delta: int
    discriminant: int

    def element(self, u: int, v: int) -> QuadraticInteger:
        return QuadraticInteger(u, v, self)

    def integer(self, k: int) -> QuadraticInteger:
        """The rational integer k as an element of O_K."""
        return QuadraticInteger(k * self.delta, 0, self)

    def __repr__(self) -> str:
        return f"QuadraticField(D={self.D})"


def make_field(D: int) -> QuadraticField:
    """Validated field context; rejects D in {0, 1} and non-squarefree D."""
    if D in (0, 1):
        raise DomainError(f"D = {D} does not define a quadratic field")
    if not is_squarefree(D):
        raise DomainError(f"D = {D} is not squarefree")
    if D % 4 == 1:
        return QuadraticField(D, 2, D)
    return QuadraticField(D, 1, 4 * D)


@dataclass(frozen=True)
class QuadraticInteger:
    """Element (u + v*sqrt(D)) / delta of O_K."""

    u: int
    v: int
    field: QuadraticField

    def __post_init__(self) -> None:
        if self.field.delta == 2 and (self.u - self.v) % 2 != 0:
            raise DomainError(
                f"numerator pair ({self.u}, {self.v}) breaks the parity "
                f"invariant for D = {self.field.D}"
            )

    def _coerce(self, other) -> QuadraticInteger | None:
        if isinstance(other, int):
            return self.field.integer(other)
        if isinstance(other, QuadraticInteger):
            if other.field != self.field:
                raise DomainError("mixed-field arithmetic")
            return other
        return None

    def __add__(self, other) -> QuadraticInteger:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticInteger(self.u + o.u, self.v + o.v, self.field)

    __radd__ = __add__

    def __sub__(self, other) -> QuadraticInteger:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QuadraticInteger:
        return (-self) + other

    def __neg__(self) -> QuadraticInteger:
        return QuadraticInteger(-self.u, -self.v, self.field)

    def __mul__(self, other) -> QuadraticInteger:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.delta
        nu = self.u * o.u + self.v * o.v * self.field.D
        nv = self.u * o.v + self.v * o.u
        # both numerators are divisible by delta thanks to the parity invariant
        return QuadraticInteger(nu // d, nv // d, self.field)

    __rmul__ = __mul__

    def conj(self) -> QuadraticInteger:
        return QuadraticInteger(self.u, -self.v, self.field)

    def norm(self) -> int:
        """Exact norm (u^2 - v^2 D) / delta^2; integral by the parity invariant."""
        num = self.u * self.u - self.v * self.v * self.field.D
        d2 = self.field.delta ** 2
        if num % d2 != 0:
            raise DomainError("parity invariant violated; norm not integral")
        return num // d2

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"QuadraticInteger({render(self)!r}, D={self.field.D})"


def norm(x: QuadraticInteger) -> int:
    return x.norm()


def conj(x: QuadraticInteger) -> QuadraticInteger:
    return x.conj()


def add(x: QuadraticInteger, y: QuadraticInteger) -> QuadraticInteger:
    return x + y


def mul(x: QuadraticInteger, y: QuadraticInteger) -> QuadraticInteger:
    return x * y


def in_ideal(x: QuadraticInteger, ideal: "SplitPrimeIdeal") -> bool:
    """Membership of x in the ideal (q, n + sqrt D).

    Writing x = (u + v*sqrt D)/delta, membership is equivalent to
    u == n*v (mod q).  The equivalence is exercised against a brute-force
    generator expansion in the test suite before anything trusts it.
    """
    if ideal.field != x.field:
        raise DomainError("element and ideal live in different fields")
    return (x.u - ideal.n * x.v) % ideal.q == 0


def _radical_term(u: int, v: int, D: int) -> str:
    root = f"√{D}"
    if v == 0:
        return str(u)
    coeff = "" if abs(v) == 1 else str(abs(v))
    if u == 0:
        sign = "-" if v < 0 else ""
        return f"{sign}{coeff}{root}"
    sign = "+" if v > 0 else "-"
    return f"{u}{sign}{coeff}{root}"


def render(x: QuadraticInteger) -> str:
    """Text form "u+v√D", wrapped as "(u+v√D)/2" when delta = 2.

    Rational integers always print bare, and unit coefficients drop, so
    9 + sqrt(10) renders as "9+√10" and not "9+1√10".
    """
    u, v, D = x.u, x.v, x.field.D
    if x.field.delta == 2 and v != 0:
        return f"({_radical_term(u, v, D)})/2"
    if x.field.delta == 2:
        return str(u // 2)
    return _radical_term(u, v, D)


_INT_RE = re.compile(r"^[+-]?\d+$")
_RADICAL_RE = re.compile(
    r"^(?P<sign>[+-]?)(?P<coeff>\d+)?(?:√|sqrt)\(?(?P<rad>-?\d+)\)?$"
)
_MIXED_RE = re.compile(
    r"^(?P<rat>[+-]?\d+)(?P<sign>[+-])(?P<coeff>\d+)?(?:√|sqrt)\(?(?P<rad>-?\d+)\)?$"
)


def parse(text: str, field: QuadraticField) -> QuadraticInteger:
    """Exact inverse of render; also accepts "sqrt" for the radical sign."""
    s = "".join(text.split())
    den = 1
    m = re.match(r"^\((?P<body>.+)\)/(?P<den>\d+)$", s)
    if m:
        s, den = m.group("body"), int(m.group("den"))
    rat, coeff, rad = 0, 0, None
    if _INT_RE.match(s):
        rat = int(s)
    elif (m := _MIXED_RE.match(s)) is not None:
        rat = int(m.group("rat"))
        coeff = int(m.group("coeff") or 1)
        if m.group("sign") == "-":
            coeff = -coeff
        rad = int(m.group("rad"))
    elif (m := _RADICAL_RE.match(s)) is not None:
        coeff = int(m.group("coeff") or 1)
        if m.group("sign") == "-":
            coeff = -coeff
        rad = int(m.group("rad"))
    else:
        raise DomainError(f"cannot parse element {text!r}")
    if rad is not None and rad != field.D:
        raise DomainError(f"radicand {rad} does not match field D = {field.D}")
    if den not in (1, 2):
        raise DomainError(f"unsupported denominator {den}")
    u, v = rat, coeff
    if den == 1 and field.delta == 2:
        u, v = 2 * u, 2 * v
    elif den == 2 and field.delta == 1:
        if u % 2 or v % 2:
            raise DomainError(f"{text!r} is not integral for D = {field.D}")
        u, v = u // 2, v // 2
    return QuadraticInteger(u, v, field)
