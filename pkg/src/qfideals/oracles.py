"""Independent brute-force deciders used to validate the fast paths.

None of these know anything about the form criterion or the congruence
membership test: they enumerate elements or grid points directly, so a
disagreement with the main engines is always a genuine bug.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

import numpy

from .errors import DomainError
from .field import QuadraticInteger
from .forms import BinaryForm, Representation, pell_fundamental
from .intkernel import isqrt
from .principality import SplitPrimeIdeal


def oracle_principal(P: SplitPrimeIdeal) -> bool:
    """Exhaustive element search deciding principality on small inputs.

    Imaginary fields: a generator has u^2 + |D| v^2 = delta^2 q exactly, so
    scanning that finite shell is a complete decision.  Real fields: scan
    |u|, |v| <= 10*q*T with T the fundamental Pell solution, which covers a
    unit-multiple of any generator; sound, and large enough for every budget
    this oracle accepts.
    """
    D, q, n = P.field.D, P.q, P.n
    delta = P.field.delta
    if D < 0:
        if D < -50 or q > 50:
            raise DomainError("imaginary oracle budget is |D| <= 50, q <= 50")
        shell = delta * delta * q
        for v in range(isqrt(shell // -D) + 1):
            uu = shell + D * v * v
            u = isqrt(uu)
            if u * u != uu:
                continue
            for su, sv in ((u, v), (u, -v), (-u, v), (-u, -v)):
                if delta == 2 and (su - sv) % 2 != 0:
                    continue
                if (su - n * sv) % q == 0:
                    return True
        return False
    if D > 30:
        raise DomainError("real oracle budget is D <= 30")
    T = pell_fundamental(D).T
    box = 10 * q * T
    if box > 5_000_000:
        raise DomainError(f"real oracle box 10*q*T = {box} exceeds the budget")
    d2q = delta * delta * q
    for v in range(box + 1):
        base = D * v * v
        for target in (d2q, -d2q):
            uu = base + target
            if uu < 0:
                continue
            u = isqrt(uu)
            if u * u != uu or u > box:
                continue
            for su, sv in ((u, v), (u, -v), (-u, v), (-u, -v)):
                if delta == 2 and (su - sv) % 2 != 0:
                    continue
                if (su - n * sv) % q == 0:
                    return True
    return False


def oracle_represents(
    f: BinaryForm, target: int, box: int
) -> Representation | None:
    """Grid search for f(x, y) = target over |x|, |y| <= box.

    Sound always; complete only relative to the box.  Rows of the grid are
    evaluated with numpy when they safely fit int64, else in pure Python.
    """
    if not 0 < box <= 10_000:
        raise DomainError(f"oracle box must be in [1, 10000], got {box}")
    peak = (abs(f.a) + 2 * abs(f.b) + abs(f.c)) * box * box + abs(target)
    xs = numpy.arange(-box, box + 1, dtype=numpy.int64)
    use_numpy = peak < 2 ** 62
    for y in range(-box, box + 1):
        if use_numpy:
            values = f.a * xs * xs + 2 * f.b * xs * y + f.c * y * y
            hits = numpy.nonzero(values == target)[0]
            if hits.size:
                x = int(xs[hits[0]])
                return Representation(x, y, target)
        else:
            for x in range(-box, box + 1):
                if f.a * x * x + 2 * f.b * x * y + f.c * y * y == target:
                    return Representation(x, y, target)
    return None


def oracle_in_ideal(x: QuadraticInteger, P: SplitPrimeIdeal) -> bool:
    """Membership by brute-force expansion x = q*alpha + (n + sqrt D)*beta.

    Writing alpha = (a + b sqrt D)/delta and beta = (c + d sqrt D)/delta,
    any witness (a, b, c, d) reduces, by shifting c and d in steps of
    delta*q (which absorbs into a and b without touching parities), to one
    with 0 <= c, d < delta*q.  Scanning that box and solving exactly for
    (a, b) is therefore a complete membership test, fully independent of
    the congruence shortcut.
    """
    if x.field != P.field:
        raise DomainError("element and ideal live in different fields")
    D, q, n = P.field.D, P.q, P.n
    delta = P.field.delta
    span = delta * q
    for c in range(span):
        for d in range(span):
            ru = x.u - n * c - d * D
            rv = x.v - c - n * d
            if ru % q or rv % q:
                continue
            a, b = ru // q, rv // q
            if delta == 2 and ((a - b) % 2 or (c - d) % 2):
                continue
            return True
    return False


@dataclass(frozen=True)
class GoldenCase:
    """One frozen regression case, shaped like a CLI envelope."""

    command: str
    inputs: dict
    result: dict
    source: str


def golden_cases() -> list[GoldenCase]:
    """Load the golden regression corpus shipped with the package."""
    text = resources.files("qfideals.data").joinpath("golden.json").read_text()
    payload = json.loads(text)
    return [GoldenCase(**case) for case in payload["cases"]]
