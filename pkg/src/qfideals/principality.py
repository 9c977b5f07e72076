"""Split primes of Q(sqrt D), their attached binary forms, the principality
decision, and explicit generator construction.

A split odd prime q with n^2 == D (mod q) gives the prime ideal
(q, n + sqrt D) and the form f = l*x^2 + 2n*xy + q*y^2 where l*q = n^2 - D.
The ideal is principal exactly when f represents delta^2 (imaginary fields)
or +-delta^2 (real fields), and a representation unwinds to an explicit
generator whose norm and membership are re-verified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvariantError
from .field import QuadraticField, QuadraticInteger, in_ideal
from .forms import BinaryForm, Representation, represents
from .intkernel import crt_q2, inv_mod, is_prime, legendre, sqrt_mod


@dataclass(frozen=True)
class SplittingType:
    """How an odd prime q behaves in Q(sqrt D): 'split', 'inert' or 'ramified'.

    For a split prime, n is the canonical square root of D mod q with
    0 < n <= q/2.
    """

    kind: str
    n: int | None = None

    @property
    def is_split(self) -> bool:
        return self.kind == "split"


@dataclass(frozen=True)
class SplitPrimeIdeal:
    """The prime ideal (q, n + sqrt D) over a split odd prime q."""

    field: QuadraticField
    q: int
    n: int
    l: int

    def __post_init__(self) -> None:
        D = self.field.D
        if self.q < 3 or self.q % 2 == 0 or not is_prime(self.q):
            raise DomainError(f"{self.q} is not an odd prime")
        if D % self.q == 0:
            raise DomainError(f"{self.q} ramifies in Q(√{D})")
        if not 0 < self.n <= self.q // 2:
            raise DomainError(f"n = {self.n} is not canonical for q = {self.q}")
        if (self.n * self.n - D) != self.l * self.q:
            raise DomainError(f"l = {self.l} fails l*q = n^2 - D")

    def __str__(self) -> str:
        rad = f"√{self.field.D}"
        return f"({self.q}, {self.n}+{rad})"

    def contains(self, x: QuadraticInteger) -> bool:
        return in_ideal(x, self)


@dataclass(frozen=True)
class PrincipalityResult:
    """Verdict plus a complete, re-checkable audit trail.

    A True verdict always carries the representation (k, v), the chosen
    (c, d) and derived (a, b), the generator and its sign; a False verdict
    carries none of them and rests on the exhaustiveness of the
    representation search.
    """

    principal: bool
    representation: Representation | None = None
    generator: QuadraticInteger | None = None
    sign: int | None = None
    c: int | None = None
    d: int | None = None
    a: int | None = None
    b: int | None = None


def split_type(field: QuadraticField, q: int) -> SplittingType:
    """Classify an odd prime q as split, inert or ramified in the field."""
    if q == 2:
        raise DomainError("q = 2 is outside the scope of this criterion")
    if q < 3 or not is_prime(q):
        raise DomainError(f"{q} is not an odd prime")
    if field.D % q == 0:
        return SplittingType("ramified")
    n = sqrt_mod(field.D % q, q)
    if n is None:
        return SplittingType("inert")
    return SplittingType("split", n)


def split_ideal(field: QuadraticField, q: int) -> SplitPrimeIdeal:
    """The canonical ideal (q, n + sqrt D) for a split odd prime q."""
    st = split_type(field, q)
    if st.kind == "ramified":
        raise DomainError(f"{q} ramifies in Q(√{field.D}); not covered")
    if st.kind == "inert":
        raise DomainError(
            f"{q} is inert in Q(√{field.D}); (q) is already principal"
        )
    assert st.n is not None
    return SplitPrimeIdeal(field, q, st.n, (st.n * st.n - field.D) // q)


def ideal_from_root(field: QuadraticField, q: int, root: int) -> SplitPrimeIdeal:
    """Ideal (q, root + sqrt D) recanonicalized so that 0 < n <= q/2.

    (q, m + sqrt D) only depends on m mod q, and replacing m by q - m swaps
    the ideal for its conjugate, whose form represents the same values.
    """
    r = root % q
    if r == 0 or (r * r - field.D) % q != 0:
        raise DomainError(f"{root}^2 is not D mod {q}")
    n = min(r, q - r)
    return SplitPrimeIdeal(field, q, n, (n * n - field.D) // q)


def associated_form(P: SplitPrimeIdeal) -> BinaryForm:
    """The form l*x^2 + 2n*xy + q*y^2 attached to P; its determinant is D."""
    f = BinaryForm(P.l, P.n, P.q)
    assert f.determinant == P.field.D
    return f


def _candidate_generator(
    P: SplitPrimeIdeal, k: int, v: int, sign: int, c: int
) -> tuple[QuadraticInteger, int, int, int]:
    """Generator for the given choice of c; returns (gamma, d, a, b)."""
    q, n, l, D = P.q, P.n, P.l, P.field.D
    delta = P.field.delta
    d = (inv_mod(n % q, q) * (k - c)) % q
    if delta == 2:
        d = crt_q2(d, q, c % 2)
    if (k - (c + n * d)) % q != 0:
        raise InvariantError("b is not integral")
    b = (k - (c + n * d)) // q
    a = n * b + v + d * l
    if delta == 2 and ((a - b) % 2 != 0 or (c - d) % 2 != 0):
        raise InvariantError("parity postcondition failed")
    gamma = QuadraticInteger(q * a + n * c + d * D, q * b + c + n * d, P.field)
    if gamma.norm() != sign * q:
        raise InvariantError(
            f"constructed generator has norm {gamma.norm()}, wanted {sign * q}"
        )
    if not in_ideal(gamma, P):
        raise InvariantError("constructed generator is outside the ideal")
    return gamma, d, a, b


def construct_generator(
    P: SplitPrimeIdeal,
    rep: Representation,
    sign: int,
    c: int | None = None,
) -> tuple[QuadraticInteger, int, int, int, int]:
    """Turn a representation f(k, v) = sign*delta^2 into a verified generator.

    d solves n*d == k - c (mod q), lifted mod 2q to d == c (mod 2) when
    delta = 2; then b = (k - (c + n*d))/q and a = n*b + v + d*l.  With c
    unspecified, c = 0 and c = 1 are both tried and the generator with the
    smaller numerator wins (ties toward c = 0).  Returns
    (gamma, c, d, a, b); every postcondition is checked before returning.
    """
    k, v = rep.x, rep.y
    if sign not in (-1, 1):
        raise DomainError(f"sign must be +-1, got {sign}")
    delta2 = P.field.delta ** 2
    if rep.value != sign * delta2:
        raise DomainError(
            f"representation value {rep.value} is not {sign}*delta^2 = {sign * delta2}"
        )
    if c is not None:
        gamma, d, a, b = _candidate_generator(P, k, v, sign, c)
        return gamma, c, d, a, b
    best = None
    for cc in (0, 1):
        gamma, d, a, b = _candidate_generator(P, k, v, sign, cc)
        size = max(abs(gamma.u), abs(gamma.v))
        if best is None or size < best[0]:
            best = (size, gamma, cc, d, a, b)
    assert best is not None
    return best[1], best[2], best[3], best[4], best[5]


def verify_generator(P: SplitPrimeIdeal, g: QuadraticInteger) -> bool:
    """True iff |norm(g)| = q and g lies in P, which makes (g) = P."""
    if g.field != P.field:
        raise DomainError("generator and ideal live in different fields")
    return abs(g.norm()) == P.q and in_ideal(g, P)


def is_principal(P: SplitPrimeIdeal) -> PrincipalityResult:
    """Decide principality of P and, when principal, exhibit a generator.

    Imaginary fields test representation of delta^2 only; real fields test
    +delta^2 then -delta^2.  Every True verdict is self-certified through
    verify_generator before being returned.
    """
    delta2 = P.field.delta ** 2
    targets = (delta2,) if P.field.D < 0 else (delta2, -delta2)
    f = associated_form(P)
    rep = represents(f, targets)
    if rep is None:
        return PrincipalityResult(principal=False)
    sign = 1 if rep.value > 0 else -1
    gamma, c, d, a, b = construct_generator(P, rep, sign)
    if not verify_generator(P, gamma):
        raise InvariantError(f"generator {gamma} failed verification for {P}")
    return PrincipalityResult(
        principal=True,
        representation=rep,
        generator=gamma,
        sign=sign,
        c=c,
        d=d,
        a=a,
        b=b,
    )


def derivation_intermediates(
    P: SplitPrimeIdeal, result: PrincipalityResult
) -> dict[str, int]:
    """Substitution intermediates (w, z, r, s) behind a principal verdict.

    w and z come from the change of variables applied to (a, b); r and s
    are the same quantities rebuilt from the representation (k, v).  They
    must agree, and (w, z) must solve q*w^2 - q*D*z^2 = sign*delta^2*q^4*D^2.
    """
    if not result.principal or result.representation is None:
        raise DomainError("derivation is only defined for principal verdicts")
    q, n, D = P.q, P.n, P.field.D
    k, v = result.representation.x, result.representation.y
    c, d, a, b = result.c, result.d, result.a, result.b
    assert None not in (c, d, a, b, result.sign)
    w = q * q * D * a + q * D * (n * c + d * D)
    z = q * q * D * b + q * D * (c + n * d)
    r = (k * n + v * q) * q * D
    s = k * q * D
    if (w, z) != (r, s):
        raise InvariantError("substitution intermediates disagree")
    rhs = result.sign * P.field.delta ** 2 * q ** 4 * D * D
    if q * w * w - q * D * z * z != rhs:
        raise InvariantError("intermediates do not solve the transformed equation")
    return {"w": w, "z": z, "r": r, "s": s}
