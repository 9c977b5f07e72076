"""Binary quadratic forms a*x^2 + 2b*xy + c*y^2 with determinant d = b^2 - ac,
and exact decision procedures for whether a form represents a target integer.

The definite case is a finite enumeration over y.  The indefinite case runs
through the norm-equation transform a*f(x,y) = (ax+by)^2 - d*y^2 and exhausts
one fundamental-solution window of the generalized Pell equation; the window
is validated against a brute-force search in the test suite before anything
relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .intkernel import isqrt


@dataclass(frozen=True)
class BinaryForm:
    """Form a*x^2 + 2b*xy + c*y^2; the stored b is half the middle coefficient."""

    a: int
    b: int
    c: int

    @property
    def determinant(self) -> int:
        return self.b * self.b - self.a * self.c

    def __call__(self, x: int, y: int) -> int:
        return evaluate(self, x, y)

    def __str__(self) -> str:
        return (
            f"{self.a}x^2 + {2 * self.b}xy + {self.c}y^2 "
            f"(det={self.determinant})"
        )


@dataclass(frozen=True)
class Representation:
    x: int
    y: int
    value: int


@dataclass(frozen=True)
class PellSolution:
    """Minimal (T, U) with T^2 - D*U^2 = 1 and U >= 1."""

    T: int
    U: int


def parse_form(text: str) -> BinaryForm:
    """Parse "a,2b,c" with the full (even) middle coefficient in the middle."""
    parts = text.split(",")
    if len(parts) != 3:
        raise DomainError(f"form must be 'a,2b,c', got {text!r}")
    try:
        a, mid, c = (int(p.strip()) for p in parts)
    except ValueError:
        raise DomainError(f"form coefficients must be integers, got {text!r}")
    if mid % 2 != 0:
        raise DomainError(f"middle coefficient {mid} must be even")
    return BinaryForm(a, mid // 2, c)


def evaluate(f: BinaryForm, x: int, y: int) -> int:
    return f.a * x * x + 2 * f.b * x * y + f.c * y * y


def y_bound(f: BinaryForm, M: int) -> int:
    """Largest |y| possible in any (x, y) with f(x, y) <= M, for definite f.

    Completing the square gives 4a*f(x,y) = (2ax+2by)^2 + 4|d|y^2, so
    f(x,y) <= M forces y^2 <= M*a/|d|.
    """
    d = f.determinant
    if f.a <= 0 or d >= 0:
        raise DomainError(f"{f} is not positive definite")
    if M <= 0:
        return 0
    return isqrt(M * f.a // -d)


def _pick(candidates: list[tuple[int, int]], target: int) -> Representation:
    # deterministic tie-break: smallest |x|, then y >= 0, then x >= 0
    x, y = min(candidates, key=lambda p: (abs(p[0]), p[1] < 0, p[0] < 0))
    return Representation(x, y, target)


def represents_definite(f: BinaryForm, target: int) -> Representation | None:
    """Decide representation of target > 0 by a positive definite form.

    Exhausts y over [-y_bound, y_bound] and solves the remaining quadratic
    in x exactly, so a None answer is a proof of non-representation.
    """
    if target <= 0:
        raise DomainError(f"definite form target must be positive, got {target}")
    d = f.determinant
    if f.a <= 0 or d >= 0:
        raise DomainError(f"{f} is not positive definite")
    bound = y_bound(f, target)
    for ay in range(bound + 1):
        candidates = []
        for y in {ay, -ay}:
            # x = (-b*y +- s)/a where s^2 = d*y^2 + a*target
            rad = d * y * y + f.a * target
            if rad < 0:
                continue
            s = isqrt(rad)
            if s * s != rad:
                continue
            for t in {s, -s}:
                if (t - f.b * y) % f.a == 0:
                    candidates.append(((t - f.b * y) // f.a, y))
        if candidates:
            rep = _pick(candidates, target)
            assert evaluate(f, rep.x, rep.y) == target
            return rep
    return None


def pell_fundamental(D: int) -> PellSolution:
    """Fundamental solution of T^2 - D*U^2 = 1 via the continued fraction of sqrt(D)."""
    if D <= 0:
        raise DomainError(f"Pell coefficient must be positive, got {D}")
    a0 = isqrt(D)
    if a0 * a0 == D:
        raise DomainError(f"Pell coefficient {D} is a perfect square")
    # convergents h/k of sqrt(D)
    m, den, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - D * k * k != 1:
        m = den * a - m
        den = (D - m * m) // den
        a = (a0 + m) // den
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return PellSolution(h, k)


def represents_indefinite(
    f: BinaryForm, target: int, *, window_scale: int = 1
) -> Representation | None:
    """Decide representation of a nonzero target by an indefinite form.

    With d = det(f) > 0 nonsquare and a != 0, f(x,y) = m is equivalent to
    t^2 - d*y^2 = a*m with t = a*x + b*y, i.e. t == b*y (mod a).  Every
    solution class of the Pell-type equation has a representative with
    y^2 <= |a*m|*(T+1)/(2d), and the automorph action preserves the
    congruence, so scanning that window decides.  window_scale widens the
    window for auditing; 1 is the proven bound.
    """
    d = f.determinant
    if d <= 0 or isqrt(d) ** 2 == d:
        raise DomainError(f"{f} is not indefinite with nonsquare determinant")
    if f.a == 0:
        raise DomainError("degenerate form with a = 0")
    if target == 0:
        raise DomainError("target must be nonzero")
    if window_scale < 1:
        raise DomainError(f"window_scale must be >= 1, got {window_scale}")
    T = pell_fundamental(d).T
    n = f.a * target
    bound = isqrt(window_scale * max(abs(n), 1) * (T + 1) // (2 * d))
    for ay in range(bound + 1):
        candidates = []
        for y in {ay, -ay}:
            rad = n + d * y * y
            if rad < 0:
                continue
            s = isqrt(rad)
            if s * s != rad:
                continue
            for t in {s, -s}:
                if (t - f.b * y) % f.a == 0:
                    candidates.append(((t - f.b * y) // f.a, y))
        if candidates:
            rep = _pick(candidates, target)
            assert evaluate(f, rep.x, rep.y) == target
            return rep
    return None


def represents(f: BinaryForm, targets) -> Representation | None:
    """First target in the given order that f represents, dispatching on det(f)."""
    d = f.determinant
    if d < 0:
        decide = represents_definite
    elif d > 0 and isqrt(d) ** 2 != d:
        decide = represents_indefinite
    else:
        raise DomainError(f"determinant {d} is degenerate (zero or square)")
    for target in targets:
        rep = decide(f, target)
        if rep is not None:
            return rep
    return None
