"""Acceptance gate: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
report.  Tolerances are exact everywhere; the only numeric budgets are the
stated wall-clock limits.
"""

import json
import random
import time

import pytest

from qfideals.classnumber import (
    classify_h1,
    find_prime_pair_offset,
    h1_necessary_conditions,
    nonprincipality_certificate,
    rabinowitsch,
    validate_certificate,
)
from qfideals.cli import main
from qfideals.errors import DomainError
from qfideals.field import in_ideal, make_field, parse
from qfideals.forms import BinaryForm, evaluate, represents_indefinite, y_bound
from qfideals.intkernel import is_prime, is_squarefree, isqrt, legendre, primes_up_to
from qfideals.oracles import oracle_in_ideal, oracle_principal, oracle_represents
from qfideals.principality import (
    associated_form,
    construct_generator,
    is_principal,
    split_ideal,
    split_type,
    verify_generator,
)
from qfideals.forms import Representation

H1_FIELDS = [-1, -2, -3, -7, -11, -19, -43, -67, -163]


def _split_pairs(d_values, q_limit):
    sieve = primes_up_to(q_limit)
    for D in d_values:
        if not is_squarefree(D):
            continue
        field = make_field(D)
        for q in sieve.primes:
            if q == 2:
                continue
            if split_type(field, q).is_split:
                yield field, split_ideal(field, q)


def test_a1_golden_examples(capsys):
    t0 = time.perf_counter()

    def cli_result(*argv):
        assert main(list(argv) + ["--format", "json"]) == 0
        return json.loads(capsys.readouterr().out)["result"]

    res = cli_result("principal", "--d", "5", "--q", "101")
    assert res["principal"] is True and res["norm"] == "101"
    f5 = make_field(5)
    P101 = split_ideal(f5, 101)
    recorded_gamma = parse("(22-4√5)/2", f5)
    assert verify_generator(P101, recorded_gamma)
    assert res["generator"] == "(22-4√5)/2"

    res = cli_result("principal", "--d", "10", "--q", "71")
    assert res["principal"] is True and res["generator"] == "9+√10"
    f10 = make_field(10)
    P71 = split_ideal(f10, 71)
    gamma, c, d, a, b = construct_generator(P71, Representation(1, 0, 1), 1, c=1)
    assert gamma == f10.element(9, 1) and (c, d, a, b) == (1, 0, 0, 0)

    res = cli_result("principal", "--d", "-5", "--q", "47")
    assert res["principal"] is False

    res = cli_result("principal", "--d", "-23", "--q", "3")
    assert res["principal"] is False

    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"A1 took {elapsed:.2f}s"
    with capsys.disabled():
        print(f"\nA1 golden examples: PASS ({elapsed:.3f}s)")


def test_a2_class_number_one_list(full_scan):
    certs, elapsed = full_scan
    ones = [c.D for c in certs if c.verdict]
    assert ones == H1_FIELDS
    assert not [c.D for c in certs if c.verdict and c.D <= -164]
    assert elapsed < 60.0, f"scan took {elapsed:.1f}s"
    for cert in certs:
        if not cert.verdict:
            assert validate_certificate(cert), cert
        elif cert.D < -16:
            assert h1_necessary_conditions(cert.D).ok, cert.D
    print(f"\nA2 class-number-1 list over |D| <= 20000: PASS ({elapsed:.2f}s)")


def test_a3_oracle_equivalence_imaginary():
    rng = random.Random(33)
    pairs = 0
    for field, P in _split_pairs(range(-50, 0), 50):
        assert is_principal(P).principal == oracle_principal(P), P
        # spot-validate the membership congruence against the expansion oracle
        for _ in range(3):
            u = rng.randint(-25, 25)
            v = rng.randint(-25, 25)
            if field.delta == 2 and (u - v) % 2:
                u += 1
            x = field.element(u, v)
            assert in_ideal(x, P) == oracle_in_ideal(x, P), (P, u, v)
        pairs += 1
    assert pairs > 150
    print(f"\nA3 imaginary oracle equivalence: PASS ({pairs} split ideals)")


def test_a4_oracle_equivalence_real():
    pairs = 0
    for _, P in _split_pairs(range(2, 31), 30):
        assert is_principal(P).principal == oracle_principal(P), P
        pairs += 1
    assert pairs > 50
    print(f"\nA4 real oracle equivalence: PASS ({pairs} split ideals)")


def _survivors_41_to_619():
    out = []
    for p in primes_up_to(619).primes:
        if 41 < p <= 619:
            D = 1 - 4 * p
            if is_squarefree(D) and h1_necessary_conditions(D).ok:
                out.append(p)
    return out


def test_a5_prime_family_reproduction():
    small = []
    for p in primes_up_to(41).primes:
        if p < 5:
            continue
        D = 1 - 4 * p
        try:
            if classify_h1(D).verdict:
                small.append(p)
        except DomainError:
            pass  # 1 - 4p not squarefree: no field to classify
    assert small == [5, 11, 17, 41]

    # Recomputed ground truth: four primes in (41, 619] survive the necessary
    # conditions, not three; see notes on the stated-list discrepancy in
    # test_a5_stated_survivor_list below.  Every survivor still ends up with
    # a verdict-false certificate through the Legendre-witness path.
    survivors = _survivors_41_to_619()
    assert survivors == [227, 467, 521, 587]
    witnesses = {}
    for p in survivors:
        D = 1 - 4 * p
        assert not classify_h1(D).verdict
        ev = nonprincipality_certificate(D)
        assert ev is not None and ev.value % ev.factor == 0
        assert legendre(ev.factor, 4 * p - 1) == 1
        witnesses[p] = ev.factor
    assert (witnesses[227], witnesses[521], witnesses[587]) == (13, 13, 17)
    print(f"\nA5 prime-family lists: PASS (survivors {survivors}, "
          f"witnesses {witnesses})")


@pytest.mark.xfail(
    strict=True,
    reason="the stated three-element survivor list omits p = 467: "
    "4*467-1 = 1867 and 4*467+3 = 1871 are both prime (deterministic "
    "primality tests, confirmed by hand trial division); "
    "test_a5_prime_family_reproduction asserts the recomputed ground truth",
)
def test_a5_stated_survivor_list():
    assert _survivors_41_to_619() == [227, 521, 587]


def test_a6_indefinite_window_validation():
    rng = random.Random(66)
    checked = 0
    t0 = time.perf_counter()
    while checked < 500:
        a = rng.randint(-8, 8)
        b = rng.randint(-8, 8)
        c = rng.randint(-8, 8)
        if a == 0:
            continue
        f = BinaryForm(a, b, c)
        d = f.determinant
        if not (2 <= d <= 50) or isqrt(d) ** 2 == d:
            continue
        m = rng.randint(-30, 30)
        if m == 0:
            continue
        checked += 1
        rep = represents_indefinite(f, m)
        if rep is not None:
            assert evaluate(f, rep.x, rep.y) == m, (f, m, rep)
        else:
            assert oracle_represents(f, m, 200) is None, (f, m)
    print(f"\nA6 indefinite window vs box-200 oracle, 500 forms: PASS "
          f"({time.perf_counter() - t0:.2f}s)")


def test_a7_prime_pair_offsets(sieve_50k):
    t0 = time.perf_counter()
    assert find_prime_pair_offset(677) == 18
    count = 0
    for p in sieve_50k.primes:
        if p <= 619 or not is_prime(4 * p - 1):
            continue
        n = find_prime_pair_offset(p)
        assert n % 6 == 0 and 1 <= n <= (p - 1) // 4
        assert is_prime(4 * n - 1) and is_prime(p - n) and 4 * n - 1 != p - n
        count += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"A7 took {elapsed:.1f}s"
    assert count > 500
    print(f"\nA7 offsets for {count} primes p <= 50000: PASS ({elapsed:.2f}s)")


def test_a8_property_suites(full_scan):
    rng = random.Random(88)

    # bound soundness, 10^4 trials
    for _ in range(10_000):
        a = rng.randint(1, 9)
        b = rng.randint(-9, 9)
        c = (b * b) // a + rng.randint(1, 12)
        f = BinaryForm(a, b, c)
        r, s = rng.randint(-25, 25), rng.randint(-25, 25)
        M = evaluate(f, r, s)
        if M > 0:
            assert abs(s) <= y_bound(f, M)

    # quarter-shift Legendre identity, 10^3 trials over valid p <= 10^4
    ps = [p for p in primes_up_to(10_000).primes
          if p >= 3 and is_prime(4 * p - 1)]
    for _ in range(1000):
        p = rng.choice(ps)
        n = rng.randint(-2 * p, 2 * p)
        assert legendre(p - n, 4 * p - 1) == -legendre(4 * n - 1, 4 * p - 1)

    # norm multiplicativity, 10^4 trials
    fields = [make_field(D) for D in (-163, -23, -5, -2, 2, 5, 10, 13, 29)]
    for _ in range(10_000):
        field = rng.choice(fields)
        elems = []
        for _ in range(2):
            u = rng.randint(-50, 50)
            v = rng.randint(-50, 50)
            if field.delta == 2 and (u - v) % 2:
                u += 1
            elems.append(field.element(u, v))
        x, y = elems
        assert (x * y).norm() == x.norm() * y.norm()

    # every attached form from the A3/A4 grids has determinant exactly D
    for field, P in _split_pairs(list(range(-50, 0)) + list(range(2, 31)), 50):
        assert associated_form(P).determinant == field.D

    # criterion vs witness construction over the scanned range
    certs, _ = full_scan
    for cert in certs:
        if cert.D % 4 == 1 and cert.D <= -5:
            witness = nonprincipality_certificate(cert.D)
            assert rabinowitsch(cert.D).verdict == (witness is None), cert.D
            assert cert.verdict == (witness is None), cert.D

    print("\nA8 property suites: PASS (bound soundness 10^4, Legendre identity "
          "10^3, norm multiplicativity 10^4, determinants, criterion cross-check)")
