import random

import pytest

from qfideals.errors import DomainError
from qfideals.field import QuadraticInteger, in_ideal, make_field, parse, render
from qfideals.intkernel import is_squarefree
from qfideals.oracles import oracle_in_ideal
from qfideals.principality import split_ideal, split_type


def test_make_field():
    assert make_field(5).delta == 2
    assert make_field(5).discriminant == 5
    assert make_field(10).delta == 1
    assert make_field(10).discriminant == 40
    assert make_field(-23).delta == 2
    assert make_field(-5).delta == 1
    for bad in (12, 1, 0, -4, 50):
        with pytest.raises(DomainError):
            make_field(bad)


def test_parity_invariant():
    f5 = make_field(5)
    with pytest.raises(DomainError):
        QuadraticInteger(1, 2, f5)
    QuadraticInteger(1, 3, f5)  # fine
    QuadraticInteger(1, 2, make_field(10))  # delta = 1, no constraint


def test_norm_examples():
    f5 = make_field(5)
    assert f5.element(22, -4).norm() == 101
    f10 = make_field(10)
    assert f10.element(9, 1).norm() == 71
    assert f10.element(0, 0).norm() == 0
    assert f5.element(1, 1).norm() * f5.element(1, -1).norm() == 1
    assert (f5.element(1, 1) * f5.element(1, -1)) == f5.integer(-1)


def test_conj_and_arithmetic():
    f10 = make_field(10)
    x = f10.element(9, 1)
    assert x.conj() == f10.element(9, -1)
    assert x.conj().conj() == x
    prod = x * x.conj()
    assert prod.v == 0 and prod == f10.integer(x.norm())
    assert x + x.conj() == f10.integer(18)
    assert x - x == f10.integer(0)
    assert 2 * x == f10.element(18, 2)
    with pytest.raises(DomainError):
        x * make_field(5).element(2, 0)


def test_norm_multiplicative_random():
    rng = random.Random(5)
    fields = [make_field(D) for D in (-23, -5, -1, 2, 5, 10, 13)]
    for _ in range(1000):
        f = rng.choice(fields)
        def rand_elem():
            u = rng.randint(-40, 40)
            v = rng.randint(-40, 40)
            if f.delta == 2 and (u - v) % 2:
                u += 1
            return f.element(u, v)
        x, y = rand_elem(), rand_elem()
        assert (x * y).norm() == x.norm() * y.norm()


def test_imaginary_norms_positive():
    rng = random.Random(6)
    for D in (-1, -2, -5, -23, -43):
        f = make_field(D)
        for _ in range(100):
            u = rng.randint(-20, 20)
            v = rng.randint(-20, 20)
            if f.delta == 2 and (u - v) % 2:
                u += 1
            x = f.element(u, v)
            if not x.is_zero():
                assert x.norm() > 0


def test_in_ideal_examples():
    f5 = make_field(5)
    P = split_ideal(f5, 101)
    assert in_ideal(f5.element(22, -4), P)
    assert not in_ideal(f5.integer(1), P)
    assert in_ideal(f5.integer(101), P)
    assert in_ideal(f5.element(2 * 45, 2), P)  # n + sqrt(D) itself


def test_in_ideal_matches_expansion_oracle():
    rng = random.Random(7)
    checks = 0
    for D in (-23, -7, -5, -1, 2, 5, 10, 13):
        field = make_field(D)
        for q in (3, 5, 7, 11, 13):
            if not split_type(field, q).is_split:
                continue
            P = split_ideal(field, q)
            for _ in range(20):
                u = rng.randint(-30, 30)
                v = rng.randint(-30, 30)
                if field.delta == 2 and (u - v) % 2:
                    u += 1
                x = field.element(u, v)
                assert in_ideal(x, P) == oracle_in_ideal(x, P), (D, q, u, v)
                checks += 1
    assert checks >= 200


def test_render():
    f5 = make_field(5)
    assert render(f5.element(22, -4)) == "(22-4√5)/2"
    assert render(f5.element(1, 1)) == "(1+√5)/2"
    assert render(f5.integer(3)) == "3"
    f10 = make_field(10)
    assert render(f10.element(9, 1)) == "9+√10"
    assert render(f10.element(0, -1)) == "-√10"
    assert render(f10.element(-2, 0)) == "-2"
    assert render(make_field(-5).element(18, 1)) == "18+√-5"


def test_parse_round_trip():
    rng = random.Random(8)
    for D in (-23, -5, 2, 5, 10, 13):
        field = make_field(D)
        for _ in range(200):
            u = rng.randint(-99, 99)
            v = rng.randint(-99, 99)
            if field.delta == 2 and (u - v) % 2:
                u += 1
            x = field.element(u, v)
            assert parse(render(x), field) == x


def test_parse_variants():
    f5 = make_field(5)
    assert parse("(22-4√5)/2", f5) == f5.element(22, -4)
    assert parse("(22 - 4√5) / 2", f5) == f5.element(22, -4)
    assert parse("11", f5) == f5.integer(11)
    assert parse("(1+sqrt5)/2", f5) == f5.element(1, 1)
    f10 = make_field(10)
    assert parse("9+sqrt(10)", f10) == f10.element(9, 1)
    with pytest.raises(DomainError):
        parse("9+√7", f10)
    with pytest.raises(DomainError):
        parse("junk", f10)
    with pytest.raises(DomainError):
        parse("(1+√10)/2", f10)  # not integral when delta = 1


def test_every_small_squarefree_field_constructs():
    for m in range(2, 200):
        if is_squarefree(m):
            make_field(m)
            make_field(-m)
