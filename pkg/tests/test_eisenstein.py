"""Arithmetic of Z[omega], primary primes, and power residue symbols."""

import random

import pytest
from sympy import isprime, primerange

from cubicbrauer.eisenstein import (
    OMEGA,
    ONE,
    UNITS,
    EisensteinInt,
    PrimaryPrime,
    SexticUnit,
    Splitting,
    cubic_symbol,
    primary_above,
    primary_associate,
    sextic_symbol,
    split_prime,
)
from cubicbrauer.errors import (
    BadResidueNorm,
    NotCoprime,
    NotCoprimeToThree,
    NotPrime,
)

from support import power_residues_oracle, split_image, symbol_exponent_oracle


def _random_elements(rng, count, spread=25):
    return [
        EisensteinInt(rng.randrange(-spread, spread + 1), rng.randrange(-spread, spread + 1))
        for _ in range(count)
    ]


def test_ring_axioms():
    rng = random.Random(421)
    elements = _random_elements(rng, 40)
    for _ in range(200):
        a, b, c = rng.sample(elements, 3)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - b) + b == a
        assert -(-a) == a


def test_norm_trace_conjugate():
    rng = random.Random(422)
    for z in _random_elements(rng, 120):
        conj = z.conjugate()
        assert z * conj == EisensteinInt(z.norm(), 0)
        assert z + conj == EisensteinInt(z.trace(), 0)
        assert z.norm() == z.x * z.x - z.x * z.y + z.y * z.y
        assert z.norm() >= 0
        assert conj.conjugate() == z
    w = _random_elements(rng, 1)[0]
    z = _random_elements(rng, 1)[0]
    assert (w * z).norm() == w.norm() * z.norm()
    assert (w * z).conjugate() == w.conjugate() * z.conjugate()


def test_omega_satisfies_its_polynomial():
    assert OMEGA * OMEGA + OMEGA + ONE == EisensteinInt(0, 0)
    assert OMEGA**3 == ONE
    assert OMEGA.conjugate() == OMEGA * OMEGA


def test_units_are_powers_of_minus_omega():
    minus_omega = -OMEGA
    for k in range(6):
        assert UNITS[k] == minus_omega**k
        assert UNITS[k].norm() == 1
        assert SexticUnit(k).as_eisenstein() == UNITS[k]
    assert len(set(UNITS)) == 6


def test_sextic_unit_group_law():
    for a in range(6):
        for b in range(6):
            assert (SexticUnit(a) * SexticUnit(b)).k == (a + b) % 6
        assert (SexticUnit(a) * SexticUnit(a).inverse()).is_one
        assert SexticUnit(a).square().k == (2 * a) % 6
        assert SexticUnit(a).square().as_eisenstein() == UNITS[a] * UNITS[a]
    assert SexticUnit(7).k == 1


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        OMEGA ** (-1)


def test_primary_associate_exhaustive():
    # for every z of norm coprime to 3 in a box, exactly one unit multiple
    # is congruent to 1 mod 3, and primary_associate finds it
    for x in range(-15, 16):
        for y in range(-15, 16):
            z = EisensteinInt(x, y)
            if z.norm() % 3 == 0:
                with pytest.raises(NotCoprimeToThree):
                    primary_associate(z)
                continue
            w = primary_associate(z)
            assert w.x % 3 == 1 and w.y % 3 == 0
            associates = [u * z for u in UNITS]
            assert w in associates
            primary = [v for v in associates if v.x % 3 == 1 and v.y % 3 == 0]
            assert primary == [w]


def test_split_prime_by_residue_class():
    for p in primerange(2, 3000):
        result = split_prime(p)
        if p == 3:
            assert result is Splitting.RAMIFIED
        elif p % 3 == 2:
            assert result is Splitting.INERT
        else:
            assert isinstance(result, PrimaryPrime)
            assert result.pi.norm() == p
            assert result.pi.x % 3 == 1 and result.pi.y % 3 == 0
            assert result.residue_norm == p
            assert result.is_split


def test_split_prime_rejects_composites():
    for n in (0, 1, 4, 100, 91):
        with pytest.raises(NotPrime):
            split_prime(n)


def test_primary_above():
    assert primary_above(7).pi == EisensteinInt(1, 3)
    inert = primary_above(5)
    assert inert.pi == EisensteinInt(-5, 0)
    assert inert.residue_norm == 25
    assert not inert.is_split
    # -p is the primary generator: -5 == 1 mod 3
    assert inert.pi.x % 3 == 1 and inert.pi.y % 3 == 0
    with pytest.raises(NotCoprimeToThree):
        primary_above(3)
    with pytest.raises(NotPrime):
        primary_above(6)


def test_cubic_symbol_frozen_at_seven():
    prime = primary_above(7)
    assert cubic_symbol(EisensteinInt(2, 0), prime) == SexticUnit(2)
    assert cubic_symbol(EisensteinInt(6, 0), prime) == SexticUnit(0)
    # cubes mod 7 are {1, 6}: only 6 has trivial symbol among 2..6
    trivial = [
        n for n in range(2, 7) if cubic_symbol(EisensteinInt(n, 0), prime).is_one
    ]
    assert trivial == [6]


def test_sextic_symbol_frozen_at_seven():
    prime = primary_above(7)
    assert sextic_symbol(EisensteinInt(2, 0), prime) == SexticUnit(4)
    assert sextic_symbol(EisensteinInt(2, 0), prime).square() == cubic_symbol(
        EisensteinInt(2, 0), prime
    )


def test_cubic_symbol_at_inert_two():
    prime = primary_above(2)
    assert prime.residue_norm == 4
    assert cubic_symbol(EisensteinInt(1, 1), prime) == SexticUnit(2)
    # the residue field F_4 has cube group of order 1: only units with
    # residue 1 have trivial symbol
    assert cubic_symbol(EisensteinInt(1, 0), prime).is_one
    assert not cubic_symbol(EisensteinInt(0, 1), prime).is_one
    with pytest.raises(BadResidueNorm):
        sextic_symbol(EisensteinInt(1, 1), prime)  # norm 4 != 1 mod 6


def test_symbol_rejects_alpha_in_the_prime():
    prime = primary_above(7)
    with pytest.raises(NotCoprime):
        cubic_symbol(EisensteinInt(7, 0), prime)
    with pytest.raises(NotCoprime):
        cubic_symbol(EisensteinInt(1, 3) * EisensteinInt(2, 5), prime)
    inert = primary_above(5)
    with pytest.raises(NotCoprime):
        cubic_symbol(EisensteinInt(5, 10), inert)


def _oracle_prime_data(prime: PrimaryPrime):
    pi = (prime.pi.x, prime.pi.y)
    return pi, prime.residue_norm


def test_cubic_symbol_against_residue_field_enumeration():
    rng = random.Random(423)
    primes = [primary_above(p) for p in (7, 13, 2, 5, 11)]
    for prime in primes:
        pi, n = _oracle_prime_data(prime)
        cubes = power_residues_oracle(pi, n, 3)
        for alpha in _random_elements(rng, 30, spread=40):
            try:
                symbol = cubic_symbol(alpha, prime)
            except NotCoprime:
                continue
            if prime.is_split:
                image = split_image((alpha.x, alpha.y), _split_omega(prime), n)
            else:
                q = -pi[0]
                image = (alpha.x % q, alpha.y % q)
            assert symbol.is_one == (image in cubes)
            assert symbol.k == symbol_exponent_oracle((alpha.x, alpha.y), pi, n, 3)


def _split_omega(prime: PrimaryPrime) -> int:
    from support import split_field_omega

    return split_field_omega(prime.pi.x, prime.pi.y, prime.residue_norm)


def test_sextic_symbol_against_residue_field_enumeration():
    rng = random.Random(424)
    primes = [primary_above(p) for p in (7, 13, 19, 5, 11)]
    for prime in primes:
        pi, n = _oracle_prime_data(prime)
        sixths = power_residues_oracle(pi, n, 6)
        for alpha in _random_elements(rng, 25, spread=40):
            try:
                symbol = sextic_symbol(alpha, prime)
            except NotCoprime:
                continue
            if prime.is_split:
                image = split_image((alpha.x, alpha.y), _split_omega(prime), n)
            else:
                q = -pi[0]
                image = (alpha.x % q, alpha.y % q)
            assert symbol.is_one == (image in sixths)
            assert symbol.k == symbol_exponent_oracle((alpha.x, alpha.y), pi, n, 6)
            assert symbol.square() == cubic_symbol(alpha, prime)


def test_symbols_multiplicative():
    rng = random.Random(425)
    primes = [primary_above(p) for p in (7, 13, 31, 2, 5, 17)]
    checked = 0
    while checked < 300:
        prime = rng.choice(primes)
        a, b = _random_elements(rng, 2, spread=50)
        try:
            sa, sb, sab = (
                cubic_symbol(a, prime),
                cubic_symbol(b, prime),
                cubic_symbol(a * b, prime),
            )
        except NotCoprime:
            continue
        assert sab == sa * sb
        if prime.residue_norm % 6 == 1:
            assert sextic_symbol(a * b, prime) == sextic_symbol(a, prime) * sextic_symbol(
                b, prime
            )
        checked += 1


def test_cubic_symbol_detects_cubes_of_the_ring():
    # a genuine cube of Z[omega] has trivial symbol at every good prime
    rng = random.Random(426)
    primes = [primary_above(p) for p in (7, 13, 19, 31, 5, 11)]
    for z in _random_elements(rng, 25, spread=8):
        cube = z**3
        for prime in primes:
            try:
                assert cubic_symbol(cube, prime).is_one
            except NotCoprime:
                pass
