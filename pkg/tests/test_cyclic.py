import random

import pytest

from srlab.cyclic import (
    bch_generator,
    cyclic_code,
    cyclic_dual_generator,
    cyclotomic_cosets,
    frobenius_coeffs,
    is_cyclic,
    min_nontrivial_coset_size,
    minimal_polynomial,
    parse_poly,
    splitting_root,
)
from srlab.errors import BadDelta, NoNontrivialCoset, NotCoprime, NotDivisor
from srlab.field import extension, prime_field
from srlab.poly import Polynomial, is_irreducible, poly_gcd, poly_lcm, smallest_irreducible

F2 = prime_field(2)
F4 = extension(F2, 2)


# -- polynomial layer ---------------------------------------------------------


def test_poly_arithmetic():
    p = Polynomial(F4, (1, 2))  # 1 + wx
    q = Polynomial(F4, (3, 0, 1))  # w^2 + x^2
    assert (p + p).is_zero
    prod = p * q
    assert divmod(prod, p)[0] == q.monic() or divmod(prod, p)[0] == q
    assert (prod % p).is_zero
    assert (prod % q).is_zero
    assert poly_gcd(prod, p) == p.monic()
    assert poly_lcm(p, q).degree == 3


def test_poly_gcd_lcm_random():
    rnd = random.Random(3)
    for _ in range(40):
        a = Polynomial(F4, [rnd.randrange(4) for _ in range(rnd.randint(1, 6))])
        b = Polynomial(F4, [rnd.randrange(4) for _ in range(rnd.randint(1, 6))])
        if a.is_zero or b.is_zero:
            continue
        g = poly_gcd(a, b)
        assert (a % g).is_zero and (b % g).is_zero
        l = poly_lcm(a, b)
        assert (l % a.monic()).is_zero and (l % b.monic()).is_zero
        assert g.degree + l.degree == a.degree + b.degree


def test_irreducibility():
    assert is_irreducible(Polynomial(F2, (1, 1, 1)))
    assert not is_irreducible(Polynomial(F2, (1, 0, 1)))  # (x+1)^2
    assert smallest_irreducible(F2, 2).coeffs == (1, 1, 1)


def test_reciprocal():
    p = Polynomial(F4, (2, 1, 0, 1))
    r = p.reciprocal_monic()
    assert r.is_monic and r.degree == p.degree


# -- cosets -------------------------------------------------------------------


def test_cyclotomic_cosets_examples():
    table = cyclotomic_cosets(4, 13)
    # derived: iterate 1*4^i mod 13 -> 1, 4, 3, 12, 9, 10
    orbit = set()
    j = 1
    while j not in orbit:
        orbit.add(j)
        j = (j * 4) % 13
    assert set(table.coset_of(1)) == orbit == {1, 3, 4, 9, 10, 12}
    assert cyclotomic_cosets(5, 1).cosets == ((0,),)
    assert cyclotomic_cosets(4, 63).coset_of(0) == (0,)
    # partition property
    assert sorted(i for c in table.cosets for i in c) == list(range(13))
    with pytest.raises(NotCoprime):
        cyclotomic_cosets(4, 6)


def test_mu_examples():
    assert min_nontrivial_coset_size(4, 13) == 6
    assert min_nontrivial_coset_size(2, 3) == 2
    assert min_nontrivial_coset_size(4, 5) == 2
    with pytest.raises(NoNontrivialCoset):
        min_nontrivial_coset_size(4, 1)
    with pytest.raises(NotCoprime):
        min_nontrivial_coset_size(2, 4)


# -- minimal polynomials and BCH ------------------------------------------------


def test_splitting_root_order():
    ext, beta = splitting_root(F4, 13)
    assert ext.order == 4**6
    assert ext.multiplicative_order(beta) == 13


def test_minimal_polynomial_examples():
    m0 = minimal_polynomial(F4, 13, 0)
    assert m0 == Polynomial(F4, (1, 1))  # x + 1 over characteristic 2
    m1 = minimal_polynomial(F4, 13, 1)
    printed = parse_poly(F4, "x^6+wx^5+w^2x^3+wx+1")
    assert m1 in (printed, frobenius_coeffs(printed))
    # product over coset representatives reconstructs x^n - 1
    table = cyclotomic_cosets(4, 13)
    prod = Polynomial.one(F4)
    for coset in table.cosets:
        prod = prod * minimal_polynomial(F4, 13, coset[0])
    assert prod == Polynomial.x_pow_minus_one(F4, 13).monic()


def test_minimal_polynomial_degree_sum():
    for (q_field, n) in ((F4, 13), (F4, 5), (F2, 7), (F4, 63)):
        table = cyclotomic_cosets(q_field.order, n)
        degs = 0
        for coset in table.cosets:
            mp = minimal_polynomial(q_field, n, coset[0])
            assert mp.degree == len(coset)
            degs += mp.degree
        assert degs == n


def test_bch_examples():
    g = bch_generator(F4, 13, 2, 1)
    assert g.degree == 6
    g2 = bch_generator(F4, 13, 13, 1)
    assert g2.degree == 12
    g3 = bch_generator(F4, 63, 4, 0)
    assert 63 - g3.degree == 56
    with pytest.raises(BadDelta):
        bch_generator(F4, 13, 1, 0)
    with pytest.raises(NotCoprime):
        bch_generator(F4, 6, 2, 0)


def test_bch_designed_distance_floor():
    for n, delta, b in ((13, 2, 1), (13, 3, 0), (5, 2, 0), (15, 3, 1), (15, 4, 0)):
        g = bch_generator(F4, n, delta, b)
        c = cyclic_code(g, n)
        if c.k == 0:
            continue
        assert c.min_distance() >= delta


def test_bch_wraparound_indices():
    # indices reduce mod n, so b = n-1 with delta = 3 covers {n-1, 0, 1}
    g = bch_generator(F4, 13, 3, 12)
    explicit = poly_lcm(
        poly_lcm(minimal_polynomial(F4, 13, 12), minimal_polynomial(F4, 13, 0)),
        minimal_polynomial(F4, 13, 1),
    )
    assert g == explicit


# -- cyclic codes ----------------------------------------------------------------


def test_cyclic_code_examples():
    c = cyclic_code(parse_poly(F4, "1+x"), 2)
    assert (c.n, c.k) == (2, 1) and c.is_self_dual() and c.min_distance() == 2
    full = cyclic_code(Polynomial.one(F4), 5)
    assert full.k == 5 and is_cyclic(full)
    t12_3 = cyclic_code(parse_poly(F4, "w^2+w^2x+x^2+x^3"), 6)
    assert t12_3.is_self_dual() and t12_3.min_distance() == 3
    with pytest.raises(NotDivisor):
        cyclic_code(parse_poly(F4, "1+x+x^2"), 4)


def test_cyclic_dual_routes_agree():
    rnd = random.Random(7)
    xs = [(F4, 13), (F4, 5), (F4, 2), (F2, 7), (F4, 6), (F4, 9)]
    for field, n in xs:
        xn1 = Polynomial.x_pow_minus_one(field, n)
        for _ in range(6):
            # gcd with a random polynomial picks a random monic divisor
            g = poly_gcd(xn1, Polynomial(field, [rnd.randrange(field.order) for _ in range(n)] + [1]))
            if g.is_zero or g.degree == n or not (xn1 % g).is_zero:
                continue
            c = cyclic_code(g, n)
            assert is_cyclic(c)
            dual_poly_route = cyclic_code(cyclic_dual_generator(g, n), n)
            assert dual_poly_route == c.dual()
            assert is_cyclic(c.dual())


def test_parse_poly():
    assert parse_poly(F4, "1") == Polynomial.one(F4)
    assert parse_poly(F4, "w^2+w^2x+x^2+x^3").coeffs == (3, 3, 1, 1)
    assert parse_poly(F4, "wx+1").coeffs == (1, 2)
    assert parse_poly(F4, "(x+1)(x+1)").coeffs == (1, 0, 1)
    prod = parse_poly(F4, "(x^6+wx^5+w^2x^3+wx+1)(x^6+w^2x^5+wx^3+w^2x+1)")
    assert prod.coeffs == (1,) * 13
    with pytest.raises(ValueError):
        parse_poly(F4, "w^2++x")
    with pytest.raises(ValueError):
        parse_poly(F4, "(x+1")


def test_frobenius_coeffs():
    p = parse_poly(F4, "w+w^2x+x^2")
    assert frobenius_coeffs(p).coeffs == (3, 2, 1)
    assert frobenius_coeffs(frobenius_coeffs(p)) == p
