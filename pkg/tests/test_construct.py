import random

import pytest

from srlab.code import LinearCode
from srlab.construct import (
    basis_expand_code,
    default_expansion_profile,
    duality_transport_expansion,
    duality_transport_qpoly,
    expansion_distance_bounds,
    pair_distance,
    power_basis,
    qpoly_code,
    qpoly_matrix,
    qpoly_rank_table,
    selfdual_sr_distance_cap,
    sr_distance_bounds,
    symbol_sum_rank_weight,
    uniform22_distance_bounds,
)
from srlab.cyclic import bch_generator, cyclic_code, parse_poly
from srlab.errors import (
    BudgetExceeded,
    DistanceExceedsLength,
    LengthMismatch,
    MethodUnavailable,
    ProfileMismatch,
)
from srlab.field import Basis, extension, prime_field
from srlab.sumrank import BlockProfile, SumRankVector

F2 = prime_field(2)
F4 = extension(F2, 2)
F8 = extension(F2, 3)
B_1W = power_basis(F4)
B_SD = Basis(F4, [2, 3])


def _rand_code(rnd, field, n, k):
    return LinearCode.from_rows(
        field, n, [[rnd.randrange(field.order) for _ in range(n)] for _ in range(k)]
    )


# -- q-polynomial matrices -------------------------------------------------------


def test_qpoly_matrix_identity():
    for basis in (B_1W, B_SD):
        m = qpoly_matrix((1, 0), basis)
        assert m.rows == ((1, 0), (0, 1))


def test_qpoly_matrix_equal_coeffs_rank_one():
    for a in (1, 2, 3):
        assert qpoly_matrix((a, a), B_1W).rank() == 1


def test_rank_table_oracle():
    # brute-force rule: 0 iff both zero, 1 iff both nonzero, 2 otherwise
    for basis in (B_1W, B_SD):
        table = qpoly_rank_table(basis)
        for a0 in range(4):
            for a1 in range(4):
                expected = 0 if (a0 == 0 == a1) else (1 if (a0 and a1) else 2)
                assert table[(a0, a1)] == expected


def test_qpoly_matrix_is_the_map():
    # multiply a random element through the matrix and through the map
    rnd = random.Random(2)
    for basis in (B_1W, B_SD):
        for _ in range(40):
            coeffs = (rnd.randrange(4), rnd.randrange(4))
            m = qpoly_matrix(coeffs, basis)
            x = rnd.randrange(4)
            img = F4.add(F4.mul(coeffs[0], x), F4.mul(coeffs[1], F4.mul(x, x)))
            xc = basis.expand(F4.element(x))
            prod = [
                F2.add(F2.mul(m.rows[i][0], xc[0]), F2.mul(m.rows[i][1], xc[1]))
                for i in range(2)
            ]
            assert basis.combine(prod) == F4.element(img)


def test_qpoly_matrix_length_check():
    with pytest.raises(LengthMismatch):
        qpoly_matrix((1,), B_1W)


# -- stacked construction ----------------------------------------------------------


def test_qpoly_code_dimension_and_blocks():
    rnd = random.Random(7)
    for _ in range(15):
        t = rnd.randint(1, 5)
        c0 = _rand_code(rnd, F4, t, rnd.randint(0, t))
        c1 = _rand_code(rnd, F4, t, rnd.randint(0, t))
        s = qpoly_code([c0, c1])
        assert s.dim == 2 * (c0.k + c1.k)
        assert s.profile.blocks == ((2, 2),) * t


def test_qpoly_code_zero_inputs():
    z = LinearCode.zero(F4, 3)
    s = qpoly_code([z, z])
    assert s.dim == 0


def test_pair_distance_equals_exhaustive():
    rnd = random.Random(13)
    for trial in range(30):
        t = rnd.randint(1, 4)
        c0 = _rand_code(rnd, F4, t, rnd.randint(0, 2))
        c1 = _rand_code(rnd, F4, t, rnd.randint(0, 2))
        if c0.k == 0 and c1.k == 0:
            continue
        s = qpoly_code([c0, c1])
        assert pair_distance(c0, c1) == s.min_distance()


def test_pair_distance_budget():
    rnd = random.Random(17)
    c0 = _rand_code(rnd, F4, 12, 6)
    c1 = _rand_code(rnd, F4, 12, 6)
    with pytest.raises(BudgetExceeded) as exc:
        pair_distance(c0, c1, budget=100)
    assert exc.value.best is not None


def test_pair_distance_requires_f4():
    c = LinearCode.from_rows(F8, 2, [[1, 1]])
    with pytest.raises(MethodUnavailable):
        pair_distance(c, c)


def test_prop33_identity_random():
    rnd = random.Random(19)
    for _ in range(30):
        t = rnd.randint(1, 6)
        c = _rand_code(rnd, F4, t, rnd.randint(1, min(3, t)))
        if c.k == 0:
            continue
        assert pair_distance(c, c) == c.min_distance()


def test_sr_duality_transport_random():
    rnd = random.Random(23)
    for basis in (B_1W, B_SD):
        for _ in range(25):
            t = rnd.randint(1, 4)
            c0 = _rand_code(rnd, F4, t, rnd.randint(0, t))
            c1 = _rand_code(rnd, F4, t, rnd.randint(0, t))
            assert duality_transport_qpoly(c0, c1, basis)


def test_sr_transfer_theorems():
    # self-dual and LCD move through the stacking in both directions
    rnd = random.Random(29)
    sd = cyclic_code(parse_poly(F4, "1+x"), 2)
    for _ in range(20):
        c0 = _rand_code(rnd, F4, 2, rnd.randint(0, 2))
        c1 = _rand_code(rnd, F4, 2, rnd.randint(0, 2))
        s = qpoly_code([c0, c1])
        assert s.is_self_dual() == (c0.is_self_dual() and c1.is_self_dual())
        assert s.is_lcd() == (c0.is_lcd() and c1.is_lcd())
    assert qpoly_code([sd, sd]).is_self_dual()


def test_distance_invariant_under_basis():
    rnd = random.Random(31)
    for _ in range(10):
        t = rnd.randint(1, 3)
        c0 = _rand_code(rnd, F4, t, 1)
        c1 = _rand_code(rnd, F4, t, 1)
        if c0.k == 0 and c1.k == 0:
            continue
        d1 = qpoly_code([c0, c1], B_1W).min_distance()
        d2 = qpoly_code([c0, c1], B_SD).min_distance()
        assert d1 == d2


# -- basis expansion ------------------------------------------------------------------


def test_default_expansion_profile():
    assert default_expansion_profile(2, 13) == [(2, 3)] + [(2, 2)] * 5
    assert default_expansion_profile(2, 8) == [(2, 2)] * 4
    assert default_expansion_profile(3, 8) == [(3, 5), (3, 3)]
    assert default_expansion_profile(3, 7) == [(3, 4), (3, 3)]
    with pytest.raises(ProfileMismatch):
        default_expansion_profile(3, 2)


def test_expansion_dimension_and_zero():
    rnd = random.Random(37)
    for _ in range(15):
        n = rnd.randint(2, 7)
        c = _rand_code(rnd, F4, n, rnd.randint(0, n))
        m = basis_expand_code(c, B_SD)
        assert m.dim == 2 * c.k
    z = basis_expand_code(LinearCode.zero(F4, 4), B_SD)
    assert z.dim == 0


def test_expansion_isometry():
    # weights of expanded words equal the span-based weights of the symbols
    rnd = random.Random(41)
    for basis in (B_1W, B_SD):
        for _ in range(20):
            n = rnd.randint(2, 6)
            prof = BlockProfile(F2, default_expansion_profile(2, n))
            word = [rnd.randrange(4) for _ in range(n)]
            c = LinearCode.from_rows(F4, n, [word])
            if c.k == 0:
                continue
            m = basis_expand_code(c, basis, prof)
            expanded = SumRankVector.from_flat(prof, list(m.generator.rows[0]))
            # the generator row is the expansion of some scalar multiple
            assert expanded.weight() == symbol_sum_rank_weight(word, F4, prof)


def test_expansion_duality_transport():
    rnd = random.Random(43)
    for ext in (F4, F8):
        for _ in range(15):
            n = rnd.randint(ext.degree_over_base, 7)
            c = _rand_code(rnd, ext, n, rnd.randint(0, n))
            m = ext.degree_over_base
            basis = None
            while basis is None:
                els = [rnd.randrange(1, ext.order) for _ in range(m)]
                try:
                    basis = Basis(ext, els)
                except Exception:
                    basis = None
            assert duality_transport_expansion(c, basis)


def test_expansion_transfer_theorems():
    rnd = random.Random(47)
    sd = cyclic_code(parse_poly(F4, "1+x^2"), 4)
    assert basis_expand_code(sd, B_SD).is_self_dual()
    for _ in range(20):
        n = rnd.randint(2, 6)
        c = _rand_code(rnd, F4, n, rnd.randint(0, n))
        m = basis_expand_code(c, B_SD)
        assert m.is_self_dual() == c.is_self_dual()
        assert m.is_lcd() == c.is_lcd()


def test_expansion_isometry_code_level():
    # the minimum distance survives the expansion, and the symbol-route
    # weights computed on the extension side give the same minimum
    rnd = random.Random(61)
    for _ in range(10):
        n = rnd.randint(2, 5)
        c = _rand_code(rnd, F4, n, rnd.randint(1, 2))
        if c.k == 0:
            continue
        prof = BlockProfile(F2, default_expansion_profile(2, n))
        m = basis_expand_code(c, B_SD, prof)
        symbol_min = min(
            symbol_sum_rank_weight(word, F4, prof)
            for word in c.codewords()
            if any(word)
        )
        assert m.min_distance() == symbol_min


def test_qpoly_code_of_cyclic_codes_is_cyclic():
    c0 = cyclic_code(parse_poly(F4, "1+x"), 4)
    c1 = cyclic_code(bch_generator(F4, 5, 2, 0), 5)
    assert qpoly_code([c0, c0]).is_cyclic()
    assert qpoly_code([c1, c1]).is_cyclic()


def test_table8_row():
    c = cyclic_code(bch_generator(F4, 13, 13, 1), 13)
    m = basis_expand_code(c, B_SD)
    assert m.profile.blocks == ((2, 3),) + ((2, 2),) * 5
    assert m.dim == 2
    assert m.min_distance() == 6


# -- bounds -----------------------------------------------------------------------------


def test_sr_distance_bounds_examples():
    assert sr_distance_bounds(2, [5, 13]) == sr_distance_bounds(2, [5, 13])
    b = sr_distance_bounds(2, [5, 13])
    assert (b.lower, b.upper, b.exact) == (10, 10, True)
    b = sr_distance_bounds(2, [2, 4])
    assert (b.lower, b.upper) == (4, 4)  # max(min(4,4), min(2,8)) = 4 = 2*2
    b = sr_distance_bounds(2, [5, 5])
    assert (b.lower, b.upper) == (5, 10)
    b3 = sr_distance_bounds(3, [2, 2, 2])
    assert (b3.lower, b3.upper) == (2, 6)
    with pytest.raises(LengthMismatch):
        sr_distance_bounds(2, [1])


def test_bounds_sandwich_random():
    rnd = random.Random(53)
    for _ in range(25):
        t = rnd.randint(1, 4)
        c0 = _rand_code(rnd, F4, t, rnd.randint(1, 2))
        c1 = _rand_code(rnd, F4, t, rnd.randint(1, 2))
        if c0.k == 0 or c1.k == 0:
            continue
        d0, d1 = c0.min_distance(), c1.min_distance()
        b = sr_distance_bounds(2, [d0, d1])
        dsr = qpoly_code([c0, c1]).min_distance()
        assert b.contains(dsr)


def test_expansion_distance_bounds_examples():
    f2 = prime_field(2)
    prof13 = BlockProfile(f2, default_expansion_profile(2, 13))
    b = expansion_distance_bounds(13, prof13)
    assert (b.lower, b.upper) == (6, 12)  # 13 = 3 + 2*4 + 2 fills 5 blocks
    prof205 = BlockProfile(f2, default_expansion_profile(2, 205))
    assert (expansion_distance_bounds(41, prof205).lower,
            expansion_distance_bounds(41, prof205).upper) == (20, 41)
    assert (expansion_distance_bounds(164, prof205).lower,
            expansion_distance_bounds(164, prof205).upper) == (82, 164)
    with pytest.raises(DistanceExceedsLength):
        expansion_distance_bounds(14, prof13)


def test_expansion_bounds_hold_random():
    rnd = random.Random(59)
    for _ in range(20):
        n = rnd.randint(2, 6)
        c = _rand_code(rnd, F4, n, rnd.randint(1, n))
        if c.k == 0:
            continue
        d = c.min_distance()
        prof = BlockProfile(F2, default_expansion_profile(2, n))
        m = basis_expand_code(c, B_SD, prof)
        dsr = m.min_distance()
        assert expansion_distance_bounds(d, prof).contains(dsr)
        if all(b == (2, 2) for b in prof.blocks):
            assert uniform22_distance_bounds(d, prof.t).contains(dsr)


def test_uniform22_bounds():
    b = uniform22_distance_bounds(5, 13)
    assert (b.lower, b.upper) == (3, 5)
    with pytest.raises(DistanceExceedsLength):
        uniform22_distance_bounds(9, 4)


def test_caps():
    assert selfdual_sr_distance_cap(12) == 16
    assert selfdual_sr_distance_cap(2) == 8
    assert selfdual_sr_distance_cap(11) == 8
