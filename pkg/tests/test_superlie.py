import random
from fractions import Fraction

import pytest

from supercapelli.multipoly import MultiPoly
from supercapelli.superlie import (Ambient, UEAElement, bracket, bracket_gen,
                                   pbw_normalize, gelfand_element, omega,
                                   hc_project, omega_cartan, q_context,
                                   q_projection, gd_element)


def E(amb, i, j):
    return UEAElement.gen(amb, i, j)


def random_element(amb, rng, nwords=3, maxlen=3):
    terms = {}
    for _ in range(nwords):
        w = tuple((rng.randrange(amb.dim), rng.randrange(amb.dim))
                  for _ in range(rng.randrange(maxlen + 1)))
        terms[w] = Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
    return UEAElement(amb, terms)


def test_labels():
    amb = Ambient(2, 2)
    assert [amb.label(i) for i in range(4)] == ['1', '2', '1b', '2b']
    assert amb.parse_label('2b') == 3
    with pytest.raises(ValueError):
        amb.parse_label('5')
    assert str(E(amb, 2, 3)) == 'E(1b,2b)'


def test_bracket_even():
    amb = Ambient(2, 0)
    assert bracket(E(amb, 0, 1), E(amb, 1, 0)) == E(amb, 0, 0) - E(amb, 1, 1)
    assert bracket(E(amb, 0, 0), E(amb, 1, 1)).is_zero()


def test_bracket_odd_anticommutator():
    amb = Ambient(1, 1)
    x, y = E(amb, 0, 1), E(amb, 1, 0)
    # both odd: the supercommutator is the anticommutator
    assert bracket(x, y) == E(amb, 0, 0) + E(amb, 1, 1)
    assert bracket(x, x).is_zero()
    with pytest.raises(ValueError):
        bracket(x * y, x)


def test_super_jacobi_random():
    amb = Ambient(1, 2)
    rng = random.Random(23)
    gens = [(i, j) for i in range(amb.dim) for j in range(amb.dim)]
    for _ in range(25):
        g1, g2, g3 = (rng.choice(gens) for _ in range(3))
        p1, p2, p3 = (amb.gen_parity(g) for g in (g1, g2, g3))
        a, b, c = E(amb, *g1), E(amb, *g2), E(amb, *g3)
        lhs = bracket(a, bracket(b, c))
        rhs = bracket(bracket(a, b), c) + \
            bracket(b, bracket(a, c)).scale((-1) ** (p1 * p2))
        assert lhs == rhs


def test_pbw_normal_form_oracle():
    amb = Ambient(2, 0)
    got = pbw_normalize(E(amb, 0, 1) * E(amb, 1, 0))
    want = (E(amb, 1, 0) * E(amb, 0, 1)
            + E(amb, 0, 0) - E(amb, 1, 1))
    assert got == want


def test_pbw_odd_square_vanishes():
    amb = Ambient(1, 1)
    x = E(amb, 0, 1)
    assert pbw_normalize(x * x).is_zero()
    # diagonal letters are even, so their squares are already normal
    z = E(amb, 1, 1)
    assert pbw_normalize(z * z) == z * z


def test_pbw_idempotent_and_linear():
    rng = random.Random(31)
    amb = Ambient(1, 2)
    for _ in range(10):
        a = random_element(amb, rng)
        b = random_element(amb, rng)
        na = pbw_normalize(a)
        assert pbw_normalize(na) == na
        assert pbw_normalize(a + b) == na + pbw_normalize(b)
        # mirrored ordering is idempotent as well
        ma = pbw_normalize(a, mirrored=True)
        assert pbw_normalize(ma, mirrored=True) == ma


def test_pbw_preserves_products():
    """Normalization is a rewriting of the same element: normalizing a
    product of normalized factors equals normalizing the raw product."""
    rng = random.Random(37)
    amb = Ambient(1, 1)
    for _ in range(10):
        a, b = random_element(amb, rng, 2, 2), random_element(amb, rng, 2, 2)
        assert pbw_normalize(pbw_normalize(a) * pbw_normalize(b)) == \
            pbw_normalize(a * b)


def test_gelfand_degree_one():
    amb = Ambient(2, 1)
    z = gelfand_element(amb, 1)
    assert z == E(amb, 0, 0) + E(amb, 1, 1) + E(amb, 2, 2)


def test_gelfand_centrality_small():
    for (m, n) in ((1, 1), (2, 1)):
        amb = Ambient(m, n)
        for d in (1, 2):
            z = gelfand_element(amb, d)
            for i in range(amb.dim):
                for j in range(amb.dim):
                    g = E(amb, i, j)
                    assert pbw_normalize(z * g - g * z).is_zero(), (m, n, d, i, j)


def test_omega_involution_and_antimultiplicativity():
    rng = random.Random(41)
    amb = Ambient(1, 2)
    for _ in range(10):
        a = random_element(amb, rng)
        assert omega(omega(a)) == a
    for i in range(amb.dim):
        for j in range(amb.dim):
            assert omega(E(amb, i, j)) == E(amb, i, j).scale(-1)


def test_hc_plus_oracle():
    amb = Ambient(1, 1)
    ctx = amb.cartan_context()
    got = hc_project(gelfand_element(amb, 2), 'plus')
    want = MultiPoly(ctx, {(2, 0): 1, (0, 2): -1, (1, 0): -1, (0, 1): -1})
    assert got == want


def test_hc_minus_vs_omega():
    amb = Ambient(1, 2)
    for d in (1, 2, 3):
        z = gelfand_element(amb, d)
        assert hc_project(omega(z), 'minus') == \
            omega_cartan(hc_project(z, 'plus'))


def test_omega_cartan():
    ctx = ('h1', 'h2')
    p = MultiPoly(ctx, {(2, 0): 1, (1, 0): 3, (0, 0): 5})
    assert omega_cartan(p) == MultiPoly(ctx, {(2, 0): 1, (1, 0): -3,
                                              (0, 0): 5})


def test_q_projection():
    amb = Ambient(1, 2)
    ctx = amb.cartan_context()
    assert q_context(1, 1) == ('h1', 'hb1')
    p = MultiPoly(ctx, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1,
                        (0, 1, 1): 4})
    q = q_projection(p, amb)
    assert q == MultiPoly(('h1', 'hb1'), {(1, 0): 1, (0, 1): 1, (0, 2): 1})
    with pytest.raises(ValueError):
        q_projection(MultiPoly(Ambient(1, 1).cartan_context(), {}),
                     Ambient(1, 1))


def test_gd_element():
    amb = Ambient(1, 2)
    g1 = gd_element(amb, 1)
    ctx = amb.cartan_context()
    want = MultiPoly(ctx, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    assert g1 == want
    assert q_projection(g1, amb) == MultiPoly(('h1', 'hb1'),
                                              {(1, 0): 1, (0, 1): 1})


def test_gd_matches_projected_gelfand():
    """In degree one the projected Gelfand element equals the shifted
    power-sum generator exactly."""
    amb = Ambient(1, 2)
    z1 = q_projection(hc_project(gelfand_element(amb, 1), 'plus'), amb)
    p1 = q_projection(gd_element(amb, 1), amb)
    assert z1 == p1
