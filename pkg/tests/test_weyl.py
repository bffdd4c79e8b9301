import random
from fractions import Fraction

import pytest

from supercapelli.hooks import (HookParams, enumerate_hooks, gamma_star_map,
                                eps_extension, a_context)
from supercapelli.multipoly import MultiPoly
from supercapelli.superlie import Ambient, UEAElement, bracket, gelfand_element
from supercapelli.weyl import (WeylElement, weyl_context, y_gen, d_gen,
                               weyl_mul, monomial_basis, apply_weyl,
                               rho_check, rho_check_gen, t_sigma,
                               consecutive_cycles_perm, invariant_spanning_set,
                               invariant_symbol_space, mono_weight,
                               highest_weight_vectors,
                               all_highest_weight_vectors, cyclic_span_dim,
                               eigenvalue_on, capelli_operator,
                               spherical_vector, spherical_poly,
                               osp_spanning_set, symbol)


def random_weyl(amb, rng, nterms=3, maxlen=2):
    ctx = weyl_context(amb)
    ngen = len(ctx.pairs)
    terms = {}
    for _ in range(nterms):
        y = tuple(sorted(rng.randrange(ngen)
                         for _ in range(rng.randrange(maxlen + 1))))
        d = tuple(sorted(rng.randrange(ngen)
                         for _ in range(rng.randrange(maxlen + 1))))
        if ctx.sort_mono(y)[0] is None or ctx.sort_mono(d)[0] is None:
            continue
        terms[(y, d)] = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
    return WeylElement(amb, terms)


def test_canonical_pairs():
    amb = Ambient(1, 2)
    ctx = weyl_context(amb)
    # pairs (0,0), (0,1), (0,2), (1,2); odd diagonals excluded
    assert len(ctx.pairs) == 4
    assert ctx.canon(1, 1) == (None, 0)
    g, s = ctx.canon(2, 0)
    assert ctx.pairs[g] == (0, 2) and s == 1
    g, s = ctx.canon(2, 1)
    assert ctx.pairs[g] == (1, 2) and s == -1


def test_heisenberg_relation():
    amb = Ambient(1, 0)
    y = y_gen(amb, 0, 0)
    d = d_gen(amb, 0, 0)
    assert weyl_mul(d, y) == weyl_mul(y, d) + WeylElement.one(amb).scale(2)


def test_odd_generator_squares():
    amb = Ambient(1, 1)
    y = y_gen(amb, 0, 1)
    assert weyl_mul(y, y).is_zero()
    d = d_gen(amb, 0, 1)
    assert weyl_mul(d, d).is_zero()


def test_associativity_random():
    amb = Ambient(1, 2)
    rng = random.Random(19)
    for _ in range(12):
        a, b, c = (random_weyl(amb, rng) for _ in range(3))
        assert weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c))


def test_json_round_trip():
    amb = Ambient(2, 2)
    rng = random.Random(29)
    for _ in range(8):
        a = random_weyl(amb, rng)
        assert WeylElement.from_json(a.to_json()) == a


def test_monomial_basis_dimensions():
    amb = Ambient(1, 2)
    # 2 even generators, 2 odd generators
    assert [len(monomial_basis(amb, k)) for k in range(4)] == [1, 4, 8, 12]


def test_rho_check_is_homomorphism():
    amb = Ambient(1, 2)
    gens = [(i, j) for i in range(amb.dim) for j in range(amb.dim)]
    for g1 in gens:
        for g2 in gens:
            a = UEAElement.gen(amb, *g1)
            b = UEAElement.gen(amb, *g2)
            lhs = rho_check(bracket(a, b))
            p1, p2 = amb.gen_parity(g1), amb.gen_parity(g2)
            ra, rb = rho_check(a), rho_check(b)
            rhs = weyl_mul(ra, rb) - weyl_mul(rb, ra).scale((-1) ** (p1 * p2))
            assert lhs == rhs, (g1, g2)


def test_rho_check_gelfand_one_is_grading():
    amb = Ambient(1, 2)
    op = rho_check(gelfand_element(amb, 1))
    for k in range(4):
        for mono in monomial_basis(amb, k):
            img = apply_weyl(op, {mono: Fraction(1)})
            assert img == ({mono: Fraction(-2 * k)} if k else {})


def test_t_sigma_rank_one():
    amb = Ambient(1, 0)
    t = t_sigma(amb, (1, 2))
    assert t == WeylElement(amb, {((0,), (0,)): Fraction(1, 2)})
    assert rho_check(UEAElement.gen(amb, 0, 0)) == t.scale(-2)


def test_t_sigma_block_invariance():
    amb = Ambient(1, 1)
    # swapping within a pairing block leaves the invariant unchanged
    assert t_sigma(amb, (2, 1, 3, 4)) == t_sigma(amb, (1, 2, 3, 4))
    assert t_sigma(amb, (3, 4, 1, 2)) == t_sigma(amb, (1, 2, 3, 4))


def test_consecutive_cycles_perm():
    assert consecutive_cycles_perm((1,)) == (1, 2)
    assert consecutive_cycles_perm((2,)) == (1, 4, 3, 2)
    assert consecutive_cycles_perm((1, 1)) == (1, 2, 3, 4)


def test_invariant_space_dimensions():
    amb = Ambient(1, 2)
    for d in (1, 2, 3):
        basis = invariant_symbol_space(amb, d, verify=True)
        assert len(basis) == len(enumerate_hooks(HookParams(1, 1, 'half'), d))


def test_invariant_spanning_set_degree_two_covers_s4():
    from itertools import permutations
    from supercapelli.linalg import solve_in_span
    amb = Ambient(1, 2)
    span = [t.terms for _, t in invariant_spanning_set(amb, 2)]
    for sig in permutations(range(1, 5)):
        assert solve_in_span(span, t_sigma(amb, sig).terms) is not None, sig


def test_highest_weight_bookkeeping():
    amb = Ambient(1, 2)
    params = HookParams(1, 1, 'half')
    for k in range(4):
        hw = all_highest_weight_vectors(amb, k)
        count = sum(len(basis) for _, basis in hw)
        assert count == len(enumerate_hooks(params, k))
        total = sum(cyclic_span_dim(amb, v) for _, basis in hw for v in basis)
        assert total == len(monomial_basis(amb, k))


def test_capelli_operator_rank_one():
    params = HookParams(1, 0, 'half')
    b = enumerate_hooks(params, 1)[0]
    D = capelli_operator(params, b)
    assert D == WeylElement(Ambient(1, 0), {((0,), (0,)): Fraction(1, 2)})


def test_capelli_eigenvalues():
    params = HookParams(1, 1, 'half')
    amb = Ambient(1, 2)
    from math import factorial
    for b in enumerate_hooks(params, 2, upto=True):
        if not b.size:
            continue
        D = capelli_operator(params, b)
        for mu in enumerate_hooks(params, b.size):
            w = gamma_star_map(mu)
            hw = highest_weight_vectors(amb, mu.size, eps_extension(w))
            assert len(hw) == 1
            ev = eigenvalue_on(D, hw[0])
            assert ev == (factorial(b.size) if mu == b else 0)


def test_spherical_rank_one():
    params = HookParams(1, 0, 'half')
    b = enumerate_hooks(params, 1)[0]
    vec = spherical_vector(params, b)
    assert vec == {(0,): Fraction(1, 2)}
    poly = spherical_poly(params, b)
    ctx = a_context(1, 0)
    assert poly == MultiPoly.variable(ctx, 'a1').scale(Fraction(-1, 2))


def test_spherical_vector_invariance():
    params = HookParams(1, 1, 'half')
    b = enumerate_hooks(params, 2)[0]
    vec = spherical_vector(params, b)
    assert vec
    for k in osp_spanning_set(params):
        assert not apply_weyl(rho_check(k), vec)


def test_symbol():
    amb = Ambient(1, 0)
    a = weyl_mul(d_gen(amb, 0, 0), y_gen(amb, 0, 0))
    assert symbol(a, 1) == WeylElement(amb, {((0,), (0,)): Fraction(1)})
    with pytest.raises(ValueError):
        symbol(a, 0)
