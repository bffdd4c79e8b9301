"""Constructive central preimages, eigenvalue polynomials, interpolation
algebras and the shifted super Jack / Schur families.

Two routes lead to the eigenvalue polynomial of a Capelli operator: the
Harish-Chandra projection of a constructed central preimage, and direct
interpolation inside the filtered algebra generated by the shifted power
sums.  Their exact agreement is the flagship consistency check.
"""

from fractions import Fraction
from itertools import permutations
from math import factorial

from .multipoly import MultiPoly, AffineSubstitution
from .linalg import lin_solve, solve_in_span, dict_vectors_rank
from .hooks import (HookParams, enumerate_hooks, gamma_map, gamma_star_map,
                    dual_weight, hook_product_H, classical_hook_product,
                    frobenius_point, frobenius_affine_map, a_context,
                    eps_context, xy_context, eps_extension)
from .superlie import (Ambient, UEAElement, gelfand_element, hc_project,
                       q_projection, gd_element, omega, omega_cartan,
                       q_context)
from .weyl import (WeylElement, rho_check, rho_check_gen, symbol, weyl_mul,
                   invariant_spanning_set, _partitions_of, _commutator,
                   consecutive_cycles_perm, t_sigma, capelli_operator,
                   spherical_poly)


# ---------------------------------------------------------------------------
# Permutation plumbing.

def perm_compose(a, b):
    """(a b)(i) = a(b(i)); permutations as 1-based image tuples."""
    return tuple(a[b[i] - 1] for i in range(len(b)))


def hyperoctahedral(d):
    """The centralizer of the fixed-point-free involution (1 2)(3 4)...:
    block permutations combined with flips inside each block, in
    lexicographic order of the resulting image tuples."""
    out = []
    for blockperm in permutations(range(d)):
        for flips in range(2 ** d):
            img = [0] * (2 * d)
            for t in range(d):
                u = blockperm[t]
                if (flips >> t) & 1:
                    img[2 * t] = 2 * u + 2
                    img[2 * t + 1] = 2 * u + 1
                else:
                    img[2 * t] = 2 * u + 1
                    img[2 * t + 1] = 2 * u + 2
            out.append(tuple(img))
    return sorted(out)


def _compositions(d):
    """All ordered compositions of d, graded by length then lex."""
    out = []

    def rec(left, prefix):
        if left == 0:
            out.append(tuple(prefix))
            return
        for p in range(1, left + 1):
            prefix.append(p)
            rec(left - p, prefix)
            prefix.pop()

    rec(d, [])
    return sorted(out, key=lambda c: (len(c), c))


class CycleDecomposition:
    """Normalizers sp, spp in the hyperoctahedral subgroup and boundary
    data with sp * sigma * spp equal to a product of consecutive cycles."""

    def __init__(self, sigma, sp, spp, blocks):
        self.sigma = tuple(sigma)
        self.sp = tuple(sp)
        self.spp = tuple(spp)
        self.blocks = tuple(blocks)
        self.boundaries = (0,) + tuple(
            sum(blocks[:i + 1]) for i in range(len(blocks)))
        target = consecutive_cycles_perm(blocks)
        if perm_compose(self.sp, perm_compose(self.sigma, self.spp)) != target:
            raise AssertionError('cycle decomposition identity failed')


def sigma_normalize(sigma):
    """Normalize a permutation of {1..2d} to a product of consecutive
    cycles by multiplying with hyperoctahedral elements on both sides.

    Deterministic exhaustive scan (first hit in lexicographic order); the
    witness identity is re-verified by composition on construction.
    """
    two_d = len(sigma)
    if two_d % 2 or sorted(sigma) != list(range(1, two_d + 1)):
        raise ValueError('not a permutation of even size')
    d = two_d // 2
    targets = {consecutive_cycles_perm(c): c for c in _compositions(d)}
    H = hyperoctahedral(d)
    for sp in H:
        for spp in H:
            prod = perm_compose(sp, perm_compose(tuple(sigma), spp))
            if prod in targets:
                return CycleDecomposition(sigma, sp, spp, targets[prod])
    raise AssertionError('no hyperoctahedral normalization found')


def symbol_preimage(ambient, sigma):
    """A central element whose polarized image has top symbol equal to the
    invariant attached to sigma: the product of scaled Gelfand elements
    prescribed by the cycle decomposition."""
    dec = sigma_normalize(sigma)
    z = UEAElement.one(ambient)
    for b in dec.blocks:
        z = z * gelfand_element(ambient, b).scale(Fraction(-1, 2) ** b)
    return z


def full_preimage(D, check_invariant=True):
    """A central enveloping algebra element z with polarized image exactly
    D, built by peeling top symbols down the order filtration."""
    amb = D.ambient
    if check_invariant:
        for i in range(amb.dim):
            for j in range(amb.dim):
                if i == j:
                    continue
                if not _commutator(rho_check_gen(amb, i, j), D).is_zero():
                    raise ValueError('operator is not invariant')
    z = UEAElement.zero(amb)
    R = D
    while not R.is_zero():
        d = R.order()
        if d == 0:
            c = R.terms.get(((), ()), Fraction(0))
            if R.terms != {((), ()): c}:
                raise AssertionError('order-zero remainder is not scalar')
            z = z + UEAElement.one(amb).scale(c)
            break
        s = symbol(R, d)
        span = invariant_spanning_set(amb, d)
        coeffs = solve_in_span([t.terms for _, t in span], s.terms)
        if coeffs is None:
            raise AssertionError('symbol of order %d not in the invariant '
                                 'span' % d)
        zd = UEAElement.zero(amb)
        for c, (part, _) in zip(coeffs, span):
            if not c:
                continue
            prod = UEAElement.one(amb)
            for b in part:
                prod = prod * gelfand_element(amb, b).scale(Fraction(-1, 2) ** b)
            zd = zd + prod.scale(c)
        z = z + zd
        R = R - rho_check(zd)
        if not R.is_zero() and R.order() >= d:
            raise AssertionError('order did not drop during recursion')
    return z


# ---------------------------------------------------------------------------
# Eigenvalue polynomials.

class EigenPoly:

    __slots__ = ('b', 'd', 'poly')

    def __init__(self, b, poly):
        self.b = b
        self.d = b.size
        self.poly = poly

    def value(self, weight):
        return self.poly.evaluate(weight.coords)


def central_preimage(params, b, capelli=None):
    if capelli is None:
        capelli = capelli_operator(params, b)
    return full_preimage(capelli, check_invariant=False)


def c_poly_hc(params, b, preimage=None):
    """Eigenvalue polynomial through the plus Harish-Chandra projection of
    a central preimage of the Capelli operator."""
    if params.theta != 'half':
        raise ValueError('half regime required')
    amb = Ambient(params.m, 2 * params.n)
    if preimage is None:
        preimage = central_preimage(params, b)
    cart = hc_project(preimage, 'plus')
    poly = q_projection(cart, amb).rename(a_context(params.m, params.n))
    return EigenPoly(b, poly)


def c_star_poly(params, b, preimage=None):
    """Dual eigenvalue polynomial: minus projection with negated
    evaluation variables."""
    if params.theta != 'half':
        raise ValueError('half regime required')
    amb = Ambient(params.m, 2 * params.n)
    if preimage is None:
        preimage = central_preimage(params, b)
    cart = hc_project(preimage, 'minus')
    poly = omega_cartan(q_projection(cart, amb))
    return EigenPoly(b, poly.rename(a_context(params.m, params.n)))


class InterpolationBasis:

    __slots__ = ('context', 'polys', 'records')

    def __init__(self, context, polys, records):
        self.context = context
        self.polys = polys
        self.records = records          # generator-degree multisets

    def __len__(self):
        return len(self.polys)


def _filtered_products(gens_by_degree, d, context):
    """Products of generators over all partitions of sizes <= d, greedily
    filtered to a linearly independent family (constant included)."""
    polys = [MultiPoly.const(context, 1)]
    records = [()]
    vecs = [polys[0].terms]
    for size in range(1, d + 1):
        for part in _partitions_of(size):
            prod = MultiPoly.const(context, 1)
            for k in part:
                prod = prod * gens_by_degree[k]
            if dict_vectors_rank(vecs + [prod.terms]) > len(vecs):
                polys.append(prod)
                records.append(part)
                vecs.append(prod.terms)
    return polys, records


def ia_star_basis(params, d):
    """Filtered basis of the interpolation algebra on the weight context:
    span of products of projected center generators."""
    if params.theta != 'half':
        raise ValueError('half regime required')
    amb = Ambient(params.m, 2 * params.n)
    ctx = a_context(params.m, params.n)
    gens = {k: q_projection(gd_element(amb, k), amb).rename(ctx)
            for k in range(1, d + 1)}
    polys, records = _filtered_products(gens, d, ctx)
    expected = len(enumerate_hooks(params, d, upto=True))
    if len(polys) != expected:
        raise AssertionError('interpolation algebra dimension %d does not '
                             'match hook count %d at degree %d'
                             % (len(polys), expected, d))
    return InterpolationBasis(ctx, polys, records)


def c_poly_interp(params, b, basis=None):
    """Eigenvalue polynomial by interpolation: the unique element of the
    filtered interpolation algebra with the prescribed normalization and
    vanishing on the other weights of size up to |b|."""
    d = b.size
    if basis is None:
        basis = ia_star_basis(params, d)
    hooks = enumerate_hooks(params, d, upto=True)
    rows = []
    rhs = []
    for bp in hooks:
        mu = gamma_star_map(bp)
        rows.append([p.evaluate(mu.coords) for p in basis.polys])
        rhs.append(Fraction(factorial(d)) if bp == b else Fraction(0))
    res = lin_solve(rows, rhs, len(basis))
    if not res.unique:
        raise AssertionError('interpolation system is singular')
    poly = MultiPoly.zero(basis.context)
    for c, p in zip(res.solution, basis.polys):
        if c:
            poly = poly + p.scale(c)
    return EigenPoly(b, poly)


# ---------------------------------------------------------------------------
# Shifted super Jack / Schur interpolation on Frobenius coordinates.

def deformed_power_sum(params, d):
    """Generators of the interpolation algebra in Frobenius coordinates.
    These are exactly the Frobenius transforms of the projected center
    generators."""
    m, n = params.m, params.n
    ctx = xy_context(m, n)
    out = MultiPoly.zero(ctx)
    if params.theta == 'half':
        for k in range(1, m + 1):
            base = MultiPoly.variable(ctx, 'x%d' % k).scale(2) \
                + MultiPoly.const(ctx, n)
            out = out + base ** d
        for l in range(1, n + 1):
            y = MultiPoly.variable(ctx, 'y%d' % l)
            for shift in (Fraction(1, 2), Fraction(-1, 2)):
                base = y + MultiPoly.const(ctx, shift - n)
                out = out + (base ** d).scale((-1) ** (d - 1))
    else:
        for k in range(1, m + 1):
            out = out + MultiPoly.variable(ctx, 'x%d' % k) ** d
        for l in range(1, n + 1):
            out = out + (MultiPoly.variable(ctx, 'y%d' % l) ** d
                         ).scale((-1) ** (d - 1))
    return out


def sp_basis(params, d):
    ctx = xy_context(params.m, params.n)
    gens = {k: deformed_power_sum(params, k) for k in range(1, d + 1)}
    polys, records = _filtered_products(gens, d, ctx)
    expected = len(enumerate_hooks(params, d, upto=True))
    if len(polys) != expected:
        raise AssertionError('interpolation basis dimension mismatch: '
                             '%d vs %d hooks' % (len(polys), expected))
    return InterpolationBasis(ctx, polys, records)


def sp_star(params, b, basis=None):
    """Shifted interpolation polynomial for a hook partition: vanishes at
    the Frobenius points of all other partitions of size up to |b| and
    takes the hook-product value at its own point."""
    d = b.size
    if basis is None:
        basis = sp_basis(params, d)
    hooks = enumerate_hooks(params, d, upto=True)
    target = hook_product_H(b) if params.theta == 'half' \
        else Fraction(classical_hook_product(b))
    rows = []
    rhs = []
    for bp in hooks:
        pt = frobenius_point(bp).coords()
        rows.append([p.evaluate(pt) for p in basis.polys])
        rhs.append(target if bp == b else Fraction(0))
    res = lin_solve(rows, rhs, len(basis))
    if not res.unique:
        raise AssertionError('interpolation system is singular')
    poly = MultiPoly.zero(basis.context)
    for c, p in zip(res.solution, basis.polys):
        if c:
            poly = poly + p.scale(c)
    return poly


def frobenius_transform(params, p):
    """Composition with the affine map identifying weight coordinates with
    Frobenius coordinates."""
    sub = frobenius_affine_map(params)
    if isinstance(p, EigenPoly):
        p = p.poly
    if p.vars != sub.source:
        raise ValueError('polynomial context does not match the regime')
    return sub.apply(p)


# ---------------------------------------------------------------------------
# Hyperplane (natural algebra) membership.

def _swap_vars(p, i, j):
    terms = {}
    for e, c in p.terms.items():
        e = list(e)
        e[i], e[j] = e[j], e[i]
        terms[tuple(e)] = c
    return MultiPoly(p.vars, terms)


def _shift_vars(p, shifts):
    """Substitute each variable v_i -> v_i + shifts[i]."""
    ctx = p.vars
    images = {}
    for i, name in enumerate(ctx):
        lin = [Fraction(0)] * len(ctx)
        lin[i] = Fraction(1)
        images[name] = (lin, shifts[i])
    return AffineSubstitution(ctx, ctx, images).apply(p)


def natural_algebra_check(params, p):
    """Membership test for the natural interpolation algebra: separate
    symmetry plus the shift relation on the coupling hyperplanes."""
    m, n = params.m, params.n
    if p.vars != xy_context(m, n):
        raise ValueError('expected a Frobenius-coordinate polynomial')
    for i in range(m - 1):
        if _swap_vars(p, i, i + 1) != p:
            return False
    for l in range(n - 1):
        if _swap_vars(p, m + l, m + l + 1) != p:
            return False
    theta = Fraction(1, 2) if params.theta == 'half' else Fraction(1)
    half = Fraction(1, 2)
    for k in range(m):
        for l in range(n):
            shifts_plus = [Fraction(0)] * (m + n)
            shifts_plus[k] = half
            shifts_plus[m + l] = -half
            shifts_minus = [-s for s in shifts_plus]
            g = _shift_vars(p, shifts_plus) - _shift_vars(p, shifts_minus)
            # restrict to the hyperplane x_k = -theta * y_l
            ctx = p.vars
            images = {}
            for i, name in enumerate(ctx):
                lin = [Fraction(0)] * (m + n)
                if i == k:
                    lin[m + l] = -theta
                else:
                    lin[i] = Fraction(1)
                images[name] = (lin, Fraction(0))
            restricted = AffineSubstitution(ctx, ctx, images).apply(g)
            if not restricted.is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# Theorem-level identities.

class Report:

    def __init__(self, name, passed, detail=''):
        self.name = name
        self.passed = passed
        self.detail = detail

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return 'Report(%s: %s)' % (self.name, 'pass' if self.passed else
                                   'FAIL %s' % self.detail)


def verify_sv(params, b, preimage=None):
    """Frobenius transform of the dual eigenvalue polynomial against the
    normalized shifted interpolation polynomial."""
    d = b.size
    lhs = frobenius_transform(params, c_star_poly(params, b, preimage=preimage))
    rhs = sp_star(params, b).scale(Fraction(factorial(d)) / hook_product_H(b))
    ok = lhs == rhs
    detail = '' if ok else 'lhs=%s rhs=%s' % (lhs, rhs)
    return Report('sv:%s' % b, ok, detail)


def verify_main(params, b, capelli=None):
    """Top homogeneous part of the eigenvalue polynomial against the
    spherical polynomial."""
    if capelli is None:
        capelli = capelli_operator(params, b)
    c = c_poly_hc(params, b, preimage=full_preimage(capelli,
                                                    check_invariant=False))
    top = c.poly.top_part() if not c.poly.is_zero() else c.poly
    d = spherical_poly(params, b, capelli=capelli)
    ok = top == d
    detail = '' if ok else 'top=%s spherical=%s' % (top, d)
    return Report('main:%s' % b, ok, detail)


def theta_one_family(params, b):
    """The shifted supersymmetric Schur interpolation polynomial and its
    top homogeneous part, in Frobenius coordinates."""
    if params.theta != 'one':
        raise ValueError('theta=one required')
    s_star = sp_star(params, b)
    s_top = s_star.top_part() if not s_star.is_zero() else s_star
    return {'s_star': s_star, 's_top': s_top}
