"""The super Weyl algebra on the symmetric square of the natural module.

W = S^2(C^{m|N}) has coordinates x_{ij} = x_{ji} (up to the sign
(-1)^{|i||j|}) and dual generators y_{ij}; differential operators are
spanned by normal-ordered products (y-monomial) * (d-monomial), where d_g
differentiates with respect to x_g.  The defining pairing is

    <y_{ij}, x_{pq}> = d_ip d_jq + (-1)^{|i||j|} d_iq d_jp,
    d_w(w*) = (-1)^{|w|} <w*, w>,

so on canonical generators d_g(y_g) is 2 for an even diagonal pair, +1
for even or odd-odd off-diagonal pairs and -1 for mixed-parity pairs.

Monomials are tuples of canonical pair indices in nondecreasing order;
odd pairs are squarefree; swapping two odd generators costs a sign.
Elements of the polynomial algebra P(W) are plain dicts
{y-monomial: Fraction}.
"""

from fractions import Fraction
from itertools import product

from .superlie import Ambient, UEAElement

_ctx_cache = {}


class WeylContext:
    """Per-(m,N) tables: canonical pairs, their indices and parities."""

    def __init__(self, ambient):
        self.ambient = ambient
        dim = ambient.dim
        self.pairs = [(i, j) for i in range(dim) for j in range(i, dim)
                      if not (i == j and ambient.parity(i))]
        self.index = {p: k for k, p in enumerate(self.pairs)}
        self.parity = [ambient.gen_parity(p) for p in self.pairs]
        self._push_cache = {}

    def canon(self, i, j):
        """Canonical (pair index, sign); (None, 0) for a vanishing pair."""
        if i == j and self.ambient.parity(i):
            return None, 0
        if i <= j:
            return self.index[(i, j)], 1
        sgn = (-1) ** (self.ambient.parity(i) * self.ambient.parity(j))
        return self.index[(j, i)], sgn

    def pairing(self, d_gen, y_gen):
        """d_{d_gen} applied to the generator y_{y_gen} (canonical indices)."""
        if d_gen != y_gen:
            return 0
        i, j = self.pairs[d_gen]
        if i == j:
            return 2
        return -1 if self.parity[d_gen] else 1

    def sort_mono(self, items):
        """Sort generator indices into canonical order with the super sign.
        Returns (tuple, sign) or (None, 0) when an odd generator repeats."""
        items = list(items)
        sign = 1
        for i in range(1, len(items)):
            j = i
            while j > 0 and items[j - 1] > items[j]:
                if self.parity[items[j - 1]] and self.parity[items[j]]:
                    sign = -sign
                items[j - 1], items[j] = items[j], items[j - 1]
                j -= 1
        for k in range(len(items) - 1):
            if items[k] == items[k + 1] and self.parity[items[k]]:
                return None, 0
        return tuple(items), sign

    def mono_parity(self, mono):
        return sum(self.parity[g] for g in mono) % 2

    def mono_counts(self, mono):
        """Occurrences of each basis index across the pairs of a monomial."""
        counts = [0] * self.ambient.dim
        for g in mono:
            i, j = self.pairs[g]
            counts[i] += 1
            counts[j] += 1
        return tuple(counts)

    def gen_label(self, g):
        i, j = self.pairs[g]
        return '%s,%s' % (self.ambient.label(i), self.ambient.label(j))


def weyl_context(ambient):
    key = (ambient.m, ambient.n)
    if key not in _ctx_cache:
        _ctx_cache[key] = WeylContext(Ambient(*key))
    return _ctx_cache[key]


class WeylElement:
    """Normal-ordered differential operator: map from (y-monomial,
    d-monomial) pairs to rational coefficients."""

    __slots__ = ('ambient', 'terms')

    def __init__(self, ambient, terms=None):
        self.ambient = ambient
        self.terms = {t: Fraction(c) for t, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, ambient):
        return cls(ambient)

    @classmethod
    def one(cls, ambient):
        return cls(ambient, {((), ()): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def order(self):
        """Maximal d-degree across terms."""
        return max((len(d) for _, d in self.terms), default=0)

    def _check(self, other):
        if self.ambient != other.ambient:
            raise ValueError('ambient mismatch')

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for t, c in other.terms.items():
            terms[t] = terms.get(t, 0) + c
        return WeylElement(self.ambient, terms)

    def __neg__(self):
        return WeylElement(self.ambient, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return WeylElement(self.ambient, {t: c * v for t, v in self.terms.items()})

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return (isinstance(other, WeylElement) and self.ambient == other.ambient
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return self.scale(other)
        return weyl_mul(self, other)

    def parity(self):
        ctx = weyl_context(self.ambient)
        ps = {(ctx.mono_parity(y) + ctx.mono_parity(d)) % 2
              for y, d in self.terms}
        if len(ps) > 1:
            raise ValueError('element is not homogeneous in parity')
        return ps.pop() if ps else 0

    def bidegree_part(self, ydeg, ddeg):
        return WeylElement(self.ambient,
                           {(y, d): c for (y, d), c in self.terms.items()
                            if len(y) == ydeg and len(d) == ddeg})

    def ddeg_part(self, ddeg):
        return WeylElement(self.ambient,
                           {(y, d): c for (y, d), c in self.terms.items()
                            if len(d) == ddeg})

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: (len(t[0][0]) + len(t[0][1]), t[0]))

    def __str__(self):
        if not self.terms:
            return '0'
        ctx = weyl_context(self.ambient)
        parts = []
        for (y, d), c in self.sorted_terms():
            word = ''.join('y(%s)' % ctx.gen_label(g) for g in y)
            word += ''.join('D(%s)' % ctx.gen_label(g) for g in d)
            if not word:
                parts.append(str(c))
            elif c == 1:
                parts.append(word)
            elif c == -1:
                parts.append('-' + word)
            else:
                parts.append('%s*%s' % (c, word))
        out = parts[0]
        for p in parts[1:]:
            out += ' - ' + p[1:] if p.startswith('-') else ' + ' + p
        return out

    __repr__ = __str__

    def to_json(self):
        ctx = weyl_context(self.ambient)
        return {
            'm': self.ambient.m, 'n': self.ambient.n,
            'terms': [{'y': [ctx.gen_label(g) for g in y],
                       'd': [ctx.gen_label(g) for g in d],
                       'coef': str(c)}
                      for (y, d), c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data):
        amb = Ambient(int(data['m']), int(data['n']))
        ctx = weyl_context(amb)

        def mono(labels):
            out = []
            for lab in labels:
                i, j = (amb.parse_label(p) for p in lab.split(','))
                out.append(ctx.index[(i, j)])
            return tuple(out)

        terms = {}
        for rec in data['terms']:
            key = (mono(rec['y']), mono(rec['d']))
            terms[key] = terms.get(key, 0) + Fraction(rec['coef'])
        return cls(amb, terms)


def y_gen(ambient, i, j):
    ctx = weyl_context(ambient)
    g, s = ctx.canon(i, j)
    if g is None:
        return WeylElement.zero(ambient)
    return WeylElement(ambient, {((g,), ()): Fraction(s)})


def d_gen(ambient, i, j):
    ctx = weyl_context(ambient)
    g, s = ctx.canon(i, j)
    if g is None:
        return WeylElement.zero(ambient)
    return WeylElement(ambient, {((), (g,)): Fraction(s)})


def _push(ctx, dmono, ymono):
    """Normal order the product (d-monomial) * (y-monomial).

    Returns {(y', d'): coeff}.  Recursive on the last derivative with
    memoization; contraction terms come from the defining pairing.
    """
    if not dmono or not ymono:
        return {(ymono, dmono): Fraction(1)}
    key = (dmono, ymono)
    cached = ctx._push_cache.get(key)
    if cached is not None:
        return cached
    delta = dmono[-1]
    rest = dmono[:-1]
    pd = ctx.parity[delta]
    out = {}
    # the derivative passes through the whole y-monomial
    sign_full = (-1) ** (pd * sum(ctx.parity[g] for g in ymono))
    for (y1, d1), c in _push(ctx, rest, ymono).items():
        nd, s = ctx.sort_mono(list(d1) + [delta])
        if nd is None:
            continue
        k = (y1, nd)
        out[k] = out.get(k, 0) + c * s * sign_full
    # contraction at each matching generator
    pref = 0
    for t, g in enumerate(ymono):
        c0 = ctx.pairing(delta, g)
        if c0:
            s = (-1) ** (pd * pref)
            reduced = ymono[:t] + ymono[t + 1:]
            for (y1, d1), c in _push(ctx, rest, reduced).items():
                k = (y1, d1)
                out[k] = out.get(k, 0) + c * s * c0
        pref += ctx.parity[g]
    out = {k: v for k, v in out.items() if v != 0}
    ctx._push_cache[key] = out
    return out


def weyl_mul(a, b):
    a._check(b)
    ctx = weyl_context(a.ambient)
    terms = {}
    for (y1, d1), c1 in a.terms.items():
        for (y2, d2), c2 in b.terms.items():
            for (ym, dm), c in _push(ctx, d1, y2).items():
                ny, s1 = ctx.sort_mono(y1 + ym)
                if ny is None:
                    continue
                nd, s2 = ctx.sort_mono(dm + d2)
                if nd is None:
                    continue
                k = (ny, nd)
                terms[k] = terms.get(k, 0) + c1 * c2 * c * s1 * s2
    return WeylElement(a.ambient, terms)


# ---------------------------------------------------------------------------
# P(W) and the action of operators on it.  A polynomial is {y-mono: coeff}.

def monomial_basis(ambient, k):
    """All degree-k monomials (odd generators squarefree), sorted."""
    ctx = weyl_context(ambient)
    out = []

    def rec(start, left, prefix):
        if left == 0:
            out.append(tuple(prefix))
            return
        for g in range(start, len(ctx.pairs)):
            if ctx.parity[g] and prefix and prefix[-1] == g:
                continue
            prefix.append(g)
            rec(g + (1 if ctx.parity[g] else 0), left - 1, prefix)
            prefix.pop()

    rec(0, k, [])
    return out


def apply_weyl(op, poly):
    """Apply a WeylElement to an element of P(W) (dict {y-mono: coeff})."""
    ctx = weyl_context(op.ambient)
    out = {}
    for (yop, dop), cop in op.terms.items():
        for mono, c in poly.items():
            pieces = {mono: c * cop}
            for delta in reversed(dop):
                pd = ctx.parity[delta]
                nxt = {}
                for mm, cc in pieces.items():
                    pref = 0
                    for t, g in enumerate(mm):
                        c0 = ctx.pairing(delta, g)
                        if c0:
                            s = (-1) ** (pd * pref)
                            rm = mm[:t] + mm[t + 1:]
                            nxt[rm] = nxt.get(rm, 0) + cc * s * c0
                        pref += ctx.parity[g]
                pieces = nxt
            for mm, cc in pieces.items():
                nm, s = ctx.sort_mono(yop + mm)
                if nm is None:
                    continue
                out[nm] = out.get(nm, 0) + cc * s
    return {k: v for k, v in out.items() if v != 0}


class GradedPieceBasis:
    """Ordered monomial basis of the degree-k piece of P(W)."""

    def __init__(self, ambient, k):
        self.ambient = ambient
        self.degree = k
        self.monos = monomial_basis(ambient, k)
        self.index = {m: i for i, m in enumerate(self.monos)}

    def __len__(self):
        return len(self.monos)


def apply_matrix(op, basis_src, basis_dst):
    """Exact matrix of op from one graded piece to another (columns indexed
    by the source basis)."""
    cols = []
    for mono in basis_src.monos:
        img = apply_weyl(op, {mono: Fraction(1)})
        col = [Fraction(0)] * len(basis_dst)
        for mm, c in img.items():
            col[basis_dst.index[mm]] = c
        cols.append(col)
    return [[cols[j][i] for j in range(len(basis_src))]
            for i in range(len(basis_dst))]


# ---------------------------------------------------------------------------
# Polarization actions.

def rho_check_gen(ambient, i, j):
    """First-order operator realizing E_{ij} on P(W):
    -(-1)^{|i||j|} sum_r (-1)^{|r|} y_{rj} d_{ri}."""
    ctx = weyl_context(ambient)
    pi, pj = ambient.parity(i), ambient.parity(j)
    terms = {}
    for r in range(ambient.dim):
        yg, ys = ctx.canon(r, j)
        dg, ds = ctx.canon(r, i)
        if yg is None or dg is None:
            continue
        coef = -((-1) ** (pi * pj)) * ((-1) ** ambient.parity(r)) * ys * ds
        k = ((yg,), (dg,))
        terms[k] = terms.get(k, 0) + coef
    return WeylElement(ambient, terms)


def rho_check(x):
    """Multiplicative extension of the polarization action to enveloping
    algebra elements."""
    amb = x.ambient
    gen_img = {}
    out = WeylElement.zero(amb)
    for w, c in x.terms.items():
        acc = WeylElement.one(amb)
        for g in w:
            if g not in gen_img:
                gen_img[g] = rho_check_gen(amb, *g)
            acc = weyl_mul(acc, gen_img[g])
        out = out + acc.scale(c)
    return out


def rho_gen_action(ambient, i, j, xpoly):
    """Action of E_{ij} on the symmetric algebra S(W) via x-polarization:
    rho(E_ij) = sum_r x_{ir} D_{jr}, with D the polarized derivative.
    xpoly: {x-monomial: coeff} over canonical pair indices."""
    ctx = weyl_context(ambient)
    pj = ambient.parity(j)
    out = {}
    for r in range(ambient.dim):
        pr = ambient.parity(r)
        xg, xs = ctx.canon(i, r)
        if xg is None:
            continue
        pD = (pj + pr) % 2
        for mono, c in xpoly.items():
            pref = 0
            for t, g in enumerate(mono):
                k, l = ctx.pairs[g]
                # D_{jr}(x_{kl}) = d_jk d_rl + (-1)^{|j||r|} d_jl d_rk
                val = 0
                if j == k and r == l:
                    val += 1
                if j == l and r == k:
                    val += (-1) ** (pj * pr)
                if val:
                    s = (-1) ** (pD * pref)
                    reduced = mono[:t] + mono[t + 1:]
                    nm, s2 = ctx.sort_mono((xg,) + reduced)
                    if nm is not None:
                        out[nm] = out.get(nm, 0) + c * val * s * s2 * xs
                pref += ctx.parity[g]
    return {k: v for k, v in out.items() if v != 0}


# ---------------------------------------------------------------------------
# Invariant symbols.

def t_sigma(ambient, sigma):
    """The invariant bidegree-(d,d) operator attached to a permutation of
    {1..2d}, computed literally from its defining signed sum (with the
    1/2^d prefactor), presented in normal-ordered form."""
    two_d = len(sigma)
    if two_d % 2:
        raise ValueError('permutation must have even size')
    if sorted(sigma) != list(range(1, two_d + 1)):
        raise ValueError('not a permutation of 1..%d' % two_d)
    d = two_d // 2
    ctx = weyl_context(ambient)
    amb = ambient
    inv_pairs = [(r, s) for r in range(two_d) for s in range(r + 1, two_d)
                 if sigma[r] > sigma[s]]
    terms = {}
    for tup in product(range(amb.dim), repeat=two_d):
        p = [amb.parity(i) for i in tup]
        sgn = sum(p) % 2
        for r, s in inv_pairs:
            sgn += p[sigma[r] - 1] * p[sigma[s] - 1]
        ylist = []
        ok = True
        sign = (-1) ** sgn
        for t in range(d, 0, -1):
            g, s2 = ctx.canon(tup[2 * t - 2], tup[2 * t - 1])
            if g is None:
                ok = False
                break
            sign *= s2
            ylist.append(g)
        if not ok:
            continue
        xlist = []
        for t in range(1, d + 1):
            g, s2 = ctx.canon(tup[sigma[2 * t - 2] - 1], tup[sigma[2 * t - 1] - 1])
            if g is None:
                ok = False
                break
            sign *= s2
            xlist.append(g)
        if not ok:
            continue
        ny, s3 = ctx.sort_mono(ylist)
        if ny is None:
            continue
        nd, s4 = ctx.sort_mono(xlist)
        if nd is None:
            continue
        k = (ny, nd)
        terms[k] = terms.get(k, 0) + Fraction(sign * s3 * s4, 2 ** d)
    return WeylElement(ambient, terms)


def consecutive_cycles_perm(blocks):
    """Product of the consecutive even-entry cycles determined by block
    sizes: for boundaries d_s the factor is the cycle through the even
    numbers 2d_s+2, 2d_s+4, ..., 2d_{s+1}.  Returned as a 1-based image
    tuple on {1..2d}."""
    d = sum(blocks)
    img = list(range(1, 2 * d + 1))
    pos = 0
    for b in blocks:
        evens = [2 * pos + 2 * t for t in range(1, b + 1)]
        for a, nxt in zip(evens, evens[1:] + evens[:1]):
            img[a - 1] = nxt
        pos += b
    return tuple(img)


def _partitions_of(d):
    out = []

    def rec(left, maxp, prefix):
        if left == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(left, maxp), 0, -1):
            prefix.append(p)
            rec(left - p, p, prefix)
            prefix.pop()

    rec(d, d, [])
    return out


def invariant_spanning_set(ambient, d):
    """Representative invariant symbols, one per partition of d (products
    of consecutive cycles); every t_sigma lies in their span."""
    out = []
    for part in _partitions_of(d):
        out.append((part, t_sigma(ambient, consecutive_cycles_perm(part))))
    return out


def _commutator(a, b):
    """Supercommutator with b of even parity: ab - (-1)^{|a||b|} ba."""
    sgn = (-1) ** (a.parity() * b.parity())
    return weyl_mul(a, b) - weyl_mul(b, a).scale(sgn)


def invariant_kernel(ambient, d):
    """Basis (as lists of (y-mono, d-mono, coeff) dict-vectors) of the
    bidegree-(d,d) operators commuting with the whole polarized action,
    computed by direct linear algebra: weight-zero filtering by the
    diagonal action, then the kernel of the off-diagonal commutators."""
    from .linalg import mat_reduce
    ctx = weyl_context(ambient)
    monos = monomial_basis(ambient, d)
    by_counts = {}
    for mm in monos:
        by_counts.setdefault(ctx.mono_counts(mm), []).append(mm)
    cands = []
    for counts, group in sorted(by_counts.items()):
        for y in group:
            for dd in group:
                cands.append((y, dd))
    if not cands:
        return []
    gens = [(i, j) for i in range(ambient.dim) for j in range(ambient.dim)
            if i != j]
    rows_keys = {}
    columns = []
    for (y, dd) in cands:
        elem = WeylElement(ambient, {(y, dd): Fraction(1)})
        vec = {}
        for gi, g in enumerate(gens):
            com = _commutator(rho_check_gen(ambient, *g), elem)
            for t, c in com.terms.items():
                vec[(gi, t)] = c
        columns.append(vec)
    keys = sorted({k for vec in columns for k in vec})
    key_idx = {k: i for i, k in enumerate(keys)}
    rows = [[Fraction(0)] * len(cands) for _ in keys]
    for j, vec in enumerate(columns):
        for k, c in vec.items():
            rows[key_idx[k]][j] = c
    red = mat_reduce(rows, len(cands)) if keys else None
    kernel = red.kernel if red else [[Fraction(1) if t == s else Fraction(0)
                                      for t in range(len(cands))]
                                     for s in range(len(cands))]
    out = []
    for vec in kernel:
        elem = {}
        for c, (y, dd) in zip(vec, cands):
            if c:
                elem[(y, dd)] = c
        out.append(WeylElement(ambient, elem))
    return out


def invariant_symbol_space(ambient, d, verify=True):
    """Row-reduced spanning set of the invariant symbols in bidegree (d,d).

    When verify is set, checks that the span coincides with the kernel of
    the polarized action computed by independent linear algebra; a mismatch
    raises, since it would contradict the structure theory the solvers
    rely on.
    """
    from .linalg import dict_vectors_basis, dict_vectors_rank, solve_in_span
    span = invariant_spanning_set(ambient, d)
    vecs = [t.terms for _, t in span]
    basis_vecs = dict_vectors_basis(vecs)
    basis = [WeylElement(ambient, v) for v in basis_vecs]
    if verify:
        kernel = invariant_kernel(ambient, d)
        if dict_vectors_rank([k.terms for k in kernel]) != len(basis):
            raise AssertionError('invariant span does not match the kernel '
                                 'of the polarized action at degree %d' % d)
        for _, t in span:
            if solve_in_span([k.terms for k in kernel], t.terms) is None:
                raise AssertionError('symbol outside the invariant kernel')
    return basis


# ---------------------------------------------------------------------------
# Highest weight vectors and module bookkeeping.

def mono_weight(ctx, mono):
    """Weight of a y-monomial in the epsilon frame (negative counts)."""
    return tuple(-c for c in ctx.mono_counts(mono))


def highest_weight_vectors(ambient, k, eps_coords):
    """Basis of the space of vectors in the degree-k piece of P(W) of the
    given epsilon-frame weight killed by the simple raising operators."""
    from .linalg import mat_reduce
    ctx = weyl_context(ambient)
    eps = tuple(Fraction(c) for c in eps_coords)
    cands = [mm for mm in monomial_basis(ambient, k)
             if tuple(Fraction(w) for w in mono_weight(ctx, mm)) == eps]
    if not cands:
        return []
    raising = [rho_check_gen(ambient, i, i + 1) for i in range(ambient.dim - 1)]
    columns = []
    for mm in cands:
        vec = {}
        for gi, op in enumerate(raising):
            img = apply_weyl(op, {mm: Fraction(1)})
            for key, c in img.items():
                vec[(gi, key)] = c
        columns.append(vec)
    keys = sorted({kk for vec in columns for kk in vec})
    key_idx = {kk: i for i, kk in enumerate(keys)}
    rows = [[Fraction(0)] * len(cands) for _ in keys]
    for j, vec in enumerate(columns):
        for kk, c in vec.items():
            rows[key_idx[kk]][j] = c
    if keys:
        kernel = mat_reduce(rows, len(cands)).kernel
    else:
        kernel = [[Fraction(1) if t == s else Fraction(0)
                   for t in range(len(cands))] for s in range(len(cands))]
    out = []
    for vec in kernel:
        poly = {mm: c for mm, c in zip(cands, vec) if c}
        out.append(poly)
    return out


def all_highest_weight_vectors(ambient, k):
    """All (weight, basis) pairs with nonzero highest-weight space in the
    degree-k graded piece."""
    ctx = weyl_context(ambient)
    weights = sorted({mono_weight(ctx, mm) for mm in monomial_basis(ambient, k)},
                     reverse=True)
    out = []
    for w in weights:
        basis = highest_weight_vectors(ambient, k, w)
        if basis:
            out.append((w, basis))
    return out


def cyclic_span_dim(ambient, vec):
    """Dimension of the span of a vector under repeated application of the
    lowering operators."""
    from .linalg import dict_vectors_rank
    lowering = [rho_check_gen(ambient, i, j)
                for i in range(ambient.dim) for j in range(ambient.dim) if i > j]
    basis = [vec]
    rank = dict_vectors_rank(basis)
    frontier = [vec]
    while frontier:
        new_frontier = []
        for v in frontier:
            for op in lowering:
                w = apply_weyl(op, v)
                if not w:
                    continue
                r = dict_vectors_rank(basis + [w])
                if r > rank:
                    basis.append(w)
                    rank = r
                    new_frontier.append(w)
        frontier = new_frontier
    return rank


# ---------------------------------------------------------------------------
# Capelli operators.

def eigenvalue_on(op, vec):
    """Scalar by which an invariant operator acts on a vector spanning a
    one-dimensional isotypic slot; asserts proportionality."""
    img = apply_weyl(op, vec)
    if not img:
        return Fraction(0)
    key = next(iter(sorted(vec)))
    if key not in img:
        raise AssertionError('image not proportional to the vector')
    s = img[key] / vec[key]
    for kk, c in vec.items():
        if img.get(kk, 0) != s * c:
            raise AssertionError('image not proportional to the vector')
    for kk in img:
        if kk not in vec:
            raise AssertionError('image not proportional to the vector')
    return s


def capelli_operator(params, b, inv_basis=None):
    """The invariant operator of bidegree (d,d) acting as d! on the module
    indexed by b and as zero on the other modules of the same degree."""
    from math import factorial
    from .hooks import enumerate_hooks, gamma_star_map, eps_extension
    from .linalg import lin_solve
    if params.theta != 'half':
        raise ValueError('capelli operators live in the half regime')
    amb = Ambient(params.m, 2 * params.n)
    d = b.size
    if inv_basis is None:
        inv_basis = invariant_symbol_space(amb, d, verify=False)
    rows = []
    rhs = []
    for bp in enumerate_hooks(params, d):
        mu = gamma_star_map(bp)
        hw = highest_weight_vectors(amb, d, eps_extension(mu))
        if len(hw) != 1:
            raise AssertionError('highest weight space at %s has dimension %d'
                                 % (mu, len(hw)))
        v = hw[0]
        rows.append([eigenvalue_on(t, v) for t in inv_basis])
        rhs.append(Fraction(factorial(d)) if bp == b else Fraction(0))
    res = lin_solve(rows, rhs, len(inv_basis))
    if not res.unique:
        raise AssertionError('capelli operator system is singular')
    out = WeylElement.zero(amb)
    for c, t in zip(res.solution, inv_basis):
        out = out + t.scale(c)
    return out


# ---------------------------------------------------------------------------
# Spherical machinery.

def beta_value(ambient, i, j):
    """The fixed even supersymmetric form: identity on the even block,
    symplectic 2x2 blocks on the odd block."""
    m = ambient.m
    if i < m or j < m:
        return Fraction(1) if i == j else Fraction(0)
    a, bb = i - m, j - m
    if a // 2 == bb // 2:
        if a % 2 == 0 and bb % 2 == 1:
            return Fraction(1)
        if a % 2 == 1 and bb % 2 == 0:
            return Fraction(-1)
    return Fraction(0)


def h_beta_gen(ambient, g):
    """Value of the contraction homomorphism on a canonical x-generator."""
    ctx = weyl_context(ambient)
    i, j = ctx.pairs[g]
    return beta_value(ambient, i, j)


def beta_star(ambient):
    """The distinguished invariant vector of S^2(W)~ used to restrict to
    the even Cartan: -1/4 sum x_{kk} + 1/2 sum x_{(2l-1)b,(2l)b},
    as {x-monomial: coeff}."""
    ctx = weyl_context(ambient)
    m = ambient.m
    out = {}
    for k in range(m):
        out[(ctx.index[(k, k)],)] = Fraction(-1, 4)
    for l in range(ambient.n // 2):
        g = ctx.index[(m + 2 * l, m + 2 * l + 1)]
        out[(g,)] = Fraction(1, 2)
    return out


def spherical_vector(params, b, capelli=None):
    """The invariant vector: contract the x-side of the Capelli operator
    with the form beta.  Returns {y-monomial: coeff}."""
    amb = Ambient(params.m, 2 * params.n)
    if capelli is None:
        capelli = capelli_operator(params, b)
    out = {}
    for (y, dd), c in capelli.terms.items():
        val = c
        for g in dd:
            val *= h_beta_gen(amb, g)
            if not val:
                break
        if val:
            out[y] = out.get(y, 0) + val
    return {k: v for k, v in out.items() if v != 0}


def _iota_a_images(params):
    """Images of the y-generators under restriction to the even Cartan
    followed by the trace-form identification: a substitution map from
    canonical y-generators to linear polynomials in the weight context."""
    from .multipoly import MultiPoly
    from .hooks import a_context
    m, n = params.m, params.n
    amb = Ambient(m, 2 * n)
    ctx = weyl_context(amb)
    avars = a_context(m, n)
    dim_a = m + n
    # basis of the even Cartan: h_k = E_kk, hb_l = E_(2l-1)b,(2l-1)b + E_(2l)b,(2l)b
    h_basis = []
    for k in range(m):
        v = [Fraction(0)] * amb.dim
        v[k] = Fraction(1)
        h_basis.append(v)
    for l in range(n):
        v = [Fraction(0)] * amb.dim
        v[m + 2 * l] = Fraction(1)
        v[m + 2 * l + 1] = Fraction(1)
        h_basis.append(v)
    # iota(h) = rho(h) beta*, computed through the polarized action on S(W)
    bstar = beta_star(amb)
    iota = []
    for v in h_basis:
        img = {}
        for i, coeff in enumerate(v):
            if not coeff:
                continue
            part = rho_gen_action(amb, i, i, bstar)
            for mm, c in part.items():
                img[mm] = img.get(mm, 0) + coeff * c
        iota.append({k: c for k, c in img.items() if c})
    # supertrace Gram matrix of the h basis (diagonal here)
    gram = []
    for v in h_basis:
        g = sum(((-1) ** amb.parity(i)) * c * c for i, c in enumerate(v))
        gram.append(Fraction(g))
    # j sends the i-th dual coordinate to h_i / gram_i; evaluating the
    # y-generator at iota(j(point)) pairs it against each x-generator
    images = {}
    for g in range(len(ctx.pairs)):
        poly = MultiPoly.zero(avars)
        for idx in range(dim_a):
            for mm, c in iota[idx].items():
                if len(mm) == 1 and mm[0] == g:
                    i, j = ctx.pairs[g]
                    pair_val = 2 if i == j else 1
                    coeff = c * pair_val / gram[idx]
                    poly = poly + MultiPoly.variable(avars, avars[idx]).scale(coeff)
        images[g] = poly
    return images


def spherical_poly(params, b, capelli=None):
    """Polynomial on the weight coordinates obtained by restricting the
    spherical vector to the even Cartan."""
    from .multipoly import MultiPoly
    from .hooks import a_context
    vec = spherical_vector(params, b, capelli=capelli)
    images = _iota_a_images(params)
    avars = a_context(params.m, params.n)
    out = MultiPoly.zero(avars)
    for mono, c in vec.items():
        term = MultiPoly.const(avars, c)
        for g in mono:
            term = term * images[g]
            if term.is_zero():
                break
        out = out + term
    return out


def osp_spanning_set(params):
    """Spanning set of the fixed orthosymplectic subalgebra inside the
    ambient gl(m|2n), as degree-1 enveloping algebra elements."""
    m, n = params.m, params.n
    amb = Ambient(m, 2 * n)

    def E(i, j):
        return UEAElement.gen(amb, i, j)

    out = []
    for k in range(m):
        for l in range(m):
            if k != l:
                out.append(E(k, l) - E(l, k))
    for k in range(n):
        for l in range(n):
            a1, a2 = m + 2 * l, m + 2 * l + 1      # (2l-1)b, (2l)b
            b1, b2 = m + 2 * k, m + 2 * k + 1
            out.append(E(a1, b1) - E(b2, a2))
            out.append(E(a1, b2) + E(b1, a2))
            out.append(E(a2, b1) + E(b2, a1))
    for k in range(m):
        for l in range(n):
            o1, o2 = m + 2 * l, m + 2 * l + 1
            out.append(E(k, o1) + E(o2, k))
            out.append(E(k, o2) - E(o1, k))
    return out


def symbol(a, d):
    """The order-d symbol: the part of pure derivative degree d.  Errors
    when the operator has order above d."""
    if a.order() > d:
        raise ValueError('operator order exceeds %d' % d)
    return a.ddeg_part(d)
