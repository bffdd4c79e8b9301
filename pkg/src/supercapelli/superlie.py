"""The general linear Lie superalgebra, its enveloping algebra, normal
ordering, central Gelfand elements and Harish-Chandra projections.

Basis indices for gl(m|N) are integers 0..m+N-1: the first m are even,
the rest odd.  Printed labels are 1..m for the even block and 1b..Nb for
the odd block.  A generator is a pair (i, j) standing for the elementary
matrix E_{ij}; words in the enveloping algebra are tuples of such pairs.

Structure constants:
    [E_ij, E_kl] = d_jk E_il - (-1)^((|i|+|j|)(|k|+|l|)) d_li E_kj
with the bracket understood as the supercommutator.
"""

from fractions import Fraction

from .multipoly import MultiPoly


class Ambient:
    """Fixed (m, N): N is the odd dimension of the natural module."""

    __slots__ = ('m', 'n')

    def __init__(self, m, n):
        if m < 0 or n < 0:
            raise ValueError('dimensions must be nonnegative')
        self.m = m
        self.n = n

    @property
    def dim(self):
        return self.m + self.n

    def parity(self, i):
        return 0 if i < self.m else 1

    def gen_parity(self, g):
        return (self.parity(g[0]) + self.parity(g[1])) % 2

    def label(self, i):
        return str(i + 1) if i < self.m else '%db' % (i - self.m + 1)

    def parse_label(self, s):
        s = s.strip()
        if s.endswith('b'):
            i = self.m + int(s[:-1]) - 1
        else:
            i = int(s) - 1
        if not 0 <= i < self.dim:
            raise ValueError('index %r out of range' % (s,))
        return i

    def cartan_context(self):
        return tuple('E(%s,%s)' % (self.label(i), self.label(i))
                     for i in range(self.dim))

    def __eq__(self, other):
        return isinstance(other, Ambient) and (self.m, self.n) == (other.m, other.n)

    def __hash__(self):
        return hash((self.m, self.n))

    def __repr__(self):
        return 'Ambient(%d|%d)' % (self.m, self.n)


class UEAElement:
    """Rational combination of words in the generators E_{ij}."""

    __slots__ = ('ambient', 'terms')

    def __init__(self, ambient, terms=None):
        self.ambient = ambient
        self.terms = {w: Fraction(c) for w, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, ambient):
        return cls(ambient)

    @classmethod
    def one(cls, ambient):
        return cls(ambient, {(): Fraction(1)})

    @classmethod
    def gen(cls, ambient, i, j):
        return cls(ambient, {((i, j),): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def order(self):
        """Filtration degree: maximal word length."""
        return max((len(w) for w in self.terms), default=0)

    def _check(self, other):
        if self.ambient != other.ambient:
            raise ValueError('ambient mismatch')

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return UEAElement(self.ambient, terms)

    def __neg__(self):
        return UEAElement(self.ambient, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return UEAElement(self.ambient, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, UEAElement):
            return self.scale(other)
        self._check(other)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                terms[w] = terms.get(w, 0) + c1 * c2
        return UEAElement(self.ambient, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return (isinstance(other, UEAElement) and self.ambient == other.ambient
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self):
        if not self.terms:
            return '0'
        amb = self.ambient
        parts = []
        for w, c in self.sorted_terms():
            word = ''.join('E(%s,%s)' % (amb.label(i), amb.label(j)) for i, j in w)
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
        amb = self.ambient
        return {
            'm': amb.m, 'n': amb.n,
            'terms': [{'word': [[amb.label(i), amb.label(j)] for i, j in w],
                       'coef': str(c)}
                      for w, c in self.sorted_terms()],
        }


def bracket_gen(ambient, g1, g2):
    """Supercommutator [E_g1, E_g2] as a degree <= 1 element."""
    i, j = g1
    k, l = g2
    terms = {}
    if j == k:
        terms[((i, l),)] = terms.get(((i, l),), 0) + 1
    if l == i:
        sgn = (-1) ** (ambient.gen_parity(g1) * ambient.gen_parity(g2))
        terms[((k, j),)] = terms.get(((k, j),), 0) - sgn
    return UEAElement(ambient, terms)


def bracket(a, b):
    """Supercommutator of two degree-1 elements (extended bilinearly)."""
    a._check(b)
    out = UEAElement.zero(a.ambient)
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            if len(w1) != 1 or len(w2) != 1:
                raise ValueError('bracket expects degree-1 elements')
            out = out + bracket_gen(a.ambient, w1[0], w2[0]).scale(c1 * c2)
    return out


def _gen_key(ambient, g, mirrored):
    i, j = g
    if i > j:
        block = 2 if mirrored else 0     # lowering
    elif i == j:
        block = 1
    else:
        block = 0 if mirrored else 2     # raising
    return (block, i, j)


def pbw_normalize(a, mirrored=False):
    """Rewrite every word into normal order.

    The generator order is: lowering letters, then diagonal, then raising
    (mirrored swaps the off-diagonal blocks), each block ordered by
    (row, column).  Repeated equal odd letters contract via x*x = [x,x]/2.
    The frontier is kept as a map so duplicate intermediate words merge.
    """
    amb = a.ambient
    done = {}
    frontier = dict(a.terms)
    while frontier:
        word, coeff = frontier.popitem()
        if coeff == 0:
            continue
        pos = -1
        for t in range(len(word) - 1):
            g1, g2 = word[t], word[t + 1]
            if _gen_key(amb, g1, mirrored) > _gen_key(amb, g2, mirrored) or \
                    (g1 == g2 and amb.gen_parity(g1)):
                pos = t
                break
        if pos < 0:
            done[word] = done.get(word, 0) + coeff
            continue
        g1, g2 = word[pos], word[pos + 1]
        head, tail = word[:pos], word[pos + 2:]
        br = bracket_gen(amb, g1, g2)
        if g1 == g2:
            # odd square: x^2 = [x,x]/2
            for w, c in br.terms.items():
                nw = head + w + tail
                frontier[nw] = frontier.get(nw, 0) + coeff * c / 2
        else:
            sgn = (-1) ** (amb.gen_parity(g1) * amb.gen_parity(g2))
            nw = head + (g2, g1) + tail
            frontier[nw] = frontier.get(nw, 0) + sgn * coeff
            for w, c in br.terms.items():
                nw = head + w + tail
                frontier[nw] = frontier.get(nw, 0) + coeff * c
    return UEAElement(amb, done)


def gelfand_element(ambient, d):
    """Supertrace of the d-th power of the twisted generator matrix; a
    central element of the enveloping algebra for every d >= 1."""
    if d < 1:
        raise ValueError('d must be >= 1')
    key = (ambient.m, ambient.n, d)
    cached = _gelfand_cache.get(key)
    if cached is not None:
        return cached
    amb = ambient
    terms = {}
    idx = range(amb.dim)

    def rec(cycle):
        # cycle: index path i, r1, ..., rt
        if len(cycle) == d:
            path = cycle + (cycle[0],)
            sgn = amb.parity(cycle[0])
            word = []
            for a, b in zip(path, path[1:]):
                # twisted entry at (a, b) is (-1)^{|a||b|} E_{b,a}
                sgn += amb.parity(a) * amb.parity(b)
                word.append((b, a))
            word = tuple(word)
            terms[word] = terms.get(word, 0) + (-1) ** sgn
            return
        for r in idx:
            rec(cycle + (r,))

    for i in idx:
        rec((i,))
    out = UEAElement(amb, terms)
    _gelfand_cache[key] = out
    return out


_gelfand_cache = {}


def omega(a):
    """The antiautomorphism with omega(x) = -x on the superalgebra and
    omega(xy) = (-1)^{|x||y|} omega(y) omega(x)."""
    amb = a.ambient
    terms = {}
    for w, c in a.terms.items():
        ps = [amb.gen_parity(g) for g in w]
        cross = 0
        for r in range(len(ps)):
            for s in range(r + 1, len(ps)):
                cross += ps[r] * ps[s]
        sgn = (-1) ** (len(w) + cross)
        nw = tuple(reversed(w))
        terms[nw] = terms.get(nw, 0) + sgn * c
    return UEAElement(amb, terms)


def hc_project(a, sign='plus'):
    """Harish-Chandra projection onto the Cartan polynomial algebra.

    Normal order (mirrored for the minus variant), keep the purely
    diagonal words, and read them as a commutative polynomial in the
    diagonal generators.
    """
    amb = a.ambient
    normal = pbw_normalize(a, mirrored=(sign == 'minus'))
    ctx = amb.cartan_context()
    poly = MultiPoly.zero(ctx)
    terms = {}
    for w, c in normal.terms.items():
        if any(i != j for i, j in w):
            continue
        exp = [0] * amb.dim
        for i, _ in w:
            exp[i] += 1
        exp = tuple(exp)
        terms[exp] = terms.get(exp, 0) + c
    return poly + MultiPoly(ctx, terms)


def omega_cartan(p):
    """The antiautomorphism on a Cartan polynomial: each variable is
    negated (words reverse trivially there)."""
    terms = {}
    for e, c in p.terms.items():
        terms[e] = terms.get(e, 0) + c * (-1) ** sum(e)
    return MultiPoly(p.vars, terms)


def q_context(m, n):
    return tuple('h%d' % k for k in range(1, m + 1)) + \
        tuple('hb%d' % l for l in range(1, n + 1))


def q_projection(c, ambient):
    """Restrict a Cartan polynomial of gl(m|2n) to the even Cartan of the
    symmetric pair: E_kk -> h_k and both odd diagonal entries of the l-th
    pair -> hb_l / 2."""
    m, nn = ambient.m, ambient.n
    if nn % 2:
        raise ValueError('odd dimension must be even for the q projection')
    n = nn // 2
    ctx = q_context(m, n)
    terms = {}
    for e, coef in c.terms.items():
        exp = list(e[:m])
        odd_total = 0
        for l in range(n):
            pair = e[m + 2 * l] + e[m + 2 * l + 1]
            exp.append(pair)
            odd_total += pair
        exp = tuple(exp)
        coef = coef * Fraction(1, 2 ** odd_total)
        terms[exp] = terms.get(exp, 0) + coef
    return MultiPoly(ctx, terms)


def gd_element(ambient, d):
    """The shifted power-sum generator of the image of the center under
    the plus projection, for the gl(m|2n) pair."""
    m, nn = ambient.m, ambient.n
    if nn % 2:
        raise ValueError('ambient odd dimension must be even')
    n = nn // 2
    ctx = ambient.cartan_context()
    out = MultiPoly.zero(ctx)
    for k in range(1, m + 1):
        shift = Fraction(m + 1, 2) - n - k
        base = MultiPoly.variable(ctx, ctx[k - 1]) + MultiPoly.const(ctx, shift)
        out = out + base ** d
    for l in range(1, nn + 1):
        shift = Fraction(m + 1, 2) + n - l
        base = MultiPoly.variable(ctx, ctx[m + l - 1]) + MultiPoly.const(ctx, shift)
        out = out + (base ** d).scale((-1) ** (d - 1))
    return out
