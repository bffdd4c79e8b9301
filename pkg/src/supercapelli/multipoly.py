"""Sparse exact-rational multivariate polynomials.

A MultiPoly is a finite map from exponent tuples to nonzero Fractions,
over an explicit ordered variable context.  Contexts are plain tuples of
names and are never implicit: the library mixes several coordinate systems
and silently identifying them is the main bug risk.

Terms are kept in canonical form (no zero coefficients) and rendered in
graded lexicographic order so that printing and JSON output are
deterministic.
"""

from fractions import Fraction


def _clean(terms):
    return {e: c for e, c in terms.items() if c != 0}


def grlex_key(exp):
    """Sort key for graded-lex order, largest term first when reversed."""
    return (sum(exp), exp)


class MultiPoly:

    __slots__ = ('vars', 'terms')

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        terms = terms or {}
        for e in terms:
            if len(e) != len(self.vars):
                raise ValueError('exponent length does not match context')
        self.terms = _clean({tuple(e): Fraction(c) for e, c in terms.items()})

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def const(cls, vars, c):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): Fraction(c)})

    @classmethod
    def variable(cls, vars, name):
        vars = tuple(vars)
        i = vars.index(name)
        exp = tuple(1 if k == i else 0 for k in range(len(vars)))
        return cls(vars, {exp: Fraction(1)})

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def _check_context(self, other):
        if self.vars != other.vars:
            raise ValueError('context mismatch: %r vs %r' % (self.vars, other.vars))

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.vars, other)
        self._check_context(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.vars, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check_context(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = Fraction(c)
        return MultiPoly(self.vars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k):
        if not (isinstance(k, int) and k >= 0):
            raise ValueError('exponent must be a nonnegative integer')
        result = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def evaluate(self, point):
        """Exact value at a point (sequence of Fractions, one per variable)."""
        point = [Fraction(p) for p in point]
        if len(point) != len(self.vars):
            raise ValueError('point length does not match context')
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for p, k in zip(point, e):
                if k:
                    v *= p ** k
            total += v
        return total

    def top_part(self):
        """Homogeneous part of highest total degree."""
        if not self.terms:
            raise ValueError('zero polynomial has no top part')
        d = self.degree()
        return MultiPoly(self.vars, {e: c for e, c in self.terms.items()
                                     if sum(e) == d})

    def homogeneous_part(self, d):
        return MultiPoly(self.vars, {e: c for e, c in self.terms.items()
                                     if sum(e) == d})

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]),
                      reverse=True)

    def rename(self, new_vars):
        """Same terms over a different (equal-length) context."""
        new_vars = tuple(new_vars)
        if len(new_vars) != len(self.vars):
            raise ValueError('context length mismatch')
        return MultiPoly(new_vars, dict(self.terms))

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(self.vars, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append('%s^%d' % (name, k))
            mono = '*'.join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append('-' + mono)
            else:
                parts.append('%s*%s' % (c, mono))
        out = parts[0]
        for p in parts[1:]:
            out += ' - ' + p[1:] if p.startswith('-') else ' + ' + p
        return out

    __repr__ = __str__

    def to_json(self):
        return {
            'vars': list(self.vars),
            'terms': [{'exp': list(e), 'coef': str(c)}
                      for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data):
        vars = tuple(data['vars'])
        terms = {}
        for t in data['terms']:
            e = tuple(int(k) for k in t['exp'])
            terms[e] = terms.get(e, 0) + Fraction(t['coef'])
        return cls(vars, terms)


class AffineSubstitution:
    """An affine map sending each source variable to an affine form over
    the target context.  Composition with a polynomial substitutes every
    variable and expands exactly."""

    __slots__ = ('source', 'target', 'images')

    def __init__(self, source, target, images):
        """images: map source variable name -> (linear coeffs tuple, constant)."""
        self.source = tuple(source)
        self.target = tuple(target)
        self.images = {}
        for name in self.source:
            lin, const = images[name]
            lin = tuple(Fraction(c) for c in lin)
            if len(lin) != len(self.target):
                raise ValueError('linear part length does not match target')
            self.images[name] = (lin, Fraction(const))

    def image_poly(self, name):
        lin, const = self.images[name]
        p = MultiPoly.const(self.target, const)
        for coeff, var in zip(lin, self.target):
            if coeff:
                p = p + MultiPoly.variable(self.target, var).scale(coeff)
        return p

    def apply(self, p):
        if p.vars != self.source:
            raise ValueError('polynomial context does not match substitution source')
        images = [self.image_poly(name) for name in self.source]
        # cache powers of the (few) variable images
        powers = [[MultiPoly.const(self.target, 1)] for _ in images]
        result = MultiPoly.zero(self.target)
        for e, c in p.terms.items():
            term = MultiPoly.const(self.target, c)
            for i, k in enumerate(e):
                while len(powers[i]) <= k:
                    powers[i].append(powers[i][-1] * images[i])
                if k:
                    term = term * powers[i][k]
            result = result + term
        return result

    def linear_matrix(self):
        """Rows of the linear part, one per source variable."""
        return [list(self.images[name][0]) for name in self.source]
