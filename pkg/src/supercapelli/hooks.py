"""Hook partitions, weight maps, hook products and Frobenius coordinates.

Two parameter regimes are supported.  In the "half" regime the relevant
symmetric pair lives inside gl(m|2n) and weights are written in the gamma
basis of the even Cartan subalgebra a.  In the "one" regime the natural
home is gl(m|n) itself and weights are written in the epsilon basis.
"""

from fractions import Fraction

from .multipoly import AffineSubstitution


class HookParams:

    __slots__ = ('m', 'n', 'theta')

    def __init__(self, m, n, theta='half'):
        if m < 0 or n < 0:
            raise ValueError('m, n must be nonnegative')
        if theta not in ('half', 'one'):
            raise ValueError("theta must be 'half' or 'one'")
        self.m = m
        self.n = n
        self.theta = theta

    @property
    def odd_dim(self):
        """Odd dimension of the ambient superspace."""
        return 2 * self.n if self.theta == 'half' else self.n

    def __eq__(self, other):
        return (isinstance(other, HookParams)
                and (self.m, self.n, self.theta) == (other.m, other.n, other.theta))

    def __hash__(self):
        return hash((self.m, self.n, self.theta))

    def __repr__(self):
        return 'HookParams(%d, %d, %r)' % (self.m, self.n, self.theta)


def transpose_parts(parts):
    parts = tuple(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= k) for k in range(1, parts[0] + 1))


class HookPartition:
    """A partition constrained to the (m|n) hook: parts beyond row m are
    at most n."""

    __slots__ = ('parts', 'params')

    def __init__(self, parts, params):
        parts = tuple(int(p) for p in parts if p)
        if any(p < 0 for p in parts):
            raise ValueError('parts must be positive')
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError('parts must be nonincreasing')
        if len(parts) > params.m and parts[params.m] > params.n:
            raise ValueError('not an (m|n)-hook partition: row %d has %d > %d'
                             % (params.m + 1, parts[params.m], params.n))
        self.parts = parts
        self.params = params

    @property
    def size(self):
        return sum(self.parts)

    def transpose(self):
        return transpose_parts(self.parts)

    def part(self, k):
        """Row length, 1-based, zero beyond the last row."""
        return self.parts[k - 1] if 1 <= k <= len(self.parts) else 0

    def star_parts(self):
        """The sequence b*_l = max(b'_l - m, 0) for l = 1..n."""
        t = self.transpose()
        m, n = self.params.m, self.params.n
        return tuple(max((t[l - 1] if l <= len(t) else 0) - m, 0)
                     for l in range(1, n + 1))

    def __eq__(self, other):
        return (isinstance(other, HookPartition)
                and self.parts == other.parts and self.params == other.params)

    def __hash__(self):
        return hash((self.parts, self.params))

    def __repr__(self):
        return 'HookPartition(%r)' % (self.parts,)

    def __str__(self):
        return ','.join(str(p) for p in self.parts) if self.parts else '()'


def parse_partition(text, params):
    text = text.strip()
    if text in ('', '()', '0'):
        return HookPartition((), params)
    return HookPartition([int(p) for p in text.split(',')], params)


def enumerate_hooks(params, d, upto=False):
    """All (m|n)-hook partitions of size d (or of size <= d when upto),
    graded then reverse-lexicographic within each size."""
    sizes = range(d + 1) if upto else (d,)
    out = []
    for size in sizes:
        batch = []

        def rec(remaining, maxpart, prefix):
            if remaining == 0:
                batch.append(tuple(prefix))
                return
            for p in range(min(remaining, maxpart), 0, -1):
                if len(prefix) >= params.m and p > params.n:
                    continue
                prefix.append(p)
                rec(remaining - p, p, prefix)
                prefix.pop()

        rec(size, size if size else 1, [])
        batch.sort(reverse=True)
        out.extend(HookPartition(b, params) for b in batch)
    return out


class Weight:
    """A weight with an explicit frame tag and even/odd coordinate blocks."""

    __slots__ = ('frame', 'coords', 'm', 'n')

    FRAMES = ('a_star_gamma', 'h_star_eps')

    def __init__(self, frame, coords, m, n):
        if frame not in Weight.FRAMES:
            raise ValueError('unknown frame %r' % (frame,))
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != m + n:
            raise ValueError('coordinate length does not match blocks')
        self.frame = frame
        self.coords = coords
        self.m = m
        self.n = n

    @property
    def even(self):
        return self.coords[:self.m]

    @property
    def odd(self):
        return self.coords[self.m:]

    def __eq__(self, other):
        return (isinstance(other, Weight) and self.frame == other.frame
                and self.coords == other.coords
                and (self.m, self.n) == (other.m, other.n))

    def __hash__(self):
        return hash((self.frame, self.coords, self.m, self.n))

    def __str__(self):
        ev = ','.join(str(c) for c in self.even)
        od = ','.join(str(c) for c in self.odd)
        return '(%s ; %s)' % (ev, od)

    __repr__ = __str__


def gamma_map(b):
    """Highest weight of the module indexed by b in the polynomial model."""
    params = b.params
    m, n = params.m, params.n
    star = b.star_parts()
    if params.theta == 'half':
        coords = [2 * b.part(k) for k in range(1, m + 1)]
        coords += [2 * s for s in star]
        return Weight('a_star_gamma', coords, m, n)
    coords = [b.part(k) for k in range(1, m + 1)]
    coords += list(star)
    return Weight('h_star_eps', coords, m, n)


def gamma_star_map(b):
    """Highest weight of the degree-|b| summand of the polynomial space,
    half regime only."""
    params = b.params
    if params.theta != 'half':
        raise ValueError('gamma_star_map is defined in the half regime only')
    m, n = params.m, params.n
    t = b.transpose()
    coords = [-2 * max(b.part(m + 1 - i) - n, 0) for i in range(1, m + 1)]
    coords += [-2 * (t[n - j] if n - j < len(t) else 0) for j in range(1, n + 1)]
    return Weight('a_star_gamma', coords, m, n)


def dual_weight(mu, params, cap=64):
    """The weight mu* with V_mu^* isomorphic to V_{mu*}; found by inverting
    gamma_star_map over partition sizes up to cap."""
    for d in range(cap + 1):
        for b in enumerate_hooks(params, d):
            if gamma_star_map(b) == mu:
                return gamma_map(b)
    raise ValueError('weight %s is not in the image of gamma_star_map '
                     '(searched sizes 0..%d)' % (mu, cap))


def hook_partition_of_weight(mu, params, cap=64, star=True):
    """Invert gamma_star_map (star=True) or gamma_map by bounded search."""
    f = gamma_star_map if star else gamma_map
    for d in range(cap + 1):
        for b in enumerate_hooks(params, d):
            if f(b) == mu:
                return b
    raise ValueError('weight %s not found (searched sizes 0..%d)' % (mu, cap))


def hook_product_H(b):
    """Theta-deformed hook product, one factor per box."""
    t = b.transpose()
    total = Fraction(1)
    for k, row in enumerate(b.parts, start=1):
        for l in range(1, row + 1):
            total *= row - l + 1 + Fraction(t[l - 1] - k, 2)
    return total


def classical_hook_product(b):
    t = b.transpose()
    total = 1
    for k, row in enumerate(b.parts, start=1):
        for l in range(1, row + 1):
            total *= row - l + t[l - 1] - k + 1
    return total


class FrobeniusPoint:

    __slots__ = ('x', 'y')

    def __init__(self, x, y):
        self.x = tuple(Fraction(v) for v in x)
        self.y = tuple(Fraction(v) for v in y)

    def coords(self):
        return self.x + self.y

    def __eq__(self, other):
        return (isinstance(other, FrobeniusPoint)
                and self.x == other.x and self.y == other.y)

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return 'FrobeniusPoint(%s, %s)' % (self.x, self.y)


def frobenius_point(b):
    params = b.params
    m, n = params.m, params.n
    star = b.star_parts()
    if params.theta == 'half':
        x = [b.part(k) - Fraction(2 * k - 1, 4) - Fraction(4 * n - m, 4)
             for k in range(1, m + 1)]
        y = [star[l - 1] - (2 * l - 1) + Fraction(4 * n + m, 2)
             for l in range(1, n + 1)]
    else:
        x = [b.part(k) - k + Fraction(1 - n + m, 2) for k in range(1, m + 1)]
        y = [star[l - 1] - l + Fraction(m + n + 1, 2) for l in range(1, n + 1)]
    return FrobeniusPoint(x, y)


def a_context(m, n):
    """Variable names for the gamma-basis dual coordinates."""
    return tuple('a%d' % k for k in range(1, m + 1)) + \
        tuple('ab%d' % l for l in range(1, n + 1))


def eps_context(m, n):
    return tuple('e%d' % k for k in range(1, m + 1)) + \
        tuple('eb%d' % l for l in range(1, n + 1))


def xy_context(m, n):
    return tuple('x%d' % k for k in range(1, m + 1)) + \
        tuple('y%d' % l for l in range(1, n + 1))


def frobenius_affine_map(params):
    """The affine map Psi with Psi(frobenius_point(b)) = gamma_map(b) for
    every hook partition b; source is the weight context, target the
    Frobenius (x, y) context."""
    m, n = params.m, params.n
    target = xy_context(m, n)
    images = {}
    if params.theta == 'half':
        source = a_context(m, n)
        for k in range(1, m + 1):
            lin = [Fraction(0)] * (m + n)
            lin[k - 1] = Fraction(2)
            images[source[k - 1]] = (lin, Fraction(2 * k - 1, 2)
                                     + 2 * n - Fraction(m, 2))
        for l in range(1, n + 1):
            lin = [Fraction(0)] * (m + n)
            lin[m + l - 1] = Fraction(2)
            images[source[m + l - 1]] = (lin, 4 * l - 2 - (4 * n + m))
    else:
        source = eps_context(m, n)
        for k in range(1, m + 1):
            lin = [Fraction(0)] * (m + n)
            lin[k - 1] = Fraction(1)
            images[source[k - 1]] = (lin, k - Fraction(1 - n + m, 2))
        for l in range(1, n + 1):
            lin = [Fraction(0)] * (m + n)
            lin[m + l - 1] = Fraction(1)
            images[source[m + l - 1]] = (lin, l - Fraction(m + n + 1, 2))
    return AffineSubstitution(source, target, images)


def eps_extension(w):
    """Extend a gamma-frame weight on a to the full Cartan of gl(m|2n),
    trivially on the complement: each odd coordinate splits into an equal
    pair of halves."""
    if w.frame != 'a_star_gamma':
        raise ValueError('eps_extension expects a gamma-frame weight')
    coords = list(w.even)
    for c in w.odd:
        coords += [c / 2, c / 2]
    return tuple(coords)
