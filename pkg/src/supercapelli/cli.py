"""Command-line front end: tables, polynomial export and verification
suites.

Every verification suite is a thin driver: it only calls library
operations and compares results for exact equality.  Exit codes: 0 on
success, 1 when a verification case fails, 2 on invalid input.
"""

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from itertools import permutations
from math import factorial

from .cache import default_cache
from .hooks import (HookParams, enumerate_hooks, parse_partition, gamma_map,
                    gamma_star_map, dual_weight, frobenius_point, a_context,
                    xy_context)
from .multipoly import MultiPoly
from .superlie import (Ambient, UEAElement, gelfand_element, pbw_normalize,
                       hc_project, omega, omega_cartan)
from .weyl import (WeylElement, t_sigma, rho_check, symbol,
                   consecutive_cycles_perm, capelli_operator,
                   highest_weight_vectors, all_highest_weight_vectors,
                   cyclic_span_dim, eigenvalue_on, monomial_basis,
                   spherical_vector, spherical_poly, osp_spanning_set,
                   apply_weyl)
from .hooks import eps_extension
from .solver import (symbol_preimage, full_preimage, central_preimage,
                     c_poly_hc, c_poly_interp, c_star_poly, sp_star,
                     verify_main, verify_sv, theta_one_family,
                     natural_algebra_check)

THETA = {'1/2': 'half', 'half': 'half', '1': 'one', 'one': 'one'}


def _params(args):
    theta = THETA.get(getattr(args, 'theta', '1/2') or '1/2')
    if theta is None:
        raise ValueError('theta must be 1/2 or 1')
    return HookParams(args.m, args.n, theta)


def _partition(args, params):
    if args.partition is None:
        raise ValueError('--partition is required')
    return parse_partition(args.partition, params)


def _sigma(args):
    if args.sigma is None:
        raise ValueError('--sigma is required')
    sigma = tuple(int(p) for p in args.sigma.split(','))
    if len(sigma) % 2 or sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError('sigma must be a permutation of 1..2d '
                         'as a comma-separated image tuple')
    return sigma


def _cached_weyl(args, key_parts, compute):
    cache = default_cache(args.cache_dir)
    if cache is not None and not args.no_cache:
        payload = cache.load(key_parts)
        if payload is not None:
            return WeylElement.from_json(payload)
    result = compute()
    if cache is not None and not args.no_cache:
        cache.store(key_parts, result.to_json())
    return result


def _capelli(args, params, b):
    key = ('capelli-op', params.m, params.n, params.theta, list(b.parts))
    return _cached_weyl(args, key, lambda: capelli_operator(params, b))


# ---------------------------------------------------------------------------
# Subcommands.  Each handler returns (payload, text, exit_code).

def cmd_hooks(args):
    params = _params(args)
    hooks = enumerate_hooks(params, args.size, upto=args.upto)
    names = [str(b) for b in hooks]
    payload = {'m': args.m, 'n': args.n, 'size': args.size,
               'upto': bool(args.upto), 'partitions': names}
    return payload, '\n'.join(names), 0


def _weight_payload(w):
    return {'frame': w.frame, 'coords': [str(c) for c in w.coords]}


def cmd_gamma(args):
    params = _params(args)
    w = gamma_map(_partition(args, params))
    return ({'partition': args.partition, **_weight_payload(w)}, str(w), 0)


def cmd_gamma_star(args):
    params = _params(args)
    w = gamma_star_map(_partition(args, params))
    return ({'partition': args.partition, **_weight_payload(w)}, str(w), 0)


def cmd_frobenius(args):
    params = _params(args)
    pt = frobenius_point(_partition(args, params))
    payload = {'partition': args.partition,
               'x': [str(c) for c in pt.x], 'y': [str(c) for c in pt.y]}
    text = 'x = (%s) ; y = (%s)' % (', '.join(str(c) for c in pt.x),
                                    ', '.join(str(c) for c in pt.y))
    return payload, text, 0


def cmd_gelfand(args):
    z = gelfand_element(Ambient(args.m, args.n), args.dmax)
    return z.to_json(), str(z), 0


def cmd_hc(args):
    z = gelfand_element(Ambient(args.m, args.n), args.dmax)
    poly = hc_project(z, args.sign)
    return poly.to_json(), str(poly), 0


def cmd_t_sigma(args):
    t = t_sigma(Ambient(args.m, args.n), _sigma(args))
    return t.to_json(), str(t), 0


def cmd_capelli_op(args):
    params = _params(args)
    if params.theta != 'half':
        raise ValueError('capelli-op requires theta = 1/2')
    D = _capelli(args, params, _partition(args, params))
    return D.to_json(), str(D), 0


def cmd_capelli_preimage(args):
    params = _params(args)
    if params.theta != 'half':
        raise ValueError('capelli-preimage requires theta = 1/2')
    D = _capelli(args, params, _partition(args, params))
    z = full_preimage(D, check_invariant=False)
    return z.to_json(), str(z), 0


def cmd_c_poly(args):
    params = _params(args)
    b = _partition(args, params)
    method = args.method or 'hc'
    if method == 'hc':
        poly = c_poly_hc(params, b).poly
    elif method == 'interp':
        poly = c_poly_interp(params, b).poly
    elif method == 'dual':
        poly = c_star_poly(params, b).poly
    else:
        raise ValueError("method must be 'hc', 'interp' or 'dual'")
    payload = poly.to_json()
    payload['partition'] = args.partition
    payload['method'] = method
    return payload, str(poly), 0


def cmd_d_poly(args):
    params = _params(args)
    b = _partition(args, params)
    poly = spherical_poly(params, b, capelli=_capelli(args, params, b))
    payload = poly.to_json()
    payload['partition'] = args.partition
    return payload, str(poly), 0


def cmd_sp_star(args):
    params = _params(args)
    poly = sp_star(params, _partition(args, params))
    payload = poly.to_json()
    payload['partition'] = args.partition
    payload['theta'] = args.theta or '1/2'
    return payload, str(poly), 0


# ---------------------------------------------------------------------------
# Verification suites (one per theorem-level identity, plus 'all').

def _ambients(args, default):
    if args.m is not None and args.n is not None:
        return [(args.m, args.n)]
    return default


def _pairs(args, default):
    """(superpair (m,n), lambda-degree bound) configurations."""
    if args.m is not None and args.n is not None:
        return [((args.m, args.n), default[0][1])]
    return default


def suite_centrality(args):
    cases = []
    dmax = args.dmax or 4
    for m, n in _ambients(args, [(1, 1), (1, 2), (2, 1), (2, 2)]):
        amb = Ambient(m, n)
        for d in range(1, dmax + 1):
            z = gelfand_element(amb, d)
            bad = []
            for i in range(amb.dim):
                for j in range(amb.dim):
                    g = UEAElement.gen(amb, i, j)
                    if not pbw_normalize(z * g - g * z).is_zero():
                        bad.append('E(%s,%s)' % (amb.label(i), amb.label(j)))
            cases.append(('gl(%d|%d) d=%d' % (m, n, d), not bad,
                          'noncommuting: %s' % bad if bad else ''))
    return cases


def suite_symbol_identity(args):
    cases = []
    dmax = args.dmax or 3
    for m, n in _ambients(args, [(1, 1), (2, 1)]):
        amb = Ambient(m, n)
        for d in range(1, dmax + 1):
            lhs = symbol(rho_check(gelfand_element(amb, d)), d)
            rhs = t_sigma(amb, consecutive_cycles_perm((d,))).scale((-2) ** d)
            cases.append(('gl(%d|%d) d=%d' % (m, n, d), lhs == rhs, ''))
    return cases


def suite_abstract_capelli(args):
    cases = []
    for m, n in _ambients(args, [(1, 2), (2, 2)]):
        amb = Ambient(m, n)
        bad = []
        for sig in permutations(range(1, 5)):
            z = symbol_preimage(amb, sig)
            if symbol(rho_check(z), 2) != t_sigma(amb, sig):
                bad.append(sig)
        cases.append(('gl(%d|%d) all sigma in S4' % (m, n), not bad,
                      'failing sigma: %s' % bad if bad else ''))
        rng = random.Random(0)
        sample = rng.sample(list(permutations(range(1, 7))), 20)
        bad = []
        for sig in sample:
            z = symbol_preimage(amb, sig)
            if symbol(rho_check(z), 3) != t_sigma(amb, sig):
                bad.append(sig)
        cases.append(('gl(%d|%d) 20 random sigma in S6' % (m, n), not bad,
                      'failing sigma: %s' % bad if bad else ''))
        params = HookParams(m, n // 2, 'half')
        for b in enumerate_hooks(params, 2, upto=True):
            D = capelli_operator(params, b)
            z = full_preimage(D, check_invariant=False)
            cases.append(('gl(%d|%d) preimage roundtrip %s' % (m, n, b),
                          rho_check(z) == D, ''))
    return cases


_EIGEN_CONFIGS = [((1, 1), 3, 4), ((2, 1), 2, 3)]


def suite_eigenvalue_coherence(args):
    cases = []
    for (m, n), lmax, mumax in _EIGEN_CONFIGS:
        if args.m is not None and (m, n) != (args.m, args.n):
            continue
        params = HookParams(m, n, 'half')
        amb = Ambient(m, 2 * n)
        for b in enumerate_hooks(params, lmax, upto=True):
            if not b.size:
                continue
            D = capelli_operator(params, b)
            z = central_preimage(params, b, capelli=D)
            ch = c_poly_hc(params, b, preimage=z)
            ci = c_poly_interp(params, b)
            cases.append(('(%d,%d) routes agree %s' % (m, n, b),
                          ch.poly == ci.poly, ''))
            bad = []
            for mu in enumerate_hooks(params, mumax, upto=True):
                w = gamma_star_map(mu)
                hw = highest_weight_vectors(amb, mu.size, eps_extension(w))
                if len(hw) != 1 or \
                        eigenvalue_on(D, hw[0]) != ch.value(w):
                    bad.append(str(mu))
            cases.append(('(%d,%d) spectrum of D_%s' % (m, n, b), not bad,
                          'mismatch at mu: %s' % bad if bad else ''))
    return cases


def suite_vanishing(args):
    cases = []
    for (m, n), lmax, _ in _EIGEN_CONFIGS:
        if args.m is not None and (m, n) != (args.m, args.n):
            continue
        params = HookParams(m, n, 'half')
        for b in enumerate_hooks(params, lmax, upto=True):
            if not b.size:
                continue
            c = c_poly_hc(params, b)
            bad = []
            for mu in enumerate_hooks(params, b.size, upto=True):
                want = Fraction(factorial(b.size)) if mu == b else Fraction(0)
                if c.value(gamma_star_map(mu)) != want:
                    bad.append(str(mu))
            cases.append(('(%d,%d) vanishing of c_%s' % (m, n, b), not bad,
                          'wrong value at mu: %s' % bad if bad else ''))
    return cases


_SPHERICAL_CONFIGS = [((1, 1), 3), ((2, 1), 2)]


def suite_top_part(args):
    cases = []
    for (m, n), lmax in _SPHERICAL_CONFIGS:
        if args.m is not None and (m, n) != (args.m, args.n):
            continue
        params = HookParams(m, n, 'half')
        for b in enumerate_hooks(params, lmax, upto=True):
            if not b.size:
                continue
            rep = verify_main(params, b)
            cases.append(('(%d,%d) top part %s' % (m, n, b), rep.passed,
                          rep.detail))
    if args.m is None:
        params = HookParams(1, 0, 'half')
        b = parse_partition('1', params)
        c = c_poly_hc(params, b)
        expected = MultiPoly.variable(a_context(1, 0), 'a1').scale(
            Fraction(-1, 2))
        cases.append(('(1,0) rank-one closed form', c.poly == expected,
                      '' if c.poly == expected else 'got %s' % c.poly))
    return cases


def suite_sv_identification(args):
    cases = []
    for (m, n), lmax in _SPHERICAL_CONFIGS:
        if args.m is not None and (m, n) != (args.m, args.n):
            continue
        params = HookParams(m, n, 'half')
        for b in enumerate_hooks(params, lmax, upto=True):
            if not b.size:
                continue
            rep = verify_sv(params, b)
            cases.append(('(%d,%d) transform of c*_%s' % (m, n, b),
                          rep.passed, rep.detail))
    if args.m is None:
        params = HookParams(1, 1, 'half')
        ctx = xy_context(1, 1)
        expected = (MultiPoly.variable(ctx, 'x1')
                    + MultiPoly.variable(ctx, 'y1')
                    + MultiPoly.const(ctx, Fraction(-1, 2)))
        got = sp_star(params, parse_partition('1', params))
        cases.append(('(1,1) interpolation oracle for (1)', got == expected,
                      '' if got == expected else 'got %s' % got))
    return cases


def suite_decomposition(args):
    cases = []
    kmax = args.dmax or 3
    for m, n in _ambients(args, [(1, 2), (2, 2)]):
        amb = Ambient(m, n)
        params = HookParams(m, n // 2, 'half')
        for k in range(kmax + 1):
            hw = all_highest_weight_vectors(amb, k)
            count = sum(len(basis) for _, basis in hw)
            expected = len(enumerate_hooks(params, k))
            cases.append(('gl(%d|%d) hw count k=%d' % (m, n, k),
                          count == expected,
                          '' if count == expected else
                          '%d vs %d' % (count, expected)))
            total = sum(cyclic_span_dim(amb, v) for _, basis in hw
                        for v in basis)
            dim = len(monomial_basis(amb, k))
            cases.append(('gl(%d|%d) span dims k=%d' % (m, n, k),
                          total == dim,
                          '' if total == dim else '%d vs %d' % (total, dim)))
    return cases


def suite_spherical(args):
    cases = []
    for (m, n), lmax in _SPHERICAL_CONFIGS:
        if args.m is not None and (m, n) != (args.m, args.n):
            continue
        params = HookParams(m, n, 'half')
        kset = osp_spanning_set(params)
        for b in enumerate_hooks(params, lmax, upto=True):
            if not b.size:
                continue
            D = capelli_operator(params, b)
            vec = spherical_vector(params, b, capelli=D)
            ann = all(not apply_weyl(rho_check(k), vec) for k in kset)
            poly = spherical_poly(params, b, capelli=D)
            ok = bool(vec) and ann and not poly.is_zero()
            detail = '' if ok else ('vector zero' if not vec else
                                    'not annihilated' if not ann else
                                    'restriction zero')
            cases.append(('(%d,%d) spherical data %s' % (m, n, b), ok, detail))
    return cases


def suite_theta_one(args):
    cases = []
    lmax = args.dmax or 3
    for m, n in _ambients(args, [(1, 1), (2, 1)]):
        params = HookParams(m, n, 'one')
        for b in enumerate_hooks(params, lmax, upto=True):
            if not b.size:
                continue
            fam = theta_one_family(params, b)
            cases.append(('(%d,%d) hyperplane conditions %s' % (m, n, b),
                          natural_algebra_check(params, fam['s_star']), ''))
    return cases


def suite_duality(args):
    cases = []
    dmax = args.dmax or 3
    params = HookParams(args.m or 1, args.n or 1, 'half')
    for b in enumerate_hooks(params, dmax, upto=True):
        if not b.size:
            continue
        z = central_preimage(params, b)
        c = c_poly_hc(params, b, preimage=z)
        cs = c_star_poly(params, b, preimage=z)
        bad = []
        for mu in enumerate_hooks(params, dmax, upto=True):
            w = gamma_star_map(mu)
            if c.value(w) != cs.value(dual_weight(w, params)):
                bad.append(str(mu))
        cases.append(('duality for %s' % b, not bad,
                      'mismatch at mu: %s' % bad if bad else ''))
    amb = Ambient(params.m, 2 * params.n)
    for d in range(1, dmax + 1):
        z = gelfand_element(amb, d)
        lhs = hc_project(omega(z), 'minus')
        rhs = omega_cartan(hc_project(z, 'plus'))
        cases.append(('minus projection of omega d=%d' % d, lhs == rhs, ''))
    return cases


SUITES = {
    'centrality': suite_centrality,
    'symbol-identity': suite_symbol_identity,
    'abstract-capelli': suite_abstract_capelli,
    'eigenvalue-coherence': suite_eigenvalue_coherence,
    'vanishing': suite_vanishing,
    'top-part': suite_top_part,
    'sv-identification': suite_sv_identification,
    'decomposition': suite_decomposition,
    'spherical': suite_spherical,
    'theta-one': suite_theta_one,
    'duality': suite_duality,
}


def cmd_verify(args):
    names = list(SUITES) if args.suite == 'all' else [args.suite]
    if args.suite not in SUITES and args.suite != 'all':
        raise ValueError('unknown suite %r; choose from %s or all'
                         % (args.suite, ', '.join(SUITES)))
    records = []
    lines = []
    all_ok = True
    for name in names:
        t0 = time.time()
        cases = SUITES[name](args)
        elapsed = time.time() - t0
        for case, ok, detail in sorted(cases, key=lambda c: c[0]):
            records.append({'suite': name, 'case': case, 'passed': ok,
                            'witness': detail})
            lines.append('%-22s %-40s %s' % (name, case,
                                             'pass' if ok else
                                             'FAIL %s' % detail))
            all_ok = all_ok and ok
        lines.append('%-22s (%d cases, %.1fs)' % (name, len(cases), elapsed))
    payload = {'suites': names, 'passed': all_ok, 'cases': records}
    lines.append('overall: %s' % ('pass' if all_ok else 'FAIL'))
    return payload, '\n'.join(lines), 0 if all_ok else 1


# ---------------------------------------------------------------------------
# Parser and dispatch.

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('json', 'text'), default='text')
    common.add_argument('--cache-dir', default=None,
                        help='cache directory (or $SUPERCAPELLI_CACHE)')
    common.add_argument('--no-cache', action='store_true',
                        help='bypass the cache even when a directory is set')
    common.add_argument('--output', default=None,
                        help='write the result to a file instead of stdout')

    parser = argparse.ArgumentParser(prog='supercapelli')
    sub = parser.add_subparsers(dest='command', required=True)

    def add(name, fn, **flags):
        p = sub.add_parser(name, parents=[common])
        if flags.get('mn'):
            p.add_argument('--m', type=int, required=flags.get('mn') == 'req')
            p.add_argument('--n', type=int, required=flags.get('mn') == 'req')
        if flags.get('theta'):
            p.add_argument('--theta', default='1/2')
        if flags.get('partition'):
            p.add_argument('--partition')
        if flags.get('sigma'):
            p.add_argument('--sigma')
        if flags.get('dmax'):
            p.add_argument('--dmax', type=int, default=flags['dmax']
                           if flags['dmax'] is not True else None)
        if flags.get('size'):
            p.add_argument('--size', type=int, required=True)
            p.add_argument('--upto', action='store_true')
        if flags.get('sign'):
            p.add_argument('--sign', choices=('plus', 'minus'),
                           default='plus')
        if flags.get('method'):
            p.add_argument('--method', choices=('hc', 'interp', 'dual'),
                           default='hc')
        if flags.get('suite'):
            p.add_argument('--suite', default='all')
        p.set_defaults(fn=fn)
        return p

    add('hooks', cmd_hooks, mn='req', theta=True, size=True)
    add('gamma', cmd_gamma, mn='req', theta=True, partition=True)
    add('gamma-star', cmd_gamma_star, mn='req', theta=True, partition=True)
    add('frobenius', cmd_frobenius, mn='req', theta=True, partition=True)
    add('gelfand', cmd_gelfand, mn='req', dmax=1)
    add('hc', cmd_hc, mn='req', dmax=1, sign=True)
    add('t-sigma', cmd_t_sigma, mn='req', sigma=True)
    add('capelli-op', cmd_capelli_op, mn='req', theta=True, partition=True)
    add('capelli-preimage', cmd_capelli_preimage, mn='req', theta=True,
        partition=True)
    add('c-poly', cmd_c_poly, mn='req', theta=True, partition=True,
        method=True)
    add('d-poly', cmd_d_poly, mn='req', theta=True, partition=True)
    add('sp-star', cmd_sp_star, mn='req', theta=True, partition=True)
    add('verify', cmd_verify, mn=True, dmax=True, suite=True)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text, code = args.fn(args)
    except (ValueError, KeyError) as exc:
        print('error: %s' % exc, file=sys.stderr)
        return 2
    out = json.dumps(payload, sort_keys=True) if args.format == 'json' \
        else text
    if args.output:
        with open(args.output, 'w') as fh:
            fh.write(out + '\n')
    else:
        print(out)
    return code


if __name__ == '__main__':
    sys.exit(main())
