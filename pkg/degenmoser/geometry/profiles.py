# Copyright 2024 The degenmoser Authors. All Rights Reserved.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

'''
Degeneracy profiles f(r) = exp(-F(r)) with

    F_{k,sigma}(r) = (ln 1/r) (ln^{(k)} 1/r)^sigma

Everything is evaluated in ell = ln(1/r) through the iterated logs
L_1 = ell, L_i = ln L_{i-1}.  With P_i = L_1 ... L_i and Q = L_2 ... L_k,

    a1 = -r F'(r)   = L_k^sigma (1 + sigma/Q)
    a2 = r^2 F''(r) = a1 + L_k^sigma (sigma (1 + sigma/Q)/P_k - (sigma/Q) sum_{i>=2} 1/P_i)

so F, a1, a2 stay finite for r far below the float range.
'''

import numpy
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.exceptions import InvalidParameterError, DomainError

ITERLOG_FLOOR = getattr(__config__, 'geometry_iterlog_floor', 1.1)
DOUBLING_BOUND = getattr(__config__, 'geometry_doubling_bound', 8.)


def iterlog_ell(k, ell):
    '''[L_1, ..., L_k] for an array of ell = ln(1/x); every level must be > 0'''
    ell = numpy.asarray(ell, dtype=float)
    levels = [ell]
    if numpy.any(ell <= 0):
        raise DomainError('ln(1/x) <= 0: x must lie in (0, 1)', level=1)
    for i in range(2, k + 1):
        nxt = numpy.log(levels[-1])
        if numpy.any(nxt <= 0):
            raise DomainError(f'iterated logarithm ln^({i}) 1/x is not positive', level=i)
        levels.append(nxt)
    return levels

def iterlog(k, x):
    '''k-fold iterated natural log of 1/x'''
    x = numpy.asarray(x, dtype=float)
    if numpy.any(x <= 0) or numpy.any(x >= 1):
        raise DomainError('iterlog requires 0 < x < 1', level=1)
    out = iterlog_ell(k, -numpy.log(x))[-1]
    return float(out) if out.ndim == 0 else out


class Geometry:
    '''The profile F_{k,sigma}; f extends as the constant f(r_max) beyond r_max.

    Attributes:
        k : int >= 1
        sigma : float >= 0
        ell_min : ln(1/r_max), where the innermost iterated log equals the floor
        r_max : float
    '''
    kind = 'fk'

    def __init__(self, k=1, sigma=.5, floor=ITERLOG_FLOOR):
        if int(k) != k or k < 1:
            raise InvalidParameterError(f'k must be a positive integer (k = 0 is excluded), got {k}')
        if not sigma >= 0:
            raise InvalidParameterError(f'sigma must be nonnegative, got {sigma}')
        self.k = int(k)
        self.sigma = float(sigma)
        ell = float(floor)
        for _ in range(self.k - 1):
            ell = numpy.exp(ell)
        self.ell_min = ell
        self.r_max = float(numpy.exp(-ell))

    def dump_flags(self, verbose=None):
        log = logger.new_logger(verbose=verbose)
        log.info('******** %s ********', self.__class__)
        log.info('k = %d  sigma = %g', self.k, self.sigma)
        log.info('r_max = %.6g  (ln 1/r_max = %.6g)', self.r_max, self.ell_min)
        return self

    def _check(self, ell):
        if numpy.any(ell < self.ell_min * (1 - 1e-12)):
            raise DomainError(f'r outside (0, r_max = {self.r_max:.6g})', level=0)

    def chain(self, ell):
        '''(F, a1, a2) at ell = ln(1/r)'''
        ell = numpy.asarray(ell, dtype=float)
        self._check(ell)
        sigma = self.sigma
        L = iterlog_ell(self.k, ell)
        P = numpy.cumprod(L, axis=0)
        Q = numpy.prod(L[1:], axis=0) if self.k > 1 else numpy.ones_like(ell)
        S = numpy.sum(1. / P[1:], axis=0) if self.k > 1 else numpy.zeros_like(ell)
        u = L[-1]**sigma
        g = 1. + sigma / Q
        F = ell * u
        a1 = u * g
        a2 = a1 + u * (sigma * g / P[-1] - sigma / Q * S)
        return F, a1, a2

    def F_derivatives(self, r):
        '''(F, F', F'', f) at r in (0, r_max)'''
        r = numpy.asarray(r, dtype=float)
        if numpy.any(r <= 0):
            raise DomainError('F is evaluated at r > 0 only', level=0)
        F, a1, a2 = self.chain(-numpy.log(r))
        return F, -a1 / r, a2 / r**2, numpy.exp(-F)

    def ln_f(self, r):
        '''ln f(|r|), -inf at 0, constant beyond r_max'''
        r = numpy.abs(numpy.asarray(r, dtype=float))
        out = numpy.full(r.shape, -numpy.inf)
        pos = r > 0
        ell = numpy.maximum(-numpy.log(r[pos]), self.ell_min)
        out[pos] = -self.chain(ell)[0]
        return out

    def f(self, r):
        return numpy.exp(self.ln_f(r))

    def ln_ball_volume(self, ell):
        '''ln(f/F'^2) at ell = ln(1/r)'''
        F, a1, _ = self.chain(ell)
        return -F - 2 * numpy.asarray(ell) - 2 * numpy.log(a1)

    def ball_volume_estimate(self, r):
        '''f(r)/|F'(r)|^2, the size of the metric ball B(0, r)'''
        return numpy.exp(self.ln_ball_volume(-numpy.log(r)))

    def ln_ball_volume_derivative(self, ell):
        '''ln d/dr (f/F'^2) = ln((f/|F'|)(1 + 2 r^2F''/(rF')^2))'''
        F, a1, a2 = self.chain(ell)
        return -F - numpy.asarray(ell) - numpy.log(a1) + numpy.log1p(2 * a2 / a1**2)

    def to_dict(self):
        return {'kind': self.kind, 'k': self.k, 'sigma': self.sigma}

    def __repr__(self):
        return f'Geometry(k={self.k}, sigma={self.sigma})'


class Isotropic:
    '''f = 1: the Euclidean plane, phi(r) = r'''
    kind = 'isotropic'
    k = 0
    sigma = 0.
    r_max = numpy.inf
    ell_min = -numpy.inf

    def ln_f(self, r):
        return numpy.zeros(numpy.shape(r))

    def f(self, r):
        return numpy.ones(numpy.shape(r))

    def dump_flags(self, verbose=None):
        log = logger.new_logger(verbose=verbose)
        log.info('******** %s ********', self.__class__)
        return self

    def ball_volume_estimate(self, r):
        return numpy.pi * numpy.asarray(r, dtype=float)**2

    def to_dict(self):
        return {'kind': self.kind}

    def __repr__(self):
        return 'Isotropic()'


def from_dict(desc):
    '''Geometry from its JSON descriptor {k, sigma} or {kind: isotropic}'''
    kind = desc.get('kind', 'fk')
    if kind == 'isotropic':
        return Isotropic()
    elif kind == 'fk':
        return Geometry(int(desc['k']), float(desc['sigma']))
    raise InvalidParameterError(f'Unknown geometry kind: {kind}')


def structural_check(geom, r_grid, doubling_bound=DOUBLING_BOUND):
    '''Worst constants of the five structure conditions on r_grid.

    Condition (3) fails when the worst ratio of |F'| over [r/2, 2r] exceeds
    doubling_bound.

    Returns:
        dict condition -> {'pass': bool, 'constant': float}
    '''
    r = numpy.sort(numpy.asarray(r_grid, dtype=float))
    ell = -numpy.log(r)
    F, a1, a2 = geom.chain(ell)
    report = {}
    # (1) F grows without bound as r -> 0
    report['F_unbounded'] = {
        'pass': bool(numpy.all(F > 0) and numpy.all(numpy.diff(F) <= 0)),
        'constant': float(F[0])}
    # (2) F' < 0 < F''
    report['F_monotone_convex'] = {
        'pass': bool(numpy.all(a1 > 0) and numpy.all(a2 > 0)),
        'constant': float(min(a1.min(), a2.min()))}
    # (3) |F'(s)| comparable to |F'(r)| for s in [r/2, 2r]
    ok = (2 * r < geom.r_max)
    if ok.any():
        # |F'(s)| = a1(s)/s
        b = a1[ok] / r[ok]
        _, a_half, _ = geom.chain(ell[ok] + numpy.log(2.))
        _, a_twice, _ = geom.chain(ell[ok] - numpy.log(2.))
        rho = numpy.concatenate([(a_half / (r[ok] / 2)) / b, b / (a_twice / (2 * r[ok]))])
        with numpy.errstate(divide='ignore'):
            c3 = float(numpy.max(numpy.maximum(rho, 1. / rho)))
    else:
        c3 = numpy.nan
    report['F_prime_doubling'] = {'pass': bool(numpy.isfinite(c3) and c3 <= doubling_bound),
                                  'constant': c3}
    # (4) 1/(-r F') increasing in r and bounded by 1/eps
    inv = 1. / a1
    report['inverse_rF_prime'] = {
        'pass': bool(numpy.all(numpy.diff(inv) >= -1e-12 * inv[1:])),
        'constant': float(a1.min())}
    # (5) F''/(-F') comparable to 1/r
    q = a2 / a1
    c5 = float(max(q.max(), 1. / q.min()))
    report['F_second_over_first'] = {'pass': bool(numpy.isfinite(c5) and q.min() > 0),
                                     'constant': c5}
    return report
