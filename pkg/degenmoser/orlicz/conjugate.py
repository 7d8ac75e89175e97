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
Complementary Young function Phi*(s) = sup_{t>0} (s t - Phi(t))

The supremand s - Phi'(t) is nonincreasing in t, so the maximizer is found by
bisection on ln t for the first t with Phi'(t+) >= s.  At a kink of Phi both
one-sided candidates are evaluated.
'''

import numpy
from degenmoser import __config__
from degenmoser.lib.logval import LogVal, as_logval
from degenmoser.lib.exceptions import NumericalError
from degenmoser.orlicz.young import YoungFn, make_young, _as_array, _ret

MAX_CYCLE = getattr(__config__, 'orlicz_conjugate_cycles', 200)
LNT_RANGE = getattr(__config__, 'orlicz_conjugate_lnt_range', (-40., 400.))


def _ln_gap(lns, lnt, lnphi):
    '''ln(s t - Phi(t)), -inf where the difference is <= 0'''
    lnst = lns + lnt
    with numpy.errstate(over='ignore', invalid='ignore', divide='ignore'):
        d = lnphi - lnst
        out = lnst + numpy.log1p(-numpy.exp(numpy.minimum(d, 0.)))
    return numpy.where(d >= 0, -numpy.inf, out)


def ln_maximizer(phi, lns, max_cycle=MAX_CYCLE):
    '''Bracket [lo, hi] of ln t* for the maximizer t* of s t - Phi(t).

    Only meaningful where s > Phi'(0+).
    '''
    lns, scalar = _as_array(lns)
    lo = numpy.full_like(lns, LNT_RANGE[0])
    hi = numpy.full_like(lns, LNT_RANGE[1])

    def above(lnt):
        return phi.ln_derivatives(lnt, 'right')[0] >= lns

    for _ in range(64):
        bad = above(lo)
        if not bad.any():
            break
        lo[bad] -= (LNT_RANGE[1] - LNT_RANGE[0])
    for _ in range(64):
        bad = ~above(hi)
        if not bad.any():
            break
        hi[bad] *= 2
    else:
        raise NumericalError('conjugate maximizer could not be bracketed')

    for _ in range(max_cycle):
        mid = .5 * (lo + hi)
        up = above(mid)
        hi = numpy.where(up, mid, hi)
        lo = numpy.where(up, lo, mid)
        if numpy.all(hi - lo <= 4 * numpy.spacing(numpy.abs(hi) + 1.)):
            break
    return _ret(lo, scalar), _ret(hi, scalar)


def ln_conjugate(phi, lns):
    '''ln Phi*(s) for an array of ln s'''
    lns, scalar = _as_array(lns)
    out = numpy.full_like(lns, -numpy.inf)
    active = lns > phi.ln_slope0()
    if active.any():
        s = lns[active]
        lo, hi = ln_maximizer(phi, s)
        lo = numpy.atleast_1d(lo)
        hi = numpy.atleast_1d(hi)
        out[active] = numpy.maximum(_ln_gap(s, lo, phi.ln_eval(lo)),
                                    _ln_gap(s, hi, phi.ln_eval(hi)))
    return _ret(out, scalar)


def conjugate_eval(m, s, variant='phi'):
    '''Phi_m*(s) as LogVal; exact 0 for s <= F/E'''
    return LogVal(ln_conjugate(make_young(m, variant), as_logval(s).log_value))


def conjugate_oracle(phi, lns, lnt_grid=None):
    '''Brute-force ln max_{t in grid} (s t - Phi(t)), clipped at 0'''
    if lnt_grid is None:
        lnt_grid = numpy.linspace(LNT_RANGE[0], LNT_RANGE[1]/4, 200001)
    lns, scalar = _as_array(lns)
    lnphi = phi.ln_eval(lnt_grid)
    out = numpy.array([_ln_gap(s, lnt_grid, lnphi).max() for s in lns])
    return _ret(out, scalar)


def double_legendre(phi, lnt, lns_grid):
    '''ln Phi**(t) = ln max_{s in grid} (s t - Phi*(s)) using the bisection
    conjugate on the grid of ln s'''
    lnt, scalar = _as_array(lnt)
    lnconj = ln_conjugate(phi, lns_grid)
    out = numpy.array([_ln_gap(lns_grid, t, lnconj).max() for t in lnt])
    return _ret(out, scalar)


def fenchel_young_gap(phi, lns, lnt):
    '''ln(Phi(t) + Phi*(s)) - ln(s t) on the outer grid; >= 0 everywhere'''
    lns = numpy.asarray(lns, dtype=float)
    lnt = numpy.asarray(lnt, dtype=float)
    lhs = numpy.logaddexp(phi.ln_eval(lnt)[None, :], ln_conjugate(phi, lns)[:, None])
    return lhs - (lns[:, None] + lnt[None, :])


class ConjugateYoung(YoungFn):
    '''Phi* as an evaluatable Young function (for L^{Phi*} norms)'''
    variant = 'conjugate'

    def __init__(self, phi):
        self.phi = phi

    def ln_slope0(self):
        return -numpy.inf

    def ln_eval(self, lns):
        return ln_conjugate(self.phi, lns)

    def ln_inv(self, lnv):
        '''smallest s with Phi*(s) = v, by bisection on ln s'''
        lnv, scalar = _as_array(lnv)
        out = numpy.full_like(lnv, -numpy.inf)
        active = ~numpy.isneginf(lnv)
        v = lnv[active]
        lo = numpy.full_like(v, self.phi.ln_slope0())
        hi = lo + 1.
        for _ in range(128):
            bad = self.ln_eval(hi) < v
            if not bad.any():
                break
            hi[bad] = lo[bad] + 2 * (hi[bad] - lo[bad])
        for _ in range(MAX_CYCLE):
            mid = .5 * (lo + hi)
            up = self.ln_eval(mid) >= v
            hi = numpy.where(up, mid, hi)
            lo = numpy.where(up, lo, mid)
            if numpy.all(hi - lo <= 1e-13 * (numpy.abs(hi) + 1.)):
                break
        out[active] = hi
        return _ret(out, scalar)

    def elasticities(self, lns, side='right'):
        '''centered differences of ln Phi* in ln s'''
        lns, scalar = _as_array(lns)
        h = 1e-6
        f0 = self.ln_eval(lns)
        fp = self.ln_eval(lns + h)
        fm = self.ln_eval(lns - h)
        eta = (fp - fm) / (2*h)
        dfp = (self.ln_eval(lns + 2*h) - f0) / (2*h)
        dfm = (f0 - self.ln_eval(lns - 2*h)) / (2*h)
        kappa = eta - 1. + (dfp - dfm) / (2*h) / eta
        return _ret(eta, scalar), _ret(kappa, scalar)

    def to_dict(self):
        d = self.phi.to_dict()
        d['conjugate'] = True
        return d
