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
Young functions of the Phi_m family

    Phi_m(t) = (F/E) t                        0 <= t <= E
             = exp(((ln t)^{1/m} + 1)^m)      t >= E

with E = exp(2^m), F = exp(3^m), and the C^1 variant Phi~_m which is
(F/2E) t below a = 2E^2/F, a convex bridge rho_m on [a, E] and Phi_m above E.

All evaluators act on logarithms: ``ln_eval(lnt)`` returns ln Phi(t) for an
array of ln t, with -inf standing for 0.
'''

import functools
import numpy
from scipy.interpolate import CubicHermiteSpline, PPoly
from scipy.optimize import brentq
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.logval import LogVal, as_logval
from degenmoser.lib.exceptions import InvalidParameterError, DomainError

BRIDGE_TOL = getattr(__config__, 'orlicz_bridge_tol', 1e-9)


def _as_array(x):
    x = numpy.asarray(x, dtype=float)
    return numpy.atleast_1d(x).copy(), x.ndim == 0

def _ret(x, scalar):
    if scalar:
        return float(x[0])
    return x


class YoungFn:
    '''Interface of an evaluatable Young function.

    Subclasses implement ``ln_eval``, ``ln_inv`` and ``elasticities``;
    the derivative and LogVal front ends are shared.
    '''
    variant = None

    def ln_eval(self, lnt):
        raise NotImplementedError

    def ln_inv(self, lns):
        raise NotImplementedError

    def elasticities(self, lnt, side='right'):
        '''(eta, kappa) with eta = t Phi'/Phi and kappa = t Phi''/Phi'.'''
        raise NotImplementedError

    def ln_slope0(self):
        '''ln Phi'(0+)'''
        raise NotImplementedError

    def ln_derivatives(self, lnt, side='right'):
        '''(ln Phi'(t), ln Phi''(t)); ln Phi'' is -inf where Phi is linear'''
        lnt, scalar = _as_array(lnt)
        if numpy.any(numpy.isneginf(lnt)):
            raise DomainError('derivatives are evaluated at t > 0 only')
        eta, kappa = self.elasticities(lnt, side)
        lnd1 = self.ln_eval(lnt) + numpy.log(eta) - lnt
        with numpy.errstate(divide='ignore'):
            lnd2 = lnd1 + numpy.log(kappa) - lnt
        return _ret(lnd1, scalar), _ret(lnd2, scalar)

    def eval(self, t):
        return LogVal(self.ln_eval(as_logval(t).log_value))

    def inv(self, s):
        return LogVal(self.ln_inv(as_logval(s).log_value))

    def derivatives(self, t, side='right'):
        t = as_logval(t)
        if t.is_zero:
            raise DomainError('Phi\'\' is not defined at t = 0')
        lnd1, lnd2 = self.ln_derivatives(t.log_value, side)
        return LogVal(lnd1), LogVal(lnd2)

    def __call__(self, t):
        return self.eval(t)

    def to_dict(self):
        raise NotImplementedError


class PhiM(YoungFn):
    '''The submultiplicative extension Phi_m, m > 1.'''
    variant = 'phi'

    def __init__(self, m):
        m = float(m)
        if not m > 1:
            raise InvalidParameterError(f'Phi_m requires m > 1, got m = {m}')
        self.m = m
        self.lnE = 2.**m
        self.lnF = 3.**m
        self.ln_slope = self.lnF - self.lnE

    @property
    def E(self):
        return LogVal(self.lnE)

    @property
    def F(self):
        return LogVal(self.lnF)

    @property
    def slope(self):
        return LogVal(self.ln_slope)

    def ln_slope0(self):
        return self.ln_slope

    def _analytic(self, lnt, side='right'):
        if side == 'right':
            return lnt >= self.lnE
        elif side == 'left':
            return lnt > self.lnE
        raise InvalidParameterError(f'Unknown side {side}')

    def ln_eval(self, lnt):
        lnt, scalar = _as_array(lnt)
        out = numpy.empty_like(lnt)
        up = lnt >= self.lnE
        out[~up] = self.ln_slope + lnt[~up]
        out[up] = (lnt[up]**(1./self.m) + 1.)**self.m
        return _ret(out, scalar)

    def ln_inv(self, lns):
        lns, scalar = _as_array(lns)
        out = numpy.empty_like(lns)
        up = lns >= self.lnF
        out[~up] = lns[~up] - self.ln_slope
        out[up] = (lns[up]**(1./self.m) - 1.)**self.m
        return _ret(out, scalar)

    def elasticities(self, lnt, side='right'):
        lnt, scalar = _as_array(lnt)
        m = self.m
        eta = numpy.ones_like(lnt)
        kappa = numpy.zeros_like(lnt)
        up = self._analytic(lnt, side)
        theta = lnt[up]**(1./m)
        q = 1. + 1./theta
        eta[up] = q**(m-1)
        kappa[up] = eta[up] - 1. - (m-1)/m / (q * theta**(m+1))
        return _ret(eta, scalar), _ret(kappa, scalar)

    def extension_condition(self):
        '''ln of Phi'(E+) / (F/E) = (m-1) ln(3/2) > 0'''
        eta, _ = self.elasticities(self.lnE, 'right')
        return numpy.log(eta)

    def to_dict(self):
        return {'m': self.m, 'variant': self.variant}

    def __repr__(self):
        return f'PhiM(m={self.m})'


class PhiTildeM(PhiM):
    '''C^1 variant of Phi_m with a convex bridge on [2E^2/F, E].

    The bridge is stored in the scaled variables x = t/E, y = rho/F, where it
    runs from (2E/F, E/F) with slope 1/2 to (1, 1) with slope (3/2)^{m-1}.
    '''
    variant = 'phi_tilde'

    def __init__(self, m, verbose=None):
        PhiM.__init__(self, m)
        log = logger.new_logger(verbose=verbose)
        if self.ln_slope > 700:
            raise InvalidParameterError(
                f'Phi~_m bridge is not representable for m = {m}: E/F underflows')
        self.ln_a = numpy.log(2.) + 2*self.lnE - self.lnF
        self.ln_lower_slope = self.ln_slope - numpy.log(2.)
        delta = numpy.exp(-self.ln_slope)
        self.x0 = 2 * delta
        self.y0 = delta
        self.d0 = .5
        self.d1 = 1.5**(self.m-1)
        self.bridge_kind, self._bridge = self._build_bridge(log)

    def _build_bridge(self, log):
        x0, y0, d0, d1 = self.x0, self.y0, self.d0, self.d1
        L = 1. - x0
        secant = (1. - y0) / L

        bridge = _textbook_quadratic(x0, y0, d0, d1, self.lnF - 3*self.lnE)
        if bridge is not None and _bridge_mismatch(bridge, x0, y0, d0, d1) < BRIDGE_TOL:
            return 'quadratic', bridge
        log.debug('Phi~_%g: textbook quadratic bridge rejected', self.m)

        if (2*d0+d1)/3 <= secant <= (d0+2*d1)/3:
            bridge = CubicHermiteSpline([x0, 1.], [y0, 1.], [d0, d1])
            return 'cubic', bridge

        if not d0 <= secant <= d1:
            raise InvalidParameterError(
                f'No monotone convex C1 bridge exists for m = {self.m}: secant slope '
                f'{secant:.6g} outside [{d0:.6g}, {d1:.6g}]')
        if secant <= (d0 + d1) / 2:
            w = 2 * (secant - d0) * L / (d1 - d0)
            xb = 1. - w
            yb = y0 + d0 * (xb - x0)
            pieces = [(x0, (0., d0, y0)), (xb, ((d1-d0)/(2*w), d0, yb))]
            kind = 'linear-quadratic'
        else:
            w = 2 * (d1 - secant) * L / (d1 - d0)
            xb = x0 + w
            yb = y0 + w * (d0 + d1) / 2
            pieces = [(x0, ((d1-d0)/(2*w), d0, y0)), (xb, (0., d1, yb))]
            kind = 'quadratic-linear'
        pieces = [p for p, nxt in zip(pieces, [p[0] for p in pieces[1:]] + [1.])
                  if nxt - p[0] > 0]
        breaks = [p[0] for p in pieces] + [1.]
        coeffs = numpy.array([p[1] for p in pieces]).T
        log.debug('Phi~_%g: %s bridge, knot at x = %.6g', self.m, kind, breaks[1])
        return kind, PPoly(coeffs, breaks)

    def ln_slope0(self):
        return self.ln_lower_slope

    def _regions(self, lnt):
        low = lnt <= self.ln_a
        up = lnt >= self.lnE
        mid = ~(low | up)
        return low, mid, up

    def ln_eval(self, lnt):
        lnt, scalar = _as_array(lnt)
        out = numpy.empty_like(lnt)
        low, mid, up = self._regions(lnt)
        out[low] = self.ln_lower_slope + lnt[low]
        out[up] = PhiM.ln_eval(self, lnt[up])
        x = numpy.clip(numpy.exp(lnt[mid] - self.lnE), self.x0, 1.)
        out[mid] = self.lnF + numpy.log(self._bridge(x))
        return _ret(out, scalar)

    def ln_inv(self, lns):
        lns, scalar = _as_array(lns)
        out = numpy.empty_like(lns)
        low = lns <= self.lnE
        up = lns >= self.lnF
        mid = ~(low | up)
        out[low] = lns[low] - self.ln_lower_slope
        out[up] = PhiM.ln_inv(self, lns[up])
        ys = numpy.exp(lns[mid] - self.lnF)
        bridge = self._bridge
        xs = [brentq(lambda x: float(bridge(x)) - y, self.x0, 1., xtol=1e-15, rtol=1e-15)
              for y in ys]
        out[mid] = self.lnE + numpy.log(numpy.asarray(xs, dtype=float))
        return _ret(out, scalar)

    def elasticities(self, lnt, side='right'):
        lnt, scalar = _as_array(lnt)
        eta = numpy.ones_like(lnt)
        kappa = numpy.zeros_like(lnt)
        if side == 'right':
            up = lnt >= self.lnE
            low = lnt < self.ln_a
        else:
            up = lnt > self.lnE
            low = lnt <= self.ln_a
        mid = ~(low | up)
        eta[up], kappa[up] = PhiM.elasticities(self, lnt[up], side)
        x = numpy.clip(numpy.exp(lnt[mid] - self.lnE), self.x0, 1.)
        y = self._bridge(x)
        dy = self._bridge(x, 1)
        d2y = self._bridge(x, 2)
        if side == 'left':
            # PPoly evaluates the right-continuous piece at knots
            d2y_left = self._bridge(numpy.nextafter(x, -numpy.inf), 2)
            d2y = numpy.where(x > self.x0, d2y_left, d2y)
        eta[mid] = x * dy / y
        kappa[mid] = x * d2y / dy
        return _ret(eta, scalar), _ret(kappa, scalar)

    def comparison_constant(self, lnt=None):
        '''sup Phi_m / Phi~_m on a log grid (2 for the constructed bridges)'''
        if lnt is None:
            lnt = numpy.linspace(self.ln_a - 5., self.lnE + 5., 4001)
        return float(numpy.exp(numpy.max(PhiM.ln_eval(self, lnt) - self.ln_eval(lnt))))

    def __repr__(self):
        return f'PhiTildeM(m={self.m}, bridge={self.bridge_kind})'


def _textbook_quadratic(x0, y0, d0, d1, ln_f_over_e3):
    '''rho = E + (F/2E)(t-a) + A/(E-alpha) (t-alpha)^2/2 on (alpha, E] with
    A = (F/E)((3/2)^{m-1} - 1/2) and alpha = 2A/E - E, written in scaled
    variables.  Returns None when alpha does not fall inside (x0, 1).'''
    slope_gain = d1 - d0
    # alpha/E = 2 (A/E)/E - 1 = 2 slope_gain F/E^3 - 1
    alpha = 2 * slope_gain * numpy.exp(ln_f_over_e3) - 1.
    if not x0 <= alpha < 1.:
        return None
    w = 1. - alpha
    coeffs = numpy.array([[0., slope_gain/(2*w)],
                          [d0, d0],
                          [y0, y0 + d0*(alpha-x0)]])
    return PPoly(coeffs, [x0, alpha, 1.])

def _bridge_mismatch(bridge, x0, y0, d0, d1):
    vals = numpy.array([bridge(x0) - y0, bridge(1.) - 1.,
                        bridge(x0, 1) - d0, bridge(1., 1) - d1])
    return float(numpy.abs(vals).max())


@functools.lru_cache(maxsize=64)
def make_young(m, variant='phi'):
    '''Young function from its JSON descriptor {m, variant}'''
    if variant == 'phi':
        return PhiM(m)
    elif variant == 'phi_tilde':
        return PhiTildeM(m)
    raise InvalidParameterError(f'Unknown Young function variant: {variant}')

def from_dict(desc):
    return make_young(float(desc['m']), desc.get('variant', 'phi'))


class TabulatedYoung(YoungFn):
    '''User-supplied Young function, power law between knots.

    On [t_i, t_{i+1}] Phi(t) = v_i (t/t_i)^{p_i}; the log-log slopes p_i must
    satisfy 1 <= p_0 <= p_1 <= ... for convexity.
    '''
    variant = 'tabulated'

    def __init__(self, t, values):
        lnt = numpy.log(numpy.asarray(t, dtype=float))
        lnv = numpy.log(numpy.asarray(values, dtype=float))
        if lnt.size < 2 or numpy.any(numpy.diff(lnt) <= 0) or numpy.any(numpy.diff(lnv) <= 0):
            raise InvalidParameterError('tabulated Young function must be strictly increasing')
        p = numpy.diff(lnv) / numpy.diff(lnt)
        if p[0] < 1 - 1e-12 or numpy.any(numpy.diff(p) < -1e-12):
            raise InvalidParameterError('tabulated Young function is not convex')
        self.knots = lnt
        self.lnv = lnv
        self.powers = p

    def _segment(self, lnt):
        return numpy.clip(numpy.searchsorted(self.knots, lnt, side='right') - 1,
                          0, self.powers.size - 1)

    def ln_slope0(self):
        if self.powers[0] > 1:
            return -numpy.inf
        return self.lnv[0] - self.knots[0]

    def ln_eval(self, lnt):
        lnt, scalar = _as_array(lnt)
        i = self._segment(lnt)
        out = self.lnv[i] + self.powers[i] * (lnt - self.knots[i])
        out[numpy.isneginf(lnt)] = -numpy.inf
        return _ret(out, scalar)

    def ln_inv(self, lns):
        lns, scalar = _as_array(lns)
        i = numpy.clip(numpy.searchsorted(self.lnv, lns, side='right') - 1,
                       0, self.powers.size - 1)
        out = self.knots[i] + (lns - self.lnv[i]) / self.powers[i]
        out[numpy.isneginf(lns)] = -numpy.inf
        return _ret(out, scalar)

    def elasticities(self, lnt, side='right'):
        lnt, scalar = _as_array(lnt)
        if side == 'left':
            lnt = numpy.nextafter(lnt, -numpy.inf)
        p = self.powers[self._segment(lnt)]
        return _ret(p.copy(), scalar), _ret(p - 1., scalar)

    def to_dict(self):
        return {'variant': self.variant, 't': numpy.exp(self.knots).tolist(),
                'values': numpy.exp(self.lnv).tolist()}


def phi_eval(m, t):
    '''Phi_m(t) for a LogVal (or float) t'''
    return make_young(m).eval(t)

def phi_inv(m, s):
    return make_young(m).inv(s)

def phi_derivatives(m, t, side='right'):
    '''(Phi_m'(t), Phi_m''(t)) as LogVal; one-sided values at t = E'''
    return make_young(m).derivatives(t, side)

def phi_tilde_eval(m, t):
    return make_young(m, 'phi_tilde').eval(t)
