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
Endpoint inequality for the half-ball kernel

For x, y in B(0, r0) with 0 < x1 < y1 and r = y1 - x1 the kernel is
K(x, y) = 1/h_r with

    h_r = r f(x1)              if r < 1/|F'(x1)|
        = f(x1 + r)/|F'(x1 + r)|  otherwise,

the vertical half-width of the region where K is constant.  Integrating
out x2 over [y2 - h_r, y2 + h_r],

    int_B Phi(K |B| alpha) dmu = (2/|B|) int_0^{y1} h_r Phi(alpha |B|/h_r) dr,

which is evaluated in s = ln(1/r) in log form.  The check reports
Phi^{-1}(sup_y of that) / (alpha phi(r0)) with |B| = f(r0)/F'(r0)^2.
'''

import numpy
import pandas
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.exceptions import InvalidParameterError, PreconditionError
from degenmoser.orlicz.young import make_young
from degenmoser.geometry.radius import C_M
from degenmoser.sobolev.probe import ln_phi_radius
from degenmoser.sobolev.failure import _ln_trapz

QUAD_NODES = getattr(__config__, 'sobolev_quadrature_nodes', 4000)
REFINE_LEVELS = getattr(__config__, 'sobolev_refine_levels', 6)


def _ln_abs_Fp(geom, x):
    '''ln |F'(x)| = ln a1 + ln(1/x)'''
    ell = -numpy.log(x)
    return numpy.log(geom.chain(ell)[1]) + ell

def ln_half_width(geom, x1, r):
    '''ln h_r for arrays x1 > 0, r > 0'''
    x1 = numpy.asarray(x1, dtype=float)
    r = numpy.asarray(r, dtype=float)
    near = r * numpy.exp(_ln_abs_Fp(geom, x1)) < 1
    return numpy.where(near, numpy.log(r) + geom.ln_f(x1),
                       geom.ln_f(x1 + r) - _ln_abs_Fp(geom, x1 + r))

def kernel_eval(geom, x, y):
    '''K(x, y) = 1/h_{y1 - x1} for points of the half ball with 0 < x1 < y1'''
    x1 = float(x[0])
    y1 = float(y[0])
    if not 0 < x1 < y1:
        raise PreconditionError(f'the half-ball kernel needs 0 < x1 < y1, got x1 = {x1}, y1 = {y1}')
    return float(numpy.exp(-ln_half_width(geom, x1, y1 - x1)))

def ln_endpoint_integral(geom, phi, y1, ln_alpha, ln_vol, nodes=QUAD_NODES):
    '''ln int_B Phi(K(., y) |B| alpha) dmu for y = (y1, 0)'''
    m = getattr(phi, 'm', 3.)
    # in s = ln(1/r) the log integrand behaves like (s^(1/m) + 1)^m - 2s, which
    # peaks near ((m - 1)/ln 2)^m with width of order sqrt(m s)
    span = max(200., (2. * m)**m + 100.)
    s0 = -numpy.log(y1)
    ln_h_edge = geom.ln_f(y1) - _ln_abs_Fp(geom, y1)

    def log_integrand(s):
        r = numpy.exp(-s)
        x1 = y1 - r
        ln_h = numpy.empty_like(s)
        # r below y1 e^-600: near regime with x1 = y1, kept in logs
        tiny = s > s0 + 600.
        ln_h[tiny] = geom.ln_f(y1) - s[tiny]
        pos = (x1 > 0) & ~tiny
        ln_h[pos] = ln_half_width(geom, x1[pos], r[pos])
        # x1 -> 0: h_r = f(y1)/|F'(y1)|
        ln_h[x1 <= 0] = ln_h_edge
        return ln_h + phi.ln_eval(ln_alpha + ln_vol - ln_h) - s

    s = numpy.linspace(s0, s0 + span, nodes)
    terms = log_integrand(s)
    for _ in range(REFINE_LEVELS):
        i = int(numpy.argmax(terms))
        if i == 0 or i == s.size - 1 or terms[i] - min(terms[i-1], terms[i+1]) <= 1.:
            break
        # resolve the peak between the neighbours of the largest node
        fine = numpy.linspace(s[i-1], s[i+1], nodes)[1:-1]
        s = numpy.concatenate([s[:i], fine, s[i+1:]])
        terms = numpy.concatenate([terms[:i], log_integrand(fine), terms[i+1:]])
    return float(numpy.log(2.) - ln_vol + _ln_trapz(terms, s))

def endpoint_check(geom, m, r0, alpha_list, y_fractions=(.05, .1, .25, .5, .75, .95),
                   C_m=C_M, variant='phi', nodes=QUAD_NODES, verbose=None):
    '''Endpoint ratios Phi^{-1}(sup_y I(y, alpha)) / (alpha phi(r0)).

    Returns:
        (max ratio, DataFrame with alpha, y1_argmax, ln_lhs, ln_rhs, ln_ratio)
    '''
    log = logger.new_logger(verbose=verbose)
    if not hasattr(geom, 'chain'):
        raise InvalidParameterError(f'the endpoint kernel needs a degenerate profile, got {geom}')
    if not 0 < r0 < getattr(geom, 'r_max', numpy.inf):
        raise InvalidParameterError(f'r0 = {r0} outside (0, r_max)')
    alphas = numpy.asarray(alpha_list, dtype=float)
    if numpy.any(alphas <= 0):
        raise InvalidParameterError('alpha must be positive')
    phi = make_young(m, variant)
    ln_vol = float(geom.ln_ball_volume(-numpy.log(r0)))
    ln_phi = ln_phi_radius(geom, m, r0, C_m)
    rows = []
    for alpha in alphas:
        ln_alpha = numpy.log(alpha)
        vals = [ln_endpoint_integral(geom, phi, fy * r0, ln_alpha, ln_vol, nodes)
                for fy in y_fractions]
        i = int(numpy.argmax(vals))
        ln_lhs = float(phi.ln_inv(vals[i]))
        ln_rhs = ln_alpha + ln_phi
        rows.append({'alpha': alpha, 'y1_argmax': y_fractions[i] * r0, 'ln_lhs': ln_lhs,
                     'ln_rhs': ln_rhs, 'ln_ratio': ln_lhs - ln_rhs})
        log.debug('alpha = %.4g  ln ratio = %.6g', alpha, ln_lhs - ln_rhs)
    df = pandas.DataFrame(rows, columns=['alpha', 'y1_argmax', 'ln_lhs', 'ln_rhs', 'ln_ratio'])
    return float(numpy.exp(df['ln_ratio'].max())), df
