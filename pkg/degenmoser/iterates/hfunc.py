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
Moser test functions h_{j,beta}(t) = sqrt(Phi^{(j)}(t^{2 beta}))

With G = Phi^{(j)} and x = t^{2 beta}, everything reduces to the
elasticities of G,

    t h'/h           = beta eta_G(x)
    Upsilon / h'^2   = (2 kappa_G(x) + 2 - 1/beta) / eta_G(x)

where Upsilon = (h^2/2)'' = h h'' + h'^2, eta_G = x G'/G and
kappa_G = x G''/G'.  The elasticities of a composition follow the chain

    eta_j   = eta_Phi(G_{j-1}) eta_{j-1}
    kappa_j = kappa_Phi(G_{j-1}) eta_{j-1} + kappa_{j-1}
'''

import numpy
import pandas
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.logval import LogVal, as_logval
from degenmoser.lib.exceptions import DomainError
from degenmoser.orlicz.young import _as_array, _ret
from degenmoser.iterates.theta import IterSpec, ln_phi_iter, ln_orbit

JUNCTION_RTOL = getattr(__config__, 'iterates_junction_rtol', 1e-8)


def ln_h(spec, lnt):
    '''ln h_{j,beta}(t) for an array of ln t'''
    lnt, scalar = _as_array(lnt)
    out = .5 * ln_phi_iter(spec, 2 * spec.beta * lnt)
    return _ret(out, scalar)

def h_eval(spec, t):
    t = as_logval(t)
    if t.is_zero:
        raise DomainError('h_{j,beta} is evaluated at t > 0 only')
    return LogVal(ln_h(spec, t.log_value))


def composite_elasticities(phi, lnx, j, side='right'):
    '''(eta, kappa) of Phi^{(j)} at x, one-sided at branch junctions'''
    lnx = numpy.asarray(lnx, dtype=float)
    eta = numpy.ones_like(lnx)
    kappa = numpy.zeros_like(lnx)
    for y in ln_orbit(phi, lnx, j)[:-1]:
        e, k = phi.elasticities(y, side)
        eta, kappa = e * eta, k * eta + kappa
    return eta, kappa


def _junctions(phi):
    return [x for x in (getattr(phi, 'ln_a', None), getattr(phi, 'lnE', None)) if x is not None]

def near_junction(spec, lnt, rtol=JUNCTION_RTOL):
    '''True where some inner value Phi^{(k)}(t^{2 beta}), k < j, sits within
    rtol of a branch junction of Phi'''
    lnt, scalar = _as_array(lnt)
    phi = spec.phi
    near = numpy.zeros(lnt.shape, dtype=bool)
    for y in ln_orbit(phi, 2 * spec.beta * lnt, spec.j)[:-1]:
        for c in _junctions(phi):
            near |= numpy.abs(y - c) <= rtol * max(1., abs(c))
    if scalar:
        return bool(near[0])
    return near


def h_ratios_ln(spec, lnt, side='right'):
    '''(t|h'|/h, Upsilon/h'^2) for an array of ln t'''
    lnt, scalar = _as_array(lnt)
    beta = spec.beta
    eta, kappa = composite_elasticities(spec.phi, 2 * beta * lnt, spec.j, side)
    ratio1 = abs(beta) * eta
    ratio2 = (2 * kappa + 2. - 1./beta) / eta
    return _ret(ratio1, scalar), _ret(ratio2, scalar)

def h_ratios(spec, t, side='right'):
    t = as_logval(t)
    if t.is_zero:
        raise DomainError('h_ratios are evaluated at t > 0 only')
    return h_ratios_ln(spec, t.log_value, side)


def ln_h_derivative(spec, lnt, side='right'):
    '''ln |h'(t)|; the sign of h' is the sign of beta'''
    lnt, scalar = _as_array(lnt)
    ratio1, _ = h_ratios_ln(spec, lnt, side)
    out = ln_h(spec, lnt) - lnt + numpy.log(ratio1)
    return _ret(out, scalar)


def ratio2_bound(spec):
    '''upper bound of Upsilon/h'^2: 2 + |beta-1|/|beta|, 3 + ... for Phi~'''
    base = 2. if spec.variant == 'phi' else 3.
    return base + abs(spec.beta - 1.) / abs(spec.beta)


def ratio_envelope(m_list, j_list, beta_list, lnt, variant='phi', verbose=None):
    '''Extremes of both ratios over a grid of ln t for every (m, j, beta).

    ``cm`` is the smallest C with t|h'|/h <= C |beta| j^{m-1} on the grid.
    Points within the junction tolerance are dropped.
    '''
    log = logger.new_logger(verbose=verbose)
    t0 = log.init_timer()
    lnt = numpy.asarray(lnt, dtype=float)
    rows = []
    for m in m_list:
        for j in j_list:
            for beta in beta_list:
                spec = IterSpec(m, j, beta, variant)
                keep = ~near_junction(spec, lnt)
                r1, r2 = h_ratios_ln(spec, lnt[keep])
                rows.append({
                    'm': float(m), 'j': int(j), 'beta': float(beta), 'variant': variant,
                    'ratio1_min': float(r1.min()), 'ratio1_max': float(r1.max()),
                    'cm': float(r1.max() / (abs(beta) * max(j, 1)**(m - 1))),
                    'ratio2_min': float(r2.min()), 'ratio2_max': float(r2.max()),
                    'ratio2_bound': ratio2_bound(spec)})
                log.debug1('m=%g j=%d beta=%g  ratio1 in [%.6g, %.6g]  ratio2 in [%.6g, %.6g]',
                           m, j, beta, rows[-1]['ratio1_min'], rows[-1]['ratio1_max'],
                           rows[-1]['ratio2_min'], rows[-1]['ratio2_max'])
    log.timer('ratio envelope', *t0)
    return pandas.DataFrame(rows)
