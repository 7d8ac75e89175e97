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
The extremal family behind the failure of the bump inequality for k = 1

    w_eps(r) = eta(r) min(1/f(r), 1/f(eps)),   eta = 1 on [0, rho/2],
                                               linear to 0 at rho,

is radial in the CC distance, so with the ball volume model
V(r) = f(r)/F'(r)^2 both sides of the inequality are one-dimensional
integrals against dV = V'(r) dr.  They are evaluated in ell = ln(1/r) on
a trapezoid grid in log form, so eps may lie far below the float range.
For k = 1 the LHS diverges as eps -> 0 iff (sigma + 1)(1 - 1/m) > 1.
'''

import numpy
import pandas
from scipy.special import logsumexp
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.exceptions import InvalidParameterError
from degenmoser.orlicz.young import make_young
from degenmoser.geometry.radius import C_M
from degenmoser.sobolev.probe import ln_phi_radius

QUAD_NODES = getattr(__config__, 'sobolev_quadrature_nodes', 4000)

LN2 = numpy.log(2.)


def divergence_exponent(m, sigma):
    '''(sigma + 1)(1 - 1/m); the k = 1 extremal LHS diverges when it exceeds 1'''
    return (sigma + 1.) * (1. - 1. / m)

def _ln_trapz(lnf, x):
    '''ln of the trapezoid integral of exp(lnf) over the increasing nodes x'''
    dx = numpy.diff(x)
    lnw = numpy.log(numpy.concatenate([dx, [0.]]) + numpy.concatenate([[0.], dx])) - LN2
    terms = lnf + lnw
    if numpy.all(numpy.isneginf(terms)):
        return -numpy.inf
    return float(logsumexp(terms))

def _segment(geom, phi, ell_rho, a, b, nodes, ramp):
    '''(ln int Phi(w) dV, ln int |w'| dV, ln int w dV) for ell in [a, b]'''
    # fine near a where the gradient integrand lives, coarse beyond
    c = min(b, a + 40.)
    ell = numpy.linspace(a, c, nodes)
    if b > c:
        ell = numpy.concatenate([ell, numpy.linspace(c, b, nodes)[1:]])
    F, a1, _ = geom.chain(ell)
    # dV = V'(r) r dell
    ln_dv = geom.ln_ball_volume_derivative(ell) - ell
    lnw = F.copy()
    # |w'| = e^F (|eta'| + eta |F'|) with |F'| = a1 e^ell
    ln_dw = F + ell + numpy.log(a1)
    if ramp:
        eta = 2. * -numpy.expm1(ell_rho - ell)
        with numpy.errstate(divide='ignore'):
            ln_eta = numpy.log(eta)
        lnw = F + ln_eta
        ln_dw = F + numpy.logaddexp(LN2 + ell_rho, ln_eta + ell + numpy.log(a1))
    return (_ln_trapz(phi.ln_eval(lnw) + ln_dv, ell),
            _ln_trapz(ln_dw + ln_dv, ell),
            _ln_trapz(lnw + ln_dv, ell))

def extremal_integrals(geom, m, rho, ln_inv_eps, variant='phi', nodes=QUAD_NODES):
    '''(ln LHS, ln RHS, ln mean, ln V(rho)) of w_eps against dmu_rho = dV/V(rho)'''
    phi = make_young(m, variant)
    ell_rho = -numpy.log(rho)
    ell_eps = float(ln_inv_eps)
    if not ell_eps > ell_rho + LN2:
        raise InvalidParameterError(f'eps = exp(-{ell_eps:.6g}) must lie below rho/2')
    ln_vol = float(geom.ln_ball_volume(ell_rho))
    ramp = _segment(geom, phi, ell_rho, ell_rho, ell_rho + LN2, nodes, True)
    inner = _segment(geom, phi, ell_rho, ell_rho + LN2, ell_eps, nodes, False)
    # r < eps: w = 1/f(eps), no gradient
    F_eps = float(geom.chain(ell_eps)[0])
    ln_cap_vol = float(geom.ln_ball_volume(ell_eps))
    ln_mod = logsumexp([ramp[0], inner[0], float(phi.ln_eval(F_eps)) + ln_cap_vol]) - ln_vol
    ln_grad = numpy.logaddexp(ramp[1], inner[1]) - ln_vol
    ln_mean = logsumexp([ramp[2], inner[2], F_eps + ln_cap_vol]) - ln_vol
    return float(phi.ln_inv(ln_mod)), float(ln_grad), float(ln_mean), ln_vol

def failure_probe(m, geom, rho, eps_list=None, ln_inv_eps=None, C_m=C_M, variant='phi',
                  nodes=QUAD_NODES, verbose=None):
    '''Bump inequality ratios on the extremal family for decreasing eps.

    eps is given either directly (eps_list) or as ln(1/eps) (ln_inv_eps).

    Returns:
        DataFrame with ln_inv_eps, ln_lhs, ln_rhs, ln_rhs_raw, ln_ratio, ratio
        (ratio may overflow to inf; ln_ratio does not)
    '''
    log = logger.new_logger(verbose=verbose)
    if (eps_list is None) == (ln_inv_eps is None):
        raise InvalidParameterError('give exactly one of eps_list and ln_inv_eps')
    if ln_inv_eps is None:
        ln_inv_eps = -numpy.log(numpy.asarray(eps_list, dtype=float))
    ln_inv_eps = numpy.sort(numpy.asarray(ln_inv_eps, dtype=float))
    p = divergence_exponent(m, geom.sigma)
    if geom.k == 1 and p <= 1:
        log.info('(sigma+1)(1-1/m) = %.4g <= 1: the extremal family stays bounded', p)
    ln_phi = ln_phi_radius(geom, m, rho, C_m)
    rows = []
    for ell_eps in ln_inv_eps:
        ln_lhs, ln_rhs, ln_mean, ln_vol = extremal_integrals(geom, m, rho, ell_eps, variant, nodes)
        ln_ratio = ln_lhs - ln_phi - ln_rhs
        rows.append({'ln_inv_eps': ell_eps, 'ln_lhs': ln_lhs, 'ln_rhs': ln_rhs,
                     'ln_rhs_raw': ln_rhs + ln_vol, 'ln_mean': ln_mean, 'ln_ratio': ln_ratio,
                     'ratio': float(numpy.exp(ln_ratio)) if ln_ratio < 709 else numpy.inf})
        log.debug('ln 1/eps = %.6g  ln ratio = %.6g', ell_eps, ln_ratio)
    return pandas.DataFrame(rows, columns=['ln_inv_eps', 'ln_lhs', 'ln_rhs', 'ln_rhs_raw',
                                           'ln_mean', 'ln_ratio', 'ratio'])
