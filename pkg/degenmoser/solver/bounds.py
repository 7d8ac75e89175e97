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
Discrete checks of local boundedness, the maximum principle and the Moser
chain inequality.  Constants are measured, never asserted: every check
reports the smallest constant that makes the inequality hold next to the
functional form it is compared with.
'''

import numpy
import pandas
from scipy.special import logsumexp
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.exceptions import InvalidParameterError, PreconditionError
from degenmoser.iterates.theta import IterSpec, ln_phi_iter
from degenmoser.metric.balls import halving_decrement
from degenmoser.metric.cutoff import cutoff_sequence
from degenmoser.geometry.radius import C_M
from degenmoser.sobolev.probe import ln_phi_radius
from degenmoser.solver.fdm import certify

NEGATIVE_EPS = getattr(__config__, 'solver_negative_eps', 1e-8)


def standard_K(phi_r, r, nu, beta, C=1.):
    '''K_standard = C (beta + 1) phi(r) / ((1 - nu) r)'''
    if not 0 < nu < 1:
        raise InvalidParameterError(f'nu must lie in (0, 1), got {nu}')
    return C * (beta + 1.) * phi_r / ((1. - nu) * r)

def _radius_term(geom, m, r, nu, C_m):
    '''ln(phi(r) / ((1 - nu) r))'''
    return ln_phi_radius(geom, m, r, C_m) - numpy.log((1. - nu) * r)

def _sup_over_l2(field, lnv, r, nu):
    '''ln ||v||_{L^inf(B(nu r))} - ln ||v||_{L^2(dmu_r)}, dmu_r = dx/|B(r)|'''
    dist = field.dist
    outer = dist < r
    inner = dist < nu * r
    if not inner.any():
        raise PreconditionError(f'B(0, {nu*r:.4g}) holds no cells')
    ln_sup = lnv[inner].max()
    ln_l2 = .5 * (logsumexp(2 * lnv[outer]) - numpy.log(outer.sum()))
    return float(ln_sup), float(ln_l2)

def _check_nu(field, r, nu):
    field.check_inside(r)
    nu0 = 1. - halving_decrement(field, r) / r
    if not nu0 <= nu < 1:
        raise PreconditionError(f'nu = {nu:.6g} outside [nu0(r), 1) = [{nu0:.6g}, 1)')
    return nu0

def local_bound_check(report, field, r, nu, beta=1., kind='sub', phistar=0., m=3.,
                      C_m=C_M, verbose=None):
    '''E = ||t^beta||_{L^inf(B(nu r))} / ||t^beta||_{L^2(dmu_r)}, t = u+ + phi*
    (u- + phi* for supersolutions), next to the exponent

        X = (beta - 1)^m + ln(phi(r) / ((1 - nu) r))^m

    of the comparator exp(C X).  implied_C = max(ln E, 0) / X.
    '''
    log = logger.new_logger(verbose=verbose)
    if beta < 1:
        raise InvalidParameterError(f'local boundedness needs beta >= 1, got {beta}')
    if kind not in ('sub', 'super'):
        raise InvalidParameterError(f'Unknown solution kind {kind}')
    nu0 = _check_nu(field, r, nu)
    if not certify(report, kind):
        raise PreconditionError(f'u is not a discrete {kind}solution')
    u = report.u if kind == 'sub' else -report.u
    t = numpy.maximum(u, 0.) + phistar
    with numpy.errstate(divide='ignore'):
        lnv = beta * numpy.log(t)
    ln_sup, ln_l2 = _sup_over_l2(field, lnv, r, nu)
    if numpy.isneginf(ln_l2):
        ln_E = 0.
    else:
        ln_E = ln_sup - ln_l2
    L = _radius_term(field.geom, m, r, nu, C_m)
    X = (beta - 1.)**m + L**m
    out = {'kind': kind, 'r': r, 'nu': nu, 'nu0': nu0, 'beta': beta, 'phistar': phistar,
           'ln_sup': ln_sup, 'ln_l2': ln_l2, 'E': float(numpy.exp(ln_E)), 'ln_E': ln_E,
           'comparator_exponent': float(X), 'implied_C': float(max(ln_E, 0.) / X)}
    log.debug('local bound %s beta = %g: ln E = %.6g  X = %.6g', kind, beta, ln_E, X)
    return out

def negative_power_check(report, field, r, nu, beta, phistar=0., eps=NEGATIVE_EPS, m=3.,
                         C_m=C_M, verbose=None):
    '''Same check for (u + phi*)^beta, beta < 0, on a nonnegative
    supersolution; phi* = 0 is replaced by eps.  The comparator exponent is
    (|beta| + 1)^m + ln(phi(r) / ((1 - nu) r))^m.
    '''
    log = logger.new_logger(verbose=verbose)
    if not beta < 0:
        raise InvalidParameterError(f'negative powers need beta < 0, got {beta}')
    u = report.u
    if u.min() < 0:
        raise PreconditionError('negative powers need u >= 0 on the grid')
    nu0 = _check_nu(field, r, nu)
    if not certify(report, 'super'):
        raise PreconditionError('u is not a discrete supersolution')
    shift = phistar if phistar > 0 else eps
    if not shift > 0:
        raise InvalidParameterError('phi* = 0 needs a positive regularization eps')
    lnv = beta * numpy.log(u + shift)
    ln_sup, ln_l2 = _sup_over_l2(field, lnv, r, nu)
    ln_E = ln_sup - ln_l2
    L = _radius_term(field.geom, m, r, nu, C_m)
    X = (abs(beta) + 1.)**m + L**m
    out = {'kind': 'super', 'r': r, 'nu': nu, 'nu0': nu0, 'beta': beta, 'shift': shift,
           'ln_sup': ln_sup, 'ln_l2': ln_l2, 'E': float(numpy.exp(ln_E)), 'ln_E': ln_E,
           'comparator_exponent': float(X), 'implied_C': float(max(ln_E, 0.) / X)}
    log.debug('negative power beta = %g: ln E = %.6g  X = %.6g', beta, ln_E, X)
    return out

def max_principle_check(report, phistar=0., tol=1e-8):
    '''max over the interior against max over the Dirichlet ring.

    C_emp is the smallest C with max u <= max_ring u + C phi*; with phi* = 0
    the inequality must hold outright.  The min side is the same check for -u.
    '''
    solver = report.solver
    u = report.u
    inner = solver.interior
    scale = max(1., float(numpy.abs(u).max()))
    excess = float(u[inner].max() - u[~inner].max())
    deficit = float(u[~inner].min() - u[inner].min())
    out = {'max_interior': float(u[inner].max()), 'max_boundary': float(u[~inner].max()),
           'min_interior': float(u[inner].min()), 'min_boundary': float(u[~inner].min()),
           'excess': excess, 'deficit': deficit, 'phistar': phistar}
    if phistar > 0:
        out['C_emp'] = max(excess, 0.) / phistar
        out['C_emp_min'] = max(deficit, 0.) / phistar
        out['holds'] = True
    else:
        out['C_emp'] = out['C_emp_min'] = 0.
        out['holds'] = bool(excess <= tol * scale and deficit <= tol * scale)
    return out

def moser_chain_check(report, field, m, beta, J, r, nu, phistar=0., kind='sub',
                      variant='phi', verbose=None):
    '''Smallest K with s_{j+1} <= Phi(K j^(m+1) s_j), j = 1..J-1, where

        s_j = int_{B(r_j)} Phi^{(j-1)}(v^(2 beta)) dmu_j,   v = a (u+ + phi*),

    mu_j is cell measure normalized on B(r_j), r_j the cutoff radii of
    (r, nu), and a makes int v^(2 beta) dmu_1 = exp(2^m).

    Returns:
        (K, DataFrame with j, r_j, ln_s, ln_K)
    '''
    log = logger.new_logger(verbose=verbose)
    if beta < 1:
        raise InvalidParameterError(f'the chain runs on beta >= 1, got {beta}')
    if kind not in ('sub', 'super'):
        raise InvalidParameterError(f'Unknown solution kind {kind}')
    if not certify(report, kind):
        raise PreconditionError(f'u is not a discrete {kind}solution')
    seq = cutoff_sequence(field, r, nu, J, verbose=verbose)
    u = report.u if kind == 'sub' else -report.u
    t = numpy.maximum(u, 0.) + phistar
    dist = field.dist
    with numpy.errstate(divide='ignore'):
        lnt2 = 2 * beta * numpy.log(t)
    first = dist < seq.radii[0]
    ln_mean = logsumexp(lnt2[first]) - numpy.log(first.sum())
    if numpy.isneginf(ln_mean):
        raise PreconditionError(f'u+ + phi* vanishes on B(0, {r:.4g})')
    lnv2 = lnt2 + (2.**m - ln_mean)
    spec = IterSpec(m, j=0, variant=variant)
    phi = spec.phi
    ln_s = numpy.empty(J)
    for j in range(J):
        ball = dist < seq.radii[j]
        vals = ln_phi_iter(spec, lnv2[ball], j)
        ln_s[j] = logsumexp(vals) - numpy.log(ball.sum())
    jj = numpy.arange(1, J + 1)
    ln_K = numpy.full(J, numpy.nan)
    if J > 1:
        ln_K[:-1] = phi.ln_inv(ln_s[1:]) - (m + 1) * numpy.log(jj[:-1]) - ln_s[:-1]
        K = float(numpy.exp(numpy.nanmax(ln_K)))
    else:
        K = 0.
    log.debug('Moser chain J = %d beta = %g: K = %.6g', J, beta, K)
    df = pandas.DataFrame({'j': jj, 'r_j': seq.radii[:J], 'ln_s': ln_s, 'ln_K': ln_K})
    return K, df
