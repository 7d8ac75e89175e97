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
Grid probes of the Orlicz-Sobolev bump inequality

    Phi^{-1}( int_B Phi(|w|) dmu_rho ) <= C phi(rho) int_B |grad_A w| dmu_rho

with dmu_rho = dx/|B(0, rho)| and w supported in B(0, rho).  The probe
reports both sides in log form; the ratio LHS/(phi(rho) RHS) is the
empirical constant for one test function.
'''

from dataclasses import dataclass
import numpy
import pandas
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.exceptions import (InvalidParameterError, PreconditionError,
                                       ResolutionError)
from degenmoser.orlicz.young import make_young
from degenmoser.orlicz.norms import DiscreteMeasure, ln_modular, luxemburg_norm
from degenmoser.geometry.profiles import Isotropic
from degenmoser.geometry.radius import SuperradiusSpec, ln_superradius, C_M
from degenmoser.metric.gradient import grad_norm

MIN_CELLS = getattr(__config__, 'sobolev_min_cells', 64)

STYLES = ('metric_radial_bump', 'tensor_bump', 'tent', 'extremal')


@dataclass
class SobolevProbe:
    geometry: object
    m: float
    C_m: float
    rho: float
    style: str
    ln_lhs: float
    ln_rhs: float
    ln_phi: float
    ln_mean: float

    @property
    def ln_ratio(self):
        if numpy.isneginf(self.ln_lhs):
            return -numpy.inf
        return self.ln_lhs - self.ln_phi - self.ln_rhs

    @property
    def lhs(self):
        return float(numpy.exp(self.ln_lhs))

    @property
    def rhs(self):
        return float(numpy.exp(self.ln_rhs))

    @property
    def ratio(self):
        return float(numpy.exp(self.ln_ratio))

    @property
    def jensen_ok(self):
        '''LHS >= int |w| dmu_rho'''
        return bool(self.ln_lhs >= self.ln_mean - 1e-9 * max(1., abs(self.ln_mean)))

    def to_dict(self):
        return {'geometry': self.geometry.to_dict(), 'm': self.m, 'C_m': self.C_m,
                'rho': self.rho, 'style': self.style, 'ln_lhs': self.ln_lhs,
                'ln_rhs': self.ln_rhs, 'ln_phi': self.ln_phi, 'ln_ratio': self.ln_ratio}


def ln_phi_radius(geom, m, rho, C_m=C_M):
    '''ln phi(rho); phi(rho) = rho without degeneracy'''
    if isinstance(geom, Isotropic):
        return float(numpy.log(rho))
    return float(ln_superradius(SuperradiusSpec(m, geom, C_m), -numpy.log(rho)))

def _check_ball(field, rho):
    if 2 * rho / field.grid.hx < MIN_CELLS:
        raise ResolutionError(f'B(0, {rho:.6g}) spans {2*rho/field.grid.hx:.1f} cells across, '
                              f'fewer than {MIN_CELLS}')
    field.check_inside(rho)

def sobolev_ratio(field, m, rho, w, C_m=C_M, variant='phi', style='custom', verbose=None):
    '''Both sides of the bump inequality for w on the field's grid.

    Args:
        field : :class:`MetricField` centered at the origin
        w : (nx, ny) array vanishing on {dist >= rho}
    '''
    log = logger.new_logger(verbose=verbose)
    _check_ball(field, rho)
    w = numpy.asarray(w, dtype=float)
    if w.shape != field.grid.shape:
        raise InvalidParameterError(f'grid function of shape {w.shape} on a {field.grid.shape} grid')
    outside = ~field.ball_mask(rho)
    if numpy.any(w[outside] != 0):
        raise PreconditionError(f'test function is not supported in B(0, {rho:.6g})')
    phi = make_young(m, variant)
    mu = DiscreteMeasure.restricted(numpy.full(w.size, field.grid.cell_area),
                                    ~outside, normalize=True)
    absw = numpy.abs(w)
    with numpy.errstate(divide='ignore'):
        lnw = numpy.log(absw).ravel()
        ln_lhs = float(phi.ln_inv(ln_modular(lnw, mu, phi)))
        ln_mean = float(numpy.log(mu.integral(absw)))
        # the gradient spills one cell past the support
        g = grad_norm(field.geom, field.grid, w)
        ln_rhs = float(numpy.log(g.sum() * field.grid.cell_area / field.volume(rho)))
    probe = SobolevProbe(field.geom, float(m), float(C_m), float(rho), style,
                         ln_lhs, ln_rhs, ln_phi_radius(field.geom, m, rho, C_m), ln_mean)
    log.debug('sobolev probe %s: ln LHS = %.6g  ln RHS = %.6g  ln ratio = %.6g',
              style, ln_lhs, ln_rhs, probe.ln_ratio)
    return probe


def _bump(s):
    out = numpy.zeros_like(s)
    inside = s < 1
    out[inside] = numpy.exp(1. - 1. / (1. - s[inside]**2))
    return out

def _ramp(dist, rho):
    '''1 on [0, rho/2], linear down to 0 at rho'''
    return numpy.clip(2. * (1. - dist / rho), 0., 1.)

def test_family(field, rho, style, eps=None, amplitude=1.):
    '''Compactly supported test function on the field's grid.

    metric_radial_bump : g(dist/rho), g(s) = exp(1 - 1/(1 - s^2))
    tent : (1 - dist/rho)^+
    tensor_bump : g(x/a) g(y/b) on a box inside the ball
    extremal : ramp(dist) min(1/f(dist), 1/f(eps))
    '''
    dist = field.dist
    if style == 'metric_radial_bump':
        w = _bump(dist / rho)
    elif style == 'tent':
        w = numpy.clip(1. - dist / rho, 0., None)
    elif style == 'tensor_bump':
        grid = field.grid
        inside = field.ball_mask(rho)
        a = rho / 2
        xx, yy = grid.mesh()
        cols = numpy.abs(grid.x) <= a
        heights = numpy.where(inside[cols], numpy.abs(yy[cols]), 0.).max(axis=1)
        b = .9 * heights.min()
        if not b > 0:
            raise ResolutionError(f'B(0, {rho:.6g}) leaves no room for a tensor bump')
        w = _bump(numpy.abs(xx) / a) * _bump(numpy.abs(yy) / b)
    elif style == 'extremal':
        if eps is None:
            raise InvalidParameterError('extremal test functions need eps')
        if eps < 2 * field.grid.hx:
            raise ResolutionError(f'eps = {eps:.3g} is below 2 hx = {2*field.grid.hx:.3g}')
        ln_cap = -float(field.geom.ln_f(eps))
        with numpy.errstate(divide='ignore'):
            lnw = numpy.minimum(-field.geom.ln_f(dist), ln_cap) + numpy.log(_ramp(dist, rho))
        w = numpy.exp(lnw)
    else:
        raise InvalidParameterError(f'Unknown test function style {style}; use one of {STYLES}')
    w[dist >= rho] = 0.
    return amplitude * w

def family_sweep(field, m, rho, eps_list=(), amplitudes=(1.,), C_m=C_M, variant='phi',
                 verbose=None):
    '''sobolev_ratio over the test family; one row per probe'''
    log = logger.new_logger(verbose=verbose)
    t0 = log.init_timer()
    cases = [('metric_radial_bump', None), ('tent', None), ('tensor_bump', None)]
    cases += [('extremal', eps) for eps in eps_list]
    rows = []
    for style, eps in cases:
        base = test_family(field, rho, style, eps)
        for amp in amplitudes:
            p = sobolev_ratio(field, m, rho, amp * base, C_m, variant, style, verbose=verbose)
            rows.append({'style': style, 'eps': numpy.nan if eps is None else eps,
                         'amplitude': amp, 'ln_lhs': p.ln_lhs, 'ln_rhs': p.ln_rhs,
                         'ln_ratio': p.ln_ratio, 'ratio': p.ratio, 'jensen': p.jensen_ok})
    log.timer('sobolev family sweep', *t0)
    return pandas.DataFrame(rows, columns=['style', 'eps', 'amplitude', 'ln_lhs', 'ln_rhs',
                                           'ln_ratio', 'ratio', 'jensen'])


def global_sobolev_constant(field, m, radii=None, variant='phi', verbose=None):
    '''Empirical C_Omega in ||v||_{L^Phi(Omega)} <= C_Omega ||grad_A v||_{L^1(Omega)}.

    The sup runs over metric bumps and tents centered at the origin whose
    supports fit in the grid; Omega carries Lebesgue cell measure.
    '''
    log = logger.new_logger(verbose=verbose)
    phi = make_young(m, variant)
    grid = field.grid
    R = field.boundary_distance
    if radii is None:
        radii = R * numpy.array([.25, .5, .75, .95])
    mu = DiscreteMeasure(numpy.full(grid.size, grid.cell_area))
    best = 0.
    for rho in radii:
        if rho > R:
            raise PreconditionError(f'bump radius {rho:.6g} exceeds the grid (max {R:.6g})')
        for style in ('metric_radial_bump', 'tent'):
            v = test_family(field, rho, style)
            grad_l1 = grad_norm(field.geom, grid, v).sum() * grid.cell_area
            c = luxemburg_norm(v, mu, phi) / grad_l1
            log.debug1('C_Omega probe %s rho = %.4g: %.6g', style, rho, c)
            best = max(best, c)
    log.debug('C_Omega = %.6g', best)
    return best
