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
Reverse Sobolev (Caccioppoli) constants of discrete sub- and supersolutions
'''

import numpy
from degenmoser.lib import logger
from degenmoser.lib.exceptions import InvalidParameterError, PreconditionError
from degenmoser.iterates.theta import IterSpec
from degenmoser.iterates.hfunc import ln_h
from degenmoser.metric.gradient import grad_norm
from degenmoser.solver.fdm import certify


def caccioppoli_envelope(coeff):
    '''4 (Lam/lam)^2'''
    return 4. * coeff.contrast**2

def _argument(u, phistar, kind, beta):
    if kind == 'sub':
        return numpy.maximum(u, 0.) + phistar
    if beta < 0:
        # negative powers act on the positive supersolution itself
        t = u + phistar
        if t.min() <= 0:
            raise PreconditionError('negative powers need u + phi* > 0 on the grid')
        return t
    return numpy.maximum(-u, 0.) + phistar

def caccioppoli_constant(report, psi, spec=None, kind='sub', phistar=0., verbose=None):
    '''Smallest C with

        int psi^2 |grad_A h(t)|^2 <= C int h(t)^2 (|grad_A psi|^2 + psi^2),

    t = u+ + phi* for subsolutions, u- + phi* (or u + phi* when beta < 0)
    for supersolutions.  spec = None takes h(t) = t.
    '''
    log = logger.new_logger(verbose=verbose)
    if kind not in ('sub', 'super'):
        raise InvalidParameterError(f'Unknown solution kind {kind}')
    if not certify(report, kind):
        raise PreconditionError(f'u is not a discrete {kind}solution')
    solver = report.solver
    geom, grid = solver.geom, solver.grid
    psi = numpy.asarray(psi, dtype=float)
    if psi.shape != grid.shape:
        raise InvalidParameterError(f'cutoff of shape {psi.shape} on a {grid.shape} grid')
    if numpy.any(psi[grid.boundary_mask(2)] != 0):
        raise PreconditionError('cutoff is not compactly supported in the interior')
    if spec is None:
        spec = IterSpec(m=2., j=0, beta=1.)
    t = _argument(report.u, phistar, kind, spec.beta)
    with numpy.errstate(divide='ignore'):
        v = numpy.exp(ln_h(spec, numpy.log(t)))
    lhs = (psi**2 * grad_norm(geom, grid, v)**2).sum()
    rhs = (v**2 * (grad_norm(geom, grid, psi)**2 + psi**2)).sum()
    if not rhs > 0:
        return 0.
    C = float(lhs / rhs)
    log.debug('Caccioppoli constant %s j = %d beta = %g: %.6g', kind, spec.j, spec.beta, C)
    return C

def caccioppoli_sweep(report, psis, spec=None, kind='sub', phistar=0., verbose=None):
    '''max of caccioppoli_constant over a family of cutoffs'''
    return max(caccioppoli_constant(report, psi, spec, kind, phistar, verbose) for psi in psis)
