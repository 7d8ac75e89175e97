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
Admissible size of the right-hand side

    phi* = 2 C_Omega ||phi0||_{L^Phi*(Omega)} + ||phi1||_inf

with C_Omega the measured global Sobolev constant of the grid.
'''

import numpy
from degenmoser.lib import logger
from degenmoser.lib.exceptions import InvalidParameterError
from degenmoser.orlicz.young import make_young
from degenmoser.orlicz.conjugate import ConjugateYoung
from degenmoser.orlicz.norms import DiscreteMeasure, luxemburg_norm
from degenmoser.metric.gradient import grad_A
from degenmoser.sobolev.probe import global_sobolev_constant


def admissible_norm(field, m, rhs, C_omega=None, variant='phi', verbose=None):
    '''phi* for rhs on field.grid; C_omega is measured when phi0 is not zero'''
    log = logger.new_logger(verbose=verbose)
    grid = field.grid
    rhs.check(grid)
    sup1 = rhs.phi1_sup
    if not numpy.any(rhs.phi0):
        return sup1
    if C_omega is None:
        C_omega = global_sobolev_constant(field, m, variant=variant, verbose=verbose)
    # the norm only sees the distribution of |phi0|
    vals, inv = numpy.unique(numpy.abs(rhs.phi0).ravel(), return_inverse=True)
    mu = DiscreteMeasure(numpy.bincount(inv.ravel()) * grid.cell_area)
    phistar = ConjugateYoung(make_young(m, variant))
    norm0 = luxemburg_norm(vals, mu, phistar)
    log.debug('C_Omega = %.6g  |phi0|_Phi* = %.6g  |phi1|_inf = %.6g', C_omega, norm0, sup1)
    return 2. * C_omega * norm0 + sup1

def dual_pairing(field, rhs, v):
    '''(int phi0 v + int phi1 . grad_A v) / ||grad_A v||_{L^1}'''
    grid = field.grid
    rhs.check(grid)
    v = numpy.asarray(v, dtype=float)
    gx, gy = grad_A(field.geom, grid, v)
    l1 = numpy.hypot(gx, gy).sum() * grid.cell_area
    if not l1 > 0:
        raise InvalidParameterError('dual pairing needs a test function with nonzero gradient')
    pair = (rhs.phi0 * v + rhs.phi1x * gx + rhs.phi1y * gy).sum() * grid.cell_area
    return float(pair / l1)
