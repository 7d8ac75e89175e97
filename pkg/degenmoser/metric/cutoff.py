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
Standard sequences of Lipschitz cutoffs on metric balls

r_1 = r,  r_j - r_{j+1} = c j^-2 (1 - nu) r  with c = 6/pi^2, so r_j -> nu r.
psi_j ramps linearly in dist from 1 at r_{j+1} to 0 at
r_j' = r_j - (r_j - r_{j+1})/4, hence supp psi_j lies in B(0, r_j) and
psi_j = 1 on B(0, r_{j+1}).
'''

from dataclasses import dataclass, field as dc_field
from typing import List
import numpy
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.exceptions import InvalidParameterError, PreconditionError, ResolutionError
from degenmoser.metric.balls import halving_decrement
from degenmoser.metric.gradient import grad_norm

MAX_CUTOFFS = getattr(__config__, 'metric_max_cutoffs', 30)
C_SUM = 6. / numpy.pi**2


def cutoff_radii(r, nu, J):
    '''r_1, ..., r_{J+1}'''
    j = numpy.arange(1, J + 1)
    steps = C_SUM * (1. - nu) * r / j**2
    return r - numpy.concatenate([[0.], numpy.cumsum(steps)])


@dataclass
class CutoffSequence:
    r: float
    nu: float
    radii: numpy.ndarray
    inner: numpy.ndarray
    psis: List[numpy.ndarray] = dc_field(repr=False)
    grad_constant: float = numpy.nan

    def __len__(self):
        return len(self.psis)


def cutoff_sequence(field, r, nu, J, check_nu0=False, verbose=None):
    '''psi_1..psi_J on field.grid and the measured constant
    C = max_j ||grad_A psi_j||_inf (1 - nu) r / j^2'''
    log = logger.new_logger(verbose=verbose)
    if not 0 < nu < 1:
        raise InvalidParameterError(f'nu must lie in (0, 1), got {nu}')
    if int(J) != J or not 1 <= J <= MAX_CUTOFFS:
        raise InvalidParameterError(f'J must be an integer in [1, {MAX_CUTOFFS}], got {J}')
    J = int(J)
    if check_nu0:
        nu0 = 1. - halving_decrement(field, r) / r
        if nu < nu0:
            raise PreconditionError(f'nu = {nu:.6g} is below nu0(r) = {nu0:.6g}')
    radii = cutoff_radii(r, nu, J)
    gaps = -numpy.diff(radii)
    if gaps[-1] < 2 * field.grid.hx:
        raise ResolutionError(f'r_{J} - r_{J+1} = {gaps[-1]:.3g} is below 2 hx = {2*field.grid.hx:.3g}')
    inner = radii[:-1] - gaps / 4
    field.check_inside(r)
    dist = field.dist
    psis = []
    C = 0.
    for j in range(J):
        psi = numpy.clip((inner[j] - dist) / (inner[j] - radii[j+1]), 0., 1.)
        psis.append(psi)
        slope = grad_norm(field.geom, field.grid, psi).max()
        C = max(C, slope * (1 - nu) * r / (j + 1)**2)
    log.debug('cutoffs: J = %d  r = %.6g  nu = %.6g  C = %.4f', J, r, nu, C)
    return CutoffSequence(float(r), float(nu), radii, inner, psis, float(C))
