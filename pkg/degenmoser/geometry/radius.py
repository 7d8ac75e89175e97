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
Superradius

    phi(r) = (1/|F'(r)|) exp(C_m (|F'(r)|^2/F''(r) + 1)^{m-1})

in ell = ln(1/r):  ln phi = -ell - ln a1 + C_m (a1^2/a2 + 1)^{m-1}.
'''

import dataclasses
import numpy
from degenmoser import __config__
from degenmoser.lib import logger
from degenmoser.lib.exceptions import InvalidParameterError
from degenmoser.geometry.profiles import Isotropic, iterlog_ell

C_M = getattr(__config__, 'geometry_C_m', 1.)


@dataclasses.dataclass(frozen=True)
class SuperradiusSpec:
    m: float
    geometry: object
    C_m: float = C_M

    def __post_init__(self):
        if not self.m > 2:
            raise InvalidParameterError(f'the superradius is defined for m > 2, got m = {self.m}')
        if not self.C_m > 0:
            raise InvalidParameterError(f'C_m must be positive, got {self.C_m}')


def ln_superradius(spec, ell):
    '''ln phi(r) for an array of ell = ln(1/r)'''
    ell = numpy.asarray(ell, dtype=float)
    geom = spec.geometry
    if isinstance(geom, Isotropic):
        return -ell
    _, a1, a2 = geom.chain(ell)
    return -ell - numpy.log(a1) + spec.C_m * (a1**2 / a2 + 1.)**(spec.m - 1)

def superradius(spec, r):
    '''phi(r); underflows to 0 where ln phi < -745'''
    out = numpy.exp(ln_superradius(spec, -numpy.log(numpy.asarray(r, dtype=float))))
    return float(out) if out.ndim == 0 else out


def convexity_ratio(geom, ell):
    '''(|F'|^2/F'') / (ln^{(k)} 1/r)^sigma; within a factor 2 of 1 for sigma <= 1'''
    _, a1, a2 = geom.chain(ell)
    Lk = iterlog_ell(geom.k, ell)[-1]
    return a1**2 / a2 / Lk**geom.sigma


def superradius_growth(spec, ell):
    '''C with phi(r)/r <= exp(C (ln^{(k)} 1/r)^{sigma(m-1)}) on the grid'''
    geom = spec.geometry
    ell = numpy.asarray(ell, dtype=float)
    excess = ln_superradius(spec, ell) + ell
    scale = iterlog_ell(geom.k, ell)[-1]**(geom.sigma * (spec.m - 1))
    return float(numpy.max(excess / scale))


def monotonicity_check(spec, ell, tol=1e-12, verbose=None):
    '''phi increasing in r on a grid of ell.

    Returns:
        (passed, worst) where worst is the largest increase of ln phi with
        ell (phi decreasing in r) relative to |ln phi|.
    '''
    log = logger.new_logger(verbose=verbose)
    ell = numpy.sort(numpy.asarray(ell, dtype=float))
    lnphi = ln_superradius(spec, ell)
    d = numpy.diff(lnphi) / numpy.maximum(1., numpy.abs(lnphi[1:]))
    worst = float(d.max())
    passed = worst <= tol
    if not passed:
        bad = numpy.nonzero(d > tol)[0]
        log.info('phi decreasing in r on ln(1/r) in [%.6g, %.6g]', ell[bad[0]], ell[bad[-1] + 1])
    return passed, worst
